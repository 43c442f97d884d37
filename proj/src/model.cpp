#include "socsim/model.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>

namespace socsim {

const char* to_string(EntityKind kind) {
    switch (kind) {
        case EntityKind::Actor: return "actor";
        case EntityKind::Concept: return "concept";
        case EntityKind::Instance: return "instance";
    }
    return "?";
}

const char* to_string(EventKind kind) {
    switch (kind) {
        case EventKind::PublishConcept: return "publish_concept";
        case EventKind::PublishInstance: return "publish_instance";
        case EventKind::SemanticAnnotation: return "semantic_annotation";
    }
    return "?";
}

void AnnotationGraph::add_node(EntityKind kind, std::uint32_t id) {
    auto& idx = index_[static_cast<int>(kind)];
    if (id >= idx.size()) idx.resize(id + 1, kNoEntity);
    assert(idx[id] == kNoEntity);
    idx[id] = static_cast<std::int64_t>(nodes_.size());
    nodes_.push_back({kind, id});
    out_.emplace_back();
    in_weight_.push_back(0.0);
    out_weight_.push_back(0.0);
    ++version_;
}

std::int64_t AnnotationGraph::index_of(EntityKind kind, std::uint32_t id) const {
    const auto& idx = index_[static_cast<int>(kind)];
    if (id >= idx.size()) return kNoEntity;
    return idx[id];
}

void AnnotationGraph::add_edge_weight(std::size_t from, std::size_t to, double delta) {
    auto [it, inserted] = out_[from].try_emplace(to, 0.0);
    if (inserted) ++edge_count_;
    it->second += delta;
    in_weight_[to] += delta;
    out_weight_[from] += delta;
    ++version_;
}

bool AnnotationGraph::same_as(const AnnotationGraph& other) const {
    if (nodes_.size() != other.nodes_.size()) return false;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].kind != other.nodes_[i].kind || nodes_[i].id != other.nodes_[i].id)
            return false;
        if (out_[i].size() != other.out_[i].size()) return false;
        for (const auto& [to, w] : out_[i]) {
            auto it = other.out_[i].find(to);
            if (it == other.out_[i].end() || it->second != w) return false;
        }
    }
    return true;
}

CsrGraph CsrGraph::from(const AnnotationGraph& g) {
    CsrGraph csr;
    csr.n = g.node_count();
    csr.in_offsets.assign(csr.n + 1, 0);
    csr.out_offsets.assign(csr.n + 1, 0);
    csr.out_weight_sum.assign(csr.n, 0.0);
    for (std::size_t u = 0; u < csr.n; ++u) {
        csr.out_offsets[u + 1] = g.out_edges(u).size();
        csr.out_weight_sum[u] = g.out_weight(u);
        for (const auto& [v, w] : g.out_edges(u)) ++csr.in_offsets[v + 1];
    }
    for (std::size_t i = 0; i < csr.n; ++i) {
        csr.in_offsets[i + 1] += csr.in_offsets[i];
        csr.out_offsets[i + 1] += csr.out_offsets[i];
    }
    csr.in_src.resize(g.edge_count());
    csr.in_w.resize(g.edge_count());
    csr.out_dst.resize(g.edge_count());
    csr.out_w.resize(g.edge_count());
    std::vector<std::size_t> in_fill(csr.in_offsets.begin(), csr.in_offsets.end() - 1);
    for (std::size_t u = 0; u < csr.n; ++u) {
        // Sort out-edges by target so the CSR layout (and thus floating-point
        // summation order) is independent of hash-map iteration order.
        std::vector<std::pair<std::size_t, double>> edges(g.out_edges(u).begin(),
                                                          g.out_edges(u).end());
        std::sort(edges.begin(), edges.end());
        std::size_t pos = csr.out_offsets[u];
        for (const auto& [v, w] : edges) {
            csr.out_dst[pos] = static_cast<std::uint32_t>(v);
            csr.out_w[pos] = w;
            ++pos;
            csr.in_src[in_fill[v]] = static_cast<std::uint32_t>(u);
            csr.in_w[in_fill[v]] = w;
            ++in_fill[v];
        }
    }
    return csr;
}

Store::Store(std::vector<Actor> actors, std::vector<Concept> concepts,
             std::vector<Instance> instances)
    : actors_(std::move(actors)),
      concepts_(std::move(concepts)),
      instances_(std::move(instances)) {
    own_concepts_.resize(actors_.size());
    own_instances_.resize(actors_.size());
    triples_per_concept_.assign(concepts_.size(), 0);
    instances_per_concept_.assign(concepts_.size(), 0);
    for (const Actor& a : actors_) graph_.add_node(EntityKind::Actor, a.id);
}

AddResult Store::add_publication(EntityKind kind, std::uint32_t id, ActorId author) {
    if (author >= actors_.size()) return AddResult::Rejected;
    if (kind == EntityKind::Concept) {
        if (id >= concepts_.size() || concepts_[id].published) return AddResult::Rejected;
        concepts_[id].published = true;
        concepts_[id].author = author;
        actors_[author].published_concepts += 1;
        published_concepts_.push_back(id);
        own_concepts_[author].push_back(id);
        graph_.add_node(EntityKind::Concept, id);
    } else if (kind == EntityKind::Instance) {
        if (id >= instances_.size() || instances_[id].published) return AddResult::Rejected;
        instances_[id].published = true;
        instances_[id].author = author;
        actors_[author].published_instances += 1;
        published_instances_.push_back(id);
        own_instances_[author].push_back(id);
        graph_.add_node(EntityKind::Instance, id);
    } else {
        return AddResult::Rejected;  // actors are a fixed population
    }
    const auto from = graph_.index_of(EntityKind::Actor, author);
    const auto to = graph_.index_of(kind, id);
    graph_.add_edge_weight(static_cast<std::size_t>(from), static_cast<std::size_t>(to), 1.0);
    ++version_;
    return AddResult::Ok;
}

AddResult Store::add_annotation(ActorId a, ConceptId c, InstanceId i) {
    if (a >= actors_.size() || c >= concepts_.size() || i >= instances_.size())
        return AddResult::Rejected;
    if (!concepts_[c].published || !instances_[i].published) return AddResult::Rejected;
    if (!triples_.insert(triple_key(a, c, i)).second) return AddResult::Duplicate;

    actors_[a].annotations_made += 1;
    if (instances_[i].annotation_count == 0) ++annotated_instances_;
    instances_[i].annotation_count += 1;
    triples_per_concept_[c] += 1;
    ++annotation_total_;

    const auto na = static_cast<std::size_t>(graph_.index_of(EntityKind::Actor, a));
    const auto nc = static_cast<std::size_t>(graph_.index_of(EntityKind::Concept, c));
    const auto ni = static_cast<std::size_t>(graph_.index_of(EntityKind::Instance, i));
    if (actor_concept_.insert(pair_key(a, c)).second) graph_.add_edge_weight(na, nc, 1.0);
    if (actor_instance_.insert(pair_key(a, i)).second) graph_.add_edge_weight(na, ni, 1.0);
    if (instance_concept_.insert(pair_key(i, c)).second) instances_per_concept_[c] += 1;
    // A new triple always comes from a new distinct annotator of (i, c).
    graph_.add_edge_weight(ni, nc, 1.0);
    ++version_;
    return AddResult::Ok;
}

AnnotationGraph Store::rebuild_graph() const {
    AnnotationGraph g;
    for (const Actor& a : actors_) g.add_node(EntityKind::Actor, a.id);
    // Replaying nodes in graph insertion order keeps indices comparable.
    for (std::size_t idx = actors_.size(); idx < graph_.node_count(); ++idx) {
        const auto& n = graph_.node(idx);
        g.add_node(n.kind, n.id);
        std::int64_t author = n.kind == EntityKind::Concept ? concepts_[n.id].author
                                                            : instances_[n.id].author;
        g.add_edge_weight(
            static_cast<std::size_t>(g.index_of(EntityKind::Actor,
                                                static_cast<std::uint32_t>(author))),
            idx, 1.0);
    }
    std::unordered_set<std::uint64_t> ac, ai;
    for (std::uint64_t key : triples_) {
        const auto a = static_cast<std::uint32_t>(key >> 42);
        const auto c = static_cast<std::uint32_t>((key >> 21) & 0x1fffff);
        const auto i = static_cast<std::uint32_t>(key & 0x1fffff);
        const auto na = static_cast<std::size_t>(g.index_of(EntityKind::Actor, a));
        const auto nc = static_cast<std::size_t>(g.index_of(EntityKind::Concept, c));
        const auto ni = static_cast<std::size_t>(g.index_of(EntityKind::Instance, i));
        if (ac.insert(pair_key(a, c)).second) g.add_edge_weight(na, nc, 1.0);
        if (ai.insert(pair_key(a, i)).second) g.add_edge_weight(na, ni, 1.0);
        g.add_edge_weight(ni, nc, 1.0);
    }
    return g;
}

std::string format_event(const EventRecord& ev) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%llu,%s,%lld,%lld,%lld,%d",
                  static_cast<unsigned long long>(ev.iter), to_string(ev.kind),
                  static_cast<long long>(ev.actor), static_cast<long long>(ev.concept_id),
                  static_cast<long long>(ev.instance), ev.success ? 1 : 0);
    return buf;
}

}  // namespace socsim
