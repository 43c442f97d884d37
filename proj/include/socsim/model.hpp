#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace socsim {

using ActorId = std::uint32_t;
using ConceptId = std::uint32_t;
using InstanceId = std::uint32_t;

inline constexpr std::int64_t kNoEntity = -1;

enum class EntityKind : std::uint8_t { Actor = 0, Concept = 1, Instance = 2 };
inline constexpr int kNumKinds = 3;

const char* to_string(EntityKind kind);

struct Actor {
    ActorId id = 0;
    double expertise = 0.0;  // AE, in [0,1]
    std::uint32_t published_concepts = 0;
    std::uint32_t published_instances = 0;
    std::uint32_t annotations_made = 0;
};

struct Concept {
    ConceptId id = 0;
    double quality = 0.0;  // CQ, in [0,1]
    double size = 0.0;     // CS, in [0,1]
    std::int64_t author = kNoEntity;
    bool published = false;
};

struct Instance {
    InstanceId id = 0;
    double quality = 0.0;  // IQ, in [0,1]
    std::int64_t author = kNoEntity;
    bool published = false;
    std::uint32_t annotation_count = 0;
};

struct Annotation {
    ActorId actor;
    ConceptId concept_id;
    InstanceId instance;
};

// Weighted directed tripartite graph derived from publications and
// annotations. Node indices are dense and append-only: all actors up front,
// concepts and instances as they are published. Edge weights:
//   actor -> concept/instance : 1 per publication, +1 once the actor first
//                               uses/annotates the entity
//   instance -> concept       : number of distinct actors annotating the
//                               instance with the concept
class AnnotationGraph {
public:
    struct Node {
        EntityKind kind;
        std::uint32_t id;
    };

    void add_node(EntityKind kind, std::uint32_t id);
    void add_edge_weight(std::size_t from, std::size_t to, double delta);

    std::size_t node_count() const { return nodes_.size(); }
    const Node& node(std::size_t idx) const { return nodes_[idx]; }
    const std::vector<Node>& nodes() const { return nodes_; }

    // Dense index of an entity, or kNoEntity if not in the graph.
    std::int64_t index_of(EntityKind kind, std::uint32_t id) const;

    const std::unordered_map<std::size_t, double>& out_edges(std::size_t idx) const {
        return out_[idx];
    }
    double in_weight(std::size_t idx) const { return in_weight_[idx]; }
    double out_weight(std::size_t idx) const { return out_weight_[idx]; }
    std::size_t edge_count() const { return edge_count_; }

    bool same_as(const AnnotationGraph& other) const;

    // Bumped on every structural change; lets rankers detect no-op updates
    // and derive per-state sub-seeds.
    std::uint64_t version() const { return version_; }

private:
    std::uint64_t version_ = 0;
    std::vector<Node> nodes_;
    std::vector<std::int64_t> index_[kNumKinds];  // id -> node index
    std::vector<std::unordered_map<std::size_t, double>> out_;
    std::vector<double> in_weight_;
    std::vector<double> out_weight_;
    std::size_t edge_count_ = 0;
};

// Compressed adjacency snapshot consumed by the ranking kernels.
struct CsrGraph {
    std::size_t n = 0;
    std::vector<std::size_t> in_offsets;   // size n+1
    std::vector<std::uint32_t> in_src;
    std::vector<double> in_w;
    std::vector<std::size_t> out_offsets;  // size n+1
    std::vector<std::uint32_t> out_dst;
    std::vector<double> out_w;
    std::vector<double> out_weight_sum;    // per node

    static CsrGraph from(const AnnotationGraph& g);
};

enum class EventKind : std::uint8_t { PublishConcept = 0, PublishInstance = 1, SemanticAnnotation = 2 };

const char* to_string(EventKind kind);

struct EventRecord {
    std::uint64_t iter;
    EventKind kind;
    std::int64_t actor;
    std::int64_t concept_id;   // kNoEntity when not applicable
    std::int64_t instance;  // kNoEntity when not applicable
    bool success;
};

enum class AddResult { Ok, Duplicate, Rejected };

// Single-writer store of entities, the annotation set and the incrementally
// maintained graph view. All candidate entities live here from construction;
// publication flips their flag.
class Store {
public:
    Store(std::vector<Actor> actors, std::vector<Concept> concepts,
          std::vector<Instance> instances);

    const Actor& actor(ActorId id) const { return actors_[id]; }
    const Concept& concept_at(ConceptId id) const { return concepts_[id]; }
    const Instance& instance(InstanceId id) const { return instances_[id]; }

    std::size_t actor_count() const { return actors_.size(); }
    std::size_t concept_count() const { return concepts_.size(); }
    std::size_t instance_count() const { return instances_.size(); }

    AddResult add_publication(EntityKind kind, std::uint32_t id, ActorId author);
    AddResult add_annotation(ActorId a, ConceptId c, InstanceId i);

    const std::vector<ConceptId>& published_concepts() const { return published_concepts_; }
    const std::vector<InstanceId>& published_instances() const { return published_instances_; }
    const std::vector<ConceptId>& concepts_of(ActorId a) const { return own_concepts_[a]; }
    const std::vector<InstanceId>& instances_of(ActorId a) const { return own_instances_[a]; }

    std::size_t annotation_total() const { return annotation_total_; }
    // |A_c|: stored triples using concept c.
    std::uint32_t annotations_with_concept(ConceptId c) const { return triples_per_concept_[c]; }
    // Distinct published instances annotated with concept c (TCP driver).
    std::uint32_t instances_annotated_by(ConceptId c) const { return instances_per_concept_[c]; }
    // Published instances with no annotation at all.
    std::size_t unannotated_instance_count() const {
        return published_instances_.size() - annotated_instances_;
    }

    const AnnotationGraph& graph() const { return graph_; }
    std::uint64_t version() const { return version_; }  // successful mutations so far

    // From-scratch derivation of the graph from current publications plus the
    // annotation set; the incremental graph must always match it.
    AnnotationGraph rebuild_graph() const;

private:
    static std::uint64_t triple_key(ActorId a, ConceptId c, InstanceId i) {
        return (static_cast<std::uint64_t>(a) << 42) |
               (static_cast<std::uint64_t>(c) << 21) | i;
    }
    static std::uint64_t pair_key(std::uint32_t x, std::uint32_t y) {
        return (static_cast<std::uint64_t>(x) << 32) | y;
    }

    std::vector<Actor> actors_;
    std::vector<Concept> concepts_;
    std::vector<Instance> instances_;

    std::vector<ConceptId> published_concepts_;
    std::vector<InstanceId> published_instances_;
    std::vector<std::vector<ConceptId>> own_concepts_;
    std::vector<std::vector<InstanceId>> own_instances_;

    std::unordered_set<std::uint64_t> triples_;
    std::unordered_set<std::uint64_t> actor_concept_;    // (a,c) pairs seen
    std::unordered_set<std::uint64_t> actor_instance_;   // (a,i) pairs seen
    std::unordered_set<std::uint64_t> instance_concept_;  // (i,c) pairs seen
    std::vector<std::uint32_t> triples_per_concept_;
    std::vector<std::uint32_t> instances_per_concept_;
    std::size_t annotation_total_ = 0;
    std::size_t annotated_instances_ = 0;

    AnnotationGraph graph_;
    std::uint64_t version_ = 0;
};

// Event-log line, `iter,event_kind,actor,concept,instance,success`.
std::string format_event(const EventRecord& ev);

}  // namespace socsim
