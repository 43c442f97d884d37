#include "socsim/ranking.hpp"

#include <algorithm>
#include <cmath>

namespace socsim {

const char* to_string(Algorithm algo) {
    switch (algo) {
        case Algorithm::Random: return "random";
        case Algorithm::Indegree: return "indegree";
        case Algorithm::Hits: return "hits";
        case Algorithm::PageRank: return "pagerank";
    }
    return "?";
}

bool parse_algorithm(const std::string& name, Algorithm& out) {
    if (name == "random") out = Algorithm::Random;
    else if (name == "indegree") out = Algorithm::Indegree;
    else if (name == "hits") out = Algorithm::Hits;
    else if (name == "pagerank") out = Algorithm::PageRank;
    else return false;
    return true;
}

void RankingSnapshot::build_rank_lut() {
    for (int k = 0; k < kNumKinds; ++k) {
        std::uint32_t max_id = 0;
        for (const auto& [id, score] : ranked[k]) max_id = std::max(max_id, id);
        rank_lut_[k].assign(ranked[k].empty() ? 0 : max_id + 1, -1);
        for (std::size_t pos = 0; pos < ranked[k].size(); ++pos) {
            rank_lut_[k][ranked[k][pos].first] = static_cast<int>(pos + 1);
        }
    }
}

// --- PageRank ----------------------------------------------------------------

namespace {

std::vector<double> pagerank_start(std::size_t n, const std::vector<double>* warm) {
    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    if (warm && !warm->empty()) {
        for (std::size_t i = 0; i < std::min(n, warm->size()); ++i) x[i] = (*warm)[i];
        double sum = 0.0;
        for (double v : x) sum += v;
        if (sum > 0.0) {
            for (double& v : x) v /= sum;
        } else {
            x.assign(n, 1.0 / static_cast<double>(n));
        }
    }
    return x;
}

void pagerank_finalize(std::vector<double>& x) {
    double sum = 0.0;
    for (double v : x) sum += v;
    if (sum > 0.0) {
        for (double& v : x) v /= sum;
    }
}

}  // namespace

std::vector<double> pagerank_serial(const CsrGraph& g, const SolverParams& params,
                                    const std::vector<double>* warm_start, bool* converged) {
    const std::size_t n = g.n;
    if (converged) *converged = true;
    if (n == 0) return {};
    const double d = params.damping;
    std::vector<double> x = pagerank_start(n, warm_start);
    std::vector<double> next(n);
    bool ok = false;
    for (int it = 0; it < params.max_iterations; ++it) {
        double dangling = 0.0;
        for (std::size_t u = 0; u < n; ++u) {
            if (g.out_weight_sum[u] == 0.0) dangling += x[u];
        }
        const double base = (1.0 - d) / static_cast<double>(n) +
                            d * dangling / static_cast<double>(n);
        for (std::size_t v = 0; v < n; ++v) {
            double acc = 0.0;
            for (std::size_t e = g.in_offsets[v]; e < g.in_offsets[v + 1]; ++e) {
                const std::uint32_t u = g.in_src[e];
                acc += g.in_w[e] / g.out_weight_sum[u] * x[u];
            }
            next[v] = base + d * acc;
        }
        double diff = 0.0;
        for (std::size_t v = 0; v < n; ++v) diff += std::abs(next[v] - x[v]);
        x.swap(next);
        if (diff < params.tolerance) {
            ok = true;
            break;
        }
    }
    if (converged) *converged = ok;
    pagerank_finalize(x);
    return x;
}

std::vector<double> pagerank_parallel(const CsrGraph& g, const SolverParams& params,
                                      const std::vector<double>* warm_start, bool* converged) {
    const std::size_t n = g.n;
    if (converged) *converged = true;
    if (n == 0) return {};
    const double d = params.damping;
    std::vector<double> x = pagerank_start(n, warm_start);
    std::vector<double> next(n);
    bool ok = false;
    for (int it = 0; it < params.max_iterations; ++it) {
        // Dangling mass and the convergence norm are accumulated serially so
        // the result is bit-identical for any thread count; only the per-node
        // updates (independent of each other) run in parallel.
        double dangling = 0.0;
        for (std::size_t u = 0; u < n; ++u) {
            if (g.out_weight_sum[u] == 0.0) dangling += x[u];
        }
        const double base = (1.0 - d) / static_cast<double>(n) +
                            d * dangling / static_cast<double>(n);
#pragma omp parallel for schedule(static)
        for (std::size_t v = 0; v < n; ++v) {
            double acc = 0.0;
            for (std::size_t e = g.in_offsets[v]; e < g.in_offsets[v + 1]; ++e) {
                const std::uint32_t u = g.in_src[e];
                acc += g.in_w[e] / g.out_weight_sum[u] * x[u];
            }
            next[v] = base + d * acc;
        }
        double diff = 0.0;
        for (std::size_t v = 0; v < n; ++v) diff += std::abs(next[v] - x[v]);
        x.swap(next);
        if (diff < params.tolerance) {
            ok = true;
            break;
        }
    }
    if (converged) *converged = ok;
    pagerank_finalize(x);
    return x;
}

// --- HITS ---------------------------------------------------------------------

namespace {

void l2_normalize(std::vector<double>& v) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 0.0) {
        for (double& x : v) x /= norm;
    }
}

double l2_norm(const std::vector<double>& v) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    return std::sqrt(norm);
}

HitsScores hits_start(std::size_t n, const HitsScores* warm) {
    HitsScores s;
    s.authority.assign(n, 1.0);
    s.hub.assign(n, 1.0);
    if (warm && !warm->authority.empty()) {
        for (std::size_t i = 0; i < std::min(n, warm->authority.size()); ++i) {
            s.authority[i] = warm->authority[i];
            s.hub[i] = warm->hub[i];
        }
        // A zero warm start (e.g. from an edgeless graph) is a fixed point of
        // the iteration; fall back to the cold start instead.
        if (l2_norm(s.authority) == 0.0 || l2_norm(s.hub) == 0.0) {
            s.authority.assign(n, 1.0);
            s.hub.assign(n, 1.0);
        }
    }
    l2_normalize(s.authority);
    l2_normalize(s.hub);
    return s;
}

}  // namespace

HitsScores hits_serial(const CsrGraph& g, const SolverParams& params,
                       const HitsScores* warm_start) {
    const std::size_t n = g.n;
    HitsScores s;
    if (n == 0) return s;
    if (g.in_src.empty()) {
        // No edges: authority and hub are identically zero.
        s.authority.assign(n, 0.0);
        s.hub.assign(n, 0.0);
        return s;
    }
    s = hits_start(n, warm_start);
    std::vector<double> auth(n), hub(n);
    s.converged = false;
    for (int it = 0; it < params.max_iterations; ++it) {
        for (std::size_t v = 0; v < n; ++v) {
            double acc = 0.0;
            for (std::size_t e = g.in_offsets[v]; e < g.in_offsets[v + 1]; ++e) {
                acc += g.in_w[e] * s.hub[g.in_src[e]];
            }
            auth[v] = acc;
        }
        l2_normalize(auth);
        for (std::size_t u = 0; u < n; ++u) {
            double acc = 0.0;
            for (std::size_t e = g.out_offsets[u]; e < g.out_offsets[u + 1]; ++e) {
                acc += g.out_w[e] * auth[g.out_dst[e]];
            }
            hub[u] = acc;
        }
        l2_normalize(hub);
        double diff = 0.0;
        for (std::size_t v = 0; v < n; ++v) diff += std::abs(auth[v] - s.authority[v]);
        s.authority = auth;
        s.hub = hub;
        if (diff < params.tolerance) {
            s.converged = true;
            break;
        }
    }
    return s;
}

HitsScores hits_parallel(const CsrGraph& g, const SolverParams& params,
                         const HitsScores* warm_start) {
    const std::size_t n = g.n;
    HitsScores s;
    if (n == 0) return s;
    if (g.in_src.empty()) {
        s.authority.assign(n, 0.0);
        s.hub.assign(n, 0.0);
        return s;
    }
    s = hits_start(n, warm_start);
    std::vector<double> auth(n), hub(n);
    s.converged = false;
    for (int it = 0; it < params.max_iterations; ++it) {
#pragma omp parallel for schedule(static)
        for (std::size_t v = 0; v < n; ++v) {
            double acc = 0.0;
            for (std::size_t e = g.in_offsets[v]; e < g.in_offsets[v + 1]; ++e) {
                acc += g.in_w[e] * s.hub[g.in_src[e]];
            }
            auth[v] = acc;
        }
        l2_normalize(auth);
#pragma omp parallel for schedule(static)
        for (std::size_t u = 0; u < n; ++u) {
            double acc = 0.0;
            for (std::size_t e = g.out_offsets[u]; e < g.out_offsets[u + 1]; ++e) {
                acc += g.out_w[e] * auth[g.out_dst[e]];
            }
            hub[u] = acc;
        }
        l2_normalize(hub);
        double diff = 0.0;
        for (std::size_t v = 0; v < n; ++v) diff += std::abs(auth[v] - s.authority[v]);
        s.authority = auth;
        s.hub = hub;
        if (diff < params.tolerance) {
            s.converged = true;
            break;
        }
    }
    return s;
}

// --- Ranker -------------------------------------------------------------------

namespace {

RankingSnapshot snapshot_from_scores(Algorithm algo, const AnnotationGraph& g,
                                     const std::vector<double>& node_scores,
                                     bool converged) {
    RankingSnapshot snap;
    snap.algorithm = algo;
    snap.version = g.version();
    snap.converged = converged;
    for (std::size_t idx = 0; idx < g.node_count(); ++idx) {
        const auto& node = g.node(idx);
        snap.ranked[static_cast<int>(node.kind)].emplace_back(node.id, node_scores[idx]);
    }
    for (auto& list : snap.ranked) {
        std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
    }
    snap.build_rank_lut();
    return snap;
}

}  // namespace

RankingSnapshot Ranker::solve(const AnnotationGraph& g, bool warm) {
    if (algo_ == Algorithm::Random) {
        // Reseeded from the graph version so an incremental update at version
        // v and a one-shot computation at version v sample the same
        // permutation.
        RngStream rng(mix_seed(seed_, g.version()));
        RankingSnapshot snap;
        snap.algorithm = algo_;
        snap.version = g.version();
        std::array<std::vector<std::uint32_t>, kNumKinds> ids;
        for (const auto& node : g.nodes()) ids[static_cast<int>(node.kind)].push_back(node.id);
        for (int k = 0; k < kNumKinds; ++k) {
            rng.shuffle(ids[k]);
            for (std::uint32_t id : ids[k]) snap.ranked[k].emplace_back(id, 0.0);
        }
        snap.build_rank_lut();
        return snap;
    }
    if (algo_ == Algorithm::Indegree) {
        std::vector<double> scores(g.node_count());
        for (std::size_t idx = 0; idx < g.node_count(); ++idx) scores[idx] = g.in_weight(idx);
        return snapshot_from_scores(algo_, g, scores, true);
    }
    const CsrGraph csr = CsrGraph::from(g);
    if (algo_ == Algorithm::PageRank) {
        bool converged = true;
        std::vector<double> scores =
            pagerank_parallel(csr, params_, warm ? &prev_pagerank_ : nullptr, &converged);
        prev_pagerank_ = scores;
        return snapshot_from_scores(algo_, g, scores, converged);
    }
    HitsScores scores = hits_parallel(csr, params_, warm ? &prev_hits_ : nullptr);
    prev_hits_ = scores;
    return snapshot_from_scores(algo_, g, scores.authority, scores.converged);
}

RankingSnapshot Ranker::compute(const AnnotationGraph& g) { return solve(g, false); }

RankingSnapshot Ranker::update(const RankingSnapshot& prev, const AnnotationGraph& g) {
    if (prev.version == g.version()) return prev;
    return solve(g, true);
}

}  // namespace socsim
