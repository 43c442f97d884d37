#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "socsim/model.hpp"
#include "socsim/rng.hpp"

namespace socsim {

enum class Algorithm : std::uint8_t { Random = 0, Indegree = 1, Hits = 2, PageRank = 3 };

const char* to_string(Algorithm algo);
bool parse_algorithm(const std::string& name, Algorithm& out);

struct SolverParams {
    double damping = 0.85;
    double tolerance = 1e-8;
    int max_iterations = 100;
};

// Immutable per-kind ordering of published entities. Scores are
// non-increasing down each list; exact score ties break by ascending id.
// Random ranking is the one exception: its order is the sampled permutation
// and all scores are 0.
struct RankingSnapshot {
    Algorithm algorithm = Algorithm::Random;
    std::uint64_t version = 0;
    bool converged = true;

    std::array<std::vector<std::pair<std::uint32_t, double>>, kNumKinds> ranked;

    const std::vector<std::pair<std::uint32_t, double>>& list(EntityKind kind) const {
        return ranked[static_cast<int>(kind)];
    }
    // 1-based rank, or -1 if the entity is not in the snapshot.
    int rank_of(EntityKind kind, std::uint32_t id) const {
        const auto& lut = rank_lut_[static_cast<int>(kind)];
        if (id >= lut.size()) return -1;
        return lut[id];
    }

    void build_rank_lut();

private:
    std::array<std::vector<int>, kNumKinds> rank_lut_;
};

// --- kernels ----------------------------------------------------------------
// Each solver has a serial reference and an OpenMP variant. The parallel
// variant computes every vector element from the same expression as the
// serial one (no cross-thread reductions), so results are identical and
// independent of the thread count.

std::vector<double> pagerank_serial(const CsrGraph& g, const SolverParams& params,
                                    const std::vector<double>* warm_start,
                                    bool* converged = nullptr);
std::vector<double> pagerank_parallel(const CsrGraph& g, const SolverParams& params,
                                      const std::vector<double>* warm_start,
                                      bool* converged = nullptr);

struct HitsScores {
    std::vector<double> authority;
    std::vector<double> hub;
    bool converged = true;
};

HitsScores hits_serial(const CsrGraph& g, const SolverParams& params,
                       const HitsScores* warm_start);
HitsScores hits_parallel(const CsrGraph& g, const SolverParams& params,
                         const HitsScores* warm_start);

// --- ranker -----------------------------------------------------------------
// Owns solver state across updates (warm starts, the random sub-seed) and
// turns node scores into per-kind snapshots. update() is contractually
// equivalent to a from-scratch recompute: orderings identical, scores within
// 1e-6.
class Ranker {
public:
    Ranker(Algorithm algo, SolverParams params, std::uint64_t seed)
        : algo_(algo), params_(params), seed_(seed) {}

    Algorithm algorithm() const { return algo_; }

    // From-scratch snapshot of the graph (no warm start).
    RankingSnapshot compute(const AnnotationGraph& g);
    // Incremental snapshot; returns the previous one unchanged when the graph
    // version has not moved.
    RankingSnapshot update(const RankingSnapshot& prev, const AnnotationGraph& g);

private:
    RankingSnapshot solve(const AnnotationGraph& g, bool warm);

    Algorithm algo_;
    SolverParams params_;
    std::uint64_t seed_;
    std::vector<double> prev_pagerank_;
    HitsScores prev_hits_;
};

}  // namespace socsim
