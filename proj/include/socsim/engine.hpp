#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "socsim/candidates.hpp"
#include "socsim/drivers.hpp"
#include "socsim/metrics.hpp"
#include "socsim/model.hpp"
#include "socsim/ranking.hpp"
#include "socsim/rng.hpp"

namespace socsim {

struct SimulationConfig {
    std::uint32_t actors = 100;
    std::uint32_t concept_candidates = 1000;
    std::uint32_t instance_candidates = 1000;
    std::uint64_t iteration_cap = 20000;
    std::uint64_t stop_target = 1000;  // successful semantic annotations
    EffortLevels efforts;
    DriverParams params;
    SolverParams solver;
    Algorithm algorithm = Algorithm::PageRank;
    std::uint64_t seed = 0;
    std::uint32_t ranking_cadence = 1;  // recompute every k-th successful activity

    void validate() const;  // throws std::invalid_argument
};

enum class Termination : std::uint8_t { StopReached, CapExceeded };

const char* to_string(Termination term);

struct SimulationOutcome {
    Termination termination = Termination::CapExceeded;
    std::uint64_t iterations = 0;
    ActivityCounters counters;
    std::vector<TraceRecord> trace;
    std::vector<EventRecord> events;
    std::size_t published_concepts = 0;
    std::size_t published_instances = 0;
    std::size_t annotations = 0;
};

// The iteration loop: pick an actor and an activity, pick a target, estimate
// cost and reward against the current ranking snapshot, execute when the
// reward covers the cost, update the ranking, record. Per iteration the
// random stream is consumed in a fixed order: actor, activity type, target
// selection; estimation draws nothing.
class Engine {
public:
    explicit Engine(const SimulationConfig& config);

    // One iteration; returns false once the cap or stop target is hit.
    bool step();
    SimulationOutcome finish();

    const Store& store() const { return *store_; }
    const RankingSnapshot& snapshot() const { return snapshot_; }
    const ActivityCounters& counters() const { return counters_; }
    std::uint64_t iterations() const { return iterations_; }

private:
    struct Estimate {
        CostRewardEstimate gate;
        std::int64_t concept_id = kNoEntity;
        std::int64_t instance = kNoEntity;
        bool selectable = false;
    };

    Estimate attempt_publish_concept(ActorId actor);
    Estimate attempt_publish_instance(ActorId actor);
    Estimate attempt_annotation(ActorId actor);
    void after_success();

    SimulationConfig config_;
    RngStream rng_;
    std::unique_ptr<Store> store_;
    Ranker ranker_;
    RankingSnapshot snapshot_;
    ActivityCounters counters_;
    std::vector<TraceRecord> trace_;
    std::vector<EventRecord> events_;
    std::vector<ConceptId> unpublished_concepts_;
    std::vector<InstanceId> unpublished_instances_;
    std::uint64_t iterations_ = 0;
    std::uint64_t successes_since_ranking_ = 0;
    std::uint64_t sa_successes_ = 0;
};

SimulationOutcome run(const SimulationConfig& config);

}  // namespace socsim
