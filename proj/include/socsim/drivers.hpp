#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace socsim {

// Per-activity user-effort multipliers; 1.0 is average application support.
struct EffortLevels {
    double ue_pc = 1.0;
    double ue_pi = 1.0;
    double ue_sa = 1.0;
};

struct DriverParams {
    double alpha = 1.0;  // exponent on concept size in the publish-concept cost
    double beta = 1.0;   // exponent on concept quality in the publish-concept reward
};

struct CostRewardEstimate {
    double cost = 0.0;
    double reward = 0.0;
    // Non-strict gate: reward == cost executes. The attribute distributions
    // put finite mass at exactly 1.0, and a strict gate makes the very first
    // instance publication (cost exactly 1.0, reward capped at 1.0)
    // impossible, deadlocking annotation entirely.
    bool executed() const { return reward >= cost; }
};

// Activity-experience decay: 1.0 for a first-timer, 0.75 after one, 1/n after.
// Shared by AE_PC, AE_PI and AE_SA, each keyed to the actor's count of that
// activity kind.
inline double expertise_decay(std::uint32_t n) {
    if (n == 0) return 1.0;
    if (n == 1) return 0.75;
    return 1.0 / static_cast<double>(n);
}

// cost = CS^alpha * CDs, CDs = (CQ + AE + AE_PC)/3 * UE_PC
inline double cost_publish_concept(double concept_size, double concept_quality,
                                   double actor_expertise, double ae_pc, double alpha,
                                   double ue_pc) {
    return std::pow(concept_size, alpha) *
           ((concept_quality + actor_expertise + ae_pc) / 3.0 * ue_pc);
}

// reward = CQ^beta * RDs, RDs = (TCQ + TCP)/2
inline double reward_publish_concept(double concept_quality, double beta, double tcq,
                                     double tcp) {
    return std::pow(concept_quality, beta) * ((tcq + tcp) / 2.0);
}

// Top concept popularity. Young systems (fewer than 10 published concepts or
// instances) leave room for a new popular concept, so TCP stays 1.0; after
// that it is 1 minus the share of published instances the top concept covers.
inline double tcp_driver(std::size_t published_concepts, std::size_t published_instances,
                         std::size_t instances_annotated_by_top) {
    if (published_concepts < 10 || published_instances < 10) return 1.0;
    return 1.0 - static_cast<double>(instances_annotated_by_top) /
                     static_cast<double>(published_instances);
}

// cost = AE_PI * UE_PI
inline double cost_publish_instance(double ae_pi, double ue_pi) { return ae_pi * ue_pi; }

// reward = IQ
inline double reward_publish_instance(double instance_quality) { return instance_quality; }

// Choice cost (CC over the concept ranking, CI identically over the instance
// ranking): free for the author, then stepped by rank decile, 1.0 outside the
// top 100 or unranked. rank is 1-based; rank < 1 means unranked.
inline double choice_cost(int rank, bool own) {
    if (own) return 0.0;
    if (rank < 1 || rank > 100) return 1.0;
    return static_cast<double>((rank + 9) / 10) / 10.0;
}

// cost = (AE_SA + CC + CI)/3 * UE_SA
inline double cost_semantic_annotation(double ae_sa, double cc, double ci, double ue_sa) {
    return (ae_sa + cc + ci) / 3.0 * ue_sa;
}

// Visibility (CV over the concept ranking, IV identically over the instance
// ranking): 1.0 at the top, 0.75 through rank 10, then 10/rank; 0 if unranked.
// 10/rank is clamped to 0.75 (ranks 11-13) so visibility never increases with
// rank.
inline double visibility(int rank) {
    if (rank < 1) return 0.0;
    if (rank == 1) return 1.0;
    if (rank <= 10) return 0.75;
    return std::min(0.75, 10.0 / static_cast<double>(rank));
}

// reward = (CV + IV + CQ + IQ)/4
inline double reward_semantic_annotation(double cv, double iv, double cq, double iq) {
    return (cv + iv + cq + iq) / 4.0;
}

}  // namespace socsim
