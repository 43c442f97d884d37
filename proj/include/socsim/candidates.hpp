#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "socsim/model.hpp"
#include "socsim/rng.hpp"

namespace socsim {

struct DistributionSpec {
    enum class Kind { ClampedNormal, Uniform };
    Kind kind = Kind::ClampedNormal;
    double mean = 0.5;
    double stddev = 0.5;  // clamped-normal only, must be > 0
};

struct PoolConfig {
    std::uint32_t actors = 100;
    std::uint32_t concepts = 1000;
    std::uint32_t instances = 1000;
    std::uint64_t activity_cap = 20000;
};

struct CandidatePools {
    std::vector<Actor> actors;
    std::vector<Concept> concepts;    // all unpublished
    std::vector<Instance> instances;  // all unpublished
    std::uint64_t activity_cap = 0;
};

// Normal draw clamped to [0,1]; out-of-range mass piles up at the bounds.
double sample_clamped_normal(const DistributionSpec& spec, RngStream& rng);

double sample_attribute(const DistributionSpec& spec, RngStream& rng);

// Expertise and quality ~ clamped-normal(0.5, 0.5); concept size ~ uniform[0,1].
CandidatePools generate_pools(const PoolConfig& config, RngStream& rng);

EventKind draw_activity_type(RngStream& rng);

}  // namespace socsim
