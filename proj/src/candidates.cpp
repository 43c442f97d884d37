#include "socsim/candidates.hpp"

#include <algorithm>

namespace socsim {

double sample_clamped_normal(const DistributionSpec& spec, RngStream& rng) {
    if (spec.stddev <= 0.0) throw std::invalid_argument("clamped-normal stddev must be > 0");
    return std::clamp(rng.normal(spec.mean, spec.stddev), 0.0, 1.0);
}

double sample_attribute(const DistributionSpec& spec, RngStream& rng) {
    if (spec.kind == DistributionSpec::Kind::Uniform) return rng.u01();
    return sample_clamped_normal(spec, rng);
}

CandidatePools generate_pools(const PoolConfig& config, RngStream& rng) {
    if (config.actors == 0 || config.concepts == 0 || config.instances == 0 ||
        config.activity_cap == 0) {
        throw std::invalid_argument("pool sizes and activity cap must be positive");
    }
    const DistributionSpec normal{DistributionSpec::Kind::ClampedNormal, 0.5, 0.5};
    const DistributionSpec uniform{DistributionSpec::Kind::Uniform, 0.0, 0.0};

    CandidatePools pools;
    pools.activity_cap = config.activity_cap;
    pools.actors.reserve(config.actors);
    for (std::uint32_t id = 0; id < config.actors; ++id) {
        pools.actors.push_back({id, sample_attribute(normal, rng)});
    }
    pools.concepts.reserve(config.concepts);
    for (std::uint32_t id = 0; id < config.concepts; ++id) {
        Concept c;
        c.id = id;
        c.quality = sample_attribute(normal, rng);
        c.size = sample_attribute(uniform, rng);
        pools.concepts.push_back(c);
    }
    pools.instances.reserve(config.instances);
    for (std::uint32_t id = 0; id < config.instances; ++id) {
        Instance i;
        i.id = id;
        i.quality = sample_attribute(normal, rng);
        pools.instances.push_back(i);
    }
    return pools;
}

EventKind draw_activity_type(RngStream& rng) {
    return static_cast<EventKind>(rng.uniform_index(3));
}

}  // namespace socsim
