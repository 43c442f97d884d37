#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace socsim {

// Deterministic random stream. All draws go through explicit helpers so the
// consumption order is fixed and auditable; the run summary names the
// generator ("mt19937_64+boxmuller") because trace equality is only promised
// for identical generators.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    // Uniform double in [0, 1).
    double u01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform index in [0, n). Rejection sampling, no modulo bias.
    std::size_t uniform_index(std::size_t n) {
        const std::uint64_t span = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return static_cast<std::size_t>(x % span);
    }

    // Box-Muller without the cached spare, so every call costs exactly two
    // raw draws and the stream position stays easy to reason about.
    double normal(double mean, double stddev) {
        const double u1 = static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        const double u2 = u01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(2.0 * M_PI * u2);
    }

    // Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[uniform_index(i)]);
        }
    }

    // Up to k distinct elements drawn uniformly from v (partial Fisher-Yates
    // over a scratch copy).
    template <typename T>
    std::vector<T> sample_without_replacement(std::vector<T> v, std::size_t k) {
        if (k >= v.size()) {
            shuffle(v);
            return v;
        }
        for (std::size_t i = 0; i < k; ++i) {
            std::swap(v[i], v[i + uniform_index(v.size() - i)]);
        }
        v.resize(k);
        return v;
    }

    static constexpr const char* name() { return "mt19937_64+boxmuller"; }

private:
    std::mt19937_64 gen_;
};

// SplitMix64 finalizer; used to derive per-version sub-seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace socsim
