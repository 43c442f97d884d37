#include "socsim/metrics.hpp"

#include <cmath>
#include <cstdio>

namespace socsim {

std::optional<double> reuse_entropy(const ReuseEntropyInput& input) {
    const std::size_t m = input.unannotated_instances;
    double total = static_cast<double>(m);
    for (std::uint32_t c : input.concept_counts) total += c;
    if (total == 0.0) return std::nullopt;

    const std::size_t star = input.concept_counts.size() + (m > 0 ? 1 : 0);
    const double spread = m > 0 ? static_cast<double>(m) / static_cast<double>(star) : 0.0;

    double h = 0.0;
    for (std::uint32_t c : input.concept_counts) {
        const double p = (static_cast<double>(c) + spread) / total;
        if (p > 0.0) h -= p * std::log(p);
    }
    if (m > 0) {
        const double p = spread / total;  // the virtual concept's share
        if (p > 0.0) h -= p * std::log(p);
    }
    return h;
}

std::optional<double> top_quality(const RankingSnapshot& snapshot, const Store& store,
                                  std::size_t k) {
    const auto& concepts = snapshot.list(EntityKind::Concept);
    if (concepts.empty() || k == 0) return std::nullopt;
    const std::size_t take = std::min(k, concepts.size());
    double sum = 0.0;
    for (std::size_t pos = 0; pos < take; ++pos) {
        sum += store.concept_at(concepts[pos].first).quality;
    }
    return sum / static_cast<double>(take);
}

std::optional<double> execution_rate(const ActivityCounters& counters, EventKind kind) {
    const std::uint64_t attempts = counters.attempts_of(kind);
    if (attempts == 0) return std::nullopt;
    return static_cast<double>(counters.successes_of(kind)) / static_cast<double>(attempts);
}

TraceRecord make_trace_record(const Store& store, const RankingSnapshot& snapshot,
                              const ActivityCounters& counters, std::uint64_t sa_index,
                              std::uint64_t iteration) {
    TraceRecord rec;
    rec.sa_index = sa_index;
    rec.iteration = iteration;
    rec.counters = counters;

    ReuseEntropyInput input;
    input.concept_counts.reserve(store.published_concepts().size());
    for (ConceptId c : store.published_concepts()) {
        input.concept_counts.push_back(store.annotations_with_concept(c));
    }
    input.unannotated_instances = store.unannotated_instance_count();
    rec.entropy = reuse_entropy(input).value_or(std::nan(""));
    rec.top1_quality = top_quality(snapshot, store, 1).value_or(std::nan(""));
    rec.top10_quality = top_quality(snapshot, store, 10).value_or(std::nan(""));
    return rec;
}

const char* const kTraceCsvHeader =
    "sa_index,iteration,entropy,top1_quality,top10_quality,"
    "pc_attempts,pc_successes,pi_attempts,pi_successes,sa_attempts,sa_successes";

std::string format_trace_row(const TraceRecord& rec) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "%llu,%llu,%.10g,%.10g,%.10g,%llu,%llu,%llu,%llu,%llu,%llu",
                  static_cast<unsigned long long>(rec.sa_index),
                  static_cast<unsigned long long>(rec.iteration), rec.entropy,
                  rec.top1_quality, rec.top10_quality,
                  static_cast<unsigned long long>(rec.counters.attempts[0]),
                  static_cast<unsigned long long>(rec.counters.successes[0]),
                  static_cast<unsigned long long>(rec.counters.attempts[1]),
                  static_cast<unsigned long long>(rec.counters.successes[1]),
                  static_cast<unsigned long long>(rec.counters.attempts[2]),
                  static_cast<unsigned long long>(rec.counters.successes[2]));
    return buf;
}

}  // namespace socsim
