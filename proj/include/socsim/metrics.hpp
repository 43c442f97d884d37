#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "socsim/model.hpp"
#include "socsim/ranking.hpp"

namespace socsim {

struct ReuseEntropyInput {
    std::vector<std::uint32_t> concept_counts;  // |A_c| per published concept
    std::size_t unannotated_instances = 0;      // published instances with no annotation
};

// Shannon entropy (natural log) of the concept usage distribution. When
// unannotated instances exist, a virtual concept joins the set and every
// unannotated instance contributes 1/|C*| of an annotation to each concept,
// so empty corners of the system keep the entropy honest. No annotations and
// no instances means the distribution is undefined.
std::optional<double> reuse_entropy(const ReuseEntropyInput& input);

// Mean quality of the top-min(k, count) ranked published concepts.
std::optional<double> top_quality(const RankingSnapshot& snapshot, const Store& store,
                                  std::size_t k);

struct ActivityCounters {
    std::uint64_t attempts[kNumKinds] = {0, 0, 0};
    std::uint64_t successes[kNumKinds] = {0, 0, 0};

    std::uint64_t attempts_of(EventKind kind) const {
        return attempts[static_cast<int>(kind)];
    }
    std::uint64_t successes_of(EventKind kind) const {
        return successes[static_cast<int>(kind)];
    }
};

std::optional<double> execution_rate(const ActivityCounters& counters, EventKind kind);

struct TraceRecord {
    std::uint64_t sa_index = 0;   // 1-based successful-annotation index
    std::uint64_t iteration = 0;  // 1-based simulation iteration
    double entropy = 0.0;
    double top1_quality = 0.0;
    double top10_quality = 0.0;
    ActivityCounters counters;
};

TraceRecord make_trace_record(const Store& store, const RankingSnapshot& snapshot,
                              const ActivityCounters& counters, std::uint64_t sa_index,
                              std::uint64_t iteration);

extern const char* const kTraceCsvHeader;
std::string format_trace_row(const TraceRecord& rec);

}  // namespace socsim
