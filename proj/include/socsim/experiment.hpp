#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "socsim/engine.hpp"

namespace socsim {

struct ExperimentSpec {
    SimulationConfig base;
    std::vector<Algorithm> algorithms = {Algorithm::PageRank};
    std::vector<double> ue_sa_levels = {1.0};
    std::vector<std::uint64_t> seeds = {0};
    std::string output_dir = ".";
    bool dump_pools = false;
    bool dump_events = false;
    bool dump_ranking = false;

    void validate() const;
};

// Flat key=value config text; '#' starts a comment. Unknown keys or
// out-of-range values raise std::invalid_argument naming the key.
void apply_config_file(const std::string& path, ExperimentSpec& spec);
void apply_config_line(const std::string& key, const std::string& value,
                       ExperimentSpec& spec);

std::string cell_name(Algorithm algo, double ue_sa, std::uint64_t seed);

std::string trace_csv(const SimulationOutcome& outcome);
std::string summary_json(const SimulationConfig& config, const SimulationOutcome& outcome);

struct CellResult {
    Algorithm algorithm;
    double ue_sa;
    std::uint64_t seed;
    Termination termination;
    std::optional<double> final_entropy;
    std::optional<double> final_top1;
    std::optional<double> final_top10;
    std::optional<double> sa_rate;
};

// Median over defined values; empty when none are defined.
std::optional<double> median(std::vector<double> values);

extern const char* const kAggregateCsvHeader;
std::string aggregate_csv(const std::vector<CellResult>& cells);

// Runs every (algorithm x ue_sa x seed) cell, writes one trace CSV and one
// summary JSON per cell plus aggregate.csv. Returns 0 on success, nonzero if
// any cell failed to produce output.
int run_experiment(const ExperimentSpec& spec);

}  // namespace socsim
