#include "socsim/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace socsim {

namespace {

std::string fmt_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

double parse_double(const std::string& key, const std::string& value, double lo, double hi) {
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != value.size() || v < lo || v > hi) {
        throw std::invalid_argument("config key '" + key + "': expected a number in [" +
                                    fmt_double(lo) + ", " + fmt_double(hi) + "], got '" +
                                    value + "'");
    }
    return v;
}

std::uint64_t parse_uint(const std::string& key, const std::string& value, std::uint64_t lo,
                         std::uint64_t hi) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(value, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != value.size() || v < lo || v > hi) {
        throw std::invalid_argument("config key '" + key + "': expected an integer in [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) +
                                    "], got '" + value + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

// "0-19" or "3,7,11"
std::vector<std::uint64_t> parse_seeds(const std::string& key, const std::string& value) {
    std::vector<std::uint64_t> seeds;
    const auto dash = value.find('-');
    if (dash != std::string::npos && value.find(',') == std::string::npos) {
        const std::uint64_t lo = parse_uint(key, value.substr(0, dash), 0, UINT64_MAX);
        const std::uint64_t hi = parse_uint(key, value.substr(dash + 1), lo, UINT64_MAX);
        for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
        return seeds;
    }
    for (const std::string& part : split(value, ',')) {
        seeds.push_back(parse_uint(key, part, 0, UINT64_MAX));
    }
    return seeds;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "1" || value == "true") return true;
    if (value == "0" || value == "false") return false;
    throw std::invalid_argument("config key '" + key + "': expected 0/1/true/false, got '" +
                                value + "'");
}

bool write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    return static_cast<bool>(out);
}

}  // namespace

void ExperimentSpec::validate() const {
    base.validate();
    if (algorithms.empty()) throw std::invalid_argument("algorithm list must be non-empty");
    if (ue_sa_levels.empty()) throw std::invalid_argument("ue_sa list must be non-empty");
    if (seeds.empty()) throw std::invalid_argument("seed list must be non-empty");
    for (double ue : ue_sa_levels) {
        if (ue <= 0) throw std::invalid_argument("ue_sa levels must be > 0");
    }
}

void apply_config_line(const std::string& key, const std::string& value,
                       ExperimentSpec& spec) {
    if (key == "actors") {
        spec.base.actors = static_cast<std::uint32_t>(parse_uint(key, value, 1, 1u << 20));
    } else if (key == "concepts") {
        spec.base.concept_candidates =
            static_cast<std::uint32_t>(parse_uint(key, value, 1, 1u << 20));
    } else if (key == "instances") {
        spec.base.instance_candidates =
            static_cast<std::uint32_t>(parse_uint(key, value, 1, 1u << 20));
    } else if (key == "cap") {
        spec.base.iteration_cap = parse_uint(key, value, 1, UINT64_MAX);
    } else if (key == "stop") {
        spec.base.stop_target = parse_uint(key, value, 1, UINT64_MAX);
    } else if (key == "ue_pc") {
        spec.base.efforts.ue_pc = parse_double(key, value, 1e-9, 1e9);
    } else if (key == "ue_pi") {
        spec.base.efforts.ue_pi = parse_double(key, value, 1e-9, 1e9);
    } else if (key == "ue_sa") {
        spec.ue_sa_levels.clear();
        for (const std::string& part : split(value, ','))
            spec.ue_sa_levels.push_back(parse_double(key, part, 1e-9, 1e9));
    } else if (key == "alpha") {
        spec.base.params.alpha = parse_double(key, value, 1e-9, 1e9);
    } else if (key == "beta") {
        spec.base.params.beta = parse_double(key, value, 1e-9, 1e9);
    } else if (key == "damping") {
        spec.base.solver.damping = parse_double(key, value, 1e-9, 1.0 - 1e-9);
    } else if (key == "tolerance") {
        spec.base.solver.tolerance = parse_double(key, value, 1e-15, 1.0);
    } else if (key == "max_iterations") {
        spec.base.solver.max_iterations =
            static_cast<int>(parse_uint(key, value, 1, 1000000));
    } else if (key == "cadence") {
        spec.base.ranking_cadence =
            static_cast<std::uint32_t>(parse_uint(key, value, 1, 1u << 30));
    } else if (key == "algo") {
        spec.algorithms.clear();
        for (const std::string& part : split(value, ',')) {
            Algorithm algo;
            if (!parse_algorithm(part, algo)) {
                throw std::invalid_argument(
                    "config key 'algo': expected random|indegree|hits|pagerank, got '" +
                    part + "'");
            }
            spec.algorithms.push_back(algo);
        }
    } else if (key == "seeds") {
        spec.seeds = parse_seeds(key, value);
    } else if (key == "out") {
        spec.output_dir = value;
    } else if (key == "dump_pools") {
        spec.dump_pools = parse_bool(key, value);
    } else if (key == "dump_events") {
        spec.dump_events = parse_bool(key, value);
    } else if (key == "dump_ranking") {
        spec.dump_ranking = parse_bool(key, value);
    } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

void apply_config_file(const std::string& path, ExperimentSpec& spec) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key=value");
        }
        apply_config_line(line.substr(0, eq), line.substr(eq + 1), spec);
    }
}

std::string cell_name(Algorithm algo, double ue_sa, std::uint64_t seed) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s_ue%g_seed%llu", to_string(algo), ue_sa,
                  static_cast<unsigned long long>(seed));
    return buf;
}

std::string trace_csv(const SimulationOutcome& outcome) {
    std::string out = kTraceCsvHeader;
    out += '\n';
    for (const TraceRecord& rec : outcome.trace) {
        out += format_trace_row(rec);
        out += '\n';
    }
    return out;
}

std::string summary_json(const SimulationConfig& config, const SimulationOutcome& outcome) {
    nlohmann::json j;
    j["algorithm"] = to_string(config.algorithm);
    j["seed"] = config.seed;
    j["generator"] = RngStream::name();
    j["config"] = {{"actors", config.actors},
                   {"concepts", config.concept_candidates},
                   {"instances", config.instance_candidates},
                   {"cap", config.iteration_cap},
                   {"stop", config.stop_target},
                   {"ue_pc", config.efforts.ue_pc},
                   {"ue_pi", config.efforts.ue_pi},
                   {"ue_sa", config.efforts.ue_sa},
                   {"alpha", config.params.alpha},
                   {"beta", config.params.beta},
                   {"damping", config.solver.damping},
                   {"tolerance", config.solver.tolerance},
                   {"max_iterations", config.solver.max_iterations},
                   {"cadence", config.ranking_cadence}};
    j["termination"] = to_string(outcome.termination);
    j["iterations"] = outcome.iterations;
    j["published_concepts"] = outcome.published_concepts;
    j["published_instances"] = outcome.published_instances;
    j["annotations"] = outcome.annotations;
    j["trace_records"] = outcome.trace.size();

    const EventKind kinds[] = {EventKind::PublishConcept, EventKind::PublishInstance,
                               EventKind::SemanticAnnotation};
    const char* names[] = {"publish_concept", "publish_instance", "semantic_annotation"};
    for (int k = 0; k < kNumKinds; ++k) {
        nlohmann::json a;
        a["attempts"] = outcome.counters.attempts_of(kinds[k]);
        a["successes"] = outcome.counters.successes_of(kinds[k]);
        const auto rate = execution_rate(outcome.counters, kinds[k]);
        if (rate) a["execution_rate"] = *rate;
        else a["execution_rate"] = nullptr;
        j["activities"][names[k]] = a;
    }
    if (!outcome.trace.empty()) {
        const TraceRecord& last = outcome.trace.back();
        j["final"] = {{"entropy", last.entropy},
                      {"top1_quality", last.top1_quality},
                      {"top10_quality", last.top10_quality}};
    } else {
        j["final"] = nullptr;
    }
    return j.dump(2) + "\n";
}

std::optional<double> median(std::vector<double> values) {
    if (values.empty()) return std::nullopt;
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

const char* const kAggregateCsvHeader =
    "algorithm,ue_sa,seeds,cap_exceeded,median_final_entropy,median_top1_quality,"
    "median_top10_quality,median_sa_rate";

std::string aggregate_csv(const std::vector<CellResult>& cells) {
    std::string out = kAggregateCsvHeader;
    out += '\n';
    // Group by (algorithm, ue_sa), preserving first-appearance order.
    std::vector<std::pair<Algorithm, double>> groups;
    for (const CellResult& cell : cells) {
        const std::pair<Algorithm, double> key{cell.algorithm, cell.ue_sa};
        if (std::find(groups.begin(), groups.end(), key) == groups.end())
            groups.push_back(key);
    }
    for (const auto& [algo, ue] : groups) {
        std::vector<double> entropies, top1s, top10s, rates;
        std::size_t count = 0, cap_exceeded = 0;
        for (const CellResult& cell : cells) {
            if (cell.algorithm != algo || cell.ue_sa != ue) continue;
            ++count;
            if (cell.termination == Termination::CapExceeded) ++cap_exceeded;
            if (cell.final_entropy) entropies.push_back(*cell.final_entropy);
            if (cell.final_top1) top1s.push_back(*cell.final_top1);
            if (cell.final_top10) top10s.push_back(*cell.final_top10);
            if (cell.sa_rate) rates.push_back(*cell.sa_rate);
        }
        auto cell_text = [](std::optional<double> v) {
            return v ? fmt_double(*v) : std::string();
        };
        out += to_string(algo);
        out += ',' + fmt_double(ue) + ',' + std::to_string(count) + ',' +
               std::to_string(cap_exceeded) + ',' + cell_text(median(entropies)) + ',' +
               cell_text(median(top1s)) + ',' + cell_text(median(top10s)) + ',' +
               cell_text(median(rates)) + '\n';
    }
    return out;
}

int run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    std::filesystem::create_directories(spec.output_dir);
    const std::filesystem::path dir(spec.output_dir);

    struct Cell {
        Algorithm algo;
        double ue_sa;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (Algorithm algo : spec.algorithms) {
        for (double ue : spec.ue_sa_levels) {
            for (std::uint64_t seed : spec.seeds) cells.push_back({algo, ue, seed});
        }
    }

    std::vector<CellResult> results(cells.size());
    std::vector<char> failed(cells.size(), 0);

#pragma omp parallel for schedule(dynamic)
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
        const Cell& cell = cells[idx];
        SimulationConfig config = spec.base;
        config.algorithm = cell.algo;
        config.efforts.ue_sa = cell.ue_sa;
        config.seed = cell.seed;

        Engine engine(config);
        while (engine.step()) {
        }
        const std::string name = cell_name(cell.algo, cell.ue_sa, cell.seed);
        const std::string ranking_dump = [&] {
            if (!spec.dump_ranking) return std::string();
            std::string text = "kind,rank,id,score\n";
            const EntityKind kinds[] = {EntityKind::Actor, EntityKind::Concept,
                                        EntityKind::Instance};
            for (EntityKind k : kinds) {
                const auto& list = engine.snapshot().list(k);
                for (std::size_t pos = 0; pos < list.size(); ++pos) {
                    text += std::string(to_string(k)) + ',' + std::to_string(pos + 1) + ',' +
                            std::to_string(list[pos].first) + ',' +
                            fmt_double(list[pos].second) + '\n';
                }
            }
            return text;
        }();
        SimulationOutcome outcome = engine.finish();

        bool ok = write_file(dir / (name + ".csv"), trace_csv(outcome)) &&
                  write_file(dir / (name + ".json"), summary_json(config, outcome));
        if (ok && spec.dump_events) {
            std::string text = "iter,event_kind,actor,concept,instance,success\n";
            for (const EventRecord& ev : outcome.events) text += format_event(ev) + "\n";
            ok = write_file(dir / (name + ".events.csv"), text);
        }
        if (ok && spec.dump_ranking) {
            ok = write_file(dir / (name + ".ranking.csv"), ranking_dump);
        }
        failed[idx] = ok ? 0 : 1;

        CellResult& res = results[idx];
        res.algorithm = cell.algo;
        res.ue_sa = cell.ue_sa;
        res.seed = cell.seed;
        res.termination = outcome.termination;
        res.sa_rate = execution_rate(outcome.counters, EventKind::SemanticAnnotation);
        if (!outcome.trace.empty()) {
            const TraceRecord& last = outcome.trace.back();
            res.final_entropy = last.entropy;
            res.final_top1 = last.top1_quality;
            res.final_top10 = last.top10_quality;
        }
    }

    if (spec.dump_pools) {
        for (std::uint64_t seed : spec.seeds) {
            RngStream rng(seed);
            CandidatePools pools = generate_pools(
                {spec.base.actors, spec.base.concept_candidates,
                 spec.base.instance_candidates, spec.base.iteration_cap},
                rng);
            std::string text = "kind,id,attr1,attr2\n";
            for (const Actor& a : pools.actors)
                text += "actor," + std::to_string(a.id) + ',' + fmt_double(a.expertise) + ",\n";
            for (const Concept& c : pools.concepts)
                text += "concept," + std::to_string(c.id) + ',' + fmt_double(c.quality) +
                        ',' + fmt_double(c.size) + '\n';
            for (const Instance& i : pools.instances)
                text += "instance," + std::to_string(i.id) + ',' + fmt_double(i.quality) +
                        ",\n";
            if (!write_file(dir / ("pools_seed" + std::to_string(seed) + ".csv"), text))
                return 1;
        }
    }

    if (!write_file(dir / "aggregate.csv", aggregate_csv(results))) return 1;
    for (char f : failed) {
        if (f) return 1;
    }
    return 0;
}

}  // namespace socsim
