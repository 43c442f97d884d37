#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "socsim/experiment.hpp"

// Experiment driver: every flag shares the key=value config vocabulary, and
// flags override file values.
int main(int argc, char** argv) {
    CLI::App app{"socsim - ranking-incentive simulator for social-semantic networks"};

    std::string config_path;
    app.add_option("--config", config_path, "key=value config file");

    std::vector<std::pair<std::string, std::string>> overrides;
    auto add_key = [&](const std::string& flag, const std::string& key,
                       const std::string& help) {
        app.add_option_function<std::string>(
            flag, [&overrides, key](const std::string& v) { overrides.emplace_back(key, v); },
            help);
    };
    add_key("--algo", "algo", "comma list of random|indegree|hits|pagerank");
    add_key("--ue-sa", "ue_sa", "comma list of semantic-annotation effort levels");
    add_key("--ue-pc", "ue_pc", "publish-concept effort level");
    add_key("--ue-pi", "ue_pi", "publish-instance effort level");
    add_key("--seeds", "seeds", "seed list: 1,2,3 or 0-19");
    add_key("--stop", "stop", "successful annotations to stop at");
    add_key("--cap", "cap", "hard iteration cap");
    add_key("--actors", "actors", "actor pool size");
    add_key("--concepts", "concepts", "concept candidate pool size");
    add_key("--instances", "instances", "instance candidate pool size");
    add_key("--alpha", "alpha", "publish-concept cost exponent");
    add_key("--beta", "beta", "publish-concept reward exponent");
    add_key("--damping", "damping", "PageRank damping factor");
    add_key("--tolerance", "tolerance", "solver convergence tolerance");
    add_key("--max-iterations", "max_iterations", "solver iteration limit");
    add_key("--cadence", "cadence", "ranking update cadence (every k successes)");
    add_key("--out", "out", "output directory");
    add_key("--dump-pools", "dump_pools", "write candidate pool CSVs (0/1)");
    add_key("--dump-events", "dump_events", "write per-cell event logs (0/1)");
    add_key("--dump-ranking", "dump_ranking", "write final ranking snapshots (0/1)");

    CLI11_PARSE(app, argc, argv);

    socsim::ExperimentSpec spec;
    try {
        if (!config_path.empty()) socsim::apply_config_file(config_path, spec);
        for (const auto& [key, value] : overrides) {
            socsim::apply_config_line(key, value, spec);
        }
        spec.validate();
        return socsim::run_experiment(spec);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
