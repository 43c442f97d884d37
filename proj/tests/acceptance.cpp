// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero on any
// failure in A1-A6/A10; A7-A9 are statistical orderings whose failure is
// accepted when the A10 sensitivity scan ran and recorded its findings.
//
//  A1  entropy golden values
//  A2  entropy vs. fractional-table brute force (1e3 random inputs, 1e-12)
//  A3  pagerank/hits vs. dense oracles, indegree vs. recount (100 graphs)
//  A4  incremental ranking equals one-shot recompute (50 x 200 events)
//  A5  cost/reward formulas vs. one-line oracles (1e4 inputs) + exact anchors
//  A6  byte-identical traces for repeated default runs, < 10 s each
//  A7  median final entropy ordering random > hits > {indegree, pagerank}
//      at annotation effort 2.0 over 20 seeds
//  A8  median top-1 quality higher at effort 2.0 than 1.0 (indegree, pagerank)
//  A9  annotation execution rates: within 0.1 across algorithms at effort 1.0,
//      strictly lower per algorithm at effort 2.0
//  A10 if any of A7-A9 fails under alpha=beta=1, an alpha/beta scan over
//      {0.5,1,2}^2 is run and its findings written to acceptance_scan.csv

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <vector>

#include "oracles.hpp"
#include "socsim/drivers.hpp"
#include "socsim/experiment.hpp"

using namespace socsim;

namespace {

std::vector<int> failed_criteria;

void report(int index, const char* name, bool pass) {
    std::printf("A%-2d %-58s %s\n", index, name, pass ? "PASS" : "FAIL");
    if (!pass) failed_criteria.push_back(index);
}

bool approx(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// ---- A1/A2: entropy ----

bool criterion_entropy_goldens() {
    bool ok = approx(*reuse_entropy({{3, 2}, 0}), 0.673, 0.005);
    ok = ok && *reuse_entropy({{1}, 0}) == 0.0;
    ok = ok && approx(*reuse_entropy({{3}, 2}), 0.500, 0.005);
    return ok;
}

bool criterion_entropy_oracle() {
    RngStream rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        ReuseEntropyInput input;
        const std::size_t n = rng.uniform_index(21);
        for (std::size_t i = 0; i < n; ++i) {
            input.concept_counts.push_back(static_cast<std::uint32_t>(rng.uniform_index(9)));
        }
        input.unannotated_instances = rng.uniform_index(51);
        double total = static_cast<double>(input.unannotated_instances);
        for (auto c : input.concept_counts) total += c;
        const auto got = reuse_entropy(input);
        if (total == 0.0) {
            if (got.has_value()) return false;
            continue;
        }
        const double expected =
            oracle::entropy_brute(input.concept_counts, input.unannotated_instances);
        if (!approx(*got, expected, 1e-12 * std::max(1.0, expected))) return false;
    }
    return true;
}

// ---- A3: ranking oracles ----

bool criterion_ranking_oracle() {
    RngStream rng(31337);
    const SolverParams tight{0.85, 1e-12, 10000};
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = oracle::random_graph(2 + rng.uniform_index(7), rng);
        const auto csr = CsrGraph::from(g);

        const auto pr = pagerank_serial(csr, {}, nullptr);
        const auto pr_ref = oracle::pagerank_dense(g, 0.85);
        for (std::size_t i = 0; i < pr.size(); ++i) {
            if (!approx(pr[i], pr_ref[i], 1e-6)) return false;
        }

        const auto hits = hits_serial(csr, tight, nullptr);
        const auto hits_ref = oracle::hits_authority_dense(g);
        for (std::size_t i = 0; i < hits.authority.size(); ++i) {
            if (!approx(hits.authority[i], hits_ref[i], 1e-6)) return false;
        }

        Ranker indeg(Algorithm::Indegree, {}, 0);
        const auto snap = indeg.compute(g);
        for (const auto& [id, score] : snap.list(EntityKind::Actor)) {
            const auto idx = g.index_of(EntityKind::Actor, id);
            double recount = 0.0;
            for (std::size_t u = 0; u < g.node_count(); ++u) {
                for (const auto& [v, w] : g.out_edges(u)) {
                    if (v == static_cast<std::size_t>(idx)) recount += w;
                }
            }
            if (score != recount) return false;
        }
    }
    return true;
}

// ---- A4: incremental equals batch ----

bool criterion_incremental() {
    for (Algorithm algo :
         {Algorithm::Random, Algorithm::Indegree, Algorithm::Hits, Algorithm::PageRank}) {
        RngStream rng(4242);
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n = 5 + rng.uniform_index(12);
            AnnotationGraph g;
            for (std::size_t i = 0; i < n; ++i) {
                g.add_node(EntityKind::Actor, static_cast<std::uint32_t>(i));
            }
            Ranker incremental(algo, {}, 9);
            auto snap = incremental.compute(g);
            for (int ev = 0; ev < 200; ++ev) {
                const std::size_t u = rng.uniform_index(n);
                std::size_t v = rng.uniform_index(n);
                if (v == u) v = (v + 1) % n;
                g.add_edge_weight(u, v, 1.0);
                snap = incremental.update(snap, g);
            }
            Ranker fresh(algo, {}, 9);
            const auto batch = fresh.compute(g);
            if (!oracle::same_ordering(snap.list(EntityKind::Actor),
                                       batch.list(EntityKind::Actor))) {
                return false;
            }
        }
    }
    return true;
}

// ---- A5: driver formulas ----

bool criterion_drivers() {
    // exact anchors
    if (expertise_decay(0) != 1.0 || expertise_decay(1) != 0.75) return false;
    if (choice_cost(1, false) != 0.1 || choice_cost(15, false) != 0.2) return false;
    if (choice_cost(101, false) != 1.0 || choice_cost(-1, false) != 1.0) return false;
    if (visibility(1) != 1.0 || visibility(2) != 0.75 || visibility(10) != 0.75) return false;

    RngStream rng(555);
    for (int trial = 0; trial < 10000; ++trial) {
        const double cs = rng.u01(), cq = rng.u01(), iq = rng.u01();
        const double tcq = rng.u01(), tcp = rng.u01(), cc = rng.u01(), ci = rng.u01();
        const double cv = rng.u01(), iv = rng.u01();
        const double alpha = 0.5 + rng.u01() * 2.0, beta = 0.5 + rng.u01() * 2.0;
        const double ue = 0.5 + rng.u01() * 2.0;
        const auto n = static_cast<std::uint32_t>(rng.uniform_index(40));
        const double ae = expertise_decay(n);
        const double ae_ref = n == 0 ? 1.0 : (n == 1 ? 0.75 : 1.0 / n);
        if (ae != ae_ref) return false;
        if (!approx(cost_publish_concept(cs, cq, ae, ae, alpha, ue),
                    std::pow(cs, alpha) * (cq + ae + ae) / 3.0 * ue, 1e-12)) {
            return false;
        }
        if (!approx(reward_publish_concept(cq, beta, tcq, tcp),
                    std::pow(cq, beta) * (tcq + tcp) / 2.0, 1e-12)) {
            return false;
        }
        if (cost_publish_instance(ae, ue) != ae * ue) return false;
        if (reward_publish_instance(iq) != iq) return false;
        if (!approx(cost_semantic_annotation(ae, cc, ci, ue), (ae + cc + ci) / 3.0 * ue,
                    1e-12)) {
            return false;
        }
        if (!approx(reward_semantic_annotation(cv, iv, cq, iq), (cv + iv + cq + iq) / 4.0,
                    1e-12)) {
            return false;
        }
    }
    return true;
}

// ---- A6-A10: simulation sweeps ----

struct CellStats {
    bool capped = false;
    double entropy = std::nan("");
    double top1 = std::nan("");
    double sa_rate = std::nan("");
};

SimulationConfig default_config(Algorithm algo, double ue_sa, std::uint64_t seed,
                                double alpha, double beta) {
    SimulationConfig config;
    config.algorithm = algo;
    config.efforts.ue_sa = ue_sa;
    config.seed = seed;
    config.params.alpha = alpha;
    config.params.beta = beta;
    return config;
}

CellStats run_cell(Algorithm algo, double ue_sa, std::uint64_t seed, double alpha,
                   double beta) {
    const SimulationOutcome out = run(default_config(algo, ue_sa, seed, alpha, beta));
    CellStats stats;
    stats.capped = out.termination == Termination::CapExceeded;
    if (!out.trace.empty()) {
        stats.entropy = out.trace.back().entropy;
        stats.top1 = out.trace.back().top1_quality;
    }
    stats.sa_rate = execution_rate(out.counters, EventKind::SemanticAnnotation)
                        .value_or(std::nan(""));
    return stats;
}

constexpr Algorithm kAlgos[] = {Algorithm::Random, Algorithm::Indegree, Algorithm::Hits,
                                Algorithm::PageRank};

// cells[algo][ue] -> per-seed stats
using Sweep = std::map<Algorithm, std::map<double, std::vector<CellStats>>>;

Sweep run_sweep(std::size_t seeds, double alpha, double beta) {
    Sweep sweep;
    for (Algorithm algo : kAlgos) {
        for (double ue : {1.0, 2.0}) {
            auto& cells = sweep[algo][ue];
            for (std::uint64_t seed = 0; seed < seeds; ++seed) {
                cells.push_back(run_cell(algo, ue, seed, alpha, beta));
            }
        }
    }
    return sweep;
}

double median_of(const std::vector<CellStats>& cells, double CellStats::* field) {
    std::vector<double> values;
    for (const CellStats& c : cells) {
        if (!std::isnan(c.*field)) values.push_back(c.*field);
    }
    return median(values).value_or(std::nan(""));
}

bool check_entropy_ordering(const Sweep& sweep) {
    const double rnd = median_of(sweep.at(Algorithm::Random).at(2.0), &CellStats::entropy);
    const double hits = median_of(sweep.at(Algorithm::Hits).at(2.0), &CellStats::entropy);
    const double indeg =
        median_of(sweep.at(Algorithm::Indegree).at(2.0), &CellStats::entropy);
    const double pr = median_of(sweep.at(Algorithm::PageRank).at(2.0), &CellStats::entropy);
    return rnd > hits && hits > indeg && hits > pr && rnd - pr > 0.0;
}

bool check_quality_effect(const Sweep& sweep) {
    for (Algorithm algo : {Algorithm::Indegree, Algorithm::PageRank}) {
        const double low = median_of(sweep.at(algo).at(1.0), &CellStats::top1);
        const double high = median_of(sweep.at(algo).at(2.0), &CellStats::top1);
        if (!(high > low)) return false;
    }
    return true;
}

bool check_rate_effect(const Sweep& sweep) {
    double lo = 1.0, hi = 0.0;
    for (Algorithm algo : kAlgos) {
        const double rate = median_of(sweep.at(algo).at(1.0), &CellStats::sa_rate);
        lo = std::min(lo, rate);
        hi = std::max(hi, rate);
    }
    if (!(hi - lo <= 0.1)) return false;
    for (Algorithm algo : kAlgos) {
        const double base = median_of(sweep.at(algo).at(1.0), &CellStats::sa_rate);
        const double hard = median_of(sweep.at(algo).at(2.0), &CellStats::sa_rate);
        if (!(hard < base)) return false;
    }
    return true;
}

bool criterion_determinism() {
    using clock = std::chrono::steady_clock;
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
        const auto t0 = clock::now();
        const SimulationOutcome out = run(default_config(Algorithm::PageRank, 1.0, 7, 1.0, 1.0));
        const double secs = std::chrono::duration<double>(clock::now() - t0).count();
        const std::string csv = trace_csv(out);
        if (secs >= 10.0) {
            std::fprintf(stderr, "  default run took %.2f s (budget 10 s)\n", secs);
            return false;
        }
        if (rep == 0) {
            first = csv;
        } else if (csv != first) {
            return false;
        }
    }
    return true;
}

// Scan alpha, beta in {0.5, 1, 2}^2 with a reduced seed count and record
// whether each qualitative check holds, so a failure under the defaults comes
// with data instead of a shrug.
bool run_scan_and_record(bool c7, bool c8, bool c9) {
    std::ofstream out("acceptance_scan.csv");
    if (!out) return false;
    out << "alpha,beta,entropy_ordering,quality_effect,rate_effect\n";
    for (double alpha : {0.5, 1.0, 2.0}) {
        for (double beta : {0.5, 1.0, 2.0}) {
            const Sweep sweep = run_sweep(8, alpha, beta);
            const bool e = check_entropy_ordering(sweep);
            const bool q = check_quality_effect(sweep);
            const bool r = check_rate_effect(sweep);
            out << alpha << ',' << beta << ',' << e << ',' << q << ',' << r << '\n';
            std::printf("    scan alpha=%g beta=%g: entropy=%d quality=%d rate=%d\n", alpha,
                        beta, e, q, r);
        }
    }
    std::printf("    defaults failed: entropy=%d quality=%d rate=%d; scan in "
                "acceptance_scan.csv\n",
                c7, c8, c9);
    return static_cast<bool>(out);
}

}  // namespace

int main() {
    report(1, "entropy golden values", criterion_entropy_goldens());
    report(2, "entropy matches fractional-table brute force", criterion_entropy_oracle());
    report(3, "ranking kernels match dense oracles", criterion_ranking_oracle());
    report(4, "incremental ranking equals one-shot recompute", criterion_incremental());
    report(5, "cost/reward formulas match one-line oracles", criterion_drivers());
    report(6, "default run is byte-deterministic and under budget",
           criterion_determinism());

    const Sweep sweep = run_sweep(20, 1.0, 1.0);
    const bool c7 = check_entropy_ordering(sweep);
    const bool c8 = check_quality_effect(sweep);
    const bool c9 = check_rate_effect(sweep);
    for (Algorithm algo : kAlgos) {
        std::printf("    %-9s entropy=%.4f top1(1.0)=%.4f top1(2.0)=%.4f "
                    "rate(1.0)=%.4f rate(2.0)=%.4f\n",
                    to_string(algo), median_of(sweep.at(algo).at(2.0), &CellStats::entropy),
                    median_of(sweep.at(algo).at(1.0), &CellStats::top1),
                    median_of(sweep.at(algo).at(2.0), &CellStats::top1),
                    median_of(sweep.at(algo).at(1.0), &CellStats::sa_rate),
                    median_of(sweep.at(algo).at(2.0), &CellStats::sa_rate));
    }
    report(7, "median entropy ordering random > hits > {indegree, pagerank}", c7);
    report(8, "top-1 quality rises with annotation effort", c8);
    report(9, "execution rates tight at effort 1.0, lower at 2.0", c9);
    const bool scan_recorded = (c7 && c8 && c9) ? true : run_scan_and_record(c7, c8, c9);
    report(10, "sensitivity scan recorded when qualitative checks fail", scan_recorded);

    // A7-A9 are statistical orderings over seed medians; a failure there is an
    // accepted outcome as long as the alpha/beta sensitivity scan ran and its
    // findings were recorded (A10). Everything else failing is a hard error.
    bool hard_failure = false;
    for (int index : failed_criteria) {
        if (index < 7 || index > 9) hard_failure = true;
    }
    if (!failed_criteria.empty() && !hard_failure) {
        std::printf("qualitative ordering failure accepted with recorded scan\n");
    }
    return hard_failure ? 1 : 0;
}
