#include <chrono>
#include <cmath>
#include <cstdio>

#include "socsim/model.hpp"
#include "socsim/ranking.hpp"
#include "socsim/rng.hpp"

// Times the serial reference kernels against the OpenMP variants on synthetic
// tripartite-ish random graphs and reports the largest score deviation.

namespace {

socsim::AnnotationGraph random_graph(std::size_t nodes, std::size_t edges,
                                     std::uint64_t seed) {
    socsim::AnnotationGraph g;
    for (std::size_t i = 0; i < nodes; ++i) {
        g.add_node(socsim::EntityKind::Actor, static_cast<std::uint32_t>(i));
    }
    socsim::RngStream rng(seed);
    for (std::size_t e = 0; e < edges; ++e) {
        const std::size_t u = rng.uniform_index(nodes);
        const std::size_t v = rng.uniform_index(nodes);
        if (u == v) continue;
        g.add_edge_weight(u, v, 1.0 + static_cast<double>(rng.uniform_index(4)));
    }
    return g;
}

template <typename F>
double time_ms(F&& f, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

int main() {
    const socsim::SolverParams params;
    std::printf("%-10s %8s %10s %12s %12s %10s %12s\n", "kernel", "nodes", "edges",
                "serial_ms", "parallel_ms", "speedup", "max_diff");
    for (std::size_t nodes : {2000UL, 20000UL, 100000UL}) {
        const std::size_t edges = nodes * 8;
        const auto g = random_graph(nodes, edges, 42);
        const auto csr = socsim::CsrGraph::from(g);
        const int reps = nodes <= 20000 ? 5 : 2;

        std::vector<double> pr_s, pr_p;
        const double t_pr_s =
            time_ms([&] { pr_s = socsim::pagerank_serial(csr, params, nullptr); }, reps);
        const double t_pr_p =
            time_ms([&] { pr_p = socsim::pagerank_parallel(csr, params, nullptr); }, reps);
        std::printf("%-10s %8zu %10zu %12.3f %12.3f %9.2fx %12.3e\n", "pagerank", nodes,
                    csr.in_src.size(), t_pr_s, t_pr_p, t_pr_s / t_pr_p,
                    max_abs_diff(pr_s, pr_p));

        socsim::HitsScores h_s, h_p;
        const double t_h_s =
            time_ms([&] { h_s = socsim::hits_serial(csr, params, nullptr); }, reps);
        const double t_h_p =
            time_ms([&] { h_p = socsim::hits_parallel(csr, params, nullptr); }, reps);
        std::printf("%-10s %8zu %10zu %12.3f %12.3f %9.2fx %12.3e\n", "hits", nodes,
                    csr.in_src.size(), t_h_s, t_h_p, t_h_s / t_h_p,
                    max_abs_diff(h_s.authority, h_p.authority));
    }
    return 0;
}
