#pragma once

// Test-only oracles, all independent of the library's solver paths: dense
// linear algebra for PageRank/HITS, an explicit fractional-table entropy, and
// small random graph/event generators.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "socsim/model.hpp"
#include "socsim/rng.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

// Solve Ax = b by Gaussian elimination with partial pivoting.
inline std::vector<double> solve_linear(Matrix a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
        x[i] = acc / a[i][i];
    }
    return x;
}

// PageRank as the solution of (I - d M) x = (1-d)/n * 1, where M is the
// column-stochastic transition matrix with dangling columns replaced by 1/n.
inline std::vector<double> pagerank_dense(const socsim::AnnotationGraph& g, double damping) {
    const std::size_t n = g.node_count();
    Matrix m(n, std::vector<double>(n, 0.0));
    for (std::size_t u = 0; u < n; ++u) {
        if (g.out_weight(u) == 0.0) {
            for (std::size_t v = 0; v < n; ++v) m[v][u] = 1.0 / static_cast<double>(n);
        } else {
            for (const auto& [v, w] : g.out_edges(u)) m[v][u] = w / g.out_weight(u);
        }
    }
    Matrix a(n, std::vector<double>(n, 0.0));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a[r][c] = (r == c ? 1.0 : 0.0) - damping * m[r][c];
    }
    return solve_linear(std::move(a), std::vector<double>(n, (1.0 - damping) / n));
}

// Eigen-decomposition of a symmetric matrix by the cyclic Jacobi rotation
// method; returns (eigenvalues, eigenvectors-as-columns).
inline std::pair<std::vector<double>, Matrix> jacobi_eigen(Matrix a) {
    const std::size_t n = a.size();
    Matrix v(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-24) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
    return {eig, v};
}

// HITS authority as the dominant eigenvector of W^T W (W the weighted
// adjacency matrix), sign-fixed to be nonnegative and L2-normalized.
inline std::vector<double> hits_authority_dense(const socsim::AnnotationGraph& g) {
    const std::size_t n = g.node_count();
    Matrix w(n, std::vector<double>(n, 0.0));
    for (std::size_t u = 0; u < n; ++u) {
        for (const auto& [v, ww] : g.out_edges(u)) w[u][v] = ww;
    }
    Matrix wtw(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += w[k][i] * w[k][j];
            wtw[i][j] = acc;
        }
    }
    auto [eig, vecs] = jacobi_eigen(std::move(wtw));
    double lam = eig[0];
    for (double e : eig) lam = std::max(lam, e);
    // With a degenerate dominant eigenvalue (e.g. symmetric disconnected
    // components) the iteration converges to the projection of its starting
    // vector W^T 1 onto the dominant eigenspace, so project rather than pick
    // an arbitrary basis vector.
    std::vector<double> w0(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) w0[i] += w[k][i];
    }
    std::vector<double> a(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        if (eig[j] < lam - 1e-9 * std::max(lam, 1.0)) continue;
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += vecs[i][j] * w0[i];
        for (std::size_t i = 0; i < n; ++i) a[i] += dot * vecs[i][j];
    }
    double norm = 0.0, sum = 0.0;
    for (double x : a) {
        norm += x * x;
        sum += x;
    }
    norm = std::sqrt(norm);
    if (norm > 0.0) {
        for (double& x : a) x = (sum < 0 ? -x : x) / norm;
    }
    return a;
}

// Entropy by materializing the fractional annotation table: one row per
// concept (plus the virtual one), unannotated instances spread evenly.
inline double entropy_brute(const std::vector<std::uint32_t>& counts, std::size_t m) {
    std::vector<double> mass(counts.begin(), counts.end());
    if (m > 0) mass.push_back(0.0);
    for (std::size_t inst = 0; inst < m; ++inst) {
        for (double& row : mass) row += 1.0 / static_cast<double>(mass.size());
    }
    double total = 0.0;
    for (double row : mass) total += row;
    double h = 0.0;
    for (double row : mass) {
        const double p = row / total;
        if (p > 0.0) h -= p * std::log(p);
    }
    return h;
}

// Random weighted digraph on n nodes (all registered as actors; the rankers
// do not care about kinds).
inline socsim::AnnotationGraph random_graph(std::size_t n, socsim::RngStream& rng) {
    socsim::AnnotationGraph g;
    for (std::size_t i = 0; i < n; ++i)
        g.add_node(socsim::EntityKind::Actor, static_cast<std::uint32_t>(i));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u != v && rng.u01() < 0.35) {
                g.add_edge_weight(u, v, 1.0 + static_cast<double>(rng.uniform_index(3)));
            }
        }
    }
    return g;
}

// Orderings must agree except within groups whose reference scores are closer
// than tie_tol (numerically undecidable order).
inline bool same_ordering(const std::vector<std::pair<std::uint32_t, double>>& got,
                          const std::vector<std::pair<std::uint32_t, double>>& ref,
                          double tie_tol = 1e-9) {
    if (got.size() != ref.size()) return false;
    std::size_t i = 0;
    while (i < ref.size()) {
        std::size_t j = i + 1;
        while (j < ref.size() && std::abs(ref[j].second - ref[i].second) <= tie_tol) ++j;
        std::vector<std::uint32_t> a, b;
        for (std::size_t k = i; k < j; ++k) {
            a.push_back(got[k].first);
            b.push_back(ref[k].first);
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
        i = j;
    }
    return true;
}

}  // namespace oracle
