#pragma once

// Shared fixtures for the unit tests: seeded random graphs and brute-force
// reference computations that do not go through the library code under test.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include "spectral_indep/spectral_indep.hpp"

namespace testing_support {

using spectral_indep::Graph;
using spectral_indep::Vertex;

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<spectral_indep::Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline std::vector<Graph> random_corpus(std::size_t count, std::size_t n_min, std::size_t n_max, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_n(n_min, n_max);
    const double ps[] = {0.2, 0.5, 0.8};
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_graph(pick_n(rng), ps[i % 3], rng));
    return out;
}

// BFS distances with SIZE_MAX for unreachable pairs.
inline std::vector<std::vector<std::size_t>> bfs_distances(const Graph& g) {
    const std::size_t n = g.order(), inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
    for (Vertex s = 0; s < n; ++s) {
        std::queue<Vertex> q;
        d[s][s] = 0;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex v = 0; v < n; ++v)
                if (g.has_edge(u, v) && d[s][v] == inf) {
                    d[s][v] = d[s][u] + 1;
                    q.push(v);
                }
        }
    }
    return d;
}

// Shortest cycle length, 0 for forests.
inline std::size_t girth(const Graph& g) {
    const std::size_t n = g.order(), inf = std::numeric_limits<std::size_t>::max();
    std::size_t best = inf;
    for (Vertex s = 0; s < n; ++s) {
        std::vector<std::size_t> dist(n, inf);
        std::vector<Vertex> parent(n, n);
        std::queue<Vertex> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex v : g.neighbors(u)) {
                if (dist[v] == inf) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (parent[u] != v) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best == inf ? 0 : best;
}

// Largest subset of vertices at pairwise distance > k, by subset enumeration.
inline std::size_t brute_alpha_k(const Graph& g, std::size_t k) {
    const auto d = bfs_distances(g);
    const std::size_t n = g.order();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best) continue;
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u)
            if (mask >> u & 1)
                for (Vertex v = u + 1; v < n && ok; ++v)
                    if ((mask >> v & 1) && d[u][v] <= k) ok = false;
        if (ok) best = size;
    }
    return best;
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    std::vector<spectral_indep::Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// Unit vector in C^d drawn from a complex Gaussian.
inline Eigen::VectorXcd random_unit_vector(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXcd v(d);
    for (std::size_t i = 0; i < d; ++i) v(i) = {normal(rng), normal(rng)};
    return v / v.norm();
}

// Orthogonal projector onto the span of r random vectors.
inline Eigen::MatrixXcd random_projector(std::size_t d, std::size_t r, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd a(d, r);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < r; ++j) a(i, j) = {normal(rng), normal(rng)};
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(d, r);
    return q * q.adjoint();
}

}  // namespace testing_support
