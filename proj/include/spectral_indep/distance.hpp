#pragma once

#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "spectral_indep/graph.hpp"

namespace spectral_indep {

/// Shortest-path length, or unreachable. Unreachable is its own state and
/// never aliases a finite length.
class Distance {
public:
    constexpr Distance() = default;
    constexpr explicit Distance(std::size_t hops) : hops_(hops), finite_(true) {}
    static constexpr Distance infinite() { return Distance(); }

    constexpr bool finite() const noexcept { return finite_; }
    constexpr std::size_t hops() const { return hops_; }

    /// dist <= k; false for unreachable pairs.
    constexpr bool within(std::size_t k) const noexcept { return finite_ && hops_ <= k; }

    friend constexpr bool operator==(const Distance&, const Distance&) = default;

private:
    std::size_t hops_ = 0;
    bool finite_ = false;
};

class DistanceMatrix {
public:
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n) {}

    std::size_t order() const noexcept { return n_; }
    Distance operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
    Distance& at(Vertex u, Vertex v) { return d_[u * n_ + v]; }

    /// Largest finite entry (0 for a single vertex).
    std::size_t max_finite() const {
        std::size_t m = 0;
        for (const auto& d : d_)
            if (d.finite() && d.hops() > m) m = d.hops();
        return m;
    }

private:
    std::size_t n_;
    std::vector<Distance> d_;
};

/// All-pairs BFS.
inline DistanceMatrix distance_matrix(const Graph& g) {
    const std::size_t n = g.order();
    DistanceMatrix dm(n);
    std::vector<std::vector<Vertex>> nbrs(n);
    for (Vertex u = 0; u < n; ++u) nbrs[u] = g.neighbors(u);
    std::vector<std::size_t> dist(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
        std::queue<Vertex> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex v : nbrs[u])
                if (dist[v] == std::numeric_limits<std::size_t>::max()) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        for (Vertex v = 0; v < n; ++v)
            if (dist[v] != std::numeric_limits<std::size_t>::max()) dm.at(s, v) = Distance(dist[v]);
    }
    return dm;
}

/// G^[k]: u ~ v iff 1 <= dist(u, v) <= k.
inline Graph power_graph(const Graph& g, std::size_t k) {
    if (k == 0) throw ContractError("power_graph: k must be >= 1");
    if (k == 1) return g;
    const auto dm = distance_matrix(g);
    return graph_from_predicate(g.order(), [&](Vertex u, Vertex v) { return dm(u, v).within(k); });
}

/// Number of connected components.
inline std::size_t component_count(const Graph& g) {
    const auto dm = distance_matrix(g);
    std::vector<bool> seen(g.order(), false);
    std::size_t count = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (seen[u]) continue;
        ++count;
        for (Vertex v = 0; v < g.order(); ++v)
            if (dm(u, v).finite()) seen[v] = true;
    }
    return count;
}

}  // namespace spectral_indep
