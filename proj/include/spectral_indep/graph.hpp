#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spectral_indep/errors.hpp"

namespace spectral_indep {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted, so two graphs with the same
/// vertex count and edge set compare equal regardless of insertion order.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

    Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
        finalize();
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_edge(Vertex u, Vertex v) const {
        return u < n_ && v < n_ && adj_[u * n_ + v] != 0;
    }

    std::size_t degree(Vertex u) const {
        std::size_t d = 0;
        for (Vertex v = 0; v < n_; ++v) d += adj_[u * n_ + v];
        return d;
    }

    std::vector<Vertex> neighbors(Vertex u) const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < n_; ++v)
            if (adj_[u * n_ + v]) out.push_back(v);
        return out;
    }

    std::vector<std::size_t> degrees() const {
        std::vector<std::size_t> d(n_);
        for (Vertex u = 0; u < n_; ++u) d[u] = degree(u);
        return d;
    }

    std::size_t min_degree() const {
        auto d = degrees();
        return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
    }

    std::size_t max_degree() const {
        auto d = degrees();
        return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
    }

    /// Returns true and sets `delta` when every vertex has the same degree.
    bool is_regular(std::size_t* delta = nullptr) const {
        auto d = degrees();
        if (d.empty()) return false;
        bool regular = std::all_of(d.begin(), d.end(), [&](std::size_t x) { return x == d[0]; });
        if (regular && delta) *delta = d[0];
        return regular;
    }

    Eigen::MatrixXd adjacency_matrix() const {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
        for (auto [u, v] : edges_) a(u, v) = a(v, u) = 1.0;
        return a;
    }

    /// Adjacency in exact integers, row-major.
    std::vector<long long> adjacency_integers() const {
        return std::vector<long long>(adj_.begin(), adj_.end());
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void add_edge(Vertex u, Vertex v) {
        if (u >= n_ || v >= n_)
            throw ContractError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has an endpoint outside 0.." + std::to_string(n_ == 0 ? 0 : n_ - 1));
        if (u == v) throw ContractError("self-loop at vertex " + std::to_string(u));
        if (adj_[u * n_ + v])
            throw ContractError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }

    void finalize() { std::sort(edges_.begin(), edges_.end()); }

    std::size_t n_ = 0;
    std::vector<char> adj_;
    std::vector<Edge> edges_;
};

/// Builds a graph from an adjacency predicate evaluated on every pair u < v.
template <typename Pred>
Graph graph_from_predicate(std::size_t n, Pred&& adjacent) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace spectral_indep
