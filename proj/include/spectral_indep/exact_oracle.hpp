#pragma once

// Exact independence numbers. Two independent routes: a bitset
// branch-and-bound (maximum clique in the complement, bounded by greedy clique
// covers of the candidate set) and a naive subset enumerator kept as a
// cross-check for small graphs.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "spectral_indep/distance.hpp"
#include "spectral_indep/errors.hpp"
#include "spectral_indep/graph.hpp"

namespace spectral_indep {

/// Largest vertex count the bitset representation holds.
inline constexpr std::size_t kOracleHardCap = 128;
inline constexpr std::size_t kOracleDefaultBudget = 40;
inline constexpr std::size_t kNaiveEnumeratorCap = 20;

/// A claimed set of vertices at pairwise distance > k.
struct IndependentSetCert {
    std::size_t k = 1;
    std::vector<Vertex> vertices;
};

struct ExactResult {
    std::size_t size = 0;
    IndependentSetCert cert;
};

namespace detail {

class VertexSet {
public:
    void set(std::size_t v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(std::size_t v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool test(std::size_t v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
    bool empty() const { return (w_[0] | w_[1]) == 0; }
    std::size_t count() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
    std::size_t first() const {
        return w_[0] ? std::countr_zero(w_[0]) : 64 + std::countr_zero(w_[1]);
    }
    VertexSet& operator&=(const VertexSet& o) {
        w_[0] &= o.w_[0];
        w_[1] &= o.w_[1];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    static VertexSet range(std::size_t lo, std::size_t hi) {
        VertexSet s;
        for (std::size_t v = lo; v < hi; ++v) s.set(v);
        return s;
    }

private:
    std::array<std::uint64_t, 2> w_{};
};

class MaxIndependentSet {
public:
    explicit MaxIndependentSet(const Graph& g) : n_(g.order()), adj_(n_), nonadj_(n_) {
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = 0; v < n_; ++v) {
                if (u == v) continue;
                if (g.has_edge(u, v))
                    adj_[u].set(v);
                else
                    nonadj_[u].set(v);
            }
    }

    /// Size of a maximum independent set within `candidates`; the search stops
    /// as soon as `stop_at` is reached.
    std::size_t solve(const VertexSet& candidates, std::size_t stop_at) {
        best_ = 0;
        stop_at_ = stop_at;
        if (candidates.empty() || stop_at == 0) return 0;
        expand(candidates, 0);
        return best_;
    }

    std::size_t solve(const VertexSet& candidates) { return solve(candidates, n_ + 1); }

    /// Lexicographically smallest maximum independent set.
    std::vector<Vertex> lex_smallest_maximum() {
        VertexSet cand = VertexSet::range(0, n_);
        std::size_t need = solve(cand);
        std::vector<Vertex> chosen;
        for (Vertex v = 0; v < n_ && need > 0; ++v) {
            if (!cand.test(v)) continue;
            VertexSet rest = cand & nonadj_[v] & VertexSet::range(v + 1, n_);
            if (need == 1 || solve(rest, need - 1) >= need - 1) {
                chosen.push_back(v);
                cand = rest;
                --need;
            } else {
                cand.reset(v);
            }
        }
        return chosen;
    }

    const VertexSet& nonadjacent(Vertex v) const { return nonadj_[v]; }

private:
    // Greedy clique cover: an independent set meets each clique at most once,
    // so the cover index bounds how much the current set can still grow.
    void clique_cover(VertexSet p, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
        order.clear();
        bound.clear();
        std::size_t clique = 0;
        while (!p.empty()) {
            ++clique;
            VertexSet q = p;
            while (!q.empty()) {
                std::size_t v = q.first();
                p.reset(v);
                q.reset(v);
                q &= adj_[v];
                order.push_back(v);
                bound.push_back(clique);
            }
        }
    }

    void expand(VertexSet p, std::size_t size) {
        std::vector<std::size_t> order, bound;
        clique_cover(p, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (size + bound[i] <= best_ || best_ >= stop_at_) return;
            const std::size_t v = order[i];
            VertexSet next = p & nonadj_[v];
            if (next.empty()) {
                best_ = std::max(best_, size + 1);
            } else {
                expand(next, size + 1);
            }
            p.reset(v);
        }
    }

    std::size_t n_;
    std::vector<VertexSet> adj_;
    std::vector<VertexSet> nonadj_;
    std::size_t best_ = 0;
    std::size_t stop_at_ = 0;
};

}  // namespace detail

/// Maximum independent set by branch-and-bound. Returns the lexicographically
/// smallest maximum set. Graphs larger than `budget` raise BudgetError.
inline ExactResult alpha_exact(const Graph& g, std::size_t budget = kOracleDefaultBudget) {
    if (budget > kOracleHardCap) budget = kOracleHardCap;
    if (g.order() > budget)
        throw BudgetError("exact oracle: n = " + std::to_string(g.order()) + " exceeds budget " +
                          std::to_string(budget));
    detail::MaxIndependentSet solver(g);
    ExactResult r;
    r.cert.k = 1;
    r.cert.vertices = solver.lex_smallest_maximum();
    r.size = r.cert.vertices.size();
    return r;
}

/// Exhaustive enumeration over all vertex subsets (n <= 20). Cross-check only.
inline ExactResult alpha_naive(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kNaiveEnumeratorCap)
        throw BudgetError("naive enumerator: n = " + std::to_string(n) + " exceeds " +
                          std::to_string(kNaiveEnumeratorCap));
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    const std::uint32_t total = n == 0 ? 1 : (1u << n);
    std::vector<char> independent(total, 0);
    independent[0] = 1;
    std::uint32_t best = 0;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        const std::uint32_t low = static_cast<std::uint32_t>(std::countr_zero(mask));
        const std::uint32_t rest = mask & (mask - 1);
        independent[mask] = independent[rest] && (adj[low] & mask) == 0;
        if (!independent[mask]) continue;
        const int pc = std::popcount(mask), pb = std::popcount(best);
        if (pc > pb) {
            best = mask;
        } else if (pc == pb) {
            // Same size: the list holding the smallest differing vertex is lex-smaller.
            const std::uint32_t diff = mask ^ best;
            if (mask & (diff & (~diff + 1))) best = mask;
        }
    }
    ExactResult r;
    for (Vertex v = 0; v < n; ++v)
        if ((best >> v) & 1) r.cert.vertices.push_back(v);
    r.size = r.cert.vertices.size();
    return r;
}

/// True iff every pair in the certificate is at distance > cert.k.
/// Out-of-range or repeated vertices are a malformed certificate.
inline bool verify_independent_set(const Graph& g, const IndependentSetCert& cert) {
    std::vector<bool> seen(g.order(), false);
    for (Vertex v : cert.vertices) {
        if (v >= g.order())
            throw CertificateError("independent-set certificate: vertex " + std::to_string(v) + " out of range");
        if (seen[v]) throw CertificateError("independent-set certificate: vertex " + std::to_string(v) + " repeated");
        seen[v] = true;
    }
    if (cert.vertices.size() < 2) return true;
    const auto dm = distance_matrix(g);
    for (std::size_t i = 0; i < cert.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < cert.vertices.size(); ++j)
            if (dm(cert.vertices[i], cert.vertices[j]).within(cert.k)) return false;
    return true;
}

/// alpha_k(g) = alpha(g^[k]); the certificate is re-verified on g itself.
inline ExactResult alpha_k_exact(const Graph& g, std::size_t k, std::size_t budget = kOracleDefaultBudget) {
    if (k == 0) throw ContractError("alpha_k_exact: k must be >= 1");
    ExactResult r = alpha_exact(power_graph(g, k), budget);
    r.cert.k = k;
    if (!verify_independent_set(g, r.cert))
        throw Error("exact oracle: internal error, certificate fails distance verification");
    return r;
}

}  // namespace spectral_indep
