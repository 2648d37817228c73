#pragma once

// Named graph families addressed as "family" or "family:p1,p2,...".

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "spectral_indep/errors.hpp"
#include "spectral_indep/graph.hpp"

namespace spectral_indep {

struct CatalogId {
    std::string family;
    std::vector<long long> params;

    std::string to_string() const {
        std::string s = family;
        for (std::size_t i = 0; i < params.size(); ++i) s += (i == 0 ? ":" : ",") + std::to_string(params[i]);
        return s;
    }
};

inline CatalogId parse_catalog_id(std::string_view text) {
    CatalogId id;
    auto colon = text.find(':');
    id.family = std::string(text.substr(0, colon));
    if (id.family.empty()) throw ParseError("catalog id: empty family name", 0);
    if (colon == std::string_view::npos) return id;
    std::size_t pos = colon + 1;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (token.empty()) throw ParseError("catalog id: empty parameter", pos);
        long long value = 0;
        for (std::size_t i = 0; i < token.size(); ++i) {
            char c = token[i];
            if (c < '0' || c > '9') throw ParseError("catalog id: parameter must be a nonnegative integer", pos + i);
            value = value * 10 + (c - '0');
            if (value > 1'000'000) throw ParseError("catalog id: parameter too large", pos + i);
        }
        id.params.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return id;
}

namespace detail {

inline void expect_params(const CatalogId& id, std::size_t count) {
    if (id.params.size() != count)
        throw ContractError("catalog: family '" + id.family + "' takes " + std::to_string(count) +
                            " parameter(s), got " + std::to_string(id.params.size()));
}

inline void require(bool ok, const CatalogId& id, const std::string& why) {
    if (!ok) throw ContractError("catalog: invalid parameters for '" + id.to_string() + "': " + why);
}

/// Returns (p, m) with q = p^m, or (0, 0) when q is not a prime power.
inline std::pair<long long, long long> prime_power(long long q) {
    if (q < 2) return {0, 0};
    long long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    long long m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    return q == 1 ? std::pair{p, m} : std::pair{0LL, 0LL};
}

/// Arithmetic in GF(p^m); elements are integers 0..q-1 read as base-p digit
/// vectors (polynomial coefficients, low degree first).
class FiniteField {
public:
    FiniteField(long long p, long long m) : p_(p), m_(m), q_(1) {
        for (long long i = 0; i < m; ++i) q_ *= p;
        modulus_ = find_irreducible();
    }

    long long order() const { return q_; }

    long long sub(long long a, long long b) const {
        auto x = digits(a), y = digits(b);
        for (long long i = 0; i < m_; ++i) x[i] = ((x[i] - y[i]) % p_ + p_) % p_;
        return value(x);
    }

    long long mul(long long a, long long b) const { return value(mul_digits(digits(a), digits(b), modulus_)); }

private:
    std::vector<long long> digits(long long a) const {
        std::vector<long long> d(m_);
        for (long long i = 0; i < m_; ++i, a /= p_) d[i] = a % p_;
        return d;
    }

    long long value(const std::vector<long long>& d) const {
        long long v = 0;
        for (long long i = m_ - 1; i >= 0; --i) v = v * p_ + d[i];
        return v;
    }

    // Product reduced modulo the monic polynomial x^m + modulus[m-1] x^(m-1) + ... + modulus[0].
    std::vector<long long> mul_digits(const std::vector<long long>& a, const std::vector<long long>& b,
                                      const std::vector<long long>& modulus) const {
        std::vector<long long> prod(2 * m_, 0);
        for (long long i = 0; i < m_; ++i)
            for (long long j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
        for (long long deg = 2 * m_ - 1; deg >= m_; --deg) {
            long long c = prod[deg];
            if (c == 0) continue;
            prod[deg] = 0;
            for (long long i = 0; i < m_; ++i)
                prod[deg - m_ + i] = ((prod[deg - m_ + i] - c * modulus[i]) % p_ + p_) % p_;
        }
        prod.resize(m_);
        return prod;
    }

    // A monic degree-m polynomial is irreducible iff the quotient ring has no
    // zero divisors; brute force is fine at catalog sizes.
    std::vector<long long> find_irreducible() const {
        if (m_ == 1) return {0};
        for (long long code = 0; code < q_; ++code) {
            auto cand = digits(code);
            bool field = true;
            for (long long a = 1; a < q_ && field; ++a)
                for (long long b = a; b < q_ && field; ++b)
                    if (value(mul_digits(digits(a), digits(b), cand)) == 0) field = false;
            if (field) return cand;
        }
        throw ContractError("catalog: no irreducible polynomial found");
    }

    long long p_, m_, q_;
    std::vector<long long> modulus_;
};

inline Graph circulant(std::size_t n, const std::vector<std::size_t>& jumps) {
    std::set<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (auto j : jumps) {
            Vertex v = (u + j) % n;
            if (u != v) edges.emplace(std::min(u, v), std::max(u, v));
        }
    return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

inline Graph generalized_petersen(std::size_t n, std::size_t k) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n + i);
    }
    std::set<Edge> inner;
    for (Vertex i = 0; i < n; ++i) {
        Vertex a = n + i, b = n + (i + k) % n;
        inner.emplace(std::min(a, b), std::max(a, b));
    }
    edges.insert(edges.end(), inner.begin(), inner.end());
    return Graph(2 * n, edges);
}

inline Graph kneser(std::size_t n, std::size_t k) {
    std::vector<unsigned long long> subsets;
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask)
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) == k) subsets.push_back(mask);
    // Colex order over bitmasks; fixed so vertex numbering is reproducible.
    return graph_from_predicate(subsets.size(), [&](Vertex u, Vertex v) { return (subsets[u] & subsets[v]) == 0; });
}

}  // namespace detail

/// Builds a catalog graph. Families:
///   empty:n  complete:n  cycle:n  path:n  star:n  complete_bipartite:a,b
///   complete_multipartite:a,b,...  petersen  kneser:n,k  hypercube:d
///   folded_cube:d  paley:q  generalized_petersen:n,k  andrasfai:k
///   desargues  dodecahedron  heawood  grotzsch  clebsch  shrikhande
///   cuboctahedron
inline Graph catalog(const CatalogId& id) {
    using detail::expect_params;
    using detail::require;
    const auto& f = id.family;
    const auto& p = id.params;

    if (f == "empty") {
        expect_params(id, 1);
        require(p[0] >= 1, id, "n >= 1");
        return Graph(static_cast<std::size_t>(p[0]), {});
    }
    if (f == "complete") {
        expect_params(id, 1);
        require(p[0] >= 1, id, "n >= 1");
        return graph_from_predicate(p[0], [](Vertex, Vertex) { return true; });
    }
    if (f == "cycle") {
        expect_params(id, 1);
        require(p[0] >= 3, id, "n >= 3");
        return detail::circulant(p[0], {1});
    }
    if (f == "path") {
        expect_params(id, 1);
        require(p[0] >= 1, id, "n >= 1");
        return graph_from_predicate(p[0], [](Vertex u, Vertex v) { return v == u + 1; });
    }
    if (f == "star") {
        expect_params(id, 1);
        require(p[0] >= 1, id, "n >= 1 leaves");
        return graph_from_predicate(p[0] + 1, [](Vertex u, Vertex) { return u == 0; });
    }
    if (f == "complete_bipartite" || f == "complete_multipartite") {
        if (f == "complete_bipartite") expect_params(id, 2);
        require(!p.empty(), id, "at least one part");
        require(std::all_of(p.begin(), p.end(), [](long long x) { return x >= 1; }), id, "part sizes >= 1");
        std::vector<std::size_t> part;
        for (std::size_t i = 0; i < p.size(); ++i) part.insert(part.end(), static_cast<std::size_t>(p[i]), i);
        return graph_from_predicate(part.size(), [&](Vertex u, Vertex v) { return part[u] != part[v]; });
    }
    if (f == "petersen") {
        expect_params(id, 0);
        return detail::kneser(5, 2);
    }
    if (f == "kneser") {
        expect_params(id, 2);
        require(p[1] >= 1 && p[0] >= 2 * p[1] && p[0] <= 20, id, "1 <= k, 2k <= n <= 20");
        return detail::kneser(p[0], p[1]);
    }
    if (f == "hypercube") {
        expect_params(id, 1);
        require(p[0] >= 1 && p[0] <= 12, id, "1 <= d <= 12");
        return graph_from_predicate(1ULL << p[0], [](Vertex u, Vertex v) { return __builtin_popcountll(u ^ v) == 1; });
    }
    if (f == "folded_cube") {
        expect_params(id, 1);
        require(p[0] >= 3 && p[0] <= 13, id, "3 <= d <= 13");
        const unsigned long long all = (1ULL << (p[0] - 1)) - 1;
        return graph_from_predicate(1ULL << (p[0] - 1), [all](Vertex u, Vertex v) {
            return __builtin_popcountll(u ^ v) == 1 || (u ^ v) == all;
        });
    }
    if (f == "paley") {
        expect_params(id, 1);
        auto [prime, power] = detail::prime_power(p[0]);
        require(prime != 0, id, "q must be a prime power");
        require(p[0] % 4 == 1, id, "q = 1 mod 4");
        require(p[0] <= 101, id, "q <= 101");
        detail::FiniteField field(prime, power);
        std::vector<bool> square(field.order(), false);
        for (long long x = 1; x < field.order(); ++x) square[field.mul(x, x)] = true;
        return graph_from_predicate(field.order(), [&](Vertex u, Vertex v) {
            return square[field.sub(static_cast<long long>(v), static_cast<long long>(u))];
        });
    }
    if (f == "generalized_petersen") {
        expect_params(id, 2);
        require(p[0] >= 3 && p[1] >= 1 && 2 * p[1] < p[0], id, "n >= 3, 1 <= k < n/2");
        return detail::generalized_petersen(p[0], p[1]);
    }
    if (f == "andrasfai") {
        expect_params(id, 1);
        require(p[0] >= 1, id, "k >= 1");
        const std::size_t n = 3 * p[0] - 1;
        std::vector<std::size_t> jumps;
        for (std::size_t j = 1; j < n; ++j)
            if (j % 3 == 1) jumps.push_back(j);
        return detail::circulant(n, jumps);
    }
    if (f == "desargues") {
        expect_params(id, 0);
        return detail::generalized_petersen(10, 3);
    }
    if (f == "dodecahedron") {
        expect_params(id, 0);
        return detail::generalized_petersen(10, 2);
    }
    if (f == "heawood") {
        expect_params(id, 0);
        // Points 0..6, lines 7..13; line i is {i, i+1, i+3} mod 7.
        std::vector<Edge> edges;
        for (Vertex i = 0; i < 7; ++i)
            for (Vertex off : {0, 1, 3}) edges.emplace_back((i + off) % 7, 7 + i);
        return Graph(14, edges);
    }
    if (f == "grotzsch") {
        expect_params(id, 0);
        // Mycielskian of C5: cycle 0..4, shadows 5..9, apex 10.
        std::vector<Edge> edges;
        for (Vertex i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(5 + i, (i + 1) % 5);
            edges.emplace_back(5 + i, (i + 4) % 5);
            edges.emplace_back(5 + i, 10);
        }
        return Graph(11, edges);
    }
    if (f == "clebsch") {
        expect_params(id, 0);
        return catalog(CatalogId{"folded_cube", {5}});
    }
    if (f == "shrikhande") {
        expect_params(id, 0);
        return graph_from_predicate(16, [](Vertex u, Vertex v) {
            int dx = static_cast<int>((v / 4 + 4 - u / 4) % 4), dy = static_cast<int>((v % 4 + 4 - u % 4) % 4);
            return (dx == 0 && (dy == 1 || dy == 3)) || (dy == 0 && (dx == 1 || dx == 3)) ||
                   (dx == dy && (dx == 1 || dx == 3));
        });
    }
    if (f == "cuboctahedron") {
        expect_params(id, 0);
        // Line graph of the cube Q3.
        auto cube = catalog(CatalogId{"hypercube", {3}});
        const auto& e = cube.edges();
        return graph_from_predicate(e.size(), [&](Vertex a, Vertex b) {
            return e[a].first == e[b].first || e[a].first == e[b].second || e[a].second == e[b].first ||
                   e[a].second == e[b].second;
        });
    }
    throw ContractError("catalog: unknown family '" + f + "'");
}

inline Graph catalog(std::string_view id) { return catalog(parse_catalog_id(id)); }

/// Fixed list of named instances used by catalog-wide scans and tests.
inline std::vector<std::string> default_catalog_ids() {
    return {"cycle:5",       "cycle:7",        "cycle:9",          "cycle:11",
            "cycle:6",       "path:2",         "path:5",           "path:8",
            "complete:5",    "complete_bipartite:3,3",             "complete_bipartite:2,5",
            "complete_multipartite:2,2,2",     "complete_multipartite:1,2,3",
            "petersen",      "kneser:6,2",     "hypercube:3",      "hypercube:4",
            "folded_cube:5", "paley:5",        "paley:9",          "paley:13",
            "paley:17",      "andrasfai:2",    "andrasfai:3",      "andrasfai:4",
            "desargues",     "dodecahedron",   "heawood",          "grotzsch",
            "clebsch",       "shrikhande",     "cuboctahedron",    "empty:4"};
}

}  // namespace spectral_indep
