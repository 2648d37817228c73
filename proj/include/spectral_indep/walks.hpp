#pragma once

// Exact integer powers of the adjacency matrix (walk counts).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spectral_indep/errors.hpp"
#include "spectral_indep/graph.hpp"

namespace spectral_indep {

/// Row-major n x n integer matrix.
struct IntMatrix {
    std::size_t n = 0;
    std::vector<std::int64_t> a;

    std::int64_t operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m{n, std::vector<std::int64_t>(n * n, 0)};
        for (std::size_t i = 0; i < n; ++i) m.a[i * n + i] = 1;
        return m;
    }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        const std::size_t n = x.n;
        IntMatrix z{n, std::vector<std::int64_t>(n * n, 0)};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                const std::int64_t xil = x.a[i * n + l];
                if (xil == 0) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    std::int64_t prod = 0;
                    if (__builtin_mul_overflow(xil, y.a[l * n + j], &prod) ||
                        __builtin_add_overflow(z.a[i * n + j], prod, &z.a[i * n + j]))
                        throw Error("walk count overflows 64-bit integers");
                }
            }
        return z;
    }
};

inline IntMatrix adjacency_int(const Graph& g) {
    IntMatrix m{g.order(), std::vector<std::int64_t>(g.order() * g.order(), 0)};
    for (auto [u, v] : g.edges()) m.a[u * m.n + v] = m.a[v * m.n + u] = 1;
    return m;
}

/// A^0, A^1, ..., A^max_power.
inline std::vector<IntMatrix> adjacency_powers(const Graph& g, std::size_t max_power) {
    std::vector<IntMatrix> powers{IntMatrix::identity(g.order())};
    if (max_power == 0) return powers;
    const IntMatrix a = adjacency_int(g);
    powers.push_back(a);
    for (std::size_t j = 2; j <= max_power; ++j) powers.push_back(powers.back() * a);
    return powers;
}

}  // namespace spectral_indep
