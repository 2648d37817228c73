#pragma once

// Hermitian weightings H o A and the search for weightings whose inertia bound
// equals the independence number.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "spectral_indep/bounds.hpp"
#include "spectral_indep/errors.hpp"
#include "spectral_indep/exact_oracle.hpp"
#include "spectral_indep/graph.hpp"
#include "spectral_indep/polynomial.hpp"
#include "spectral_indep/rational.hpp"
#include "spectral_indep/spectra.hpp"
#include "spectral_indep/walks.hpp"

namespace spectral_indep {

enum class Field { real_symmetric, hermitian };

inline const char* to_string(Field f) { return f == Field::real_symmetric ? "real" : "hermitian"; }

/// Hermitian matrix supported on the edges of a graph (zero diagonal).
/// Real-symmetric weightings keep a zero imaginary part.
struct WeightMatrix {
    Field field = Field::real_symmetric;
    ComplexMatrix matrix;

    std::size_t order() const { return static_cast<std::size_t>(matrix.rows()); }
    RealMatrix real_part() const { return matrix.real(); }
};

/// Throws PatternError unless w is Hermitian, zero on the diagonal and zero
/// off the edge set of g.
inline void check_pattern(const Graph& g, const WeightMatrix& w) {
    const std::size_t n = g.order();
    if (w.order() != n) throw PatternError("weight matrix order does not match the graph");
    detail::check_hermitian(w.matrix);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (w.matrix(u, v) == std::complex<double>(0.0)) continue;
            if (u == v) throw PatternError("weight matrix has a nonzero diagonal entry at " + std::to_string(u));
            if (!g.has_edge(u, v))
                throw PatternError("weight matrix is nonzero on non-edge (" + std::to_string(u) + "," +
                                   std::to_string(v) + ")");
        }
    if (w.field == Field::real_symmetric && w.matrix.imag().cwiseAbs().maxCoeff() != 0.0)
        throw PatternError("real-symmetric weight matrix has imaginary entries");
}

/// H o A for an arbitrary Hermitian H.
inline WeightMatrix hadamard(const Graph& g, const ComplexMatrix& h, Field field = Field::hermitian) {
    detail::check_hermitian(h);
    WeightMatrix w{field, ComplexMatrix::Zero(g.order(), g.order())};
    for (auto [u, v] : g.edges()) {
        w.matrix(u, v) = h(u, v);
        w.matrix(v, u) = h(v, u);
    }
    return w;
}

inline WeightMatrix unit_weighting(const Graph& g) {
    return {Field::real_symmetric, g.adjacency_matrix().cast<std::complex<double>>()};
}

/// i.i.d. standard normal weights on edges (complex normal with unit variance
/// for the Hermitian field), symmetrized. Deterministic for a given seed.
inline WeightMatrix random_weighting(const Graph& g, std::uint64_t seed, Field field = Field::real_symmetric) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    WeightMatrix w{field, ComplexMatrix::Zero(g.order(), g.order())};
    const double s = std::sqrt(0.5);
    for (auto [u, v] : g.edges()) {
        std::complex<double> z;
        if (field == Field::real_symmetric) {
            z = normal(rng);
        } else {
            const double re = normal(rng), im = normal(rng);
            z = {s * re, s * im};
        }
        w.matrix(u, v) = z;
        w.matrix(v, u) = std::conj(z);
    }
    return w;
}

/// n0 + min(n+, n-) of a weighting, after checking its zero pattern.
inline BoundReport weighted_inertia_bound(const Graph& g, const WeightMatrix& w,
                                          const ZeroPolicy& policy = ZeroPolicy::tolerance()) {
    check_pattern(g, w);
    auto r = w.field == Field::real_symmetric ? inertia_bound(w.real_part(), policy) : inertia_bound(w.matrix, policy);
    r.bound = "weighted_inertia";
    return r;
}

/// Exact inertia bound of a weighting after rounding every entry to the grid
/// 1/denominator. Returns the bound and writes the rounded matrix to `rounded`.
inline std::size_t exact_rounded_bound(const WeightMatrix& w, long long denominator, WeightMatrix* rounded = nullptr) {
    const std::size_t n = w.order();
    Inertia in;
    if (w.field == Field::real_symmetric) {
        std::vector<Rational> m(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i * n + j] = round_to_grid(w.matrix(i, j).real(), denominator);
        if (rounded) {
            *rounded = WeightMatrix{w.field, ComplexMatrix::Zero(n, n)};
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) rounded->matrix(i, j) = static_cast<double>(m[i * n + j]);
        }
        in = exact_inertia(std::move(m), n);
    } else {
        std::vector<GaussianRational> m(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i * n + j] = round_to_grid(w.matrix(i, j), denominator);
        if (rounded) {
            *rounded = WeightMatrix{w.field, ComplexMatrix::Zero(n, n)};
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    rounded->matrix(i, j) = {static_cast<double>(m[i * n + j].re), static_cast<double>(m[i * n + j].im)};
        }
        in = exact_inertia(std::move(m), n);
    }
    return in.n_zero + std::min(in.n_plus, in.n_minus);
}

struct SearchConfig {
    std::size_t restarts = 20;
    std::size_t iterations = 2000;
    double initial_step = 0.5;
    double step_decay = 0.999;
    double min_step = 1e-3;
    Field field = Field::real_symmetric;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    long long grid_denominator = 10000;
    double epsilon = 1e-9;
    std::size_t oracle_budget = kOracleDefaultBudget;
};

struct SearchResult {
    WeightMatrix best_weights;
    std::size_t best_bound = 0;
    std::size_t target = 0;                    // alpha(g)
    bool tight = false;                        // best_bound == target, confirmed exactly
    std::optional<std::size_t> tight_restart;  // first restart reaching a confirmed tight weighting
    std::size_t iterations = 0;                // perturbation steps over the merged restarts
    std::size_t restarts_run = 0;
    std::size_t visited = 0;                   // weightings evaluated over the merged restarts
    std::size_t min_visited_bound = 0;         // min bound over every visited weighting
    std::uint64_t seed = 0;
};

namespace detail {

struct Score {
    std::size_t bound = 0;
    double surrogate = 0.0;

    friend bool operator<=(const Score& a, const Score& b) {
        return a.bound < b.bound || (a.bound == b.bound && a.surrogate <= b.surrogate);
    }
    friend bool operator<(const Score& a, const Score& b) {
        return a.bound < b.bound || (a.bound == b.bound && a.surrogate < b.surrogate);
    }
};

/// Integer bound plus a tiebreak: the smallest |lambda| on the minority sign
/// side, relative to the spectral radius. Driving it to zero moves one
/// eigenvalue across, which lowers min(n+, n-).
inline Score score_of(const Spectrum& s, double epsilon) {
    const Inertia in = classify(s, ZeroPolicy::tolerance(epsilon));
    Score sc;
    sc.bound = in.n_zero + std::min(in.n_plus, in.n_minus);
    const double thr = ZeroPolicy::tolerance(epsilon).threshold(s.spectral_radius());
    const bool minority_positive = in.n_plus <= in.n_minus;
    double closest = std::numeric_limits<double>::infinity();
    for (double x : s.eigenvalues) {
        if (std::abs(x) <= thr) continue;
        if ((x > 0) == minority_positive) closest = std::min(closest, std::abs(x));
    }
    const double radius = std::max(s.spectral_radius(), 1e-300);
    sc.surrogate = std::isfinite(closest) ? closest / radius : 0.0;
    return sc;
}

inline Spectrum spectrum_of(const WeightMatrix& w) {
    if (w.field == Field::real_symmetric) return eigenvalues_hermitian(w.real_part());
    return eigenvalues_hermitian(w.matrix);
}

struct RestartOutcome {
    WeightMatrix best;
    Score best_score;
    bool tight = false;
    std::size_t iterations = 0;
    std::size_t visited = 0;
    std::size_t min_visited_bound = std::numeric_limits<std::size_t>::max();
};

inline std::uint64_t restart_seed(std::uint64_t seed, std::size_t restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::uint32_t parts[2];
    seq.generate(parts, parts + 2);
    return (static_cast<std::uint64_t>(parts[0]) << 32) | parts[1];
}

inline RestartOutcome run_restart(const Graph& g, std::size_t alpha, const SearchConfig& cfg, std::size_t restart) {
    std::mt19937_64 rng(restart_seed(cfg.seed, restart));
    WeightMatrix current = restart == 0 ? unit_weighting(g) : random_weighting(g, rng(), cfg.field);
    current.field = cfg.field;

    RestartOutcome out;
    auto confirm = [&](const WeightMatrix& w) {
        WeightMatrix rounded;
        if (exact_rounded_bound(w, cfg.grid_denominator, &rounded) != alpha) return false;
        out.best = rounded;
        return true;
    };
    auto visit = [&](const WeightMatrix& w) {
        Score sc = score_of(spectrum_of(w), cfg.epsilon);
        ++out.visited;
        out.min_visited_bound = std::min(out.min_visited_bound, sc.bound);
        return sc;
    };

    Score cur = visit(current);
    out.best = current;
    out.best_score = cur;
    if (cur.bound == alpha && confirm(current)) {
        out.tight = true;
        return out;
    }

    const auto& edges = g.edges();
    if (edges.empty()) return out;
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    std::normal_distribution<double> normal(0.0, 1.0);
    double step = cfg.initial_step;

    for (std::size_t it = 0; it < cfg.iterations; ++it) {
        ++out.iterations;
        auto [u, v] = edges[pick(rng)];
        WeightMatrix cand = current;
        std::complex<double> z = cand.matrix(u, v);
        if (cfg.field == Field::real_symmetric)
            z += step * normal(rng);
        else {
            const double dre = normal(rng), dim = normal(rng);
            z += std::complex<double>(step * dre, step * dim);
        }
        cand.matrix(u, v) = z;
        cand.matrix(v, u) = std::conj(z);
        step = std::max(cfg.min_step, step * cfg.step_decay);

        Score sc = visit(cand);
        if (!(sc <= cur)) continue;
        current = std::move(cand);
        cur = sc;
        if (cur < out.best_score) {
            out.best = current;
            out.best_score = cur;
        }
        if (cur.bound == alpha && confirm(current)) {
            out.best_score = cur;
            out.tight = true;
            return out;
        }
    }
    return out;
}

}  // namespace detail

/// Random restarts of coordinate-wise Gaussian hill climbing on edge weights,
/// minimizing the inertia bound. Restart 0 starts from the unweighted
/// adjacency matrix. A candidate counts as tight only after its weights,
/// rounded to the rational grid, reproduce bound == alpha in exact arithmetic.
///
/// Restarts run on `threads` workers. The result merges restarts 0..r* where
/// r* is the first restart that found a tight weighting (or all of them), so
/// it depends only on (g, config) and never on scheduling.
inline SearchResult search_tight_weights(const Graph& g, const SearchConfig& cfg = {}) {
    const std::size_t alpha = alpha_exact(g, cfg.oracle_budget).size;
    const std::size_t restarts = std::max<std::size_t>(1, cfg.restarts);
    std::vector<std::optional<detail::RestartOutcome>> outcomes(restarts);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_tight{restarts};

    auto worker = [&] {
        for (;;) {
            const std::size_t r = next.fetch_add(1);
            if (r >= restarts) return;
            if (r > first_tight.load()) continue;
            outcomes[r] = detail::run_restart(g, alpha, cfg, r);
            if (outcomes[r]->tight) {
                std::size_t seen = first_tight.load();
                while (r < seen && !first_tight.compare_exchange_weak(seen, r)) {
                }
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(cfg.threads, 1, restarts);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    const std::size_t last = std::min(first_tight.load(), restarts - 1);
    SearchResult res;
    res.target = alpha;
    res.seed = cfg.seed;
    res.min_visited_bound = std::numeric_limits<std::size_t>::max();
    std::optional<detail::Score> best;
    for (std::size_t r = 0; r <= last; ++r) {
        const auto& o = *outcomes[r];
        res.iterations += o.iterations;
        res.visited += o.visited;
        res.min_visited_bound = std::min(res.min_visited_bound, o.min_visited_bound);
        if (o.tight) {
            res.tight = true;
            res.tight_restart = r;
            res.best_weights = o.best;
            res.best_bound = alpha;
            best = o.best_score;
        } else if (!res.tight && (!best || o.best_score < *best)) {
            best = o.best_score;
            res.best_weights = o.best;
            res.best_bound = o.best_score.bound;
        }
    }
    res.restarts_run = last + 1;
    return res;
}

struct ZeroPatternResult {
    bool holds = true;
    std::size_t zeros_checked = 0;
    double max_residual = 0.0;
};

/// For every off-diagonal (u, v) where p(A)_uv vanishes structurally, checks
/// |p(H o A)_uv| <= tol * ||H o A||_F * n^2. Structural zeros are found in
/// exact integers as sum_j |c_j| (A^j)_uv = 0: no walk of any length used by
/// p joins u and v.
inline ZeroPatternResult hadamard_zero_pattern_check(const Graph& g, const WeightMatrix& h, const Polynomial& p,
                                                     double tol = 1e-8) {
    check_pattern(g, h);
    const auto& c = p.coefficients();
    const auto powers = adjacency_powers(g, c.size() - 1);
    const ComplexMatrix ph = p.apply(h.matrix);
    const std::size_t n = g.order();
    const double limit = tol * std::max(1.0, h.matrix.norm()) * static_cast<double>(n * n);
    ZeroPatternResult out;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            bool structural_zero = true;
            for (std::size_t j = 0; j < c.size() && structural_zero; ++j)
                if (c[j] != 0.0 && powers[j](u, v) != 0) structural_zero = false;
            if (!structural_zero) continue;
            ++out.zeros_checked;
            const double r = std::abs(ph(u, v));
            out.max_residual = std::max(out.max_residual, r);
            if (r > limit) out.holds = false;
        }
    return out;
}

}  // namespace spectral_indep
