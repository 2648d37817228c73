#pragma once

// Spectral upper bounds on the (quantum) k-independence number.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spectral_indep/distance.hpp"
#include "spectral_indep/errors.hpp"
#include "spectral_indep/exact_oracle.hpp"
#include "spectral_indep/graph.hpp"
#include "spectral_indep/polynomial.hpp"
#include "spectral_indep/rational.hpp"
#include "spectral_indep/spectra.hpp"
#include "spectral_indep/walks.hpp"

namespace spectral_indep {

/// Extremes of the diagonal of p(M): w = min_u p(M)_uu, W = max_u p(M)_uu.
/// For p(x) = x^k these are the fewest and most closed k-walks at a vertex.
struct WalkExtrema {
    double w = 0.0;
    double W = 0.0;
};

/// The two eigenvalue counts whose minimum is the polynomial bound.
struct EigenCounts {
    std::size_t ge_w = 0;  // #{i : p(lambda_i) >= w}
    std::size_t le_W = 0;  // #{i : p(lambda_i) <= W}

    /// Which count attains the minimum: "ge_w", "le_W" or "both".
    std::string binding() const {
        if (ge_w == le_W) return "both";
        return ge_w < le_W ? "ge_w" : "le_W";
    }
};

struct BoundReport {
    std::string graph;
    std::size_t k = 1;
    std::string bound;
    double value = 0.0;
    long long floor = 0;
    std::optional<EigenCounts> counts;
    std::optional<Inertia> inertia;
    std::optional<WalkExtrema> extrema;
    std::optional<Polynomial> polynomial;
    std::optional<bool> tight;
};

namespace detail {

/// floor() that does not lose an integer to rounding noise (3.9999999999 -> 4).
inline long long robust_floor(double x) {
    return static_cast<long long>(std::floor(x + 1e-9 * std::max(1.0, std::abs(x))));
}

inline void reject_zero(const Polynomial& p) {
    if (p.is_zero()) throw ContractError("polynomial bound: the zero polynomial gives no bound");
}

inline BoundReport poly_bound_from(const Spectrum& s, const Polynomial& p, const WalkExtrema& ex,
                                   const ZeroPolicy& policy) {
    std::vector<double> values;
    values.reserve(s.size());
    double scale = 1.0;
    for (double lambda : s.eigenvalues) {
        values.push_back(p(lambda));
        scale = std::max(scale, std::abs(values.back()));
    }
    // Inclusive side of the threshold: values sitting exactly on w or W must count.
    const double tau = policy.epsilon * scale;
    EigenCounts c;
    for (double v : values) {
        if (v >= ex.w - tau) ++c.ge_w;
        if (v <= ex.W + tau) ++c.le_W;
    }
    BoundReport r;
    r.bound = "poly";
    r.value = static_cast<double>(std::min(c.ge_w, c.le_W));
    r.floor = static_cast<long long>(std::min(c.ge_w, c.le_W));
    r.counts = c;
    r.extrema = ex;
    r.polynomial = p;
    return r;
}

}  // namespace detail

/// w and W from exact integer walk counts: p(A)_uu = sum_j c_j (A^j)_uu,
/// accumulated in rationals and rounded once.
inline WalkExtrema walk_extrema(const Graph& g, const Polynomial& p) {
    const auto& c = p.coefficients();
    const auto powers = adjacency_powers(g, c.size() - 1);
    WalkExtrema ex;
    bool first = true;
    for (Vertex u = 0; u < g.order(); ++u) {
        Rational diag(0);
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] != 0.0) diag += exact_rational(c[j]) * Rational(powers[j](u, u));
        const double d = static_cast<double>(diag);
        if (first || d < ex.w) ex.w = d;
        if (first || d > ex.W) ex.W = d;
        first = false;
    }
    return ex;
}

/// w and W of p(M) for a Hermitian (possibly weighted) matrix, in floating point.
template <typename Derived>
WalkExtrema walk_extrema(const Eigen::MatrixBase<Derived>& m, const Polynomial& p) {
    const auto pm = p.apply(m);
    WalkExtrema ex;
    for (Eigen::Index u = 0; u < pm.rows(); ++u) {
        const double d = std::real(pm(u, u));
        if (u == 0 || d < ex.w) ex.w = d;
        if (u == 0 || d > ex.W) ex.W = d;
    }
    return ex;
}

/// min(#{i : p(lambda_i) >= w}, #{i : p(lambda_i) <= W}) over the adjacency spectrum.
/// The comparison slack is policy.epsilon * max(1, max_i |p(lambda_i)|).
inline BoundReport poly_spectral_bound(const Graph& g, const Polynomial& p,
                                       const ZeroPolicy& policy = ZeroPolicy::tolerance()) {
    detail::reject_zero(p);
    return detail::poly_bound_from(eigenvalues_hermitian(g.adjacency_matrix()), p, walk_extrema(g, p), policy);
}

/// Same bound for a Hermitian weighting H o A.
template <typename Derived>
BoundReport poly_spectral_bound(const Eigen::MatrixBase<Derived>& m, const Polynomial& p,
                                const ZeroPolicy& policy = ZeroPolicy::tolerance()) {
    detail::reject_zero(p);
    return detail::poly_bound_from(eigenvalues_hermitian(m), p, walk_extrema(m, p), policy);
}

/// n0 + min(n+, n-). The counts carry n+ + n0 and n- + n0, which are exactly
/// the two counts of the polynomial bound at p(x) = x.
inline BoundReport inertia_bound_from(const Inertia& in) {
    BoundReport r;
    r.bound = "inertia";
    r.inertia = in;
    r.counts = EigenCounts{in.n_plus + in.n_zero, in.n_minus + in.n_zero};
    r.floor = static_cast<long long>(in.n_zero + std::min(in.n_plus, in.n_minus));
    r.value = static_cast<double>(r.floor);
    return r;
}

template <typename Derived>
BoundReport inertia_bound(const Eigen::MatrixBase<Derived>& m, const ZeroPolicy& policy = ZeroPolicy::exact()) {
    return inertia_bound_from(inertia(m, policy));
}

inline BoundReport inertia_bound(const Graph& g, const ZeroPolicy& policy = ZeroPolicy::exact()) {
    return inertia_bound(g.adjacency_matrix(), policy);
}

/// n |lambda_min| / (delta + |lambda_min|).
inline double hoffman_value(double n, double delta, double lambda_min) {
    const double mag = std::abs(lambda_min);
    return n * mag / (delta + mag);
}

/// Ratio bound; defined only for Delta-regular graphs with Delta >= 1.
inline BoundReport hoffman_bound(const Graph& g) {
    std::size_t delta = 0;
    if (!g.is_regular(&delta)) throw DomainError("hoffman bound: graph is not regular");
    if (delta == 0) throw DomainError("hoffman bound: edgeless graph (degree 0)");
    const auto s = eigenvalues_hermitian(g.adjacency_matrix());
    BoundReport r;
    r.bound = "hoffman";
    r.value = hoffman_value(static_cast<double>(g.order()), static_cast<double>(delta), s.smallest());
    r.floor = detail::robust_floor(r.value);
    return r;
}

/// n (mu_1 - delta) / mu_1 with mu_1 the largest Laplacian eigenvalue.
inline BoundReport vdh_bound(const Graph& g) {
    if (g.size() == 0) throw DomainError("van Dam-Haemers bound: edgeless graph (mu_1 = 0)");
    const double mu1 = eigenvalues_hermitian(laplacian(g)).largest();
    const double delta = static_cast<double>(g.min_degree());
    BoundReport r;
    r.bound = "vdh";
    r.value = static_cast<double>(g.order()) * (mu1 - delta) / mu1;
    r.floor = detail::robust_floor(r.value);
    return r;
}

/// Best polynomial bound over p(x) = x^k + c x, c in {-3, ..., 3}. Ties keep
/// the smallest c.
inline BoundReport poly_grid_bound(const Graph& g, std::size_t k,
                                   const ZeroPolicy& policy = ZeroPolicy::tolerance()) {
    std::optional<BoundReport> best;
    for (int c = -3; c <= 3; ++c) {
        auto coeffs = Polynomial::monomial(k).coefficients();
        coeffs[1] += c;
        Polynomial p(coeffs);
        if (p.is_zero()) continue;
        auto r = poly_spectral_bound(g, p, policy);
        if (!best || r.value < best->value) best = r;
    }
    best->bound = "poly_grid";
    return *best;
}

struct ChainOptions {
    ZeroPolicy policy = ZeroPolicy::exact();
    std::optional<Polynomial> polynomial;  // default x^k
    std::size_t oracle_budget = kOracleDefaultBudget;
    bool poly_grid = false;
    std::string graph_id;
};

struct ChainReport {
    std::string graph;
    std::size_t n = 0;
    std::size_t k = 1;
    std::vector<BoundReport> bounds;
    std::optional<ExactResult> exact;
    std::optional<std::string> budget_error;
};

/// Every applicable bound for (g, k):
///  - "inertia": inertia bound of the distance power graph g^[k] (g itself at k = 1);
///  - "poly": polynomial bound with the chosen p (default x^k) on g's spectrum;
///  - "poly_grid": optional small search over x^k + c x;
///  - "hoffman" (regular, k = 1) and "vdh" (has edges, k = 1).
/// The exact alpha_k is attached when the oracle budget allows, and each bound
/// is then flagged tight iff its floor equals alpha_k.
inline ChainReport bound_chain(const Graph& g, std::size_t k, const ChainOptions& opt = {}) {
    if (k == 0) throw ContractError("bound_chain: k must be >= 1");
    ChainReport out;
    out.graph = opt.graph_id;
    out.n = g.order();
    out.k = k;

    auto add = [&](BoundReport r) {
        r.graph = opt.graph_id;
        r.k = k;
        out.bounds.push_back(std::move(r));
    };

    add(inertia_bound(power_graph(g, k), opt.policy));
    const Polynomial p = opt.polynomial.value_or(Polynomial::monomial(k));
    ZeroPolicy tolerance = ZeroPolicy::tolerance(opt.policy.epsilon);
    add(poly_spectral_bound(g, p, tolerance));
    if (opt.poly_grid) add(poly_grid_bound(g, k, tolerance));
    if (k == 1) {
        std::size_t delta = 0;
        if (g.is_regular(&delta) && delta >= 1) add(hoffman_bound(g));
        if (g.size() > 0) add(vdh_bound(g));
    }

    try {
        out.exact = alpha_k_exact(g, k, opt.oracle_budget);
    } catch (const BudgetError& e) {
        out.budget_error = e.what();
    }
    if (out.exact)
        for (auto& r : out.bounds) r.tight = r.floor == static_cast<long long>(out.exact->size);
    return out;
}

}  // namespace spectral_indep
