#pragma once

// Eigenvalues and inertia of real symmetric / complex Hermitian matrices.
//
// Two inertia backends are provided: a floating eigensolver whose near-zero
// eigenvalues are classified by a ZeroPolicy, and an exact symmetric
// elimination over the rationals. By Sylvester's law of inertia the signs of
// the block pivots of a congruence-reduced matrix give its inertia, so the
// exact path needs no eigenvalues at all.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "spectral_indep/errors.hpp"
#include "spectral_indep/graph.hpp"
#include "spectral_indep/rational.hpp"

namespace spectral_indep {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Eigenvalues sorted descending.
struct Spectrum {
    std::vector<double> eigenvalues;

    std::size_t size() const noexcept { return eigenvalues.size(); }
    double largest() const { return eigenvalues.front(); }
    double smallest() const { return eigenvalues.back(); }
    double spectral_radius() const {
        double r = 0.0;
        for (double x : eigenvalues) r = std::max(r, std::abs(x));
        return r;
    }
};

struct Inertia {
    std::size_t n_plus = 0;
    std::size_t n_zero = 0;
    std::size_t n_minus = 0;

    std::size_t order() const noexcept { return n_plus + n_zero + n_minus; }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

enum class ZeroMode { exact, tolerance };

/// How an eigenvalue is decided to be zero. In tolerance mode |x| is zero when
/// |x| <= epsilon * max(1, scale), where scale is the spectral radius of the
/// matrix being classified.
struct ZeroPolicy {
    ZeroMode mode = ZeroMode::exact;
    double epsilon = 1e-9;

    static ZeroPolicy exact() { return {ZeroMode::exact, 1e-9}; }
    static ZeroPolicy tolerance(double eps = 1e-9) {
        if (!(eps > 0.0)) throw ContractError("ZeroPolicy: epsilon must be positive");
        return {ZeroMode::tolerance, eps};
    }

    double threshold(double scale) const { return epsilon * std::max(1.0, scale); }
};

namespace detail {

template <typename Derived>
void check_hermitian(const Eigen::MatrixBase<Derived>& m, double rel_tol = 1e-12) {
    if (m.rows() != m.cols())
        throw ContractError("matrix is not square (" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")");
    const double norm = m.norm();
    const double asym = (m - m.adjoint()).norm();
    if (asym > rel_tol * norm)
        throw ContractError("matrix is not Hermitian: relative asymmetry " + std::to_string(norm > 0 ? asym / norm : asym));
}

template <typename Scalar>
struct EigenSolverFor {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using type = Eigen::SelfAdjointEigenSolver<Matrix>;
};

}  // namespace detail

/// Eigenvalues of a Hermitian matrix (real symmetric or complex), descending.
template <typename Derived>
Spectrum eigenvalues_hermitian(const Eigen::MatrixBase<Derived>& m) {
    detail::check_hermitian(m);
    using Scalar = typename Derived::Scalar;
    Spectrum s;
    if (m.rows() == 0) return s;
    typename detail::EigenSolverFor<Scalar>::type solver(m.eval(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error("eigensolver failed to converge");
    const auto& ev = solver.eigenvalues();
    s.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
    return s;
}

/// Eigenvalues together with orthonormal eigenvectors (columns, matching order).
template <typename Scalar>
struct EigenDecomposition {
    Spectrum spectrum;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> vectors;
};

template <typename Derived>
EigenDecomposition<typename Derived::Scalar> eigen_decomposition(const Eigen::MatrixBase<Derived>& m) {
    detail::check_hermitian(m);
    using Scalar = typename Derived::Scalar;
    EigenDecomposition<Scalar> out;
    const auto n = m.rows();
    typename detail::EigenSolverFor<Scalar>::type solver(m.eval(), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw Error("eigensolver failed to converge");
    out.vectors.resize(n, n);
    out.spectrum.eigenvalues.resize(n);
    // Eigen returns ascending order; reverse it.
    for (Eigen::Index i = 0; i < n; ++i) {
        out.spectrum.eigenvalues[i] = solver.eigenvalues()(n - 1 - i);
        out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    }
    return out;
}

/// Inertia of a spectrum under a tolerance policy.
inline Inertia classify(const Spectrum& s, const ZeroPolicy& policy) {
    const double thr = policy.threshold(s.spectral_radius());
    Inertia in;
    for (double x : s.eigenvalues) {
        if (std::abs(x) <= thr)
            ++in.n_zero;
        else if (x > 0)
            ++in.n_plus;
        else
            ++in.n_minus;
    }
    return in;
}

/// Exact inertia by symmetric elimination with 1x1 and 2x2 pivots.
///
/// `m` is row-major n x n and must be exactly Hermitian. A nonzero diagonal
/// entry is eliminated as a 1x1 pivot; when the whole active diagonal is zero
/// an off-diagonal entry a gives the 2x2 pivot [[0, a], [conj(a), 0]], whose
/// determinant -|a|^2 < 0 contributes one positive and one negative square.
template <typename Scalar>
Inertia exact_inertia(std::vector<Scalar> m, std::size_t n) {
    if (m.size() != n * n) throw ContractError("exact_inertia: matrix size mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (!(m[i * n + j] == conjugate(m[j * n + i])))
                throw ContractError("exact_inertia: matrix is not exactly Hermitian");

    auto at = [&](std::size_t i, std::size_t j) -> Scalar& { return m[i * n + j]; };
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;
    Inertia in;

    auto erase = [&](std::size_t v) { active.erase(std::find(active.begin(), active.end(), v)); };

    while (!active.empty()) {
        auto diag = std::find_if(active.begin(), active.end(), [&](std::size_t i) { return !is_zero(at(i, i)); });
        if (diag != active.end()) {
            const std::size_t p = *diag;
            const Scalar pivot = at(p, p);
            (real_sign(pivot) > 0 ? in.n_plus : in.n_minus) += 1;
            erase(p);
            for (std::size_t a : active) {
                if (is_zero(at(a, p))) continue;
                const Scalar factor = at(a, p) / pivot;
                for (std::size_t b : active) at(a, b) = at(a, b) - factor * at(p, b);
            }
            continue;
        }
        std::size_t p = n, q = n;
        for (std::size_t i = 0; i < active.size() && p == n; ++i)
            for (std::size_t j = i + 1; j < active.size(); ++j)
                if (!is_zero(at(active[i], active[j]))) {
                    p = active[i];
                    q = active[j];
                    break;
                }
        if (p == n) {
            in.n_zero += active.size();
            break;
        }
        in.n_plus += 1;
        in.n_minus += 1;
        const Scalar inv_a = Scalar(Rational(1)) / at(p, q);       // 1 / a
        const Scalar inv_abar = Scalar(Rational(1)) / at(q, p);    // 1 / conj(a)
        erase(p);
        erase(q);
        // M_ab -= M_ap conj(a)^-1 M_qb + M_aq a^-1 M_pb
        for (std::size_t a : active) {
            const Scalar left_p = at(a, p) * inv_abar;
            const Scalar left_q = at(a, q) * inv_a;
            if (is_zero(left_p) && is_zero(left_q)) continue;
            for (std::size_t b : active) at(a, b) = at(a, b) - left_p * at(q, b) - left_q * at(p, b);
        }
    }
    return in;
}

/// Inertia under the given policy. Exact mode converts every entry to its
/// exact rational value (finite doubles are dyadic rationals); non-finite
/// entries raise ModeError.
template <typename Derived>
Inertia inertia(const Eigen::MatrixBase<Derived>& m, const ZeroPolicy& policy = ZeroPolicy::exact()) {
    detail::check_hermitian(m);
    if (policy.mode == ZeroMode::tolerance) return classify(eigenvalues_hermitian(m), policy);

    const auto n = static_cast<std::size_t>(m.rows());
    using Scalar = typename Derived::Scalar;
    if constexpr (std::is_same_v<Scalar, double>) {
        std::vector<Rational> exact(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) exact[i * n + j] = exact_rational(m(i, j));
        return exact_inertia(std::move(exact), n);
    } else {
        std::vector<GaussianRational> exact(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) exact[i * n + j] = exact_rational(std::complex<double>(m(i, j)));
        return exact_inertia(std::move(exact), n);
    }
}

/// L = D - A.
inline RealMatrix laplacian(const Graph& g) {
    RealMatrix a = g.adjacency_matrix();
    RealMatrix l = -a;
    for (Vertex u = 0; u < g.order(); ++u) l(u, u) = static_cast<double>(g.degree(u));
    return l;
}

}  // namespace spectral_indep
