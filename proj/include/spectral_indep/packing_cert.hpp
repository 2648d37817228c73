#pragma once

// Verification of k-projective packings and quantum k-independence
// certificates. Certificates are checked, never synthesized (beyond the d = 1
// lift of a classical independent set).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spectral_indep/distance.hpp"
#include "spectral_indep/errors.hpp"
#include "spectral_indep/exact_oracle.hpp"
#include "spectral_indep/graph.hpp"
#include "spectral_indep/rational.hpp"
#include "spectral_indep/spectra.hpp"

namespace spectral_indep {

inline constexpr double kCertificateTolerance = 1e-8;

/// One orthogonal projector per vertex, all d x d.
struct PackingCertificate {
    std::size_t d = 1;
    std::vector<ComplexMatrix> projectors;
};

/// Projectors P^(u,i) for u in V and i in [t]; projectors[u][i].
struct QuantumCertificate {
    std::size_t d = 1;
    std::size_t t = 0;
    std::vector<std::vector<ComplexMatrix>> projectors;
};

struct Violation {
    std::string condition;  // "projector", "orthogonality", "cond1", "cond2", "cond3"
    std::vector<std::size_t> indices;
    double residual = 0.0;
};

struct VerificationReport {
    bool valid = true;
    std::vector<Violation> violations;
    std::optional<Rational> value;

    void add(Violation v) {
        valid = false;
        violations.push_back(std::move(v));
    }
};

namespace detail {

inline double operator_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

inline double relative_scale(const ComplexMatrix& a, const ComplexMatrix& b) {
    return std::max(1.0, a.norm() * b.norm());
}

}  // namespace detail

/// <X, Y> = tr(X^dagger Y).
inline std::complex<double> trace_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
    return (x.adjoint() * y).trace();
}

/// Checks m is an orthogonal projector and returns its rank round(tr m).
/// Residuals are operator norms, compared against tol * max(1, ||m||_F).
inline std::size_t projector_check(const ComplexMatrix& m, double tol = kCertificateTolerance) {
    if (m.rows() != m.cols()) throw ContractError("projector_check: matrix is not square");
    const double scale = std::max(1.0, m.norm());
    const double herm = detail::operator_norm(m - m.adjoint());
    const double idem = detail::operator_norm(m * m - m);
    if (herm > tol * scale) throw ProjectorError("not Hermitian (residual " + std::to_string(herm) + ")", herm, idem);
    if (idem > tol * scale) throw ProjectorError("not idempotent (residual " + std::to_string(idem) + ")", herm, idem);
    const std::complex<double> tr = m.trace();
    const double rounded = std::round(tr.real());
    if (std::abs(tr.real() - rounded) > 10 * tol || std::abs(tr.imag()) > 10 * tol)
        throw ProjectorError("trace is not an integer", herm, idem);
    return static_cast<std::size_t>(rounded);
}

/// Packing value (1/d) sum_u rank(P^(u)), exactly.
inline Rational packing_value(const std::vector<std::size_t>& ranks, std::size_t d) {
    std::size_t total = 0;
    for (auto r : ranks) total += r;
    return Rational(Integer(total), Integer(d));
}

/// Checks tr(P^(u)^dagger P^(v)) = 0 for every pair 1 <= dist(u, v) <= k and
/// reports the exact value when every matrix is a projector.
inline VerificationReport verify_packing(const Graph& g, std::size_t k, const PackingCertificate& cert,
                                         double tol = kCertificateTolerance) {
    const std::size_t n = g.order();
    if (cert.d == 0) throw CertificateError("packing: dimension d must be >= 1");
    if (cert.projectors.size() != n)
        throw CertificateError("packing: expected " + std::to_string(n) + " projectors, got " +
                               std::to_string(cert.projectors.size()));
    for (std::size_t u = 0; u < n; ++u)
        if (static_cast<std::size_t>(cert.projectors[u].rows()) != cert.d ||
            static_cast<std::size_t>(cert.projectors[u].cols()) != cert.d)
            throw CertificateError("packing: projector of vertex " + std::to_string(u) + " is not " +
                                   std::to_string(cert.d) + "x" + std::to_string(cert.d));

    VerificationReport rep;
    std::vector<std::size_t> ranks(n, 0);
    bool all_projectors = true;
    for (std::size_t u = 0; u < n; ++u) {
        try {
            ranks[u] = projector_check(cert.projectors[u], tol);
        } catch (const ProjectorError& e) {
            all_projectors = false;
            rep.add({"projector", {u}, std::max(e.hermitian_residual, e.idempotent_residual)});
        }
    }
    const auto dm = distance_matrix(g);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (!dm(u, v).within(k)) continue;
            const double ip = std::abs(trace_inner(cert.projectors[u], cert.projectors[v]));
            if (ip > tol * detail::relative_scale(cert.projectors[u], cert.projectors[v]))
                rep.add({"orthogonality", {u, v}, ip});
        }
    if (all_projectors) rep.value = packing_value(ranks, cert.d);
    return rep;
}

/// Checks the three conditions on P^(u,i):
///  cond1: sum_u P^(u,i) = I_d for each i;
///  cond2: tr-orthogonality of P^(u,i), P^(u,j), i != j;
///  cond3: tr-orthogonality of P^(u,i), P^(v,j), i != j, u != v, dist(u,v) <= k.
inline VerificationReport verify_quantum_cert(const Graph& g, std::size_t k, const QuantumCertificate& cert,
                                              double tol = kCertificateTolerance) {
    const std::size_t n = g.order();
    const std::size_t t = cert.t;
    if (cert.d == 0) throw CertificateError("quantum certificate: dimension d must be >= 1");
    if (t == 0) throw CertificateError("quantum certificate: t must be >= 1");
    if (cert.projectors.size() != n)
        throw CertificateError("quantum certificate: expected projectors for " + std::to_string(n) + " vertices");
    for (std::size_t u = 0; u < n; ++u) {
        if (cert.projectors[u].size() != t)
            throw CertificateError("quantum certificate: vertex " + std::to_string(u) + " has " +
                                   std::to_string(cert.projectors[u].size()) + " projectors, expected t = " +
                                   std::to_string(t));
        for (const auto& p : cert.projectors[u])
            if (static_cast<std::size_t>(p.rows()) != cert.d || static_cast<std::size_t>(p.cols()) != cert.d)
                throw CertificateError("quantum certificate: projector of vertex " + std::to_string(u) +
                                       " has the wrong dimension");
    }

    VerificationReport rep;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t i = 0; i < t; ++i) {
            try {
                projector_check(cert.projectors[u][i], tol);
            } catch (const ProjectorError& e) {
                rep.add({"projector", {u, i}, std::max(e.hermitian_residual, e.idempotent_residual)});
            }
        }

    const ComplexMatrix identity = ComplexMatrix::Identity(cert.d, cert.d);
    for (std::size_t i = 0; i < t; ++i) {
        ComplexMatrix sum = ComplexMatrix::Zero(cert.d, cert.d);
        for (std::size_t u = 0; u < n; ++u) sum += cert.projectors[u][i];
        const double residual = (sum - identity).norm();
        if (residual > tol * std::max(1.0, identity.norm())) rep.add({"cond1", {i}, residual});
    }

    auto orthogonal = [&](std::size_t u, std::size_t i, std::size_t v, std::size_t j, double& ip) {
        const auto& a = cert.projectors[u][i];
        const auto& b = cert.projectors[v][j];
        ip = std::abs(trace_inner(a, b));
        return ip <= tol * detail::relative_scale(a, b);
    };

    double ip = 0.0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = i + 1; j < t; ++j)
                if (!orthogonal(u, i, u, j, ip)) rep.add({"cond2", {u, i, j}, ip});

    const auto dm = distance_matrix(g);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (!dm(u, v).within(k)) continue;
            for (std::size_t i = 0; i < t; ++i)
                for (std::size_t j = 0; j < t; ++j)
                    if (i != j && !orthogonal(u, i, v, j, ip)) rep.add({"cond3", {u, v, i, j}, ip});
        }

    if (rep.valid) rep.value = Rational(static_cast<long long>(t));
    return rep;
}

/// d = 1 packing with P^(u) = 1 on the set and 0 elsewhere.
inline PackingCertificate lift_independent_set(const Graph& g, const IndependentSetCert& cert) {
    if (!verify_independent_set(g, cert))
        throw CertificateError("lift_independent_set: vertices are not pairwise at distance > k");
    PackingCertificate p;
    p.d = 1;
    p.projectors.assign(g.order(), ComplexMatrix::Zero(1, 1));
    for (Vertex v : cert.vertices) p.projectors[v](0, 0) = 1.0;
    return p;
}

/// Outcome of comparing trace-orthogonality with orthogonality of the
/// eigenvectors spanning each projector's range.
struct OrthogonalityCheck {
    bool trace_orthogonal = false;
    bool vectors_orthogonal = false;
    double trace_inner = 0.0;     // |tr(P^dagger Q)|
    double max_cross = 0.0;       // max |<psi_k | phi_l>|
    std::size_t rank_p = 0;
    std::size_t rank_q = 0;

    bool equivalent() const { return trace_orthogonal == vectors_orthogonal; }
};

/// Unit eigenvectors of a projector for eigenvalue 1, as columns.
inline ComplexMatrix projector_range_basis(const ComplexMatrix& p) {
    const auto dec = eigen_decomposition(p);
    std::vector<Eigen::Index> keep;
    for (std::size_t i = 0; i < dec.spectrum.size(); ++i)
        if (dec.spectrum.eigenvalues[i] > 0.5) keep.push_back(static_cast<Eigen::Index>(i));
    ComplexMatrix basis(p.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c) basis.col(static_cast<Eigen::Index>(c)) = dec.vectors.col(keep[c]);
    return basis;
}

/// Trace-orthogonality of two projectors, computed from the matrices and,
/// independently, from cross products of their spectral resolutions. The
/// vector route uses tol' = sqrt(tol / max(1, rank_p * rank_q)), since
/// tr(P^dagger Q) = sum |<psi_k|phi_l>|^2.
inline OrthogonalityCheck lemma2_check(const ComplexMatrix& p, const ComplexMatrix& q,
                                       double tol = kCertificateTolerance) {
    if (p.rows() != q.rows()) throw ContractError("lemma2_check: projectors have different dimensions");
    OrthogonalityCheck out;
    out.rank_p = projector_check(p, tol);
    out.rank_q = projector_check(q, tol);
    out.trace_inner = std::abs(trace_inner(p, q));
    out.trace_orthogonal = out.trace_inner <= tol;

    const ComplexMatrix psi = projector_range_basis(p);
    const ComplexMatrix phi = projector_range_basis(q);
    if (psi.cols() > 0 && phi.cols() > 0) out.max_cross = (psi.adjoint() * phi).cwiseAbs().maxCoeff();
    const double rs = static_cast<double>(std::max<std::size_t>(1, out.rank_p * out.rank_q));
    out.vectors_orthogonal = out.max_cross <= std::sqrt(tol / rs);
    return out;
}

}  // namespace spectral_indep
