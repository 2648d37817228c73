#pragma once

// Exact rational and Gaussian-rational scalars for the exact inertia path.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "spectral_indep/errors.hpp"

namespace spectral_indep {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact value of a finite double (every finite double is a dyadic rational).
inline Rational exact_rational(double x) {
    if (!std::isfinite(x)) throw ModeError("exact arithmetic requested on a non-finite value");
    if (x == 0.0) return Rational(0);
    int exponent = 0;
    double mantissa = std::frexp(x, &exponent);  // x = mantissa * 2^exponent, 0.5 <= |mantissa| < 1
    auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
    exponent -= 53;
    Integer num(scaled);
    Integer den(1);
    if (exponent >= 0)
        num <<= exponent;
    else
        den <<= -exponent;
    return Rational(num, den);
}

/// Nearest multiple of 1/denominator.
inline Rational round_to_grid(double x, long long denominator) {
    if (!std::isfinite(x)) throw ModeError("cannot round a non-finite value to a rational grid");
    return Rational(static_cast<long long>(std::llround(x * static_cast<double>(denominator))), denominator);
}

/// a + b i with rational parts.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design of the scalar
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational norm = b.re * b.re + b.im * b.im;
        if (norm == 0) throw ContractError("division by zero Gaussian rational");
        return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline GaussianRational exact_rational(std::complex<double> z) {
    return {exact_rational(z.real()), exact_rational(z.imag())};
}

inline GaussianRational round_to_grid(std::complex<double> z, long long denominator) {
    return {round_to_grid(z.real(), denominator), round_to_grid(z.imag(), denominator)};
}

// Scalar traits used by the generic exact elimination.
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const GaussianRational& x) { return x.re == 0 && x.im == 0; }
inline Rational conjugate(const Rational& x) { return x; }
inline GaussianRational conjugate(const GaussianRational& x) { return {x.re, -x.im}; }
/// Sign of the real part (the diagonal of a Hermitian matrix is real).
inline int real_sign(const Rational& x) { return x.sign(); }
inline int real_sign(const GaussianRational& x) { return x.re.sign(); }

}  // namespace spectral_indep
