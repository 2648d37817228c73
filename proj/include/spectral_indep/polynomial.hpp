#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "spectral_indep/errors.hpp"

namespace spectral_indep {

/// Real polynomial c0 + c1 x + ... + ck x^k, coefficients in ascending order.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    explicit Polynomial(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {
        if (coeffs_.empty()) throw ContractError("polynomial needs at least one coefficient");
        for (double c : coeffs_)
            if (!std::isfinite(c)) throw ContractError("polynomial coefficient is not finite");
    }

    static Polynomial monomial(std::size_t k) {
        std::vector<double> c(k + 1, 0.0);
        c[k] = 1.0;
        return Polynomial(std::move(c));
    }

    /// "c0,c1,...,ck"
    static Polynomial parse(std::string_view text) {
        std::vector<double> c;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto comma = text.find(',', pos);
            std::string token(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
            std::size_t used = 0;
            double value = 0.0;
            try {
                value = std::stod(token, &used);
            } catch (const std::exception&) {
                throw ParseError("polynomial: coefficient '" + token + "' is not a number", pos);
            }
            if (used != token.size()) throw ParseError("polynomial: trailing characters in '" + token + "'", pos + used);
            c.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return Polynomial(std::move(c));
    }

    const std::vector<double>& coefficients() const noexcept { return coeffs_; }

    /// Index of the highest nonzero coefficient (0 for constants and the zero polynomial).
    std::size_t degree() const {
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            if (coeffs_[i] != 0.0) return i;
        return 0;
    }

    bool is_zero() const {
        for (double c : coeffs_)
            if (c != 0.0) return false;
        return true;
    }

    double operator()(double x) const {
        double acc = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    /// p(M) by Horner's scheme on matrices.
    template <typename Derived>
    auto apply(const Eigen::MatrixBase<Derived>& m) const {
        using Matrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
        const auto n = m.rows();
        Matrix acc = Matrix::Zero(n, n);
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = (acc * m).eval();
            acc.diagonal().array() += typename Derived::Scalar(coeffs_[i]);
        }
        return acc;
    }

    std::string to_string() const {
        std::ostringstream os;
        os.precision(12);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
        return os.str();
    }

private:
    std::vector<double> coeffs_;
};

}  // namespace spectral_indep
