#ifndef PEAKALG_POLYNOMIAL_HPP
#define PEAKALG_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "peakalg/rational.hpp"

namespace peakalg {

/// Univariate polynomial over Q, coefficients in ascending degree. The
/// zero polynomial has no coefficients; otherwise the last one is nonzero.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coefficients);

    /// Unique polynomial of degree < points.size() through the given (x, y).
    static RationalPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coefficient(int d) const;
    Rational operator()(const Rational& x) const;

    /// p(c x).
    RationalPolynomial scaled(const Rational& c) const;

    std::string to_string(const std::string& var = "x") const;

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

} // namespace peakalg

#endif
