#include "peakalg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace peakalg {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

void RationalPolynomial::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::interpolate(const std::vector<std::pair<Rational, Rational>>& points)
{
    const std::size_t m = points.size();
    std::vector<Rational> result(m);
    for (std::size_t i = 0; i < m; ++i) {
        // basis = prod_{j != i} (x - x_j) / (x_i - x_j)
        std::vector<Rational> basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i)
                continue;
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate: repeated abscissa");
            std::vector<Rational> next(basis.size() + 1);
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= basis[d] * points[j].first;
            }
            basis = std::move(next);
            denom *= points[i].first - points[j].first;
        }
        const Rational scale = points[i].second / denom;
        for (std::size_t d = 0; d < basis.size(); ++d)
            result[d] += basis[d] * scale;
    }
    return RationalPolynomial(std::move(result));
}

Rational RationalPolynomial::coefficient(int d) const
{
    if (d < 0 || d >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[d];
}

Rational RationalPolynomial::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::scaled(const Rational& c) const
{
    std::vector<Rational> out(coeffs_);
    Rational power = 1;
    for (auto& a : out) {
        a *= power;
        power *= c;
    }
    return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string(const std::string& var) const
{
    if (coeffs_.empty())
        return "0";
    std::string s;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[d];
        if (sgn(c) == 0)
            continue;
        const Rational mag = abs(c);
        if (s.empty())
            s += sgn(c) < 0 ? "-" : "";
        else
            s += sgn(c) < 0 ? " - " : " + ";
        const bool unit = mag == 1;
        if (!unit || d == 0)
            s += mag.get_str();
        if (d > 0) {
            if (!unit)
                s += "*";
            s += var;
            if (d > 1)
                s += "^" + std::to_string(d);
        }
    }
    return s;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b)
{
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        out[i] += b.coeffs_[i];
    return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(out));
}

} // namespace peakalg
