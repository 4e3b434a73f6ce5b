#ifndef PEAKALG_QSYM_HPP
#define PEAKALG_QSYM_HPP

#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "peakalg/rational.hpp"
#include "peakalg/statistics.hpp"

namespace peakalg {

enum class Basis { M, F };

std::string_view to_string(Basis basis);

/// A (type A or type B) quasisymmetric function expanded in the monomial
/// or fundamental basis, keyed by (pseudo-)compositions.
class QSymElement {
public:
    QSymElement(bool typeB, Basis basis) : typeB_(typeB), basis_(basis) {}

    /// The single basis element indexed by alpha.
    static QSymElement basis_element(const Composition& alpha, Basis basis);
    /// The unit: M_() for type A, M_(0) for type B.
    static QSymElement one(bool typeB);

    bool typeB() const { return typeB_; }
    Basis basis() const { return basis_; }
    const std::map<Composition, Rational>& terms() const { return terms_; }

    Rational coeff(const Composition& alpha) const;
    /// Adds c to the coefficient of alpha, dropping it when it cancels.
    void add(const Composition& alpha, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    /// Degree when every term has the same |alpha|; -1 for zero, throws for
    /// mixed degrees.
    int degree() const;
    bool has_integer_coefficients() const;

    QSymElement& operator+=(const QSymElement& other);
    QSymElement& operator-=(const QSymElement& other);
    QSymElement& operator*=(const Rational& c);

    friend QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
    friend QSymElement operator-(QSymElement a, const QSymElement& b) { return a -= b; }
    friend QSymElement operator*(QSymElement a, const Rational& c) { return a *= c; }
    friend bool operator==(const QSymElement&, const QSymElement&) = default;

private:
    void require_same_space(const QSymElement& other) const;

    bool typeB_;
    Basis basis_;
    std::map<Composition, Rational> terms_;
};

/// F_alpha = sum over refinements beta of alpha of M_beta, applied to the
/// F-basis input; m_to_f is the inclusion-exclusion inverse.
QSymElement f_to_m(const QSymElement& e);
QSymElement m_to_f(const QSymElement& e);

/// Generating function of enriched maps for any permutation with interior
/// peak set I: sum over E in [n-1] with I in E u (E+1) of 2^{|E|+1} M_E.
/// Throws std::invalid_argument unless I has the interiorPeak flavor.
QSymElement peak_function(const StatSet& interior);

/// The same function in the F basis: 2^{|I|+1} sum over D in [n-1] with
/// I in D xor (D+1) of F_D.
QSymElement peak_function_f(const StatSet& interior);

/// Type B peak function: sum over E in [0,n-1] with I in E u (E+1) of
/// 2^{|E|} M_{B,E}. Accepts typeBPeak sets, and leftPeak sets (the left
/// enriched generating function of an unsigned permutation).
QSymElement peak_function_b(const StatSet& peaks);
QSymElement peak_function_b_f(const StatSet& peaks);

/// Product in the M basis. Type A: quasi-shuffle of the parts. Type B: the
/// first (x_0) parts add and the remaining parts quasi-shuffle.
QSymElement quasi_shuffle(const QSymElement& a, const QSymElement& b);

/// Rank over Q of the coefficient matrix. Throws when elements mix bases
/// or types.
int rank_of_span(std::span<const QSymElement> elements);

/// True when every element of `elements` lies in the rational span of
/// `basis` (all in a common basis and type).
bool in_span(std::span<const QSymElement> basis, const QSymElement& e);

/// A polynomial in finitely many variables: exponent vector -> coefficient.
using TruncatedPolynomial = std::map<std::vector<int>, Rational>;

/// Evaluates the series truncated to k variables: z_1..z_k for type A
/// (exponent index i-1), z_0..z_k for type B (exponent index i).
TruncatedPolynomial truncate(const QSymElement& e, int k);

/// Pointwise product of two truncated polynomials in the same variables.
TruncatedPolynomial multiply(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

} // namespace peakalg

#endif
