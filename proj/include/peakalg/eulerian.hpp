#ifndef PEAKALG_EULERIAN_HPP
#define PEAKALG_EULERIAN_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "peakalg/group_algebra.hpp"
#include "peakalg/permutation.hpp"
#include "peakalg/polynomial.hpp"
#include "peakalg/statistics.hpp"

namespace peakalg {

/// Number of enriched pi-partitions into the 2k-letter alphabet prime(k).
std::size_t enriched_order_count(const Permutation& pi, int k);

/// Interpolant of k -> enriched_order_count(pi, k) through k = 0..n.
RationalPolynomial enriched_order_polynomial(const Permutation& pi);

/// A permutation of [n] with exactly `peaks` interior peaks:
/// 1, 3, 2, 5, 4, ..., then increasing.
Permutation peak_count_representative(int peaks, int n);

/// The order polynomial shared by all permutations of [n] with `peaks`
/// interior peaks. Throws when no such permutation exists.
RationalPolynomial order_polynomial(int peaks, int n);

/// Same, indexed from 1 as in the expansion of rho: index i is peak count i - 1.
RationalPolynomial order_polynomial_indexed(int index, int n);

/// Polynomial in x with coefficients in Q[S_n], ascending degree.
struct AlgebraPolynomial {
    std::shared_ptr<const Group> group;
    std::vector<AlgebraElement> coefficients;

    int degree() const;
    const AlgebraElement& coefficient(std::size_t d) const { return coefficients.at(d); }
};

/// rho(x) = sum over pi of Omega(pi; x/2) pi.
AlgebraPolynomial rho(int n);

/// The nonzero coefficients of rho with their index i (x^{2i} for even n,
/// x^{2i-1} for odd n).
std::vector<std::pair<int, AlgebraElement>> idempotents(int n);

struct RhoReport {
    int n = 0;
    /// (a, b) where the x^a y^b coefficient of rho(x) rho(y) differs from
    /// that of rho(xy).
    std::vector<std::pair<int, int>> mismatches;
    bool parity_ok = true;
    bool idempotent_ok = true;
    bool orthogonal_ok = true;
    std::size_t idempotent_count = 0;
    std::size_t span_dimension = 0;
    /// span of the peak-number sums equals span of the e_i.
    bool span_equal = true;
    /// Reported only; not part of ok().
    bool sum_is_identity = false;

    bool ok() const
    {
        return mismatches.empty() && parity_ok && idempotent_ok && orthogonal_ok && span_equal &&
               idempotent_count == span_dimension;
    }
};

RhoReport verify_rho_multiplicativity(int n, unsigned jobs = 1);

/// Sums of elements sharing a peak count of the flavor, one per realised
/// count. For kind B with leftPeak this is the interior peak number
/// (peaks at 0 ignored).
std::vector<AlgebraElement> eulerian_basis(int n, Kind kind, Flavor flavor);

struct BatteryWitness {
    /// Labels of the two basis elements whose product escapes the span.
    std::string left;
    std::string right;
    std::size_t left_index = 0;
    std::size_t right_index = 0;
    AlgebraElement residual;
};

struct BatteryEntry {
    std::string statistic;
    Kind kind = Kind::A;
    Flavor flavor = Flavor::interiorPeak;
    bool by_number = false;
    /// Smallest n with a failure, or the largest n examined when none.
    int n = 0;
    bool closed = true;
    /// Expected outcome: true only for the control entry.
    bool expect_closed = false;
    std::optional<BatteryWitness> witness;
    std::optional<std::size_t> closure_dim;
    std::size_t group_order = 0;

    bool as_expected() const;
};

struct BatteryReport {
    std::vector<BatteryEntry> entries;
    bool ok() const;
};

/// Sums indexed by statistic value and their labels, as used by the battery.
std::vector<std::pair<std::string, AlgebraElement>> battery_basis(int n, Kind kind, Flavor flavor, bool by_number);

/// Closure sweeps for the statistics that fail to give subalgebras, the
/// multiplicative closure of right-peak-number sums (n = 3..n_max_closure),
/// and interior peak sets of S_n as a control.
BatteryReport negative_battery(int n_max_a = 6, int n_max_b = 5, int n_max_closure = 5, unsigned jobs = 1);

} // namespace peakalg

#endif
