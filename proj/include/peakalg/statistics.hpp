#ifndef PEAKALG_STATISTICS_HPP
#define PEAKALG_STATISTICS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "peakalg/permutation.hpp"

namespace peakalg {

/// Which statistic a StatSet records.
///
/// Peak flavors test pi(i-1) < pi(i) > pi(i+1) over different position
/// ranges, always with pi(0) = 0:
///   interiorPeak  [2, n-1]
///   leftPeak      [1, n-1]
///   typeBPeak     [0, n-1], with 0 a peak iff pi(1) < 0
///   rightPeak     [2, n],   with pi(n+1) = 0
///   exteriorPeak  [1, n],   with pi(n+1) = 0
/// descentA collects i in [1, n-1] with pi(i) > pi(i+1); descentB extends
/// the range to [0, n-1].
enum class Flavor { interiorPeak, leftPeak, typeBPeak, rightPeak, exteriorPeak, descentA, descentB };

std::string_view to_string(Flavor flavor);

/// Accepts the short CLI names: interior, left, typeB, right, exterior,
/// descentA, descentB (the long enum names are accepted too).
Flavor parse_flavor(std::string_view text);

bool is_peak_flavor(Flavor flavor);

/// True for flavors that are only defined on signed permutations.
bool requires_signed(Flavor flavor);

struct Interval {
    int lo;
    int hi;
};

/// Ambient position range of the flavor for size n (empty when hi < lo).
Interval ambient_interval(Flavor flavor, int n);

/// A set of positions tagged with the statistic that produced it.
class StatSet {
public:
    StatSet() = default;

    /// Throws std::invalid_argument when a member lies outside the ambient
    /// interval, or when a peak flavor receives two consecutive positions.
    StatSet(Flavor flavor, int n, const std::vector<int>& members);

    static StatSet from_mask(Flavor flavor, int n, std::uint64_t mask);

    Flavor flavor() const { return flavor_; }
    int n() const { return n_; }
    /// Bit i set iff position i is a member.
    std::uint64_t mask() const { return mask_; }

    bool contains(int i) const { return i >= 0 && i < 64 && (mask_ >> i & 1u); }
    int size() const;
    bool empty() const { return mask_ == 0; }
    std::vector<int> members() const;

    /// "{0,3}"; the empty set is "{}".
    std::string to_string() const;

    friend bool operator==(const StatSet&, const StatSet&) = default;
    friend auto operator<=>(const StatSet&, const StatSet&) = default;

private:
    Flavor flavor_ = Flavor::interiorPeak;
    int n_ = 0;
    std::uint64_t mask_ = 0;
};

/// Parses "{1,3}" or "1,3" (braces optional) into a StatSet of the flavor.
StatSet parse_stat_set(std::string_view text, Flavor flavor, int n);

/// Throws std::invalid_argument for descent flavors, or for typeBPeak on an
/// unsigned permutation (embed it first with as_signed()).
StatSet peak_set(const Permutation& p, Flavor flavor);

/// Throws std::invalid_argument for peak flavors, or descentB on an unsigned
/// permutation.
StatSet descent_set(const Permutation& p, Flavor flavor);

/// Dispatches to peak_set or descent_set.
StatSet statistic(const Permutation& p, Flavor flavor);

/// A composition of n (typeB = false) or a pseudo-composition of n whose
/// first part may be zero (typeB = true). The type A composition of 0 is the
/// empty tuple; the type B pseudo-composition of 0 is (0).
struct Composition {
    std::vector<int> parts;
    bool typeB = false;

    Composition() = default;
    /// Throws std::invalid_argument when the part conditions fail.
    Composition(std::vector<int> parts_, bool typeB_);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    std::string to_string() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// Partial sums {a1, a1+a2, ..., a1+...+a_{k-1}} as a bit mask. Positions
/// live in [1, n-1] for type A and [0, n-1] for type B.
std::uint64_t subset_of(const Composition& alpha);

/// Inverse of subset_of. Throws std::invalid_argument when the mask has a
/// bit outside the admissible range.
Composition composition_from_subset(std::uint64_t mask, int n, bool typeB);

/// All compositions (or pseudo-compositions) of n, ordered by subset mask.
std::vector<Composition> compositions(int n, bool typeB);

/// f_0 = f_1 = 1, f_n = f_{n-1} + f_{n-2}.
std::uint64_t fibonacci(int n);

/// Every subset of the flavor's ambient interval with no two consecutive
/// members (every subset, for descent flavors), ordered by mask.
std::vector<StatSet> enumerate_peak_sets(int n, Flavor flavor);

} // namespace peakalg

#endif
