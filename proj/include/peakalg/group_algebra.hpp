#ifndef PEAKALG_GROUP_ALGEBRA_HPP
#define PEAKALG_GROUP_ALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "peakalg/alphabet.hpp"
#include "peakalg/permutation.hpp"
#include "peakalg/rational.hpp"
#include "peakalg/statistics.hpp"

namespace peakalg {

/// S_n or B_n with its elements indexed by rank. Multiplication is
/// tabulated for groups of order up to table_limit and computed on demand
/// otherwise. Instances are shared and immutable; get() is thread-safe.
class Group {
public:
    static constexpr std::size_t table_limit = 3840;

    static std::shared_ptr<const Group> get(int n, Kind kind);

    int n() const { return n_; }
    Kind kind() const { return kind_; }
    std::size_t order() const { return elements_.size(); }
    const Permutation& element(std::size_t r) const { return elements_.at(r); }
    std::size_t identity() const { return identity_; }
    std::size_t inverse(std::size_t r) const { return inverse_[r]; }

    /// Rank of element(a) o element(b).
    std::size_t multiply(std::size_t a, std::size_t b) const;

    /// Statistic of every element, cached per flavor.
    const std::vector<StatSet>& statistics(Flavor flavor) const;

    Group(int n, Kind kind);

private:
    int n_;
    Kind kind_;
    std::vector<Permutation> elements_;
    std::vector<std::size_t> inverse_;
    std::size_t identity_ = 0;
    mutable std::once_flag table_once_;
    mutable std::vector<std::uint16_t> table_;
    mutable std::mutex stats_mutex_;
    mutable std::map<Flavor, std::vector<StatSet>> stats_;
};

/// An element of Q[S_n] or Q[B_n]: dense rational coefficients by rank.
class AlgebraElement {
public:
    explicit AlgebraElement(std::shared_ptr<const Group> group);

    static AlgebraElement delta(std::shared_ptr<const Group> group, std::size_t rank);
    static AlgebraElement identity(std::shared_ptr<const Group> group);

    const Group& group() const { return *group_; }
    const std::shared_ptr<const Group>& group_ptr() const { return group_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    const Rational& operator[](std::size_t rank) const { return coeffs_.at(rank); }
    Rational& operator[](std::size_t rank) { return coeffs_.at(rank); }

    bool is_zero() const;
    std::size_t support_size() const;

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(const Rational& c);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

private:
    void require_same_group(const AlgebraElement& other) const;

    std::shared_ptr<const Group> group_;
    std::vector<Rational> coeffs_;
};

/// (u . w)(pi) = sum over sigma o tau = pi of u(tau) w(sigma).
AlgebraElement convolve(const AlgebraElement& u, const AlgebraElement& w);

/// Sum of the group elements whose statistic of the given flavor equals I.
AlgebraElement class_sum(std::shared_ptr<const Group> group, const StatSet& I);

/// Class sums of every realised value of the statistic, ordered by set.
std::vector<std::pair<StatSet, AlgebraElement>> class_sums(std::shared_ptr<const Group> group, Flavor flavor);

/// Sums of elements with a common number of peaks (or descents), keyed by
/// that number, for every realised count.
std::vector<std::pair<int, AlgebraElement>> count_sums(std::shared_ptr<const Group> group, Flavor flavor);

/// Group kind on which a flavor's peak algebra lives: B for typeBPeak and
/// descentB, A otherwise.
Kind natural_kind(Flavor flavor);

/// Factorization counts c_{A,B}^C for the peak classes of one flavor.
struct StructureTable {
    Flavor flavor = Flavor::interiorPeak;
    Kind kind = Kind::A;
    int n = 0;
    /// Realised classes, in the order class_sums() returns them.
    std::vector<StatSet> sets;
    /// (A, B, C) index triple -> number of pairs (sigma, tau) with
    /// sigma o tau = pi, stat(tau) = A, stat(sigma) = B, for a
    /// representative pi of C. Zero entries are omitted.
    std::map<std::tuple<int, int, int>, std::int64_t> entries;

    std::int64_t count(const StatSet& a, const StatSet& b, const StatSet& c) const;
    int index_of(const StatSet& s) const;
    friend bool operator==(const StructureTable&, const StructureTable&) = default;
};

/// Counts are taken from the first representative of each class (rank
/// order). jobs > 1 splits the classes over worker threads.
StructureTable structure_constants(int n, Flavor flavor, Kind kind, unsigned jobs = 1);
inline StructureTable structure_constants(int n, Flavor flavor, unsigned jobs = 1)
{
    return structure_constants(n, flavor, natural_kind(flavor), jobs);
}

struct AuditReport {
    bool ok = true;
    std::size_t representatives_checked = 0;
    /// Human-readable description of the first disagreements.
    std::vector<std::string> mismatches;
};

/// Recounts the factorizations from every representative of every class.
AuditReport audit_structure_constants(const StructureTable& table, unsigned jobs = 1);

/// Whether c_{A,B}^C = c_{B,A}^C for every triple.
bool structure_table_symmetric(const StructureTable& table);

struct DualityReport {
    bool ok = true;
    std::size_t products_checked = 0;
    std::size_t products_failed = 0;
    std::size_t bipartite_checked = 0;
    std::size_t bipartite_failed = 0;
};

/// (a) convolve(v_A, v_B) = sum_C c_{A,B}^C v_C for all pairs of classes;
/// (b) when bipartite_k > 0, for every pi the product-alphabet census
/// equals the factorization census at that truncation.
DualityReport verify_duality(int n, Flavor flavor, int bipartite_k = 0, unsigned jobs = 1);
/// Same checks against a precomputed (possibly cached) table.
DualityReport verify_duality(const StructureTable& table, int bipartite_k = 0, unsigned jobs = 1);

/// Alphabet used for the bipartite check of a flavor at truncation k:
/// prime for interior peaks, left for left peaks, plusMinus for type B.
Alphabet duality_alphabet(Flavor flavor, int k);

struct ClosureResult {
    bool closed = true;
    std::size_t dimension = 0;
    /// When closed: product_coordinates[i][j] expresses basis[i] . basis[j]
    /// in terms of the basis.
    std::vector<std::vector<std::vector<Rational>>> product_coordinates;
    /// When not closed: the first escaping product and its residual.
    struct Witness {
        std::size_t left;
        std::size_t right;
        std::optional<AlgebraElement> residual;
    };
    std::optional<Witness> witness;
};

/// Whether the span of the basis is closed under convolve.
ClosureResult closure_check(std::span<const AlgebraElement> basis);

/// Smallest subspace containing the basis and closed under convolve, found
/// by adding products until nothing new appears. Returns a basis of it.
std::vector<AlgebraElement> multiplicative_closure(std::span<const AlgebraElement> basis);

/// True iff x . y and y . x lie in span(inner) for all x in inner, y in outer.
bool ideal_check(std::span<const AlgebraElement> inner, std::span<const AlgebraElement> outer);

/// True iff all pairwise products commute.
bool is_commutative(std::span<const AlgebraElement> basis);

/// Rank of the span of the elements.
std::size_t span_dimension(std::span<const AlgebraElement> elements);

/// Whether each element lies in the span of `of`.
bool span_contains(std::span<const AlgebraElement> of, std::span<const AlgebraElement> elements);

/// Every peak class sum of the flavor is an integer combination of the
/// descent class sums of the group (descentA for kind A, descentB for B).
bool descent_algebra_containment(int n, Flavor peak_flavor, Kind kind);

} // namespace peakalg

#endif
