#ifndef PEAKALG_POSET_HPP
#define PEAKALG_POSET_HPP

#include <cstdint>
#include <istream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "peakalg/permutation.hpp"

namespace peakalg {

/// A strict partial order on the labels 1..n, stored transitively closed.
class LabeledPoset {
public:
    explicit LabeledPoset(int n = 0);

    /// Builds the closure of the given pairs (a, b) meaning a <_P b. Throws
    /// std::invalid_argument on an out-of-range label or a cycle.
    LabeledPoset(int n, const std::vector<std::pair<int, int>>& relations);

    int size() const { return n_; }
    /// a <_P b.
    bool less(int a, int b) const { return rel_[index(a, b)]; }

    /// All pairs (a, b) with a <_P b.
    std::vector<std::pair<int, int>> relations() const;

    /// Chain pi(1) <_P pi(2) <_P ... <_P pi(n).
    static LabeledPoset chain(const Permutation& pi);

    /// Reads covering pairs "a<b" (or "b>a"), one per line; blank lines and
    /// lines starting with '#' are skipped. n defaults to the largest label.
    static LabeledPoset parse(std::istream& in, int n = 0);

private:
    std::size_t index(int a, int b) const { return static_cast<std::size_t>(a - 1) * n_ + (b - 1); }
    void close();

    int n_;
    std::vector<bool> rel_;
};

/// A strict partial order on {-n, ..., 0, ..., n} that is centrally
/// symmetric: a < b implies -b < -a. Relations are completed under the
/// symmetry and transitively closed at construction.
class TypeBPoset {
public:
    explicit TypeBPoset(int n = 0);
    TypeBPoset(int n, const std::vector<std::pair<int, int>>& relations);

    int size() const { return n_; }
    bool less(int a, int b) const { return rel_[index(a, b)]; }
    std::vector<std::pair<int, int>> relations() const;

    /// Chain 0 < pi(1) < ... < pi(n) with its mirror image.
    static TypeBPoset chain(const Permutation& pi);

    /// Same line format as LabeledPoset::parse, over labels in {0, +-1..+-n};
    /// n defaults to the largest absolute label.
    static TypeBPoset parse(std::istream& in, int n = 0);

private:
    std::size_t index(int a, int b) const
    {
        const int w = 2 * n_ + 1;
        return static_cast<std::size_t>(a + n_) * w + static_cast<std::size_t>(b + n_);
    }
    void close();

    int n_;
    std::vector<bool> rel_;
};

/// Linear extensions as permutations pi with i <_P j implying
/// pi^{-1}(i) < pi^{-1}(j), found by backtracking over minimal elements and
/// returned in lexicographic order.
std::vector<Permutation> linear_extensions(const LabeledPoset& p);

/// Signed permutations whose total order 0 < pi(1) < ... < pi(n) (with its
/// mirror image) extends P, in rank order.
std::vector<Permutation> linear_extensions_b(const TypeBPoset& p);

/// Zig-zag poset on pi(1), ..., pi(n): pi(s) < pi(s+1) for s not in the mask
/// and pi(s) > pi(s+1) for s in it. Bits of `descents` index s in [1, n-1].
LabeledPoset zigzag_poset(const Permutation& pi, std::uint64_t descents);

/// Random poset whose relations are a random subset of the order of a
/// random permutation (so every result is acyclic), then closed.
LabeledPoset random_poset(int n, double density, std::mt19937_64& rng);

/// Random type B poset compatible with a random signed permutation.
TypeBPoset random_type_b_poset(int n, double density, std::mt19937_64& rng);

} // namespace peakalg

#endif
