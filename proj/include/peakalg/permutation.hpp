#ifndef PEAKALG_PERMUTATION_HPP
#define PEAKALG_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace peakalg {

/// Coxeter type of the ambient group: the symmetric group S_n (A) or the
/// hyperoctahedral group B_n of signed permutations (B).
enum class Kind { A, B };

std::string_view to_string(Kind kind);
Kind parse_kind(std::string_view text);

/// An element of S_n or B_n in window (one-line) notation.
///
/// For kind B the window determines the full map on {-n..n} through
/// pi(-i) = -pi(i) and pi(0) = 0. Kind A windows never contain negative
/// entries; an unsigned window may still be embedded in B_n with as_signed().
class Permutation {
public:
    Permutation() = default;

    /// Throws std::invalid_argument unless |window| is a bijection on [n]
    /// (and all entries are positive for kind A).
    explicit Permutation(std::vector<int> window, Kind kind = Kind::A);

    static Permutation identity(int n, Kind kind = Kind::A);

    /// Parses "-2,3,4,-5,1". Kind B is chosen when any entry is negative.
    static Permutation parse(std::string_view text);
    static Permutation parse(std::string_view text, Kind kind);

    int size() const { return static_cast<int>(window_.size()); }
    Kind kind() const { return kind_; }
    bool is_signed() const { return kind_ == Kind::B; }

    /// Value at position i in [-n, n]; pi(0) = 0 and pi(-i) = -pi(i).
    int operator()(int i) const;

    std::span<const int> window() const { return window_; }

    Permutation inverse() const;
    Permutation as_signed() const { return Permutation(window_, Kind::B); }

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    Kind kind_ = Kind::A;
    std::vector<int> window_;
};

/// (a o b)(i) = a(b(i)). Throws on size or kind mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

/// Number of elements of S_n (kind A) or B_n (kind B).
std::size_t group_order(int n, Kind kind);

/// Position of p in the stable enumeration order of its group. Kind A is
/// lexicographic on the window; kind B ranks the absolute window
/// lexicographically first and the sign mask second.
std::size_t rank(const Permutation& p);
Permutation unrank(std::size_t r, int n, Kind kind);

/// All elements of the group in rank order.
std::vector<Permutation> enumerate_group(int n, Kind kind);

} // namespace peakalg

#endif
