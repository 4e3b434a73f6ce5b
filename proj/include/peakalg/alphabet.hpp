#ifndef PEAKALG_ALPHABET_HPP
#define PEAKALG_ALPHABET_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace peakalg {

enum class AlphabetVariant { prime, left, plusMinus, product };

std::string_view to_string(AlphabetVariant variant);
AlphabetVariant parse_alphabet_variant(std::string_view text);

/// A letter is its position in the alphabet's total order.
struct Letter {
    int index = 0;
    friend bool operator==(Letter, Letter) = default;
    friend auto operator<=>(Letter, Letter) = default;
};

enum class Sign { plus, minus };

/// A finite truncation of one of the enriched alphabets, totally ordered by
/// letter index.
///
///   prime(k)      -1 < 1 < -2 < 2 < ... < -k < k
///   left(k)       0 < -1 < 1 < ... < -k < k
///   plusMinus(k)  -k < -k^-1 < ... < -1 < -1^-1 < 0 < 1^-1 < 1 < ... < k
///
/// Each letter has a class deciding the equality case of the enriched
/// comparisons: a <=+ b iff a < b or (a = b and a is in the plus class);
/// a <=- b iff a < b or (a = b and a is in the minus class). In prime and
/// left the plus class is the nonnegative letters; in plusMinus it is the
/// letters with exponent +1 (the zero letter included).
///
/// A product alphabet carries the up-down order: (s,t) < (u,v) iff s < u,
/// or s = u in the plus class and t < v, or s = u in the minus class and
/// t > v.
class Alphabet {
public:
    struct LetterInfo {
        bool plus_class;
        /// Variable index of |letter| in each component (-1 when unused).
        std::array<int, 2> weight;
        /// Component letters (product alphabets only; -1 otherwise).
        std::array<int, 2> parts;
        std::string label;
    };

    static Alphabet prime(int k);
    static Alphabet left(int k);
    static Alphabet plus_minus(int k);
    /// Up-down ordered product. Throws std::invalid_argument when the
    /// components disagree on having a zero letter with negation.
    static Alphabet product(const Alphabet& s, const Alphabet& t);

    AlphabetVariant variant() const { return variant_; }
    /// Truncation parameter (of the first component for products).
    int k() const { return k_; }
    int size() const { return static_cast<int>(letters_.size()); }

    const LetterInfo& info(Letter a) const;
    Letter letter(int index) const;

    /// Number of weight variables per component: k for prime, k+1 for left
    /// and plusMinus (variable 0 is z_0). Products report both components.
    std::array<int, 2> variable_counts() const { return vars_; }
    int total_variables() const { return vars_[0] + vars_[1]; }

    /// The zero letter s_0, when the alphabet has one.
    std::optional<Letter> zero() const { return zero_; }
    /// -a for alphabets with negation (plusMinus and its products).
    bool has_negation() const { return !negation_.empty(); }
    Letter negate(Letter a) const;

    bool less(Letter a, Letter b) const { return check(a).index < check(b).index; }
    bool leq_plus(Letter a, Letter b) const;
    bool leq_minus(Letter a, Letter b) const;
    bool leq(Letter a, Letter b, Sign sign) const { return sign == Sign::plus ? leq_plus(a, b) : leq_minus(a, b); }

    /// Finds a letter by label ("-2", "1^-1", "(1,-2)", ...).
    Letter find(std::string_view label) const;

    /// Product letter (s, t) of a product alphabet; throws otherwise.
    std::array<Letter, 2> components(Letter a) const;
    /// The product letter with the given components.
    Letter pair(Letter s, Letter t) const;
    const Alphabet& component(int which) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b);

private:
    Letter check(Letter a) const;

    AlphabetVariant variant_ = AlphabetVariant::prime;
    int k_ = 0;
    std::vector<LetterInfo> letters_;
    std::array<int, 2> vars_{0, 0};
    std::optional<Letter> zero_;
    std::vector<int> negation_;
    std::vector<Alphabet> factors_;
    std::vector<int> pair_index_; // s.index * |T| + t.index -> product letter
};

/// Three-case product comparison straight from the component alphabets:
/// (s,t) <=+ (u,v) iff s < u, or s = u plus-class and t <=+ v, or s = u
/// minus-class and t >=- v; <=- swaps the roles of <=+ and <=- on t.
bool product_leq(const Alphabet& s_alphabet, const Alphabet& t_alphabet, std::array<Letter, 2> a,
                 std::array<Letter, 2> b, Sign sign);

} // namespace peakalg

#endif
