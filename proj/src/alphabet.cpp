#include "peakalg/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace peakalg {

std::string_view to_string(AlphabetVariant variant)
{
    switch (variant) {
    case AlphabetVariant::prime: return "prime";
    case AlphabetVariant::left: return "left";
    case AlphabetVariant::plusMinus: return "plusMinus";
    case AlphabetVariant::product: return "product";
    }
    return "?";
}

AlphabetVariant parse_alphabet_variant(std::string_view text)
{
    if (text == "prime")
        return AlphabetVariant::prime;
    if (text == "left")
        return AlphabetVariant::left;
    if (text == "plusMinus" || text == "pm")
        return AlphabetVariant::plusMinus;
    throw std::invalid_argument("unknown alphabet '" + std::string(text) + "'");
}

Alphabet Alphabet::prime(int k)
{
    if (k < 0)
        throw std::invalid_argument("alphabet truncation must be nonnegative");
    Alphabet a;
    a.variant_ = AlphabetVariant::prime;
    a.k_ = k;
    a.vars_ = {k, 0};
    for (int i = 1; i <= k; ++i) {
        a.letters_.push_back({false, {i - 1, -1}, {-1, -1}, "-" + std::to_string(i)});
        a.letters_.push_back({true, {i - 1, -1}, {-1, -1}, std::to_string(i)});
    }
    return a;
}

Alphabet Alphabet::left(int k)
{
    if (k < 0)
        throw std::invalid_argument("alphabet truncation must be nonnegative");
    Alphabet a;
    a.variant_ = AlphabetVariant::left;
    a.k_ = k;
    a.vars_ = {k + 1, 0};
    a.letters_.push_back({true, {0, -1}, {-1, -1}, "0"});
    a.zero_ = Letter{0};
    for (int i = 1; i <= k; ++i) {
        a.letters_.push_back({false, {i, -1}, {-1, -1}, "-" + std::to_string(i)});
        a.letters_.push_back({true, {i, -1}, {-1, -1}, std::to_string(i)});
    }
    return a;
}

Alphabet Alphabet::plus_minus(int k)
{
    if (k < 0)
        throw std::invalid_argument("alphabet truncation must be nonnegative");
    Alphabet a;
    a.variant_ = AlphabetVariant::plusMinus;
    a.k_ = k;
    a.vars_ = {k + 1, 0};
    for (int i = k; i >= 1; --i) {
        a.letters_.push_back({true, {i, -1}, {-1, -1}, "-" + std::to_string(i)});
        a.letters_.push_back({false, {i, -1}, {-1, -1}, "-" + std::to_string(i) + "^-1"});
    }
    a.zero_ = Letter{a.size()};
    a.letters_.push_back({true, {0, -1}, {-1, -1}, "0"});
    for (int i = 1; i <= k; ++i) {
        a.letters_.push_back({false, {i, -1}, {-1, -1}, std::to_string(i) + "^-1"});
        a.letters_.push_back({true, {i, -1}, {-1, -1}, std::to_string(i)});
    }
    a.negation_.resize(a.size());
    for (int i = 0; i < a.size(); ++i)
        a.negation_[i] = a.size() - 1 - i;
    return a;
}

Alphabet Alphabet::product(const Alphabet& s, const Alphabet& t)
{
    if (s.variant_ == AlphabetVariant::product || t.variant_ == AlphabetVariant::product)
        throw std::invalid_argument("nested product alphabets are not supported");
    if (s.has_negation() != t.has_negation())
        throw std::invalid_argument("product of a signed and an unsigned alphabet");

    Alphabet a;
    a.variant_ = AlphabetVariant::product;
    a.k_ = s.k_;
    a.vars_ = {s.vars_[0], t.vars_[0]};
    a.factors_ = {s, t};

    // Sort all pairs by the up-down order.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < s.size(); ++i)
        for (int j = 0; j < t.size(); ++j)
            pairs.emplace_back(i, j);
    std::sort(pairs.begin(), pairs.end(), [&](auto x, auto y) {
        if (x.first != y.first)
            return x.first < y.first;
        return s.letters_[x.first].plus_class ? x.second < y.second : x.second > y.second;
    });

    a.pair_index_.assign(pairs.size(), -1);
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        auto [i, j] = pairs[idx];
        const auto& ls = s.letters_[i];
        const auto& lt = t.letters_[j];
        a.letters_.push_back({ls.plus_class == lt.plus_class,
                              {ls.weight[0], lt.weight[0]},
                              {i, j},
                              "(" + ls.label + "," + lt.label + ")"});
        a.pair_index_[static_cast<std::size_t>(i) * t.size() + j] = static_cast<int>(idx);
    }
    if (s.zero_ && t.zero_)
        a.zero_ = Letter{a.pair_index_[static_cast<std::size_t>(s.zero_->index) * t.size() + t.zero_->index]};
    if (s.has_negation()) {
        a.negation_.resize(a.size());
        for (int idx = 0; idx < a.size(); ++idx) {
            const auto& p = a.letters_[idx].parts;
            const int ni = s.negation_[p[0]];
            const int nj = t.negation_[p[1]];
            a.negation_[idx] = a.pair_index_[static_cast<std::size_t>(ni) * t.size() + nj];
        }
    }
    return a;
}

Letter Alphabet::check(Letter a) const
{
    if (a.index < 0 || a.index >= size())
        throw std::out_of_range("letter does not belong to this alphabet");
    return a;
}

const Alphabet::LetterInfo& Alphabet::info(Letter a) const { return letters_[check(a).index]; }

Letter Alphabet::letter(int index) const { return check(Letter{index}); }

Letter Alphabet::negate(Letter a) const
{
    if (negation_.empty())
        throw std::logic_error("alphabet has no negation");
    return Letter{negation_[check(a).index]};
}

bool Alphabet::leq_plus(Letter a, Letter b) const
{
    check(a);
    check(b);
    return a.index < b.index || (a == b && letters_[a.index].plus_class);
}

bool Alphabet::leq_minus(Letter a, Letter b) const
{
    check(a);
    check(b);
    return a.index < b.index || (a == b && !letters_[a.index].plus_class);
}

Letter Alphabet::find(std::string_view label) const
{
    for (int i = 0; i < size(); ++i)
        if (letters_[i].label == label)
            return Letter{i};
    throw std::invalid_argument("no letter labelled '" + std::string(label) + "'");
}

std::array<Letter, 2> Alphabet::components(Letter a) const
{
    if (variant_ != AlphabetVariant::product)
        throw std::logic_error("components() on a non-product alphabet");
    const auto& p = info(a).parts;
    return {Letter{p[0]}, Letter{p[1]}};
}

Letter Alphabet::pair(Letter s, Letter t) const
{
    if (variant_ != AlphabetVariant::product)
        throw std::logic_error("pair() on a non-product alphabet");
    factors_[0].check(s);
    factors_[1].check(t);
    return Letter{pair_index_[static_cast<std::size_t>(s.index) * factors_[1].size() + t.index]};
}

const Alphabet& Alphabet::component(int which) const
{
    if (variant_ != AlphabetVariant::product)
        throw std::logic_error("component() on a non-product alphabet");
    return factors_.at(which);
}

bool operator==(const Alphabet& a, const Alphabet& b)
{
    if (a.variant_ != b.variant_ || a.k_ != b.k_)
        return false;
    if (a.variant_ != AlphabetVariant::product)
        return true;
    return a.factors_[0] == b.factors_[0] && a.factors_[1] == b.factors_[1];
}

bool product_leq(const Alphabet& s_alphabet, const Alphabet& t_alphabet, std::array<Letter, 2> a,
                 std::array<Letter, 2> b, Sign sign)
{
    const auto [s, t] = a;
    const auto [u, v] = b;
    if (s_alphabet.less(s, u))
        return true;
    if (s != u)
        return false;
    const Sign flipped = sign == Sign::plus ? Sign::minus : Sign::plus;
    if (s_alphabet.info(s).plus_class)
        return t_alphabet.leq(t, v, sign);
    return t_alphabet.leq(v, t, flipped);
}

} // namespace peakalg
