#include "peakalg/statistics.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace peakalg {

std::string_view to_string(Flavor flavor)
{
    switch (flavor) {
    case Flavor::interiorPeak: return "interior";
    case Flavor::leftPeak: return "left";
    case Flavor::typeBPeak: return "typeB";
    case Flavor::rightPeak: return "right";
    case Flavor::exteriorPeak: return "exterior";
    case Flavor::descentA: return "descentA";
    case Flavor::descentB: return "descentB";
    }
    return "?";
}

Flavor parse_flavor(std::string_view text)
{
    if (text == "interior" || text == "interiorPeak")
        return Flavor::interiorPeak;
    if (text == "left" || text == "leftPeak")
        return Flavor::leftPeak;
    if (text == "typeB" || text == "typeBPeak")
        return Flavor::typeBPeak;
    if (text == "right" || text == "rightPeak")
        return Flavor::rightPeak;
    if (text == "exterior" || text == "exteriorPeak")
        return Flavor::exteriorPeak;
    if (text == "descentA")
        return Flavor::descentA;
    if (text == "descentB")
        return Flavor::descentB;
    throw std::invalid_argument("unknown flavor '" + std::string(text) + "'");
}

bool is_peak_flavor(Flavor flavor)
{
    return flavor != Flavor::descentA && flavor != Flavor::descentB;
}

bool requires_signed(Flavor flavor)
{
    return flavor == Flavor::typeBPeak || flavor == Flavor::descentB;
}

Interval ambient_interval(Flavor flavor, int n)
{
    switch (flavor) {
    case Flavor::interiorPeak: return {2, n - 1};
    case Flavor::leftPeak: return {1, n - 1};
    case Flavor::typeBPeak: return {0, n - 1};
    case Flavor::rightPeak: return {2, n};
    case Flavor::exteriorPeak: return {1, n};
    case Flavor::descentA: return {1, n - 1};
    case Flavor::descentB: return {0, n - 1};
    }
    return {0, -1};
}

namespace {

std::uint64_t interval_mask(Interval iv)
{
    std::uint64_t m = 0;
    for (int i = iv.lo; i <= iv.hi; ++i)
        m |= std::uint64_t{1} << i;
    return m;
}

void validate(Flavor flavor, int n, std::uint64_t mask)
{
    if (n < 0 || n > 62)
        throw std::invalid_argument("StatSet size out of range");
    if (mask & ~interval_mask(ambient_interval(flavor, n)))
        throw std::invalid_argument("position outside the ambient interval of flavor " +
                                    std::string(to_string(flavor)));
    if (is_peak_flavor(flavor) && (mask & (mask >> 1)))
        throw std::invalid_argument("peak set contains consecutive positions");
}

} // namespace

StatSet::StatSet(Flavor flavor, int n, const std::vector<int>& members) : flavor_(flavor), n_(n)
{
    for (int i : members) {
        if (i < 0 || i > 62)
            throw std::invalid_argument("position out of range: " + std::to_string(i));
        mask_ |= std::uint64_t{1} << i;
    }
    validate(flavor_, n_, mask_);
}

StatSet StatSet::from_mask(Flavor flavor, int n, std::uint64_t mask)
{
    validate(flavor, n, mask);
    StatSet s;
    s.flavor_ = flavor;
    s.n_ = n;
    s.mask_ = mask;
    return s;
}

int StatSet::size() const { return std::popcount(mask_); }

std::vector<int> StatSet::members() const
{
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if (mask_ >> i & 1u)
            out.push_back(i);
    return out;
}

std::string StatSet::to_string() const
{
    std::string out = "{";
    bool first = true;
    for (int i : members()) {
        if (!first)
            out += ',';
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

StatSet parse_stat_set(std::string_view text, Flavor flavor, int n)
{
    while (!text.empty() && (text.front() == '{' || text.front() == ' '))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == '}' || text.back() == ' '))
        text.remove_suffix(1);
    std::vector<int> members;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("malformed set '" + std::string(text) + "'");
        members.push_back(v);
        pos = end + 1;
    }
    return StatSet(flavor, n, members);
}

StatSet peak_set(const Permutation& p, Flavor flavor)
{
    if (!is_peak_flavor(flavor))
        throw std::invalid_argument("peak_set: descent flavor requested");
    if (requires_signed(flavor) && !p.is_signed())
        throw std::invalid_argument("peak_set: typeB peaks need a signed permutation");
    const int n = p.size();
    auto value = [&](int i) { return i > n ? 0 : p(i); };
    const Interval iv = ambient_interval(flavor, n);
    std::uint64_t mask = 0;
    for (int i = std::max(iv.lo, 1); i <= iv.hi; ++i)
        if (value(i - 1) < value(i) && value(i) > value(i + 1))
            mask |= std::uint64_t{1} << i;
    if (flavor == Flavor::typeBPeak && n > 0 && p(1) < 0)
        mask |= 1u;
    return StatSet::from_mask(flavor, n, mask);
}

StatSet descent_set(const Permutation& p, Flavor flavor)
{
    if (is_peak_flavor(flavor))
        throw std::invalid_argument("descent_set: peak flavor requested");
    if (requires_signed(flavor) && !p.is_signed())
        throw std::invalid_argument("descent_set: descentB needs a signed permutation");
    const int n = p.size();
    const Interval iv = ambient_interval(flavor, n);
    std::uint64_t mask = 0;
    for (int i = iv.lo; i <= iv.hi; ++i)
        if (p(i) > p(i + 1))
            mask |= std::uint64_t{1} << i;
    return StatSet::from_mask(flavor, n, mask);
}

StatSet statistic(const Permutation& p, Flavor flavor)
{
    return is_peak_flavor(flavor) ? peak_set(p, flavor) : descent_set(p, flavor);
}

Composition::Composition(std::vector<int> parts_, bool typeB_) : parts(std::move(parts_)), typeB(typeB_)
{
    if (typeB && parts.empty())
        throw std::invalid_argument("a pseudo-composition has at least one part");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const bool may_be_zero = typeB && i == 0;
        if (parts[i] < 0 || (parts[i] == 0 && !may_be_zero))
            throw std::invalid_argument("invalid composition part");
    }
}

int Composition::size() const
{
    int s = 0;
    for (int p : parts)
        s += p;
    return s;
}

std::string Composition::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts[i]);
    }
    return out + ")";
}

std::uint64_t subset_of(const Composition& alpha)
{
    std::uint64_t mask = 0;
    int partial = 0;
    for (std::size_t i = 0; i + 1 < alpha.parts.size(); ++i) {
        partial += alpha.parts[i];
        mask |= std::uint64_t{1} << partial;
    }
    return mask;
}

Composition composition_from_subset(std::uint64_t mask, int n, bool typeB)
{
    const std::uint64_t allowed = interval_mask({typeB ? 0 : 1, n - 1});
    if (n < 0 || n > 62 || (mask & ~allowed))
        throw std::invalid_argument("subset outside the composition range");
    if (!typeB && n == 0)
        return Composition({}, false);
    std::vector<int> parts;
    int last = 0;
    for (int i = 0; i < n; ++i) {
        if (mask >> i & 1u) {
            parts.push_back(i - last);
            last = i;
        }
    }
    parts.push_back(n - last);
    return Composition(std::move(parts), typeB);
}

std::vector<Composition> compositions(int n, bool typeB)
{
    std::vector<Composition> out;
    if (!typeB && n == 0)
        return {Composition({}, false)};
    const int lo = typeB ? 0 : 1;
    const int bits = n - lo;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m)
        out.push_back(composition_from_subset(m << lo, n, typeB));
    return out;
}

std::uint64_t fibonacci(int n)
{
    std::uint64_t a = 1, b = 1;
    for (int i = 1; i < n; ++i) {
        std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    return b;
}

std::vector<StatSet> enumerate_peak_sets(int n, Flavor flavor)
{
    const Interval iv = ambient_interval(flavor, n);
    std::vector<StatSet> out;
    if (iv.hi < iv.lo)
        return {StatSet::from_mask(flavor, n, 0)};
    const int width = iv.hi - iv.lo + 1;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << width); ++m) {
        if (is_peak_flavor(flavor) && (m & (m >> 1)))
            continue;
        out.push_back(StatSet::from_mask(flavor, n, m << iv.lo));
    }
    return out;
}

} // namespace peakalg
