#include "peakalg/permutation.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace peakalg {

std::string_view to_string(Kind kind) { return kind == Kind::A ? "A" : "B"; }

Kind parse_kind(std::string_view text)
{
    if (text == "A" || text == "a")
        return Kind::A;
    if (text == "B" || text == "b")
        return Kind::B;
    throw std::invalid_argument("unknown group kind '" + std::string(text) + "'");
}

Permutation::Permutation(std::vector<int> window, Kind kind)
    : kind_(kind), window_(std::move(window))
{
    const int n = size();
    std::vector<bool> seen(n + 1, false);
    for (int v : window_) {
        if (v == 0 || std::abs(v) > n)
            throw std::invalid_argument("window entry out of range: " + std::to_string(v));
        if (v < 0 && kind_ == Kind::A)
            throw std::invalid_argument("negative entry in an unsigned permutation");
        if (seen[std::abs(v)])
            throw std::invalid_argument("repeated window entry: " + std::to_string(std::abs(v)));
        seen[std::abs(v)] = true;
    }
}

Permutation Permutation::identity(int n, Kind kind)
{
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i)
        w[i] = i + 1;
    return Permutation(std::move(w), kind);
}

Permutation Permutation::parse(std::string_view text)
{
    Permutation p = parse(text, Kind::B);
    for (int v : p.window_)
        if (v < 0)
            return p;
    p.kind_ = Kind::A;
    return p;
}

Permutation Permutation::parse(std::string_view text, Kind kind)
{
    std::vector<int> w;
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
        if (!tok.empty() && tok.front() == '+')
            tok.remove_prefix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
            throw std::invalid_argument("malformed window '" + std::string(text) + "'");
        w.push_back(v);
        pos = end + 1;
    }
    return Permutation(std::move(w), kind);
}

int Permutation::operator()(int i) const
{
    if (i == 0)
        return 0;
    if (i < 0) {
        if (kind_ == Kind::A)
            throw std::out_of_range("negative position in an unsigned permutation");
        return -window_.at(-i - 1);
    }
    return window_.at(i - 1);
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(window_.size());
    for (int i = 1; i <= size(); ++i) {
        int v = window_[i - 1];
        inv[std::abs(v) - 1] = v < 0 ? -i : i;
    }
    Permutation p;
    p.kind_ = kind_;
    p.window_ = std::move(inv);
    return p;
}

std::string Permutation::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < window_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(window_[i]);
    }
    return out;
}

Permutation compose(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("compose: size mismatch");
    if (a.kind() != b.kind())
        throw std::invalid_argument("compose: kind mismatch");
    std::vector<int> w(a.size());
    for (int i = 1; i <= a.size(); ++i)
        w[i - 1] = a(b(i));
    return Permutation(std::move(w), a.kind());
}

namespace {

std::size_t factorial(int n)
{
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::size_t>(i);
    return f;
}

} // namespace

std::size_t group_order(int n, Kind kind)
{
    std::size_t f = factorial(n);
    return kind == Kind::A ? f : f << n;
}

std::size_t rank(const Permutation& p)
{
    const int n = p.size();
    const auto w = p.window();
    std::size_t lex = 0;
    std::uint64_t used = 0;
    for (int i = 0; i < n; ++i) {
        int v = std::abs(w[i]);
        int smaller = 0;
        for (int u = 1; u < v; ++u)
            if (!(used >> u & 1u))
                ++smaller;
        lex = lex * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller);
        used |= std::uint64_t{1} << v;
    }
    if (p.kind() == Kind::A)
        return lex;
    std::size_t mask = 0;
    for (int i = 0; i < n; ++i)
        if (w[i] < 0)
            mask |= std::size_t{1} << i;
    return (lex << n) | mask;
}

Permutation unrank(std::size_t r, int n, Kind kind)
{
    if (r >= group_order(n, kind))
        throw std::out_of_range("unrank: rank out of range");
    std::size_t mask = 0;
    if (kind == Kind::B) {
        mask = r & ((std::size_t{1} << n) - 1);
        r >>= n;
    }
    std::vector<int> digits(n);
    for (int i = n - 1; i >= 0; --i) {
        std::size_t base = static_cast<std::size_t>(n - i);
        digits[i] = static_cast<int>(r % base);
        r /= base;
    }
    std::vector<int> w(n);
    std::uint64_t used = 0;
    for (int i = 0; i < n; ++i) {
        int skip = digits[i];
        int v = 1;
        for (;; ++v) {
            if (used >> v & 1u)
                continue;
            if (skip-- == 0)
                break;
        }
        used |= std::uint64_t{1} << v;
        w[i] = (mask >> i & 1u) ? -v : v;
    }
    return Permutation(std::move(w), kind);
}

std::vector<Permutation> enumerate_group(int n, Kind kind)
{
    const std::size_t order = group_order(n, kind);
    std::vector<Permutation> out;
    out.reserve(order);
    for (std::size_t r = 0; r < order; ++r)
        out.push_back(unrank(r, n, kind));
    return out;
}

} // namespace peakalg
