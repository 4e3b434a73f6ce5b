#include "peakalg/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace peakalg {

namespace {

// Parses one "a<b" / "a>b" line into the pair (smaller, larger).
std::pair<int, int> parse_relation(const std::string& line)
{
    const auto op = line.find_first_of("<>");
    if (op == std::string::npos)
        throw std::invalid_argument("poset line without '<' or '>': " + line);
    int lhs = 0, rhs = 0;
    try {
        std::size_t used = 0;
        lhs = std::stoi(line.substr(0, op), &used);
        rhs = std::stoi(line.substr(op + 1), &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed poset line: " + line);
    }
    return line[op] == '<' ? std::pair{lhs, rhs} : std::pair{rhs, lhs};
}

std::vector<std::pair<int, int>> read_relations(std::istream& in)
{
    std::vector<std::pair<int, int>> rels;
    std::string line;
    while (std::getline(in, line)) {
        line.erase(std::remove_if(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; }),
                   line.end());
        if (line.empty() || line.front() == '#')
            continue;
        rels.push_back(parse_relation(line));
    }
    return rels;
}

} // namespace

LabeledPoset::LabeledPoset(int n) : n_(n), rel_(static_cast<std::size_t>(n) * n, false) {}

LabeledPoset::LabeledPoset(int n, const std::vector<std::pair<int, int>>& relations) : LabeledPoset(n)
{
    for (auto [a, b] : relations) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw std::invalid_argument("poset label out of range");
        if (a == b)
            throw std::invalid_argument("reflexive relation in a strict order");
        rel_[index(a, b)] = true;
    }
    close();
}

void LabeledPoset::close()
{
    for (int k = 1; k <= n_; ++k)
        for (int i = 1; i <= n_; ++i)
            if (rel_[index(i, k)])
                for (int j = 1; j <= n_; ++j)
                    if (rel_[index(k, j)])
                        rel_[index(i, j)] = true;
    for (int i = 1; i <= n_; ++i)
        if (rel_[index(i, i)])
            throw std::invalid_argument("poset relations contain a cycle");
}

std::vector<std::pair<int, int>> LabeledPoset::relations() const
{
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= n_; ++a)
        for (int b = 1; b <= n_; ++b)
            if (less(a, b))
                out.emplace_back(a, b);
    return out;
}

LabeledPoset LabeledPoset::chain(const Permutation& pi)
{
    std::vector<std::pair<int, int>> rels;
    for (int s = 1; s < pi.size(); ++s)
        rels.emplace_back(pi(s), pi(s + 1));
    return LabeledPoset(pi.size(), rels);
}

LabeledPoset LabeledPoset::parse(std::istream& in, int n)
{
    const auto rels = read_relations(in);
    int largest = 0;
    for (auto [a, b] : rels)
        largest = std::max({largest, a, b});
    return LabeledPoset(n > 0 ? n : largest, rels);
}

TypeBPoset::TypeBPoset(int n) : n_(n), rel_(static_cast<std::size_t>(2 * n + 1) * (2 * n + 1), false) {}

TypeBPoset::TypeBPoset(int n, const std::vector<std::pair<int, int>>& relations) : TypeBPoset(n)
{
    for (auto [a, b] : relations) {
        if (std::abs(a) > n || std::abs(b) > n)
            throw std::invalid_argument("type B poset label out of range");
        if (a == b)
            throw std::invalid_argument("reflexive relation in a strict order");
        rel_[index(a, b)] = true;
        rel_[index(-b, -a)] = true;
    }
    close();
}

void TypeBPoset::close()
{
    for (int k = -n_; k <= n_; ++k)
        for (int i = -n_; i <= n_; ++i)
            if (rel_[index(i, k)])
                for (int j = -n_; j <= n_; ++j)
                    if (rel_[index(k, j)])
                        rel_[index(i, j)] = true;
    for (int i = -n_; i <= n_; ++i)
        if (rel_[index(i, i)])
            throw std::invalid_argument("type B poset relations contain a cycle");
}

std::vector<std::pair<int, int>> TypeBPoset::relations() const
{
    std::vector<std::pair<int, int>> out;
    for (int a = -n_; a <= n_; ++a)
        for (int b = -n_; b <= n_; ++b)
            if (less(a, b))
                out.emplace_back(a, b);
    return out;
}

TypeBPoset TypeBPoset::chain(const Permutation& pi)
{
    std::vector<std::pair<int, int>> rels;
    for (int s = 0; s < pi.size(); ++s)
        rels.emplace_back(pi(s), pi(s + 1));
    return TypeBPoset(pi.size(), rels);
}

TypeBPoset TypeBPoset::parse(std::istream& in, int n)
{
    const auto rels = read_relations(in);
    int largest = 0;
    for (auto [a, b] : rels)
        largest = std::max({largest, std::abs(a), std::abs(b)});
    return TypeBPoset(n > 0 ? n : largest, rels);
}

namespace {

void extend(const LabeledPoset& p, std::vector<int>& window, std::vector<bool>& placed,
            std::vector<Permutation>& out)
{
    const int n = p.size();
    if (static_cast<int>(window.size()) == n) {
        out.emplace_back(window);
        return;
    }
    for (int x = 1; x <= n; ++x) {
        if (placed[x])
            continue;
        bool minimal = true;
        for (int y = 1; y <= n && minimal; ++y)
            if (!placed[y] && p.less(y, x))
                minimal = false;
        if (!minimal)
            continue;
        placed[x] = true;
        window.push_back(x);
        extend(p, window, placed, out);
        window.pop_back();
        placed[x] = false;
    }
}

// Chain positions: pos[label + n] for labels whose place is already fixed.
void extend_b(const TypeBPoset& p, std::vector<int>& window, std::vector<int>& pos, std::vector<bool>& fixed,
              std::vector<Permutation>& out)
{
    const int n = p.size();
    const int s = static_cast<int>(window.size());
    if (s == n) {
        out.emplace_back(window, Kind::B);
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (fixed[v + n])
            continue;
        for (int x : {v, -v}) {
            pos[x + n] = s + 1;
            pos[-x + n] = -(s + 1);
            fixed[x + n] = fixed[-x + n] = true;
            bool ok = true;
            for (int y = -n; y <= n && ok; ++y) {
                if (!fixed[y + n])
                    continue;
                for (int z : {x, -x}) {
                    if (p.less(y, z) && !(pos[y + n] < pos[z + n]))
                        ok = false;
                    if (p.less(z, y) && !(pos[z + n] < pos[y + n]))
                        ok = false;
                }
            }
            if (ok) {
                window.push_back(x);
                extend_b(p, window, pos, fixed, out);
                window.pop_back();
            }
            fixed[x + n] = fixed[-x + n] = false;
        }
    }
}

} // namespace

std::vector<Permutation> linear_extensions(const LabeledPoset& p)
{
    std::vector<Permutation> out;
    std::vector<int> window;
    std::vector<bool> placed(p.size() + 1, false);
    extend(p, window, placed, out);
    return out;
}

std::vector<Permutation> linear_extensions_b(const TypeBPoset& p)
{
    const int n = p.size();
    std::vector<Permutation> out;
    std::vector<int> window;
    std::vector<int> pos(2 * n + 1, 0);
    std::vector<bool> fixed(2 * n + 1, false);
    fixed[n] = true; // label 0 sits at position 0
    extend_b(p, window, pos, fixed, out);
    std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) { return rank(a) < rank(b); });
    return out;
}

LabeledPoset zigzag_poset(const Permutation& pi, std::uint64_t descents)
{
    const int n = pi.size();
    std::uint64_t allowed = 0;
    for (int s = 1; s < n; ++s)
        allowed |= std::uint64_t{1} << s;
    if (descents & ~allowed)
        throw std::invalid_argument("zigzag_poset: descent positions must lie in [1, n-1]");
    std::vector<std::pair<int, int>> rels;
    for (int s = 1; s < n; ++s) {
        if (descents >> s & 1u)
            rels.emplace_back(pi(s + 1), pi(s));
        else
            rels.emplace_back(pi(s), pi(s + 1));
    }
    return LabeledPoset(n, rels);
}

LabeledPoset random_poset(int n, double density, std::mt19937_64& rng)
{
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i + 1;
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution keep(density);
    std::vector<std::pair<int, int>> rels;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (keep(rng))
                rels.emplace_back(order[i], order[j]);
    return LabeledPoset(n, rels);
}

TypeBPoset random_type_b_poset(int n, double density, std::mt19937_64& rng)
{
    // Chain -w(n) < ... < -w(1) < 0 < w(1) < ... < w(n) for a random signed w.
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i)
        w[i] = i + 1;
    std::shuffle(w.begin(), w.end(), rng);
    std::bernoulli_distribution flip(0.5);
    for (int& v : w)
        if (flip(rng))
            v = -v;
    std::vector<int> chain;
    for (int i = n - 1; i >= 0; --i)
        chain.push_back(-w[i]);
    chain.push_back(0);
    for (int i = 0; i < n; ++i)
        chain.push_back(w[i]);
    std::bernoulli_distribution keep(density);
    std::vector<std::pair<int, int>> rels;
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = i + 1; j < chain.size(); ++j)
            if (keep(rng))
                rels.emplace_back(chain[i], chain[j]);
    return TypeBPoset(n, rels);
}

} // namespace peakalg
