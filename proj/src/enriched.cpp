#include "peakalg/enriched.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "peakalg/statistics.hpp"

namespace peakalg {

std::int64_t Census::total() const
{
    std::int64_t t = 0;
    for (const auto& [exps, c] : terms)
        t += c;
    return t;
}

namespace {

void require_compatible(const Permutation& pi, const Alphabet& a)
{
    if (pi.is_signed()) {
        if (!a.has_negation() || !a.zero())
            throw std::invalid_argument("type B enriched maps need a plusMinus alphabet");
    } else if (a.has_negation()) {
        throw std::invalid_argument("type A enriched maps need a prime or left alphabet");
    }
}

// Sign of the comparison between chain positions i and i+1 (i = 0 is the
// s_0 step of type B chains).
std::vector<Sign> transition_signs(const Permutation& pi)
{
    const int n = pi.size();
    std::vector<Sign> signs(n > 0 ? n : 0, Sign::plus);
    for (int i = pi.is_signed() ? 0 : 1; i < n; ++i)
        signs[i] = pi(i) > pi(i + 1) ? Sign::minus : Sign::plus;
    return signs;
}

// Calls visit(chain) for every valid chain of letter indices.
template <class Visit>
class ChainWalker {
public:
    ChainWalker(const Permutation& pi, const Alphabet& a, Visit& visit)
        : n_(pi.size()), a_(a), signs_(transition_signs(pi)), signed_(pi.is_signed()), visit_(visit)
    {
        plus_.resize(a.size());
        for (int i = 0; i < a.size(); ++i)
            plus_[i] = a.info(Letter{i}).plus_class;
        chain_.resize(n_);
    }

    void run()
    {
        if (n_ == 0) {
            visit_(chain_);
            return;
        }
        if (signed_)
            step(0, a_.zero()->index, signs_[0]);
        else
            descend(0, 0);
    }

private:
    void step(int pos, int prev, Sign sign)
    {
        const bool equal_ok = plus_[prev] == (sign == Sign::plus);
        descend(pos, equal_ok ? prev : prev + 1);
    }

    void descend(int pos, int from)
    {
        const int size = a_.size();
        for (int v = from; v < size; ++v) {
            chain_[pos] = v;
            if (pos + 1 == n_)
                visit_(chain_);
            else
                step(pos + 1, v, signs_[pos + 1]);
        }
    }

    int n_;
    const Alphabet& a_;
    std::vector<Sign> signs_;
    bool signed_;
    Visit& visit_;
    std::vector<bool> plus_;
    std::vector<int> chain_;
};

template <class Visit>
void walk_chains(const Permutation& pi, const Alphabet& a, Visit visit)
{
    require_compatible(pi, a);
    ChainWalker<Visit> walker(pi, a, visit);
    walker.run();
}

// Mixed-radix encoding of exponent vectors.
class WeightKey {
public:
    WeightKey(const Alphabet& a, int n) : radix_(static_cast<std::uint64_t>(n) + 1)
    {
        const auto counts = a.variable_counts();
        num_vars_ = counts[0] + counts[1];
        std::vector<std::uint64_t> power(num_vars_ + 1, 1);
        for (int v = 1; v <= num_vars_; ++v)
            power[v] = power[v - 1] * radix_;
        add_.resize(a.size());
        for (int i = 0; i < a.size(); ++i) {
            const auto& w = a.info(Letter{i}).weight;
            std::uint64_t key = 0;
            if (w[0] >= 0)
                key += power[w[0]];
            if (w[1] >= 0)
                key += power[counts[0] + w[1]];
            add_[i] = key;
        }
    }

    std::uint64_t of(int letter) const { return add_[letter]; }
    int num_vars() const { return num_vars_; }

    std::vector<int> decode(std::uint64_t key) const
    {
        std::vector<int> exps(num_vars_);
        for (int v = 0; v < num_vars_; ++v) {
            exps[v] = static_cast<int>(key % radix_);
            key /= radix_;
        }
        return exps;
    }

private:
    std::uint64_t radix_;
    int num_vars_ = 0;
    std::vector<std::uint64_t> add_;
};

Census to_census(const WeightKey& key, const std::unordered_map<std::uint64_t, std::int64_t>& acc)
{
    Census c;
    c.num_vars = key.num_vars();
    for (const auto& [k, count] : acc)
        c.terms[key.decode(k)] += count;
    return c;
}

} // namespace

std::vector<Letter> chain_values(const Permutation& pi, const EnrichedMap& f, const Alphabet& alphabet)
{
    const int n = pi.size();
    if (static_cast<int>(f.values.size()) != n)
        throw std::invalid_argument("enriched map has the wrong size");
    std::vector<Letter> chain(n);
    for (int i = 1; i <= n; ++i) {
        const int v = pi(i);
        const Letter x = f.values[std::abs(v) - 1];
        chain[i - 1] = v > 0 ? x : alphabet.negate(x);
    }
    return chain;
}

EnrichedMap map_from_chain(const Permutation& pi, const std::vector<Letter>& chain, const Alphabet& alphabet)
{
    const int n = pi.size();
    EnrichedMap f;
    f.values.resize(n);
    for (int i = 1; i <= n; ++i) {
        const int v = pi(i);
        f.values[std::abs(v) - 1] = v > 0 ? chain[i - 1] : alphabet.negate(chain[i - 1]);
    }
    return f;
}

std::vector<EnrichedMap> enumerate_epp(const Permutation& pi, const Alphabet& alphabet)
{
    std::vector<EnrichedMap> out;
    std::vector<Letter> chain(pi.size());
    walk_chains(pi, alphabet, [&](const std::vector<int>& c) {
        for (std::size_t i = 0; i < c.size(); ++i)
            chain[i] = Letter{c[i]};
        out.push_back(map_from_chain(pi, chain, alphabet));
    });
    return out;
}

std::size_t count_epp(const Permutation& pi, const Alphabet& alphabet)
{
    std::size_t count = 0;
    walk_chains(pi, alphabet, [&](const std::vector<int>&) { ++count; });
    return count;
}

Census census(const Permutation& pi, const Alphabet& alphabet)
{
    const WeightKey key(alphabet, pi.size());
    std::unordered_map<std::uint64_t, std::int64_t> acc;
    walk_chains(pi, alphabet, [&](const std::vector<int>& c) {
        std::uint64_t k = 0;
        for (int v : c)
            k += key.of(v);
        ++acc[k];
    });
    return to_census(key, acc);
}

bool is_enriched(const Permutation& pi, const EnrichedMap& f, const Alphabet& alphabet)
{
    require_compatible(pi, alphabet);
    const auto chain = chain_values(pi, f, alphabet);
    const auto signs = transition_signs(pi);
    const int n = pi.size();
    if (pi.is_signed() && n > 0 && !alphabet.leq(*alphabet.zero(), chain[0], signs[0]))
        return false;
    for (int i = 1; i < n; ++i)
        if (!alphabet.leq(chain[i - 1], chain[i], signs[i]))
            return false;
    return true;
}

Census monomial_census(const std::vector<EnrichedMap>& maps, const Alphabet& alphabet)
{
    Census c;
    c.num_vars = alphabet.total_variables();
    const int offset = alphabet.variable_counts()[0];
    for (const auto& f : maps) {
        std::vector<int> exps(c.num_vars, 0);
        for (Letter x : f.values) {
            const auto& w = alphabet.info(x).weight;
            if (w[0] >= 0)
                ++exps[w[0]];
            if (w[1] >= 0)
                ++exps[offset + w[1]];
        }
        ++c.terms[exps];
    }
    return c;
}

namespace {

bool relation_holds(const Alphabet& a, int lo_label, Letter lo, int hi_label, Letter hi)
{
    return lo_label < hi_label ? a.leq_plus(lo, hi) : a.leq_minus(lo, hi);
}

void assign_labels(const LabeledPoset& p, const Alphabet& a, std::vector<Letter>& f, int j,
                   std::vector<EnrichedMap>& out)
{
    const int n = p.size();
    if (j > n) {
        out.push_back({f});
        return;
    }
    for (int v = 0; v < a.size(); ++v) {
        f[j - 1] = Letter{v};
        bool ok = true;
        for (int i = 1; i < j && ok; ++i) {
            if (p.less(i, j) && !relation_holds(a, i, f[i - 1], j, f[j - 1]))
                ok = false;
            if (p.less(j, i) && !relation_holds(a, j, f[j - 1], i, f[i - 1]))
                ok = false;
        }
        if (ok)
            assign_labels(p, a, f, j + 1, out);
    }
}

void assign_labels_b(const TypeBPoset& p, const Alphabet& a, std::vector<Letter>& f, int j,
                     std::vector<EnrichedMap>& out)
{
    const int n = p.size();
    if (j > n) {
        out.push_back({f});
        return;
    }
    auto value = [&](int label) {
        if (label == 0)
            return *a.zero();
        return label > 0 ? f[label - 1] : a.negate(f[-label - 1]);
    };
    for (int v = 0; v < a.size(); ++v) {
        f[j - 1] = Letter{v};
        bool ok = true;
        for (int x : {j, -j}) {
            for (int y = -j; y <= j && ok; ++y) {
                if (y == x)
                    continue;
                if (p.less(y, x) && !relation_holds(a, y, value(y), x, value(x)))
                    ok = false;
                if (p.less(x, y) && !relation_holds(a, x, value(x), y, value(y)))
                    ok = false;
            }
        }
        if (ok)
            assign_labels_b(p, a, f, j + 1, out);
    }
}

} // namespace

std::vector<EnrichedMap> enumerate_epp(const LabeledPoset& p, const Alphabet& alphabet)
{
    if (alphabet.has_negation())
        throw std::invalid_argument("type A enriched maps need a prime or left alphabet");
    std::vector<EnrichedMap> out;
    std::vector<Letter> f(p.size());
    assign_labels(p, alphabet, f, 1, out);
    return out;
}

std::vector<EnrichedMap> enumerate_epp(const TypeBPoset& p, const Alphabet& alphabet)
{
    if (!alphabet.has_negation() || !alphabet.zero())
        throw std::invalid_argument("type B enriched maps need a plusMinus alphabet");
    std::vector<EnrichedMap> out;
    std::vector<Letter> f(p.size());
    assign_labels_b(p, alphabet, f, 1, out);
    return out;
}

std::vector<EnrichedMap> enumerate_epp_product(const Permutation& pi, const Alphabet& s, const Alphabet& t)
{
    return enumerate_epp(pi, Alphabet::product(s, t));
}

Census factorization_census(const Permutation& pi, const Alphabet& s, const Alphabet& t)
{
    const int n = pi.size();
    Census out;
    out.num_vars = s.total_variables() + t.total_variables();
    for (const auto& sigma : enumerate_group(n, pi.kind())) {
        const Permutation tau = compose(sigma.inverse(), pi);
        const Census left = census(tau, s);
        const Census right = census(sigma, t);
        for (const auto& [ea, ca] : left.terms) {
            for (const auto& [eb, cb] : right.terms) {
                std::vector<int> exps = ea;
                exps.insert(exps.end(), eb.begin(), eb.end());
                out.terms[exps] += ca * cb;
            }
        }
    }
    return out;
}

bool check_product_bijection(const Permutation& pi, const Alphabet& s, const Alphabet& t)
{
    const int n = pi.size();
    const Alphabet st = Alphabet::product(s, t);
    std::set<std::vector<int>> image;
    std::size_t produced = 0;
    for (const auto& sigma : enumerate_group(n, pi.kind())) {
        const Permutation tau = compose(sigma.inverse(), pi);
        std::vector<std::vector<int>> a_chains;
        walk_chains(tau, s, [&](const std::vector<int>& c) { a_chains.push_back(c); });
        std::vector<std::vector<int>> b_chains;
        walk_chains(sigma, t, [&](const std::vector<int>& c) { b_chains.push_back(c); });
        for (const auto& a : a_chains) {
            for (const auto& b : b_chains) {
                std::vector<int> f(n);
                for (int i = 1; i <= n; ++i) {
                    const int p = tau(i);
                    Letter tb = Letter{b[std::abs(p) - 1]};
                    if (p < 0)
                        tb = t.negate(tb);
                    f[i - 1] = st.pair(Letter{a[i - 1]}, tb).index;
                }
                std::vector<Letter> chain(n);
                for (int i = 0; i < n; ++i)
                    chain[i] = Letter{f[i]};
                if (!is_enriched(pi, map_from_chain(pi, chain, st), st))
                    return false;
                ++produced;
                if (!image.insert(f).second)
                    return false;
            }
        }
    }
    return produced == count_epp(pi, st);
}

} // namespace peakalg
