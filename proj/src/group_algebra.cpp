#include "peakalg/group_algebra.hpp"

#include <stdexcept>

#include "peakalg/enriched.hpp"
#include "peakalg/parallel.hpp"
#include "peakalg/subspace.hpp"

namespace peakalg {

std::shared_ptr<const Group> Group::get(int n, Kind kind)
{
    static std::mutex mutex;
    static std::map<std::pair<int, Kind>, std::shared_ptr<const Group>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, kind}];
    if (!slot)
        slot = std::make_shared<const Group>(n, kind);
    return slot;
}

Group::Group(int n, Kind kind) : n_(n), kind_(kind), elements_(enumerate_group(n, kind))
{
    inverse_.resize(elements_.size());
    for (std::size_t r = 0; r < elements_.size(); ++r)
        inverse_[r] = rank(elements_[r].inverse());
    identity_ = rank(Permutation::identity(n, kind));
}

namespace {

// Rank of a raw window; mirrors rank() in permutation.cpp without building
// a Permutation.
std::size_t window_rank(const int* w, int n, Kind kind)
{
    std::size_t lex = 0;
    std::uint64_t used = 0;
    std::size_t mask = 0;
    for (int i = 0; i < n; ++i) {
        const int v = w[i] < 0 ? -w[i] : w[i];
        const std::uint64_t below = used & ((std::uint64_t{1} << v) - 1);
        const int smaller = v - 1 - __builtin_popcountll(below);
        lex = lex * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller);
        used |= std::uint64_t{1} << v;
        if (w[i] < 0)
            mask |= std::size_t{1} << i;
    }
    return kind == Kind::A ? lex : (lex << n) | mask;
}

std::size_t compose_rank(const Permutation& a, const Permutation& b, Kind kind)
{
    const int n = a.size();
    int w[64];
    const auto wa = a.window();
    const auto wb = b.window();
    for (int i = 0; i < n; ++i) {
        const int j = wb[i];
        w[i] = j > 0 ? wa[j - 1] : -wa[-j - 1];
    }
    return window_rank(w, n, kind);
}

} // namespace

std::size_t Group::multiply(std::size_t a, std::size_t b) const
{
    const std::size_t order = elements_.size();
    if (order <= table_limit) {
        std::call_once(table_once_, [&] {
            table_.resize(order * order);
            for (std::size_t x = 0; x < order; ++x)
                for (std::size_t y = 0; y < order; ++y)
                    table_[x * order + y] = static_cast<std::uint16_t>(compose_rank(elements_[x], elements_[y], kind_));
        });
        return table_[a * order + b];
    }
    return compose_rank(elements_.at(a), elements_.at(b), kind_);
}

const std::vector<StatSet>& Group::statistics(Flavor flavor) const
{
    std::lock_guard lock(stats_mutex_);
    auto it = stats_.find(flavor);
    if (it != stats_.end())
        return it->second;
    std::vector<StatSet> values;
    values.reserve(elements_.size());
    for (const auto& p : elements_)
        values.push_back(statistic(p, flavor));
    return stats_.emplace(flavor, std::move(values)).first->second;
}

AlgebraElement::AlgebraElement(std::shared_ptr<const Group> group)
    : group_(std::move(group)), coeffs_(group_->order())
{
}

AlgebraElement AlgebraElement::delta(std::shared_ptr<const Group> group, std::size_t rank)
{
    AlgebraElement e(std::move(group));
    e[rank] = 1;
    return e;
}

AlgebraElement AlgebraElement::identity(std::shared_ptr<const Group> group)
{
    const std::size_t id = group->identity();
    return delta(std::move(group), id);
}

bool AlgebraElement::is_zero() const
{
    for (const auto& c : coeffs_)
        if (sgn(c) != 0)
            return false;
    return true;
}

std::size_t AlgebraElement::support_size() const
{
    std::size_t s = 0;
    for (const auto& c : coeffs_)
        if (sgn(c) != 0)
            ++s;
    return s;
}

void AlgebraElement::require_same_group(const AlgebraElement& other) const
{
    if (group_->n() != other.group_->n() || group_->kind() != other.group_->kind())
        throw std::invalid_argument("algebra elements from different groups");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other)
{
    require_same_group(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other)
{
    require_same_group(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c)
{
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b)
{
    return a.group_->n() == b.group_->n() && a.group_->kind() == b.group_->kind() && a.coeffs_ == b.coeffs_;
}

namespace {

std::vector<std::size_t> support(const AlgebraElement& e)
{
    std::vector<std::size_t> s;
    const auto& c = e.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (sgn(c[i]) != 0)
            s.push_back(i);
    return s;
}

bool all_integer_unit(const AlgebraElement& e, const std::vector<std::size_t>& supp)
{
    for (std::size_t i : supp)
        if (e[i] != 1)
            return false;
    return true;
}

} // namespace

AlgebraElement convolve(const AlgebraElement& u, const AlgebraElement& w)
{
    if (u.group().n() != w.group().n() || u.group().kind() != w.group().kind())
        throw std::invalid_argument("convolve: elements from different groups");
    const Group& g = u.group();
    AlgebraElement out(u.group_ptr());
    const auto su = support(u);
    const auto sw = support(w);
    if (all_integer_unit(u, su) && all_integer_unit(w, sw)) {
        // 0/1 class sums: count first, convert once.
        std::vector<std::int64_t> counts(g.order(), 0);
        for (std::size_t tau : su)
            for (std::size_t sigma : sw)
                ++counts[g.multiply(sigma, tau)];
        for (std::size_t i = 0; i < counts.size(); ++i)
            if (counts[i])
                out[i] = static_cast<long>(counts[i]);
        return out;
    }
    Rational prod;
    for (std::size_t tau : su) {
        for (std::size_t sigma : sw) {
            prod = u[tau] * w[sigma];
            out[g.multiply(sigma, tau)] += prod;
        }
    }
    return out;
}

Kind natural_kind(Flavor flavor) { return requires_signed(flavor) ? Kind::B : Kind::A; }

AlgebraElement class_sum(std::shared_ptr<const Group> group, const StatSet& I)
{
    if (I.n() != group->n())
        throw std::invalid_argument("class_sum: set size does not match the group");
    const auto& stats = group->statistics(I.flavor());
    AlgebraElement e(group);
    for (std::size_t r = 0; r < stats.size(); ++r)
        if (stats[r] == I)
            e[r] = 1;
    return e;
}

std::vector<std::pair<StatSet, AlgebraElement>> class_sums(std::shared_ptr<const Group> group, Flavor flavor)
{
    const auto& stats = group->statistics(flavor);
    std::map<StatSet, AlgebraElement> by_set;
    for (std::size_t r = 0; r < stats.size(); ++r) {
        auto it = by_set.try_emplace(stats[r], group).first;
        it->second[r] = 1;
    }
    return {by_set.begin(), by_set.end()};
}

std::vector<std::pair<int, AlgebraElement>> count_sums(std::shared_ptr<const Group> group, Flavor flavor)
{
    const auto& stats = group->statistics(flavor);
    std::map<int, AlgebraElement> by_count;
    for (std::size_t r = 0; r < stats.size(); ++r) {
        auto it = by_count.try_emplace(stats[r].size(), group).first;
        it->second[r] = 1;
    }
    return {by_count.begin(), by_count.end()};
}

std::int64_t StructureTable::count(const StatSet& a, const StatSet& b, const StatSet& c) const
{
    const int ia = index_of(a), ib = index_of(b), ic = index_of(c);
    if (ia < 0 || ib < 0 || ic < 0)
        return 0;
    auto it = entries.find({ia, ib, ic});
    return it == entries.end() ? 0 : it->second;
}

int StructureTable::index_of(const StatSet& s) const
{
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i] == s)
            return static_cast<int>(i);
    return -1;
}

namespace {

struct ClassIndex {
    std::vector<StatSet> sets;
    std::vector<int> of_rank;         // class index of every element
    std::vector<std::size_t> first;   // representative of every class
};

ClassIndex index_classes(const Group& g, Flavor flavor)
{
    const auto& stats = g.statistics(flavor);
    std::map<StatSet, int> idx;
    for (const auto& s : stats)
        idx.try_emplace(s, 0);
    ClassIndex ci;
    for (auto& [s, i] : idx) {
        i = static_cast<int>(ci.sets.size());
        ci.sets.push_back(s);
    }
    ci.of_rank.resize(stats.size());
    ci.first.assign(ci.sets.size(), stats.size());
    for (std::size_t r = 0; r < stats.size(); ++r) {
        const int c = idx.at(stats[r]);
        ci.of_rank[r] = c;
        if (ci.first[c] == stats.size())
            ci.first[c] = r;
    }
    return ci;
}

// (A, B) -> #{(sigma, tau) : sigma o tau = pi, class(tau) = A, class(sigma) = B}.
std::vector<std::int64_t> factor_counts(const Group& g, const ClassIndex& ci, std::size_t pi)
{
    const std::size_t k = ci.sets.size();
    std::vector<std::int64_t> counts(k * k, 0);
    for (std::size_t tau = 0; tau < g.order(); ++tau) {
        const std::size_t sigma = g.multiply(pi, g.inverse(tau));
        ++counts[static_cast<std::size_t>(ci.of_rank[tau]) * k + ci.of_rank[sigma]];
    }
    return counts;
}

} // namespace

StructureTable structure_constants(int n, Flavor flavor, Kind kind, unsigned jobs)
{
    const auto g = Group::get(n, kind);
    const ClassIndex ci = index_classes(*g, flavor);
    const std::size_t k = ci.sets.size();
    std::vector<std::vector<std::int64_t>> per_class(k);
    parallel_for(k, jobs, [&](std::size_t c) { per_class[c] = factor_counts(*g, ci, ci.first[c]); });

    StructureTable table;
    table.flavor = flavor;
    table.kind = kind;
    table.n = n;
    table.sets = ci.sets;
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b)
                if (const auto v = per_class[c][a * k + b])
                    table.entries[{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)}] = v;
    return table;
}

AuditReport audit_structure_constants(const StructureTable& table, unsigned jobs)
{
    const auto g = Group::get(table.n, table.kind);
    const ClassIndex ci = index_classes(*g, table.flavor);
    AuditReport report;
    if (ci.sets != table.sets) {
        report.ok = false;
        report.mismatches.push_back("class list differs from the table");
        return report;
    }
    const std::size_t k = ci.sets.size();
    std::vector<char> good(g->order(), 1);
    parallel_for(g->order(), jobs, [&](std::size_t pi) {
        const auto counts = factor_counts(*g, ci, pi);
        const int c = ci.of_rank[pi];
        for (std::size_t a = 0; a < k && good[pi]; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                auto it = table.entries.find({static_cast<int>(a), static_cast<int>(b), c});
                const std::int64_t expected = it == table.entries.end() ? 0 : it->second;
                if (counts[a * k + b] != expected) {
                    good[pi] = 0;
                    break;
                }
            }
        }
    });
    report.representatives_checked = g->order();
    for (std::size_t pi = 0; pi < good.size(); ++pi) {
        if (!good[pi]) {
            report.ok = false;
            if (report.mismatches.size() < 10)
                report.mismatches.push_back("counts from " + g->element(pi).to_string() +
                                            " disagree with the table");
        }
    }
    return report;
}

bool structure_table_symmetric(const StructureTable& table)
{
    for (const auto& [key, v] : table.entries) {
        auto [a, b, c] = key;
        auto it = table.entries.find({b, a, c});
        if (it == table.entries.end() || it->second != v)
            return false;
    }
    return true;
}

Alphabet duality_alphabet(Flavor flavor, int k)
{
    switch (flavor) {
    case Flavor::interiorPeak: return Alphabet::prime(k);
    case Flavor::leftPeak: return Alphabet::left(k);
    case Flavor::typeBPeak: return Alphabet::plus_minus(k);
    default: throw std::invalid_argument("no bipartite alphabet for flavor " + std::string(to_string(flavor)));
    }
}

DualityReport verify_duality(int n, Flavor flavor, int bipartite_k, unsigned jobs)
{
    return verify_duality(structure_constants(n, flavor, natural_kind(flavor), jobs), bipartite_k, jobs);
}

DualityReport verify_duality(const StructureTable& table, int bipartite_k, unsigned jobs)
{
    const Flavor flavor = table.flavor;
    const auto g = Group::get(table.n, table.kind);
    const auto sums = class_sums(g, flavor);
    const std::size_t k = sums.size();

    bool sets_match = k == table.sets.size();
    for (std::size_t i = 0; sets_match && i < k; ++i)
        sets_match = sums[i].first == table.sets[i];

    DualityReport report;
    std::vector<char> pair_ok(k * k, 0);
    parallel_for(sets_match ? k * k : 0, jobs, [&](std::size_t idx) {
        const std::size_t a = idx / k, b = idx % k;
        const AlgebraElement lhs = convolve(sums[a].second, sums[b].second);
        AlgebraElement rhs(g);
        for (std::size_t c = 0; c < k; ++c) {
            auto it = table.entries.find({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)});
            if (it != table.entries.end())
                rhs += sums[c].second * Rational(static_cast<long>(it->second));
        }
        pair_ok[idx] = lhs == rhs;
    });
    report.products_checked = k * k;
    for (char ok : pair_ok)
        if (!ok)
            ++report.products_failed;

    if (bipartite_k > 0) {
        const Alphabet s = duality_alphabet(flavor, bipartite_k);
        const Alphabet st = Alphabet::product(s, s);
        std::vector<char> ok(g->order(), 1);
        parallel_for(g->order(), jobs, [&](std::size_t r) {
            const Permutation& pi = g->element(r);
            ok[r] = census(pi, st) == factorization_census(pi, s, s);
        });
        report.bipartite_checked = g->order();
        for (char o : ok)
            if (!o)
                ++report.bipartite_failed;
    }
    report.ok = report.products_failed == 0 && report.bipartite_failed == 0;
    return report;
}

namespace {

void require_common_group(std::span<const AlgebraElement> elements)
{
    for (const auto& e : elements)
        if (e.group().n() != elements.front().group().n() || e.group().kind() != elements.front().group().kind())
            throw std::invalid_argument("basis elements from different groups");
}

} // namespace

ClosureResult closure_check(std::span<const AlgebraElement> basis)
{
    ClosureResult result;
    if (basis.empty())
        return result;
    require_common_group(basis);
    Subspace space(basis.front().group().order());
    for (const auto& b : basis)
        space.insert(b.coefficients());
    result.dimension = space.rank();
    result.product_coordinates.assign(basis.size(), std::vector<std::vector<Rational>>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const AlgebraElement p = convolve(basis[i], basis[j]);
            auto red = space.reduce(p.coefficients());
            if (!red.member) {
                AlgebraElement residual(basis.front().group_ptr());
                for (std::size_t r = 0; r < red.residual.size(); ++r)
                    residual[r] = red.residual[r];
                result.closed = false;
                result.product_coordinates.clear();
                result.witness = ClosureResult::Witness{i, j, std::move(residual)};
                return result;
            }
            result.product_coordinates[i][j] = std::move(red.coordinates);
        }
    }
    return result;
}

std::vector<AlgebraElement> multiplicative_closure(std::span<const AlgebraElement> basis)
{
    std::vector<AlgebraElement> gens;
    if (basis.empty())
        return gens;
    require_common_group(basis);
    Subspace space(basis.front().group().order());
    for (const auto& b : basis)
        if (space.insert(b.coefficients()))
            gens.push_back(b);
    for (std::size_t m = 0; m < gens.size(); ++m) {
        for (std::size_t j = 0; j <= m; ++j) {
            for (int order = 0; order < 2; ++order) {
                AlgebraElement p = order == 0 ? convolve(gens[m], gens[j]) : convolve(gens[j], gens[m]);
                if (space.insert(p.coefficients()))
                    gens.push_back(std::move(p));
            }
        }
    }
    return gens;
}

bool ideal_check(std::span<const AlgebraElement> inner, std::span<const AlgebraElement> outer)
{
    if (inner.empty())
        return true;
    require_common_group(inner);
    Subspace space(inner.front().group().order());
    for (const auto& b : inner)
        space.insert(b.coefficients());
    for (const auto& x : inner) {
        for (const auto& y : outer) {
            if (!space.contains(convolve(x, y).coefficients()))
                return false;
            if (!space.contains(convolve(y, x).coefficients()))
                return false;
        }
    }
    return true;
}

bool is_commutative(std::span<const AlgebraElement> basis)
{
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!(convolve(basis[i], basis[j]) == convolve(basis[j], basis[i])))
                return false;
    return true;
}

std::size_t span_dimension(std::span<const AlgebraElement> elements)
{
    if (elements.empty())
        return 0;
    require_common_group(elements);
    Subspace space(elements.front().group().order());
    for (const auto& e : elements)
        space.insert(e.coefficients());
    return space.rank();
}

bool span_contains(std::span<const AlgebraElement> of, std::span<const AlgebraElement> elements)
{
    if (elements.empty())
        return true;
    Subspace space(elements.front().group().order());
    for (const auto& e : of)
        space.insert(e.coefficients());
    for (const auto& e : elements)
        if (!space.contains(e.coefficients()))
            return false;
    return true;
}

bool descent_algebra_containment(int n, Flavor peak_flavor, Kind kind)
{
    const auto g = Group::get(n, kind);
    const Flavor descent = kind == Kind::A ? Flavor::descentA : Flavor::descentB;
    Subspace space(g->order());
    for (const auto& [set, sum] : class_sums(g, descent))
        space.insert(sum.coefficients());
    for (const auto& [set, sum] : class_sums(g, peak_flavor)) {
        const auto red = space.reduce(sum.coefficients());
        if (!red.member)
            return false;
        for (const auto& c : red.coordinates)
            if (!is_integer(c))
                return false;
    }
    return true;
}

} // namespace peakalg
