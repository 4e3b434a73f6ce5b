#include "peakalg/eulerian.hpp"

#include <stdexcept>

#include "peakalg/alphabet.hpp"
#include "peakalg/enriched.hpp"
#include "peakalg/parallel.hpp"

namespace peakalg {

std::size_t enriched_order_count(const Permutation& pi, int k)
{
    if (pi.is_signed())
        throw std::invalid_argument("enriched_order_count: expected an unsigned permutation");
    return count_epp(pi, Alphabet::prime(k));
}

RationalPolynomial enriched_order_polynomial(const Permutation& pi)
{
    std::vector<std::pair<Rational, Rational>> points;
    for (int k = 0; k <= pi.size(); ++k)
        points.emplace_back(k, static_cast<unsigned long>(enriched_order_count(pi, k)));
    return RationalPolynomial::interpolate(points);
}

Permutation peak_count_representative(int peaks, int n)
{
    if (n < 1 || peaks < 0 || 2 * peaks + 1 > n)
        throw std::invalid_argument("no permutation of " + std::to_string(n) + " has " + std::to_string(peaks) +
                                    " interior peaks");
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i)
        w[i] = i + 1;
    // swap 2<->3, 4<->5, ... to create peaks at positions 2, 4, ...
    for (int p = 0; p < peaks; ++p)
        std::swap(w[2 * p + 1], w[2 * p + 2]);
    return Permutation(std::move(w));
}

RationalPolynomial order_polynomial(int peaks, int n)
{
    return enriched_order_polynomial(peak_count_representative(peaks, n));
}

RationalPolynomial order_polynomial_indexed(int index, int n) { return order_polynomial(index - 1, n); }

int AlgebraPolynomial::degree() const
{
    for (int d = static_cast<int>(coefficients.size()) - 1; d >= 0; --d)
        if (!coefficients[d].is_zero())
            return d;
    return -1;
}

AlgebraPolynomial rho(int n)
{
    if (n < 1)
        throw std::invalid_argument("rho: n must be positive");
    AlgebraPolynomial out;
    out.group = Group::get(n, Kind::A);
    out.coefficients.assign(n + 1, AlgebraElement(out.group));
    const Rational half(1, 2);
    for (const auto& [peaks, sum] : count_sums(out.group, Flavor::interiorPeak)) {
        const RationalPolynomial omega = order_polynomial(peaks, n).scaled(half);
        for (int d = 0; d <= omega.degree(); ++d)
            if (sgn(omega.coefficient(d)) != 0)
                out.coefficients[d] += sum * omega.coefficient(d);
    }
    return out;
}

std::vector<std::pair<int, AlgebraElement>> idempotents(int n)
{
    const AlgebraPolynomial r = rho(n);
    std::vector<std::pair<int, AlgebraElement>> out;
    for (std::size_t d = 0; d < r.coefficients.size(); ++d) {
        if (r.coefficients[d].is_zero())
            continue;
        const int i = n % 2 == 0 ? static_cast<int>(d) / 2 : (static_cast<int>(d) + 1) / 2;
        out.emplace_back(i, r.coefficients[d]);
    }
    return out;
}

RhoReport verify_rho_multiplicativity(int n, unsigned jobs)
{
    RhoReport report;
    report.n = n;
    const AlgebraPolynomial r = rho(n);
    const std::size_t m = r.coefficients.size();

    for (std::size_t d = 0; d < m; ++d)
        if (d % 2 != static_cast<std::size_t>(n % 2) && !r.coefficients[d].is_zero())
            report.parity_ok = false;

    std::vector<char> match(m * m, 1);
    parallel_for(m * m, jobs, [&](std::size_t idx) {
        const std::size_t a = idx / m, b = idx % m;
        const AlgebraElement lhs = convolve(r.coefficients[a], r.coefficients[b]);
        match[idx] = a == b ? lhs == r.coefficients[a] : lhs.is_zero();
    });
    for (std::size_t idx = 0; idx < m * m; ++idx)
        if (!match[idx])
            report.mismatches.emplace_back(static_cast<int>(idx / m), static_cast<int>(idx % m));

    std::vector<AlgebraElement> es;
    std::vector<std::size_t> degrees;
    for (std::size_t d = 0; d < m; ++d) {
        if (!r.coefficients[d].is_zero()) {
            es.push_back(r.coefficients[d]);
            degrees.push_back(d);
        }
    }
    report.idempotent_count = es.size();
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = 0; j < es.size(); ++j) {
            const bool ok = match[degrees[i] * m + degrees[j]];
            if (!ok && i == j)
                report.idempotent_ok = false;
            if (!ok && i != j)
                report.orthogonal_ok = false;
        }
    }

    AlgebraElement total(r.group);
    for (const auto& e : es)
        total += e;
    report.sum_is_identity = total == AlgebraElement::identity(r.group);

    const auto E = eulerian_basis(n, Kind::A, Flavor::interiorPeak);
    report.span_dimension = span_dimension(E);
    report.span_equal = span_dimension(es) == report.span_dimension && span_contains(E, es) && span_contains(es, E);
    return report;
}

std::vector<AlgebraElement> eulerian_basis(int n, Kind kind, Flavor flavor)
{
    std::vector<AlgebraElement> out;
    for (auto& [count, sum] : count_sums(Group::get(n, kind), flavor))
        out.push_back(std::move(sum));
    return out;
}

std::vector<std::pair<std::string, AlgebraElement>> battery_basis(int n, Kind kind, Flavor flavor, bool by_number)
{
    const auto g = Group::get(n, kind);
    std::vector<std::pair<std::string, AlgebraElement>> out;
    if (by_number) {
        for (auto& [count, sum] : count_sums(g, flavor))
            out.emplace_back(std::to_string(count), std::move(sum));
    } else {
        for (auto& [set, sum] : class_sums(g, flavor))
            out.emplace_back(set.to_string(), std::move(sum));
    }
    return out;
}

bool BatteryEntry::as_expected() const
{
    if (statistic == "rightPeakNumberClosure")
        return closure_dim && *closure_dim < group_order;
    return closed == expect_closed && (closed || witness.has_value());
}

bool BatteryReport::ok() const
{
    for (const auto& e : entries)
        if (!e.as_expected())
            return false;
    return !entries.empty();
}

namespace {

struct Sweep {
    std::string statistic;
    Kind kind;
    Flavor flavor;
    bool by_number;
    int n_max;
    bool expect_closed;
};

BatteryEntry run_sweep(const Sweep& s)
{
    BatteryEntry entry;
    entry.statistic = s.statistic;
    entry.kind = s.kind;
    entry.flavor = s.flavor;
    entry.by_number = s.by_number;
    entry.expect_closed = s.expect_closed;
    for (int n = 1; n <= s.n_max; ++n) {
        const auto labelled = battery_basis(n, s.kind, s.flavor, s.by_number);
        std::vector<AlgebraElement> basis;
        for (const auto& [label, e] : labelled)
            basis.push_back(e);
        ClosureResult r = closure_check(basis);
        entry.n = n;
        entry.group_order = group_order(n, s.kind);
        if (!r.closed) {
            entry.closed = false;
            const auto& w = *r.witness;
            entry.witness = BatteryWitness{labelled[w.left].first, labelled[w.right].first, w.left, w.right,
                                           std::move(*w.residual)};
            return entry;
        }
    }
    entry.closed = true;
    return entry;
}

BatteryEntry right_number_closure(int n)
{
    BatteryEntry entry;
    entry.statistic = "rightPeakNumberClosure";
    entry.kind = Kind::A;
    entry.flavor = Flavor::rightPeak;
    entry.by_number = true;
    entry.n = n;
    entry.group_order = group_order(n, Kind::A);
    const auto basis = eulerian_basis(n, Kind::A, Flavor::rightPeak);
    entry.closed = closure_check(basis).closed;
    entry.closure_dim = multiplicative_closure(basis).size();
    return entry;
}

} // namespace

BatteryReport negative_battery(int n_max_a, int n_max_b, int n_max_closure, unsigned jobs)
{
    const std::vector<Sweep> sweeps{
        {"rightPeakSet", Kind::A, Flavor::rightPeak, false, n_max_a, false},
        {"exteriorPeakSet", Kind::A, Flavor::exteriorPeak, false, n_max_a, false},
        {"interiorPeakSet", Kind::B, Flavor::leftPeak, false, n_max_b, false},
        {"interiorPeakNumber", Kind::B, Flavor::leftPeak, true, n_max_b, false},
        {"exteriorPeakSet", Kind::B, Flavor::exteriorPeak, false, n_max_b, false},
        {"exteriorPeakNumber", Kind::B, Flavor::exteriorPeak, true, n_max_b, false},
        {"interiorPeakSet", Kind::A, Flavor::interiorPeak, false, n_max_a, true},
    };
    const std::size_t closures = n_max_closure >= 3 ? static_cast<std::size_t>(n_max_closure - 2) : 0;
    BatteryReport report;
    report.entries.resize(sweeps.size() + closures);
    parallel_for(report.entries.size(), jobs, [&](std::size_t i) {
        report.entries[i] =
            i < sweeps.size() ? run_sweep(sweeps[i]) : right_number_closure(static_cast<int>(i - sweeps.size()) + 3);
    });
    return report;
}

} // namespace peakalg
