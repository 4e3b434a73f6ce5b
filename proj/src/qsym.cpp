#include "peakalg/qsym.hpp"

#include <bit>
#include <stdexcept>

#include "peakalg/subspace.hpp"

namespace peakalg {

std::string_view to_string(Basis basis) { return basis == Basis::M ? "M" : "F"; }

QSymElement QSymElement::basis_element(const Composition& alpha, Basis basis)
{
    QSymElement e(alpha.typeB, basis);
    e.add(alpha, Rational(1));
    return e;
}

QSymElement QSymElement::one(bool typeB)
{
    return basis_element(typeB ? Composition({0}, true) : Composition({}, false), Basis::M);
}

Rational QSymElement::coeff(const Composition& alpha) const
{
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

void QSymElement::add(const Composition& alpha, const Rational& c)
{
    if (alpha.typeB != typeB_)
        throw std::invalid_argument("composition type does not match the element");
    if (sgn(c) == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(alpha, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

int QSymElement::degree() const
{
    int d = -1;
    for (const auto& [alpha, c] : terms_) {
        const int s = alpha.size();
        if (d >= 0 && s != d)
            throw std::logic_error("element is not homogeneous");
        d = s;
    }
    return d;
}

bool QSymElement::has_integer_coefficients() const
{
    for (const auto& [alpha, c] : terms_)
        if (!is_integer(c))
            return false;
    return true;
}

void QSymElement::require_same_space(const QSymElement& other) const
{
    if (typeB_ != other.typeB_ || basis_ != other.basis_)
        throw std::invalid_argument("quasisymmetric elements live in different spaces");
}

QSymElement& QSymElement::operator+=(const QSymElement& other)
{
    require_same_space(other);
    for (const auto& [alpha, c] : other.terms_)
        add(alpha, c);
    return *this;
}

QSymElement& QSymElement::operator-=(const QSymElement& other)
{
    require_same_space(other);
    for (const auto& [alpha, c] : other.terms_)
        add(alpha, -c);
    return *this;
}

QSymElement& QSymElement::operator*=(const Rational& c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, x] : terms_)
        x *= c;
    return *this;
}

namespace {

std::uint64_t range_mask(int lo, int hi)
{
    std::uint64_t m = 0;
    for (int i = lo; i <= hi; ++i)
        m |= std::uint64_t{1} << i;
    return m;
}

// Applies alpha -> sum over supersets J of I(alpha) of sign^{|J|-|I|} X_J.
QSymElement superset_transform(const QSymElement& e, Basis target, bool alternate)
{
    QSymElement out(e.typeB(), target);
    for (const auto& [alpha, c] : e.terms()) {
        const int n = alpha.size();
        const std::uint64_t base = subset_of(alpha);
        const std::uint64_t free = range_mask(e.typeB() ? 0 : 1, n - 1) & ~base;
        // Enumerate all subsets of `free`.
        std::uint64_t extra = 0;
        do {
            Rational term = c;
            if (alternate && (std::popcount(extra) & 1))
                term = -term;
            out.add(composition_from_subset(base | extra, n, e.typeB()), term);
            extra = (extra - free) & free;
        } while (extra != 0);
    }
    return out;
}

QSymElement peak_expansion(const StatSet& peaks, bool typeB, int power_offset)
{
    const int n = peaks.n();
    if (n < 1)
        throw std::invalid_argument("peak functions are defined for n >= 1");
    const std::uint64_t range = range_mask(typeB ? 0 : 1, n - 1);
    const std::uint64_t need = peaks.mask();
    QSymElement out(typeB, Basis::M);
    std::uint64_t e = 0;
    do {
        if ((need & ~(e | (e << 1))) == 0)
            out.add(composition_from_subset(e, n, typeB), Rational(1) << (std::popcount(e) + power_offset));
        e = (e - range) & range;
    } while (e != 0);
    return out;
}

QSymElement peak_expansion_f(const StatSet& peaks, bool typeB, int power_offset)
{
    const int n = peaks.n();
    if (n < 1)
        throw std::invalid_argument("peak functions are defined for n >= 1");
    const std::uint64_t range = range_mask(typeB ? 0 : 1, n - 1);
    const std::uint64_t need = peaks.mask();
    const Rational coeff = Rational(1) << (peaks.size() + power_offset);
    QSymElement out(typeB, Basis::F);
    std::uint64_t d = 0;
    do {
        if ((need & ~(d ^ (d << 1))) == 0)
            out.add(composition_from_subset(d, n, typeB), coeff);
        d = (d - range) & range;
    } while (d != 0);
    return out;
}

void require_flavor(const StatSet& s, std::initializer_list<Flavor> allowed)
{
    for (Flavor f : allowed)
        if (s.flavor() == f)
            return;
    throw std::invalid_argument("peak function: unsupported flavor " + std::string(to_string(s.flavor())));
}

} // namespace

QSymElement f_to_m(const QSymElement& e)
{
    if (e.basis() != Basis::F)
        throw std::invalid_argument("f_to_m expects an F-basis element");
    return superset_transform(e, Basis::M, false);
}

QSymElement m_to_f(const QSymElement& e)
{
    if (e.basis() != Basis::M)
        throw std::invalid_argument("m_to_f expects an M-basis element");
    return superset_transform(e, Basis::F, true);
}

QSymElement peak_function(const StatSet& interior)
{
    require_flavor(interior, {Flavor::interiorPeak});
    return peak_expansion(interior, false, 1);
}

QSymElement peak_function_f(const StatSet& interior)
{
    require_flavor(interior, {Flavor::interiorPeak});
    return peak_expansion_f(interior, false, 1);
}

QSymElement peak_function_b(const StatSet& peaks)
{
    require_flavor(peaks, {Flavor::typeBPeak, Flavor::leftPeak});
    return peak_expansion(peaks, true, 0);
}

QSymElement peak_function_b_f(const StatSet& peaks)
{
    require_flavor(peaks, {Flavor::typeBPeak, Flavor::leftPeak});
    return peak_expansion_f(peaks, true, 0);
}

namespace {

void shuffle_parts(const std::vector<int>& a, std::size_t i, const std::vector<int>& b, std::size_t j,
                   std::vector<int>& prefix, std::vector<std::vector<int>>& out)
{
    if (i == a.size() && j == b.size()) {
        out.push_back(prefix);
        return;
    }
    if (i < a.size()) {
        prefix.push_back(a[i]);
        shuffle_parts(a, i + 1, b, j, prefix, out);
        prefix.pop_back();
    }
    if (j < b.size()) {
        prefix.push_back(b[j]);
        shuffle_parts(a, i, b, j + 1, prefix, out);
        prefix.pop_back();
    }
    if (i < a.size() && j < b.size()) {
        prefix.push_back(a[i] + b[j]);
        shuffle_parts(a, i + 1, b, j + 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

QSymElement quasi_shuffle(const QSymElement& a, const QSymElement& b)
{
    if (a.typeB() != b.typeB())
        throw std::invalid_argument("quasi_shuffle: type mismatch");
    if (a.basis() != Basis::M || b.basis() != Basis::M)
        throw std::invalid_argument("quasi_shuffle expects M-basis elements");
    const bool typeB = a.typeB();
    QSymElement out(typeB, Basis::M);
    for (const auto& [alpha, ca] : a.terms()) {
        for (const auto& [beta, cb] : b.terms()) {
            const std::size_t skip = typeB ? 1 : 0;
            std::vector<int> ra(alpha.parts.begin() + skip, alpha.parts.end());
            std::vector<int> rb(beta.parts.begin() + skip, beta.parts.end());
            std::vector<std::vector<int>> shuffles;
            std::vector<int> prefix;
            if (typeB)
                prefix.push_back(alpha.parts[0] + beta.parts[0]);
            shuffle_parts(ra, 0, rb, 0, prefix, shuffles);
            const Rational c = ca * cb;
            for (auto& parts : shuffles)
                out.add(Composition(std::move(parts), typeB), c);
        }
    }
    return out;
}

namespace {

std::vector<std::vector<Rational>> coefficient_rows(std::span<const QSymElement> elements,
                                                    std::span<const QSymElement> extra)
{
    std::map<Composition, std::size_t> index;
    auto collect = [&](std::span<const QSymElement> list) {
        for (const auto& e : list)
            for (const auto& [alpha, c] : e.terms())
                index.try_emplace(alpha, 0);
    };
    collect(elements);
    collect(extra);
    std::size_t next = 0;
    for (auto& [alpha, i] : index)
        i = next++;
    std::vector<std::vector<Rational>> rows;
    auto emit = [&](std::span<const QSymElement> list) {
        for (const auto& e : list) {
            std::vector<Rational> row(index.size());
            for (const auto& [alpha, c] : e.terms())
                row[index.at(alpha)] = c;
            rows.push_back(std::move(row));
        }
    };
    emit(elements);
    emit(extra);
    return rows;
}

void require_common_space(std::span<const QSymElement> elements)
{
    for (const auto& e : elements)
        if (e.typeB() != elements.front().typeB() || e.basis() != elements.front().basis())
            throw std::invalid_argument("span of elements from different bases or types");
}

} // namespace

int rank_of_span(std::span<const QSymElement> elements)
{
    if (elements.empty())
        return 0;
    require_common_space(elements);
    const auto rows = coefficient_rows(elements, {});
    Subspace space(rows.front().size());
    for (const auto& r : rows)
        space.insert(r);
    return static_cast<int>(space.rank());
}

bool in_span(std::span<const QSymElement> basis, const QSymElement& e)
{
    if (basis.empty())
        return e.is_zero();
    require_common_space(basis);
    if (e.typeB() != basis.front().typeB() || e.basis() != basis.front().basis())
        throw std::invalid_argument("in_span: element from a different space");
    auto rows = coefficient_rows(basis, std::span<const QSymElement>(&e, 1));
    Subspace space(rows.front().size());
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        space.insert(rows[i]);
    return space.contains(rows.back());
}

namespace {

void place_parts(const std::vector<int>& parts, std::size_t from, int next_var, int k, int var_offset,
                 std::vector<int>& exps, const Rational& c, TruncatedPolynomial& out)
{
    if (from == parts.size()) {
        auto [it, fresh] = out.try_emplace(exps, c);
        if (!fresh) {
            it->second += c;
            if (sgn(it->second) == 0)
                out.erase(it);
        }
        return;
    }
    for (int v = next_var; v <= k; ++v) {
        exps[v - var_offset] = parts[from];
        place_parts(parts, from + 1, v + 1, k, var_offset, exps, c, out);
        exps[v - var_offset] = 0;
    }
}

} // namespace

TruncatedPolynomial truncate(const QSymElement& e, int k)
{
    const QSymElement m = e.basis() == Basis::M ? e : f_to_m(e);
    TruncatedPolynomial out;
    const int num_vars = m.typeB() ? k + 1 : k;
    for (const auto& [alpha, c] : m.terms()) {
        std::vector<int> exps(num_vars, 0);
        if (m.typeB()) {
            exps[0] = alpha.parts[0];
            std::vector<int> rest(alpha.parts.begin() + 1, alpha.parts.end());
            place_parts(rest, 0, 1, k, 0, exps, c, out);
        } else {
            place_parts(alpha.parts, 0, 1, k, 1, exps, c, out);
        }
    }
    return out;
}

TruncatedPolynomial multiply(const TruncatedPolynomial& a, const TruncatedPolynomial& b)
{
    TruncatedPolynomial out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            if (ea.size() != eb.size())
                throw std::invalid_argument("multiply: variable count mismatch");
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            auto [it, fresh] = out.try_emplace(e, ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (sgn(it->second) == 0)
                    out.erase(it);
            }
        }
    }
    return out;
}

} // namespace peakalg
