#include "peakalg/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace peakalg {

Rational parse_rational(std::string_view text)
{
    Rational q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

json to_json(const StatSet& s) { return s.members(); }

json to_json(const Census& c)
{
    json terms = json::array();
    for (const auto& [exps, count] : c.terms)
        terms.push_back({{"exponents", exps}, {"count", count}});
    return terms;
}

json to_json(const QSymElement& e)
{
    json terms = json::array();
    for (const auto& [alpha, c] : e.terms())
        terms.push_back({{"parts", alpha.parts}, {"coeff", to_string(c)}});
    return {{"basis", std::string(to_string(e.basis()))}, {"typeB", e.typeB()}, {"terms", terms}};
}

QSymElement qsym_from_json(const json& j)
{
    const std::string basis = j.at("basis").get<std::string>();
    if (basis != "M" && basis != "F")
        throw std::invalid_argument("unknown basis '" + basis + "'");
    const bool typeB = j.at("typeB").get<bool>();
    QSymElement e(typeB, basis == "M" ? Basis::M : Basis::F);
    for (const auto& t : j.at("terms"))
        e.add(Composition(t.at("parts").get<std::vector<int>>(), typeB),
              parse_rational(t.at("coeff").get<std::string>()));
    return e;
}

json to_json(const StructureTable& t)
{
    json entries = json::array();
    for (const auto& [key, count] : t.entries) {
        const auto [a, b, c] = key;
        entries.push_back({{"A", t.sets[a].members()},
                           {"B", t.sets[b].members()},
                           {"C", t.sets[c].members()},
                           {"count", count}});
    }
    json sets = json::array();
    for (const auto& s : t.sets)
        sets.push_back(s.members());
    return {{"formatVersion", structure_format_version},
            {"flavor", std::string(to_string(t.flavor))},
            {"kind", std::string(to_string(t.kind))},
            {"n", t.n},
            {"sets", sets},
            {"entries", entries}};
}

StructureTable structure_from_json(const json& j)
{
    if (j.at("formatVersion").get<int>() != structure_format_version)
        throw std::invalid_argument("structure table has an unsupported format version");
    StructureTable t;
    t.flavor = parse_flavor(j.at("flavor").get<std::string>());
    t.kind = parse_kind(j.at("kind").get<std::string>());
    t.n = j.at("n").get<int>();
    for (const auto& s : j.at("sets"))
        t.sets.emplace_back(t.flavor, t.n, s.get<std::vector<int>>());
    for (const auto& e : j.at("entries")) {
        const int a = t.index_of(StatSet(t.flavor, t.n, e.at("A").get<std::vector<int>>()));
        const int b = t.index_of(StatSet(t.flavor, t.n, e.at("B").get<std::vector<int>>()));
        const int c = t.index_of(StatSet(t.flavor, t.n, e.at("C").get<std::vector<int>>()));
        if (a < 0 || b < 0 || c < 0)
            throw std::invalid_argument("structure table entry names an unknown class");
        t.entries[{a, b, c}] = e.at("count").get<std::int64_t>();
    }
    return t;
}

json to_json(const AlgebraElement& e)
{
    json out = json::array();
    const auto& c = e.coefficients();
    for (std::size_t r = 0; r < c.size(); ++r)
        if (sgn(c[r]) != 0)
            out.push_back({{"rank", r}, {"element", e.group().element(r).to_string()}, {"coeff", to_string(c[r])}});
    return out;
}

json to_json(const RationalPolynomial& p)
{
    json coeffs = json::array();
    for (const auto& c : p.coefficients())
        coeffs.push_back(to_string(c));
    return coeffs;
}

json to_json(const RhoReport& r)
{
    json mismatches = json::array();
    for (const auto& [a, b] : r.mismatches)
        mismatches.push_back({a, b});
    return {{"n", r.n},
            {"ok", r.ok()},
            {"mismatches", mismatches},
            {"parityOk", r.parity_ok},
            {"idempotentOk", r.idempotent_ok},
            {"orthogonalOk", r.orthogonal_ok},
            {"idempotentCount", r.idempotent_count},
            {"spanDimension", r.span_dimension},
            {"spanEqual", r.span_equal},
            {"sumIsIdentity", r.sum_is_identity}};
}

json to_json(const BatteryEntry& e)
{
    json j{{"statistic", e.statistic},
           {"kind", std::string(to_string(e.kind))},
           {"flavor", std::string(to_string(e.flavor))},
           {"byNumber", e.by_number},
           {"n", e.n},
           {"closed", e.closed},
           {"expectClosed", e.expect_closed},
           {"asExpected", e.as_expected()}};
    if (e.witness)
        j["witness"] = {{"left", e.witness->left},
                        {"right", e.witness->right},
                        {"residualSupport", e.witness->residual.support_size()},
                        {"residual", to_json(e.witness->residual)}};
    if (e.closure_dim) {
        j["closureDim"] = *e.closure_dim;
        j["groupOrder"] = e.group_order;
    }
    return j;
}

json to_json(const BatteryReport& r)
{
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back(to_json(e));
    return {{"ok", r.ok()}, {"entries", entries}};
}

json to_json(const DualityReport& r)
{
    return {{"ok", r.ok},
            {"productsChecked", r.products_checked},
            {"productsFailed", r.products_failed},
            {"bipartiteChecked", r.bipartite_checked},
            {"bipartiteFailed", r.bipartite_failed}};
}

json to_json(const AuditReport& r)
{
    return {{"ok", r.ok}, {"representativesChecked", r.representatives_checked}, {"mismatches", r.mismatches}};
}

std::filesystem::path structure_cache_path(const std::filesystem::path& dir, Flavor flavor, Kind kind, int n)
{
    return dir / ("structure-" + std::string(to_string(flavor)) + "-" + std::string(to_string(kind)) + "-" +
                  std::to_string(n) + ".json");
}

std::optional<StructureTable> load_structure_table(const std::filesystem::path& dir, Flavor flavor, Kind kind,
                                                   int n)
{
    std::ifstream in(structure_cache_path(dir, flavor, kind, n));
    if (!in)
        return std::nullopt;
    try {
        StructureTable t = structure_from_json(json::parse(in));
        if (t.flavor != flavor || t.kind != kind || t.n != n)
            return std::nullopt;
        return t;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void save_structure_table(const std::filesystem::path& dir, const StructureTable& t)
{
    std::filesystem::create_directories(dir);
    const auto path = structure_cache_path(dir, t.flavor, t.kind, t.n);
    // write then rename so a concurrent reader never sees half a file
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        out << to_json(t).dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

StructureTable cached_structure_constants(const std::filesystem::path& dir, int n, Flavor flavor, Kind kind,
                                          unsigned jobs)
{
    if (!dir.empty())
        if (auto t = load_structure_table(dir, flavor, kind, n))
            return *t;
    StructureTable t = structure_constants(n, flavor, kind, jobs);
    if (!dir.empty())
        save_structure_table(dir, t);
    return t;
}

} // namespace peakalg
