// peakalg: command-line front end over the library.
//
// Every subcommand builds a JSON result; --format picks how it is printed.
// Exit codes: 0 all checks passed, 1 a verification failed, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "peakalg/poset.hpp"
#include "verify.hpp"

namespace peakalg::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string window;
    std::string flavor;
    std::string kind;
    std::string format = "text";
    std::string cache_dir;
    std::string poset_file;
    std::string alphabet = "prime";
    std::string alphabet2;
    std::string set;
    std::string basis = "M";
    int n = 0;
    int n_max = 4;
    int k = 2;
    int verify_k = 3;
    int peaks = -1;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    bool allow_large = false;
    bool audit = false;
    bool by_number = false;
    std::string ideal_of;
};

struct Result {
    json body;
    bool passed = true;
};

void check_bounds(const Options& o, int n, Kind kind)
{
    const int limit = kind == Kind::A ? 8 : 6;
    if (n < 0)
        throw UsageError("n must be nonnegative");
    if (n > limit && !o.allow_large)
        throw UsageError("n = " + std::to_string(n) + " exceeds the default bound " + std::to_string(limit) +
                         " for kind " + std::string(to_string(kind)) + "; pass --allow-large to proceed");
}

std::filesystem::path cache_dir(const Options& o)
{
    if (!o.cache_dir.empty())
        return o.cache_dir;
    if (const char* env = std::getenv("PEAKALG_CACHE_DIR"))
        return env;
    return {};
}

Alphabet make_alphabet(const std::string& name, int k)
{
    switch (parse_alphabet_variant(name)) {
    case AlphabetVariant::prime: return Alphabet::prime(k);
    case AlphabetVariant::left: return Alphabet::left(k);
    case AlphabetVariant::plusMinus: return Alphabet::plus_minus(k);
    default: throw UsageError("alphabet must be prime, left or plusMinus");
    }
}

Result cmd_peaks(const Options& o)
{
    const Permutation pi = Permutation::parse(o.window);
    check_bounds(o, pi.size(), pi.kind());
    std::vector<Flavor> flavors;
    if (!o.flavor.empty())
        flavors.push_back(parse_flavor(o.flavor));
    else
        for (Flavor f : {Flavor::interiorPeak, Flavor::leftPeak, Flavor::typeBPeak, Flavor::rightPeak,
                         Flavor::exteriorPeak, Flavor::descentA, Flavor::descentB})
            if (!requires_signed(f) || pi.is_signed())
                flavors.push_back(f);
    json rows = json::array();
    for (Flavor f : flavors) {
        if (requires_signed(f) && !pi.is_signed())
            throw UsageError("flavor " + std::string(to_string(f)) + " needs a signed window (use negative entries)");
        rows.push_back({{"flavor", std::string(to_string(f))}, {"set", statistic(pi, f).to_string()}});
    }
    return {{{"window", pi.to_string()}, {"kind", std::string(to_string(pi.kind()))}, {"rows", rows}}};
}

Result cmd_extensions(const Options& o)
{
    std::ifstream in(o.poset_file);
    if (!in)
        throw UsageError("cannot read poset file '" + o.poset_file + "'");
    const Kind kind = parse_kind(o.kind);
    std::vector<Permutation> exts;
    int size = 0;
    if (kind == Kind::A) {
        const LabeledPoset p = LabeledPoset::parse(in, o.n);
        size = p.size();
        check_bounds(o, size, kind);
        exts = linear_extensions(p);
    } else {
        const TypeBPoset p = TypeBPoset::parse(in, o.n);
        size = p.size();
        check_bounds(o, size, kind);
        exts = linear_extensions_b(p);
    }
    json rows = json::array();
    for (const auto& e : exts)
        rows.push_back({{"window", e.to_string()}});
    return {{{"n", size}, {"kind", std::string(to_string(kind))}, {"count", exts.size()}, {"rows", rows}}};
}

Result cmd_census(const Options& o)
{
    Alphabet s = make_alphabet(o.alphabet, o.k);
    if (!o.alphabet2.empty())
        s = Alphabet::product(s, make_alphabet(o.alphabet2, o.k));
    Census c;
    json head;
    if (!o.poset_file.empty()) {
        std::ifstream in(o.poset_file);
        if (!in)
            throw UsageError("cannot read poset file '" + o.poset_file + "'");
        const Kind kind = parse_kind(o.kind);
        if (kind == Kind::A) {
            const LabeledPoset p = LabeledPoset::parse(in, o.n);
            check_bounds(o, p.size(), kind);
            c = monomial_census(enumerate_epp(p, s), s);
        } else {
            const TypeBPoset p = TypeBPoset::parse(in, o.n);
            check_bounds(o, p.size(), kind);
            c = monomial_census(enumerate_epp(p, s), s);
        }
        head["poset"] = o.poset_file;
    } else {
        const Permutation pi = Permutation::parse(o.window);
        check_bounds(o, pi.size(), pi.kind());
        c = census(pi, s);
        head["window"] = pi.to_string();
    }
    json rows = json::array();
    for (const auto& [e, count] : c.terms)
        rows.push_back({{"exponents", e}, {"count", count}});
    head["alphabet"] = std::string(to_string(s.variant()));
    head["k"] = o.k;
    head["variables"] = c.num_vars;
    head["total"] = c.total();
    head["rows"] = rows;
    return {head};
}

Result cmd_qsym(const Options& o)
{
    const Flavor f = parse_flavor(o.flavor.empty() ? "interior" : o.flavor);
    if (f != Flavor::interiorPeak && f != Flavor::leftPeak && f != Flavor::typeBPeak)
        throw UsageError("qsym supports the interior, left and typeB flavors");
    if (o.n < 1)
        throw UsageError("qsym needs --n >= 1");
    check_bounds(o, o.n, natural_kind(f));
    const bool want_f = o.basis == "F";
    if (!want_f && o.basis != "M")
        throw UsageError("basis must be M or F");
    auto function = [&](const StatSet& s) {
        if (f == Flavor::interiorPeak)
            return want_f ? peak_function_f(s) : peak_function(s);
        return want_f ? peak_function_b_f(s) : peak_function_b(s);
    };
    std::vector<StatSet> sets;
    if (!o.set.empty())
        sets.push_back(parse_stat_set(o.set, f, o.n));
    else
        sets = enumerate_peak_sets(o.n, f);
    json rows = json::array();
    std::vector<QSymElement> fns;
    for (const auto& s : sets) {
        const QSymElement e = function(s);
        for (const auto& [alpha, c] : e.terms())
            rows.push_back({{"set", s.to_string()}, {"parts", alpha.to_string()}, {"coeff", to_string(c)}});
        fns.push_back(e);
    }
    json out{{"flavor", std::string(to_string(f))}, {"n", o.n}, {"basis", o.basis}, {"rows", rows}};
    if (o.set.empty()) {
        const int shift = f == Flavor::interiorPeak ? -1 : f == Flavor::leftPeak ? 0 : 1;
        const int rank = rank_of_span(fns);
        out["rank"] = rank;
        out["fibonacci"] = fibonacci(o.n + shift);
        return {out, static_cast<std::uint64_t>(rank) == fibonacci(o.n + shift)};
    }
    return {out};
}

Result cmd_structure(const Options& o)
{
    const Flavor f = parse_flavor(o.flavor.empty() ? "interior" : o.flavor);
    const Kind kind = o.kind.empty() ? natural_kind(f) : parse_kind(o.kind);
    if (requires_signed(f) && kind == Kind::A)
        throw UsageError("flavor " + std::string(to_string(f)) + " lives on kind B");
    check_bounds(o, o.n, kind);
    const StructureTable t = cached_structure_constants(cache_dir(o), o.n, f, kind, o.jobs);
    json out = to_json(t);
    json rows = json::array();
    for (const auto& e : out["entries"])
        rows.push_back({{"A", StatSet(f, t.n, e["A"].get<std::vector<int>>()).to_string()},
                        {"B", StatSet(f, t.n, e["B"].get<std::vector<int>>()).to_string()},
                        {"C", StatSet(f, t.n, e["C"].get<std::vector<int>>()).to_string()},
                        {"count", e["count"]}});
    out.erase("entries");
    out["rows"] = rows;
    out["symmetric"] = structure_table_symmetric(t);
    bool passed = true;
    if (o.audit) {
        const AuditReport a = audit_structure_constants(t, o.jobs);
        out["audit"] = to_json(a);
        passed = a.ok;
    }
    return {out, passed};
}

std::vector<AlgebraElement> basis_for(const Options& o, Flavor f, Kind kind)
{
    if (o.by_number)
        return eulerian_basis(o.n, kind, f);
    std::vector<AlgebraElement> out;
    for (auto& [s, e] : class_sums(Group::get(o.n, kind), f))
        out.push_back(std::move(e));
    return out;
}

Result cmd_closure(const Options& o)
{
    const Flavor f = parse_flavor(o.flavor.empty() ? "interior" : o.flavor);
    const Kind kind = o.kind.empty() ? natural_kind(f) : parse_kind(o.kind);
    if (requires_signed(f) && kind == Kind::A)
        throw UsageError("flavor " + std::string(to_string(f)) + " lives on kind B");
    check_bounds(o, o.n, kind);
    const auto basis = basis_for(o, f, kind);
    const ClosureResult r = closure_check(basis);
    json out{{"statistic", std::string(to_string(f)) + (o.by_number ? "Number" : "Set")},
             {"kind", std::string(to_string(kind))},
             {"n", o.n},
             {"closed", r.closed},
             {"dimension", r.dimension},
             {"commutative", is_commutative(basis)}};
    if (r.witness)
        out["witness"] = {{"left", r.witness->left}, {"right", r.witness->right},
                          {"residual", to_json(*r.witness->residual)}};
    bool passed = r.closed;
    if (!o.ideal_of.empty()) {
        const Flavor g = parse_flavor(o.ideal_of);
        const bool ideal = ideal_check(basis, basis_for(o, g, kind));
        out["idealOf"] = std::string(to_string(g));
        out["ideal"] = ideal;
        passed = passed && ideal;
    }
    return {out, passed};
}

Result cmd_orderpoly(const Options& o)
{
    if (o.n < 1)
        throw UsageError("orderpoly needs --n >= 1");
    check_bounds(o, o.n, Kind::A);
    json rows = json::array();
    const int lo = o.peaks >= 0 ? o.peaks : 0;
    const int hi = o.peaks >= 0 ? o.peaks : (o.n - 1) / 2;
    for (int i = lo; i <= hi; ++i) {
        const RationalPolynomial p = order_polynomial(i, o.n);
        rows.push_back({{"peaks", i}, {"polynomial", p.to_string()}, {"coefficients", to_json(p)}});
    }
    return {{{"n", o.n}, {"rows", rows}}};
}

Result cmd_idempotents(const Options& o)
{
    if (o.n < 1)
        throw UsageError("idempotents needs --n >= 1");
    check_bounds(o, o.n, Kind::A);
    json es = json::array();
    for (const auto& [i, e] : idempotents(o.n))
        es.push_back({{"index", i}, {"element", to_json(e)}});
    const RhoReport r = verify_rho_multiplicativity(o.n, o.jobs);
    return {{{"n", o.n}, {"idempotents", es}, {"report", to_json(r)}}, r.ok()};
}

Result cmd_negatives(const Options& o)
{
    check_bounds(o, o.n_max, Kind::A);
    const int n_max_b = std::min(o.n_max, 5);
    const BatteryReport r = negative_battery(o.n_max, n_max_b, std::min(o.n_max, 5), o.jobs);
    return {to_json(r), r.ok()};
}

Result cmd_verify(const Options& o)
{
    check_bounds(o, o.n_max, Kind::A);
    VerifyConfig cfg;
    cfg.n_max = o.n_max;
    cfg.k = o.verify_k;
    cfg.seed = o.seed;
    cfg.jobs = o.jobs;
    cfg.cache_dir = cache_dir(o);
    json out = run_verify(cfg);
    return {out, out["summary"]["failed"].get<std::size_t>() == 0};
}

// Text output is a plain rendering of the JSON result.
void render_text(std::ostream& os, const json& j, int indent)
{
    const std::string pad(indent, ' ');
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat = [](const json& v) {
        if (!v.is_array())
            return !v.is_object();
        for (const auto& x : v)
            if (x.is_structured())
                return false;
        return true;
    };
    if (j.is_object()) {
        for (const auto& [key, v] : j.items()) {
            if (flat(v)) {
                os << pad << key << ": ";
                if (v.is_array()) {
                    for (std::size_t i = 0; i < v.size(); ++i)
                        os << (i ? ", " : "") << scalar(v[i]);
                } else {
                    os << scalar(v);
                }
                os << '\n';
            } else {
                os << pad << key << ":\n";
                render_text(os, v, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object()) {
                bool first = true;
                std::ostringstream line;
                bool simple = true;
                for (const auto& [key, x] : v.items()) {
                    if (!flat(x))
                        simple = false;
                    line << (first ? "" : "  ") << key << "=" << (x.is_array() ? x.dump() : scalar(x));
                    first = false;
                }
                if (simple) {
                    os << pad << "- " << line.str() << '\n';
                } else {
                    os << pad << "-\n";
                    render_text(os, v, indent + 2);
                }
            } else {
                os << pad << "- " << scalar(v) << '\n';
            }
        }
    } else {
        os << pad << scalar(j) << '\n';
    }
}

void render_csv(std::ostream& os, const json& j)
{
    if (!j.contains("rows") || !j["rows"].is_array())
        throw UsageError("csv output is available for peaks, extensions, census, qsym, structure and orderpoly");
    const json& rows = j["rows"];
    if (rows.empty())
        return;
    std::vector<std::string> keys;
    for (const auto& [key, v] : rows.front().items())
        keys.push_back(key);
    auto cell = [](const json& v) {
        std::string s = v.is_string() ? v.get<std::string>() : v.dump();
        if (s.find_first_of(",\"\n") != std::string::npos) {
            std::string q = "\"";
            for (char c : s)
                q += c == '"' ? std::string("\"\"") : std::string(1, c);
            return q + "\"";
        }
        return s;
    };
    for (std::size_t i = 0; i < keys.size(); ++i)
        os << (i ? "," : "") << keys[i];
    os << '\n';
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < keys.size(); ++i)
            os << (i ? "," : "") << cell(r.at(keys[i]));
        os << '\n';
    }
}

void emit(const json& j, const std::string& format)
{
    std::ostringstream buf;
    if (format == "json")
        buf << j.dump(2) << '\n';
    else if (format == "csv")
        render_csv(buf, j);
    else
        render_text(buf, j, 0);
    std::cout << buf.str() << std::flush;
}

int emit_error(const std::string& type, const std::string& message)
{
    std::cerr << json{{"error", {{"type", type}, {"message", message}}}}.dump() << '\n';
    return 2;
}

} // namespace
} // namespace peakalg::cli

int main(int argc, char** argv)
{
    using namespace peakalg::cli;
    Options o;
    CLI::App app{"Peak statistics, enriched P-partitions and peak algebras"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--cache-dir", o.cache_dir, "Structure-table cache directory (env PEAKALG_CACHE_DIR)");
    app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_flag("--allow-large", o.allow_large, "Permit n beyond 8 (kind A) or 6 (kind B)");
    app.fallthrough();

    auto* peaks = app.add_subcommand("peaks", "Peak and descent sets of a window");
    peaks->add_option("--window", o.window, "Comma-separated window, e.g. -2,3,4,-5,1")->required();
    peaks->add_option("--flavor", o.flavor, "interior, left, typeB, right, exterior, descentA, descentB");

    auto* ext = app.add_subcommand("extensions", "Linear extensions of a poset file");
    ext->add_option("--poset-file", o.poset_file, "One relation a<b per line")->required();
    ext->add_option("--kind", o.kind, "A or B");
    ext->add_option("--n", o.n, "Number of labels (default: largest label)");

    auto* cen = app.add_subcommand("census", "Weight census of enriched maps");
    cen->add_option("--window", o.window, "Permutation window");
    cen->add_option("--poset-file", o.poset_file, "Poset file instead of a window");
    cen->add_option("--kind", o.kind, "A or B (poset files)");
    cen->add_option("--n", o.n, "Number of labels for poset files");
    cen->add_option("--alphabet", o.alphabet, "prime, left or plusMinus");
    cen->add_option("--alphabet2", o.alphabet2, "Second factor for a product alphabet");
    cen->add_option("--k", o.k, "Alphabet truncation")->check(CLI::Range(0, 12));

    auto* qs = app.add_subcommand("qsym", "Peak function expansions and rank report");
    qs->add_option("--flavor", o.flavor, "interior, left or typeB");
    qs->add_option("--n", o.n, "Degree")->required();
    qs->add_option("--set", o.set, "Single peak set, e.g. {1,3}");
    qs->add_option("--basis", o.basis, "M or F");

    auto* st = app.add_subcommand("structure", "Structure constants of a peak algebra");
    st->add_option("--flavor", o.flavor, "Statistic");
    st->add_option("--n", o.n, "Size")->required();
    st->add_option("--kind", o.kind, "A or B (default: natural kind of the flavor)");
    st->add_flag("--audit", o.audit, "Recount from every class representative");

    auto* cl = app.add_subcommand("closure", "Closure and ideal checks for class-sum spans");
    cl->add_option("--flavor", o.flavor, "Statistic");
    cl->add_option("--n", o.n, "Size")->required();
    cl->add_option("--kind", o.kind, "A or B");
    cl->add_flag("--number", o.by_number, "Group by number of peaks instead of peak set");
    cl->add_option("--ideal-of", o.ideal_of, "Also check two-sided ideal in this flavor's span");

    auto* op = app.add_subcommand("orderpoly", "Enriched order polynomials");
    op->add_option("--n", o.n, "Size")->required();
    op->add_option("--peaks", o.peaks, "Interior peak count (default: all)");

    auto* id = app.add_subcommand("idempotents", "Eulerian peak idempotents and the rho report");
    id->add_option("--n", o.n, "Size")->required();

    auto* neg = app.add_subcommand("negatives", "Statistics whose class sums do not close");
    neg->add_option("--n-max", o.n_max, "Largest n searched (kind B stops at min(n-max, 5))");

    auto* ver = app.add_subcommand("verify", "Run the full verification suite");
    ver->add_option("--n-max", o.n_max, "Scale of the exhaustive checks");
    ver->add_option("--k", o.verify_k, "Alphabet truncation for bipartite checks")->check(CLI::Range(1, 6));
    ver->add_option("--seed", o.seed, "Seed for random posets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error("usage", e.what());
    }

    try {
        Result r;
        const auto* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        // structure and closure default to the flavor's own kind
        if (o.kind.empty() && name != "structure" && name != "closure")
            o.kind = "A";
        if (name == "peaks")
            r = cmd_peaks(o);
        else if (name == "extensions")
            r = cmd_extensions(o);
        else if (name == "census") {
            if (o.window.empty() == o.poset_file.empty())
                throw UsageError("census takes exactly one of --window and --poset-file");
            r = cmd_census(o);
        } else if (name == "qsym")
            r = cmd_qsym(o);
        else if (name == "structure")
            r = cmd_structure(o);
        else if (name == "closure")
            r = cmd_closure(o);
        else if (name == "orderpoly")
            r = cmd_orderpoly(o);
        else if (name == "idempotents")
            r = cmd_idempotents(o);
        else if (name == "negatives")
            r = cmd_negatives(o);
        else
            r = cmd_verify(o);
        r.body["passed"] = r.passed;
        emit(r.body, o.format);
        return r.passed ? 0 : 1;
    } catch (const UsageError& e) {
        return emit_error("usage", e.what());
    } catch (const std::invalid_argument& e) {
        return emit_error("invalid_input", e.what());
    } catch (const std::out_of_range& e) {
        return emit_error("invalid_input", e.what());
    } catch (const std::exception& e) {
        return emit_error("internal", e.what());
    }
}
