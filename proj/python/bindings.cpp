#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "peakalg/eulerian.hpp"
#include "peakalg/group_algebra.hpp"
#include "peakalg/poset.hpp"
#include "peakalg/qsym.hpp"
#include "peakalg/statistics.hpp"

namespace py = pybind11;
using namespace peakalg;

namespace {

py::object fraction(const Rational& q)
{
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(q.get_str());
}

Permutation from_window(const std::vector<int>& w, bool is_signed)
{
    bool negative = false;
    for (int v : w)
        negative = negative || v < 0;
    return Permutation(w, is_signed || negative ? Kind::B : Kind::A);
}

// Unsigned windows are promoted when the flavor only exists in type B.
Permutation for_flavor(const std::vector<int>& w, Flavor f)
{
    return from_window(w, requires_signed(f));
}

std::vector<int> window_of(const Permutation& p)
{
    const auto w = p.window();
    return {w.begin(), w.end()};
}

py::tuple as_tuple(const StatSet& s) { return py::cast(s.members()); }

py::dict terms(const QSymElement& e)
{
    py::dict out;
    for (const auto& [alpha, c] : e.terms())
        out[py::tuple(py::cast(alpha.parts))] = fraction(c);
    return out;
}

py::dict element_dict(const AlgebraElement& e)
{
    py::dict out;
    for (std::size_t r = 0; r < e.group().order(); ++r)
        if (sgn(e[r]) != 0)
            out[py::tuple(py::cast(window_of(e.group().element(r))))] = fraction(e[r]);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Peak statistics, enriched P-partitions and peak algebras";

    py::register_exception<std::invalid_argument>(m, "InvalidInput", PyExc_ValueError);

    m.def(
        "peak_set",
        [](const std::vector<int>& window, const std::string& flavor) {
            const Flavor f = parse_flavor(flavor);
            return peak_set(for_flavor(window, f), f).members();
        },
        py::arg("window"), py::arg("flavor") = "interior");

    m.def(
        "descent_set",
        [](const std::vector<int>& window, const std::string& flavor) {
            const Flavor f = parse_flavor(flavor);
            return descent_set(for_flavor(window, f), f).members();
        },
        py::arg("window"), py::arg("flavor") = "descentA");

    m.def("fibonacci", [](int n) { return fibonacci(n); }, py::arg("n"), "Fibonacci numbers with f(0) = f(1) = 1.");

    m.def(
        "linear_extensions",
        [](int n, const std::vector<std::pair<int, int>>& relations) {
            std::vector<std::vector<int>> out;
            for (const auto& p : linear_extensions(LabeledPoset(n, relations)))
                out.push_back(window_of(p));
            return out;
        },
        py::arg("n"), py::arg("relations"), "Relations are pairs (a, b) meaning a < b.");

    m.def(
        "peak_function",
        [](const std::vector<int>& members, int n, const std::string& flavor, const std::string& basis) {
            const Flavor f = parse_flavor(flavor);
            const StatSet s(f, n, members);
            const bool to_f = basis == "F";
            if (!to_f && basis != "M")
                throw std::invalid_argument("basis must be M or F");
            if (f == Flavor::interiorPeak)
                return terms(to_f ? peak_function_f(s) : peak_function(s));
            return terms(to_f ? peak_function_b_f(s) : peak_function_b(s));
        },
        py::arg("members"), py::arg("n"), py::arg("flavor") = "interior", py::arg("basis") = "M",
        "Coefficients keyed by composition; type B compositions lead with a possibly zero part.");

    m.def(
        "enriched_order_polynomial",
        [](const std::vector<int>& window) {
            const auto omega = enriched_order_polynomial(from_window(window, false));
            py::list out;
            for (const auto& c : omega.coefficients())
                out.append(fraction(c));
            return out;
        },
        py::arg("window"), "Coefficients in increasing degree.");

    m.def(
        "structure_constants",
        [](int n, const std::string& flavor, unsigned jobs) {
            const auto t = structure_constants(n, parse_flavor(flavor), jobs);
            py::dict out;
            for (const auto& [key, count] : t.entries) {
                const auto& [a, b, c] = key;
                out[py::make_tuple(as_tuple(t.sets[a]), as_tuple(t.sets[b]), as_tuple(t.sets[c]))] = count;
            }
            return out;
        },
        py::arg("n"), py::arg("flavor") = "interior", py::arg("jobs") = 1,
        "Nonzero counts keyed by (A, B, C).");

    m.def(
        "closure",
        [](int n, const std::string& flavor) {
            const Flavor f = parse_flavor(flavor);
            std::vector<AlgebraElement> sums;
            for (auto& [s, e] : class_sums(Group::get(n, natural_kind(f)), f))
                sums.push_back(std::move(e));
            const auto c = closure_check(sums);
            py::dict out;
            out["closed"] = c.closed;
            out["dimension"] = c.dimension;
            out["commutative"] = is_commutative(sums);
            if (c.witness) {
                py::object residual = py::none();
                if (c.witness->residual)
                    residual = element_dict(*c.witness->residual);
                out["witness"] = py::make_tuple(c.witness->left, c.witness->right, residual);
            }
            return out;
        },
        py::arg("n"), py::arg("flavor") = "interior",
        "Whether the span of the class sums is closed under convolution.");

    m.def(
        "idempotents",
        [](int n) {
            py::list out;
            for (const auto& [j, e] : idempotents(n))
                out.append(py::make_tuple(j, element_dict(e)));
            return out;
        },
        py::arg("n"));
}
