#include <doctest.h>

#include <random>

#include "peakalg/qsym.hpp"
#include "support.hpp"

using namespace peakalg;

namespace {

using oracle::Poly;

Poly evaluate(const QSymElement& e, int k)
{
    REQUIRE(e.basis() == Basis::M);
    Poly out;
    for (const auto& [alpha, c] : e.terms())
        for (const auto& [ex, v] : oracle::monomial(alpha.parts, e.typeB(), k))
            out[ex] += c * v;
    oracle::prune(out);
    return out;
}

Poly from_census(const oracle::Census& c) { return oracle::as_poly(c); }

QSymElement m(std::vector<int> parts, bool typeB = false)
{
    return QSymElement::basis_element(Composition(std::move(parts), typeB), Basis::M);
}

QSymElement random_element(int degree, bool typeB, std::mt19937_64& rng)
{
    QSymElement e(typeB, Basis::M);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (const auto& c : compositions(degree, typeB))
        if (int v = coeff(rng))
            e.add(c, v);
    return e;
}

} // namespace

TEST_SUITE("qsym") {

TEST_CASE("basis change")
{
    QSymElement f(false, Basis::F);
    f.add(Composition({3}, false), 1);
    QSymElement all(false, Basis::M);
    for (const auto& c : compositions(3, false))
        all.add(c, 1);
    CHECK(f_to_m(f) == all);

    QSymElement fb(true, Basis::F);
    fb.add(Composition({1}, true), 1);
    CHECK(f_to_m(fb) == m({1}, true) + m({0, 1}, true));

    std::mt19937_64 rng(2);
    for (int d = 1; d <= 6; ++d)
        for (bool typeB : {false, true}) {
            const auto e = random_element(d, typeB, rng);
            CHECK(f_to_m(m_to_f(e)) == e);
        }
}

TEST_CASE("interior peak functions")
{
    CHECK(peak_function(StatSet(Flavor::interiorPeak, 1, {})) == m({1}) * 2);
    CHECK(peak_function(StatSet(Flavor::interiorPeak, 2, {})) == m({2}) * 2 + m({1, 1}) * 4);
    QSymElement f2(false, Basis::F);
    f2.add(Composition({2}, false), 2);
    f2.add(Composition({1, 1}, false), 2);
    CHECK(peak_function_f(StatSet(Flavor::interiorPeak, 2, {})) == f2);
    CHECK_THROWS_AS(peak_function(StatSet(Flavor::leftPeak, 2, {1})), std::invalid_argument);

    for (int n = 1; n <= 6; ++n)
        for (const auto& I : enumerate_peak_sets(n, Flavor::interiorPeak)) {
            const auto k = peak_function(I);
            CHECK(m_to_f(k) == peak_function_f(I));
            for (const auto& [alpha, c] : k.terms()) {
                CHECK(c > 0);
                CHECK(is_integer(c));
                const mpz_class z = c.get_num();
                const mpz_class below = z - 1;
                CHECK(mpz_class(z & below) == 0);
            }
            const Rational expected(1L << (I.size() + 1));
            const auto f = peak_function_f(I);
            for (const auto& [alpha, c] : f.terms())
                CHECK(c == expected);
        }
}

TEST_CASE("type B peak functions")
{
    CHECK(peak_function_b(StatSet(Flavor::typeBPeak, 1, {})) == m({1}, true) + m({0, 1}, true) * 2);
    CHECK(peak_function_b(StatSet(Flavor::typeBPeak, 1, {0})) == m({0, 1}, true) * 2);
    for (int n = 1; n <= 5; ++n)
        for (const auto& I : enumerate_peak_sets(n, Flavor::typeBPeak))
            CHECK(m_to_f(peak_function_b(I)) == peak_function_b_f(I));
}

TEST_CASE("peak functions agree with brute enumeration")
{
    for (int n = 1; n <= 4; ++n) {
        for (const auto& pi : enumerate_group(n, Kind::A)) {
            const auto w = testing::window(pi);
            REQUIRE(evaluate(peak_function(peak_set(pi, Flavor::interiorPeak)), n + 1) ==
                    from_census(oracle::chain_census(w, false, oracle::prime(n + 1))));
            REQUIRE(evaluate(peak_function_b(peak_set(pi, Flavor::leftPeak)), n + 1) ==
                    from_census(oracle::chain_census(w, false, oracle::left(n + 1))));
        }
        if (n > 3)
            continue;
        for (const auto& pi : enumerate_group(n, Kind::B))
            REQUIRE(evaluate(peak_function_b(peak_set(pi, Flavor::typeBPeak)), n + 1) ==
                    from_census(oracle::chain_census(testing::window(pi), true, oracle::plus_minus(n + 1))));
    }
}

TEST_CASE("library truncation matches the independent evaluation")
{
    std::mt19937_64 rng(4);
    for (int d = 1; d <= 4; ++d)
        for (bool typeB : {false, true}) {
            const auto e = random_element(d, typeB, rng);
            Poly lib;
            for (const auto& [ex, c] : truncate(e, 3))
                lib[ex] = c;
            CHECK(lib == evaluate(e, 3));
        }
}

TEST_CASE("quasi-shuffle")
{
    CHECK(quasi_shuffle(m({1}), m({1})) == m({1, 1}) * 2 + m({2}));
    CHECK(quasi_shuffle(m({2, 1}), QSymElement::one(false)) == m({2, 1}));
    CHECK(quasi_shuffle(m({0, 1}, true), QSymElement::one(true)) == m({0, 1}, true));
    CHECK_THROWS_AS(quasi_shuffle(m({1}), m({1}, true)), std::invalid_argument);

    std::mt19937_64 rng(9);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= 4; ++b)
            for (bool typeB : {false, true}) {
                const auto x = random_element(a, typeB, rng);
                const auto y = random_element(b, typeB, rng);
                const auto xy = quasi_shuffle(x, y);
                CHECK(xy == quasi_shuffle(y, x));
                CHECK(evaluate(xy, 3) == oracle::times(evaluate(x, 3), evaluate(y, 3)));
            }
}

TEST_CASE("Fibonacci ranks")
{
    auto functions = [](int n, Flavor f) {
        std::vector<QSymElement> out;
        for (const auto& s : enumerate_peak_sets(n, f))
            out.push_back(f == Flavor::interiorPeak ? peak_function(s) : peak_function_b(s));
        return out;
    };
    CHECK(rank_of_span(functions(5, Flavor::interiorPeak)) == 5);
    CHECK(rank_of_span(functions(3, Flavor::typeBPeak)) == 5);
    CHECK(rank_of_span(std::vector<QSymElement>{m({2, 1})}) == 1);
    for (int n = 1; n <= 6; ++n) {
        CHECK(static_cast<std::uint64_t>(rank_of_span(functions(n, Flavor::interiorPeak))) == oracle::fib(n - 1));
        CHECK(static_cast<std::uint64_t>(rank_of_span(functions(n, Flavor::leftPeak))) == oracle::fib(n));
        CHECK(static_cast<std::uint64_t>(rank_of_span(functions(n, Flavor::typeBPeak))) == oracle::fib(n + 1));
    }
}

TEST_CASE("peak functions form subrings")
{
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= 5; ++b) {
            std::vector<QSymElement> span_i, span_b;
            for (const auto& s : enumerate_peak_sets(a + b, Flavor::interiorPeak))
                span_i.push_back(peak_function(s));
            for (const auto& s : enumerate_peak_sets(a + b, Flavor::typeBPeak))
                span_b.push_back(peak_function_b(s));
            for (const auto& x : enumerate_peak_sets(a, Flavor::interiorPeak))
                for (const auto& y : enumerate_peak_sets(b, Flavor::interiorPeak))
                    CHECK(in_span(span_i, quasi_shuffle(peak_function(x), peak_function(y))));
            for (const auto& x : enumerate_peak_sets(a, Flavor::typeBPeak))
                for (const auto& y : enumerate_peak_sets(b, Flavor::typeBPeak))
                    CHECK(in_span(span_b, quasi_shuffle(peak_function_b(x), peak_function_b(y))));
            for (const auto& x : enumerate_peak_sets(a, Flavor::leftPeak))
                for (const auto& y : enumerate_peak_sets(b, Flavor::leftPeak))
                    CHECK(in_span(span_b, quasi_shuffle(peak_function_b(x), peak_function_b(y))));
        }
}

TEST_CASE("z0 = 0 specialisation")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& pi : enumerate_group(n, Kind::A)) {
            Poly left = evaluate(peak_function_b(peak_set(pi, Flavor::leftPeak)), n + 1);
            Poly stripped;
            for (const auto& [e, c] : left)
                if (e[0] == 0)
                    stripped[std::vector<int>(e.begin() + 1, e.end())] = c;
            CHECK(stripped == evaluate(peak_function(peak_set(pi, Flavor::interiorPeak)), n + 1));
        }
}

}
