#include <doctest.h>

#include <map>
#include <random>

#include "peakalg/enriched.hpp"
#include "peakalg/poset.hpp"
#include "support.hpp"

using namespace peakalg;
using testing::as_oracle;
using testing::window;

namespace {

std::vector<std::string> labels(const Alphabet& a)
{
    std::vector<std::string> out;
    for (int i = 0; i < a.size(); ++i)
        out.push_back(a.info(a.letter(i)).label);
    return out;
}

std::set<std::string> below(const Alphabet& a, const std::string& top, Sign sign)
{
    std::set<std::string> out;
    const Letter t = a.find(top);
    for (int i = 0; i < a.size(); ++i)
        if (a.leq(a.letter(i), t, sign))
            out.insert(a.info(a.letter(i)).label);
    return out;
}

} // namespace

TEST_SUITE("enriched_enum") {

TEST_CASE("alphabet orders")
{
    CHECK(labels(Alphabet::prime(3)) == std::vector<std::string>{"-1", "1", "-2", "2", "-3", "3"});
    CHECK(labels(Alphabet::left(2)) == std::vector<std::string>{"0", "-1", "1", "-2", "2"});
    CHECK(labels(Alphabet::plus_minus(2)) ==
          std::vector<std::string>{"-2", "-2^-1", "-1", "-1^-1", "0", "1^-1", "1", "2^-1", "2"});
    const auto pm = Alphabet::plus_minus(2);
    CHECK(pm.negate(pm.find("1^-1")) == pm.find("-1^-1"));
    CHECK(pm.negate(pm.find("0")) == pm.find("0"));
    CHECK(pm.info(pm.find("0")).plus_class);
    CHECK_FALSE(pm.info(pm.find("-1^-1")).plus_class);
    CHECK(pm.info(pm.find("-1")).plus_class);
}

TEST_CASE("weak comparisons")
{
    const auto l = Alphabet::left(3);
    CHECK(below(l, "3", Sign::plus) == std::set<std::string>{"0", "-1", "1", "-2", "2", "-3", "3"});
    CHECK(below(l, "3", Sign::minus) == std::set<std::string>{"0", "-1", "1", "-2", "2", "-3"});
    CHECK(below(l, "-3", Sign::minus) == below(l, "3", Sign::minus));
    const Letter m = l.find("-2");
    CHECK(l.leq_minus(m, m));
    CHECK_FALSE(l.leq_plus(m, m));
}

TEST_CASE("up-down order on products")
{
    const auto s = Alphabet::prime(2);
    const auto st = Alphabet::product(s, s);
    auto p = [&](const char* a, const char* b) { return st.pair(s.find(a), s.find(b)); };
    CHECK(st.less(p("1", "2"), p("-2", "-1")));
    CHECK(st.less(p("1", "-1"), p("1", "2")));
    CHECK(st.less(p("-1", "2"), p("-1", "-1")));
    CHECK(st.leq_plus(p("1", "1"), p("1", "1")));
    CHECK_FALSE(st.leq_plus(p("1", "-1"), p("1", "-1")));
    CHECK(st.leq_plus(p("-1", "-2"), p("-1", "-2")));
    CHECK_FALSE(st.leq_plus(p("-1", "2"), p("-1", "2")));
    CHECK(st.leq_minus(p("-1", "2"), p("-1", "2")));

    // Same table, built independently.
    const auto o = oracle::product(oracle::prime(2), oracle::prime(2));
    for (int a = 0; a < st.size(); ++a)
        for (int b = 0; b < st.size(); ++b) {
            // Oracle letters are indexed (i, j) in symbol order 1,-1,2,-2.
            auto to_oracle = [&](Letter x) {
                auto c = st.components(x);
                static const std::map<std::string, int> sym{{"1", 0}, {"-1", 1}, {"2", 2}, {"-2", 3}};
                return sym.at(s.info(c[0]).label) * 4 + sym.at(s.info(c[1]).label);
            };
            const Letter x = st.letter(a), y = st.letter(b);
            REQUIRE(static_cast<bool>(o.lt[to_oracle(x)][to_oracle(y)]) == st.less(x, y));
            REQUIRE(static_cast<bool>(o.plus[to_oracle(x)]) == st.info(x).plus_class);
        }
}

TEST_CASE("small enumerations")
{
    for (int k = 1; k <= 4; ++k) {
        CHECK(count_epp(Permutation::identity(1), Alphabet::prime(k)) == static_cast<std::size_t>(2 * k));
        CHECK(count_epp(Permutation::identity(2), Alphabet::prime(k)) == static_cast<std::size_t>(2 * k * k));
        CHECK(count_epp(Permutation::identity(1, Kind::B), Alphabet::plus_minus(k)) ==
              static_cast<std::size_t>(2 * k + 1));
    }
    CHECK_THROWS_AS(enumerate_epp(Permutation::identity(2, Kind::B), Alphabet::prime(2)), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_epp(Permutation::identity(2), Alphabet::plus_minus(2)), std::invalid_argument);
}

TEST_CASE("weight census of single letters")
{
    const auto c = census(Permutation::identity(1), Alphabet::prime(3));
    CHECK(c.terms == std::map<std::vector<int>, std::int64_t>{{{1, 0, 0}, 2}, {{0, 1, 0}, 2}, {{0, 0, 1}, 2}});
    const auto b = census(Permutation::identity(1, Kind::B), Alphabet::plus_minus(2));
    CHECK(b.terms == std::map<std::vector<int>, std::int64_t>{{{1, 0, 0}, 1}, {{0, 1, 0}, 2}, {{0, 0, 1}, 2}});
    const auto m = census(Permutation::parse("-1"), Alphabet::plus_minus(2));
    CHECK(m.terms == std::map<std::vector<int>, std::int64_t>{{{0, 1, 0}, 2}, {{0, 0, 1}, 2}});
    const auto e = census(Permutation::identity(0), Alphabet::prime(2));
    CHECK(e.total() == 1);
}

TEST_CASE("chain enumeration matches the definition filter")
{
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k) {
            const Alphabet p = Alphabet::prime(k), l = Alphabet::left(k);
            const auto op = oracle::prime(k), ol = oracle::left(k);
            for (const auto& pi : enumerate_group(n, Kind::A)) {
                REQUIRE(as_oracle(census(pi, p)) == oracle::chain_census(window(pi), false, op));
                REQUIRE(as_oracle(census(pi, l)) == oracle::chain_census(window(pi), false, ol));
            }
        }
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 2; ++k)
            for (const auto& pi : enumerate_group(n, Kind::B))
                REQUIRE(as_oracle(census(pi, Alphabet::plus_minus(k))) ==
                        oracle::chain_census(window(pi), true, oracle::plus_minus(k)));
}

TEST_CASE("every enumerated map satisfies the chain conditions")
{
    const auto pi = Permutation::parse("-3,1,-2");
    const auto a = Alphabet::plus_minus(2);
    const auto maps = enumerate_epp(pi, a);
    std::set<EnrichedMap> unique(maps.begin(), maps.end());
    CHECK(unique.size() == maps.size());
    for (const auto& f : maps) {
        CHECK(is_enriched(pi, f, a));
        CHECK(map_from_chain(pi, chain_values(pi, f, a), a) == f);
    }
}

TEST_CASE("poset enumeration splits over linear extensions")
{
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 4; ++n)
        for (int t = 0; t < 4; ++t) {
            const auto p = random_poset(n, 0.4, rng);
            for (const Alphabet& a : {Alphabet::prime(2), Alphabet::left(2)}) {
                const auto maps = enumerate_epp(p, a);
                oracle::Census sum;
                for (const auto& pi : linear_extensions(p))
                    sum = oracle::add(sum, as_oracle(census(pi, a)));
                CHECK(as_oracle(monomial_census(maps, a)) == sum);
            }
            const auto direct = oracle::epp_census(n, false, oracle::left(2), [&](int a, int b) { return p.less(a, b); });
            CHECK(as_oracle(monomial_census(enumerate_epp(p, Alphabet::left(2)), Alphabet::left(2))) == direct);

            const auto q = random_type_b_poset(n, 0.4, rng);
            const auto pm = Alphabet::plus_minus(2);
            oracle::Census bsum;
            for (const auto& pi : linear_extensions_b(q))
                bsum = oracle::add(bsum, as_oracle(census(pi, pm)));
            const auto bmaps = monomial_census(enumerate_epp(q, pm), pm);
            CHECK(as_oracle(bmaps) == bsum);
            CHECK(as_oracle(bmaps) ==
                  oracle::epp_census(n, true, oracle::plus_minus(2), [&](int a, int b) { return q.less(a, b); }));
        }
}

TEST_CASE("prime census is the z0-free part of the left census")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& pi : enumerate_group(n, Kind::A)) {
            const auto p = census(pi, Alphabet::prime(3));
            const auto l = census(pi, Alphabet::left(3));
            std::map<std::vector<int>, std::int64_t> stripped;
            for (const auto& [e, c] : l.terms)
                if (e[0] == 0)
                    stripped[std::vector<int>(e.begin() + 1, e.end())] = c;
            REQUIRE(stripped == p.terms);
        }
}

TEST_CASE("census depends only on the peak set")
{
    for (int n = 1; n <= 4; ++n) {
        std::map<StatSet, Census> seen_i, seen_l;
        for (const auto& pi : enumerate_group(n, Kind::A)) {
            const auto ci = census(pi, Alphabet::prime(3));
            const auto cl = census(pi, Alphabet::left(3));
            REQUIRE(seen_i.try_emplace(peak_set(pi, Flavor::interiorPeak), ci).first->second == ci);
            REQUIRE(seen_l.try_emplace(peak_set(pi, Flavor::leftPeak), cl).first->second == cl);
        }
    }
    std::map<StatSet, Census> seen_b;
    for (const auto& pi : enumerate_group(3, Kind::B)) {
        const auto c = census(pi, Alphabet::plus_minus(3));
        REQUIRE(seen_b.try_emplace(peak_set(pi, Flavor::typeBPeak), c).first->second == c);
    }
}

TEST_CASE("product alphabets")
{
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) {
            const auto st = Alphabet::product(Alphabet::prime(p), Alphabet::prime(q));
            CHECK(count_epp(Permutation::identity(1), st) == static_cast<std::size_t>(4 * p * q));
        }
    CHECK_THROWS_AS(Alphabet::product(Alphabet::prime(2), Alphabet::plus_minus(2)), std::invalid_argument);

    for (int n = 1; n <= 3; ++n) {
        const Alphabet s = Alphabet::prime(2), l = Alphabet::left(2);
        for (const auto& pi : enumerate_group(n, Kind::A)) {
            REQUIRE(as_oracle(census(pi, Alphabet::product(s, s))) ==
                    oracle::factorization_census(window(pi), false, oracle::prime(2), oracle::prime(2)));
            REQUIRE(as_oracle(factorization_census(pi, l, s)) ==
                    oracle::factorization_census(window(pi), false, oracle::left(2), oracle::prime(2)));
            REQUIRE(check_product_bijection(pi, s, s));
            REQUIRE(check_product_bijection(pi, l, l));
        }
    }
    for (int n = 1; n <= 2; ++n) {
        const Alphabet pm = Alphabet::plus_minus(2);
        for (const auto& pi : enumerate_group(n, Kind::B)) {
            REQUIRE(as_oracle(census(pi, Alphabet::product(pm, pm))) ==
                    oracle::factorization_census(window(pi), true, oracle::plus_minus(2), oracle::plus_minus(2)));
            REQUIRE(check_product_bijection(pi, pm, pm));
        }
    }
}

}
