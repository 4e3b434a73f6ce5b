#include <doctest.h>

#include <stdexcept>

#include "support.hpp"

using namespace peakalg;
using testing::members;
using testing::window;

TEST_SUITE("perm_stats") {

TEST_CASE("peak sets of the worked windows")
{
    const auto a = Permutation::parse("2,1,4,3,5");
    const auto b = Permutation::parse("-2,3,4,-5,1");
    CHECK(peak_set(a, Flavor::interiorPeak).members() == std::vector<int>{3});
    CHECK(peak_set(a, Flavor::leftPeak).members() == std::vector<int>{1, 3});
    CHECK(peak_set(b, Flavor::typeBPeak).members() == std::vector<int>{0, 3});
    CHECK(peak_set(Permutation::identity(6), Flavor::interiorPeak).empty());
    CHECK(peak_set(a.as_signed(), Flavor::typeBPeak).to_string() == "{1,3}");
}

TEST_CASE("descent sets")
{
    CHECK(descent_set(Permutation::parse("2,1,4,3,5"), Flavor::descentA).members() == std::vector<int>{1, 3});
    CHECK(descent_set(Permutation::parse("-2,3,4,-5,1"), Flavor::descentB).members() == std::vector<int>{0, 3});
    CHECK(descent_set(Permutation::identity(4), Flavor::descentA).empty());
    CHECK(descent_set(Permutation::identity(4, Kind::B), Flavor::descentB).empty());
}

TEST_CASE("every flavor agrees with the brute scan")
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto& p : enumerate_group(n, Kind::A))
            for (Flavor f : {Flavor::interiorPeak, Flavor::leftPeak, Flavor::rightPeak, Flavor::exteriorPeak})
                REQUIRE(members(peak_set(p, f)) == oracle::peaks(window(p), testing::oracle_flavor(f)));
        if (n > 4)
            continue;
        for (const auto& p : enumerate_group(n, Kind::B)) {
            REQUIRE(members(peak_set(p, Flavor::typeBPeak)) == oracle::peaks(window(p), oracle::Peak::typeB));
            REQUIRE(members(descent_set(p, Flavor::descentB)) == oracle::descents(window(p), true));
        }
    }
}

TEST_CASE("interior, left and type B peaks on unsigned windows")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : enumerate_group(n, Kind::A)) {
            const auto in = peak_set(p, Flavor::interiorPeak);
            const auto le = peak_set(p, Flavor::leftPeak);
            CHECK((in.mask() & ~le.mask()) == 0);
            CHECK(((le.mask() & ~in.mask()) & ~std::uint64_t{2}) == 0);
            CHECK(peak_set(p.as_signed(), Flavor::typeBPeak).mask() == le.mask());
        }
}

TEST_CASE("peak sets are sparse and all sparse sets occur")
{
    for (int n = 1; n <= 6; ++n)
        for (Flavor f : {Flavor::interiorPeak, Flavor::leftPeak, Flavor::typeBPeak}) {
            const Kind kind = f == Flavor::typeBPeak ? Kind::B : Kind::A;
            std::set<std::uint64_t> seen;
            for (const auto& p : enumerate_group(n, kind)) {
                const auto m = peak_set(p, f).mask();
                CHECK((m & (m >> 1)) == 0);
                seen.insert(m);
            }
            std::set<std::uint64_t> listed;
            for (const auto& s : enumerate_peak_sets(n, f))
                listed.insert(s.mask());
            CHECK(seen == listed);
        }
}

TEST_CASE("composition of windows")
{
    CHECK(compose(Permutation::parse("1,3,2"), Permutation::parse("2,3,1")) == Permutation::parse("3,2,1"));
    const auto m = Permutation::parse("-1", Kind::B);
    CHECK(compose(m, m) == Permutation::identity(1, Kind::B));
    for (const auto& p : enumerate_group(3, Kind::B)) {
        CHECK(compose(p, p.inverse()) == Permutation::identity(3, Kind::B));
        for (const auto& q : enumerate_group(3, Kind::B))
            REQUIRE(window(compose(p, q)) == oracle::compose(window(p), window(q)));
    }
}

TEST_CASE("window validation")
{
    CHECK_THROWS_AS(Permutation::parse("1,1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("1,3"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("0,1"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("-1,2", Kind::A), std::invalid_argument);
    CHECK(Permutation::parse("-2,1").kind() == Kind::B);
    CHECK(Permutation::parse("-2,3,4,-5,1").to_string() == "-2,3,4,-5,1");
}

TEST_CASE("group enumeration and ranks")
{
    CHECK(enumerate_group(3, Kind::A).size() == 6);
    CHECK(enumerate_group(2, Kind::B).size() == 8);
    for (Kind kind : {Kind::A, Kind::B}) {
        const auto all = enumerate_group(4, kind);
        for (std::size_t r = 0; r < all.size(); ++r) {
            REQUIRE(rank(all[r]) == r);
            REQUIRE(unrank(r, 4, kind) == all[r]);
        }
    }
    const auto a = enumerate_group(4, Kind::A);
    CHECK(std::is_sorted(a.begin(), a.end()));
}

TEST_CASE("compositions and subsets")
{
    CHECK(subset_of(Composition({1, 2, 2}, false)) == ((1u << 1) | (1u << 3)));
    CHECK(subset_of(Composition({0, 1}, true)) == 1u);
    CHECK(composition_from_subset(0b1110, 4, false) == Composition({1, 1, 1, 1}, false));
    CHECK_THROWS_AS(Composition({0, 1}, false), std::invalid_argument);
    CHECK_THROWS_AS(Composition({1, 0}, true), std::invalid_argument);
    for (int n = 1; n <= 6; ++n)
        for (bool typeB : {false, true}) {
            const auto all = compositions(n, typeB);
            CHECK(all.size() == (std::size_t{1} << (typeB ? n : n - 1)));
            for (const auto& c : all) {
                CHECK(c.size() == n);
                CHECK(composition_from_subset(subset_of(c), n, typeB) == c);
            }
        }
}

TEST_CASE("peak set enumeration")
{
    auto listed = [](int n, Flavor f) {
        std::vector<std::vector<int>> out;
        for (const auto& s : enumerate_peak_sets(n, f))
            out.push_back(s.members());
        return out;
    };
    CHECK(listed(4, Flavor::interiorPeak) == std::vector<std::vector<int>>{{}, {2}, {3}});
    CHECK(listed(2, Flavor::typeBPeak) == std::vector<std::vector<int>>{{}, {0}, {1}});
    CHECK(listed(1, Flavor::interiorPeak) == std::vector<std::vector<int>>{{}});
    for (int n = 1; n <= 10; ++n) {
        CHECK(enumerate_peak_sets(n, Flavor::interiorPeak).size() == oracle::fib(n - 1));
        CHECK(enumerate_peak_sets(n, Flavor::leftPeak).size() == oracle::fib(n));
        CHECK(enumerate_peak_sets(n, Flavor::typeBPeak).size() == oracle::fib(n + 1));
    }
}

TEST_CASE("stat set parsing")
{
    CHECK(parse_stat_set("{0,3}", Flavor::typeBPeak, 5).members() == std::vector<int>{0, 3});
    CHECK(parse_stat_set("{}", Flavor::interiorPeak, 5).empty());
    CHECK_THROWS_AS(parse_stat_set("{1}", Flavor::interiorPeak, 5), std::invalid_argument);
    CHECK(parse_flavor("typeB") == Flavor::typeBPeak);
}

}
