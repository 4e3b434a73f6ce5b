#include <doctest.h>

#include <random>
#include <sstream>

#include "peakalg/poset.hpp"
#include "support.hpp"

using namespace peakalg;
using testing::window;

namespace {

std::vector<oracle::Window> filter_extensions(const LabeledPoset& p)
{
    std::vector<oracle::Window> out;
    for (const auto& w : oracle::all_permutations(p.size())) {
        const auto inv = oracle::inverse(w);
        bool ok = true;
        for (int i = 1; i <= p.size() && ok; ++i)
            for (int j = 1; j <= p.size() && ok; ++j)
                if (p.less(i, j) && inv[i - 1] >= inv[j - 1])
                    ok = false;
        if (ok)
            out.push_back(w);
    }
    return out;
}

std::vector<oracle::Window> filter_extensions_b(const TypeBPoset& p)
{
    const int n = p.size();
    std::vector<oracle::Window> out;
    for (const auto& w : oracle::all_signed(n)) {
        bool ok = true;
        for (int s = -n; s <= n && ok; ++s)
            for (int t = -n; t <= n && ok; ++t)
                if (p.less(oracle::at(w, t), oracle::at(w, s)) && s < t)
                    ok = false;
        if (ok)
            out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<oracle::Window> windows(const std::vector<Permutation>& ps)
{
    std::vector<oracle::Window> out;
    for (const auto& p : ps)
        out.push_back(window(p));
    return out;
}

std::vector<oracle::Window> sorted(std::vector<oracle::Window> ws)
{
    std::sort(ws.begin(), ws.end());
    return ws;
}

} // namespace

TEST_SUITE("posets") {

TEST_CASE("extensions of 1 > 3 < 2")
{
    const LabeledPoset p(3, {{3, 1}, {3, 2}});
    const auto ext = windows(linear_extensions(p));
    CHECK(ext == std::vector<oracle::Window>{{3, 1, 2}, {3, 2, 1}});
}

TEST_CASE("antichains and chains")
{
    for (int n = 1; n <= 5; ++n) {
        CHECK(linear_extensions(LabeledPoset(n)).size() == group_order(n, Kind::A));
        std::vector<std::pair<int, int>> rel;
        for (int i = 1; i < n; ++i)
            rel.emplace_back(i, i + 1);
        const auto ext = linear_extensions(LabeledPoset(n, rel));
        REQUIRE(ext.size() == 1);
        CHECK(ext[0] == Permutation::identity(n));
    }
}

TEST_CASE("closure and cycles")
{
    const LabeledPoset p(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(p.less(1, 4));
    CHECK_FALSE(p.less(4, 1));
    CHECK_THROWS_AS(LabeledPoset(3, {{1, 2}, {2, 3}, {3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledPoset(2, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("backtracking matches the filter on random posets")
{
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 6; ++n)
        for (int t = 0; t < 6; ++t) {
            const auto p = random_poset(n, 0.3, rng);
            CHECK(windows(linear_extensions(p)) == filter_extensions(p));
        }
}

TEST_CASE("type B extensions")
{
    // 0 > 1 < -2, completed by symmetry.
    const TypeBPoset fig(2, {{1, 0}, {1, -2}});
    CHECK(fig.less(0, -1));
    CHECK(fig.less(2, -1));
    const auto ext = sorted(windows(linear_extensions_b(fig)));
    CHECK(ext == filter_extensions_b(fig));
    CHECK_FALSE(ext.empty());

    CHECK(windows(linear_extensions_b(TypeBPoset(2, {{0, 1}, {1, 2}}))) == std::vector<oracle::Window>{{1, 2}});
    CHECK(sorted(windows(linear_extensions_b(TypeBPoset(1)))) == std::vector<oracle::Window>{{-1}, {1}});

    std::mt19937_64 rng(5);
    for (int n = 1; n <= 4; ++n)
        for (int t = 0; t < 5; ++t) {
            const auto p = random_type_b_poset(n, 0.3, rng);
            for (int a = -n; a <= n; ++a)
                for (int b = -n; b <= n; ++b)
                    if (p.less(a, b))
                        REQUIRE(p.less(-b, -a));
            CHECK(sorted(windows(linear_extensions_b(p))) == filter_extensions_b(p));
        }
}

TEST_CASE("zig-zag posets")
{
    const auto z = zigzag_poset(Permutation::identity(5), (1u << 2) | (1u << 3));
    auto rel = z.relations();
    std::sort(rel.begin(), rel.end());
    CHECK(rel == std::vector<std::pair<int, int>>{{1, 2}, {3, 2}, {4, 2}, {4, 3}, {4, 5}});

    const auto pi = Permutation::parse("3,1,4,2");
    CHECK(linear_extensions(zigzag_poset(pi, 0)) == std::vector<Permutation>{pi});

    for (int n = 1; n <= 5; ++n)
        for (const auto& p : enumerate_group(n, Kind::A)) {
            std::size_t total = 0;
            for (std::uint64_t I = 0; I < (std::uint64_t{1} << (n - 1)); ++I) {
                const auto ext = linear_extensions(zigzag_poset(p, I << 1));
                total += ext.size();
                for (const auto& s : ext)
                    REQUIRE(descent_set(compose(s.inverse(), p), Flavor::descentA).mask() == (I << 1));
            }
            REQUIRE(total == group_order(n, Kind::A));
        }
}

TEST_CASE("poset input format")
{
    std::istringstream in("# zig\n1<2\n\n3>2\n");
    const auto p = LabeledPoset::parse(in);
    CHECK(p.size() == 3);
    CHECK(p.less(1, 2));
    CHECK(p.less(2, 3));
    std::istringstream bad("1<x\n");
    CHECK_THROWS_AS(LabeledPoset::parse(bad), std::invalid_argument);
    std::istringstream b("0>1\n1<-2\n");
    const auto q = TypeBPoset::parse(b);
    CHECK(q.size() == 2);
    CHECK(q.less(2, -1));
}

}
