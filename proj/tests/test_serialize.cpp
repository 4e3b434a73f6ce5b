#include <doctest.h>

#include <fstream>

#include "peakalg/serialize.hpp"

using namespace peakalg;

TEST_SUITE("serialize") {

TEST_CASE("rationals")
{
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("quasisymmetric round trip")
{
    const auto k = peak_function_b(StatSet(Flavor::typeBPeak, 3, {0, 2}));
    const json j = to_json(k);
    CHECK(j.at("basis") == "M");
    CHECK(j.at("typeB") == true);
    CHECK(qsym_from_json(j) == k);
}

TEST_CASE("structure table round trip and cache")
{
    const auto t = structure_constants(3, Flavor::leftPeak);
    const json j = to_json(t);
    CHECK(j.at("flavor") == "left");
    CHECK(structure_from_json(j) == t);

    const auto dir = std::filesystem::temp_directory_path() / "peakalg-serialize-test";
    std::filesystem::remove_all(dir);
    CHECK_FALSE(load_structure_table(dir, Flavor::leftPeak, Kind::A, 3).has_value());
    CHECK(cached_structure_constants(dir, 3, Flavor::leftPeak, Kind::A) == t);
    REQUIRE(std::filesystem::exists(structure_cache_path(dir, Flavor::leftPeak, Kind::A, 3)));
    CHECK(load_structure_table(dir, Flavor::leftPeak, Kind::A, 3) == t);

    {
        std::ofstream bad(structure_cache_path(dir, Flavor::leftPeak, Kind::A, 3));
        bad << "{\"formatVersion\": 0}";
    }
    CHECK_FALSE(load_structure_table(dir, Flavor::leftPeak, Kind::A, 3).has_value());
    CHECK(cached_structure_constants(dir, 3, Flavor::leftPeak, Kind::A) == t);
    std::filesystem::remove_all(dir);
}

TEST_CASE("algebra elements")
{
    const auto g = Group::get(2, Kind::A);
    AlgebraElement e(g);
    e[1] = Rational(-1, 2);
    const json j = to_json(e);
    REQUIRE(j.size() == 1);
    CHECK(j[0].at("rank") == 1);
    CHECK(j[0].at("coeff") == "-1/2");
}

}
