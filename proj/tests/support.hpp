#ifndef PEAKALG_TESTS_SUPPORT_HPP
#define PEAKALG_TESTS_SUPPORT_HPP

#include <set>
#include <vector>

#include "oracles.hpp"
#include "peakalg/enriched.hpp"
#include "peakalg/permutation.hpp"
#include "peakalg/statistics.hpp"

namespace testing {

inline oracle::Window window(const peakalg::Permutation& p) { return {p.window().begin(), p.window().end()}; }

inline std::set<int> members(const peakalg::StatSet& s)
{
    const auto m = s.members();
    return {m.begin(), m.end()};
}

inline oracle::Census as_oracle(const peakalg::Census& c)
{
    oracle::Census out;
    for (const auto& [e, v] : c.terms)
        out[e] = v;
    return out;
}

inline oracle::Peak oracle_flavor(peakalg::Flavor f)
{
    using peakalg::Flavor;
    switch (f) {
    case Flavor::interiorPeak: return oracle::Peak::interior;
    case Flavor::leftPeak: return oracle::Peak::left;
    case Flavor::typeBPeak: return oracle::Peak::typeB;
    case Flavor::rightPeak: return oracle::Peak::right;
    default: return oracle::Peak::exterior;
    }
}

} // namespace testing

#endif
