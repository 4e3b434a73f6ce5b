#ifndef PEAKALG_TOOLS_VERIFY_HPP
#define PEAKALG_TOOLS_VERIFY_HPP

#include <cstdint>
#include <filesystem>

#include "peakalg/serialize.hpp"

namespace peakalg::cli {

struct VerifyConfig {
    int n_max = 4;
    int k = 3;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    std::filesystem::path cache_dir;
    int posets_per_n = 5;
};

/// Runs every check at the configured scale. Each check clips n_max to its
/// own ceiling (listed in the output as "nMax").
json run_verify(const VerifyConfig& config);

/// The product of two battery basis elements is outside the span of the
/// class sums iff it is not constant on some class. Used to re-check
/// witnesses without the elimination code.
bool escapes_partition(const AlgebraElement& product, const std::vector<AlgebraElement>& classes);

} // namespace peakalg::cli

#endif
