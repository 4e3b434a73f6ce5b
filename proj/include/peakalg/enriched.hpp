#ifndef PEAKALG_ENRICHED_HPP
#define PEAKALG_ENRICHED_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "peakalg/alphabet.hpp"
#include "peakalg/permutation.hpp"
#include "peakalg/poset.hpp"

namespace peakalg {

/// An enriched map f on the positive labels: values[i - 1] = f(i). For type
/// B maps the rest is implied by f(-i) = -f(i) and f(0) = s_0.
struct EnrichedMap {
    std::vector<Letter> values;
    friend bool operator==(const EnrichedMap&, const EnrichedMap&) = default;
    friend auto operator<=>(const EnrichedMap&, const EnrichedMap&) = default;
};

/// Multiset of weights prod_i z_{|f(i)|}: exponent vector -> number of maps.
/// Exponent vectors follow Alphabet::variable_counts(), components
/// concatenated for product alphabets.
struct Census {
    int num_vars = 0;
    std::map<std::vector<int>, std::int64_t> terms;

    std::int64_t total() const;
    friend bool operator==(const Census&, const Census&) = default;
    friend auto operator<=>(const Census&, const Census&) = default;
};

/// Enriched pi-partitions into the alphabet, found by extending the chain
/// f(pi(1)) <= ... <= f(pi(n)) one position at a time with <=+ across
/// ascents and <=- across descents. Kind A permutations take alphabets
/// without negation (prime, left, products of those); kind B permutations
/// take plusMinus or a product of two plusMinus alphabets and start the
/// chain at s_0. Throws std::invalid_argument on a variant mismatch.
std::vector<EnrichedMap> enumerate_epp(const Permutation& pi, const Alphabet& alphabet);

/// Same set as enumerate_epp, without materialising it.
std::size_t count_epp(const Permutation& pi, const Alphabet& alphabet);
Census census(const Permutation& pi, const Alphabet& alphabet);

/// Enriched P-partitions of a labeled poset: for every a <_P b the map
/// satisfies f(a) <=+ f(b) when a < b as integers and f(a) <=- f(b) when
/// a > b. Enumerated label by label with pruning.
std::vector<EnrichedMap> enumerate_epp(const LabeledPoset& p, const Alphabet& alphabet);

/// Type B enriched P-partitions: the same relation rule over {-n..n} with
/// f(-i) = -f(i) and f(0) = s_0.
std::vector<EnrichedMap> enumerate_epp(const TypeBPoset& p, const Alphabet& alphabet);

/// True iff f satisfies the chain conditions for pi.
bool is_enriched(const Permutation& pi, const EnrichedMap& f, const Alphabet& alphabet);

/// Weight census of an explicit list of maps.
Census monomial_census(const std::vector<EnrichedMap>& maps, const Alphabet& alphabet);

/// Chain values (f(pi(1)), ..., f(pi(n))) of a map, and the inverse.
std::vector<Letter> chain_values(const Permutation& pi, const EnrichedMap& f, const Alphabet& alphabet);
EnrichedMap map_from_chain(const Permutation& pi, const std::vector<Letter>& chain, const Alphabet& alphabet);

/// Maps into the up-down ordered product of the two alphabets.
std::vector<EnrichedMap> enumerate_epp_product(const Permutation& pi, const Alphabet& s, const Alphabet& t);

/// sum over sigma o tau = pi of census(tau; s) x census(sigma; t), with the
/// exponent vectors concatenated.
Census factorization_census(const Permutation& pi, const Alphabet& s, const Alphabet& t);

/// Checks that ((a_1..a_n), (b_1..b_n)) -> ((a_1, b_tau(1)), ..., (a_n, b_tau(n)))
/// sends every pair of chains for (tau over s, sigma over t) with
/// sigma o tau = pi into the chains of pi over s x t, injectively and onto.
/// For kind B, b at a negative position -j is -b_j.
bool check_product_bijection(const Permutation& pi, const Alphabet& s, const Alphabet& t);

} // namespace peakalg

#endif
