#ifndef QWEINGARTEN_ORACLES_HPP
#define QWEINGARTEN_ORACLES_HPP

// Reference implementations used to check the library. Nothing here calls
// the enumeration, loop counting or path code it is meant to check; only the
// value types (Pairing, ColorWord, BigRational) are shared.

#include "qweingarten/diagrams.hpp"
#include "qweingarten/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qweingarten::oracles {

enum class MomentLabel { semicircle, circular, uniform01, catalan };

struct MomentSequence {
    MomentLabel label;
    std::vector<BigRational> values; // index = power
};

// (1 / (k + 1)) binom(2k, k)
BigInt catalan_number(unsigned k);

// even power 2k -> C_k, odd -> 0, for powers 0..max_power
MomentSequence semicircle_moments(unsigned max_power);

// k -> 1/(k+1) for k = 0..max_k: moments of the uniform law on [0, 1]
MomentSequence uniform01_moments(unsigned max_k);

// All (2k-1)!! perfect matchings of 2k points, as partner arrays (1-based).
std::vector<std::vector<int>> all_matchings(unsigned k);

// Matchings filtered by an explicit crossing test, sorted.
std::vector<std::vector<int>> brute_force_pairings(unsigned k);

// *-moment of a circular variable for the word: number of non-crossing
// matchings of the letters pairing each alpha with a beta, by filtering all
// matchings. Word length is capped at 14.
BigInt circular_star_moments(const ColorWord& word);

// Loops of the superposition of p and q by walking each loop: p-string,
// then q-string, until back at the start.
int brute_force_loops(const Pairing& p, const Pairing& q);

// Paths between canonical indices `from` and `to` of D(k) with distance at
// most max_distance, listed breadth-first by length as index sequences,
// using brute_force_pairings and brute_force_loops for the metric.
struct IndexPath {
    std::vector<std::size_t> nodes;
    int distance = 0;
    friend auto operator<=>(const IndexPath&, const IndexPath&) = default;
};
std::vector<IndexPath> breadth_first_paths(unsigned k, std::size_t from, std::size_t to,
                                           int max_distance);

// Closed-form inverse of [[a, b], [c, d]].
std::vector<BigRational> inverse_2x2(const BigRational& a, const BigRational& b,
                                     const BigRational& c, const BigRational& d);

} // namespace qweingarten::oracles

#endif
