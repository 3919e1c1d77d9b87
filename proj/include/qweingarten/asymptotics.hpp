#ifndef QWEINGARTEN_ASYMPTOTICS_HPP
#define QWEINGARTEN_ASYMPTOTICS_HPP

#include "qweingarten/diagrams.hpp"
#include "qweingarten/rational.hpp"
#include "qweingarten/series.hpp"

#include <cstddef>
#include <vector>

namespace qweingarten {

struct PathLimits {
    EnumerationLimits diagrams;
    std::size_t max_paths = 1'000'000;
};

// Pairwise loop distances on D(k), indexed in canonical order.
class DistanceMatrix {
public:
    explicit DistanceMatrix(int k, const EnumerationLimits& limits = {});

    int half_size() const { return k_; }
    std::size_t size() const { return basis_.size(); }
    const std::vector<Pairing>& basis() const { return basis_; }
    int operator()(std::size_t p, std::size_t q) const { return distances_[p * basis_.size() + q]; }

    // canonical index of a pairing; throws std::invalid_argument if absent
    std::size_t index_of(const Pairing& p) const;

private:
    int k_;
    std::vector<Pairing> basis_;
    std::vector<int> distances_;
};

// p_0 != p_1 != ... != p_l; distance is the sum of consecutive loop distances.
struct DiagramPath {
    std::vector<Pairing> nodes;
    int distance = 0;

    std::size_t length() const { return nodes.empty() ? 0 : nodes.size() - 1; }

    friend auto operator<=>(const DiagramPath&, const DiagramPath&) = default;
    friend bool operator==(const DiagramPath&, const DiagramPath&) = default;
};

// All paths from p to q in D(k) with distance at most max_distance, in
// depth-first order. Includes the length-0 path iff p == q. Throws
// ResourceLimitError past limits.max_paths.
std::vector<DiagramPath> enumerate_paths(int k, const Pairing& p, const Pairing& q,
                                         int max_distance, const PathLimits& limits = {});

/*
 * Even/odd length path counts by distance. even(p, q, d) is the number of
 * even-length paths from p to q of distance exactly d, likewise odd().
 * Aggregates sum over all ordered (p, q).
 */
class PathCountTable {
public:
    PathCountTable(int k, int max_distance, const EnumerationLimits& limits = {});

    int half_size() const { return distances_.half_size(); }
    int max_distance() const { return max_d_; }
    const DistanceMatrix& distances() const { return distances_; }

    const BigInt& even(std::size_t p, std::size_t q, int d) const { return even_[slot(p, q, d)]; }
    const BigInt& odd(std::size_t p, std::size_t q, int d) const { return odd_[slot(p, q, d)]; }

    BigInt total_even(int d) const;
    BigInt total_odd(int d) const;

private:
    std::size_t slot(std::size_t p, std::size_t q, int d) const;

    DistanceMatrix distances_;
    int max_d_;
    std::vector<BigInt> even_;
    std::vector<BigInt> odd_;
};

// n^k W_{kn}(p, q) = sum over paths P from p to q of (-1)^{l(P)} n^{-d(P)},
// truncated at n^{-order}.
InverseNSeries weingarten_series(int k, const Pairing& p, const Pairing& q, int order,
                                 const EnumerationLimits& limits = {});

// n^k times the integral of o_{1n}^{2k}: coefficient d is E_d - O_d over all
// paths in D(k).
InverseNSeries moment_series(int k, int order, const EnumerationLimits& limits = {});

// Ordered pairs (p, q) of D(k) with loop distance 1.
BigInt neighbor_count(int k, const EnumerationLimits& limits = {});

// sqrt(1 - 4 z^2) via the binomial series, through z^order.
PowerSeries sqrt_one_minus_four_z_squared(std::size_t order);

// C(z) = 2 / (1 + sqrt(1 - 4 z^2)).
PowerSeries catalan_generating_series(std::size_t order);

// N(z) = 32 z^4 / ((1 + sqrt(1 - 4 z^2))^4 sqrt(1 - 4 z^2)).
PowerSeries neighbor_generating_series(std::size_t order);

// N(z) = 2 z^4 C(z)^3 (C(z) + z C'(z)), the functional-equation route.
PowerSeries neighbor_series_from_catalan(std::size_t order);

/*
 * Formal Stieltjes transform of n^{1/2} o_{1n}: sum_k z^k times its k-th
 * moment, as a series in z whose coefficients are series in 1/n. Coefficient
 * of z^m is [z^m]C(z) - n^{-1} [z^m]N(z) (order 1 in 1/n), or the C-part
 * alone (order 0) without the second-order term.
 */
struct StieltjesSeries {
    std::size_t z_order = 0;
    bool second_order = false;
    std::vector<InverseNSeries> coefficients; // index = power of z
};

// z_order must be even.
StieltjesSeries stieltjes_series(std::size_t z_order, bool include_second_order);

} // namespace qweingarten

#endif
