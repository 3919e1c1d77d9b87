#ifndef QWEINGARTEN_INTEGRATOR_HPP
#define QWEINGARTEN_INTEGRATOR_HPP

#include "qweingarten/cache.hpp"
#include "qweingarten/diagrams.hpp"
#include "qweingarten/rational.hpp"
#include "qweingarten/weingarten.hpp"

#include <span>
#include <vector>

namespace qweingarten {

/*
 * The monomial  x^{a_1}_{i_1 j_1} ... x^{a_l}_{i_l j_l}  over A_o(n) (x = u)
 * or A_u(n) (x = v). In the unitary case alpha stands for v and beta for v*.
 * In the orthogonal case the word only fixes the length; every letter is the
 * self-adjoint u.
 */
struct MonomialSpec {
    GroupCase group = GroupCase::orthogonal;
    ColorWord word;
    MultiIndex rows;
    MultiIndex cols;
    int n = 2;

    static MonomialSpec orthogonal(MultiIndex rows, MultiIndex cols, int n);
    static MonomialSpec unitary(ColorWord word, MultiIndex rows, MultiIndex cols, int n);

    std::size_t length() const { return rows.length(); }

    // lengths agree, n >= 2, entries in [1, n]; throws otherwise
    void validate() const;

    // Gram spec of the diagram set the integral sums over. Only meaningful
    // when the integral is not identically zero.
    GramSpec gram_spec() const;

    // odd length (orthogonal) or unbalanced word (unitary)
    bool vanishes_identically() const;
};

// Moments of o_{sn} = u_11 + ... + u_ss.
struct MomentQuery {
    int s = 1;
    int n = 2;
    int power = 2;

    void validate() const;
};

// Haar integral of the monomial, exact.
BigRational integrate(const MonomialSpec& monomial, WeingartenCache& cache);

// As above with the Weingarten table supplied; the table must match
// monomial.gram_spec().
BigRational integrate(const MonomialSpec& monomial, const WeingartenTable& table);

// Batch evaluation; monomials sharing a Gram spec share one table.
std::vector<BigRational> integrate(std::span<const MonomialSpec> monomials, WeingartenCache& cache);

// Tr(W_{kn} G_{ks}) for power 2k; 0 for odd powers.
BigRational truncated_moment(const MomentQuery& query, WeingartenCache& cache);

// Number of diagrams p in the relevant diagram set with delta(p, rows) =
// delta(p, cols) = 1: the free Wick count that n^k times the integral tends
// to. Zero when the integral vanishes identically.
BigInt joint_moment_leading_order(const MonomialSpec& monomial,
                                  const EnumerationLimits& limits = {});

} // namespace qweingarten

#endif
