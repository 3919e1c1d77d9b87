#ifndef QWEINGARTEN_WEINGARTEN_HPP
#define QWEINGARTEN_WEINGARTEN_HPP

#include "qweingarten/diagrams.hpp"
#include "qweingarten/matrix.hpp"
#include "qweingarten/poly.hpp"

#include <string>
#include <vector>

namespace qweingarten {

enum class GroupCase { orthogonal, unitary };

std::string to_string(GroupCase c);
GroupCase parse_group_case(std::string_view text);

/*
 * Which Gram matrix to build. Orthogonal: indexed by D(k). Unitary: indexed
 * by D(word), the colored pairings of the word's letter positions. n is the
 * dimension parameter of A_o(n) / A_u(n).
 */
struct GramSpec {
    GroupCase group = GroupCase::orthogonal;
    int half_size = 0;  // orthogonal only
    ColorWord word;     // unitary only
    int n = 2;

    static GramSpec orthogonal(int k, int n);
    static GramSpec unitary(ColorWord word, int n);

    // identifies the diagram basis, independent of n: "orthogonal:3", "unitary:abab"
    std::string basis_key() const;

    friend bool operator==(const GramSpec&, const GramSpec&) = default;
};

struct GramMatrix {
    std::vector<Pairing> basis;
    RationalMatrix matrix;
};

struct WeingartenTable {
    GramSpec spec;
    std::vector<Pairing> basis;
    RationalMatrix gram;
    RationalMatrix weingarten;

    friend bool operator==(const WeingartenTable&, const WeingartenTable&) = default;
};

// Canonical basis for the spec: D(k) or D(word).
std::vector<Pairing> diagram_basis(const GramSpec& spec, const EnumerationLimits& limits = {});

// weight^{l(p,q)} over the given basis. Accepts any weight >= 1 so that
// G_{k,s} with s = 1 is available for truncated-character moments.
RationalMatrix loop_power_matrix(const std::vector<Pairing>& basis, int weight,
                                 const std::string& basis_key);

// G(p,q) = n^{l(p,q)}. Rejects n < 2; an unbalanced unitary word yields a
// 0x0 matrix.
GramMatrix build_gram(const GramSpec& spec, const EnumerationLimits& limits = {});

// The Gram matrix with n left symbolic.
PolyMatrix build_symbolic_gram(int k, const EnumerationLimits& limits = {});

// W = G^{-1}; propagates SingularMatrixError.
WeingartenTable build_weingarten(const GramSpec& spec, const EnumerationLimits& limits = {});

} // namespace qweingarten

#endif
