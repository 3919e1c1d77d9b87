#include "qweingarten/weingarten.hpp"

#include <stdexcept>

namespace qweingarten {

std::string to_string(GroupCase c) {
    return c == GroupCase::orthogonal ? "orthogonal" : "unitary";
}

GroupCase parse_group_case(std::string_view text) {
    if (text == "orthogonal" || text == "o") {
        return GroupCase::orthogonal;
    }
    if (text == "unitary" || text == "u") {
        return GroupCase::unitary;
    }
    throw std::invalid_argument("unknown case '" + std::string(text) +
                                "' (expected orthogonal or unitary)");
}

GramSpec GramSpec::orthogonal(int k, int n) {
    GramSpec spec;
    spec.group = GroupCase::orthogonal;
    spec.half_size = k;
    spec.n = n;
    return spec;
}

GramSpec GramSpec::unitary(ColorWord word, int n) {
    GramSpec spec;
    spec.group = GroupCase::unitary;
    spec.half_size = static_cast<int>(word.length() / 2);
    spec.word = std::move(word);
    spec.n = n;
    return spec;
}

std::string GramSpec::basis_key() const {
    if (group == GroupCase::orthogonal) {
        return "orthogonal:" + std::to_string(half_size);
    }
    return "unitary:" + word.to_string();
}

std::vector<Pairing> diagram_basis(const GramSpec& spec, const EnumerationLimits& limits) {
    if (spec.group == GroupCase::orthogonal) {
        return enumerate_pairings(spec.half_size, limits);
    }
    return enumerate_colored_pairings(spec.word, limits);
}

RationalMatrix loop_power_matrix(const std::vector<Pairing>& basis, int weight,
                                 const std::string& basis_key) {
    if (weight < 1) {
        throw std::invalid_argument("loop_power_matrix: weight must be positive");
    }
    const std::size_t size = basis.size();
    const int k = size ? basis.front().half_size() : 0;
    // powers weight^0 .. weight^k, shared across entries
    std::vector<BigRational> powers(static_cast<std::size_t>(k) + 1);
    for (int l = 0; l <= k; ++l) {
        powers[static_cast<std::size_t>(l)] = pow(BigInt(weight), static_cast<unsigned long>(l));
    }
    RationalMatrix out(size, size, basis_key);
    for (std::size_t p = 0; p < size; ++p) {
        out(p, p) = powers[static_cast<std::size_t>(k)];
        for (std::size_t q = p + 1; q < size; ++q) {
            auto loops = static_cast<std::size_t>(loop_count(basis[p], basis[q]));
            out(p, q) = powers[loops];
            out(q, p) = powers[loops];
        }
    }
    return out;
}

GramMatrix build_gram(const GramSpec& spec, const EnumerationLimits& limits) {
    if (spec.n < 2) {
        throw std::invalid_argument("build_gram: n = " + std::to_string(spec.n) +
                                    " (requires n >= 2)");
    }
    GramMatrix out;
    out.basis = diagram_basis(spec, limits);
    out.matrix = loop_power_matrix(out.basis, spec.n, spec.basis_key());
    return out;
}

PolyMatrix build_symbolic_gram(int k, const EnumerationLimits& limits) {
    auto basis = enumerate_pairings(k, limits);
    PolyMatrix out(basis.size(), basis.size(), GramSpec::orthogonal(k, 2).basis_key());
    for (std::size_t p = 0; p < basis.size(); ++p) {
        for (std::size_t q = 0; q < basis.size(); ++q) {
            out(p, q) = PolyInN::monomial(static_cast<std::size_t>(loop_count(basis[p], basis[q])));
        }
    }
    return out;
}

WeingartenTable build_weingarten(const GramSpec& spec, const EnumerationLimits& limits) {
    auto gram = build_gram(spec, limits);
    WeingartenTable table;
    table.spec = spec;
    table.basis = std::move(gram.basis);
    table.weingarten = invert(gram.matrix);
    table.gram = std::move(gram.matrix);
    return table;
}

} // namespace qweingarten
