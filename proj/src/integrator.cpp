#include "qweingarten/integrator.hpp"

#include <stdexcept>

namespace qweingarten {

MonomialSpec MonomialSpec::orthogonal(MultiIndex rows, MultiIndex cols, int n) {
    MonomialSpec m;
    m.group = GroupCase::orthogonal;
    m.word = ColorWord::all_alpha(rows.length());
    m.rows = std::move(rows);
    m.cols = std::move(cols);
    m.n = n;
    return m;
}

MonomialSpec MonomialSpec::unitary(ColorWord word, MultiIndex rows, MultiIndex cols, int n) {
    MonomialSpec m;
    m.group = GroupCase::unitary;
    m.word = std::move(word);
    m.rows = std::move(rows);
    m.cols = std::move(cols);
    m.n = n;
    return m;
}

void MonomialSpec::validate() const {
    if (n < 2) {
        throw std::invalid_argument("monomial: n = " + std::to_string(n) + " (requires n >= 2)");
    }
    if (rows.length() != cols.length() || word.length() != rows.length()) {
        throw std::invalid_argument("monomial: word, row and column lengths differ (" +
                                    std::to_string(word.length()) + ", " +
                                    std::to_string(rows.length()) + ", " +
                                    std::to_string(cols.length()) + ")");
    }
    rows.check_range(n);
    cols.check_range(n);
}

GramSpec MonomialSpec::gram_spec() const {
    if (group == GroupCase::orthogonal) {
        return GramSpec::orthogonal(static_cast<int>(length() / 2), n);
    }
    return GramSpec::unitary(word, n);
}

bool MonomialSpec::vanishes_identically() const {
    if (group == GroupCase::orthogonal) {
        return length() % 2 != 0;
    }
    return !word.balanced();
}

void MomentQuery::validate() const {
    if (n < 2) {
        throw std::invalid_argument("moment: n = " + std::to_string(n) + " (requires n >= 2)");
    }
    if (s < 1 || s > n) {
        throw std::invalid_argument("moment: s = " + std::to_string(s) +
                                    " outside [1, n = " + std::to_string(n) + "]");
    }
    if (power < 0) {
        throw std::invalid_argument("moment: negative power");
    }
}

BigRational integrate(const MonomialSpec& monomial, const WeingartenTable& table) {
    monomial.validate();
    if (monomial.vanishes_identically()) {
        return 0;
    }
    if (!(table.spec == monomial.gram_spec())) {
        throw std::invalid_argument("integrate: Weingarten table built for " +
                                    table.spec.basis_key() + " at n = " +
                                    std::to_string(table.spec.n));
    }
    // diagrams matching each index, then sum W over the matching pairs
    std::vector<std::size_t> row_matches;
    std::vector<std::size_t> col_matches;
    for (std::size_t p = 0; p < table.basis.size(); ++p) {
        if (delta_symbol(table.basis[p], monomial.rows)) {
            row_matches.push_back(p);
        }
        if (delta_symbol(table.basis[p], monomial.cols)) {
            col_matches.push_back(p);
        }
    }
    BigRational total = 0;
    for (std::size_t p : row_matches) {
        for (std::size_t q : col_matches) {
            total += table.weingarten(p, q);
        }
    }
    return total;
}

BigRational integrate(const MonomialSpec& monomial, WeingartenCache& cache) {
    monomial.validate();
    if (monomial.vanishes_identically()) {
        return 0;
    }
    return integrate(monomial, *cache.get(monomial.gram_spec()));
}

std::vector<BigRational> integrate(std::span<const MonomialSpec> monomials,
                                   WeingartenCache& cache) {
    std::vector<BigRational> out;
    out.reserve(monomials.size());
    for (const auto& monomial : monomials) {
        out.push_back(integrate(monomial, cache));
    }
    return out;
}

BigRational truncated_moment(const MomentQuery& query, WeingartenCache& cache) {
    query.validate();
    if (query.power % 2 != 0) {
        return 0;
    }
    auto table = cache.get(GramSpec::orthogonal(query.power / 2, query.n));
    RationalMatrix truncated = loop_power_matrix(table->basis, query.s, table->spec.basis_key());
    return trace_product(table->weingarten, truncated);
}

BigInt joint_moment_leading_order(const MonomialSpec& monomial, const EnumerationLimits& limits) {
    monomial.validate();
    if (monomial.vanishes_identically()) {
        return 0;
    }
    BigInt count = 0;
    for (const auto& p : diagram_basis(monomial.gram_spec(), limits)) {
        if (delta_symbol(p, monomial.rows) && delta_symbol(p, monomial.cols)) {
            ++count;
        }
    }
    return count;
}

} // namespace qweingarten
