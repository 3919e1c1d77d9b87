#include "doctest.h"
#include "support.hpp"

#include "qweingarten/asymptotics.hpp"
#include "qweingarten/matrix.hpp"
#include "qweingarten/oracles.hpp"
#include "qweingarten/poly.hpp"
#include "qweingarten/rational.hpp"
#include "qweingarten/series.hpp"
#include "qweingarten/weingarten.hpp"

using namespace qweingarten;

namespace {

RationalMatrix from_rows(std::vector<std::vector<BigRational>> rows, std::string basis = {}) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), std::move(basis));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

PowerSeries poly(std::vector<BigRational> c, std::size_t order) {
    return PowerSeries(std::move(c), order);
}

} // namespace

TEST_SUITE("exactalg") {

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-0/5")) == "0");
    CHECK(to_string(parse_rational("-12")) == "-12");
    CHECK_THROWS(parse_rational("4/-6"));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(parse_rational(""));
    CHECK(to_decimal(frac(1, 3), 4) == "0.3333");
    CHECK(to_decimal(frac(2, 3), 4) == "0.6667");
    CHECK(to_decimal(frac(-2, 3), 4) == "-0.6667");
    CHECK(to_decimal(BigRational(5), 2) == "5.00");
    CHECK(pow(BigInt(3), 4) == 81);
    CHECK(pow(frac(2, 3), 3) == frac(8, 27));
}

TEST_CASE("inverse of the identity and of a 2x2 matrix") {
    CHECK(invert(RationalMatrix::identity(4)) == RationalMatrix::identity(4));
    auto m = from_rows({{4, 2}, {2, 4}});
    auto inv = invert(m);
    auto expected = oracles::inverse_2x2(4, 2, 2, 4);
    CHECK(inv(0, 0) == expected[0]);
    CHECK(inv(0, 1) == expected[1]);
    CHECK(inv(1, 0) == expected[2]);
    CHECK(inv(1, 1) == expected[3]);
    CHECK(inv(0, 0) == frac(1, 3));
    CHECK(inv(0, 1) == frac(-1, 6));

    // needs a row swap
    auto swap = from_rows({{0, 1}, {1, 0}});
    CHECK(invert(swap) == swap);
}

TEST_CASE("Gram times Weingarten is the identity") {
    for (int k = 0; k <= 5; ++k) {
        for (int n = 2; n <= 6; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            auto table = build_weingarten(GramSpec::orthogonal(k, n));
            auto product = table.gram * table.weingarten;
            CHECK(product == RationalMatrix::identity(table.basis.size(), product.basis()));
        }
    }
}

TEST_CASE("singular matrices report the failing pivot step") {
    auto m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}});
    try {
        invert(m);
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(e.pivot_step() == 1);
    }
    CHECK_THROWS_AS(invert(RationalMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("products and traces check shapes and bases") {
    auto a = from_rows({{1, 2}, {3, 4}}, "x");
    auto b = from_rows({{0, 1}, {1, 0}}, "x");
    auto other = from_rows({{0, 1}, {1, 0}}, "y");
    CHECK(trace_product(a, b) == 5);
    CHECK(trace_product(a, b) == trace_product(b, a));
    CHECK_THROWS(trace_product(a, other));
    CHECK_THROWS(a * other);
    CHECK_THROWS(RationalMatrix(2, 3, "x") * RationalMatrix(2, 3, "x"));
    CHECK(entry_sum(a) == 10);
    CHECK_FALSE(a.is_symmetric());
    CHECK(b.is_symmetric());
}

TEST_CASE("trace of W against the s = 1 loop matrix") {
    auto table = build_weingarten(GramSpec::orthogonal(1, 2));
    auto g1 = loop_power_matrix(table.basis, 1, table.gram.basis());
    CHECK(trace_product(table.weingarten, g1) == frac(1, 2));

    for (int k = 1; k <= 4; ++k) {
        auto w = build_weingarten(GramSpec::orthogonal(k, 5));
        auto g3 = loop_power_matrix(w.basis, 3, w.gram.basis());
        CHECK(trace_product(w.weingarten, g3) == trace_product(g3, w.weingarten));
    }
}

TEST_CASE("symbolic Gram matrix evaluates to the numeric one") {
    for (int k = 0; k <= 4; ++k) {
        auto symbolic = build_symbolic_gram(k);
        for (int n = 2; n <= 5; ++n) {
            auto numeric = build_gram(GramSpec::orthogonal(k, n)).matrix;
            auto evaluated = symbolic.evaluate(n);
            REQUIRE(evaluated.rows() == numeric.rows());
            CHECK(evaluated.data() == numeric.data());
        }
    }
    auto g2 = build_symbolic_gram(2);
    CHECK(g2(0, 0) == PolyInN::monomial(2));
    CHECK(g2(0, 1) == PolyInN::monomial(1));
}

TEST_CASE("polynomials in n") {
    PolyInN a({1, 1});  // 1 + n
    PolyInN b({-1, 1}); // n - 1
    CHECK((a * b) == PolyInN({-1, 0, 1}));
    CHECK((a + b) == PolyInN::monomial(1, 2));
    CHECK(PolyInN({0, 0}).degree() == -1);
    CHECK((a * b).evaluate(7) == 48);
}

TEST_CASE("truncated series arithmetic") {
    auto one_plus = poly({1, 1}, 4);
    auto one_minus = poly({1, -1}, 4);
    CHECK(one_plus * one_minus == poly({1, 0, -1}, 4));
    auto p = poly({1, 1, 1}, 4);
    CHECK(p * p == poly({1, 2, 3, 2, 1}, 4));
    CHECK(p * p == p.pow(2));
    CHECK((p * p).truncated(2) == poly({1, 2, 3}, 2));

    auto x = poly({0, 3, 5}, 4);
    auto y = poly({2, -1, 0, 7}, 4);
    CHECK(x * y == y * x);
    CHECK((x * y) * p == x * (y * p));
    CHECK(x + y == y + x);

    CHECK(one_minus.reciprocal() == poly({1, 1, 1, 1, 1}, 4));
    CHECK(one_minus.reciprocal() * one_minus == PowerSeries::constant(1, 4));
    CHECK_THROWS(x.reciprocal());

    CHECK(p.derivative() == poly({1, 2}, 3));
    CHECK(p.shifted(2) == poly({0, 0, 1, 1, 1}, 6));
    // mixed orders truncate to the smaller one
    CHECK((poly({1, 1}, 1) * poly({1, 1, 1}, 3)).order() == 1);
    CHECK_THROWS(PowerSeries({1, 2, 3}, 1));
}

TEST_CASE("truncated 1/n expansion at n = 10^6") {
    // absolute error of n^k W against the truncated series, entries O(1)
    const BigInt n = 1'000'000;
    for (int k = 1; k <= 3; ++k) {
        auto table = build_weingarten(GramSpec::orthogonal(k, 1'000'000));
        BigRational nk = pow(BigRational(n), static_cast<unsigned long>(k));
        for (int order = 1; order <= 3; ++order) {
            BigRational bound = BigRational(10) / pow(BigRational(n), static_cast<unsigned long>(order + 1));
            for (std::size_t p = 0; p < table.basis.size(); ++p) {
                for (std::size_t q = 0; q < table.basis.size(); ++q) {
                    auto series = weingarten_series(k, table.basis[p], table.basis[q], order);
                    BigRational error = nk * table.weingarten(p, q) - evaluate_at_n(series, n);
                    CHECK(abs(error) < bound);
                }
            }
        }
    }
}

}
