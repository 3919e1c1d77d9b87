#include "doctest.h"

#include "qweingarten/diagrams.hpp"
#include "qweingarten/oracles.hpp"

#include <algorithm>
#include <random>

using namespace qweingarten;

namespace {

Pairing pairing_of(std::vector<std::pair<int, int>> strings) {
    return Pairing::from_strings(strings);
}

} // namespace

TEST_SUITE("diagrams") {

TEST_CASE("noncrossing pairing counts are Catalan numbers for k = 0..8") {
    const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int k = 0; k <= 8; ++k) {
        CAPTURE(k);
        auto pairings = enumerate_pairings(k);
        CHECK(static_cast<long>(pairings.size()) == expected[k]);
        CHECK(BigInt(static_cast<long>(pairings.size())) == oracles::catalan_number(static_cast<unsigned>(k)));
    }
}

TEST_CASE("enumeration agrees with filtered brute force and is strictly sorted") {
    for (unsigned k = 0; k <= 5; ++k) {
        auto fast = enumerate_pairings(static_cast<int>(k));
        auto slow = oracles::brute_force_pairings(k);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t t = 0; t < fast.size(); ++t) {
            CHECK(std::ranges::equal(fast[t].partners(), slow[t]));
        }
        CHECK(std::adjacent_find(fast.begin(), fast.end(),
                                 [](const Pairing& a, const Pairing& b) { return !(a < b); }) ==
              fast.end());
    }
}

TEST_CASE("k = 2 basis in canonical order") {
    auto pairings = enumerate_pairings(2);
    REQUIRE(pairings.size() == 2);
    CHECK(pairings[0].to_string() == "{(1,2),(3,4)}");
    CHECK(pairings[1].to_string() == "{(1,4),(2,3)}");
}

TEST_CASE("colored pairings") {
    CHECK(enumerate_colored_pairings(ColorWord::parse("ab")).size() == 1);
    CHECK(enumerate_colored_pairings(ColorWord::parse("aa")).empty());
    CHECK(enumerate_colored_pairings(ColorWord::parse("aab")).empty());
    CHECK(enumerate_colored_pairings(ColorWord::parse("")).size() == 1);
    CHECK(enumerate_colored_pairings(ColorWord::parse("aabb")).size() == 1);

    for (int k = 0; k <= 6; ++k) {
        CAPTURE(k);
        CHECK(BigInt(static_cast<long>(enumerate_colored_pairings(ColorWord::alternating(k)).size())) ==
              oracles::catalan_number(static_cast<unsigned>(k)));
    }
}

TEST_CASE("colored pairings match the brute-force count and lie in D(l/2)") {
    // every word of length <= 8
    for (std::size_t length = 0; length <= 8; length += 2) {
        auto all = enumerate_pairings(static_cast<int>(length / 2));
        for (unsigned mask = 0; mask < (1u << length); ++mask) {
            std::vector<Color> letters;
            for (std::size_t t = 0; t < length; ++t) {
                letters.push_back((mask >> t) & 1u ? Color::beta : Color::alpha);
            }
            ColorWord word(letters);
            CAPTURE(word.to_string());
            auto colored = enumerate_colored_pairings(word);
            CHECK(BigInt(static_cast<long>(colored.size())) == oracles::circular_star_moments(word));
            for (const auto& p : colored) {
                CHECK(std::binary_search(all.begin(), all.end(), p));
                for (auto [a, b] : p.strings()) {
                    CHECK(word[static_cast<std::size_t>(a - 1)] != word[static_cast<std::size_t>(b - 1)]);
                }
            }
        }
    }
}

TEST_CASE("loop counts") {
    for (int k = 0; k <= 5; ++k) {
        for (const auto& p : enumerate_pairings(k)) {
            CHECK(loop_count(p, p) == k);
            CHECK(loop_distance(p, p) == 0);
        }
    }
    CHECK(loop_count(pairing_of({{1, 2}, {3, 4}}), pairing_of({{1, 4}, {2, 3}})) == 1);
    CHECK(loop_count(pairing_of({{1, 2}, {3, 4}, {5, 6}}), pairing_of({{1, 6}, {2, 3}, {4, 5}})) == 1);
    CHECK(loop_count(pairing_of({{1, 2}, {3, 4}, {5, 6}}), pairing_of({{1, 2}, {3, 6}, {4, 5}})) == 2);
}

TEST_CASE("loop counts agree with loop tracing") {
    for (int k = 1; k <= 4; ++k) {
        auto basis = enumerate_pairings(k);
        for (const auto& p : basis) {
            for (const auto& q : basis) {
                CHECK(loop_count(p, q) == oracles::brute_force_loops(p, q));
            }
        }
    }
    std::mt19937_64 rng(20261016);
    auto basis = enumerate_pairings(6);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int sample = 0; sample < 300; ++sample) {
        const auto& p = basis[pick(rng)];
        const auto& q = basis[pick(rng)];
        CHECK(loop_count(p, q) == oracles::brute_force_loops(p, q));
    }
}

TEST_CASE("loop distance is a metric on D(k), k <= 4") {
    for (int k = 0; k <= 4; ++k) {
        auto basis = enumerate_pairings(k);
        for (const auto& p : basis) {
            for (const auto& q : basis) {
                int pq = loop_distance(p, q);
                CHECK(pq == loop_distance(q, p));
                CHECK((pq == 0) == (p == q));
                for (const auto& r : basis) {
                    CHECK(loop_distance(p, r) <= pq + loop_distance(q, r));
                }
            }
        }
    }
}

TEST_CASE("distance one means exactly two strings differ") {
    for (int k = 1; k <= 5; ++k) {
        auto basis = enumerate_pairings(k);
        for (const auto& p : basis) {
            for (const auto& q : basis) {
                CHECK(differ_in_two_strings(p, q) == (loop_distance(p, q) == 1));
            }
        }
    }
}

TEST_CASE("delta symbol") {
    auto p = pairing_of({{1, 2}, {3, 4}});
    auto q = pairing_of({{1, 4}, {2, 3}});
    CHECK(delta_symbol(p, MultiIndex::parse("1,1,2,2")));
    CHECK_FALSE(delta_symbol(q, MultiIndex::parse("1,1,2,2")));
    CHECK(delta_symbol(q, MultiIndex::parse("1,2,2,1")));
    CHECK_FALSE(delta_symbol(p, MultiIndex::parse("1,2,1,2")));
    CHECK_FALSE(delta_symbol(q, MultiIndex::parse("1,2,1,2")));
    CHECK(delta_symbol(p, MultiIndex::constant(4, 3)));
    CHECK_THROWS_AS(delta_symbol(p, MultiIndex::parse("1,1")), std::invalid_argument);
}

TEST_CASE("invalid pairings are rejected") {
    CHECK_THROWS_AS(Pairing({2, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Pairing({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Pairing({2, 3, 1, 4}), std::invalid_argument);
    CHECK_THROWS_AS(Pairing({3, 4, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Pairing({5, 1}), std::invalid_argument);
    std::vector<std::pair<int, int>> reused{{1, 2}, {2, 3}};
    CHECK_THROWS_AS(Pairing::from_strings(reused), std::invalid_argument);
    CHECK_NOTHROW(Pairing({4, 3, 2, 1}));
}

TEST_CASE("enumeration guard and bad half-size") {
    CHECK_THROWS_AS(enumerate_pairings(-1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_pairings(11), ResourceLimitError);
    CHECK_THROWS_AS(enumerate_pairings(4, EnumerationLimits{3}), ResourceLimitError);
    CHECK_THROWS_AS(enumerate_colored_pairings(ColorWord::alternating(4), EnumerationLimits{3}),
                    ResourceLimitError);
}

TEST_CASE("word and index parsing") {
    CHECK(ColorWord::parse("abba").to_string() == "abba");
    CHECK(ColorWord::parse("abba").balanced());
    CHECK_FALSE(ColorWord::parse("aab").balanced());
    CHECK_THROWS_AS(ColorWord::parse("abc"), std::invalid_argument);
    CHECK(MultiIndex::parse("1,2,3").to_string() == "1,2,3");
    CHECK(MultiIndex::parse("").length() == 0);
    CHECK_THROWS_AS(MultiIndex::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(MultiIndex::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(MultiIndex::parse("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(MultiIndex::parse("1,2").check_range(1), std::out_of_range);
    CHECK_NOTHROW(MultiIndex::parse("1,2").check_range(2));
}

}
