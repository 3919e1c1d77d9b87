#include "doctest.h"
#include "support.hpp"

#include "qweingarten/cache.hpp"
#include "qweingarten/weingarten.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

using namespace qweingarten;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("qweingarten-unit-" +
                std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ignored;
        fs::remove_all(path, ignored);
    }
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

TEST_SUITE("weingarten") {

TEST_CASE("k = 1 and k = 2 Gram and Weingarten matrices") {
    for (int n = 2; n <= 6; ++n) {
        auto one = build_weingarten(GramSpec::orthogonal(1, n));
        CHECK(one.gram(0, 0) == n);
        CHECK(one.weingarten(0, 0) == frac(1, n));

        auto two = build_weingarten(GramSpec::orthogonal(2, n));
        CHECK(two.gram(0, 0) == n * n);
        CHECK(two.gram(0, 1) == n);
        CHECK(two.gram(1, 0) == n);
        CHECK(two.gram(1, 1) == n * n);
        BigRational scale(1, n * (n * n - 1));
        CHECK(two.weingarten(0, 0) == scale * n);
        CHECK(two.weingarten(0, 1) == -scale);
    }
}

TEST_CASE("k = 0 is the 1x1 identity") {
    auto table = build_weingarten(GramSpec::orthogonal(0, 3));
    REQUIRE(table.basis.size() == 1);
    CHECK(table.weingarten(0, 0) == 1);
}

TEST_CASE("unitary (ab)^2 Gram equals orthogonal k = 2") {
    for (int n = 2; n <= 5; ++n) {
        auto u = build_gram(GramSpec::unitary(ColorWord::parse("abab"), n));
        auto o = build_gram(GramSpec::orthogonal(2, n));
        CHECK(u.matrix.data() == o.matrix.data());
        CHECK(u.matrix.basis() == "unitary:abab");
        CHECK(o.matrix.basis() == "orthogonal:2");
    }
}

TEST_CASE("invalid specs") {
    CHECK_THROWS_AS(build_gram(GramSpec::orthogonal(2, 1)), std::invalid_argument);
    CHECK_THROWS(build_gram(GramSpec::orthogonal(11, 3)));
    auto empty = build_weingarten(GramSpec::unitary(ColorWord::parse("aab"), 3));
    CHECK(empty.basis.empty());
    CHECK(empty.weingarten.rows() == 0);
    CHECK(parse_group_case("u") == GroupCase::unitary);
    CHECK(parse_group_case("orthogonal") == GroupCase::orthogonal);
    CHECK_THROWS(parse_group_case("symplectic"));
}

TEST_CASE("Weingarten matrices are symmetric with positive diagonal") {
    for (int k = 1; k <= 4; ++k) {
        for (int n = 2; n <= 5; ++n) {
            auto table = build_weingarten(GramSpec::orthogonal(k, n));
            CHECK(table.weingarten.is_symmetric());
            for (std::size_t p = 0; p < table.basis.size(); ++p) {
                CHECK(table.weingarten(p, p) > 0);
            }
        }
    }
    // the diagonal is not constant from k = 3 on
    auto three = build_weingarten(GramSpec::orthogonal(3, 2));
    CHECK(three.weingarten(0, 0) != three.weingarten(1, 1));
}

TEST_CASE("loop power matrix") {
    auto basis = diagram_basis(GramSpec::orthogonal(2, 2));
    auto m = loop_power_matrix(basis, 3, "orthogonal:2");
    CHECK(m(0, 0) == 9);
    CHECK(m(0, 1) == 3);
    CHECK_THROWS(loop_power_matrix(basis, 0, "orthogonal:2"));
}

}

TEST_SUITE("cache") {

TEST_CASE("serialize and parse round trip bit-exactly") {
    for (auto spec : {GramSpec::orthogonal(3, 4), GramSpec::orthogonal(0, 2),
                      GramSpec::unitary(ColorWord::parse("aabbab"), 5),
                      GramSpec::unitary(ColorWord(), 2)}) {
        auto table = build_weingarten(spec);
        auto text = serialize_table(table);
        auto parsed = parse_table(text);
        CHECK(parsed == table);
        CHECK(serialize_table(parsed) == text);
    }
}

TEST_CASE("tampered records are rejected") {
    auto text = serialize_table(build_weingarten(GramSpec::orthogonal(2, 3)));
    auto at = text.find("\"-1/24\"");
    REQUIRE(at != std::string::npos);
    std::string tampered = text;
    tampered.replace(at, 7, "\"-1/25\"");
    CHECK_THROWS_AS(parse_table(tampered), CacheFormatError);
    CHECK_THROWS_AS(parse_table("{"), CacheFormatError);
    CHECK_THROWS_AS(parse_table("[]"), CacheFormatError);
}

TEST_CASE("file names") {
    CHECK(cache_file_name(GramSpec::orthogonal(3, 7)) == "orthogonal_3_7.wgt.json");
    CHECK(cache_file_name(GramSpec::unitary(ColorWord::parse("abab"), 4)) ==
          "unitary_abab_4.wgt.json");
    CHECK(cache_file_name(GramSpec::unitary(ColorWord(), 4)) == "unitary_empty_4.wgt.json");
}

TEST_CASE("disk cache stores, reloads and recovers from a poisoned entry") {
    TempDir dir;
    auto spec = GramSpec::orthogonal(3, 4);
    {
        WeingartenCache cache(dir.path);
        CHECK(cache.load(spec).status == CacheStatus::miss);
        auto table = cache.get(spec);
        CHECK(fs::exists(cache.path_for(spec)));
        auto loaded = cache.load(spec);
        REQUIRE(loaded.status == CacheStatus::hit);
        CHECK(*loaded.table == *table);
    }
    auto path = dir.path / cache_file_name(spec);
    auto original = slurp(path);

    // overwrite the first Weingarten entry; the checksum no longer matches
    auto poisoned = original;
    auto at = poisoned.find("\"weingarten\"");
    REQUIRE(at != std::string::npos);
    auto quote = poisoned.find('"', poisoned.find('[', at) + 1);
    auto end = poisoned.find('"', quote + 1);
    poisoned.replace(quote + 1, end - quote - 1, "12345/7");
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << poisoned;
    }
    WeingartenCache cache(dir.path);
    CHECK(cache.load(spec).status == CacheStatus::corrupt);
    auto recomputed = cache.get(spec);
    CHECK(*recomputed == build_weingarten(spec));
    CHECK(cache.diagnostics().size() == 1);
    CHECK(slurp(path) == original);
}

TEST_CASE("memory cache hands out one table to concurrent callers") {
    WeingartenCache cache;
    auto spec = GramSpec::orthogonal(4, 3);
    std::vector<std::shared_ptr<const WeingartenTable>> got(8);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < got.size(); ++t) {
        threads.emplace_back([&, t] { got[t] = cache.get(spec); });
    }
    for (auto& t : threads) {
        t.join();
    }
    for (const auto& table : got) {
        CHECK(table.get() == got[0].get());
    }
    CHECK_THROWS(cache.store(*got[0]));
}

}
