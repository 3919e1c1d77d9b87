#include "qweingarten/verify.hpp"

#include "qweingarten/asymptotics.hpp"
#include "qweingarten/integrator.hpp"
#include "qweingarten/oracles.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qweingarten::verify {

namespace {

class Recorder {
public:
    explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

    void check(std::string name, bool passed, std::string expected, std::string actual) {
        report_.checks.push_back({std::move(name), passed, std::move(expected), std::move(actual)});
    }

    template <class T>
    void equal(std::string name, const T& expected, const T& actual) {
        check(std::move(name), expected == actual, str(expected), str(actual));
    }

    SuiteReport finish(double seconds) {
        report_.seconds = seconds;
        return std::move(report_);
    }

private:
    static std::string str(const BigRational& v) { return to_string(v); }
    static std::string str(const BigInt& v) { return to_string(v); }
    static std::string str(const std::string& v) { return v; }
    static std::string str(bool v) { return v ? "true" : "false"; }
    template <class T>
    static std::string str(const T& v) {
        std::ostringstream out;
        out << v;
        return out.str();
    }

    SuiteReport report_;
};

std::string k_n(int k, int n) {
    return "k=" + std::to_string(k) + ",n=" + std::to_string(n);
}

BigRational orthogonal_power_integral(int k, int n, WeingartenCache& cache) {
    auto index = MultiIndex::constant(static_cast<std::size_t>(2 * k), 1);
    return integrate(MonomialSpec::orthogonal(index, index, n), cache);
}

// |x| < bound, exact
bool below(const BigRational& x, const BigRational& bound) { return abs(x) < bound; }
bool at_most(const BigRational& x, const BigRational& bound) { return abs(x) <= bound; }

std::vector<ColorWord> all_words(std::size_t length) {
    std::vector<ColorWord> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << length); ++mask) {
        std::vector<Color> letters;
        for (std::size_t t = 0; t < length; ++t) {
            letters.push_back((mask >> (length - 1 - t)) & 1 ? Color::beta : Color::alpha);
        }
        out.emplace_back(std::move(letters));
    }
    return out;
}

// all tuples in {1..s}^length, lexicographic
std::vector<MultiIndex> all_indices(std::size_t length, int s) {
    std::vector<MultiIndex> out;
    std::vector<int> entries(length, 1);
    while (true) {
        out.emplace_back(entries);
        std::size_t t = length;
        while (t > 0 && entries[t - 1] == s) {
            entries[t - 1] = 1;
            --t;
        }
        if (t == 0) {
            break;
        }
        ++entries[t - 1];
    }
    return out;
}

void catalan_suite(Recorder& r, WeingartenCache& cache) {
    const long expected_counts[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int k = 0; k <= 8; ++k) {
        auto count = static_cast<long>(enumerate_pairings(k).size());
        r.equal("|D(" + std::to_string(k) + ")|", expected_counts[k], count);
        r.equal("|D(" + std::to_string(k) + ")| vs binomial formula",
                oracles::catalan_number(static_cast<unsigned>(k)), BigInt(count));
    }
    for (int k = 0; k <= 6; ++k) {
        std::vector<std::vector<int>> fast;
        for (const auto& p : enumerate_pairings(k)) {
            fast.emplace_back(p.partners().begin(), p.partners().end());
        }
        bool same = fast == oracles::brute_force_pairings(static_cast<unsigned>(k));
        r.check("D(" + std::to_string(k) + ") equals filtered involutions", same,
                "identical lists", same ? "identical lists" : "lists differ");
    }
    for (int k = 1; k <= 6; ++k) {
        BigInt catalan = oracles::catalan_number(static_cast<unsigned>(k));
        for (int n = 2; n <= 6; ++n) {
            auto table = cache.get(GramSpec::orthogonal(k, n));
            r.equal("Tr(W G) " + k_n(k, n), BigRational(catalan),
                    trace_product(table->weingarten, table->gram));
            r.equal("moment of o_nn " + k_n(k, n), BigRational(catalan),
                    truncated_moment({n, n, 2 * k}, cache));
        }
    }
}

void n2_suite(Recorder& r, WeingartenCache& cache) {
    auto uniform = oracles::uniform01_moments(6);
    BigRational previous = 1;
    for (int k = 1; k <= 6; ++k) {
        BigRational by_sum = orthogonal_power_integral(k, 2, cache);
        BigRational by_trace = truncated_moment({1, 2, 2 * k}, cache);
        r.equal("integral u11^" + std::to_string(2 * k) + " at n=2 (Haar sum)",
                uniform.values[static_cast<std::size_t>(k)], by_sum);
        r.equal("integral u11^" + std::to_string(2 * k) + " at n=2 (trace formula)",
                uniform.values[static_cast<std::size_t>(k)], by_trace);
        r.equal("(k+1) m_k = k m_{k-1} at k=" + std::to_string(k), BigRational(k * previous),
                BigRational((k + 1) * by_sum));
        previous = by_sum;
    }
}

void vanishing_suite(Recorder& r, WeingartenCache& cache) {
    for (int n : {2, 3}) {
        for (std::size_t length : {1u, 3u, 5u, 7u}) {
            bool all_zero = true;
            std::size_t count = 0;
            std::string first_bad;
            auto tuples = all_indices(length, 2);
            for (std::size_t t = 0; t < tuples.size(); ++t) {
                const auto& rows = tuples[t];
                const auto& cols = tuples[tuples.size() - 1 - t];
                BigRational value = integrate(MonomialSpec::orthogonal(rows, cols, n), cache);
                ++count;
                if (sgn(value) != 0 && all_zero) {
                    all_zero = false;
                    first_bad = rows.to_string() + " -> " + to_string(value);
                }
            }
            r.check("orthogonal odd length " + std::to_string(length) + ", n=" + std::to_string(n) +
                        " (" + std::to_string(count) + " monomials)",
                    all_zero, "0", all_zero ? "0" : first_bad);
        }
    }
    for (std::size_t length = 1; length <= 6; ++length) {
        bool all_zero = true;
        std::size_t count = 0;
        std::string first_bad;
        for (const auto& word : all_words(length)) {
            if (word.balanced()) {
                continue;
            }
            for (const auto& rows : all_indices(length, 2)) {
                BigRational value = integrate(MonomialSpec::unitary(word, rows, rows, 3), cache);
                ++count;
                if (sgn(value) != 0 && all_zero) {
                    all_zero = false;
                    first_bad = word.to_string() + " " + rows.to_string() + " -> " + to_string(value);
                }
            }
        }
        r.check("unitary unbalanced words of length " + std::to_string(length) + " (" +
                    std::to_string(count) + " monomials)",
                all_zero, "0", all_zero ? "0" : first_bad);
    }
}

void consistency_suite(Recorder& r, WeingartenCache& cache) {
    for (int n = 2; n <= 4; ++n) {
        for (int s = 1; s <= n; ++s) {
            for (int k = 1; k <= 3; ++k) {
                // expand (u_11 + ... + u_ss)^{2k} into diagonal monomials
                BigRational expanded = 0;
                for (const auto& a : all_indices(static_cast<std::size_t>(2 * k), s)) {
                    expanded += integrate(MonomialSpec::orthogonal(a, a, n), cache);
                }
                r.equal("expanded vs trace s=" + std::to_string(s) + "," + k_n(k, n), expanded,
                        truncated_moment({s, n, 2 * k}, cache));
            }
        }
    }
}

void metric_suite(Recorder& r) {
    for (int k = 1; k <= 4; ++k) {
        auto basis = enumerate_pairings(k);
        bool symmetric = true;
        bool identity = true;
        bool triangle = true;
        bool loops_agree = true;
        for (const auto& p : basis) {
            for (const auto& q : basis) {
                int d = loop_distance(p, q);
                symmetric = symmetric && d == loop_distance(q, p);
                identity = identity && ((d == 0) == (p == q));
                loops_agree = loops_agree && loop_count(p, q) == oracles::brute_force_loops(p, q);
                for (const auto& t : basis) {
                    triangle = triangle && d <= loop_distance(p, t) + loop_distance(t, q);
                }
            }
        }
        std::string ks = " on D(" + std::to_string(k) + ")";
        r.equal("symmetry" + ks, true, symmetric);
        r.equal("identity of indiscernibles" + ks, true, identity);
        r.equal("triangle inequality" + ks, true, triangle);
        r.equal("union-find loops agree with loop tracing" + ks, true, loops_agree);
    }
    for (int k = 1; k <= 5; ++k) {
        auto basis = enumerate_pairings(k);
        for (int n : {2, 3, 5}) {
            auto gram = build_gram(GramSpec::orthogonal(k, n)).matrix;
            bool holds = true;
            BigRational nk = pow(BigRational(n), static_cast<unsigned long>(k));
            for (std::size_t p = 0; p < basis.size(); ++p) {
                for (std::size_t q = 0; q < basis.size(); ++q) {
                    BigRational scaled = gram(p, q) / nk;
                    BigRational expected =
                        1 / pow(BigRational(n), static_cast<unsigned long>(loop_distance(basis[p], basis[q])));
                    holds = holds && scaled == expected;
                }
            }
            r.equal("n^-k G(p,q) = n^-d(p,q) " + k_n(k, n), true, holds);
        }
    }
}

void expansion_suite(Recorder& r, WeingartenCache& cache) {
    for (int k = 1; k <= 3; ++k) {
        for (int n : {10, 100}) {
            auto table = cache.get(GramSpec::orthogonal(k, n));
            BigRational nk = pow(BigRational(n), static_cast<unsigned long>(k));
            for (int order : {1, 2, 3}) {
                BigRational bound = BigRational(10) / pow(BigRational(n), static_cast<unsigned long>(order + 1));
                BigRational worst = 0;
                for (std::size_t p = 0; p < table->basis.size(); ++p) {
                    for (std::size_t q = 0; q < table->basis.size(); ++q) {
                        auto series = weingarten_series(k, table->basis[p], table->basis[q], order);
                        BigRational error = evaluate_at_n(series, n) - nk * table->weingarten(p, q);
                        if (abs(error) > worst) {
                            worst = abs(error);
                        }
                    }
                }
                r.check("max |series - n^k W| " + k_n(k, n) + ",D=" + std::to_string(order),
                        below(worst, bound), "< " + to_decimal(bound, 12), to_decimal(worst, 12));
            }
        }
    }
}

void second_order_suite(Recorder& r) {
    const std::size_t z_order = 12;
    PowerSeries closed = neighbor_generating_series(z_order);
    PowerSeries functional = neighbor_series_from_catalan(z_order);
    for (std::size_t m = 0; m <= z_order; ++m) {
        r.equal("N(z) closed form vs functional equation at z^" + std::to_string(m),
                functional[m], closed[m]);
    }
    PowerSeries catalan = catalan_generating_series(z_order);
    StieltjesSeries stieltjes = stieltjes_series(z_order, true);
    for (int k = 0; k <= 5; ++k) {
        auto m = static_cast<std::size_t>(2 * k);
        InverseNSeries moments = moment_series(k, 1);
        std::string ks = " k=" + std::to_string(k);
        r.equal("E_0 - O_0 = [z^2k]C" + ks, catalan[m], moments[0]);
        r.equal("E_1 - O_1 = -[z^2k]N" + ks, BigRational(-closed[m]), moments[1]);
        r.equal("N_k counts distance-one pairs" + ks, closed[m], BigRational(neighbor_count(k)));
        r.equal("Stieltjes n^-1 coefficient" + ks, moments[1], stieltjes.coefficients[m][1]);
    }
}

void unitary_suite(Recorder& r, WeingartenCache& cache) {
    for (int k = 0; k <= 6; ++k) {
        ColorWord word = ColorWord::alternating(k);
        r.equal("|D((ab)^" + std::to_string(k) + ")|",
                oracles::catalan_number(static_cast<unsigned>(k)),
                BigInt(static_cast<long>(enumerate_colored_pairings(word).size())));
    }
    for (int n = 2; n <= 6; ++n) {
        auto one = MultiIndex::constant(2, 1);
        r.equal("integral v11 v11* at n=" + std::to_string(n), BigRational(1, n),
                integrate(MonomialSpec::unitary(ColorWord::parse("ab"), one, one, n), cache));
    }
    for (std::size_t length = 0; length <= 8; length += 2) {
        bool traces = true;
        bool counts = true;
        std::size_t words = 0;
        for (const auto& word : all_words(length)) {
            if (!word.balanced()) {
                continue;
            }
            ++words;
            BigInt size(static_cast<long>(enumerate_colored_pairings(word).size()));
            counts = counts && size == oracles::circular_star_moments(word);
            for (int n : {2, 3}) {
                auto table = cache.get(GramSpec::unitary(word, n));
                traces = traces && trace_product(table->weingarten, table->gram) == BigRational(size);
            }
        }
        std::string ls = " (length " + std::to_string(length) + ", " + std::to_string(words) + " words)";
        r.equal("Tr(W_an G_an) = |D(a)|, n=2,3" + ls, true, traces);
        r.equal("|D(a)| = circular *-moment" + ls, true, counts);
    }
}

void wick_suite(Recorder& r, WeingartenCache& cache, const VerifyOptions& options) {
    const int n = 10'000;
    const BigRational bound(10, n);
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> entry(1, 3);
    std::bernoulli_distribution coin(0.5);

    for (int k = 1; k <= 3; ++k) {
        const auto length = static_cast<std::size_t>(2 * k);
        BigRational nk = pow(BigRational(n), static_cast<unsigned long>(k));
        for (GroupCase group : {GroupCase::orthogonal, GroupCase::unitary}) {
            BigRational worst = 0;
            std::string worst_at;
            int matched = 0;
            for (int sample = 0; sample < options.wick_samples; ++sample) {
                // redraw until some diagram matches both tuples, so the sample
                // actually exercises the limit; give up after 2000 draws
                MonomialSpec monomial;
                for (int attempt = 0; attempt < 2000; ++attempt) {
                    std::vector<int> rows(length), cols(length);
                    for (auto& x : rows) x = entry(rng);
                    for (auto& x : cols) x = entry(rng);
                    if (group == GroupCase::orthogonal) {
                        monomial =
                            MonomialSpec::orthogonal(MultiIndex(rows), MultiIndex(cols), n);
                    } else {
                        std::vector<Color> letters(length, Color::beta);
                        std::fill(letters.begin(), letters.begin() + k, Color::alpha);
                        std::shuffle(letters.begin(), letters.end(), rng);
                        monomial = MonomialSpec::unitary(ColorWord(letters), MultiIndex(rows),
                                                         MultiIndex(cols), n);
                    }
                    if (joint_moment_leading_order(monomial) > 0) {
                        ++matched;
                        break;
                    }
                }
                BigRational error = nk * integrate(monomial, cache) -
                                    BigRational(joint_moment_leading_order(monomial));
                if (abs(error) > worst) {
                    worst = abs(error);
                    worst_at = monomial.word.to_string() + " i=" + monomial.rows.to_string() +
                               " j=" + monomial.cols.to_string();
                }
            }
            r.check(to_string(group) + " k=" + std::to_string(k) + ", " +
                        std::to_string(options.wick_samples) + " random tuples at n=10^4",
                    at_most(worst, bound), "<= " + to_decimal(bound, 8),
                    to_decimal(worst, 8) + (worst_at.empty() ? "" : " at " + worst_at) + ", " +
                        std::to_string(matched) + " with nonzero limit");
        }
    }
}

void cache_suite(Recorder& r, const VerifyOptions& options) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() /
                   ("qweingarten-verify-" + std::to_string(options.seed) + "-" +
                    std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    fs::create_directories(dir);

    WeingartenTable table = build_weingarten(GramSpec::orthogonal(3, 4));
    std::string text = serialize_table(table);
    WeingartenTable parsed = parse_table(text);
    r.equal("parse(serialize(t)) == t, k=3 n=4", true, parsed == table);
    bool stable = text == serialize_table(parsed);
    r.check("serialize is byte-stable", stable, "identical bytes",
            stable ? "identical bytes" : "bytes differ");

    WeingartenTable unitary = build_weingarten(GramSpec::unitary(ColorWord::parse("abba"), 3));
    r.equal("unitary round trip, abba n=3", true, parse_table(serialize_table(unitary)) == unitary);

    {
        WeingartenCache disk(dir);
        disk.store(table);
        CacheLoadResult loaded = disk.load(table.spec);
        r.check("store then load, k=3 n=4", loaded.status == CacheStatus::hit && loaded.table == table,
                "hit, equal", loaded.status == CacheStatus::hit ? "hit" : loaded.diagnostic);
    }
    {
        // alter one Weingarten entry without touching the checksum
        fs::path file = dir / cache_file_name(table.spec);
        std::ifstream in(file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        in.close();
        std::string poisoned = buffer.str();
        auto at = poisoned.find(to_string(table.weingarten(0, 0)), poisoned.find("\"weingarten\""));
        poisoned.replace(at, to_string(table.weingarten(0, 0)).size(), "12345/7");
        std::ofstream(file, std::ios::trunc) << poisoned;

        WeingartenCache disk(dir);
        CacheLoadResult loaded = disk.load(table.spec);
        r.check("poisoned entry is rejected", loaded.status == CacheStatus::corrupt,
                "corrupt (checksum failure)", loaded.diagnostic.empty() ? "accepted" : loaded.diagnostic);
        auto recovered = disk.get(table.spec);
        r.equal("poisoned entry is recomputed", true, *recovered == table);
        r.equal("corruption reported in diagnostics", std::size_t{1}, disk.diagnostics().size());
    }
    {
        WeingartenCache cold(dir);
        auto first = cold.get(GramSpec::orthogonal(6, 3));
        WeingartenCache warm(dir);
        CacheLoadResult loaded = warm.load(GramSpec::orthogonal(6, 3));
        r.check("cold vs warm k=6 n=3", loaded.status == CacheStatus::hit && *loaded.table == *first,
                "identical", loaded.status == CacheStatus::hit ? "identical" : loaded.diagnostic);
    }
    fs::remove_all(dir);
}

} // namespace

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
    std::size_t failed = 0;
    for (const auto& c : checks) {
        failed += c.passed ? 0 : 1;
    }
    return failed;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "catalan", "metric",    "n2",          "second-order", "unitary",
        "wick",    "vanishing", "consistency", "expansion",    "cache"};
    return names;
}

SuiteReport run_suite(std::string_view name, WeingartenCache& cache, const VerifyOptions& options) {
    auto start = std::chrono::steady_clock::now();
    Recorder r{std::string(name)};
    if (name == "catalan") {
        catalan_suite(r, cache);
    } else if (name == "metric") {
        metric_suite(r);
    } else if (name == "n2") {
        n2_suite(r, cache);
    } else if (name == "second-order") {
        second_order_suite(r);
    } else if (name == "unitary") {
        unitary_suite(r, cache);
    } else if (name == "wick") {
        wick_suite(r, cache, options);
    } else if (name == "vanishing") {
        vanishing_suite(r, cache);
    } else if (name == "consistency") {
        consistency_suite(r, cache);
    } else if (name == "expansion") {
        expansion_suite(r, cache);
    } else if (name == "cache") {
        cache_suite(r, options);
    } else {
        throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
    }
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return r.finish(elapsed.count());
}

std::vector<SuiteReport> run_suites(std::string_view name, WeingartenCache& cache,
                                    const VerifyOptions& options) {
    std::vector<SuiteReport> out;
    if (name == "all") {
        for (const auto& suite : suite_names()) {
            out.push_back(run_suite(suite, cache, options));
        }
    } else {
        out.push_back(run_suite(name, cache, options));
    }
    return out;
}

} // namespace qweingarten::verify
