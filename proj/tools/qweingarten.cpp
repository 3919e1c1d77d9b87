// qweingarten: command-line front end for exact Haar integration over the
// free orthogonal and free unitary quantum groups.

#include "qweingarten/asymptotics.hpp"
#include "qweingarten/cache.hpp"
#include "qweingarten/diagrams.hpp"
#include "qweingarten/integrator.hpp"
#include "qweingarten/verify.hpp"
#include "qweingarten/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace {

using json = nlohmann::ordered_json;
using namespace qweingarten;

struct GlobalOptions {
    bool json_output = false;
    int approx_digits = -1;
    std::string cache_dir;
    bool no_cache = false;
    bool timing = false;
    int max_half_size = EnumerationLimits{}.max_half_size;
};

struct Result {
    json parameters = json::object();
    json payload = json::object();
    std::string text;
    int exit_code = 0;
};

std::unique_ptr<WeingartenCache> open_cache(const GlobalOptions& options) {
    EnumerationLimits limits{options.max_half_size};
    if (options.no_cache) {
        return std::make_unique<WeingartenCache>();
    }
    std::optional<std::filesystem::path> dir;
    if (!options.cache_dir.empty()) {
        dir = options.cache_dir;
    } else {
        dir = WeingartenCache::directory_from_environment();
    }
    if (!dir) {
        return std::make_unique<WeingartenCache>();
    }
    return std::make_unique<WeingartenCache>(*dir, limits);
}

// exact string, plus a decimal rendering when --approx is set
json rational_json(const BigRational& value, const GlobalOptions& options) {
    if (options.approx_digits < 0) {
        return to_string(value);
    }
    return json{{"exact", to_string(value)}, {"approx", to_decimal(value, options.approx_digits)}};
}

std::string rational_text(const BigRational& value, const GlobalOptions& options) {
    if (options.approx_digits < 0) {
        return to_string(value);
    }
    return to_string(value) + " (~" + to_decimal(value, options.approx_digits) + ")";
}

json partner_json(const Pairing& p) {
    return json(std::vector<int>(p.partners().begin(), p.partners().end()));
}

std::string partner_text(const Pairing& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.num_points(); ++i) {
        out += (i ? "," : "") + std::to_string(p.partners()[i]);
    }
    return out + "]";
}

// ---- enumerate

struct EnumerateArgs {
    std::optional<int> k;
    std::optional<std::string> word;
    bool count_only = false;
};

Result run_enumerate(const EnumerateArgs& args, const GlobalOptions& options) {
    if (args.k.has_value() == args.word.has_value()) {
        throw CLI::ValidationError("enumerate", "exactly one of --k and --word is required");
    }
    EnumerationLimits limits{options.max_half_size};
    Result result;
    std::vector<Pairing> pairings;
    if (args.k) {
        result.parameters["k"] = *args.k;
        pairings = enumerate_pairings(*args.k, limits);
    } else {
        result.parameters["word"] = *args.word;
        pairings = enumerate_colored_pairings(ColorWord::parse(*args.word), limits);
    }
    result.parameters["count_only"] = args.count_only;

    result.payload["count"] = pairings.size();
    std::ostringstream text;
    if (args.count_only) {
        text << pairings.size() << '\n';
    } else {
        json list = json::array();
        text << "count: " << pairings.size() << '\n';
        for (std::size_t t = 0; t < pairings.size(); ++t) {
            list.push_back(partner_json(pairings[t]));
            text << "  " << t + 1 << ": " << partner_text(pairings[t]) << "  "
                 << pairings[t].to_string() << '\n';
        }
        result.payload["pairings"] = std::move(list);
    }
    result.text = text.str();
    return result;
}

// ---- integrate

struct IntegrateArgs {
    std::string group = "orthogonal";
    int n = 2;
    std::string word;
    std::string rows;
    std::string cols;
};

Result run_integrate(const IntegrateArgs& args, const GlobalOptions& options) {
    GroupCase group = parse_group_case(args.group);
    MultiIndex rows = MultiIndex::parse(args.rows);
    MultiIndex cols = MultiIndex::parse(args.cols);
    MonomialSpec monomial;
    if (group == GroupCase::orthogonal) {
        monomial = MonomialSpec::orthogonal(rows, cols, args.n);
        if (!args.word.empty() && args.word.size() != rows.length()) {
            throw CLI::ValidationError("integrate", "--word length differs from --i length");
        }
    } else {
        monomial = MonomialSpec::unitary(ColorWord::parse(args.word), rows, cols, args.n);
    }
    monomial.validate();

    auto cache = open_cache(options);
    BigRational value = integrate(monomial, *cache);
    for (const auto& d : cache->diagnostics()) {
        std::cerr << "warning: " << d << '\n';
    }

    Result result;
    result.parameters["case"] = to_string(group);
    result.parameters["n"] = args.n;
    result.parameters["word"] = monomial.word.to_string();
    result.parameters["i"] = rows.to_string();
    result.parameters["j"] = cols.to_string();
    result.payload["value"] = rational_json(value, options);
    result.text = rational_text(value, options) + "\n";
    return result;
}

// ---- moments

struct MomentsArgs {
    int s = 1;
    int n = 2;
    int max_k = 4;
};

Result run_moments(const MomentsArgs& args, const GlobalOptions& options) {
    if (args.max_k < 1) {
        throw CLI::ValidationError("moments", "--max-k must be at least 1");
    }
    if (args.max_k > options.max_half_size) {
        throw ResourceLimitError("moments: --max-k " + std::to_string(args.max_k) +
                                 " exceeds the half-size limit " +
                                 std::to_string(options.max_half_size));
    }
    MomentQuery{args.s, args.n, 2}.validate();
    auto cache = open_cache(options);

    Result result;
    result.parameters["s"] = args.s;
    result.parameters["n"] = args.n;
    result.parameters["max_k"] = args.max_k;
    json moments = json::array();
    std::ostringstream text;
    text << "power  moment\n";
    for (int k = 1; k <= args.max_k; ++k) {
        BigRational value = truncated_moment({args.s, args.n, 2 * k}, *cache);
        moments.push_back({{"power", 2 * k}, {"value", rational_json(value, options)}});
        text << std::string(5 - std::min<std::size_t>(5, std::to_string(2 * k).size()), ' ')
             << 2 * k << "  " << rational_text(value, options) << '\n';
    }
    for (const auto& d : cache->diagnostics()) {
        std::cerr << "warning: " << d << '\n';
    }
    result.payload["moments"] = std::move(moments);
    result.text = text.str();
    return result;
}

// ---- expand

struct ExpandArgs {
    int k = 1;
    int order = 1;
    std::vector<int> pair;
};

Result run_expand(const ExpandArgs& args, const GlobalOptions& options) {
    EnumerationLimits limits{options.max_half_size};
    Result result;
    result.parameters["k"] = args.k;
    result.parameters["order"] = args.order;

    InverseNSeries series;
    std::ostringstream text;
    if (args.pair.empty()) {
        series = moment_series(args.k, args.order, limits);
        result.payload["series"] = "moment";
        text << "n^k * integral of o_1n^(2k), k = " << args.k << '\n';
    } else {
        if (args.pair.size() != 2) {
            throw CLI::ValidationError("expand", "--pair takes two diagram indices p,q");
        }
        auto basis = enumerate_pairings(args.k, limits);
        for (int index : args.pair) {
            if (index < 1 || static_cast<std::size_t>(index) > basis.size()) {
                throw CLI::ValidationError("expand", "diagram index " + std::to_string(index) +
                                                         " outside [1, " +
                                                         std::to_string(basis.size()) + "]");
            }
        }
        const Pairing& p = basis[static_cast<std::size_t>(args.pair[0] - 1)];
        const Pairing& q = basis[static_cast<std::size_t>(args.pair[1] - 1)];
        series = weingarten_series(args.k, p, q, args.order, limits);
        result.parameters["pair"] = args.pair;
        result.payload["series"] = "weingarten";
        result.payload["p"] = partner_json(p);
        result.payload["q"] = partner_json(q);
        text << "n^k * W(p,q), p = " << p.to_string() << ", q = " << q.to_string() << '\n';
    }
    json coefficients = json::array();
    text << "d  coefficient of n^-d\n";
    for (std::size_t d = 0; d <= series.order(); ++d) {
        coefficients.push_back(to_string(series[d]));
        text << d << "  " << to_string(series[d]) << '\n';
    }
    result.payload["coefficients"] = std::move(coefficients);
    result.text = text.str();
    return result;
}

// ---- verify

Result run_verify(const std::string& suite, std::uint64_t seed, const GlobalOptions& options) {
    auto cache = open_cache(options);
    verify::VerifyOptions verify_options;
    verify_options.seed = seed;
    auto reports = verify::run_suites(suite, *cache, verify_options);

    Result result;
    result.parameters["suite"] = suite;
    result.parameters["seed"] = seed;
    json suites = json::array();
    std::ostringstream text;
    bool all_passed = true;
    for (const auto& report : reports) {
        json checks = json::array();
        for (const auto& check : report.checks) {
            checks.push_back({{"name", check.name},
                              {"passed", check.passed},
                              {"expected", check.expected},
                              {"actual", check.actual}});
            text << (check.passed ? "[PASS] " : "[FAIL] ") << report.suite << ": " << check.name
                 << " (expected " << check.expected << ", actual " << check.actual << ")\n";
        }
        suites.push_back({{"suite", report.suite},
                          {"passed", report.passed()},
                          {"failures", report.failures()},
                          {"checks", std::move(checks)}});
        all_passed = all_passed && report.passed();
    }
    for (const auto& report : reports) {
        text << "suite " << report.suite << ": " << (report.passed() ? "passed" : "FAILED") << " ("
             << report.checks.size() - report.failures() << "/" << report.checks.size() << ")\n";
    }
    result.payload["passed"] = all_passed;
    result.payload["suites"] = std::move(suites);
    result.text = text.str();
    result.exit_code = all_passed ? 0 : 1;
    return result;
}

// ---- cache

Result run_cache(const std::string& action, const GlobalOptions& options) {
    auto cache = open_cache(options);
    Result result;
    result.parameters["action"] = action;
    if (!cache->directory()) {
        throw CLI::ValidationError("cache", "no cache directory (use --cache-dir or " +
                                                std::string(kCacheDirEnv) + ")");
    }
    const auto& dir = *cache->directory();
    result.payload["directory"] = dir.string();
    std::vector<std::filesystem::path> files;
    if (std::filesystem::exists(dir)) {
        for (const auto& entry : std::filesystem::directory_iterator(dir)) {
            std::string name = entry.path().filename().string();
            if (name.size() > 9 && name.ends_with(".wgt.json")) {
                files.push_back(entry.path());
            }
        }
    }
    std::sort(files.begin(), files.end());
    std::ostringstream text;
    json names = json::array();
    if (action == "path") {
        text << dir.string() << '\n';
    } else if (action == "list") {
        for (const auto& f : files) {
            names.push_back(f.filename().string());
            text << f.filename().string() << '\n';
        }
        result.payload["files"] = std::move(names);
    } else if (action == "clear") {
        for (const auto& f : files) {
            std::filesystem::remove(f);
            names.push_back(f.filename().string());
        }
        text << "removed " << files.size() << " cache file(s)\n";
        result.payload["removed"] = std::move(names);
    }
    result.text = text.str();
    return result;
}

void emit(const std::string& command, const Result& result, const GlobalOptions& options,
          double seconds) {
    if (options.json_output) {
        json record;
        record["schema"] = "qweingarten-output";
        record["schema_version"] = kOutputSchemaVersion;
        record["version"] = kVersion;
        record["command"] = command;
        record["parameters"] = result.parameters;
        record["payload"] = result.payload;
        if (options.timing) {
            record["timing"] = {{"seconds", seconds}};
        }
        std::cout << record.dump(2) << '\n';
    } else {
        std::cout << result.text;
        if (options.timing) {
            std::cout << "elapsed: " << seconds << " s\n";
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Haar integration over A_o(n) and A_u(n) via Temperley-Lieb Weingarten "
                 "calculus"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions options;
    app.add_flag("--json", options.json_output, "Emit a versioned JSON record");
    app.add_option("--approx", options.approx_digits,
                   "Also print decimals with this many fractional digits")
        ->check(CLI::Range(0, 1000));
    app.add_option("--cache-dir", options.cache_dir,
                   "Weingarten cache directory (default: $QWEINGARTEN_CACHE)");
    app.add_flag("--no-cache", options.no_cache, "Do not read or write the disk cache");
    app.add_flag("--timing", options.timing, "Report elapsed time");
    app.add_option("--max-half-size", options.max_half_size,
                   "Resource guard on the diagram half-size k")
        ->check(CLI::Range(0, 16));

    EnumerateArgs enumerate_args;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List non-crossing pairings D(k) or D(word)");
    enumerate_cmd->add_option("--k", enumerate_args.k, "Half-size k");
    enumerate_cmd->add_option("--word", enumerate_args.word, "Color word over a (alpha), b (beta)");
    enumerate_cmd->add_flag("--count-only", enumerate_args.count_only, "Print only the count");

    IntegrateArgs integrate_args;
    auto* integrate_cmd = app.add_subcommand("integrate", "Haar integral of a generator monomial");
    integrate_cmd->add_option("--case", integrate_args.group, "orthogonal or unitary")
        ->check(CLI::IsMember({"orthogonal", "unitary", "o", "u"}));
    integrate_cmd->add_option("--n", integrate_args.n, "Dimension n >= 2")->required();
    integrate_cmd->add_option("--word", integrate_args.word,
                              "Color word (unitary: a = v, b = v*)");
    integrate_cmd->add_option("--i", integrate_args.rows, "Row multi-index, e.g. 1,2,2,1")->required();
    integrate_cmd->add_option("--j", integrate_args.cols, "Column multi-index")->required();

    MomentsArgs moments_args;
    auto* moments_cmd = app.add_subcommand("moments", "Even moments of o_sn = u_11 + ... + u_ss");
    moments_cmd->add_option("--s", moments_args.s, "Truncation rank 1 <= s <= n")->required();
    moments_cmd->add_option("--n", moments_args.n, "Dimension n >= 2")->required();
    moments_cmd->add_option("--max-k", moments_args.max_k, "Largest k (moment 2k)")->required();

    ExpandArgs expand_args;
    auto* expand_cmd = app.add_subcommand("expand", "Coefficients of the 1/n expansion");
    expand_cmd->add_option("--k", expand_args.k, "Half-size k")->required();
    expand_cmd->add_option("--order", expand_args.order, "Truncation order D")->required()->check(
        CLI::NonNegativeNumber);
    expand_cmd->add_option("--pair", expand_args.pair,
                           "Canonical diagram indices p,q (1-based) for n^k W(p,q)")
        ->delimiter(',')
        ->expected(2);

    std::string suite = "all";
    std::uint64_t seed = verify::VerifyOptions{}.seed;
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    std::vector<std::string> suite_choices = verify::suite_names();
    suite_choices.push_back("all");
    verify_cmd->add_option("--suite", suite, "Suite name or all")->check(CLI::IsMember(suite_choices));
    verify_cmd->add_option("--seed", seed, "Seed for randomized suites");

    std::string cache_action = "path";
    auto* cache_cmd = app.add_subcommand("cache", "Inspect or clear the Weingarten cache");
    cache_cmd->add_option("action", cache_action, "path, list or clear")
        ->check(CLI::IsMember({"path", "list", "clear"}));

    CLI11_PARSE(app, argc, argv);

    auto start = std::chrono::steady_clock::now();
    try {
        Result result;
        std::string command;
        if (*enumerate_cmd) {
            command = "enumerate";
            result = run_enumerate(enumerate_args, options);
        } else if (*integrate_cmd) {
            command = "integrate";
            result = run_integrate(integrate_args, options);
        } else if (*moments_cmd) {
            command = "moments";
            result = run_moments(moments_args, options);
        } else if (*expand_cmd) {
            command = "expand";
            result = run_expand(expand_args, options);
        } else if (*verify_cmd) {
            command = "verify";
            result = run_verify(suite, seed, options);
        } else {
            command = "cache";
            result = run_cache(cache_action, options);
        }
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        emit(command, result, options, elapsed.count());
        return result.exit_code;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
