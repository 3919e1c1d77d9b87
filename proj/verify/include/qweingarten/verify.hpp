#ifndef QWEINGARTEN_VERIFY_HPP
#define QWEINGARTEN_VERIFY_HPP

#include "qweingarten/cache.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qweingarten::verify {

struct Check {
    std::string name;
    bool passed = false;
    std::string expected;
    std::string actual;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0.0;

    bool passed() const;
    std::size_t failures() const;
};

struct VerifyOptions {
    std::uint64_t seed = 0x5eed'2a0bULL;
    int wick_samples = 120;
};

// catalan, metric, n2, second-order, unitary, wick, vanishing, consistency,
// expansion, cache
const std::vector<std::string>& suite_names();

// Runs one named suite; throws std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, WeingartenCache& cache,
                      const VerifyOptions& options = {});

// "all" expands to every suite in suite_names() order.
std::vector<SuiteReport> run_suites(std::string_view name, WeingartenCache& cache,
                                    const VerifyOptions& options = {});

} // namespace qweingarten::verify

#endif
