#pragma once

// Property suites run over exhaustive grids and seeded random algebras. Each
// property counts how often it was evaluated and how often it failed, and keeps
// the first counterexample in a deterministic order.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nakayama {

struct PropertyResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_counterexample;
};

class Tally {
public:
    void check(const std::string& name, bool ok, const std::function<std::string()>& describe);
    /// Counts an evaluation without a verdict, e.g. a sample skipped by a precondition.
    void note(const std::string& name);
    void merge(const Tally& other);
    const std::vector<PropertyResult>& results() const { return results_; }

private:
    PropertyResult& slot(const std::string& name);
    std::vector<PropertyResult> results_;
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> properties;
    bool passed() const;
    const PropertyResult* find(const std::string& name) const;
};

struct CheckOptions {
    std::size_t samples = 1000;  // random algebras (or module samples for the it suite)
    std::uint64_t seed = 42;
    int n_max = 8;  // random draws use 1 <= n <= n_max, c_i <= c_max
    int c_max = 12;
    int grid_n = 0;  // exhaustive grid n <= grid_n, c_i <= grid_c; 0 disables it
    int grid_c = 0;
    std::uint64_t cap = 30;
    unsigned threads = 0;
};

/// tilting, structural, oracle, drop, endo, it
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite. The oracle suite is
/// exhaustive over n <= n_max, c_i <= c_max and ignores samples.
SuiteReport run_suite(const std::string& name, const CheckOptions& opt);

}  // namespace nakayama
