#pragma once

// Enumeration of admissible sequences, filters over classification reports,
// and seeded random algebras.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nakayama/core.hpp"
#include "nakayama/tilting.hpp"

namespace nakayama {

/// Every admissible sequence of the given kind and length with all c_i <= max_c,
/// in lexicographic order.
std::vector<AdmissibleSequence> all_admissible(Kind kind, int n, int max_c);

/// Lexicographically minimal rotation (cyclic); linear sequences are returned as is.
AdmissibleSequence rotation_representative(const AdmissibleSequence& alg);

/// Subtracts n from every c_i while the result stays admissible (min c_i - n >= 2).
AdmissibleSequence difference_class_representative(const AdmissibleSequence& alg);

/// min c_i <= n + 1.
bool is_elementary(const AdmissibleSequence& alg);
/// min c_i = 2.
bool is_absolutely_elementary(const AdmissibleSequence& alg);

/// A predicate on a report: a boolean key ("auslander", "!selfinjective") or a
/// comparison of a dimension key with an integer or "inf" ("domdim>=2").
class ReportFilter {
public:
    static ReportFilter parse(const std::string& text);
    bool operator()(const ClassificationReport& r) const;
    const std::string& text() const { return text_; }

private:
    std::string text_;
    std::string key_;
    std::string op_;  // empty for boolean keys
    bool negate_ = false;
    std::optional<ExtendedNat> value_;
};

/// Names accepted as boolean and dimension keys by ReportFilter.
const std::vector<std::string>& boolean_report_keys();
const std::vector<std::string>& dimension_report_keys();

struct SweepSpec {
    Kind kind = Kind::cyclic;
    int n = 3;
    int max_c = 0;  // 0: 2n, enough for every rotation class with min c_i <= n + 1
    std::vector<ReportFilter> filters;
    bool up_to_rotation = false;
    bool up_to_difference_class = false;
    bool elementary = false;
    bool absolutely_elementary = false;
    std::size_t row_cap = 100000;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepResult {
    std::vector<ClassificationReport> rows;  // sorted by (kind, c)
    bool truncated = false;
    std::size_t generated = 0;  // sequences visited before filtering
};

/// Throws std::invalid_argument for n < 1 or max_c below the minimum for the kind.
SweepResult run_sweep(const SweepSpec& spec);

/// c_1 uniform in [2, c_max], then c_{i+1} uniform in [2, min(c_max, c_i + 1)],
/// redrawn until the wrap-around inequality holds. Linear: c_1 = 1 and
/// c_{i+1} uniform in [2, min(c_max, c_i + 1)].
AdmissibleSequence random_sequence(Kind kind, int n, int c_max, std::mt19937_64& rng);

/// Runs f(i) for i in [0, count) on up to `threads` workers (0: hardware
/// concurrency). The first exception thrown by any call is rethrown.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& f);

}  // namespace nakayama
