#include "nakayama/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "nakayama/hom_ext.hpp"

namespace nakayama {

std::vector<AdmissibleSequence> all_admissible(Kind kind, int n, int max_c) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    std::vector<AdmissibleSequence> out;
    const int low = kind == Kind::cyclic ? 2 : 1;
    if (max_c < low) return out;
    std::vector<int> c(static_cast<std::size_t>(n), 2);
    if (kind == Kind::linear) c[0] = 1;

    // depth-first over prefixes that already satisfy c_{i+1} <= c_i + 1
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == c.size()) {
            try {
                out.push_back(validate(kind, c));
            } catch (const AdmissibilityError&) {
            }
            return;
        }
        const int lo = (kind == Kind::linear && i == 0) ? 1 : 2;
        const int hi = (kind == Kind::linear && i == 0) ? 1 : (i == 0 ? max_c : std::min(max_c, c[i - 1] + 1));
        for (int v = lo; v <= hi; ++v) {
            c[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

AdmissibleSequence rotation_representative(const AdmissibleSequence& alg) {
    return validate(alg.kind(), canonical_rotation(alg));
}

AdmissibleSequence difference_class_representative(const AdmissibleSequence& alg) {
    if (!alg.is_cyclic()) return alg;
    std::vector<int> c = alg.lengths();
    const int n = alg.n();
    while (*std::min_element(c.begin(), c.end()) - n >= 2)
        for (int& x : c) x -= n;
    return validate(Kind::cyclic, c);
}

bool is_elementary(const AdmissibleSequence& alg) {
    const auto& c = alg.lengths();
    return *std::min_element(c.begin(), c.end()) <= alg.n() + 1;
}

bool is_absolutely_elementary(const AdmissibleSequence& alg) {
    const auto& c = alg.lengths();
    return *std::min_element(c.begin(), c.end()) == 2;
}

const std::vector<std::string>& boolean_report_keys() {
    static const std::vector<std::string> keys{"selfinjective",     "auslander",      "one_aus_gorenstein",
                                               "dtr_selfinjective", "tilting_exists", "tilting_cotilting"};
    return keys;
}

const std::vector<std::string>& dimension_report_keys() {
    static const std::vector<std::string> keys{"gldim", "domdim", "id_left", "id_right", "gdim", "m_auslander"};
    return keys;
}

ReportFilter ReportFilter::parse(const std::string& text) {
    ReportFilter f;
    f.text_ = text;
    const std::size_t at = text.find_first_of("<>=!", 1);
    if (at != std::string::npos) {
        f.op_ = text.substr(at, text.compare(at + 1, 1, "=") == 0 ? 2 : 1);
        if (f.op_ == "!") throw std::invalid_argument("bad filter '" + text + "'");
    }
    if (at == std::string::npos) {
        f.key_ = text;
        if (!f.key_.empty() && f.key_[0] == '!') {
            f.negate_ = true;
            f.key_ = f.key_.substr(1);
        }
        const auto& keys = boolean_report_keys();
        if (std::find(keys.begin(), keys.end(), f.key_) == keys.end())
            throw std::invalid_argument("unknown boolean filter key '" + f.key_ + "'");
        return f;
    }
    f.key_ = text.substr(0, at);
    const std::string rhs = text.substr(at + f.op_.size());
    if (f.op_ == "=") f.op_ = "==";
    const auto& keys = dimension_report_keys();
    if (std::find(keys.begin(), keys.end(), f.key_) == keys.end())
        throw std::invalid_argument("unknown dimension filter key '" + f.key_ + "'");
    const auto v = ExtendedNat::parse(rhs);
    if (!v) throw std::invalid_argument("bad filter value '" + rhs + "'");
    f.value_ = *v;
    return f;
}

bool ReportFilter::operator()(const ClassificationReport& r) const {
    if (op_.empty()) {
        bool v = false;
        if (key_ == "selfinjective") v = r.selfinjective;
        else if (key_ == "auslander") v = r.auslander;
        else if (key_ == "one_aus_gorenstein") v = r.one_aus_gorenstein;
        else if (key_ == "dtr_selfinjective") v = r.dtr_selfinjective;
        else if (key_ == "tilting_exists") v = r.tilting_exists;
        else if (key_ == "tilting_cotilting") v = r.tilting_cotilting;
        return v != negate_;
    }
    std::optional<ExtendedNat> d;
    if (key_ == "gldim") d = r.gldim;
    else if (key_ == "domdim") d = r.domdim;
    else if (key_ == "id_left") d = r.id_left;
    else if (key_ == "id_right") d = r.id_right;
    else if (key_ == "gdim") d = r.gdim;
    else if (key_ == "m_auslander") d = r.m_auslander;
    if (!d) return false;  // undefined values never satisfy a comparison
    const auto cmp = *d <=> *value_;
    if (op_ == ">=") return cmp >= 0;
    if (op_ == "<=") return cmp <= 0;
    if (op_ == "==") return cmp == 0;
    if (op_ == "!=") return cmp != 0;
    if (op_ == ">") return cmp > 0;
    return cmp < 0;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& f) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex m;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(m);
                    if (!error) error = std::current_exception();
                    next = count;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

SweepResult run_sweep(const SweepSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("n must be at least 1");
    const int max_c = spec.max_c > 0 ? spec.max_c : 2 * spec.n;
    if (max_c < (spec.kind == Kind::cyclic ? 2 : 1))
        throw std::invalid_argument("max_c must be at least " + std::string(spec.kind == Kind::cyclic ? "2" : "1"));

    SweepResult res;
    std::map<std::vector<int>, AdmissibleSequence> reps;
    for (const auto& alg : all_admissible(spec.kind, spec.n, max_c)) {
        ++res.generated;
        AdmissibleSequence a = alg;
        if (spec.up_to_difference_class) a = difference_class_representative(a);
        if (spec.up_to_rotation) a = rotation_representative(a);
        if (spec.elementary && !is_elementary(a)) continue;
        if (spec.absolutely_elementary && !is_absolutely_elementary(a)) continue;
        reps.emplace(a.lengths(), a);
    }
    std::vector<AdmissibleSequence> todo;
    for (const auto& [c, a] : reps) todo.push_back(a);

    std::vector<std::optional<ClassificationReport>> out(todo.size());
    parallel_for(todo.size(), spec.threads, [&](std::size_t i) {
        ClassificationReport r = classify(todo[i]);
        for (const auto& f : spec.filters)
            if (!f(r)) return;
        out[i] = std::move(r);
    });
    for (auto& r : out) {
        if (!r) continue;
        if (res.rows.size() == spec.row_cap) {
            res.truncated = true;
            break;
        }
        res.rows.push_back(std::move(*r));
    }
    return res;
}

AdmissibleSequence random_sequence(Kind kind, int n, int c_max, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (kind == Kind::cyclic && c_max < 2) throw std::invalid_argument("c_max must be at least 2");
    if (kind == Kind::linear && n > 1 && c_max < 2) throw std::invalid_argument("c_max must be at least 2");
    auto draw = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::vector<int> c(static_cast<std::size_t>(n));
    while (true) {
        c[0] = kind == Kind::linear ? 1 : draw(2, c_max);
        for (std::size_t i = 1; i < c.size(); ++i) c[i] = draw(2, std::min(c_max, c[i - 1] + 1));
        if (kind == Kind::linear || c[0] <= c.back() + 1) return validate(kind, c);
    }
}

}  // namespace nakayama
