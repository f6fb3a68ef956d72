#include "nakayama/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "nakayama/extended_nat.hpp"

namespace nakayama {

std::optional<ExtendedNat> ExtendedNat::parse(std::string_view text) {
    if (text == "inf") return ExtendedNat::infinity();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
    return ExtendedNat(v);
}

std::string_view kind_name(Kind kind) { return kind == Kind::cyclic ? "cyclic" : "linear"; }

AdmissibleSequence validate(Kind kind, std::vector<int> c) {
    const std::size_t n = c.size();
    if (n == 0) throw AdmissibilityError(0, "admissible sequence must be non-empty");
    auto fail = [](std::size_t i, const std::string& msg) {
        throw AdmissibilityError(i, "Kupisch violation at i=" + std::to_string(i) + ": " + msg);
    };
    if (kind == Kind::cyclic) {
        for (std::size_t i = 0; i < n; ++i) {
            if (c[i] < 2) fail(i + 1, "c_" + std::to_string(i + 1) + "=" + std::to_string(c[i]) + " < 2");
            if (i > 0 && c[i] > c[i - 1] + 1)
                fail(i + 1, "c_" + std::to_string(i + 1) + "=" + std::to_string(c[i]) + " > c_" +
                                std::to_string(i) + "+1=" + std::to_string(c[i - 1] + 1));
        }
        if (c[0] > c[n - 1] + 1)
            fail(1, "c_1=" + std::to_string(c[0]) + " > c_" + std::to_string(n) + "+1=" +
                        std::to_string(c[n - 1] + 1));
    } else {
        if (c[0] != 1) fail(1, "c_1=" + std::to_string(c[0]) + " must equal 1 for a linear algebra");
        for (std::size_t i = 1; i < n; ++i) {
            if (c[i] < 2) fail(i + 1, "c_" + std::to_string(i + 1) + "=" + std::to_string(c[i]) + " < 2");
            if (c[i] > c[i - 1] + 1)
                fail(i + 1, "c_" + std::to_string(i + 1) + "=" + std::to_string(c[i]) + " > c_" +
                                std::to_string(i) + "+1=" + std::to_string(c[i - 1] + 1));
        }
    }
    return AdmissibleSequence(kind, std::move(c));
}

int AdmissibleSequence::max_length() const { return *std::max_element(c_.begin(), c_.end()); }

int AdmissibleSequence::dimension() const { return std::accumulate(c_.begin(), c_.end(), 0); }

int AdmissibleSequence::normalize(int i) const {
    if (kind_ == Kind::linear) return i;
    const int m = n();
    return ((i - 1) % m + m) % m + 1;
}

// ---------------------------------------------------------------- ModuleSum

ModuleSum::ModuleSum(std::vector<Uniserial> summands) : summands_(std::move(summands)) {
    std::sort(summands_.begin(), summands_.end());
}

ModuleSum::ModuleSum(std::initializer_list<Uniserial> summands) : summands_(summands) {
    std::sort(summands_.begin(), summands_.end());
}

bool ModuleSum::is_basic() const {
    return std::adjacent_find(summands_.begin(), summands_.end()) == summands_.end();
}

bool ModuleSum::contains(const Uniserial& u) const {
    return std::binary_search(summands_.begin(), summands_.end(), u);
}

void ModuleSum::add(const Uniserial& u) {
    summands_.insert(std::upper_bound(summands_.begin(), summands_.end(), u), u);
}

ModuleSum ModuleSum::basic_part() const {
    std::vector<Uniserial> s = summands_;
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return ModuleSum(std::move(s));
}

bool ModuleSum::operator==(const ModuleSum& other) const { return summands_ == other.summands_; }

// ---------------------------------------------------------------- uniserials

int socle(const AdmissibleSequence& alg, const Uniserial& u) { return alg.normalize(u.top - u.len + 1); }

bool is_valid(const AdmissibleSequence& alg, const Uniserial& u) {
    if (u.top < 1 || u.top > alg.n() || u.len < 1) return false;
    if (u.len > alg.c(u.top)) return false;
    return alg.is_cyclic() || u.top - u.len + 1 >= 1;
}

void require_valid(const AdmissibleSequence& alg, const Uniserial& u) {
    if (!is_valid(alg, u))
        throw std::invalid_argument(to_string(u) + " is not a module over " + to_string(alg));
}

std::vector<Uniserial> indecomposables(const AdmissibleSequence& alg) {
    std::vector<Uniserial> out;
    out.reserve(static_cast<std::size_t>(alg.dimension()));
    for (int i = 1; i <= alg.n(); ++i)
        for (int l = 1; l <= alg.c(i); ++l) out.push_back({i, l});
    return out;
}

std::vector<Uniserial> simples(const AdmissibleSequence& alg) {
    std::vector<Uniserial> out;
    for (int i = 1; i <= alg.n(); ++i) out.push_back({i, 1});
    return out;
}

Uniserial projective(const AdmissibleSequence& alg, int i) {
    if (i < 1 || i > alg.n()) throw std::out_of_range("vertex " + std::to_string(i) + " out of range");
    return {i, alg.c(i)};
}

Uniserial injective(const AdmissibleSequence& alg, int j) {
    if (j < 1 || j > alg.n()) throw std::out_of_range("vertex " + std::to_string(j) + " out of range");
    // Modules with socle S_j form a chain under inclusion, so the longest one is the envelope.
    for (int l = alg.max_length(); l >= 1; --l) {
        const int t = j + l - 1;
        if (!alg.is_cyclic() && t > alg.n()) continue;
        if (l <= alg.c(t)) return {alg.normalize(t), l};
    }
    return {j, 1};  // unreachable: S_j itself always qualifies
}

bool is_projective(const AdmissibleSequence& alg, const Uniserial& u) { return u.len == alg.c(u.top); }

bool is_injective(const AdmissibleSequence& alg, const Uniserial& u) {
    return u.len == injective(alg, socle(alg, u)).len;
}

bool is_projective_injective(const AdmissibleSequence& alg, const Uniserial& u) {
    return is_projective(alg, u) && is_injective(alg, u);
}

Uniserial projective_cover(const AdmissibleSequence& alg, const Uniserial& u) { return projective(alg, u.top); }

Uniserial injective_envelope(const AdmissibleSequence& alg, const Uniserial& u) {
    return injective(alg, socle(alg, u));
}

ModuleSum regular_module(const AdmissibleSequence& alg) {
    ModuleSum m;
    for (int i = 1; i <= alg.n(); ++i) m.add(projective(alg, i));
    return m;
}

ModuleSum dual_regular_module(const AdmissibleSequence& alg) {
    ModuleSum m;
    for (int j = 1; j <= alg.n(); ++j) m.add(injective(alg, j));
    return m;
}

ModuleSum projective_injectives(const AdmissibleSequence& alg) {
    ModuleSum m;
    for (int i = 1; i <= alg.n(); ++i) {
        const Uniserial p = projective(alg, i);
        if (is_injective(alg, p)) m.add(p);
    }
    return m;
}

Uniserial tau(const AdmissibleSequence& alg, const Uniserial& u) {
    require_valid(alg, u);
    if (is_projective(alg, u)) throw std::domain_error("tau of projective " + to_string(u));
    return {alg.normalize(u.top - 1), u.len};
}

Uniserial tau_inv(const AdmissibleSequence& alg, const Uniserial& u) {
    require_valid(alg, u);
    if (is_injective(alg, u)) throw std::domain_error("tau_inv of injective " + to_string(u));
    return {alg.normalize(u.top + 1), u.len};
}

OppositeAlgebra opposite(const AdmissibleSequence& alg) {
    const int n = alg.n();
    std::vector<int> relabel(static_cast<std::size_t>(n));
    std::vector<int> c(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int star = alg.is_cyclic() ? alg.normalize(1 - i) : n + 1 - i;
        relabel[static_cast<std::size_t>(i - 1)] = star;
        c[static_cast<std::size_t>(star - 1)] = injective(alg, i).len;
    }
    try {
        return {validate(alg.kind(), std::move(c)), std::move(relabel)};
    } catch (const AdmissibilityError& e) {
        throw std::logic_error(std::string("opposite algebra failed Kupisch validation: ") + e.what());
    }
}

std::vector<int> canonical_rotation(const AdmissibleSequence& alg) {
    std::vector<int> best = alg.lengths();
    if (!alg.is_cyclic()) return best;
    std::vector<int> rot = best;
    for (int r = 1; r < alg.n(); ++r) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

// ---------------------------------------------------------------- text forms

std::string lengths_to_string(const std::vector<int>& c, char sep) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(c[i]);
    }
    return out;
}

std::string to_string(const AdmissibleSequence& alg) {
    return std::string(kind_name(alg.kind())) + ":" + lengths_to_string(alg.lengths());
}

std::string to_string(const Uniserial& u) {
    return "M(" + std::to_string(u.top) + "," + std::to_string(u.len) + ")";
}

std::string to_string(const ModuleSum& m) {
    if (m.is_zero()) return "0";
    std::string out;
    for (const auto& u : m) {
        if (!out.empty()) out += "+";
        out += to_string(u);
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view context) {
    s = trim(s);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("cannot parse integer '" + std::string(s) + "' in '" + std::string(context) + "'");
    return v;
}

}  // namespace

std::vector<int> parse_lengths(std::string_view text) {
    std::vector<int> c;
    std::string_view rest = text;
    while (true) {
        const auto comma = rest.find(',');
        c.push_back(parse_int(rest.substr(0, comma), text));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return c;
}

AdmissibleSequence parse_algebra(std::string_view text) {
    text = trim(text);
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("algebra must look like 'cyclic:3,2,3' or 'linear:1,2,2'");
    const auto head = text.substr(0, colon);
    Kind kind;
    if (head == "cyclic")
        kind = Kind::cyclic;
    else if (head == "linear")
        kind = Kind::linear;
    else
        throw std::invalid_argument("unknown algebra kind '" + std::string(head) + "'");
    return validate(kind, parse_lengths(text.substr(colon + 1)));
}

Uniserial parse_uniserial(std::string_view text) {
    const auto t = trim(text);
    if (t.size() < 6 || t.substr(0, 2) != "M(" || t.back() != ')')
        throw std::invalid_argument("module must look like 'M(i,l)': '" + std::string(text) + "'");
    const auto inner = t.substr(2, t.size() - 3);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos)
        throw std::invalid_argument("module must look like 'M(i,l)': '" + std::string(text) + "'");
    return {parse_int(inner.substr(0, comma), text), parse_int(inner.substr(comma + 1), text)};
}

ModuleSum parse_module_sum(std::string_view text) {
    text = trim(text);
    if (text == "0") return {};
    std::vector<Uniserial> parts;
    while (true) {
        const auto plus = text.find('+');
        parts.push_back(parse_uniserial(text.substr(0, plus)));
        if (plus == std::string_view::npos) break;
        text.remove_prefix(plus + 1);
    }
    return ModuleSum(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Uniserial& u) { return os << to_string(u); }
std::ostream& operator<<(std::ostream& os, const ModuleSum& m) { return os << to_string(m); }
std::ostream& operator<<(std::ostream& os, const AdmissibleSequence& alg) { return os << to_string(alg); }

}  // namespace nakayama
