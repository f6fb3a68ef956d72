#pragma once

// Nakayama algebras presented by their admissible sequence, and the calculus of
// uniserial modules over them.
//
// Conventions: vertices are 1-based. The uniserial M(i,l) has top S_i and
// composition factors S_i, S_{i-1}, ..., S_{i-l+1} read from top to socle, so
// the projective P_i = M(i, c_i) has socle S_{i-c_i+1}. In the cyclic case all
// vertex arithmetic is modulo n with representatives 1..n.

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nakayama {

enum class Kind { cyclic, linear };

std::string_view kind_name(Kind kind);

/// Thrown by validate() when a Kupisch inequality fails. index() is the 1-based
/// position of the first violated entry.
class AdmissibilityError : public std::invalid_argument {
public:
    AdmissibilityError(std::size_t index, const std::string& what)
        : std::invalid_argument(what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// Admissible sequence (c_1, ..., c_n) of a basic connected Nakayama algebra.
/// Construct through validate(); instances always satisfy the Kupisch inequalities.
class AdmissibleSequence {
public:
    Kind kind() const { return kind_; }
    bool is_cyclic() const { return kind_ == Kind::cyclic; }
    int n() const { return static_cast<int>(c_.size()); }

    /// c_i for a 1-based vertex; cyclic indices are reduced mod n first.
    int c(int i) const { return c_[static_cast<std::size_t>(normalize(i) - 1)]; }
    const std::vector<int>& lengths() const { return c_; }

    int max_length() const;
    /// Σ c_i = dim_k Λ.
    int dimension() const;

    /// Reduces a vertex into 1..n (cyclic). Linear vertices are returned unchanged.
    int normalize(int i) const;

    bool operator==(const AdmissibleSequence&) const = default;

    friend AdmissibleSequence validate(Kind kind, std::vector<int> c);

private:
    AdmissibleSequence(Kind kind, std::vector<int> c) : kind_(kind), c_(std::move(c)) {}

    Kind kind_ = Kind::cyclic;
    std::vector<int> c_;
};

/// Checks the Kupisch inequalities and returns the sequence, or throws
/// AdmissibilityError naming the first violation.
AdmissibleSequence validate(Kind kind, std::vector<int> c);

/// Indecomposable module M(top, len).
struct Uniserial {
    int top = 1;
    int len = 1;

    auto operator<=>(const Uniserial&) const = default;
};

/// A finite direct sum of uniserials; the empty sum is the zero module.
class ModuleSum {
public:
    ModuleSum() = default;
    ModuleSum(std::vector<Uniserial> summands);
    ModuleSum(std::initializer_list<Uniserial> summands);

    const std::vector<Uniserial>& summands() const { return summands_; }
    std::size_t size() const { return summands_.size(); }
    bool is_zero() const { return summands_.empty(); }
    bool is_basic() const;
    bool contains(const Uniserial& u) const;

    void add(const Uniserial& u);
    /// Sorted copy with duplicates removed.
    ModuleSum basic_part() const;

    auto begin() const { return summands_.begin(); }
    auto end() const { return summands_.end(); }

    /// Multiset equality (order independent).
    bool operator==(const ModuleSum& other) const;

private:
    std::vector<Uniserial> summands_;  // kept sorted by (top, len)
};

int socle(const AdmissibleSequence& alg, const Uniserial& u);
bool is_valid(const AdmissibleSequence& alg, const Uniserial& u);
/// Throws std::invalid_argument if u does not exist over alg.
void require_valid(const AdmissibleSequence& alg, const Uniserial& u);

/// All M(i,l) ordered by i then l.
std::vector<Uniserial> indecomposables(const AdmissibleSequence& alg);
std::vector<Uniserial> simples(const AdmissibleSequence& alg);

Uniserial projective(const AdmissibleSequence& alg, int i);
/// Injective envelope of S_j: the longest uniserial with socle S_j.
Uniserial injective(const AdmissibleSequence& alg, int j);

bool is_projective(const AdmissibleSequence& alg, const Uniserial& u);
bool is_injective(const AdmissibleSequence& alg, const Uniserial& u);
bool is_projective_injective(const AdmissibleSequence& alg, const Uniserial& u);

/// Projective cover P(top u) and injective envelope I(soc u).
Uniserial projective_cover(const AdmissibleSequence& alg, const Uniserial& u);
Uniserial injective_envelope(const AdmissibleSequence& alg, const Uniserial& u);

/// Λ = ⊕ P_i and the basic part of DΛ = ⊕ I_j.
ModuleSum regular_module(const AdmissibleSequence& alg);
ModuleSum dual_regular_module(const AdmissibleSequence& alg);
/// Q̃: the projective-injective indecomposables.
ModuleSum projective_injectives(const AdmissibleSequence& alg);

/// AR translate. Throws std::domain_error for projective (resp. injective) input.
Uniserial tau(const AdmissibleSequence& alg, const Uniserial& u);
Uniserial tau_inv(const AdmissibleSequence& alg, const Uniserial& u);

struct OppositeAlgebra {
    AdmissibleSequence sequence;
    /// relabel[i-1] is the vertex of Λ^op corresponding to vertex i of Λ.
    std::vector<int> relabel;
};

/// Admissible sequence of Λ^op. Vertex i maps to n+1-i (linear) or 1-i mod n (cyclic).
OppositeAlgebra opposite(const AdmissibleSequence& alg);

/// Lexicographically minimal cyclic rotation of the sequence (identity for linear).
std::vector<int> canonical_rotation(const AdmissibleSequence& alg);

// Textual forms: "cyclic:3,2,3,4,3", "linear:1,2,2", "M(4,2)", "0".
std::string to_string(const AdmissibleSequence& alg);
std::string to_string(const Uniserial& u);
std::string to_string(const ModuleSum& m);
std::string lengths_to_string(const std::vector<int>& c, char sep = ',');

AdmissibleSequence parse_algebra(std::string_view text);
/// Comma separated integers, e.g. "3,2,3".
std::vector<int> parse_lengths(std::string_view text);
Uniserial parse_uniserial(std::string_view text);
/// "0" or summands joined by '+', e.g. "M(1,2)+M(3,1)".
ModuleSum parse_module_sum(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Uniserial& u);
std::ostream& operator<<(std::ostream& os, const ModuleSum& m);
std::ostream& operator<<(std::ostream& os, const AdmissibleSequence& alg);

}  // namespace nakayama
