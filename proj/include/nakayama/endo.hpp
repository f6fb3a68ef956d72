#pragma once

// Endomorphism algebras End(X)^op of modules over a Nakayama algebra, written
// down by structure constants, together with their modules and minimal
// projective resolutions over the rationals.
//
// Side convention: the basis of End(X)^op is the union of the hom bases
// Hom(X_a, X_b), and the product f·g is the composite g∘f. With this choice
// Hom(X, M) is a left module via g·φ = φ∘g, and Hom(X, X_a) is the
// indecomposable projective A·e_a.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nakayama/core.hpp"
#include "nakayama/exact.hpp"
#include "nakayama/extended_nat.hpp"

namespace nakayama {

struct Term {
    int index;
    std::int64_t coeff;
};

/// Basis element of End(X)^op: the canonical map X_source -> X_target with
/// image length k. Summand indices are 0-based positions in X.
struct BasisLabel {
    int source;
    int target;
    int k;
    bool operator==(const BasisLabel&) const = default;
};

class StructureConstantAlgebra {
public:
    StructureConstantAlgebra(std::vector<BasisLabel> basis, std::vector<int> idempotents,
                             std::vector<std::vector<Term>> table);

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BasisLabel>& basis() const { return basis_; }
    /// Basis indices of the primitive idempotents, one per summand.
    const std::vector<int>& idempotents() const { return idempotents_; }
    /// b_i · b_j as a sparse combination of basis elements.
    const std::vector<Term>& product(int i, int j) const {
        return table_[static_cast<std::size_t>(i) * basis_.size() + static_cast<std::size_t>(j)];
    }

    /// Throws std::logic_error unless the table is associative, the
    /// idempotents are orthogonal and sum to the unit, and constants are 0/1.
    void validate() const;

private:
    std::vector<BasisLabel> basis_;
    std::vector<int> idempotents_;
    std::vector<std::vector<Term>> table_;  // row-major dim x dim
};

struct SparseEntry {
    int row;
    Rational value;
};
using SparseColumn = std::vector<SparseEntry>;

/// A finite-dimensional left module: action[b][j] is b · (basis vector j).
class AlgebraModule {
public:
    AlgebraModule() = default;
    AlgebraModule(int dim, std::vector<std::vector<SparseColumn>> action)
        : dim_(dim), action_(std::move(action)) {}

    int dim() const { return dim_; }
    const SparseColumn& column(int b, int j) const {
        return action_[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
    }
    Vector act(int b, const Vector& v) const;
    Matrix action_matrix(int b) const;

    /// Throws std::logic_error unless (b_i b_j)·v = b_i·(b_j·v) and the
    /// idempotents sum to the identity.
    void validate(const StructureConstantAlgebra& a) const;

private:
    int dim_ = 0;
    std::vector<std::vector<SparseColumn>> action_;
};

/// End(X)^op for a basic nonzero X; the table is validated before returning.
StructureConstantAlgebra end_algebra(const AdmissibleSequence& alg, const ModuleSum& x);

/// Hom(X, M) as a left End(X)^op-module. M may have repeated summands.
AlgebraModule hom_module(const AdmissibleSequence& alg, const ModuleSum& x, const ModuleSum& m);

/// The indecomposable projective A·e_a, on the basis elements it contains.
AlgebraModule projective_module(const StructureConstantAlgebra& a, int summand);
/// Basis indices spanning A·e_a, in increasing order.
std::vector<int> projective_basis(const StructureConstantAlgebra& a, int summand);
AlgebraModule regular_module(const StructureConstantAlgebra& a);

struct RadicalAndSimples {
    std::vector<Vector> radical;          // basis of rad A inside A
    std::vector<AlgebraModule> simples;   // top of A·e_a, one per idempotent
};

/// Radical as the kernel of the trace form tr(L_x L_y) (characteristic zero).
RadicalAndSimples radical_and_simples(const StructureConstantAlgebra& a);

/// A dimension that is either known or was not reached within the cap.
struct BoundedDim {
    bool exceeded = false;
    std::uint64_t value = 0;  // meaningful when !exceeded
    std::uint64_t cap = 0;
    std::string to_string() const;
    bool operator==(const BoundedDim&) const = default;
};

struct Resolution {
    std::vector<int> syzygy_dims;  // dim Ω^1 U, dim Ω^2 U, ... (nonzero ones)
    BoundedDim pd;
};

/// Minimal projective resolution up to the cap. The zero module has pd 0 here.
Resolution resolve(const StructureConstantAlgebra& a, const AlgebraModule& u, std::uint64_t cap = 30);
BoundedDim pd_over(const StructureConstantAlgebra& a, const AlgebraModule& u, std::uint64_t cap = 30);
BoundedDim gldim_over(const StructureConstantAlgebra& a, std::uint64_t cap = 30);

/// Dimension of {T : T·L_b = L_b·T for all b}.
int module_endomorphisms(const StructureConstantAlgebra& a, const AlgebraModule& u);

struct DropCheck {
    ExtendedNat gldim_lambda;
    BoundedDim gldim_bc;
    ExtendedNat pd_tau_tc;
    std::optional<bool> theorem_holds;  // nullopt when gldim B_C exceeded the cap
};

/// Requires the criterion and finite gldim.
DropCheck drop_check(const AdmissibleSequence& alg, std::uint64_t cap = 30);

/// Dominant dimension of End(X)^op from vanishing of Ext^i(X, X).
/// X must be basic and contain every indecomposable projective and injective.
ExtendedNat mueller_domdim(const AdmissibleSequence& alg, const ModuleSum& x);

struct ProjdimKeyCheck {
    ExtendedNat pd_lambda;
    BoundedDim pd_bc;
    bool holds = false;
};

/// Compares pd over B_C of Hom(T_C, M) with pd M - 1 for M generated by the
/// projective-injectives with 1 <= pd M < ∞.
ProjdimKeyCheck projdim_key_check(const AdmissibleSequence& alg, const Uniserial& m, std::uint64_t cap = 30);

/// If B is a basic Nakayama algebra with 1-dimensional simples, its admissible sequence.
std::optional<AdmissibleSequence> recognize_nakayama(const StructureConstantAlgebra& b);

struct XTCheck {
    std::optional<AdmissibleSequence> gamma;  // End(X)^op when it is Nakayama
    std::vector<int> tc_lengths;              // summand lengths of T_C over it
    std::vector<int> predicted;               // dim Hom(X, I_i) and dim coker(Hom(X, X_j) -> Hom(X, I_0 X_j))
    std::vector<int> quotient_homs;           // dim Hom(X, I_0(X_j)/X_j) in place of the cokernels
    bool matches = false;
};

/// Compares the T_C of End(X)^op with its description through X, as
/// multisets of dimensions. Only applicable when End(X)^op is Nakayama.
XTCheck xt_dimension_check(const AdmissibleSequence& alg, const ModuleSum& x);

}  // namespace nakayama
