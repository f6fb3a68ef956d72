#pragma once

// The subcategory C of modules generated and cogenerated by the
// projective-injectives, the tilting module T_C and cotilting module C_C
// living in it, and the classification flags derived from dimensions.

#include <map>
#include <optional>
#include <vector>

#include "nakayama/core.hpp"
#include "nakayama/extended_nat.hpp"

namespace nakayama {

struct QcPc {
    std::vector<int> qc;  // vertices whose projective is injective
    std::vector<int> pc;  // the complement
};

/// Q_c = {i : c_{i+1} <= c_i}, with c_{n+1} := 0 in the linear case.
QcPc qc_pc_sets(const AdmissibleSequence& alg);

/// P(top u) injective and I(soc u) projective.
bool in_C(const AdmissibleSequence& alg, const Uniserial& u);
bool in_C(const AdmissibleSequence& alg, const ModuleSum& m);

struct OmegaMap {
    std::vector<Uniserial> x;       // indecomposables in C with pd = 1
    std::vector<Uniserial> images;  // syzygy of each, projective and non-injective
    bool is_bijection = false;      // every projective non-injective is hit
};

OmegaMap x_set_and_omega(const AdmissibleSequence& alg);

/// The inclusion P_c ⊆ {j - c_j : j ∈ Q_c}, evaluated arithmetically.
bool numerical_criterion(const AdmissibleSequence& alg);
/// numerical_criterion, additionally checked against domdim >= 2 and the Ω-bijection.
bool criterion(const AdmissibleSequence& alg);

/// Smallest k >= 1 with i + k in Q_c. Throws std::domain_error if there is none.
int delta(const AdmissibleSequence& alg, int i);

/// nullopt when the criterion fails.
std::optional<ModuleSum> build_TC(const AdmissibleSequence& alg);
std::optional<ModuleSum> build_CC(const AdmissibleSequence& alg);

/// Throw std::invalid_argument for a non-basic M.
bool verify_tilting(const AdmissibleSequence& alg, const ModuleSum& m);
bool verify_cotilting(const AdmissibleSequence& alg, const ModuleSum& m);

struct ClassificationReport {
    explicit ClassificationReport(AdmissibleSequence a) : algebra(std::move(a)) {}

    AdmissibleSequence algebra;
    ExtendedNat gldim;
    ExtendedNat domdim;
    ExtendedNat id_left;
    ExtendedNat id_right;
    std::optional<ExtendedNat> gdim;  // nullopt: not Iwanaga-Gorenstein
    bool selfinjective = false;
    bool auslander = false;  // gldim <= 2 <= domdim
    /// Largest m with gldim <= m+1 <= domdim and m >= 1; infinite for
    /// semisimple algebras, nullopt when no such m exists.
    std::optional<ExtendedNat> m_auslander;
    bool one_aus_gorenstein = false;  // id_left <= 2 <= domdim
    bool dtr_selfinjective = false;   // id_left = domdim = 2
    bool tilting_exists = false;
    std::optional<ModuleSum> t_c;
    std::optional<ModuleSum> c_c;
    bool tilting_cotilting = false;  // T_C is also cotilting
};

ClassificationReport classify(const AdmissibleSequence& alg);

/// τT_C: the translates of the non-projective summands of T_C.
ModuleSum tau_TC(const AdmissibleSequence& alg);
/// Max pd over τT_C, 0 when T_C is projective. Requires the criterion.
ExtendedNat pd_tau_TC(const AdmissibleSequence& alg);

struct DropConditions {
    bool pd_tau_below = false;        // pd τT_C < d
    bool ext_vanishes = false;        // Ext^d(τT_C, S) = 0 for simples S with id S = d
    bool tau_inv_generated = false;   // τ^{-1}Σ^{d-1}S has projective-injective cover
    bool nu_injective = false;        // P_j injective where I_d(S) = I(S_j)
    bool all_equal() const {
        return pd_tau_below == ext_vanishes && ext_vanishes == tau_inv_generated && tau_inv_generated == nu_injective;
    }
};

/// Requires finite gldim d and the criterion; d = 0 gives all true.
DropConditions drop_side_conditions(const AdmissibleSequence& alg);

/// Element of the free abelian group on isoclasses of non-projective
/// indecomposables; projective classes are zero.
class K0Vector {
public:
    K0Vector() = default;
    K0Vector(const AdmissibleSequence& alg, const ModuleSum& m);

    const std::map<Uniserial, long>& coefficients() const { return coeff_; }
    void add(const AdmissibleSequence& alg, const Uniserial& u, long k);
    /// Image under the syzygy operator L.
    K0Vector syzygy(const AdmissibleSequence& alg) const;
    bool operator==(const K0Vector&) const = default;

private:
    std::map<Uniserial, long> coeff_;
};

struct ITValues {
    std::uint64_t phi = 0;
    std::uint64_t psi = 0;
};

/// Igusa-Todorov functions φ(M), ψ(M). Throws for the zero module.
ITValues it_phi_psi(const AdmissibleSequence& alg, const ModuleSum& m);

}  // namespace nakayama
