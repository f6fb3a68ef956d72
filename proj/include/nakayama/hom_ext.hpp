#pragma once

// Hom and Ext between uniserials, syzygies, and the homological dimensions
// built from them. Everything here is closed-form combinatorics on (top, len);
// see oracle.hpp for the independent linear-algebra check.

#include <optional>
#include <vector>

#include "nakayama/core.hpp"
#include "nakayama/extended_nat.hpp"

namespace nakayama {

/// The canonical map source ->> M(top(source), k) >-> target. Its image has
/// length k; the maps with fixed endpoints form a basis of Hom(source, target).
struct HomMap {
    Uniserial source;
    Uniserial target;
    int k = 1;

    bool operator==(const HomMap&) const = default;
};

int hom_dim(const AdmissibleSequence& alg, const Uniserial& u, const Uniserial& v);
int hom_dim(const AdmissibleSequence& alg, const ModuleSum& u, const ModuleSum& v);
/// Ordered by increasing k.
std::vector<HomMap> hom_basis(const AdmissibleSequence& alg, const Uniserial& u, const Uniserial& v);
HomMap identity_map(const Uniserial& u);

/// g∘f, or nullopt for the zero map. Throws std::invalid_argument unless
/// target(f) == source(g).
std::optional<HomMap> compose(const AdmissibleSequence& alg, const HomMap& f, const HomMap& g);

/// Kernel of the projective cover (nullopt when u is projective).
std::optional<Uniserial> syzygy(const AdmissibleSequence& alg, const Uniserial& u);
/// Cokernel of the injective envelope (nullopt when u is injective).
std::optional<Uniserial> cosyzygy(const AdmissibleSequence& alg, const Uniserial& u);

/// Iterated syzygy; nullopt once the zero module is reached.
std::optional<Uniserial> syzygy_power(const AdmissibleSequence& alg, const Uniserial& u, int k);
std::optional<Uniserial> cosyzygy_power(const AdmissibleSequence& alg, const Uniserial& u, int k);

ExtendedNat pd(const AdmissibleSequence& alg, const Uniserial& u);
ExtendedNat id(const AdmissibleSequence& alg, const Uniserial& u);
/// Max over summands; nullopt for the zero module.
std::optional<ExtendedNat> pd(const AdmissibleSequence& alg, const ModuleSum& m);
std::optional<ExtendedNat> id(const AdmissibleSequence& alg, const ModuleSum& m);

ExtendedNat gldim(const AdmissibleSequence& alg);

/// Number of leading projective terms in the minimal injective coresolution of u.
ExtendedNat domdim_module(const AdmissibleSequence& alg, const Uniserial& u);
ExtendedNat domdim(const AdmissibleSequence& alg);

struct GorensteinDims {
    ExtendedNat id_left;   // id of the regular left module
    ExtendedNat id_right;  // computed over the opposite algebra
    std::optional<ExtendedNat> gdim;  // nullopt: not Iwanaga-Gorenstein
};

GorensteinDims gorenstein_dim(const AdmissibleSequence& alg);

/// dim Ext^k(u, v). k = 0 is Hom.
int ext_dim(const AdmissibleSequence& alg, const Uniserial& u, const Uniserial& v, int k);
/// Summed over all pairs of summands.
int ext_dim(const AdmissibleSequence& alg, const ModuleSum& u, const ModuleSum& v, int k);

}  // namespace nakayama
