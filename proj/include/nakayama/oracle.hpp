#pragma once

// Independent check of hom_dim / ext_dim. Modules are realised as quiver
// representations and Hom is solved as a linear system, so nothing here uses
// the congruence formulas.

#include <vector>

#include "nakayama/core.hpp"
#include "nakayama/exact.hpp"

namespace nakayama {

/// A representation of the Nakayama quiver. Each vertex has at most one
/// outgoing arrow (i -> i-1), so all arrow maps fit into one operator of
/// degree -1 on the total space.
struct Representation {
    std::vector<int> vertex;  // vertex of each basis vector
    Matrix arrows;            // total arrow operator, dim x dim
    std::size_t dim() const { return vertex.size(); }
};

/// M(top, len) with basis b_t at vertex top - t; the arrow sends b_t to b_{t+1}.
Representation representation(const AdmissibleSequence& alg, const Uniserial& u);

/// Degree-preserving F with F·A_m = A_n·F, as flattened dim(n) x dim(m) matrices.
std::vector<Matrix> intertwiners(const Representation& m, const Representation& n);

int oracle_hom_dim(const AdmissibleSequence& alg, const Uniserial& u, const Uniserial& v);
int oracle_ext1_dim(const AdmissibleSequence& alg, const Uniserial& u, const Uniserial& v);

}  // namespace nakayama
