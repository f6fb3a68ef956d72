#pragma once

// JSON forms of reports and structure-constant algebras. Dimensions are
// integers or the string "inf"; modules use the M(i,l) text form.

#include <json.hpp>

#include "nakayama/endo.hpp"
#include "nakayama/tilting.hpp"

namespace nakayama {

nlohmann::ordered_json dimension_json(const ExtendedNat& d);
nlohmann::ordered_json dimension_json(const BoundedDim& d);
nlohmann::ordered_json module_json(const ModuleSum& m);

/// Flat object with the report keys; gdim is "not-Gorenstein" when undefined
/// and m_auslander is null when no m qualifies.
nlohmann::ordered_json to_json(const ClassificationReport& r);

/// {dim, idempotents, basis: [[a,b,k],...], table: [[i,j,target,coeff],...]}
nlohmann::ordered_json to_json(const StructureConstantAlgebra& a);

nlohmann::ordered_json to_json(const Resolution& r);

}  // namespace nakayama
