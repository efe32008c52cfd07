#pragma once

// Numerical invariants of complete m-primary ideals in a two-dimensional
// regular local ring.

#include <cstdint>

#include "cideal/point_basis.hpp"

namespace cideal {

/// l(A/I) = sum_B [B:A] r_B (r_B + 1) / 2.
std::int64_t colength(const IdealClass& i);

/// e(I) = sum_B [B:A] r_B^2. Cross-checked against
/// colength(I) + colength(adjoint(I)); throws UnitIdeal for the unit ideal.
std::int64_t multiplicity(const IdealClass& i);

/// colength(I) + colength(adjoint(I)).
std::int64_t multiplicity_from_lengths(const IdealClass& i);

/// mu(I) = ord(I) + 1. This holds for every complete m-primary ideal of a
/// two-dimensional regular local ring; it is imported, not derived here.
std::int64_t min_generators(const IdealClass& i);

/// adjoint(I) is the unit ideal or the maximal ideal.
bool minimal_multiplicity_by_adjoint(const IdealClass& i);
/// e(I) = mu(I) + l(A/I) - 2.
bool minimal_multiplicity_by_goto(const IdealClass& i);
/// Order one; or simple with basis (2,1,...,1); or a product of two order-one
/// ideals whose supports meet only at the root.
bool minimal_multiplicity_by_structure(const IdealClass& i);

/// Evaluates all three forms and throws RouteDisagreement if they differ.
bool has_minimal_multiplicity(const IdealClass& i);

}  // namespace cideal
