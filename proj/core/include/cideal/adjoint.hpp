#pragma once

// Adjoint (multiplier) ideals of complete ideals and the adjoint-power test.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cideal/point_basis.hpp"

namespace cideal {

/// Point basis max{r_B - 1, 0}.
IdealClass adjoint(const IdealClass& i);

/// r-fold adjoint.
IdealClass iterated_adjoint(const IdealClass& i, std::int64_t r);

/// One point where n * Excess_B(J) + 1 >= sum_{B<C, C in Supp J} [C:B] fails.
struct AdjointPowerViolation {
  PointId point;
  std::int64_t lhs = 0;  ///< n * Excess_B(J) + 1
  std::int64_t rhs = 0;  ///< weighted count of proximate support points
};

std::vector<AdjointPowerViolation> adjoint_power_violations(const IdealClass& j, std::int64_t n);

/// Whether J^n is the adjoint of some ideal. Throws NotPrimary for the unit ideal.
bool is_adjoint_power(const IdealClass& j, std::int64_t n);

/// The unique complete I with Supp I = Supp J and adjoint(I) = J^n.
/// Throws NotAdjointPower when no such ideal exists.
IdealClass adjoint_source(const IdealClass& j, std::int64_t n);

/// Smallest n >= 1 with J^n an adjoint ideal; empty when none exists.
std::optional<std::int64_t> min_adjoint_exponent(const IdealClass& j);

/// (adjoint(I^n), I^{n-1} * adjoint(I)).
std::pair<IdealClass, IdealClass> briancon_skoda(const IdealClass& i, std::int64_t n);

/// Compares adjoint_source(J, n + p) with J^p * adjoint_source(J, n).
bool quotient_identity_check(const IdealClass& j, std::int64_t n, std::int64_t p);

}  // namespace cideal
