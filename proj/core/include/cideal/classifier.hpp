#pragma once

// Classification of adjoint ideals with few simple factors.
//
// Every predicate here is computed along at least two independent routes. The
// routes must agree; a disagreement throws RouteDisagreement. All predicates
// require a constellation whose residue degrees are all 1 (algebraically
// closed residue field) and throw NonTrivialDegrees otherwise.

#include <cstdint>
#include <string>
#include <vector>

#include "cideal/point_basis.hpp"

namespace cideal {

/// Simple I: order(I) = 1, cross-checked against is_adjoint_power(I, n) for n = 1..3.
bool simple_adjoint_test(const IdealClass& i);

enum class SupportNesting { Equal, FirstInSecond, SecondInFirst, Incomparable };
std::string_view to_string(SupportNesting n);

/// Set comparison of the supports of two simple ideals.
SupportNesting support_nesting(const IdealClass& i, const IdealClass& j);

/// Verdicts of the equivalent characterizations of "I^p J^q is an adjoint
/// ideal and Supp I is inside Supp J" for simple I != J.
struct TwoFactorReport {
  std::int64_t p = 0;
  std::int64_t k = 0;  ///< ord(J)
  bool exponent_ok = false;    ///< p + 1 >= k
  bool nested = false;         ///< Supp I inside Supp J
  bool shape_ok = false;       ///< B(J) = (k,...,k,1,...,1), k repeated #Supp I times
  bool order_one = false;      ///< ord(I) = 1
  bool adjoint_is_power = false;  ///< adjoint(J) = I^(k-1)
  bool contained = false;         ///< J inside I^k
  bool length_identity = false;   ///< e(J) - l(A/J) = l(A/I^(k-1))
  bool by_structure = false;      ///< exponent_ok && nested && shape_ok
  bool by_adjoint = false;        ///< exponent_ok && order_one && adjoint_is_power
  bool by_lengths = false;        ///< exponent_ok && order_one && contained && length_identity
  std::vector<std::int64_t> sampled_q;
  bool by_direct = false;         ///< I^p J^q adjoint and nested, for every sampled q
  bool verdict = false;
};

/// Evaluates every route; throws RouteDisagreement unless all agree.
/// Errors: NotSimple, EqualIdeals, NonTrivialDegrees, InvalidArgument (p < 1).
TwoFactorReport two_factor_adjoint_test(const IdealClass& i, const IdealClass& j, std::int64_t p);

/// Simple I != J of order one: I and J are comparable by inclusion. Cross-checked
/// against comparable point bases, nested supports, and adjointness of
/// (I^p J^q)^n for sampled p, q, n.
bool order_one_pair_test(const IdealClass& i, const IdealClass& j);

struct MultiplicityBoundReport {
  std::int64_t k = 0;
  std::int64_t s = 0;
  std::int64_t multiplicity = 0;
  std::int64_t bound = 0;  ///< k^2 s + k
  bool conditions_hold = false;  ///< the two-factor test with the order-one companion
  bool bound_holds = false;
  bool extremal = false;        ///< multiplicity == bound
  bool extremal_shape = false;  ///< B(J) = (k x s, 1 x k) with the (x^k, y^{ks+1}) proximities
};

/// J simple of order k > 1; the companion is the order-one simple ideal whose
/// support is the first s points of chain(J).
MultiplicityBoundReport multiplicity_bound_check(const IdealClass& j, std::int64_t s);

/// I of minimal multiplicity: I is an adjoint ideal, cross-checked against
/// "order one or m divides I". Throws NotMinimalMultiplicity otherwise.
bool minimal_multiplicity_adjoint_test(const IdealClass& i);

/// Simple I: minimal multiplicity, cross-checked against "order <= 2 and
/// m^p I^q adjoint" for the given and sampled (p, q).
bool simple_minimal_multiplicity_test(const IdealClass& i, std::int64_t p, std::int64_t q);

}  // namespace cideal
