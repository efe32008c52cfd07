#include "cideal/invariants.hpp"

#include <algorithm>

#include "cideal/adjoint.hpp"
#include "cideal/errors.hpp"

namespace cideal {

namespace {

void require_nonunit(const IdealClass& i) {
  if (i.is_unit()) throw Error(ErrorCode::UnitIdeal, "invariant undefined for the unit ideal");
}

}  // namespace

std::int64_t colength(const IdealClass& i) {
  const auto& c = i.constellation();
  std::int64_t total = 0;
  for (auto b : i.support()) {
    auto r = i[b];
    total = checked_add(total, checked_mul(c.degree_over_base(b), checked_mul(r, r + 1) / 2));
  }
  return total;
}

std::int64_t multiplicity_from_lengths(const IdealClass& i) {
  return checked_add(colength(i), colength(adjoint(i)));
}

std::int64_t multiplicity(const IdealClass& i) {
  require_nonunit(i);
  const auto& c = i.constellation();
  std::int64_t total = 0;
  for (auto b : i.support()) total = checked_add(total, checked_mul(c.degree_over_base(b), checked_mul(i[b], i[b])));
  if (total != multiplicity_from_lengths(i)) {
    throw RouteDisagreement("multiplicity from the point basis differs from the length identity");
  }
  return total;
}

std::int64_t min_generators(const IdealClass& i) {
  require_nonunit(i);
  return order(i) + 1;
}

bool minimal_multiplicity_by_adjoint(const IdealClass& i) {
  require_nonunit(i);
  auto a = adjoint(i);
  return a.is_unit() || a == maximal_ideal(i.constellation_ptr());
}

bool minimal_multiplicity_by_goto(const IdealClass& i) {
  return multiplicity(i) == min_generators(i) + colength(i) - 2;
}

bool minimal_multiplicity_by_structure(const IdealClass& i) {
  require_nonunit(i);
  const auto root = Constellation::root();
  if (order(i) == 1) return true;

  auto factors = factorize(i);
  if (factors.size() == 1 && factors.front().exponent == 1) {
    if (i[root] != 2) return false;
    auto support = i.support();
    return std::all_of(support.begin(), support.end(), [&](PointId b) { return b == root || i[b] == 1; });
  }

  // Two order-one factors: either two distinct simple factors or one squared.
  std::vector<PointId> parts;
  for (const auto& f : factors) {
    for (std::int64_t k = 0; k < f.exponent; ++k) parts.push_back(f.point);
  }
  if (parts.size() != 2) return false;
  auto first = simple_ideal(i.constellation_ptr(), parts[0]);
  auto second = simple_ideal(i.constellation_ptr(), parts[1]);
  if (order(first) != 1 || order(second) != 1) return false;
  for (auto b : first.support()) {
    if (b != root && second[b] > 0) return false;
  }
  return true;
}

bool has_minimal_multiplicity(const IdealClass& i) {
  bool by_adjoint = minimal_multiplicity_by_adjoint(i);
  bool by_goto = minimal_multiplicity_by_goto(i);
  bool by_structure = minimal_multiplicity_by_structure(i);
  if (by_adjoint != by_goto || by_adjoint != by_structure) {
    throw RouteDisagreement("minimal multiplicity routes disagree");
  }
  return by_adjoint;
}

}  // namespace cideal
