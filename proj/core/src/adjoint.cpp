#include "cideal/adjoint.hpp"

#include <algorithm>
#include <string>

#include "cideal/errors.hpp"

namespace cideal {

namespace {

void require_primary(const IdealClass& j) {
  if (j.is_unit()) throw Error(ErrorCode::NotPrimary, "the unit ideal is not m-primary");
}

void require_positive(std::int64_t n, const char* what) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be positive");
}

}  // namespace

IdealClass adjoint(const IdealClass& i) {
  std::vector<std::int64_t> r(i.basis().values().begin(), i.basis().values().end());
  for (auto& v : r) v = std::max<std::int64_t>(v - 1, 0);
  return IdealClass(PointBasis(i.constellation_ptr(), std::move(r)));
}

IdealClass iterated_adjoint(const IdealClass& i, std::int64_t r) {
  require_positive(r, "iteration count");
  auto out = i;
  for (std::int64_t k = 0; k < r; ++k) out = adjoint(out);
  return out;
}

std::vector<AdjointPowerViolation> adjoint_power_violations(const IdealClass& j, std::int64_t n) {
  require_primary(j);
  require_positive(n, "power");
  std::vector<AdjointPowerViolation> out;
  auto e = excess(j);
  for (auto b : j.support()) {
    auto lhs = checked_add(checked_mul(n, e[b]), 1);
    auto rhs = supported_proximity_weight(j, b);
    if (lhs < rhs) out.push_back({b, lhs, rhs});
  }
  return out;
}

bool is_adjoint_power(const IdealClass& j, std::int64_t n) { return adjoint_power_violations(j, n).empty(); }

IdealClass adjoint_source(const IdealClass& j, std::int64_t n) {
  if (!is_adjoint_power(j, n)) {
    throw Error(ErrorCode::NotAdjointPower, "J^" + std::to_string(n) + " is not an adjoint ideal");
  }
  std::vector<std::int64_t> r(j.basis().size(), 0);
  for (auto b : j.support()) r[b.index] = checked_add(checked_mul(n, j[b]), 1);
  IdealClass source(PointBasis(j.constellation_ptr(), std::move(r)));
  if (!(adjoint(source) == power(j, n))) {
    throw RouteDisagreement("adjoint of the source differs from J^n");
  }
  if (!(product(source, adjoint(j)) == power(j, n + 1))) {
    throw RouteDisagreement("source times adjoint(J) differs from J^(n+1)");
  }
  return source;
}

std::optional<std::int64_t> min_adjoint_exponent(const IdealClass& j) {
  require_primary(j);
  auto e = excess(j);
  std::int64_t best = 1;
  for (auto b : j.support()) {
    auto deficiency = supported_proximity_weight(j, b) - 1;
    if (deficiency <= 0) continue;
    if (e[b] == 0) return std::nullopt;
    best = std::max(best, (deficiency + e[b] - 1) / e[b]);
  }
  return best;
}

std::pair<IdealClass, IdealClass> briancon_skoda(const IdealClass& i, std::int64_t n) {
  require_positive(n, "power");
  return {adjoint(power(i, n)), product(power(i, n - 1), adjoint(i))};
}

bool quotient_identity_check(const IdealClass& j, std::int64_t n, std::int64_t p) {
  if (p < 0) throw Error(ErrorCode::InvalidArgument, "p must be nonnegative");
  if (!is_adjoint_power(j, n)) {
    throw Error(ErrorCode::NotAdjointPower, "J^" + std::to_string(n) + " is not an adjoint ideal");
  }
  return adjoint_source(j, n + p) == product(power(j, p), adjoint_source(j, n));
}

}  // namespace cideal
