#include "cideal/point_basis.hpp"

#include <algorithm>
#include <string>

#include "cideal/errors.hpp"

namespace cideal {

namespace {

bool same_constellation(const ConstellationPtr& a, const ConstellationPtr& b) {
  return a == b || *a == *b;
}

std::vector<std::int64_t> excess_values(const Constellation& c, std::span<const std::int64_t> r) {
  std::vector<std::int64_t> out(r.begin(), r.end());
  for (auto b : c.points()) {
    for (auto p : c.proximate_points(b)) {
      out[b.index] = checked_add(out[b.index], -checked_mul(c.relative_degree(b, p), r[p.index]));
    }
  }
  return out;
}

}  // namespace

PointBasis::PointBasis(ConstellationPtr c) : constellation_(std::move(c)) {
  if (!constellation_) throw Error(ErrorCode::InvalidArgument, "null constellation");
  values_.assign(constellation_->size(), 0);
}

PointBasis::PointBasis(ConstellationPtr c, std::vector<std::int64_t> values)
    : constellation_(std::move(c)), values_(std::move(values)) {
  if (!constellation_) throw Error(ErrorCode::InvalidArgument, "null constellation");
  if (values_.size() != constellation_->size()) {
    throw Error(ErrorCode::InvalidArgument, "basis has " + std::to_string(values_.size()) +
                                                " entries for " + std::to_string(constellation_->size()) +
                                                " points");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0) {
      throw Error(ErrorCode::NegativeEntry,
                  "negative multiplicity at '" + constellation_->name(PointId{static_cast<std::uint32_t>(i)}) + "'");
    }
  }
}

std::vector<PointId> PointBasis::support() const {
  std::vector<PointId> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > 0) out.push_back(PointId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

bool PointBasis::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](auto v) { return v == 0; });
}

bool operator==(const PointBasis& a, const PointBasis& b) {
  return a.values_ == b.values_ && same_constellation(a.constellation_, b.constellation_);
}

ExcessVector::ExcessVector(ConstellationPtr c, std::vector<std::int64_t> values)
    : constellation_(std::move(c)), values_(std::move(values)) {
  if (!constellation_ || values_.size() != constellation_->size()) {
    throw Error(ErrorCode::InvalidArgument, "excess vector does not match constellation");
  }
}

bool ExcessVector::is_nonnegative() const {
  return std::all_of(values_.begin(), values_.end(), [](auto v) { return v >= 0; });
}

bool operator==(const ExcessVector& a, const ExcessVector& b) {
  return a.values_ == b.values_ && same_constellation(a.constellation_, b.constellation_);
}

IdealClass::IdealClass(PointBasis basis) : basis_(std::move(basis)) {
  auto e = excess_values(basis_.constellation(), basis_.values());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) {
      throw Error(ErrorCode::NotComplete,
                  "proximity inequality fails at '" +
                      basis_.constellation().name(PointId{static_cast<std::uint32_t>(i)}) + "' (excess " +
                      std::to_string(e[i]) + ")");
    }
  }
}

IdealClass IdealClass::unit(ConstellationPtr c) { return IdealClass(PointBasis(std::move(c))); }

void require_same_constellation(const PointBasis& a, const PointBasis& b) {
  if (!same_constellation(a.constellation_ptr(), b.constellation_ptr())) {
    throw Error(ErrorCode::ConstellationMismatch, "operands live on different constellations");
  }
}

ExcessVector excess(const PointBasis& v) {
  return ExcessVector(v.constellation_ptr(), excess_values(v.constellation(), v.values()));
}

bool is_complete(const PointBasis& v) { return excess(v).is_nonnegative(); }

IdealClass from_excess(const ExcessVector& e) {
  const auto& c = e.constellation();
  std::vector<std::int64_t> r(c.size(), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (e.values()[i] < 0) {
      throw Error(ErrorCode::NegativeExcess,
                  "negative excess at '" + c.name(PointId{static_cast<std::uint32_t>(i)}) + "'");
    }
  }
  // Leaf-upward back substitution; proximate points always come later.
  for (std::size_t k = c.size(); k-- > 0;) {
    PointId b{static_cast<std::uint32_t>(k)};
    std::int64_t value = e[b];
    for (auto p : c.proximate_points(b)) value = checked_add(value, checked_mul(c.relative_degree(b, p), r[p.index]));
    r[k] = value;
  }
  return IdealClass(PointBasis(e.constellation_ptr(), std::move(r)));
}

IdealClass from_excess(ConstellationPtr c, std::vector<std::int64_t> e) {
  return from_excess(ExcessVector(std::move(c), std::move(e)));
}

IdealClass simple_ideal(ConstellationPtr c, PointId b) {
  if (!c->contains(b)) throw Error(ErrorCode::UnknownPoint, "point index " + std::to_string(b.index));
  std::vector<std::int64_t> e(c->size(), 0);
  e[b.index] = 1;
  return from_excess(std::move(c), std::move(e));
}

IdealClass maximal_ideal(ConstellationPtr c) { return simple_ideal(std::move(c), Constellation::root()); }

IdealClass product(const IdealClass& i, const IdealClass& j) {
  require_same_constellation(i.basis(), j.basis());
  std::vector<std::int64_t> sum(i.basis().size());
  for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = checked_add(i.basis().values()[k], j.basis().values()[k]);
  return IdealClass(PointBasis(i.constellation_ptr(), std::move(sum)));
}

IdealClass power(const IdealClass& i, std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  auto out = IdealClass::unit(i.constellation_ptr());
  for (std::int64_t k = 0; k < n; ++k) out = product(out, i);
  return out;
}

SimpleFactorization factorize(const IdealClass& i) {
  SimpleFactorization out;
  auto e = excess(i);
  for (auto b : i.constellation().points()) {
    if (e[b] > 0) out.push_back({b, e[b]});
  }
  return out;
}

IdealClass expand(ConstellationPtr c, const SimpleFactorization& f) {
  auto out = IdealClass::unit(c);
  for (const auto& factor : f) {
    if (factor.exponent <= 0) throw Error(ErrorCode::InvalidArgument, "factor exponents must be positive");
    out = product(out, power(simple_ideal(c, factor.point), factor.exponent));
  }
  return out;
}

bool is_simple(const IdealClass& i) {
  auto f = factorize(i);
  return f.size() == 1 && f.front().exponent == 1;
}

TransformResult transform(const IdealClass& i, PointId b) {
  const auto& c = i.constellation();
  if (!c.contains(b)) throw Error(ErrorCode::UnknownPoint, "point index " + std::to_string(b.index));
  std::vector<PointId> embedding;
  auto sub = share(c.subtree(b, embedding));
  std::vector<std::int64_t> r(embedding.size());
  for (std::size_t k = 0; k < embedding.size(); ++k) r[k] = i[embedding[k]];
  IdealClass ideal(PointBasis(sub, std::move(r)));
  return TransformResult{sub, std::move(ideal), std::move(embedding)};
}

std::int64_t order(const IdealClass& i) { return i[Constellation::root()]; }

std::vector<std::int64_t> maximal_ideal_values(const Constellation& c, PointId b) {
  auto chain = c.chain(b);
  std::vector<std::int64_t> v(chain.size(), 0);
  v.back() = 1;
  for (std::size_t k = chain.size() - 1; k-- > 0;) {
    for (std::size_t j = k + 1; j < chain.size(); ++j) {
      auto prox = c.proximity_set(chain[j]);
      if (std::find(prox.begin(), prox.end(), chain[k]) != prox.end()) v[k] = checked_add(v[k], v[j]);
    }
  }
  return v;
}

std::int64_t divisorial_valuation(PointId b, const IdealClass& i) {
  const auto& c = i.constellation();
  if (!c.contains(b)) throw Error(ErrorCode::UnknownPoint, "point index " + std::to_string(b.index));
  auto chain = c.chain(b);
  auto v = maximal_ideal_values(c, b);
  std::int64_t total = 0;
  for (std::size_t k = 0; k < chain.size(); ++k) total = checked_add(total, checked_mul(i[chain[k]], v[k]));
  return total;
}

IdealClass unloading(const PointBasis& v, std::span<const PointId> sweep_order) {
  const auto& c = v.constellation();
  std::vector<std::int64_t> r(v.values().begin(), v.values().end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto b : sweep_order) {
      std::int64_t need = 0;
      for (auto p : c.proximate_points(b)) need = checked_add(need, checked_mul(c.relative_degree(b, p), r[p.index]));
      if (r[b.index] < need) {
        r[b.index] = need;
        changed = true;
      }
    }
  }
  return IdealClass(PointBasis(v.constellation_ptr(), std::move(r)));
}

IdealClass unloading(const PointBasis& v) {
  auto order = v.constellation().points();
  std::reverse(order.begin(), order.end());
  return unloading(v, order);
}

std::optional<IdealClass> divides(const IdealClass& i, const IdealClass& j) {
  require_same_constellation(i.basis(), j.basis());
  auto ei = excess(i);
  auto ej = excess(j);
  std::vector<std::int64_t> diff(ei.values().size());
  for (std::size_t k = 0; k < diff.size(); ++k) {
    diff[k] = ej.values()[k] - ei.values()[k];
    if (diff[k] < 0) return std::nullopt;
  }
  auto q = from_excess(i.constellation_ptr(), std::move(diff));
  if (!(product(i, q) == j)) throw RouteDisagreement("quotient times divisor does not reproduce the dividend");
  return q;
}

std::optional<IdealClass> divides_by_subtraction(const IdealClass& i, const IdealClass& j) {
  require_same_constellation(i.basis(), j.basis());
  std::vector<std::int64_t> diff(i.basis().size());
  for (std::size_t k = 0; k < diff.size(); ++k) {
    diff[k] = j.basis().values()[k] - i.basis().values()[k];
    if (diff[k] < 0) return std::nullopt;
  }
  PointBasis q(i.constellation_ptr(), std::move(diff));
  if (!is_complete(q)) return std::nullopt;
  return IdealClass(std::move(q));
}

bool is_contained_in(const IdealClass& i, const IdealClass& j) {
  require_same_constellation(i.basis(), j.basis());
  for (const auto& f : factorize(j)) {
    if (divisorial_valuation(f.point, i) < divisorial_valuation(f.point, j)) return false;
  }
  return true;
}

std::int64_t supported_proximity_weight(const IdealClass& j, PointId b) {
  const auto& c = j.constellation();
  std::int64_t total = 0;
  for (auto p : c.proximate_points(b)) {
    if (j[p] > 0) total = checked_add(total, c.relative_degree(b, p));
  }
  return total;
}

}  // namespace cideal
