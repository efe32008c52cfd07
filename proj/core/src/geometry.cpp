#include "cideal/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "cideal/adjoint.hpp"
#include "cideal/errors.hpp"

namespace cideal {

ExceptionalLattice::ExceptionalLattice(ConstellationPtr c, std::vector<PointId> support)
    : constellation_(std::move(c)), points_(std::move(support)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  index_.assign(constellation_->size(), std::nullopt);
  for (std::size_t i = 0; i < points_.size(); ++i) index_.at(points_[i].index) = i;
  for (auto p : points_) {
    if (auto parent = constellation_->parent(p); parent && !index_[parent->index]) {
      throw Error(ErrorCode::InvalidArgument, "lattice support is not ancestor-closed at '" +
                                                  constellation_->name(p) + "'");
    }
  }
  proximates_.resize(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (auto q : constellation_->proximate_points(points_[i])) {
      if (index_[q.index]) proximates_[i].push_back(*index_[q.index]);
    }
  }
}

ExceptionalLattice ExceptionalLattice::full(ConstellationPtr c) {
  auto pts = c->points();
  return ExceptionalLattice(std::move(c), std::move(pts));
}

ExceptionalLattice ExceptionalLattice::of_support(const IdealClass& j) {
  return ExceptionalLattice(j.constellation_ptr(), j.support());
}

std::optional<std::size_t> ExceptionalLattice::index_of(PointId p) const {
  if (!constellation_->contains(p)) return std::nullopt;
  return index_[p.index];
}

std::size_t ExceptionalLattice::require_index(PointId p) const {
  auto i = index_of(p);
  if (!i) throw Error(ErrorCode::UnknownPoint, "point is not in the lattice support");
  return *i;
}

std::int64_t ExceptionalLattice::base_degree(std::size_t i) const {
  return constellation_->degree_over_base(points_[i]);
}

namespace {

void require_size(const ExceptionalLattice& l, std::size_t n) {
  if (n != l.size()) throw Error(ErrorCode::InvalidArgument, "divisor does not match lattice size");
}

}  // namespace

DivisorE to_strict_basis(const ExceptionalLattice& l, const DivisorEStar& d) {
  require_size(l, d.coeffs.size());
  DivisorE out{d.coeffs};
  // d*_i = d_i - sum_{j : i proximate to j} d_j; forward substitution.
  for (std::size_t j = 0; j < l.size(); ++j) {
    for (auto i : l.proximates(j)) out.coeffs[i] = checked_add(out.coeffs[i], out.coeffs[j]);
  }
  return out;
}

DivisorEStar to_total_basis(const ExceptionalLattice& l, const DivisorE& d) {
  require_size(l, d.coeffs.size());
  DivisorEStar out{d.coeffs};
  for (std::size_t j = 0; j < l.size(); ++j) {
    for (auto i : l.proximates(j)) out.coeffs[i] = checked_add(out.coeffs[i], -d.coeffs[j]);
  }
  return out;
}

std::int64_t intersection(const ExceptionalLattice& l, const DivisorEStar& u, const DivisorEStar& v) {
  require_size(l, u.coeffs.size());
  require_size(l, v.coeffs.size());
  std::int64_t total = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    total = checked_add(total, -checked_mul(l.base_degree(i), checked_mul(u.coeffs[i], v.coeffs[i])));
  }
  return total;
}

std::int64_t intersection(const ExceptionalLattice& l, const DivisorE& u, const DivisorE& v) {
  return intersection(l, to_total_basis(l, u), to_total_basis(l, v));
}

DivisorE exceptional_curve(const ExceptionalLattice& l, PointId b) {
  DivisorE e{std::vector<std::int64_t>(l.size(), 0)};
  e.coeffs[l.require_index(b)] = 1;
  return e;
}

DivisorEStar divisor_of(const ExceptionalLattice& l, const IdealClass& j) {
  DivisorEStar d{std::vector<std::int64_t>(l.size(), 0)};
  for (std::size_t i = 0; i < l.size(); ++i) d.coeffs[i] = j[l.points()[i]];
  for (auto p : j.support()) {
    if (!l.index_of(p)) throw Error(ErrorCode::InvalidArgument, "ideal support exceeds lattice support");
  }
  return d;
}

std::int64_t self_intersection(const ExceptionalLattice& l, PointId b) {
  auto e = exceptional_curve(l, b);
  return intersection(l, e, e);
}

std::int64_t self_intersection_formula(const ExceptionalLattice& l, PointId b) {
  auto i = l.require_index(b);
  const auto& c = l.constellation();
  std::int64_t sum = 0;
  for (auto k : l.proximates(i)) sum = checked_add(sum, c.relative_degree(b, l.points()[k]));
  return checked_mul(l.base_degree(i), -1 - sum);
}

DivisorEStar canonical_divisor(const ExceptionalLattice& l) {
  return DivisorEStar{std::vector<std::int64_t>(l.size(), 1)};
}

std::int64_t canonical_degree(const ExceptionalLattice& l, PointId b) {
  return intersection(l, canonical_divisor(l), to_total_basis(l, exceptional_curve(l, b)));
}

std::int64_t canonical_degree_formula(const ExceptionalLattice& l, PointId b) {
  auto i = l.require_index(b);
  std::int64_t sum = -l.base_degree(i);
  for (auto k : l.proximates(i)) sum = checked_add(sum, l.base_degree(k));
  return sum;
}

IntMatrix intersection_matrix(const ExceptionalLattice& l) {
  IntMatrix m(l.size(), l.size());
  std::vector<DivisorEStar> curves;
  curves.reserve(l.size());
  for (auto p : l.points()) curves.push_back(to_total_basis(l, exceptional_curve(l, p)));
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = 0; j < l.size(); ++j) m(i, j) = intersection(l, curves[i], curves[j]);
  }
  return m;
}

bool is_antinef(const ExceptionalLattice& l, const DivisorEStar& d) {
  for (auto p : l.points()) {
    if (intersection(l, d, to_total_basis(l, exceptional_curve(l, p))) > 0) return false;
  }
  return true;
}

bool geometric_adjoint_condition(const IdealClass& j, std::int64_t n) {
  if (j.is_unit()) throw Error(ErrorCode::NotPrimary, "the unit ideal is not m-primary");
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "power must be positive");
  auto l = ExceptionalLattice::of_support(j);
  auto f = divisor_of(l, j);
  for (std::size_t i = 0; i < l.size(); ++i) {
    auto b = l.points()[i];
    auto eb = to_total_basis(l, exceptional_curve(l, b));
    auto lhs = intersection(l, eb, eb);
    auto rhs = checked_add(-2 * l.base_degree(i), checked_mul(n, intersection(l, f, eb)));
    if (lhs < rhs) return false;
  }
  return true;
}

std::string GorensteinCulprit::describe(const Constellation& c) const {
  std::ostringstream out;
  out << c.name(point) << ": ";
  switch (proximate_support.size()) {
    case 0: out << "no proximate support points"; break;
    case 1: out << "proximate support point " << c.name(proximate_support.front()) << " has degree " << weight; break;
    case 2: out << "two proximate support points"; break;
    default: out << proximate_support.size() << " proximate support points"; break;
  }
  return out.str();
}

std::vector<GorensteinCulprit> gorenstein_culprits(const IdealClass& j) {
  if (j.is_unit()) throw Error(ErrorCode::NotPrimary, "the unit ideal is not m-primary");
  const auto& c = j.constellation();
  auto e = excess(j);
  std::vector<GorensteinCulprit> out;
  for (auto b : j.support()) {
    if (e[b] != 0) continue;
    GorensteinCulprit culprit{b, {}, 0};
    for (auto p : c.proximate_points(b)) {
      if (j[p] > 0) {
        culprit.proximate_support.push_back(p);
        culprit.weight += c.relative_degree(b, p);
      }
    }
    if (culprit.proximate_support.size() != 1 || culprit.weight != 1) out.push_back(std::move(culprit));
  }
  return out;
}

bool gorenstein_by_self_intersection(const IdealClass& j) {
  auto l = ExceptionalLattice::of_support(j);
  auto e = excess(j);
  for (std::size_t i = 0; i < l.size(); ++i) {
    auto b = l.points()[i];
    if (e[b] == 0 && self_intersection(l, b) != -2 * l.base_degree(i)) return false;
  }
  return true;
}

bool gorenstein_by_canonical_degree(const IdealClass& j) {
  auto l = ExceptionalLattice::of_support(j);
  auto e = excess(j);
  for (auto b : l.points()) {
    if (e[b] == 0 && canonical_degree(l, b) != 0) return false;
  }
  return true;
}

namespace {

std::vector<PointId> positive_excess_points(const IdealClass& i) {
  std::vector<PointId> out;
  for (const auto& f : factorize(i)) out.push_back(f.point);
  return out;
}

bool rees_points_unchanged(const IdealClass& j) {
  return positive_excess_points(product(j, adjoint(j))) == positive_excess_points(j);
}

}  // namespace

bool is_blowup_gorenstein(const IdealClass& j) {
  bool direct = gorenstein_culprits(j).empty();
  bool by_self = gorenstein_by_self_intersection(j);
  bool by_canonical = gorenstein_by_canonical_degree(j);
  bool by_exponent = min_adjoint_exponent(j).has_value();
  if (direct != by_self || direct != by_canonical || direct != by_exponent) {
    throw RouteDisagreement("Gorenstein routes disagree (proximity " + std::to_string(direct) + ", self-intersection " +
                            std::to_string(by_self) + ", canonical " + std::to_string(by_canonical) +
                            ", adjoint exponent " + std::to_string(by_exponent) + ")");
  }
  return direct;
}

IdealClass gorensteinfication(const IdealClass& j) {
  if (j.is_unit()) throw Error(ErrorCode::NotPrimary, "the unit ideal is not m-primary");
  auto z = product(j, adjoint(j));
  if (!(z == adjoint(power(j, 2)))) throw RouteDisagreement("J * adjoint(J) differs from adjoint(J^2)");
  if (!is_blowup_gorenstein(z)) throw RouteDisagreement("blowup of J * adjoint(J) is not Gorenstein");
  return z;
}

bool canonical_model_is_trivial(const IdealClass& j) {
  bool gorenstein = is_blowup_gorenstein(j);
  bool witness = rees_points_unchanged(j);
  if (gorenstein != witness) {
    throw RouteDisagreement("Rees points of J * adjoint(J) disagree with the Gorenstein test");
  }
  return gorenstein;
}

}  // namespace cideal
