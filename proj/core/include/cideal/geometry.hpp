#pragma once

// Intersection theory on the exceptional lattice of a resolution.
//
// The lattice over an ancestor-closed set S of points has two bases: total
// transforms E*_B and strict transforms E_B, related by
//   E_B = E*_B - sum_{C in S, B < C} E*_C.
// The intersection form is diagonal on total transforms,
//   E*_B . E*_C = -delta_BC [B:A].
// A point basis is the E*-coordinate vector of the divisor of its ideal.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cideal/point_basis.hpp"

namespace cideal {

/// Coefficients in the strict-transform basis (E_B).
struct DivisorE {
  std::vector<std::int64_t> coeffs;
  friend bool operator==(const DivisorE&, const DivisorE&) = default;
};

/// Coefficients in the total-transform basis (E*_B).
struct DivisorEStar {
  std::vector<std::int64_t> coeffs;
  friend bool operator==(const DivisorEStar&, const DivisorEStar&) = default;
};

class ExceptionalLattice {
 public:
  /// `support` must be ancestor-closed; it is sorted ancestor-first.
  ExceptionalLattice(ConstellationPtr c, std::vector<PointId> support);
  static ExceptionalLattice full(ConstellationPtr c);
  /// Lattice over Supp J.
  static ExceptionalLattice of_support(const IdealClass& j);

  const Constellation& constellation() const { return *constellation_; }
  std::span<const PointId> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::optional<std::size_t> index_of(PointId p) const;
  std::size_t require_index(PointId p) const;

  /// Indices (into points()) of the points in S proximate to the i-th point.
  std::span<const std::size_t> proximates(std::size_t i) const { return proximates_[i]; }
  /// [B:A] of the i-th point.
  std::int64_t base_degree(std::size_t i) const;

 private:
  ConstellationPtr constellation_;
  std::vector<PointId> points_;
  std::vector<std::optional<std::size_t>> index_;
  std::vector<std::vector<std::size_t>> proximates_;
};

DivisorE to_strict_basis(const ExceptionalLattice& l, const DivisorEStar& d);
DivisorEStar to_total_basis(const ExceptionalLattice& l, const DivisorE& d);

std::int64_t intersection(const ExceptionalLattice& l, const DivisorEStar& u, const DivisorEStar& v);
std::int64_t intersection(const ExceptionalLattice& l, const DivisorE& u, const DivisorE& v);

/// E_B as a divisor (unit vector in the strict basis).
DivisorE exceptional_curve(const ExceptionalLattice& l, PointId b);
/// E* coordinates of the divisor of J restricted to the lattice support.
DivisorEStar divisor_of(const ExceptionalLattice& l, const IdealClass& j);

/// E_B^2 from the bilinear form.
std::int64_t self_intersection(const ExceptionalLattice& l, PointId b);
/// E_B^2 from the closed formula [B:A](-1 - sum_{C in S, B < C} [C:B]).
std::int64_t self_intersection_formula(const ExceptionalLattice& l, PointId b);

/// K_X = sum of all E*_B.
DivisorEStar canonical_divisor(const ExceptionalLattice& l);
/// K_X . E_B from the bilinear form.
std::int64_t canonical_degree(const ExceptionalLattice& l, PointId b);
/// K_X . E_B = sum_{C in S, B < C} [C:A] - [B:A].
std::int64_t canonical_degree_formula(const ExceptionalLattice& l, PointId b);

/// Gram matrix of the strict transforms E_B, rows in lattice order.
IntMatrix intersection_matrix(const ExceptionalLattice& l);

/// D . E_B <= 0 for every B in the lattice.
bool is_antinef(const ExceptionalLattice& l, const DivisorEStar& d);

/// E_B^2 >= -2[B:A] + n (F . E_B) at every B in Supp J, F the divisor of J.
bool geometric_adjoint_condition(const IdealClass& j, std::int64_t n);

/// A point of excess zero whose proximate support points are not a single
/// point of relative degree one.
struct GorensteinCulprit {
  PointId point;
  std::vector<PointId> proximate_support;
  std::int64_t weight = 0;  ///< sum of [C:B] over proximate_support
  std::string describe(const Constellation& c) const;
};

std::vector<GorensteinCulprit> gorenstein_culprits(const IdealClass& j);

/// E_B^2 = -2[B:A] at every support point of excess zero.
bool gorenstein_by_self_intersection(const IdealClass& j);
/// K_X . E_B = 0 at every support point of excess zero.
bool gorenstein_by_canonical_degree(const IdealClass& j);

/// Whether the blowup of J is Gorenstein. All equivalent routes are evaluated
/// and must agree; a disagreement throws RouteDisagreement.
bool is_blowup_gorenstein(const IdealClass& j);

/// J * adjoint(J), whose blowup is always Gorenstein.
IdealClass gorensteinfication(const IdealClass& j);

/// Whether blowing up adjoint(J) over the blowup of J changes nothing, i.e.
/// J * adjoint(J) has exactly the Rees points of J.
bool canonical_model_is_trivial(const IdealClass& j);

}  // namespace cideal
