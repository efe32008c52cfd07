#pragma once

// Two-variable monomial ideals: an independent route to point bases, adjoints
// and colengths through Newton polygons.

#include <cstdint>
#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cideal/point_basis.hpp"

namespace cideal {

/// Exponent pair (a, b) of the monomial x^a y^b.
struct Exponent {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Minimal monomial generators, sorted by increasing a (hence decreasing b).
class Staircase {
 public:
  /// Keeps the minimal elements of `generators`. Throws InvalidArgument when
  /// empty or when an exponent is negative.
  explicit Staircase(std::vector<Exponent> generators);
  Staircase(std::initializer_list<Exponent> generators) : Staircase(std::vector<Exponent>(generators)) {}

  static Staircase unit() { return Staircase({Exponent{0, 0}}); }

  std::span<const Exponent> generators() const { return generators_; }
  bool is_unit() const;
  /// Contains a pure power of x and a pure power of y.
  bool is_primary() const;
  /// x^a y^b lies in the ideal.
  bool contains(Exponent e) const;
  std::string to_string() const;

  friend bool operator==(const Staircase&, const Staircase&) = default;

 private:
  std::vector<Exponent> generators_;
};

/// Lower-left boundary of conv(generators) + first quadrant, from the vertex
/// on the y-axis to the vertex on the x-axis.
struct NewtonPolygon {
  std::vector<Exponent> vertices;
};

NewtonPolygon newton_polygon(const Staircase& s);

/// Lattice points of the Newton polyhedron (the integral closure).
Staircase newton_closure(const Staircase& s);
bool is_integrally_closed(const Staircase& s);

/// Monomials x^a y^b with (a+1, b+1) in the interior of the Newton polyhedron.
Staircase howald_adjoint(const Staircase& s);

/// Number of monomials outside the ideal.
std::int64_t staircase_colength(const Staircase& s);
/// Twice the area between the axes and the Newton polygon.
std::int64_t staircase_multiplicity(const Staircase& s);

/// Base points of a complete monomial ideal with their monomial valuations.
struct MonomialResolution {
  ConstellationPtr constellation;
  IdealClass ideal;
  /// (v_B(x), v_B(y)) for every point B, indexed by PointId.
  std::vector<std::pair<std::int64_t, std::int64_t>> monomial_values;
};

/// Blows up the origin of each torus-fixed chart until the transform is the
/// unit ideal. Requires an integrally closed m-primary staircase.
MonomialResolution to_point_basis(const Staircase& s);

/// The monomial ideal with point basis `ideal` on the constellation of `res`:
/// monomials whose value at every Rees point B of `ideal` is at least ord_B(ideal).
Staircase staircase_of(const MonomialResolution& res, const IdealClass& ideal);

}  // namespace cideal
