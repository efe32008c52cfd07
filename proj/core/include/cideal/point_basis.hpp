#pragma once

// Point bases, excesses, and the calculus of complete ideals.
//
// A complete m-primary ideal is identified with its point basis: the vector of
// multiplicities r_B at the points of a constellation. A vector is the point
// basis of a complete ideal exactly when every excess
//   Excess_B = r_B - sum_{B < C} [C:B] r_C
// is nonnegative. The zero vector stands for the unit ideal.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cideal/constellation.hpp"

namespace cideal {

/// Finitely supported nonnegative multiplicities over one constellation.
class PointBasis {
 public:
  explicit PointBasis(ConstellationPtr c);
  PointBasis(ConstellationPtr c, std::vector<std::int64_t> values);
  PointBasis(ConstellationPtr c, std::initializer_list<std::int64_t> values)
      : PointBasis(std::move(c), std::vector<std::int64_t>(values)) {}

  const Constellation& constellation() const { return *constellation_; }
  const ConstellationPtr& constellation_ptr() const { return constellation_; }

  std::int64_t operator[](PointId p) const { return values_.at(p.index); }
  std::span<const std::int64_t> values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  std::vector<PointId> support() const;
  bool is_zero() const;

  friend bool operator==(const PointBasis& a, const PointBasis& b);

 private:
  ConstellationPtr constellation_;
  std::vector<std::int64_t> values_;
};

/// Excess_B at every point of the constellation (may be negative).
class ExcessVector {
 public:
  ExcessVector(ConstellationPtr c, std::vector<std::int64_t> values);

  const Constellation& constellation() const { return *constellation_; }
  const ConstellationPtr& constellation_ptr() const { return constellation_; }
  std::int64_t operator[](PointId p) const { return values_.at(p.index); }
  std::span<const std::int64_t> values() const { return values_; }
  bool is_nonnegative() const;

  friend bool operator==(const ExcessVector& a, const ExcessVector& b);

 private:
  ConstellationPtr constellation_;
  std::vector<std::int64_t> values_;
};

/// A point basis satisfying every proximity inequality: a complete ideal.
class IdealClass {
 public:
  /// Throws Error(NotComplete) if `basis` violates a proximity inequality.
  explicit IdealClass(PointBasis basis);
  IdealClass(ConstellationPtr c, std::initializer_list<std::int64_t> values)
      : IdealClass(PointBasis(std::move(c), values)) {}

  static IdealClass unit(ConstellationPtr c);

  const PointBasis& basis() const { return basis_; }
  const Constellation& constellation() const { return basis_.constellation(); }
  const ConstellationPtr& constellation_ptr() const { return basis_.constellation_ptr(); }
  std::int64_t operator[](PointId p) const { return basis_[p]; }
  std::vector<PointId> support() const { return basis_.support(); }
  bool is_unit() const { return basis_.is_zero(); }

  friend bool operator==(const IdealClass& a, const IdealClass& b) { return a.basis_ == b.basis_; }

 private:
  PointBasis basis_;
};

struct SimpleFactor {
  PointId point;
  std::int64_t exponent = 0;
  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};
using SimpleFactorization = std::vector<SimpleFactor>;

ExcessVector excess(const PointBasis& v);
inline ExcessVector excess(const IdealClass& i) { return excess(i.basis()); }
bool is_complete(const PointBasis& v);

/// The unique complete ideal with the given (nonnegative) excess vector.
IdealClass from_excess(const ExcessVector& e);
IdealClass from_excess(ConstellationPtr c, std::vector<std::int64_t> e);

/// The simple ideal p_B: excess 1 at B and 0 elsewhere.
IdealClass simple_ideal(ConstellationPtr c, PointId b);
IdealClass maximal_ideal(ConstellationPtr c);

IdealClass product(const IdealClass& i, const IdealClass& j);
IdealClass power(const IdealClass& i, std::int64_t n);

/// Zariski factorization: (B, Excess_B) for every point of positive excess.
SimpleFactorization factorize(const IdealClass& i);
/// Multiplies out a factorization.
IdealClass expand(ConstellationPtr c, const SimpleFactorization& f);
bool is_simple(const IdealClass& i);

struct TransformResult {
  ConstellationPtr constellation;
  IdealClass ideal;
  std::vector<PointId> embedding;  ///< new point index -> original point
};

/// Transform of `i` at `b`, living on the sub-constellation rooted at `b`.
TransformResult transform(const IdealClass& i, PointId b);

/// ord_A(I) = r_root(I).
std::int64_t order(const IdealClass& i);

/// v_B(m_C) for every C on chain(B), root first. Satisfies v_B(m_B) = 1 and
/// v_B(m_C) = sum of v_B(m_D) over D on chain(B) proximate to C.
std::vector<std::int64_t> maximal_ideal_values(const Constellation& c, PointId b);

/// ord_B(I): the value of the divisorial valuation of B on I.
std::int64_t divisorial_valuation(PointId b, const IdealClass& i);

/// Smallest complete basis dominating `v` (Enriques unloading).
IdealClass unloading(const PointBasis& v);
/// Unloading with an explicit per-sweep point order (for order-independence tests).
IdealClass unloading(const PointBasis& v, std::span<const PointId> sweep_order);

/// Returns Q with I * Q = J when I divides J, decided by excess comparison.
std::optional<IdealClass> divides(const IdealClass& i, const IdealClass& j);
/// Same question, answered by subtracting bases and testing completeness.
std::optional<IdealClass> divides_by_subtraction(const IdealClass& i, const IdealClass& j);

/// I is contained in J. Tested on the Rees valuations of J (points of positive
/// excess): I is inside J iff ord_B(I) >= ord_B(J) at each of them.
bool is_contained_in(const IdealClass& i, const IdealClass& j);

/// sum of [C:B] over C in Supp J proximate to B.
std::int64_t supported_proximity_weight(const IdealClass& j, PointId b);

void require_same_constellation(const PointBasis& a, const PointBasis& b);

}  // namespace cideal
