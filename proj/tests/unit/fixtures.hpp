#pragma once

#include <vector>

#include "cideal/point_basis.hpp"

namespace cideal::testing {

// A0 -> A1 -> A2, all free.
inline ConstellationPtr chain3() {
  Constellation c;
  auto a1 = c.add_point(c.root());
  c.add_point(a1);
  return share(std::move(c));
}

// A0 -> A1 -> A2 with A2 also proximate to A0: base points of (x^2, y^3).
inline ConstellationPtr cusp3() {
  Constellation c;
  auto a1 = c.add_point(c.root());
  c.add_point(a1, c.root());
  return share(std::move(c));
}

// A0 -> A1 with residue degree 2.
inline ConstellationPtr deg2() {
  Constellation c;
  c.add_point(c.root(), std::nullopt, 2);
  return share(std::move(c));
}

// Root with two free children A1, A2.
inline ConstellationPtr fork3() {
  Constellation c;
  c.add_point(c.root());
  c.add_point(c.root());
  return share(std::move(c));
}

inline std::vector<std::int64_t> values(const IdealClass& i) {
  return {i.basis().values().begin(), i.basis().values().end()};
}

inline std::vector<std::int64_t> values(const ExcessVector& e) { return {e.values().begin(), e.values().end()}; }

constexpr PointId A0{0};
constexpr PointId A1{1};
constexpr PointId A2{2};
constexpr PointId A3{3};

}  // namespace cideal::testing
