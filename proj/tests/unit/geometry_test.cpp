#include <gtest/gtest.h>

#include "cideal/adjoint.hpp"
#include "cideal/enumerate.hpp"
#include "cideal/errors.hpp"
#include "cideal/geometry.hpp"
#include "fixtures.hpp"

namespace cideal {
namespace {

using namespace cideal::testing;
using V = std::vector<std::int64_t>;

TEST(ChangeOfBasis, Examples) {
  auto single = ExceptionalLattice::full(share(Constellation()));
  EXPECT_EQ(to_total_basis(single, DivisorE{{3}}).coeffs, (V{3}));
  auto l = ExceptionalLattice::full(cusp3());
  // E_A0 = E*_A0 - E*_A1 - E*_A2.
  EXPECT_EQ(to_total_basis(l, exceptional_curve(l, A0)).coeffs, (V{1, -1, -1}));
  EXPECT_EQ(to_total_basis(l, exceptional_curve(l, A1)).coeffs, (V{0, 1, -1}));
}

TEST(ChangeOfBasis, RoundTrip) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> coeff(-5, 5);
  for (int t = 0; t < 200; ++t) {
    auto l = ExceptionalLattice::full(share(random_constellation(rng, 6, 2)));
    DivisorEStar d{V(l.size())};
    for (auto& x : d.coeffs) x = coeff(rng);
    EXPECT_EQ(to_total_basis(l, to_strict_basis(l, d)), d);
  }
}

TEST(Intersection, Examples) {
  auto l = ExceptionalLattice::full(cusp3());
  EXPECT_EQ(self_intersection(l, A0), -3);
  EXPECT_EQ(self_intersection_formula(l, A0), -3);
  auto one = ExceptionalLattice::full(chain3());
  EXPECT_EQ(intersection(one, DivisorEStar{{1, 0, 0}}, DivisorEStar{{1, 0, 0}}), -1);
  auto d = ExceptionalLattice::full(deg2());
  EXPECT_EQ(self_intersection(d, A0), -3);
  EXPECT_EQ(self_intersection_formula(d, A0), -3);
  EXPECT_EQ(self_intersection(d, A1), -2);
}

TEST(Intersection, CuspMatrix) {
  auto m = intersection_matrix(ExceptionalLattice::full(cusp3()));
  std::vector<V> expected = {{-3, 0, 1}, {0, -2, 1}, {1, 1, -1}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m(i, j), expected[i][j]);
  }
}

TEST(Intersection, FormulasAgreeEverywhere) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    auto c = share(random_constellation(rng, 7, 3));
    auto l = ExceptionalLattice::full(c);
    for (auto b : l.points()) {
      EXPECT_EQ(self_intersection(l, b), self_intersection_formula(l, b));
      EXPECT_EQ(canonical_degree(l, b), canonical_degree_formula(l, b));
      EXPECT_EQ(canonical_degree(l, b), -self_intersection(l, b) - 2 * c->degree_over_base(b));
    }
  }
}

TEST(CanonicalDivisor, Examples) {
  EXPECT_EQ(canonical_divisor(ExceptionalLattice::full(share(Constellation()))).coeffs, (V{1}));
  EXPECT_EQ(canonical_divisor(ExceptionalLattice::full(cusp3())).coeffs, (V{1, 1, 1}));
}

TEST(AntiNef, Examples) {
  auto l = ExceptionalLattice::full(cusp3());
  EXPECT_TRUE(is_antinef(l, DivisorEStar{{2, 1, 1}}));
  EXPECT_FALSE(is_antinef(l, DivisorEStar{{1, 1, 1}}));
  EXPECT_TRUE(is_antinef(l, DivisorEStar{{0, 0, 0}}));
}

TEST(AntiNef, MatchesCompleteness) {
  for (const auto& c : enumerate_constellations(4)) {
    auto l = ExceptionalLattice::full(c);
    for_each_box_vector(c->size(), 3, [&](const V& v) {
      EXPECT_EQ(is_antinef(l, DivisorEStar{v}), is_complete(PointBasis(c, v)));
    });
  }
}

TEST(GeometricAdjoint, Examples) {
  auto c = cusp3();
  EXPECT_TRUE(geometric_adjoint_condition(IdealClass(c, {3, 1, 1}), 1));
  EXPECT_FALSE(geometric_adjoint_condition(IdealClass(c, {2, 1, 1}), 5));
  EXPECT_TRUE(geometric_adjoint_condition(maximal_ideal(c), 1));
}

TEST(GeometricAdjoint, MatchesInequalityWithDegrees) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 500; ++t) {
    auto c = share(random_constellation(rng, 6, 3));
    auto j = random_ideal(rng, c, 2);
    for (std::int64_t n = 1; n <= 3; ++n) EXPECT_EQ(geometric_adjoint_condition(j, n), is_adjoint_power(j, n));
  }
}

TEST(Gorenstein, Examples) {
  EXPECT_TRUE(is_blowup_gorenstein(IdealClass(chain3(), {2, 2, 1})));
  auto c = cusp3();
  EXPECT_FALSE(is_blowup_gorenstein(IdealClass(c, {2, 1, 1})));
  EXPECT_TRUE(is_blowup_gorenstein(maximal_ideal(c)));
  auto culprits = gorenstein_culprits(IdealClass(c, {2, 1, 1}));
  ASSERT_EQ(culprits.size(), 1u);
  EXPECT_EQ(culprits[0].describe(*c), "A0: two proximate support points");
}

TEST(Gorenstein, DegreeTwoProximateIsACulprit) {
  auto c = deg2();
  auto culprits = gorenstein_culprits(IdealClass(c, {2, 1}));
  ASSERT_EQ(culprits.size(), 1u);
  EXPECT_EQ(culprits[0].weight, 2);
  EXPECT_FALSE(is_blowup_gorenstein(IdealClass(c, {2, 1})));
}

TEST(Gorensteinfication, Examples) {
  auto c = cusp3();
  auto z = gorensteinfication(IdealClass(c, {2, 1, 1}));
  EXPECT_EQ(values(z), (V{3, 1, 1}));
  EXPECT_TRUE(is_blowup_gorenstein(z));
  EXPECT_EQ(gorensteinfication(maximal_ideal(c)), maximal_ideal(c));
  EXPECT_EQ(values(gorensteinfication(IdealClass(chain3(), {2, 2, 1}))), (V{3, 3, 1}));
}

TEST(CanonicalModel, Examples) {
  auto c = cusp3();
  EXPECT_TRUE(canonical_model_is_trivial(maximal_ideal(c)));
  EXPECT_FALSE(canonical_model_is_trivial(IdealClass(c, {2, 1, 1})));
  EXPECT_TRUE(canonical_model_is_trivial(IdealClass(c, {3, 1, 1})));
}

TEST(Lattice, SupportMustBeAncestorClosed) {
  EXPECT_THROW(ExceptionalLattice(cusp3(), {A0, A2}), Error);
}

}  // namespace
}  // namespace cideal
