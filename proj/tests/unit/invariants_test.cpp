#include <gtest/gtest.h>

#include "cideal/adjoint.hpp"
#include "cideal/enumerate.hpp"
#include "cideal/errors.hpp"
#include "cideal/invariants.hpp"
#include "fixtures.hpp"

namespace cideal {
namespace {

using namespace cideal::testing;

TEST(Colength, Examples) {
  EXPECT_EQ(colength(IdealClass(cusp3(), {2, 1, 1})), 5);
  EXPECT_EQ(colength(maximal_ideal(cusp3())), 1);
  EXPECT_EQ(colength(IdealClass(deg2(), {2, 1})), 5);
  EXPECT_EQ(colength(IdealClass::unit(cusp3())), 0);
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity(IdealClass(cusp3(), {2, 1, 1})), 6);
  EXPECT_EQ(multiplicity(maximal_ideal(cusp3())), 1);
  EXPECT_EQ(multiplicity(IdealClass(cusp3(), {3, 1, 1})), 11);
  EXPECT_EQ(multiplicity_from_lengths(IdealClass(cusp3(), {3, 1, 1})), 11);
  EXPECT_EQ(multiplicity(IdealClass(deg2(), {2, 1})), 6);
  EXPECT_THROW(multiplicity(IdealClass::unit(cusp3())), Error);
}

TEST(Multiplicity, LengthIdentityWithDegrees) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 500; ++t) {
    auto c = share(random_constellation(rng, 7, 3));
    auto i = random_ideal(rng, c, 3);
    EXPECT_EQ(multiplicity(i), colength(i) + colength(adjoint(i)));
  }
}

TEST(Colength, AdditiveOverProducts) {
  // l(A/IJ) = l(A/I) + l(A/J) + e(I|J), with e(I|J) = sum [B:A] r_B(I) r_B(J).
  std::mt19937_64 rng(19);
  for (int t = 0; t < 300; ++t) {
    auto c = share(random_constellation(rng, 6, 2));
    auto i = random_ideal(rng, c, 2);
    auto j = random_ideal(rng, c, 2);
    std::int64_t mixed = 0;
    for (auto p : c->points()) mixed += c->degree_over_base(p) * i[p] * j[p];
    EXPECT_EQ(colength(product(i, j)), colength(i) + colength(j) + mixed);
  }
}

TEST(MinGenerators, Examples) {
  EXPECT_EQ(min_generators(maximal_ideal(cusp3())), 2);
  EXPECT_EQ(min_generators(IdealClass(cusp3(), {2, 1, 1})), 3);
  EXPECT_EQ(min_generators(IdealClass(cusp3(), {3, 1, 1})), 4);
}

TEST(MinimalMultiplicity, Examples) {
  EXPECT_TRUE(has_minimal_multiplicity(IdealClass(cusp3(), {2, 1, 1})));
  EXPECT_TRUE(has_minimal_multiplicity(IdealClass(chain3(), {1, 1, 1})));
  EXPECT_FALSE(has_minimal_multiplicity(IdealClass(cusp3(), {3, 1, 1})));
  EXPECT_FALSE(minimal_multiplicity_by_goto(IdealClass(cusp3(), {3, 1, 1})));
}

TEST(MinimalMultiplicity, RoutesAgree) {
  for (const auto& c : enumerate_constellations(5)) {
    for (const auto& i : enumerate_complete_ideals(c, 3, false)) {
      bool a = minimal_multiplicity_by_adjoint(i);
      EXPECT_EQ(a, minimal_multiplicity_by_goto(i));
      EXPECT_EQ(a, minimal_multiplicity_by_structure(i));
    }
  }
}

}  // namespace
}  // namespace cideal
