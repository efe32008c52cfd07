#include <gtest/gtest.h>

#include <fstream>

#include <json.hpp>

#include "cideal/adjoint.hpp"
#include "cideal/enumerate.hpp"
#include "cideal/errors.hpp"
#include "cideal/invariants.hpp"
#include "cideal/monomial.hpp"
#include "cideal_cli/generators.hpp"
#include "fixtures.hpp"

namespace cideal {
namespace {

using namespace cideal::testing;
using cli::parse_generators;
using V = std::vector<std::int64_t>;

Staircase power_of_m(std::int64_t k) {
  std::vector<Exponent> g;
  for (std::int64_t a = 0; a <= k; ++a) g.push_back({a, k - a});
  return Staircase(g);
}

TEST(Staircase, KeepsMinimalGenerators) {
  Staircase s{{2, 3}, {0, 5}, {2, 4}, {4, 0}, {3, 3}};
  EXPECT_EQ(s.to_string(), "(y^5, x^2*y^3, x^4)");
  EXPECT_TRUE(s.is_primary());
  EXPECT_TRUE(s.contains({3, 3}));
  EXPECT_FALSE(s.contains({1, 4}));
  EXPECT_FALSE(Staircase({{1, 1}}).is_primary());
  EXPECT_THROW(Staircase(std::vector<Exponent>{}), Error);
}

TEST(NewtonClosure, Examples) {
  EXPECT_EQ(newton_closure(Staircase{{2, 0}, {0, 3}}), (Staircase{{2, 0}, {1, 2}, {0, 3}}));
  EXPECT_EQ(newton_closure(power_of_m(1)), power_of_m(1));
  EXPECT_EQ(newton_closure(power_of_m(2)), power_of_m(2));
  EXPECT_THROW(newton_closure(Staircase{{1, 1}}), Error);
}

TEST(NewtonClosure, Idempotent) {
  for (const auto& s : monomial_corpus(6)) EXPECT_EQ(newton_closure(s), s);
}

TEST(Howald, Examples) {
  EXPECT_EQ(howald_adjoint(newton_closure(Staircase{{2, 0}, {0, 3}})), power_of_m(1));
  for (std::int64_t k = 1; k <= 5; ++k) EXPECT_EQ(howald_adjoint(power_of_m(k)), k == 1 ? Staircase::unit() : power_of_m(k - 1));
}

TEST(Howald, InvariantUnderClosure) {
  for (const auto& gens : {"x^2, y^3", "x^5, x*y^2, y^7", "x^4, y^4", "x^3, x*y, y^6"}) {
    auto s = parse_generators(gens);
    EXPECT_EQ(howald_adjoint(s), howald_adjoint(newton_closure(s))) << gens;
  }
}

TEST(ToPointBasis, Cusp) {
  auto r = to_point_basis(newton_closure(Staircase{{2, 0}, {0, 3}}));
  EXPECT_EQ(values(r.ideal), (V{2, 1, 1}));
  EXPECT_EQ(r.constellation->satellite_target(A2), A0);
  EXPECT_EQ(*r.constellation, *cusp3());
  // v(x) = 3, v(y) = 2 at the last point.
  EXPECT_EQ(r.monomial_values[2], (std::pair<std::int64_t, std::int64_t>{3, 2}));
  EXPECT_EQ(divisorial_valuation(A2, r.ideal), 6);
}

TEST(ToPointBasis, MaximalIdealAndExtremalFamily) {
  auto m = to_point_basis(power_of_m(1));
  EXPECT_EQ(m.constellation->size(), 1u);
  EXPECT_EQ(values(m.ideal), (V{1}));

  auto r = to_point_basis(newton_closure(Staircase{{2, 0}, {0, 5}}));
  EXPECT_EQ(values(r.ideal), (V{2, 2, 1, 1}));
  EXPECT_EQ(r.constellation->satellite_target(A3), A1);
  EXPECT_EQ(multiplicity(r.ideal), 10);
}

TEST(ToPointBasis, RejectsUnclosedInput) {
  try {
    to_point_basis(Staircase{{2, 0}, {0, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotClosed);
  }
}

TEST(StaircaseColength, Examples) {
  EXPECT_EQ(staircase_colength(newton_closure(Staircase{{2, 0}, {0, 3}})), 5);
  for (std::int64_t k = 1; k <= 6; ++k) EXPECT_EQ(staircase_colength(power_of_m(k)), k * (k + 1) / 2);
  EXPECT_EQ(staircase_colength(newton_closure(Staircase{{2, 0}, {0, 5}})), 8);
}

TEST(StaircaseOf, RecoversTheStaircase) {
  for (const auto& s : monomial_corpus(6)) {
    auto r = to_point_basis(s);
    EXPECT_EQ(staircase_of(r, r.ideal), s);
  }
}

// Values frozen from tests/oracle/monomial_oracle.py, which decides integral
// closure by monomial valuations and gets e from colengths of powers.
TEST(Oracle, FrozenMonomialCases) {
  std::ifstream in(CIDEAL_TEST_DATA "/monomial_oracle.json");
  ASSERT_TRUE(in) << "missing oracle fixture";
  auto cases = nlohmann::json::parse(in);
  ASSERT_GE(cases.size(), 50u);
  for (const auto& c : cases) {
    auto gens = c["generators"].get<std::string>();
    SCOPED_TRACE(gens);
    auto closure = newton_closure(parse_generators(gens));
    EXPECT_EQ(closure, parse_generators(c["closure"].get<std::string>()));
    auto expected_adjoint = parse_generators(c["adjoint"].get<std::string>());
    EXPECT_EQ(howald_adjoint(closure), expected_adjoint);
    auto r = to_point_basis(closure);
    EXPECT_EQ(newton_closure(staircase_of(r, adjoint(r.ideal))), expected_adjoint);
    EXPECT_EQ(colength(r.ideal), c["colength"].get<std::int64_t>());
    EXPECT_EQ(staircase_colength(closure), c["colength"].get<std::int64_t>());
    EXPECT_EQ(multiplicity(r.ideal), c["multiplicity"].get<std::int64_t>());
    EXPECT_EQ(staircase_multiplicity(closure), c["multiplicity"].get<std::int64_t>());
    EXPECT_EQ(order(r.ideal), c["order"].get<std::int64_t>());
  }
}

TEST(Corpus, SizeAndClosure) {
  auto corpus = monomial_corpus(8);
  EXPECT_GE(corpus.size(), 500u);
  for (const auto& s : corpus) {
    for (const auto& v : newton_polygon(s).vertices) {
      EXPECT_LE(v.a, 8);
      EXPECT_LE(v.b, 8);
    }
  }
}

}  // namespace
}  // namespace cideal
