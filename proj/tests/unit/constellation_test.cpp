#include <gtest/gtest.h>

#include "cideal/constellation.hpp"
#include "cideal/enumerate.hpp"
#include "cideal/errors.hpp"
#include "fixtures.hpp"

namespace cideal {
namespace {

using namespace cideal::testing;

bool has_issue(const ValidationReport& r, Violation v) {
  for (const auto& i : r.issues) {
    if (i.kind == v) return true;
  }
  return false;
}

TEST(Constellation, RootOnly) {
  Constellation c;
  EXPECT_EQ(c.size(), 1u);
  EXPECT_EQ(c.name(c.root()), "A0");
  EXPECT_FALSE(c.parent(c.root()).has_value());
  EXPECT_TRUE(validate(c).ok());
}

TEST(Constellation, SingleChildChain) {
  Constellation c;
  auto a1 = c.add_point(c.root());
  EXPECT_EQ(c.chain(a1), (std::vector<PointId>{A0, A1}));
  EXPECT_EQ(c.name(a1), "A1");
}

TEST(Constellation, Chain3AndCusp3AreValid) {
  EXPECT_TRUE(validate(*chain3()).ok());
  EXPECT_TRUE(validate(*cusp3()).ok());
  EXPECT_EQ(cusp3()->proximity_set(A2), (std::vector<PointId>{A1, A0}));
}

TEST(Constellation, AddPointRejectsBadInput) {
  Constellation c;
  auto a1 = c.add_point(c.root());
  EXPECT_THROW(c.add_point(PointId{9}), Error);
  EXPECT_THROW(c.add_point(a1, std::nullopt, 0), Error);
  // The satellite must be proximate to the parent and differ from it.
  EXPECT_THROW(c.add_point(a1, a1), Error);
  auto a2 = c.add_point(a1);
  try {
    c.add_point(a2, c.root());
    FAIL() << "A0 is not in prox(A2)";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IllegalSatellite);
  }
}

TEST(Constellation, SatelliteToSiblingIsIllegal) {
  std::vector<PointRecord> recs = {{"A0", {}, {}, 1}, {"A1", "A0", {}, 1}, {"A2", "A0", {}, 1}, {"A3", "A1", "A2", 1}};
  auto report = validate(recs);
  EXPECT_TRUE(has_issue(report, Violation::IllegalSatellite));
  EXPECT_THROW(Constellation::from_records(recs), Error);
}

TEST(Constellation, ValidationReportsEachViolation) {
  using R = std::vector<PointRecord>;
  EXPECT_TRUE(has_issue(validate(R{{"A1", "A0", {}, 1}}), Violation::MissingRoot));
  EXPECT_TRUE(has_issue(validate(R{{"A0", {}, {}, 1}, {"B0", {}, {}, 1}}), Violation::MultipleRoots));
  EXPECT_TRUE(has_issue(validate(R{{"A0", {}, {}, 1}, {"A0", "A0", {}, 1}}), Violation::DuplicateName));
  EXPECT_TRUE(has_issue(validate(R{{"A0", {}, {}, 1}, {"A1", "Z", {}, 1}}), Violation::UnknownParent));
  EXPECT_TRUE(has_issue(validate(R{{"A0", {}, {}, 1}, {"A1", "A0", "Z", 1}}), Violation::UnknownSatellite));
  EXPECT_TRUE(has_issue(validate(R{{"A0", {}, {}, 1}, {"A1", "A2", {}, 1}, {"A2", "A1", {}, 1}}), Violation::Cycle));
  EXPECT_TRUE(has_issue(validate(R{{"A0", {}, {}, 1}, {"A1", "A0", {}, 0}}), Violation::ZeroDegree));
  EXPECT_TRUE(has_issue(validate(R{{"A0", {}, {}, 2}}), Violation::RootDegree));
  EXPECT_TRUE(has_issue(validate(R{{"A0", {}, {}, 1}, {"A1", "A0", "A0", 1}}), Violation::SatelliteIsParent));
}

TEST(Constellation, FromRecordsSortsAncestorFirst) {
  std::vector<PointRecord> recs = {{"c", "b", "a", 1}, {"b", "a", {}, 1}, {"a", {}, {}, 1}};
  auto c = Constellation::from_records(recs);
  EXPECT_EQ(c.name(A0), "a");
  EXPECT_EQ(c.name(A1), "b");
  EXPECT_EQ(c.name(A2), "c");
  EXPECT_EQ(c.satellite_target(A2), A0);
  auto back = Constellation::from_records(c.records());
  EXPECT_EQ(back, c);
}

TEST(Constellation, ProximityMatrix) {
  EXPECT_EQ(proximity_matrix(Constellation()), IntMatrix::identity(1));
  auto m = proximity_matrix(*cusp3());
  std::vector<std::vector<std::int64_t>> expected = {{1, -1, -1}, {0, 1, -1}, {0, 0, 1}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m(i, j), expected[i][j]) << i << "," << j;
  }
  auto d = proximity_matrix(*deg2());
  EXPECT_EQ(d(0, 1), -2);
  EXPECT_EQ(d(1, 0), 0);
}

TEST(Constellation, DegreesMultiplyAlongChains) {
  EXPECT_EQ(Constellation().degree_over_base(A0), 1);
  EXPECT_EQ(deg2()->degree_over_base(A1), 2);
  Constellation c;
  auto a1 = c.add_point(c.root(), std::nullopt, 2);
  auto a2 = c.add_point(a1, std::nullopt, 3);
  EXPECT_EQ(c.degree_over_base(a2), 6);
  EXPECT_EQ(c.relative_degree(a1, a2), 3);
  EXPECT_FALSE(c.has_trivial_degrees());
}

TEST(Constellation, ChainsFollowOneBranch) {
  EXPECT_EQ(cusp3()->chain(A2), (std::vector<PointId>{A0, A1, A2}));
  auto f = fork3();
  EXPECT_EQ(f->chain(A2), (std::vector<PointId>{A0, A2}));
  EXPECT_FALSE(f->is_ancestor_or_self(A1, A2));
}

TEST(Constellation, SubtreeDropsOutsideProximities) {
  std::vector<PointId> emb;
  auto sub = cusp3()->subtree(A1, emb);
  EXPECT_EQ(sub.size(), 2u);
  EXPECT_EQ(emb, (std::vector<PointId>{A1, A2}));
  EXPECT_FALSE(sub.satellite_target(PointId{1}).has_value());
}

TEST(Enumeration, CountsUpToIsomorphism) {
  // Cumulative: one point, one chain of two, then chain, cusp and fork.
  auto count = [](std::size_t n) { return enumerate_constellations(n).size(); };
  EXPECT_EQ(count(1), 1u);
  EXPECT_EQ(count(2), 2u);
  EXPECT_EQ(count(3), 5u);
  for (const auto& c : enumerate_constellations(5)) EXPECT_TRUE(validate(*c).ok());
}

TEST(Enumeration, CanonicalFormIgnoresChildOrder) {
  Constellation a;
  auto a1 = a.add_point(a.root());
  a.add_point(a.root());
  a.add_point(a1);
  Constellation b;
  b.add_point(b.root());
  auto b2 = b.add_point(b.root());
  b.add_point(b2);
  EXPECT_EQ(canonical_form(a), canonical_form(b));
  EXPECT_NE(canonical_form(*chain3()), canonical_form(*cusp3()));
}

}  // namespace
}  // namespace cideal
