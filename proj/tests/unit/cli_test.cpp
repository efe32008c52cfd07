#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "cideal/enumerate.hpp"
#include "cideal_cli/commands.hpp"
#include "cideal_cli/document.hpp"
#include "cideal_cli/dot.hpp"
#include "cideal_cli/generators.hpp"
#include "fixtures.hpp"

namespace cideal::cli {
namespace {

using namespace cideal::testing;

const std::string kCusp = CIDEAL_TEST_DATA "/cusp3.json";

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string error_of(std::string_view text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e.what();
  }
  return "";
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

TEST(Document, GoldenRoundTripIsByteIdentical) {
  auto text = slurp(kCusp);
  auto doc = parse_document(text);
  EXPECT_EQ(serialize(doc), text);
  ASSERT_NE(doc.find("J_cusp"), nullptr);
  EXPECT_EQ(format_basis(*doc.find("J_cusp")->basis), "(2,1,1)");
  EXPECT_EQ(doc.constellation->satellite_target(A2), A0);
}

TEST(Document, MinimalDocument) {
  auto doc = parse_document(R"({"version": 1, "points": [{"id": "O"}]})");
  EXPECT_EQ(doc.constellation->size(), 1u);
  EXPECT_TRUE(doc.ideals.empty());
}

TEST(Document, Errors) {
  EXPECT_NE(error_of(R"({"version": 1, "points": [{"id": "A0"}, {"id": "B", "parent": "ghost"}]})").find("'B'"),
            std::string::npos);
  auto syntax = error_of("{\n  \"version\": 1,\n  \"points\": [,]\n}");
  EXPECT_NE(syntax.find("line 3"), std::string::npos) << syntax;
  EXPECT_NE(syntax.find("column"), std::string::npos);
  EXPECT_NE(error_of(R"({"version": 2, "points": [{"id": "O"}]})").find("version"), std::string::npos);
  EXPECT_NE(error_of(R"({"version": 1, "points": [{"id": "O"}], "extra": 0})").find("extra"), std::string::npos);
  EXPECT_NE(error_of(R"({"version": 1, "points": [{"id": "O"}], "ideals": [{"name": "I", "basis": {"Q": 1}}]})")
                .find("'Q'"),
            std::string::npos);
}

TEST(Document, RandomRoundTrip) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    auto c = share(random_constellation(rng, 8, 3));
    Document d{c, {}};
    d.ideals.push_back({"I", random_ideal(rng, c, 2).basis(), std::nullopt});
    d.ideals.push_back({"M", std::nullopt, Staircase{{0, 3}, {1, 1}, {4, 0}}});
    auto text = serialize(d);
    auto back = parse_document(text);
    EXPECT_EQ(back, d);
    EXPECT_EQ(serialize(back), text);
  }
}

TEST(Generators, ParseAndFormat) {
  EXPECT_EQ(parse_generators("x^2, y^3"), (Staircase{{2, 0}, {0, 3}}));
  EXPECT_EQ(parse_generators("(x*y*x, y^4 , x^3)"), (Staircase{{2, 1}, {0, 4}, {3, 0}}));
  EXPECT_EQ(format_generators(Staircase{{2, 0}, {1, 2}, {0, 3}}), "y^3, x*y^2, x^2");
  try {
    parse_generators("x^2, z");
    FAIL();
  } catch (const DocumentError& e) {
    EXPECT_NE(std::string(e.what()).find("column 6"), std::string::npos) << e.what();
  }
}

TEST(Dot, NodeAndEdgeCounts) {
  Constellation root;
  auto one = export_dot(root);
  EXPECT_EQ(count(one, "label="), 1u);
  EXPECT_EQ(count(one, "->"), 0u);

  auto c = cusp3();
  auto dot = export_dot(*c, IdealClass(c, {2, 1, 1}));
  EXPECT_EQ(count(dot, "->"), 3u);
  EXPECT_EQ(count(dot, "dashed"), 1u);
  EXPECT_NE(dot.find("A0:2(0)"), std::string::npos) << dot;

  auto f = export_dot(*fork3());
  EXPECT_EQ(count(f, "->"), 2u);
  EXPECT_EQ(count(f, "dashed"), 0u);
}

int run(const std::string& cmd, Options o, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  int code = run_command(cmd, o, out, err);
  if (out_text) *out_text = out.str() + err.str();
  return code;
}

TEST(Commands, ExitCodes) {
  Options o;
  o.input = kCusp;
  EXPECT_EQ(run("validate", o), kExitOk);

  o.ideals = {"J_311"};
  std::string text;
  EXPECT_EQ(run("factor", o, &text), kExitOk);
  EXPECT_NE(text.find("m * p_A2"), std::string::npos) << text;

  o.ideals = {"J_cusp"};
  EXPECT_EQ(run("gorenstein", o), kExitFalse);
  EXPECT_EQ(run("min-adjoint-exponent", o, &text), kExitOk);
  EXPECT_NE(text.find("absent"), std::string::npos) << text;
  o.power = 1;
  EXPECT_EQ(run("is-adjoint", o), kExitFalse);

  o.ideals = {"J_311"};
  EXPECT_EQ(run("is-adjoint", o, &text), kExitOk);
  EXPECT_NE(text.find("(4,2,2)"), std::string::npos) << text;

  o.ideals = {"nope"};
  EXPECT_EQ(run("adjoint", o), kExitError);
  o.input = "/nonexistent.json";
  EXPECT_EQ(run("validate", o), kExitError);
  EXPECT_EQ(run("frobnicate", o), kExitError);
}

TEST(Commands, StructuredOutputParses) {
  Options o;
  o.input = kCusp;
  o.ideals = {"J_cusp"};
  o.format = Format::Structured;
  for (const auto& cmd : {"factor", "adjoint", "invariants", "gorenstein"}) {
    std::string text;
    run(cmd, o, &text);
    EXPECT_FALSE(text.empty()) << cmd;
    EXPECT_EQ(text.front(), '{') << cmd << ": " << text;
  }
}

}  // namespace
}  // namespace cideal::cli
