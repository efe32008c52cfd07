#include "cideal_cli/verify.hpp"

#include <functional>
#include <random>

#include "cideal/adjoint.hpp"
#include "cideal/classifier.hpp"
#include "cideal/enumerate.hpp"
#include "cideal/geometry.hpp"
#include "cideal/invariants.hpp"
#include "cideal/monomial.hpp"
#include "cideal_cli/commands.hpp"

namespace cideal::cli {

namespace {

std::string show(const IdealClass& i) { return format_basis(i.basis()) + " on " + canonical_form(i.constellation()); }

// Runs `body` on each item; `body` returns an empty string on success.
template <typename T>
SuiteResult suite(std::string name, const std::vector<T>& items,
                  const std::function<std::string(const T&)>& body) {
  SuiteResult r{std::move(name), true, 0, {}};
  for (const auto& item : items) {
    ++r.instances;
    std::string failure;
    try {
      failure = body(item);
    } catch (const std::exception& e) {
      failure = e.what();
    }
    if (!failure.empty() && r.pass) {
      r.pass = false;
      r.detail = failure;
    }
  }
  return r;
}

}  // namespace

std::vector<SuiteResult> run_verification_suites() {
  std::vector<IdealClass> ideals;
  auto constellations = enumerate_constellations(5);
  for (const auto& c : constellations) {
    for (auto& i : enumerate_complete_ideals(c, 3, false)) ideals.push_back(std::move(i));
  }
  std::vector<SuiteResult> out;

  out.push_back(suite<IdealClass>("adjoint-power routes", ideals, [](const IdealClass& j) -> std::string {
    for (std::int64_t n = 1; n <= 3; ++n) {
      bool a = is_adjoint_power(j, n);
      if (a != divides(adjoint(j), power(j, n + 1)).has_value() || a != geometric_adjoint_condition(j, n)) {
        return show(j) + " n=" + std::to_string(n);
      }
      if (a && !(adjoint(adjoint_source(j, n)) == power(j, n))) return show(j) + " source n=" + std::to_string(n);
    }
    return {};
  }));

  out.push_back(suite<IdealClass>("Gorenstein routes", ideals, [](const IdealClass& j) -> std::string {
    bool g = is_blowup_gorenstein(j);
    canonical_model_is_trivial(j);
    if (!is_blowup_gorenstein(gorensteinfication(j))) return show(j) + " gorensteinfication";
    return g == min_adjoint_exponent(j).has_value() ? std::string() : show(j);
  }));

  out.push_back(suite<IdealClass>("length identity", ideals, [](const IdealClass& i) -> std::string {
    return multiplicity(i) == colength(i) + colength(adjoint(i)) ? std::string() : show(i);
  }));

  out.push_back(suite<IdealClass>("minimal multiplicity", ideals, [](const IdealClass& i) -> std::string {
    has_minimal_multiplicity(i);
    return {};
  }));

  std::vector<std::pair<IdealClass, IdealClass>> pairs;
  for (const auto& c : constellations) {
    std::vector<IdealClass> simples;
    for (auto p : c->points()) simples.push_back(simple_ideal(c, p));
    for (const auto& i : simples) {
      if (order(i) != 1) continue;
      for (const auto& j : simples) {
        if (!(i == j)) pairs.emplace_back(i, j);
      }
    }
  }
  using Pair = std::pair<IdealClass, IdealClass>;
  out.push_back(suite<Pair>("two-factor routes", pairs, [](const Pair& ij) -> std::string {
    for (std::int64_t p = 1; p <= 3; ++p) two_factor_adjoint_test(ij.first, ij.second, p);
    return {};
  }));

  std::mt19937_64 rng(7);
  std::vector<IdealClass> random;
  for (int k = 0; k < 1000; ++k) {
    auto c = share(random_constellation(rng, std::uniform_int_distribution<std::size_t>(1, 6)(rng), 2));
    random.push_back(random_ideal(rng, c, 2));
  }
  out.push_back(suite<IdealClass>("Briancon-Skoda", random, [](const IdealClass& i) -> std::string {
    for (std::int64_t n = 1; n <= 4; ++n) {
      if (!(adjoint(power(i, n)) == product(power(i, n - 1), adjoint(i)))) return show(i) + " n=" + std::to_string(n);
    }
    return {};
  }));

  out.push_back(suite<Staircase>("monomial oracle", monomial_corpus(8), [](const Staircase& s) -> std::string {
    auto r = to_point_basis(s);
    if (!(howald_adjoint(s) == newton_closure(staircase_of(r, adjoint(r.ideal))))) return s.to_string() + " adjoint";
    if (staircase_colength(s) != colength(r.ideal)) return s.to_string() + " colength";
    if (staircase_multiplicity(s) != multiplicity(r.ideal)) return s.to_string() + " multiplicity";
    return {};
  }));
  return out;
}

}  // namespace cideal::cli
