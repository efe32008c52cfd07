#include "cideal/classifier.hpp"

#include <algorithm>
#include <optional>

#include "cideal/adjoint.hpp"
#include "cideal/errors.hpp"
#include "cideal/invariants.hpp"

namespace cideal {

namespace {

void require_trivial_degrees(const IdealClass& i) {
  if (!i.constellation().has_trivial_degrees()) {
    throw Error(ErrorCode::NonTrivialDegrees, "classification requires all residue degrees to be 1");
  }
}

void require_simple(const IdealClass& i) {
  if (!is_simple(i)) throw Error(ErrorCode::NotSimple, "ideal is not simple");
}

bool is_subset(const std::vector<PointId>& a, const std::vector<PointId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void agree(bool expected, bool actual, const char* what) {
  if (expected != actual) throw RouteDisagreement(what);
}

}  // namespace

bool simple_adjoint_test(const IdealClass& i) {
  require_trivial_degrees(i);
  require_simple(i);
  bool by_order = order(i) == 1;
  for (std::int64_t n = 1; n <= 3; ++n) {
    agree(by_order, is_adjoint_power(i, n), "simple ideal: order route and adjoint-power route disagree");
  }
  return by_order;
}

std::string_view to_string(SupportNesting n) {
  switch (n) {
    case SupportNesting::Equal: return "equal";
    case SupportNesting::FirstInSecond: return "I_in_J";
    case SupportNesting::SecondInFirst: return "J_in_I";
    case SupportNesting::Incomparable: return "incomparable";
  }
  return "unknown";
}

SupportNesting support_nesting(const IdealClass& i, const IdealClass& j) {
  require_simple(i);
  require_simple(j);
  require_same_constellation(i.basis(), j.basis());
  auto si = i.support();
  auto sj = j.support();
  if (si == sj) return SupportNesting::Equal;
  if (is_subset(si, sj)) return SupportNesting::FirstInSecond;
  if (is_subset(sj, si)) return SupportNesting::SecondInFirst;
  return SupportNesting::Incomparable;
}

TwoFactorReport two_factor_adjoint_test(const IdealClass& i, const IdealClass& j, std::int64_t p) {
  require_trivial_degrees(i);
  require_simple(i);
  require_simple(j);
  require_same_constellation(i.basis(), j.basis());
  if (i == j) throw Error(ErrorCode::EqualIdeals, "the two simple ideals must differ");
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "p must be positive");

  TwoFactorReport r;
  r.p = p;
  r.k = order(j);
  r.exponent_ok = p + 1 >= r.k;

  auto si = i.support();
  auto sj = j.support();
  r.nested = is_subset(si, sj);

  // Supp J is a chain, listed ancestor-first.
  auto s = static_cast<std::int64_t>(si.size());
  r.shape_ok = s <= static_cast<std::int64_t>(sj.size());
  for (std::size_t idx = 0; r.shape_ok && idx < sj.size(); ++idx) {
    auto expected = static_cast<std::int64_t>(idx) < s ? r.k : 1;
    r.shape_ok = j[sj[idx]] == expected;
  }

  r.order_one = order(i) == 1;
  r.adjoint_is_power = adjoint(j) == power(i, r.k - 1);
  r.contained = is_contained_in(j, power(i, r.k));
  r.length_identity = multiplicity(j) - colength(j) == colength(power(i, r.k - 1));

  // For k = 1 the adjoint and length conditions hold for every pair of order-one
  // ideals, so the nesting hypothesis has to be imposed explicitly.
  bool nesting_guard = r.k >= 2 || r.nested;
  r.by_structure = r.exponent_ok && r.nested && r.shape_ok;
  r.by_adjoint = r.exponent_ok && r.order_one && r.adjoint_is_power && nesting_guard;
  r.by_lengths = r.exponent_ok && r.order_one && r.contained && r.length_identity && nesting_guard;

  auto ip = power(i, p);
  std::optional<bool> direct;
  for (std::int64_t q = 1; q <= 5; ++q) {
    r.sampled_q.push_back(q);
    bool verdict = is_adjoint_power(product(ip, power(j, q)), 1) && r.nested;
    if (direct && *direct != verdict) throw RouteDisagreement("two-factor test depends on q");
    direct = verdict;
  }
  r.by_direct = *direct;

  r.verdict = r.by_structure;
  agree(r.verdict, r.by_adjoint, "two-factor test: structural and adjoint routes disagree");
  agree(r.verdict, r.by_lengths, "two-factor test: structural and length routes disagree");
  agree(r.verdict, r.by_direct, "two-factor test: structural and direct routes disagree");
  return r;
}

bool order_one_pair_test(const IdealClass& i, const IdealClass& j) {
  require_trivial_degrees(i);
  require_simple(i);
  require_simple(j);
  require_same_constellation(i.basis(), j.basis());
  if (order(i) != 1 || order(j) != 1) throw Error(ErrorCode::NotOrderOne, "both ideals must have order one");
  if (i == j) throw Error(ErrorCode::EqualIdeals, "the two simple ideals must differ");

  bool by_containment = is_contained_in(i, j) || is_contained_in(j, i);

  auto ri = i.basis().values();
  auto rj = j.basis().values();
  bool i_ge = std::equal(ri.begin(), ri.end(), rj.begin(), [](auto a, auto b) { return a >= b; });
  bool j_ge = std::equal(ri.begin(), ri.end(), rj.begin(), [](auto a, auto b) { return a <= b; });
  bool by_bases = i_ge || j_ge;

  auto si = i.support();
  auto sj = j.support();
  bool by_supports = is_subset(si, sj) || is_subset(sj, si);

  agree(by_containment, by_bases, "order-one pair: containment and point-basis routes disagree");
  agree(by_containment, by_supports, "order-one pair: containment and support routes disagree");
  for (std::int64_t p = 1; p <= 3; ++p) {
    for (std::int64_t q = 1; q <= 3; ++q) {
      auto base = product(power(i, p), power(j, q));
      for (std::int64_t n = 1; n <= 3; ++n) {
        agree(by_containment, is_adjoint_power(base, n), "order-one pair: containment and adjoint routes disagree");
      }
    }
  }
  return by_containment;
}

MultiplicityBoundReport multiplicity_bound_check(const IdealClass& j, std::int64_t s) {
  require_trivial_degrees(j);
  require_simple(j);
  MultiplicityBoundReport r;
  r.k = order(j);
  r.s = s;
  if (r.k <= 1) throw Error(ErrorCode::InvalidArgument, "multiplicity bound needs ord(J) > 1");
  auto chain = j.support();
  if (s < 1 || s > static_cast<std::int64_t>(chain.size())) {
    throw Error(ErrorCode::InvalidArgument, "s must lie between 1 and #Supp J");
  }
  auto companion = simple_ideal(j.constellation_ptr(), chain[static_cast<std::size_t>(s - 1)]);

  r.multiplicity = multiplicity(j);
  r.bound = r.k * r.k * s + r.k;
  r.conditions_hold = order(companion) == 1 && !(companion == j) &&
                      two_factor_adjoint_test(companion, j, std::max<std::int64_t>(1, r.k - 1)).verdict;
  r.bound_holds = !r.conditions_hold || r.multiplicity >= r.bound;
  if (!r.bound_holds) throw RouteDisagreement("multiplicity below k^2 s + k although the two-factor test holds");

  const auto& c = j.constellation();
  auto len = static_cast<std::int64_t>(chain.size());
  r.extremal_shape = len == s + r.k;
  for (std::int64_t idx = 0; r.extremal_shape && idx < len; ++idx) {
    r.extremal_shape = j[chain[static_cast<std::size_t>(idx)]] == (idx < s ? r.k : 1);
  }
  auto pivot = chain[static_cast<std::size_t>(s - 1)];
  for (std::int64_t idx = s; r.extremal_shape && idx < len; ++idx) {
    auto prox = c.proximity_set(chain[static_cast<std::size_t>(idx)]);
    r.extremal_shape = std::find(prox.begin(), prox.end(), pivot) != prox.end();
  }
  r.extremal = r.conditions_hold && r.multiplicity == r.bound;
  if (r.conditions_hold && r.extremal != r.extremal_shape) {
    throw RouteDisagreement("multiplicity equality and extremal shape disagree");
  }
  return r;
}

bool minimal_multiplicity_adjoint_test(const IdealClass& i) {
  require_trivial_degrees(i);
  if (i.is_unit()) throw Error(ErrorCode::UnitIdeal, "the unit ideal is excluded");
  if (!has_minimal_multiplicity(i)) {
    throw Error(ErrorCode::NotMinimalMultiplicity, "ideal does not have minimal multiplicity");
  }
  bool adjoint_route = is_adjoint_power(i, 1);
  bool structure_route = order(i) == 1 || divides(maximal_ideal(i.constellation_ptr()), i).has_value();
  agree(adjoint_route, structure_route, "minimal multiplicity: adjoint and structural routes disagree");
  return adjoint_route;
}

bool simple_minimal_multiplicity_test(const IdealClass& i, std::int64_t p, std::int64_t q) {
  require_trivial_degrees(i);
  require_simple(i);
  if (p < 1 || q < 1) throw Error(ErrorCode::InvalidArgument, "p and q must be positive");
  bool direct = has_minimal_multiplicity(i);
  auto m = maximal_ideal(i.constellation_ptr());
  auto structural = [&](std::int64_t pp, std::int64_t qq) {
    return order(i) <= 2 && is_adjoint_power(product(power(m, pp), power(i, qq)), 1);
  };
  agree(direct, structural(p, q), "simple minimal multiplicity: routes disagree");
  for (std::int64_t pp = 1; pp <= 3; ++pp) {
    for (std::int64_t qq = 1; qq <= 3; ++qq) {
      agree(direct, structural(pp, qq), "simple minimal multiplicity: (p, q) dependence");
    }
  }
  return direct;
}

}  // namespace cideal
