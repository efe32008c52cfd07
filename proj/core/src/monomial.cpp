#include "cideal/monomial.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>

#include "cideal/errors.hpp"

namespace cideal {

namespace {

std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  auto q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t n, std::int64_t d) { return -floor_div(-n, d); }

void require_primary(const Staircase& s) {
  if (!s.is_primary()) throw Error(ErrorCode::NotPrimary, "monomial ideal " + s.to_string() + " is not m-primary");
}

// alpha * a + beta * b >= gamma along one edge of the Newton polygon.
struct Edge {
  std::int64_t alpha, beta, gamma;
};

std::vector<Edge> edges(const NewtonPolygon& np) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < np.vertices.size(); ++i) {
    const auto& u = np.vertices[i];
    const auto& v = np.vertices[i + 1];
    Edge e{u.b - v.b, v.a - u.a, 0};
    e.gamma = checked_add(checked_mul(e.alpha, u.a), checked_mul(e.beta, u.b));
    out.push_back(e);
  }
  return out;
}

std::int64_t last_a(const Staircase& s) { return s.generators().back().a; }

}  // namespace

Staircase::Staircase(std::vector<Exponent> generators) {
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "a staircase needs at least one generator");
  for (const auto& g : generators) {
    if (g.a < 0 || g.b < 0) throw Error(ErrorCode::InvalidArgument, "monomial exponents must be nonnegative");
  }
  std::sort(generators.begin(), generators.end());
  for (const auto& g : generators) {
    if (generators_.empty() || g.b < generators_.back().b) generators_.push_back(g);
  }
}

bool Staircase::is_unit() const { return generators_.front() == Exponent{0, 0}; }

bool Staircase::is_primary() const { return generators_.front().a == 0 && generators_.back().b == 0; }

bool Staircase::contains(Exponent e) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const Exponent& g) { return g.a <= e.a && g.b <= e.b; });
}

std::string Staircase::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out << ", ";
    const auto& g = generators_[i];
    if (g.a == 0 && g.b == 0) {
      out << "1";
      continue;
    }
    if (g.a) out << "x" << (g.a > 1 ? "^" + std::to_string(g.a) : "");
    if (g.a && g.b) out << "*";
    if (g.b) out << "y" << (g.b > 1 ? "^" + std::to_string(g.b) : "");
  }
  out << ")";
  return out.str();
}

NewtonPolygon newton_polygon(const Staircase& s) {
  require_primary(s);
  NewtonPolygon np;
  auto cross = [](const Exponent& o, const Exponent& p, const Exponent& q) {
    return (p.a - o.a) * (q.b - o.b) - (p.b - o.b) * (q.a - o.a);
  };
  for (const auto& g : s.generators()) {
    while (np.vertices.size() >= 2 && cross(np.vertices[np.vertices.size() - 2], np.vertices.back(), g) <= 0) {
      np.vertices.pop_back();
    }
    np.vertices.push_back(g);
  }
  return np;
}

Staircase newton_closure(const Staircase& s) {
  require_primary(s);
  if (s.is_unit()) return s;
  auto es = edges(newton_polygon(s));
  std::vector<Exponent> gens;
  for (std::int64_t a = 0; a <= last_a(s); ++a) {
    std::int64_t b = 0;
    for (const auto& e : es) b = std::max(b, ceil_div(e.gamma - e.alpha * a, e.beta));
    gens.push_back({a, b});
  }
  return Staircase(std::move(gens));
}

bool is_integrally_closed(const Staircase& s) { return newton_closure(s) == s; }

Staircase howald_adjoint(const Staircase& s) {
  require_primary(s);
  if (s.is_unit()) return s;
  auto es = edges(newton_polygon(s));
  std::vector<Exponent> gens;
  for (std::int64_t a = 0; a <= last_a(s); ++a) {
    std::int64_t b = 0;
    for (const auto& e : es) b = std::max(b, floor_div(e.gamma - e.alpha * (a + 1), e.beta));
    gens.push_back({a, b});
  }
  return Staircase(std::move(gens));
}

std::int64_t staircase_colength(const Staircase& s) {
  require_primary(s);
  auto gens = s.generators();
  std::int64_t total = 0;
  // Columns a in [g_i.a, g_{i+1}.a) have height g_i.b.
  for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
    total = checked_add(total, checked_mul(gens[i + 1].a - gens[i].a, gens[i].b));
  }
  return total;
}

std::int64_t staircase_multiplicity(const Staircase& s) {
  auto np = newton_polygon(s);
  std::int64_t twice_area = 0;
  for (std::size_t i = 0; i + 1 < np.vertices.size(); ++i) {
    const auto& u = np.vertices[i];
    const auto& v = np.vertices[i + 1];
    twice_area = checked_add(twice_area, checked_mul(v.a - u.a, u.b + v.b));
  }
  return twice_area;
}

namespace {

// Monomial u^a w^b in the coordinates of a chart.
using Monomial = Exponent;

struct ChartState {
  Staircase ideal;
  std::optional<PointId> parent;
  // Curves through the chart origin: {u = 0} and {w = 0}; set when exceptional.
  std::optional<PointId> u_curve, w_curve;
  Monomial x, y;  ///< the original coordinates written in (u, w)
};

struct Builder {
  Constellation c;
  std::vector<std::int64_t> basis;
  std::vector<std::pair<std::int64_t, std::int64_t>> values;

  void visit(const ChartState& st) {
    auto gens = st.ideal.generators();
    std::int64_t r = std::numeric_limits<std::int64_t>::max();
    for (const auto& g : gens) r = std::min(r, g.a + g.b);

    PointId id = c.root();
    if (st.parent) {
      // Besides the parent, the new point can only lie on the other labelled curve.
      auto other = st.u_curve == st.parent ? st.w_curve : st.u_curve;
      id = c.add_point(*st.parent, other);
    }
    basis.push_back(r);
    values.emplace_back(st.x.a + st.x.b, st.y.a + st.y.b);

    // x-chart: u = u', w = u' w'. The exceptional curve is {u' = 0}.
    std::vector<Exponent> tx, ty;
    for (const auto& g : gens) {
      tx.push_back({g.a + g.b - r, g.b});
      ty.push_back({g.a, g.a + g.b - r});
    }
    Staircase sx(std::move(tx));
    if (!sx.is_unit()) {
      check_closed(sx);
      visit(ChartState{sx, id, id, st.w_curve, {st.x.a + st.x.b, st.x.b}, {st.y.a + st.y.b, st.y.b}});
    }
    // y-chart: u = u' w', w = w'. The exceptional curve is {w' = 0}.
    Staircase sy(std::move(ty));
    if (!sy.is_unit()) {
      check_closed(sy);
      visit(ChartState{sy, id, st.u_curve, id, {st.x.a, st.x.a + st.x.b}, {st.y.a, st.y.a + st.y.b}});
    }
  }

  static void check_closed(const Staircase& s) {
    if (!s.is_primary() || !is_integrally_closed(s)) {
      throw RouteDisagreement("transform " + s.to_string() + " of a closed monomial ideal is not closed");
    }
  }
};

}  // namespace

MonomialResolution to_point_basis(const Staircase& s) {
  require_primary(s);
  if (!is_integrally_closed(s)) {
    throw Error(ErrorCode::NotClosed, "monomial ideal " + s.to_string() + " is not integrally closed; its closure is " +
                                          newton_closure(s).to_string());
  }
  Builder b;
  if (s.is_unit()) {
    b.basis.push_back(0);
    b.values.emplace_back(1, 1);
  } else {
    b.visit(ChartState{s, std::nullopt, std::nullopt, std::nullopt, {1, 0}, {0, 1}});
  }
  auto ptr = share(std::move(b.c));
  IdealClass ideal(PointBasis(ptr, std::move(b.basis)));
  return MonomialResolution{ptr, std::move(ideal), std::move(b.values)};
}

Staircase staircase_of(const MonomialResolution& res, const IdealClass& ideal) {
  require_same_constellation(PointBasis(res.constellation), ideal.basis());
  if (ideal.is_unit()) return Staircase::unit();
  struct Rees {
    std::int64_t vx, vy, target;
  };
  std::vector<Rees> rees;
  for (const auto& f : factorize(ideal)) {
    const auto& [vx, vy] = res.monomial_values.at(f.point.index);
    rees.push_back({vx, vy, divisorial_valuation(f.point, ideal)});
  }
  std::vector<Exponent> gens;
  for (std::int64_t a = 0;; ++a) {
    std::int64_t b = 0;
    for (const auto& r : rees) b = std::max(b, ceil_div(r.target - a * r.vx, r.vy));
    gens.push_back({a, b});
    if (b == 0) break;
  }
  return Staircase(std::move(gens));
}

}  // namespace cideal
