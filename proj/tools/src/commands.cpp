#include "cideal_cli/commands.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cideal/adjoint.hpp"
#include "cideal/classifier.hpp"
#include "cideal/errors.hpp"
#include "cideal/geometry.hpp"
#include "cideal/invariants.hpp"
#include "cideal/monomial.hpp"
#include "cideal_cli/dot.hpp"
#include "cideal_cli/generators.hpp"
#include "cideal_cli/verify.hpp"

namespace cideal::cli {

namespace {

using json = nlohmann::ordered_json;

struct Context {
  const Options& opts;
  std::ostream& out;
  bool structured() const { return opts.format == Format::Structured; }
  void emit(const json& j) const { out << j.dump(2) << "\n"; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Document load(const Options& opts) {
  if (opts.input.empty()) throw UsageError("--input is required");
  return read_document(opts.input);
}

IdealClass to_ideal(const NamedIdeal& n) {
  if (!n.basis) {
    throw UsageError("ideal '" + n.name + "' is a monomial generator list; use the monomial command");
  }
  try {
    return IdealClass(*n.basis);
  } catch (const Error& e) {
    throw Error(e.code(), "ideal '" + n.name + "': " + e.what());
  }
}

// The ideal named by --ideal, or the only basis ideal in the document.
IdealClass selected_ideal(const Document& d, const Options& opts) {
  if (!opts.ideals.empty()) {
    const auto* n = d.find(opts.ideals.front());
    if (!n) throw UsageError("no ideal named '" + opts.ideals.front() + "'");
    return to_ideal(*n);
  }
  const NamedIdeal* only = nullptr;
  for (const auto& n : d.ideals) {
    if (!n.basis) continue;
    if (only) throw UsageError("the document has several ideals; choose one with --ideal");
    only = &n;
  }
  if (!only) throw UsageError("the document has no ideals");
  return to_ideal(*only);
}

json basis_json(const PointBasis& b) {
  json j = json::object();
  for (auto p : b.constellation().points()) j[b.constellation().name(p)] = b[p];
  return j;
}

json excess_json(const ExcessVector& e) {
  json j = json::object();
  for (auto p : e.constellation().points()) j[e.constellation().name(p)] = e[p];
  return j;
}

json factorization_json(const IdealClass& i) {
  json j = json::array();
  for (const auto& f : factorize(i)) j.push_back({{"point", i.constellation().name(f.point)}, {"exponent", f.exponent}});
  return j;
}

std::string names(const Constellation& c, const std::vector<PointId>& pts) {
  std::string s;
  for (auto p : pts) s += (s.empty() ? "" : ", ") + c.name(p);
  return s.empty() ? "none" : s;
}

int cmd_validate(const Context& ctx) {
  auto d = load(ctx.opts);
  const auto& c = *d.constellation;
  bool all_ok = true;
  json items = json::array();
  std::ostringstream text;
  text << "constellation: " << c.size() << " point" << (c.size() == 1 ? "" : "s") << ", valid\n";
  for (const auto& n : d.ideals) {
    json item{{"name", n.name}};
    if (n.generators) {
      bool closed = n.generators->is_primary() && is_integrally_closed(*n.generators);
      item["kind"] = "generators";
      item["primary"] = n.generators->is_primary();
      item["integrally_closed"] = closed;
      text << n.name << ": monomial ideal " << n.generators->to_string()
           << (closed ? ", integrally closed\n" : ", not integrally closed\n");
    } else {
      auto e = excess(*n.basis);
      std::vector<std::string> problems;
      for (auto p : c.points()) {
        if (e[p] < 0) {
          problems.push_back("proximity inequality fails at " + c.name(p) + ": excess " + std::to_string(e[p]) + " < 0");
        }
      }
      item["kind"] = "basis";
      item["complete"] = problems.empty();
      item["problems"] = problems;
      all_ok = all_ok && problems.empty();
      text << n.name << ": " << format_basis(*n.basis) << (problems.empty() ? " complete\n" : " not complete\n");
      for (const auto& p : problems) text << "  " << p << "\n";
    }
    items.push_back(std::move(item));
  }
  if (ctx.structured()) {
    ctx.emit({{"command", "validate"}, {"points", c.size()}, {"ideals", items}, {"ok", all_ok}});
  } else {
    ctx.out << text.str();
  }
  return all_ok ? kExitOk : kExitFalse;
}

int cmd_factor(const Context& ctx) {
  auto d = load(ctx.opts);
  auto i = selected_ideal(d, ctx.opts);
  auto e = excess(i);
  if (ctx.structured()) {
    ctx.emit({{"command", "factor"},
              {"basis", basis_json(i.basis())},
              {"excess", excess_json(e)},
              {"factors", factorization_json(i)},
              {"factorization", format_factorization(i)}});
    return kExitOk;
  }
  ctx.out << "basis: " << format_basis(i.basis()) << "\n";
  ctx.out << "excess: (";
  auto ev = e.values();
  for (std::size_t k = 0; k < ev.size(); ++k) ctx.out << (k ? "," : "") << ev[k];
  ctx.out << ")\n";
  ctx.out << "factorization: " << format_factorization(i) << "\n";
  return kExitOk;
}

int cmd_adjoint(const Context& ctx) {
  auto d = load(ctx.opts);
  auto i = selected_ideal(d, ctx.opts);
  auto r = ctx.opts.iterate.value_or(1);
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "--iterate must be positive");
  auto a = iterated_adjoint(i, r);
  if (ctx.structured()) {
    ctx.emit({{"command", "adjoint"},
              {"iterate", r},
              {"basis", basis_json(a.basis())},
              {"factors", factorization_json(a)},
              {"factorization", format_factorization(a)}});
  } else {
    ctx.out << "basis: " << format_basis(a.basis()) << "\n";
    ctx.out << "factorization: " << format_factorization(a) << "\n";
  }
  return kExitOk;
}

int cmd_is_adjoint(const Context& ctx) {
  auto d = load(ctx.opts);
  auto j = selected_ideal(d, ctx.opts);
  auto n = ctx.opts.power.value_or(1);
  auto violations = adjoint_power_violations(j, n);
  const auto& c = j.constellation();
  bool ok = violations.empty();
  if (ctx.structured()) {
    json v = json::array();
    for (const auto& x : violations) v.push_back({{"point", c.name(x.point)}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    json report{{"command", "is-adjoint"}, {"power", n}, {"result", ok}, {"violations", v}};
    if (ok) report["source"] = basis_json(adjoint_source(j, n).basis());
    ctx.emit(report);
    return ok ? kExitOk : kExitFalse;
  }
  if (ok) {
    auto src = adjoint_source(j, n);
    ctx.out << "true: J^" << n << " is an adjoint ideal\n";
    ctx.out << "source: " << format_basis(src.basis()) << "\n";
    return kExitOk;
  }
  ctx.out << "false: J^" << n << " is not an adjoint ideal\n";
  for (const auto& x : violations) {
    ctx.out << "fails the adjoint-power inequality n*excess + 1 >= proximate support weight at point " << c.name(x.point)
            << ": " << x.lhs << " >= " << x.rhs << " is false\n";
  }
  return kExitFalse;
}

int cmd_min_adjoint_exponent(const Context& ctx) {
  auto d = load(ctx.opts);
  auto j = selected_ideal(d, ctx.opts);
  auto n = min_adjoint_exponent(j);
  if (ctx.structured()) {
    ctx.emit({{"command", "min-adjoint-exponent"}, {"exponent", n ? json(*n) : json(nullptr)}});
  } else if (n) {
    ctx.out << *n << "\n";
  } else {
    ctx.out << "absent: no power of J is an adjoint ideal (the blowup of J is not Gorenstein)\n";
  }
  return kExitOk;
}

int cmd_gorenstein(const Context& ctx) {
  auto d = load(ctx.opts);
  auto j = selected_ideal(d, ctx.opts);
  bool g = is_blowup_gorenstein(j);
  auto culprits = gorenstein_culprits(j);
  const auto& c = j.constellation();
  if (ctx.structured()) {
    json v = json::array();
    for (const auto& x : culprits) {
      v.push_back({{"point", c.name(x.point)}, {"proximate_support", names(c, x.proximate_support)}, {"weight", x.weight},
                   {"reason", x.describe(c)}});
    }
    ctx.emit({{"command", "gorenstein"}, {"result", g}, {"culprits", v}});
  } else {
    ctx.out << (g ? "Gorenstein\n" : "not Gorenstein\n");
    for (const auto& x : culprits) ctx.out << x.describe(c) << "\n";
  }
  return g ? kExitOk : kExitFalse;
}

int cmd_gorensteinfy(const Context& ctx) {
  auto d = load(ctx.opts);
  auto j = selected_ideal(d, ctx.opts);
  auto z = gorensteinfication(j);
  if (ctx.structured()) {
    ctx.emit({{"command", "gorensteinfy"},
              {"basis", basis_json(z.basis())},
              {"factors", factorization_json(z)},
              {"factorization", format_factorization(z)}});
  } else {
    ctx.out << "basis: " << format_basis(z.basis()) << "\n";
    ctx.out << "factorization: " << format_factorization(z) << "\n";
  }
  return kExitOk;
}

int cmd_invariants(const Context& ctx) {
  auto d = load(ctx.opts);
  auto i = selected_ideal(d, ctx.opts);
  if (i.is_unit()) throw Error(ErrorCode::UnitIdeal, "invariants of the unit ideal are not defined");
  auto a = adjoint(i);
  auto mae = min_adjoint_exponent(i);
  json j{{"command", "invariants"},
         {"basis", basis_json(i.basis())},
         {"order", order(i)},
         {"colength", colength(i)},
         {"multiplicity", multiplicity(i)},
         {"min_generators", min_generators(i)},
         {"minimal_multiplicity", has_minimal_multiplicity(i)},
         {"adjoint", basis_json(a.basis())},
         {"adjoint_colength", colength(a)},
         {"min_adjoint_exponent", mae ? json(*mae) : json(nullptr)},
         {"gorenstein_blowup", is_blowup_gorenstein(i)}};
  if (ctx.structured()) {
    ctx.emit(j);
    return kExitOk;
  }
  ctx.out << "basis: " << format_basis(i.basis()) << "\n";
  ctx.out << "factorization: " << format_factorization(i) << "\n";
  ctx.out << "order: " << order(i) << "\n";
  ctx.out << "colength: " << colength(i) << "\n";
  ctx.out << "multiplicity: " << multiplicity(i) << "\n";
  ctx.out << "minimal generators: " << min_generators(i) << "\n";
  ctx.out << "minimal multiplicity: " << (has_minimal_multiplicity(i) ? "yes" : "no") << "\n";
  ctx.out << "adjoint: " << format_basis(a.basis()) << " (" << format_factorization(a) << "), colength " << colength(a)
          << "\n";
  ctx.out << "min adjoint exponent: " << (mae ? std::to_string(*mae) : "absent") << "\n";
  ctx.out << "Gorenstein blowup: " << (is_blowup_gorenstein(i) ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_intersection(const Context& ctx) {
  auto d = load(ctx.opts);
  std::optional<IdealClass> ideal;
  if (!ctx.opts.ideals.empty()) ideal = selected_ideal(d, ctx.opts);
  auto lattice = ideal ? ExceptionalLattice::of_support(*ideal) : ExceptionalLattice::full(d.constellation);
  const auto& c = *d.constellation;
  auto m = intersection_matrix(lattice);
  std::optional<DivisorEStar> f;
  if (ideal) f = divisor_of(lattice, *ideal);

  json rows = json::array();
  json points = json::array();
  for (std::size_t r = 0; r < lattice.size(); ++r) {
    auto b = lattice.points()[r];
    json row = json::array();
    for (std::size_t k = 0; k < lattice.size(); ++k) row.push_back(m(r, k));
    rows.push_back(row);
    json p{{"point", c.name(b)},
           {"self_intersection", self_intersection(lattice, b)},
           {"canonical_degree", canonical_degree(lattice, b)}};
    if (f) p["divisor_degree"] = intersection(lattice, *f, to_total_basis(lattice, exceptional_curve(lattice, b)));
    points.push_back(p);
  }
  if (ctx.structured()) {
    ctx.emit({{"command", "intersection"}, {"matrix", rows}, {"points", points}});
    return kExitOk;
  }
  ctx.out << "intersection matrix of strict transforms (" << names(c, {lattice.points().begin(), lattice.points().end()})
          << "):\n";
  for (std::size_t r = 0; r < lattice.size(); ++r) {
    ctx.out << " ";
    for (std::size_t k = 0; k < lattice.size(); ++k) ctx.out << " " << m(r, k);
    ctx.out << "\n";
  }
  for (const auto& p : points) {
    ctx.out << p["point"].get<std::string>() << ": E^2 = " << p["self_intersection"] << ", K.E = " << p["canonical_degree"];
    if (p.contains("divisor_degree")) ctx.out << ", F.E = " << p["divisor_degree"];
    ctx.out << "\n";
  }
  return kExitOk;
}

int cmd_two_factor(const Context& ctx) {
  auto d = load(ctx.opts);
  if (ctx.opts.ideals.size() != 2) throw UsageError("two-factor needs --ideal I --ideal J");
  auto find = [&](const std::string& name) {
    const auto* n = d.find(name);
    if (!n) throw UsageError("no ideal named '" + name + "'");
    return to_ideal(*n);
  };
  auto i = find(ctx.opts.ideals[0]);
  auto j = find(ctx.opts.ideals[1]);
  auto p = ctx.opts.power.value_or(1);
  auto r = two_factor_adjoint_test(i, j, p);
  json rep{{"command", "two-factor"},
           {"p", r.p},
           {"k", r.k},
           {"support_nesting", std::string(to_string(support_nesting(i, j)))},
           {"exponent_ok", r.exponent_ok},
           {"nested", r.nested},
           {"shape_ok", r.shape_ok},
           {"order_one", r.order_one},
           {"adjoint_is_power", r.adjoint_is_power},
           {"contained", r.contained},
           {"length_identity", r.length_identity},
           {"by_structure", r.by_structure},
           {"by_adjoint", r.by_adjoint},
           {"by_lengths", r.by_lengths},
           {"sampled_q", r.sampled_q},
           {"by_direct", r.by_direct},
           {"result", r.verdict}};
  if (ctx.structured()) {
    ctx.emit(rep);
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    ctx.out << (r.verdict ? "true" : "false") << ": I^" << r.p << " J^q " << (r.verdict ? "is" : "is not")
            << " an adjoint ideal with Supp I inside Supp J\n";
    ctx.out << "  ord(J) = " << r.k << ", supports: " << to_string(support_nesting(i, j)) << "\n";
    ctx.out << "  p + 1 >= ord(J): " << yn(r.exponent_ok) << "\n";
    ctx.out << "  point basis of J is (k,...,k,1,...,1): " << yn(r.shape_ok) << "\n";
    ctx.out << "  ord(I) = 1: " << yn(r.order_one) << "\n";
    ctx.out << "  adjoint(J) = I^(k-1): " << yn(r.adjoint_is_power) << "\n";
    ctx.out << "  J inside I^k: " << yn(r.contained) << "\n";
    ctx.out << "  e(J) - colength(J) = colength(I^(k-1)): " << yn(r.length_identity) << "\n";
    ctx.out << "  routes (structure, adjoint, lengths, direct q=1..5): " << yn(r.by_structure) << ", " << yn(r.by_adjoint)
            << ", " << yn(r.by_lengths) << ", " << yn(r.by_direct) << "\n";
  }
  return r.verdict ? kExitOk : kExitFalse;
}

int cmd_monomial(const Context& ctx) {
  std::optional<Staircase> s;
  if (ctx.opts.gens) {
    s = parse_generators(*ctx.opts.gens);
  } else {
    auto d = load(ctx.opts);
    if (ctx.opts.ideals.empty()) throw UsageError("monomial needs --gens or --input with --ideal");
    const auto* n = d.find(ctx.opts.ideals.front());
    if (!n) throw UsageError("no ideal named '" + ctx.opts.ideals.front() + "'");
    if (!n->generators) throw UsageError("ideal '" + n->name + "' is not a monomial generator list");
    s = *n->generators;
  }
  auto closure = newton_closure(*s);
  auto howald = howald_adjoint(closure);
  auto res = to_point_basis(closure);
  const auto& c = *res.constellation;
  auto proximity_adjoint = newton_closure(staircase_of(res, adjoint(res.ideal)));
  if (!(proximity_adjoint == howald)) throw RouteDisagreement("Howald adjoint differs from the proximity adjoint");

  json pts = json::array();
  for (auto p : c.points()) {
    json e{{"id", c.name(p)}};
    if (auto par = c.parent(p)) e["parent"] = c.name(*par);
    if (auto sat = c.satellite_target(p)) e["satellite"] = c.name(*sat);
    e["multiplicity"] = res.ideal[p];
    e["value_x"] = res.monomial_values[p.index].first;
    e["value_y"] = res.monomial_values[p.index].second;
    pts.push_back(e);
  }
  if (ctx.structured()) {
    ctx.emit({{"command", "monomial"},
              {"generators", format_generators(*s)},
              {"closure", format_generators(closure)},
              {"integrally_closed", closure == *s},
              {"adjoint", format_generators(howald)},
              {"colength", staircase_colength(closure)},
              {"multiplicity", staircase_multiplicity(closure)},
              {"points", pts}});
    return kExitOk;
  }
  ctx.out << "generators: " << s->to_string() << "\n";
  ctx.out << "closure: " << closure.to_string() << (closure == *s ? " (already closed)" : "") << "\n";
  ctx.out << "adjoint: " << howald.to_string() << "\n";
  ctx.out << "colength: " << staircase_colength(closure) << "\n";
  ctx.out << "multiplicity: " << staircase_multiplicity(closure) << "\n";
  ctx.out << "point basis: " << format_basis(res.ideal.basis()) << "\n";
  for (auto p : c.points()) {
    ctx.out << "  " << c.name(p);
    if (auto par = c.parent(p)) ctx.out << " parent " << c.name(*par);
    if (auto sat = c.satellite_target(p)) ctx.out << " satellite " << c.name(*sat);
    ctx.out << " multiplicity " << res.ideal[p] << "\n";
  }
  return kExitOk;
}

int cmd_verify_corpus(const Context& ctx) {
  auto results = run_verification_suites();
  bool ok = true;
  json items = json::array();
  for (const auto& r : results) {
    ok = ok && r.pass;
    items.push_back({{"suite", r.name}, {"pass", r.pass}, {"instances", r.instances}, {"detail", r.detail}});
    if (!ctx.structured()) {
      ctx.out << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.instances << " instances)";
      if (!r.detail.empty()) ctx.out << ": " << r.detail;
      ctx.out << "\n";
    }
  }
  if (ctx.structured()) ctx.emit({{"command", "verify-corpus"}, {"suites", items}, {"ok", ok}});
  return ok ? kExitOk : kExitFalse;
}

int cmd_export_dot(const Context& ctx) {
  auto d = load(ctx.opts);
  std::optional<IdealClass> ideal;
  if (!ctx.opts.ideals.empty()) ideal = selected_ideal(d, ctx.opts);
  auto dot = export_dot(*d.constellation, ideal);
  if (ctx.structured()) {
    ctx.emit({{"command", "export-dot"}, {"dot", dot}});
  } else {
    ctx.out << dot;
  }
  return kExitOk;
}

const std::map<std::string, std::function<int(const Context&)>>& table() {
  static const std::map<std::string, std::function<int(const Context&)>> t = {
      {"validate", cmd_validate},
      {"factor", cmd_factor},
      {"adjoint", cmd_adjoint},
      {"is-adjoint", cmd_is_adjoint},
      {"min-adjoint-exponent", cmd_min_adjoint_exponent},
      {"gorenstein", cmd_gorenstein},
      {"gorensteinfy", cmd_gorensteinfy},
      {"invariants", cmd_invariants},
      {"intersection", cmd_intersection},
      {"two-factor", cmd_two_factor},
      {"monomial", cmd_monomial},
      {"verify-corpus", cmd_verify_corpus},
      {"export-dot", cmd_export_dot},
  };
  return t;
}

}  // namespace

std::string format_basis(const PointBasis& b) {
  std::string s = "(";
  auto v = b.values();
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

std::string format_factorization(const IdealClass& i) {
  const auto& c = i.constellation();
  std::string s;
  for (const auto& f : factorize(i)) {
    if (!s.empty()) s += " * ";
    s += f.point == c.root() ? "m" : "p_" + c.name(f.point);
    if (f.exponent != 1) s += "^" + std::to_string(f.exponent);
  }
  return s.empty() ? "1" : s;
}

const std::vector<std::string>& command_names() {
  static const auto names = [] {
    std::vector<std::string> out;
    for (const auto& [k, _] : table()) out.push_back(k);
    return out;
  }();
  return names;
}

int run_command(const std::string& command, const Options& opts, std::ostream& out, std::ostream& err) {
  auto it = table().find(command);
  if (it == table().end()) {
    err << "error: unknown command '" << command << "'\n";
    return kExitError;
  }
  try {
    return it->second(Context{opts, out});
  } catch (const RouteDisagreement& e) {
    err << "internal error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace cideal::cli
