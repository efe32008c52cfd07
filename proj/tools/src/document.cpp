#include "cideal_cli/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cideal/errors.hpp"
#include "cideal_cli/generators.hpp"

namespace cideal::cli {

namespace {

using json = nlohmann::ordered_json;

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void fail(const std::string& what) { throw DocumentError(what); }

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + ": missing \"" + key + "\"");
  return *it;
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where + " must be a string");
  return v.get<std::string>();
}

std::int64_t as_integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where + " must be an integer");
  return v.get<std::int64_t>();
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const auto* a : allowed) known = known || key == a;
    if (!known) fail(where + ": unknown key \"" + key + "\"");
  }
}

ConstellationPtr parse_points(const json& points) {
  if (!points.is_array() || points.empty()) fail("\"points\" must be a nonempty array");
  std::vector<PointRecord> records;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& p = points[k];
    std::string where = "points[" + std::to_string(k) + "]";
    if (!p.is_object()) fail(where + " must be an object");
    reject_unknown_keys(p, {"id", "parent", "satellite", "degree"}, where);
    PointRecord rec;
    rec.name = as_string(member(p, "id", where), where + ".id");
    where = "point '" + rec.name + "'";
    if (p.contains("parent")) rec.parent = as_string(p["parent"], where + " parent");
    if (p.contains("satellite")) rec.satellite = as_string(p["satellite"], where + " satellite");
    if (p.contains("degree")) rec.degree = as_integer(p["degree"], where + " degree");
    records.push_back(std::move(rec));
  }
  auto report = validate(records);
  if (!report.ok()) {
    const auto& issue = report.issues.front();
    std::string msg = "invalid constellation at point '" + issue.point + "': " + std::string(to_string(issue.kind));
    if (!issue.detail.empty()) msg += " (" + issue.detail + ")";
    fail(msg);
  }
  return share(Constellation::from_records(records));
}

NamedIdeal parse_ideal(const json& v, const ConstellationPtr& c, std::size_t k) {
  std::string where = "ideals[" + std::to_string(k) + "]";
  if (!v.is_object()) fail(where + " must be an object");
  reject_unknown_keys(v, {"name", "basis", "generators"}, where);
  NamedIdeal out;
  out.name = as_string(member(v, "name", where), where + ".name");
  where = "ideal '" + out.name + "'";
  bool has_basis = v.contains("basis");
  bool has_gens = v.contains("generators");
  if (has_basis == has_gens) fail(where + ": exactly one of \"basis\" and \"generators\" is required");
  if (has_gens) {
    try {
      out.generators = parse_generators(as_string(v["generators"], where + " generators"));
    } catch (const DocumentError& e) {
      fail(where + ": " + e.what());
    } catch (const Error& e) {
      fail(where + ": " + e.what());
    }
    return out;
  }
  const auto& basis = v["basis"];
  if (!basis.is_object()) fail(where + ": \"basis\" must be an object mapping point ids to multiplicities");
  std::vector<std::int64_t> values(c->size(), 0);
  for (const auto& [id, value] : basis.items()) {
    auto p = c->find(id);
    if (!p) fail(where + ": unknown point '" + id + "'");
    auto r = as_integer(value, where + " entry for '" + id + "'");
    if (r < 0) fail(where + ": negative multiplicity at '" + id + "'");
    values[p->index] = r;
  }
  out.basis = PointBasis(c, std::move(values));
  return out;
}

}  // namespace

const NamedIdeal* Document::find(std::string_view name) const {
  for (const auto& i : ideals) {
    if (i.name == name) return &i;
  }
  return nullptr;
}

bool operator==(const Document& a, const Document& b) {
  if (!(*a.constellation == *b.constellation) || a.ideals.size() != b.ideals.size()) return false;
  for (std::size_t k = 0; k < a.ideals.size(); ++k) {
    const auto& x = a.ideals[k];
    const auto& y = b.ideals[k];
    if (x.name != y.name || x.generators != y.generators || x.basis.has_value() != y.basis.has_value()) return false;
    if (x.basis && !std::equal(x.basis->values().begin(), x.basis->values().end(), y.basis->values().begin(),
                               y.basis->values().end())) {
      return false;
    }
  }
  return true;
}

Document parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    // Keep only the description after nlohmann's "[json.exception...] parse error at ...: " prefix.
    if (auto pos = msg.rfind(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
    fail("syntax error at " + position(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + msg);
  }
  if (!root.is_object()) fail("document must be a JSON object");
  reject_unknown_keys(root, {"version", "points", "ideals"}, "document");
  auto version = as_integer(member(root, "version", "document"), "\"version\"");
  if (version != kDocumentVersion) fail("unsupported document version " + std::to_string(version));

  Document d;
  d.constellation = parse_points(member(root, "points", "document"));
  if (root.contains("ideals")) {
    const auto& ideals = root["ideals"];
    if (!ideals.is_array()) fail("\"ideals\" must be an array");
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      auto ideal = parse_ideal(ideals[k], d.constellation, k);
      if (d.find(ideal.name)) fail("duplicate ideal name '" + ideal.name + "'");
      d.ideals.push_back(std::move(ideal));
    }
  }
  return d;
}

Document read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string serialize(const Document& d) {
  const auto& c = *d.constellation;
  json root;
  root["version"] = kDocumentVersion;
  json points = json::array();
  for (auto p : c.points()) {
    json entry;
    entry["id"] = c.name(p);
    if (auto parent = c.parent(p)) entry["parent"] = c.name(*parent);
    if (auto sat = c.satellite_target(p)) entry["satellite"] = c.name(*sat);
    if (c.degree(p) != 1) entry["degree"] = c.degree(p);
    points.push_back(std::move(entry));
  }
  root["points"] = std::move(points);
  json ideals = json::array();
  for (const auto& i : d.ideals) {
    json entry;
    entry["name"] = i.name;
    if (i.generators) {
      entry["generators"] = format_generators(*i.generators);
    } else {
      json basis = json::object();
      for (auto p : c.points()) {
        if ((*i.basis)[p] != 0) basis[c.name(p)] = (*i.basis)[p];
      }
      entry["basis"] = std::move(basis);
    }
    ideals.push_back(std::move(entry));
  }
  root["ideals"] = std::move(ideals);
  return root.dump(2) + "\n";
}

}  // namespace cideal::cli
