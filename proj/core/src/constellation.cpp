#include "cideal/constellation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cideal/errors.hpp"

namespace cideal {

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::MissingRoot: return "MissingRoot";
    case Violation::MultipleRoots: return "MultipleRoots";
    case Violation::DuplicateName: return "DuplicateName";
    case Violation::UnknownParent: return "UnknownParent";
    case Violation::UnknownSatellite: return "UnknownSatellite";
    case Violation::Cycle: return "Cycle";
    case Violation::ZeroDegree: return "ZeroDegree";
    case Violation::RootDegree: return "RootDegree";
    case Violation::SatelliteIsParent: return "SatelliteIsParent";
    case Violation::IllegalSatellite: return "IllegalSatellite";
  }
  return "Unknown";
}

std::string ValidationReport::describe() const {
  std::ostringstream out;
  for (const auto& issue : issues) {
    out << to_string(issue.kind) << " at " << issue.point;
    if (!issue.detail.empty()) out << ": " << issue.detail;
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> proximity_names(const PointRecord& rec) {
  std::vector<std::string> out;
  if (rec.parent) out.push_back(*rec.parent);
  if (rec.satellite) out.push_back(*rec.satellite);
  return out;
}

}  // namespace

ValidationReport validate(std::span<const PointRecord> records) {
  ValidationReport report;
  auto add = [&](Violation kind, const std::string& point, std::string detail = {}) {
    report.issues.push_back({kind, point, std::move(detail)});
  };

  std::map<std::string, const PointRecord*> by_name;
  for (const auto& rec : records) {
    if (!by_name.emplace(rec.name, &rec).second) add(Violation::DuplicateName, rec.name);
  }

  std::size_t roots = 0;
  for (const auto& rec : records) {
    if (!rec.parent) {
      ++roots;
      if (rec.degree != 1) add(Violation::RootDegree, rec.name, "root degree must be 1");
      if (rec.satellite) add(Violation::IllegalSatellite, rec.name, "root cannot be a satellite");
      continue;
    }
    if (rec.degree <= 0) add(Violation::ZeroDegree, rec.name, "degree must be positive");
    if (!by_name.contains(*rec.parent)) {
      add(Violation::UnknownParent, rec.name, "unknown parent '" + *rec.parent + "'");
    }
    if (rec.satellite) {
      if (!by_name.contains(*rec.satellite)) {
        add(Violation::UnknownSatellite, rec.name, "unknown satellite target '" + *rec.satellite + "'");
      } else if (*rec.satellite == *rec.parent) {
        add(Violation::SatelliteIsParent, rec.name, "satellite target equals parent");
      }
    }
  }
  if (roots == 0 && !records.empty()) add(Violation::MissingRoot, "-", "no point without parent");
  if (records.empty()) add(Violation::MissingRoot, "-", "constellation is empty");
  if (roots > 1) add(Violation::MultipleRoots, "-", std::to_string(roots) + " points without parent");

  // Cycle detection along parent links.
  std::map<std::string, int> state;  // 0 unvisited, 1 in progress, 2 done (reaches a root)
  for (const auto& rec : records) {
    std::vector<std::string> path;
    std::string cur = rec.name;
    bool cyclic = false;
    while (true) {
      auto st = state[cur];
      if (st == 2) break;
      if (st == 1) {
        cyclic = true;
        break;
      }
      state[cur] = 1;
      path.push_back(cur);
      auto it = by_name.find(cur);
      if (it == by_name.end() || !it->second->parent || !by_name.contains(*it->second->parent)) break;
      cur = *it->second->parent;
    }
    for (const auto& p : path) state[p] = 2;
    if (cyclic) add(Violation::Cycle, rec.name, "parent chain loops through '" + cur + "'");
  }
  if (!report.ok()) return report;

  // Satellite invariant: the target must be in prox(parent).
  for (const auto& rec : records) {
    if (!rec.parent || !rec.satellite) continue;
    const auto& parent_rec = *by_name.at(*rec.parent);
    auto prox = proximity_names(parent_rec);
    if (std::find(prox.begin(), prox.end(), *rec.satellite) == prox.end()) {
      add(Violation::IllegalSatellite, rec.name,
          "satellite target '" + *rec.satellite + "' is not proximate to parent '" + *rec.parent + "'");
    }
  }
  return report;
}

Constellation::Constellation(std::string root_name) {
  Node root;
  root.name = root_name.empty() ? "A0" : std::move(root_name);
  nodes_.push_back(std::move(root));
}

const Constellation::Node& Constellation::node(PointId p) const {
  if (!contains(p)) throw Error(ErrorCode::UnknownPoint, "point index " + std::to_string(p.index));
  return nodes_[p.index];
}

PointId Constellation::add_point(PointId parent, std::optional<PointId> satellite_target,
                                 std::int64_t degree, std::string name) {
  if (!contains(parent)) {
    throw Error(ErrorCode::UnknownParent, "parent index " + std::to_string(parent.index));
  }
  if (degree <= 0) throw Error(ErrorCode::ZeroDegree, "degree must be positive");
  if (satellite_target) {
    if (!contains(*satellite_target)) {
      throw Error(ErrorCode::IllegalSatellite, "unknown satellite target");
    }
    auto prox = proximity_set(parent);
    if (*satellite_target == parent ||
        std::find(prox.begin(), prox.end(), *satellite_target) == prox.end()) {
      throw Error(ErrorCode::IllegalSatellite, "satellite target '" + nodes_[satellite_target->index].name +
                                                   "' is not proximate to parent '" + nodes_[parent.index].name +
                                                   "'");
    }
  }
  PointId id{static_cast<std::uint32_t>(nodes_.size())};
  if (name.empty()) name = "A" + std::to_string(id.index);
  if (find(name)) throw Error(ErrorCode::InvalidArgument, "duplicate point name '" + name + "'");

  Node n;
  n.name = std::move(name);
  n.parent = parent;
  n.satellite = satellite_target;
  n.degree = degree;
  n.base_degree = checked_mul(nodes_[parent.index].base_degree, degree);
  n.depth = nodes_[parent.index].depth + 1;
  nodes_.push_back(std::move(n));
  nodes_[parent.index].children.push_back(id);
  nodes_[parent.index].proximates.push_back(id);
  if (satellite_target) nodes_[satellite_target->index].proximates.push_back(id);
  return id;
}

Constellation Constellation::from_records(std::span<const PointRecord> records) {
  auto report = validate(records);
  if (!report.ok()) throw Error(ErrorCode::InvalidConstellation, report.describe());

  // Stable topological order: repeatedly take records whose parent is placed.
  std::vector<const PointRecord*> pending;
  const PointRecord* root = nullptr;
  for (const auto& rec : records) {
    if (!rec.parent) {
      root = &rec;
    } else {
      pending.push_back(&rec);
    }
  }
  Constellation c(root->name);
  while (!pending.empty()) {
    std::vector<const PointRecord*> later;
    for (const auto* rec : pending) {
      auto parent = c.find(*rec->parent);
      if (!parent) {
        later.push_back(rec);
        continue;
      }
      std::optional<PointId> sat;
      if (rec->satellite) sat = c.find(*rec->satellite);
      c.add_point(*parent, sat, rec->degree, rec->name);
    }
    pending = std::move(later);
  }
  return c;
}

std::optional<PointId> Constellation::parent(PointId p) const { return node(p).parent; }
std::optional<PointId> Constellation::satellite_target(PointId p) const { return node(p).satellite; }
std::int64_t Constellation::degree(PointId p) const { return node(p).degree; }
const std::string& Constellation::name(PointId p) const { return node(p).name; }

std::optional<PointId> Constellation::find(std::string_view name) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].name == name) return PointId{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

std::vector<PointId> Constellation::points() const {
  std::vector<PointId> out(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) out[i] = PointId{static_cast<std::uint32_t>(i)};
  return out;
}

std::span<const PointId> Constellation::children(PointId p) const { return node(p).children; }

std::vector<PointId> Constellation::proximity_set(PointId p) const {
  const auto& n = node(p);
  std::vector<PointId> out;
  if (n.parent) out.push_back(*n.parent);
  if (n.satellite) out.push_back(*n.satellite);
  return out;
}

std::span<const PointId> Constellation::proximate_points(PointId b) const { return node(b).proximates; }

std::int64_t Constellation::degree_over_base(PointId b) const { return node(b).base_degree; }

std::int64_t Constellation::relative_degree(PointId b, PointId c) const {
  if (!is_ancestor_or_self(b, c)) {
    throw Error(ErrorCode::InvalidArgument, "'" + name(b) + "' is not on the chain of '" + name(c) + "'");
  }
  return node(c).base_degree / node(b).base_degree;
}

std::vector<PointId> Constellation::chain(PointId b) const {
  std::vector<PointId> out;
  std::optional<PointId> cur = b;
  node(b);
  while (cur) {
    out.push_back(*cur);
    cur = nodes_[cur->index].parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool Constellation::is_ancestor_or_self(PointId a, PointId b) const {
  const auto& na = node(a);
  std::optional<PointId> cur = b;
  node(b);
  while (cur && nodes_[cur->index].depth > na.depth) cur = nodes_[cur->index].parent;
  return cur && *cur == a;
}

bool Constellation::has_trivial_degrees() const {
  return std::all_of(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.degree == 1; });
}

std::vector<PointRecord> Constellation::records() const {
  std::vector<PointRecord> out;
  out.reserve(nodes_.size());
  for (const auto& n : nodes_) {
    PointRecord rec;
    rec.name = n.name;
    if (n.parent) rec.parent = nodes_[n.parent->index].name;
    if (n.satellite) rec.satellite = nodes_[n.satellite->index].name;
    rec.degree = n.degree;
    out.push_back(std::move(rec));
  }
  return out;
}

Constellation Constellation::subtree(PointId b, std::vector<PointId>& embedding) const {
  embedding.clear();
  std::vector<std::optional<PointId>> image(nodes_.size());
  Constellation out(node(b).name);
  image[b.index] = root();
  embedding.push_back(b);
  for (std::size_t i = b.index + 1; i < nodes_.size(); ++i) {
    const auto& n = nodes_[i];
    if (!n.parent || !image[n.parent->index]) continue;
    std::optional<PointId> sat;
    if (n.satellite && image[n.satellite->index]) sat = image[n.satellite->index];
    image[i] = out.add_point(*image[n.parent->index], sat, n.degree, n.name);
    embedding.push_back(PointId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

bool operator==(const Constellation& a, const Constellation& b) { return a.records() == b.records(); }

ValidationReport validate(const Constellation& c) {
  auto records = c.records();
  auto report = validate(records);
  // Ancestor-first: every parent and satellite precedes its point.
  for (auto p : c.points()) {
    for (auto q : c.proximity_set(p)) {
      if (!(q < p)) report.issues.push_back({Violation::Cycle, c.name(p), "proximity to a later point"});
    }
  }
  return report;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      auto a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out(i, j) = checked_add(out(i, j), checked_mul(a, rhs(k, j)));
      }
    }
  }
  return out;
}

std::vector<std::int64_t> IntMatrix::operator*(std::span<const std::int64_t> v) const {
  if (cols_ != v.size()) throw Error(ErrorCode::InvalidArgument, "matrix-vector shape mismatch");
  std::vector<std::int64_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] = checked_add(out[i], checked_mul((*this)(i, j), v[j]));
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

IntMatrix proximity_matrix(const Constellation& c) {
  auto m = IntMatrix::identity(c.size());
  for (auto b : c.points()) {
    for (auto p : c.proximate_points(b)) m(b.index, p.index) = -c.relative_degree(b, p);
  }
  return m;
}

}  // namespace cideal
