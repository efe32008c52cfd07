#pragma once

// Constellations of infinitely near points.
//
// A constellation is a finite tree of points rooted at the base ring. Every
// non-root point has a parent (the point it is a quadratic transform of), an
// optional satellite target (a second, earlier point it is proximate to), and
// a residue degree over its parent. Point ids are assigned in insertion order,
// which is always ancestor-first.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cideal {

struct PointId {
  std::uint32_t index = 0;
  friend auto operator<=>(PointId, PointId) = default;
};

/// One point as it appears in a serialized document, referenced by name.
struct PointRecord {
  std::string name;
  std::optional<std::string> parent;
  std::optional<std::string> satellite;
  std::int64_t degree = 1;
  friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

enum class Violation {
  MissingRoot,
  MultipleRoots,
  DuplicateName,
  UnknownParent,
  UnknownSatellite,
  Cycle,
  ZeroDegree,
  RootDegree,
  SatelliteIsParent,
  IllegalSatellite,
};

std::string_view to_string(Violation v);

struct ValidationIssue {
  Violation kind;
  std::string point;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string describe() const;
};

/// Checks raw records against every constellation invariant.
ValidationReport validate(std::span<const PointRecord> records);

class Constellation {
 public:
  explicit Constellation(std::string root_name = "A0");

  /// Builds from records in any order; throws Error(InvalidConstellation)
  /// carrying the validation report when the records are not valid.
  static Constellation from_records(std::span<const PointRecord> records);

  static constexpr PointId root() { return PointId{0}; }

  /// Appends a point. An empty name defaults to "A<index>".
  PointId add_point(PointId parent, std::optional<PointId> satellite_target = std::nullopt,
                    std::int64_t degree = 1, std::string name = {});

  std::size_t size() const { return nodes_.size(); }
  bool contains(PointId p) const { return p.index < nodes_.size(); }

  std::optional<PointId> parent(PointId p) const;
  std::optional<PointId> satellite_target(PointId p) const;
  /// Residue degree of p over its parent; 1 for the root.
  std::int64_t degree(PointId p) const;
  const std::string& name(PointId p) const;
  std::optional<PointId> find(std::string_view name) const;

  /// All points, ancestor-first.
  std::vector<PointId> points() const;
  std::span<const PointId> children(PointId p) const;
  /// prox(p): the points p is proximate to (parent, then satellite target).
  std::vector<PointId> proximity_set(PointId p) const;
  /// The points proximate to b, ancestor-first.
  std::span<const PointId> proximate_points(PointId b) const;

  /// [B : root], the product of edge degrees along chain(B).
  std::int64_t degree_over_base(PointId b) const;
  /// [C : B] for B on chain(C).
  std::int64_t relative_degree(PointId b, PointId c) const;
  /// Root-to-b path, inclusive.
  std::vector<PointId> chain(PointId b) const;
  bool is_ancestor_or_self(PointId a, PointId b) const;
  bool has_trivial_degrees() const;

  std::vector<PointRecord> records() const;

  /// The sub-constellation of points containing b, rooted at b. Proximities to
  /// points outside the subtree are dropped. `embedding[i]` is the point of
  /// this constellation that becomes point i of the result.
  Constellation subtree(PointId b, std::vector<PointId>& embedding) const;

  friend bool operator==(const Constellation& a, const Constellation& b);

 private:
  struct Node {
    std::string name;
    std::optional<PointId> parent;
    std::optional<PointId> satellite;
    std::int64_t degree = 1;
    std::int64_t base_degree = 1;
    std::uint32_t depth = 0;
    std::vector<PointId> children;
    std::vector<PointId> proximates;
  };

  const Node& node(PointId p) const;

  std::vector<Node> nodes_;
};

using ConstellationPtr = std::shared_ptr<const Constellation>;

inline ConstellationPtr share(Constellation c) {
  return std::make_shared<const Constellation>(std::move(c));
}

/// Re-checks the invariants of an already built constellation.
ValidationReport validate(const Constellation& c);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<std::int64_t> operator*(std::span<const std::int64_t> v) const;
  IntMatrix transposed() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// entry(B,B) = 1, entry(B,C) = -[C:B] when C is proximate to B, 0 otherwise;
/// rows and columns in ancestor-first order.
IntMatrix proximity_matrix(const Constellation& c);

}  // namespace cideal
