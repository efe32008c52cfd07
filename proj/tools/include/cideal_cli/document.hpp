#pragma once

// On-disk document: one constellation plus named ideals, as versioned JSON.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cideal/monomial.hpp"
#include "cideal/point_basis.hpp"

namespace cideal::cli {

/// Malformed or inconsistent document text.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exactly one of `basis` and `generators` is set.
struct NamedIdeal {
  std::string name;
  std::optional<PointBasis> basis;
  std::optional<Staircase> generators;
};

struct Document {
  ConstellationPtr constellation;
  std::vector<NamedIdeal> ideals;

  const NamedIdeal* find(std::string_view name) const;
};

bool operator==(const Document& a, const Document& b);

inline constexpr int kDocumentVersion = 1;

/// Throws DocumentError with line/column for syntax errors and the offending
/// id for referential errors.
Document parse_document(std::string_view text);
Document read_document(const std::string& path);

/// Canonical text: points ancestor-first, defaults omitted, zero basis
/// entries omitted, two-space indentation, trailing newline.
std::string serialize(const Document& d);

}  // namespace cideal::cli
