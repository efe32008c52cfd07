#pragma once

#include <optional>
#include <string>

#include "cideal/point_basis.hpp"

namespace cideal::cli {

/// Graphviz rendering of a constellation: solid parent edges, dashed edges
/// from satellite targets. With an ideal, nodes read "id:multiplicity(excess)".
std::string export_dot(const Constellation& c, const std::optional<IdealClass>& ideal = std::nullopt);

}  // namespace cideal::cli
