#include "cideal_cli/dot.hpp"

#include <sstream>

namespace cideal::cli {

std::string export_dot(const Constellation& c, const std::optional<IdealClass>& ideal) {
  std::optional<ExcessVector> exc;
  if (ideal) exc = excess(*ideal);
  std::ostringstream out;
  out << "digraph constellation {\n";
  out << "  node [shape=circle];\n";
  for (auto p : c.points()) {
    out << "  \"" << c.name(p) << "\" [label=\"" << c.name(p);
    if (ideal) out << ":" << (*ideal)[p] << "(" << (*exc)[p] << ")";
    out << "\"];\n";
  }
  for (auto p : c.points()) {
    if (auto parent = c.parent(p)) {
      out << "  \"" << c.name(*parent) << "\" -> \"" << c.name(p) << "\"";
      if (c.degree(p) != 1) out << " [label=\"" << c.degree(p) << "\"]";
      out << ";\n";
    }
  }
  for (auto p : c.points()) {
    if (auto sat = c.satellite_target(p)) {
      out << "  \"" << c.name(*sat) << "\" -> \"" << c.name(p) << "\" [style=dashed];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace cideal::cli
