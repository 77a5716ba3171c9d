#pragma once

#include <map>
#include <string>

#include "lgg/graph.hpp"

namespace lgg {

/// Wire form of a geometric graph: exact coordinate strings (decimal or
/// ratio), edge index pairs with optional weight strings, and free-form
/// provenance metadata. Parse-then-serialize is byte-stable for documents
/// this module emitted.
struct GraphDocument {
  GeometricGraph graph;
  std::map<std::string, std::string> metadata;
};

/// Parses a graph document. Structural problems in the JSON raise
/// ParseError; semantic ones (duplicate point, self-loop, bad index,
/// duplicate edge) raise ValidationError.
GraphDocument parse_graph(const std::string& text);

/// Canonical serialization; coordinates and weights in ratio form.
std::string emit_graph(const GeometricGraph& g, const std::map<std::string, std::string>& metadata = {});

struct SvgStyle {
  double width = 800.0;
  double margin = 24.0;
  /// Draw the Gabriel graph of the point set as solid "dark" edges and the
  /// document's remaining edges dotted.
  bool gabriel_underlay = false;
};

/// Standalone SVG rendering. The only place where coordinates become
/// floating point.
std::string emit_svg(const GeometricGraph& g, const SvgStyle& style = {});

}  // namespace lgg
