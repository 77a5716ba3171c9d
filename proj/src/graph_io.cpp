#include "lgg/graph_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "lgg/gabriel.hpp"

namespace lgg {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "lgg-graph/1";

Rational coord_from_json(const json& j, const char* what) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  fail(ErrorKind::ParseError, std::string(what) + " must be a string (floats would not be exact)");
}

}  // namespace

GraphDocument parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::ParseError, "document root must be an object");
  if (!doc.contains("version") || doc["version"] != kVersion)
    fail(ErrorKind::ParseError, std::string("missing or unsupported version, want \"") + kVersion + "\"");
  if (!doc.contains("points") || !doc["points"].is_array()) fail(ErrorKind::ParseError, "missing points array");

  std::vector<Point> pts;
  for (std::size_t i = 0; i < doc["points"].size(); ++i) {
    const json& p = doc["points"][i];
    if (!p.is_array() || p.size() != 2)
      fail(ErrorKind::ParseError, "point " + std::to_string(i) + " must be [x, y]");
    try {
      pts.push_back(Point{coord_from_json(p[0], "coordinate"), coord_from_json(p[1], "coordinate")});
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError)
        fail(ErrorKind::ParseError, "point " + std::to_string(i) + ": " + e.what());
      throw;
    }
  }

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) fail(ErrorKind::ParseError, "edges must be an array");
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
      const json& e = doc["edges"][i];
      if (!e.is_array() || e.size() < 2 || e.size() > 3 || !e[0].is_number_integer() || !e[1].is_number_integer())
        fail(ErrorKind::ParseError, "edge " + std::to_string(i) + " must be [a, b] or [a, b, weight]");
      Edge edge;
      auto a = e[0].get<std::int64_t>(), b = e[1].get<std::int64_t>();
      if (a < 0 || b < 0) fail(ErrorKind::ParseError, "edge " + std::to_string(i) + " has a negative index");
      edge.a = static_cast<VertexId>(a);
      edge.b = static_cast<VertexId>(b);
      if (e.size() == 3) {
        if (!e[2].is_string()) fail(ErrorKind::ParseError, "edge " + std::to_string(i) + " weight must be a string");
        edge.weight = Rational::parse(e[2].get<std::string>());
      }
      edges.push_back(std::move(edge));
    }
  }

  GraphDocument out;
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) fail(ErrorKind::ParseError, "metadata must be an object");
    for (auto& [key, value] : doc["metadata"].items()) {
      if (!value.is_string()) fail(ErrorKind::ParseError, "metadata values must be strings");
      out.metadata[key] = value.get<std::string>();
    }
  }
  try {
    out.graph = GeometricGraph(PointSet(std::move(pts)), std::move(edges));
  } catch (const Error& e) {
    fail(ErrorKind::ValidationError, e.what());
  }
  return out;
}

std::string emit_graph(const GeometricGraph& g, const std::map<std::string, std::string>& metadata) {
  json doc;
  doc["version"] = kVersion;
  doc["points"] = json::array();
  for (const Point& p : g.points()) doc["points"].push_back(json::array({p.x.str(), p.y.str()}));
  doc["edges"] = json::array();
  for (const Edge& e : g.edges()) {
    json edge = json::array({e.a, e.b});
    if (e.weight != Rational(1)) edge.push_back(e.weight.str());
    doc["edges"].push_back(std::move(edge));
  }
  doc["metadata"] = json::object();
  for (const auto& [k, v] : metadata) doc["metadata"][k] = v;
  return doc.dump(2) + "\n";
}

std::string emit_svg(const GeometricGraph& g, const SvgStyle& style) {
  // Floating point is allowed from here on.
  double minx = 0, miny = 0, maxx = 1, maxy = 1;
  bool first = true;
  for (const Point& p : g.points()) {
    double x = p.x.raw().get_d(), y = p.y.raw().get_d();
    if (first) {
      minx = maxx = x;
      miny = maxy = y;
      first = false;
    } else {
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
      miny = std::min(miny, y);
      maxy = std::max(maxy, y);
    }
  }
  double spanx = std::max(maxx - minx, 1e-12), spany = std::max(maxy - miny, 1e-12);
  double scale = (style.width - 2 * style.margin) / std::max(spanx, spany);
  double height = spany * scale + 2 * style.margin;
  auto tx = [&](double x) { return style.margin + (x - minx) * scale; };
  auto ty = [&](double y) { return height - style.margin - (y - miny) * scale; };  // SVG y grows downward

  std::set<std::pair<VertexId, VertexId>> dark;
  if (style.gabriel_underlay && !g.points().empty()) {
    GeometricGraph gg = gabriel_graph_fast(g.points());
    for (const Edge& e : gg.edges()) dark.insert({e.a, e.b});
  }

  std::ostringstream svg;
  svg.precision(6);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << style.width << " " << height << "\">\n";
  if (style.gabriel_underlay) {
    for (auto [a, b] : dark) {
      svg << "  <line class=\"gabriel\" x1=\"" << tx(g.point(a).x.raw().get_d()) << "\" y1=\""
          << ty(g.point(a).y.raw().get_d()) << "\" x2=\"" << tx(g.point(b).x.raw().get_d()) << "\" y2=\""
          << ty(g.point(b).y.raw().get_d()) << "\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n";
    }
  }
  for (const Edge& e : g.edges()) {
    bool extra = style.gabriel_underlay && dark.count({e.a, e.b}) == 0;
    svg << "  <line class=\"" << (extra ? "extra" : "edge") << "\" x1=\"" << tx(g.point(e.a).x.raw().get_d())
        << "\" y1=\"" << ty(g.point(e.a).y.raw().get_d()) << "\" x2=\"" << tx(g.point(e.b).x.raw().get_d())
        << "\" y2=\"" << ty(g.point(e.b).y.raw().get_d()) << "\" stroke=\"#222222\" stroke-width=\"1\"";
    if (extra) svg << " stroke-dasharray=\"4 3\"";
    svg << "/>\n";
  }
  for (const Point& p : g.points()) {
    svg << "  <circle cx=\"" << tx(p.x.raw().get_d()) << "\" cy=\"" << ty(p.y.raw().get_d())
        << "\" r=\"2.5\" fill=\"#d62728\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace lgg
