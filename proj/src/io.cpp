#include "ehrhart/io.hpp"

#include "ehrhart/error.hpp"

namespace ehrhart {

using nlohmann::json;

json to_json(const Point& p) {
  json a = json::array();
  for (const auto& c : p) a.push_back(c.str());
  return a;
}

json to_json(const LatticePoint& p) {
  json a = json::array();
  for (const auto& c : p) a.push_back(c.get_str());
  return a;
}

json to_json(const HalfSpace& h) { return json{{"normal", to_json(h.normal)}, {"bound", h.bound.str()}}; }

json polytope_to_json(const Polytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  return json{{"dim", p.dim()}, {"vertices", std::move(verts)}};
}

std::string polytope_to_string(const Polytope& p) { return polytope_to_json(p).dump(); }

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  throw Error(Errc::ParseError, path + ": " + msg);
}

}  // namespace

Polytope polytope_from_json(const json& doc, int max_dim) {
  if (!doc.is_object()) schema_error("$", "expected an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "dim" && key != "vertices") schema_error("$." + key, "unknown key");
  }
  if (!doc.contains("dim")) schema_error("$", "missing \"dim\"");
  if (!doc.contains("vertices")) schema_error("$", "missing \"vertices\"");
  const json& dim = doc.at("dim");
  if (!dim.is_number_integer()) schema_error("$.dim", "expected an integer");
  const auto n = dim.get<long long>();
  if (n < 1) schema_error("$.dim", "must be positive");
  const json& verts = doc.at("vertices");
  if (!verts.is_array()) schema_error("$.vertices", "expected an array");
  if (verts.empty()) throw Error(Errc::EmptyInput, "$.vertices is empty");

  std::vector<Point> points;
  points.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string vpath = "$.vertices[" + std::to_string(i) + "]";
    const json& v = verts[i];
    if (!v.is_array()) schema_error(vpath, "expected an array");
    if (static_cast<long long>(v.size()) != n) {
      schema_error(vpath, "expected " + std::to_string(n) + " coordinates, got " +
                              std::to_string(v.size()));
    }
    Point p;
    p.reserve(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
      const std::string cpath = vpath + "[" + std::to_string(j) + "]";
      if (!v[j].is_string()) schema_error(cpath, "coordinate must be a \"p/q\" string");
      try {
        p.push_back(Rational::parse(v[j].get<std::string>()));
      } catch (const Error& e) {
        schema_error(cpath, e.what());
      }
    }
    points.push_back(std::move(p));
  }
  return Polytope::from_vertices(std::move(points), max_dim);
}

Polytope polytope_from_string(std::string_view text, int max_dim) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return polytope_from_json(doc, max_dim);
}

}  // namespace ehrhart
