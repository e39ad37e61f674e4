#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ehrhart/geometry.hpp"

namespace ehrhart {

// Polytope file format:
//   {"dim": n, "vertices": [["p/q", ...], ...]}
// Coordinates are strings "p/q" or "p". JSON numbers are rejected so no
// floating-point value can enter the exact pipeline.

nlohmann::json polytope_to_json(const Polytope& p);
std::string polytope_to_string(const Polytope& p);

/// Throws Errc::ParseError with the byte offset for malformed JSON, or the
/// JSON path of the offending element for schema errors. Geometric errors
/// (DimensionDeficient, ...) propagate from Polytope::from_vertices.
Polytope polytope_from_json(const nlohmann::json& doc, int max_dim = kDefaultMaxDim);
Polytope polytope_from_string(std::string_view text, int max_dim = kDefaultMaxDim);

nlohmann::json to_json(const Point& p);
nlohmann::json to_json(const LatticePoint& p);
nlohmann::json to_json(const HalfSpace& h);

}  // namespace ehrhart
