#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ehrhart/generate.hpp"
#include "ehrhart/geometry.hpp"

namespace testing_helpers {

inline ehrhart::Point pt(std::initializer_list<const char*> coords) {
  ehrhart::Point p;
  for (const char* c : coords) p.push_back(ehrhart::Rational::parse(c));
  return p;
}

inline ehrhart::Polytope poly(std::initializer_list<std::initializer_list<const char*>> verts) {
  std::vector<ehrhart::Point> pts;
  for (const auto& v : verts) pts.push_back(pt(v));
  return ehrhart::Polytope::from_vertices(std::move(pts));
}

inline const ehrhart::Polytope& fixture(const std::string& name) {
  for (const auto& e : ehrhart::catalog()) {
    if (e.name == name) return e.polytope;
  }
  throw std::runtime_error("no fixture " + name);
}

inline std::vector<ehrhart::Integer> ints(std::initializer_list<long> vals) {
  std::vector<ehrhart::Integer> out;
  for (long v : vals) out.emplace_back(v);
  return out;
}

}  // namespace testing_helpers
