#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ehrhart/rational.hpp"

namespace ehrhart {

using Point = std::vector<Rational>;
using LatticePoint = std::vector<Integer>;

std::string to_string(const Point& p);
std::string to_string(const LatticePoint& p);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// The half-space {x : <normal, x> <= bound}.
struct HalfSpace {
  std::vector<Rational> normal;
  Rational bound;

  int dim() const { return static_cast<int>(normal.size()); }
  bool contains(std::span<const Rational> x, bool strict = false) const;
  bool on_boundary(std::span<const Rational> x) const;
  bool has_integer_normal() const;

  /// Same half-space rescaled so the normal is an integer vector with gcd 1.
  HalfSpace primitive() const;
  /// Same half-space rescaled to bound 1. Requires bound > 0.
  HalfSpace unit_bound() const;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend auto operator<=>(const HalfSpace&, const HalfSpace&) = default;
};

std::string to_string(const HalfSpace& h);

inline constexpr int kDefaultMaxDim = 4;

/// Full-dimensional rational polytope, held both as its irredundant vertex
/// list (sorted lexicographically) and its facet list.
///
/// Facets are stored in primitive form: integer normal with gcd 1 and a
/// rational bound. For polytopes with the origin in the interior the b = 1
/// form is available through HalfSpace::unit_bound().
class Polytope {
 public:
  /// Convex hull of `points`. Non-extreme and repeated points are dropped.
  ///
  /// Facets come from an exhaustive search over affinely independent
  /// n-subsets of the input: each hyperplane through such a subset that
  /// leaves every point on one side is a facet. That costs
  /// O(C(N, n) * N * n^3) exact operations for N points, which is fine up to a
  /// few dozen points in dimension <= 4. A point is a vertex iff the normals
  /// of the facets through it have rank n.
  ///
  /// Throws EmptyInput, DimensionMismatch (ragged input), DimensionCap
  /// (n > max_dim) or DimensionDeficient (affine hull smaller than n).
  static Polytope from_vertices(std::vector<Point> points, int max_dim = kDefaultMaxDim);

  int dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& facets() const { return facets_; }

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  Polytope(int dim, std::vector<Point> vertices, std::vector<HalfSpace> facets)
      : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {}

  int dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<HalfSpace> facets_;
};

const std::vector<HalfSpace>& facet_enumeration(const Polytope& p);

bool contains(const Polytope& p, std::span<const Rational> x, bool strict = false);
bool origin_in_interior(const Polytope& p);

/// Polar dual {u : <u, v> <= 1 for all v in P}. Throws OriginNotInterior.
Polytope dual(const Polytope& p);

/// Smallest k >= 1 with kP a lattice polytope: lcm of all vertex-coordinate
/// denominators.
Integer denominator(const Polytope& p);

/// mP for m >= 1. m == 0 throws ZeroDilation; counting code treats 0P as {0}.
Polytope dilate(const Polytope& p, const Integer& m);

bool is_lattice(const Polytope& p);

/// True when every facet normal in b = 1 form is integral, i.e. dual(P) is a
/// lattice polytope. Throws OriginNotInterior.
bool dual_is_lattice(const Polytope& p);

}  // namespace ehrhart
