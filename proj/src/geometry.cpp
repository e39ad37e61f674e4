#include "ehrhart/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "ehrhart/error.hpp"

namespace ehrhart {

std::string to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += p[i].str();
  }
  return s + ")";
}

std::string to_string(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += p[i].get_str();
  }
  return s + ")";
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "dot product of unequal lengths");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool HalfSpace::contains(std::span<const Rational> x, bool strict) const {
  const Rational lhs = dot(normal, x);
  return strict ? lhs < bound : lhs <= bound;
}

bool HalfSpace::on_boundary(std::span<const Rational> x) const { return dot(normal, x) == bound; }

bool HalfSpace::has_integer_normal() const {
  return std::all_of(normal.begin(), normal.end(), [](const Rational& c) { return c.is_integer(); });
}

HalfSpace HalfSpace::primitive() const {
  Integer den_lcm = 1;
  for (const auto& c : normal) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : normal) {
    const Integer scaled = c.num() * (den_lcm / c.den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) throw Error(Errc::InvalidArgument, "half-space with zero normal");
  const Rational scale(den_lcm, num_gcd);
  HalfSpace out;
  out.normal.reserve(normal.size());
  for (const auto& c : normal) out.normal.push_back(c * scale);
  out.bound = bound * scale;
  return out;
}

HalfSpace HalfSpace::unit_bound() const {
  if (bound.sign() <= 0) {
    throw Error(Errc::OriginNotInterior, "cannot normalise half-space with bound " + bound.str());
  }
  HalfSpace out;
  out.normal.reserve(normal.size());
  for (const auto& c : normal) out.normal.push_back(c / bound);
  out.bound = 1;
  return out;
}

std::string to_string(const HalfSpace& h) { return to_string(h.normal) + " . x <= " + h.bound.str(); }

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t cols = a.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const Rational inv = Rational(1) / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix a) { return rref(a).size(); }

// Normal of the hyperplane through n points in R^n, or nullopt when the
// points are affinely dependent.
std::optional<std::vector<Rational>> hyperplane_normal(const std::vector<const Point*>& pts, int n) {
  Matrix diffs;
  diffs.reserve(pts.size() - 1);
  for (std::size_t j = 1; j < pts.size(); ++j) {
    std::vector<Rational> row(n);
    for (int c = 0; c < n; ++c) row[c] = (*pts[j])[c] - (*pts[0])[c];
    diffs.push_back(std::move(row));
  }
  const auto pivots = rref(diffs);
  if (static_cast<int>(pivots.size()) != n - 1) return std::nullopt;
  std::size_t free_col = 0;
  for (std::size_t p : pivots) {
    if (p != free_col) break;
    ++free_col;
  }
  std::vector<Rational> u(n);
  u[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) u[pivots[r]] = -diffs[r][free_col];
  return u;
}

std::vector<HalfSpace> enumerate_facets(const std::vector<Point>& pts, int n) {
  std::set<HalfSpace> found;
  std::set<HalfSpace> rejected;
  const std::size_t count = pts.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<const Point*> subset(n);
  while (true) {
    for (int j = 0; j < n; ++j) subset[j] = &pts[idx[j]];
    if (auto u = hyperplane_normal(subset, n)) {
      HalfSpace h{std::move(*u), 0};
      h.bound = dot(h.normal, *subset[0]);
      h = h.primitive();
      if (!found.contains(h) && !rejected.contains(h)) {
        bool below = true;
        bool above = true;
        for (const auto& p : pts) {
          const Rational s = dot(h.normal, p);
          below = below && s <= h.bound;
          above = above && s >= h.bound;
          if (!below && !above) break;
        }
        if (below) {
          found.insert(h);
        } else if (above) {
          for (auto& c : h.normal) c = -c;
          h.bound = -h.bound;
          found.insert(h);
        } else {
          rejected.insert(h);
        }
      }
    }
    // next n-combination of [0, count)
    int j = n - 1;
    while (j >= 0 && idx[j] == count - n + j) --j;
    if (j < 0) break;
    ++idx[j];
    for (int t = j + 1; t < n; ++t) idx[t] = idx[t - 1] + 1;
  }
  return {found.begin(), found.end()};
}

}  // namespace

Polytope Polytope::from_vertices(std::vector<Point> points, int max_dim) {
  if (points.empty()) throw Error(Errc::EmptyInput, "no points given");
  const int n = static_cast<int>(points.front().size());
  if (n < 1) throw Error(Errc::DimensionMismatch, "points must have at least one coordinate");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n) {
      throw Error(Errc::DimensionMismatch, "points have differing lengths");
    }
  }
  if (n > max_dim) {
    throw Error(Errc::DimensionCap,
                "dimension " + std::to_string(n) + " exceeds cap " + std::to_string(max_dim));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  if (static_cast<int>(points.size()) < n + 1) {
    throw Error(Errc::DimensionDeficient, "fewer than n+1 distinct points");
  }
  Matrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> row(n);
    for (int c = 0; c < n; ++c) row[c] = points[i][c] - points[0][c];
    diffs.push_back(std::move(row));
  }
  if (static_cast<int>(rank(std::move(diffs))) < n) {
    throw Error(Errc::DimensionDeficient, "affine hull is not full-dimensional");
  }

  std::vector<HalfSpace> facets = enumerate_facets(points, n);

  std::vector<Point> vertices;
  for (auto& p : points) {
    Matrix tight;
    for (const auto& f : facets) {
      if (f.on_boundary(p)) tight.push_back(f.normal);
    }
    if (static_cast<int>(tight.size()) >= n && static_cast<int>(rank(std::move(tight))) == n) {
      vertices.push_back(std::move(p));
    }
  }
  return Polytope(n, std::move(vertices), std::move(facets));
}

const std::vector<HalfSpace>& facet_enumeration(const Polytope& p) { return p.facets(); }

bool contains(const Polytope& p, std::span<const Rational> x, bool strict) {
  if (static_cast<int>(x.size()) != p.dim()) {
    throw Error(Errc::DimensionMismatch, "point has " + std::to_string(x.size()) +
                                             " coordinates, polytope has dimension " +
                                             std::to_string(p.dim()));
  }
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [&](const HalfSpace& h) { return h.contains(x, strict); });
}

bool origin_in_interior(const Polytope& p) {
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [](const HalfSpace& h) { return h.bound.sign() > 0; });
}

Polytope dual(const Polytope& p) {
  if (!origin_in_interior(p)) {
    throw Error(Errc::OriginNotInterior, "dual requires the origin strictly inside P");
  }
  std::vector<Point> verts;
  verts.reserve(p.facets().size());
  for (const auto& f : p.facets()) verts.push_back(f.unit_bound().normal);
  return Polytope::from_vertices(std::move(verts), p.dim());
}

Integer denominator(const Polytope& p) {
  Integer k = 1;
  for (const auto& v : p.vertices()) {
    for (const auto& c : v) mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), c.den().get_mpz_t());
  }
  return k;
}

Polytope dilate(const Polytope& p, const Integer& m) {
  if (m == 0) throw Error(Errc::ZeroDilation, "0P is the single point {0}, not a polytope");
  if (m < 0) throw Error(Errc::InvalidArgument, "negative dilation factor");
  std::vector<Point> verts = p.vertices();
  const Rational factor(m);
  for (auto& v : verts) {
    for (auto& c : v) c *= factor;
  }
  return Polytope::from_vertices(std::move(verts), p.dim());
}

bool is_lattice(const Polytope& p) { return denominator(p) == 1; }

bool dual_is_lattice(const Polytope& p) {
  if (!origin_in_interior(p)) {
    throw Error(Errc::OriginNotInterior, "lattice-dual test requires the origin strictly inside P");
  }
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [](const HalfSpace& h) { return h.unit_bound().has_integer_normal(); });
}

}  // namespace ehrhart
