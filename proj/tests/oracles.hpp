#pragma once

// Test-only oracles. Nothing here calls into the counting kernels, the facet
// list, or the binomial-basis code of the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "ehrhart/geometry.hpp"
#include "ehrhart/rational.hpp"

namespace oracle {

using ehrhart::Integer;
using ehrhart::Point;
using ehrhart::Rational;

// |[m a, m b] ∩ Z|
inline std::int64_t segment_count(const Rational& a, const Rational& b, std::int64_t m) {
  const Rational ma = a * Rational(Integer(static_cast<long>(m)));
  const Rational mb = b * Rational(Integer(static_cast<long>(m)));
  const Integer c = mb.floor() - ma.ceil() + 1;
  return c < 0 ? 0 : c.get_si();
}

// Pascal recurrence extended to negative tops, memoised.
inline Integer pascal(std::int64_t x, unsigned n) {
  static std::map<std::pair<std::int64_t, unsigned>, Integer> memo;
  if (n == 0) return 1;
  if (x == 0) return 0;
  if (auto it = memo.find({x, n}); it != memo.end()) return it->second;
  // C(x, n) = C(x-1, n) + C(x-1, n-1) for x > 0; C(x, n) = C(x+1, n) - C(x, n-1) for x < 0.
  Integer v = x > 0 ? Integer(pascal(x - 1, n) + pascal(x - 1, n - 1)) : Integer(pascal(x + 1, n) - pascal(x, n - 1));
  memo[{x, n}] = v;
  return v;
}

// Exact solve of A y = b (square); returns false when singular.
inline bool solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational>& y) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return false;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  y.resize(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = b[i] / a[i][i];
  return true;
}

// Advances idx to the next k-combination of [0, count); false when done.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t count) {
  const std::size_t k = idx.size();
  std::size_t j = k;
  while (j > 0 && idx[j - 1] == count - k + (j - 1)) --j;
  if (j == 0) return false;
  ++idx[j - 1];
  for (std::size_t t = j; t < k; ++t) idx[t] = idx[t - 1] + 1;
  return true;
}

// x ∈ conv(V) via a barycentric certificate on some (n+1)-subset of V
// (Carathéodory). Closed membership only.
inline bool in_hull(const std::vector<Point>& verts, const Point& x) {
  const std::size_t n = x.size();
  const std::size_t count = verts.size();
  std::vector<std::size_t> idx(n + 1);
  if (count < n + 1) return false;
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    // rows: coordinates, then sum of weights = 1
    std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(n + 1));
    std::vector<Rational> b(n + 1);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c <= n; ++c) a[r][c] = verts[idx[c]][r];
      b[r] = x[r];
    }
    for (std::size_t c = 0; c <= n; ++c) a[n][c] = 1;
    b[n] = 1;
    std::vector<Rational> w;
    if (solve(a, b, w) && std::all_of(w.begin(), w.end(), [](const Rational& v) { return v.sign() >= 0; })) {
      return true;
    }
    if (!next_combination(idx, count)) return false;
  }
}

// |mP ∩ Z^n| by hull membership of every point of a generous box.
inline std::int64_t hull_count(const std::vector<Point>& verts, std::int64_t m) {
  if (m == 0) return 1;  // 0P = {0}; every barycentric system is singular there
  const std::size_t n = verts.front().size();
  std::vector<Point> scaled = verts;
  for (auto& v : scaled) {
    for (auto& c : v) c *= Rational(Integer(static_cast<long>(m)));
  }
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational a = scaled[0][j], b = scaled[0][j];
    for (const auto& v : scaled) {
      a = std::min(a, v[j]);
      b = std::max(b, v[j]);
    }
    lo[j] = a.floor().get_si() - 1;
    hi[j] = b.ceil().get_si() + 1;
  }
  std::int64_t total = 0;
  std::vector<std::int64_t> x = lo;
  while (true) {
    Point px;
    for (auto c : x) px.push_back(Rational(Integer(static_cast<long>(c))));
    if (in_hull(scaled, px)) ++total;
    std::size_t j = n;
    while (j > 0 && x[j - 1] == hi[j - 1]) {
      x[j - 1] = lo[j - 1];
      --j;
    }
    if (j == 0) return total;
    ++x[j - 1];
  }
}

// delta_j by repeated multiplication of the count series by (1 - t^k).
inline std::vector<std::int64_t> series_by_products(const std::vector<std::int64_t>& counts, int n,
                                                    std::int64_t k) {
  std::vector<std::int64_t> s = counts;
  for (int rep = 0; rep <= n; ++rep) {
    std::vector<std::int64_t> next(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
      next[j] = s[j] - (static_cast<std::int64_t>(j) >= k ? s[j - static_cast<std::size_t>(k)] : 0);
    }
    s = std::move(next);
  }
  s.resize(static_cast<std::size_t>(k * (n + 1)));
  return s;
}

}  // namespace oracle
