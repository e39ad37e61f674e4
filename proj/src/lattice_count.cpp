#include "ehrhart/lattice_count.hpp"

#include <algorithm>
#include <cstdlib>

#include "ehrhart/error.hpp"

namespace ehrhart {

bool IntegerBox::empty() const {
  for (std::size_t j = 0; j < lo.size(); ++j) {
    if (lo[j] > hi[j]) return true;
  }
  return false;
}

Integer IntegerBox::cell_count() const {
  if (empty()) return 0;
  Integer c = 1;
  for (std::size_t j = 0; j < lo.size(); ++j) c *= hi[j] - lo[j] + 1;
  return c;
}

IntegerBox bounding_box(const Polytope& p, std::int64_t m) {
  if (m < 0) throw Error(Errc::InvalidArgument, "negative dilation factor");
  const int n = p.dim();
  IntegerBox box{LatticePoint(n), LatticePoint(n)};
  const Rational factor(Integer(static_cast<long>(m)));
  for (int j = 0; j < n; ++j) {
    Rational lo = p.vertices().front()[j];
    Rational hi = lo;
    for (const auto& v : p.vertices()) {
      lo = std::min(lo, v[j]);
      hi = std::max(hi, v[j]);
    }
    box.lo[j] = (lo * factor).ceil();
    box.hi[j] = (hi * factor).floor();
  }
  return box;
}

namespace {

void check_budget(const IntegerBox& box, std::uint64_t budget) {
  const Integer cells = box.cell_count();
  if (cells > Integer(std::to_string(budget))) {
    throw Error(Errc::BudgetExceeded, "bounding box has " + cells.get_str() +
                                          " cells, budget is " + std::to_string(budget));
  }
}

// Facet inequality <normal, x> <= threshold with integer data.
template <class Z>
struct IntRow {
  std::vector<Z> normal;
  Z threshold;
};

template <class Z>
struct Kernel {
  int n = 0;
  std::vector<IntRow<Z>> rows;
  std::vector<Z> lo;
  std::vector<Z> hi;
};

inline std::int64_t fdiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t cdiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

inline Integer fdiv(const Integer& a, const Integer& b) { return floor_div(a, b); }
inline Integer cdiv(const Integer& a, const Integer& b) { return ceil_div(a, b); }

// hi - lo + 1 as a machine integer; bounded by the budget at every call site.
inline std::int64_t convert_width(std::int64_t d) { return d + 1; }
inline std::int64_t convert_width(const Integer& d) { return to_int64(d) + 1; }

inline std::int64_t convert(const Integer& z, std::int64_t*) { return to_int64(z); }
inline Integer convert(const Integer& z, Integer*) { return z; }

template <class Z>
Kernel<Z> make_kernel(const Polytope& p, std::int64_t m, bool strict, const IntegerBox& box) {
  Kernel<Z> k;
  k.n = p.dim();
  const Rational factor(Integer(static_cast<long>(m)));
  for (const auto& f : p.facets()) {
    IntRow<Z> row;
    for (const auto& c : f.normal) row.normal.push_back(convert(c.num(), static_cast<Z*>(nullptr)));
    const Rational mb = f.bound * factor;
    const Integer t = strict ? mb.ceil() - 1 : mb.floor();
    row.threshold = convert(t, static_cast<Z*>(nullptr));
    k.rows.push_back(std::move(row));
  }
  for (int j = 0; j < k.n; ++j) {
    k.lo.push_back(convert(box.lo[j], static_cast<Z*>(nullptr)));
    k.hi.push_back(convert(box.hi[j], static_cast<Z*>(nullptr)));
  }
  return k;
}

// Whether every intermediate value of the row solve fits in int64 with room.
bool fits_int64(const Polytope& p, std::int64_t m, const IntegerBox& box) {
  static const Integer limit = Integer(1) << 62;
  Integer radius = 0;
  for (int j = 0; j < box.dim(); ++j) {
    radius = std::max(radius, Integer(abs(box.lo[j])));
    radius = std::max(radius, Integer(abs(box.hi[j])));
  }
  const Rational factor(Integer(static_cast<long>(m)));
  for (const auto& f : p.facets()) {
    Integer s = abs((f.bound * factor).floor()) + 1;
    for (const auto& c : f.normal) s += abs(c.num()) * radius;
    if (s >= limit) return false;
  }
  return true;
}

// Walks axes [axis, n-1) of the box with `prefix` holding the fixed leading
// coordinates, solving the last axis as an interval. `fn(prefix, lo, hi)` is
// called for every non-empty row.
template <class Z, class Fn>
void walk_rows(const Kernel<Z>& k, std::vector<Z>& prefix, int axis, Fn& fn) {
  const int last = k.n - 1;
  if (axis < last) {
    for (Z x = k.lo[axis]; x <= k.hi[axis]; ++x) {
      prefix[axis] = x;
      walk_rows(k, prefix, axis + 1, fn);
    }
    return;
  }
  Z lo = k.lo[last];
  Z hi = k.hi[last];
  for (const auto& row : k.rows) {
    Z rest = row.threshold;
    for (int j = 0; j < last; ++j) rest -= row.normal[j] * prefix[j];
    const Z& a = row.normal[last];
    if (a > 0) {
      hi = std::min(hi, Z(fdiv(rest, a)));
    } else if (a < 0) {
      lo = std::max(lo, Z(cdiv(rest, a)));
    } else if (rest < 0) {
      return;
    }
    if (lo > hi) return;
  }
  fn(prefix, lo, hi);
}

template <class Z>
std::uint64_t count_kernel(const Kernel<Z>& k) {
  std::uint64_t total = 0;
  auto add = [&total](const std::vector<Z>&, const Z& lo, const Z& hi) {
    total += static_cast<std::uint64_t>(convert_width(hi - lo));
  };
  if (k.n == 1) {
    std::vector<Z> prefix(1);
    walk_rows(k, prefix, 0, add);
    return total;
  }
  const std::int64_t width = static_cast<std::int64_t>(convert_width(k.hi[0] - k.lo[0]));
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (std::int64_t i = 0; i < width; ++i) {
    std::uint64_t slab = 0;
    auto add_slab = [&slab](const std::vector<Z>&, const Z& lo, const Z& hi) {
      slab += static_cast<std::uint64_t>(convert_width(hi - lo));
    };
    std::vector<Z> prefix(k.n);
    prefix[0] = k.lo[0] + Z(i);
    walk_rows(k, prefix, 1, add_slab);
    total += slab;
  }
  return total;
}

}  // namespace

Integer count_points(const Polytope& p, std::int64_t m, bool strict, std::uint64_t budget) {
  const IntegerBox box = bounding_box(p, m);
  check_budget(box, budget);
  if (box.empty()) return 0;
  std::uint64_t total = 0;
  if (fits_int64(p, m, box)) {
    total = count_kernel(make_kernel<std::int64_t>(p, m, strict, box));
  } else {
    total = count_kernel(make_kernel<Integer>(p, m, strict, box));
  }
  return Integer(std::to_string(total));
}

namespace {

// Calls fn(x) for every point of the box in lexicographic order.
template <class Fn>
void for_each_cell(const IntegerBox& box, Fn&& fn) {
  if (box.empty()) return;
  LatticePoint x = box.lo;
  const int n = box.dim();
  while (true) {
    fn(x);
    int j = n - 1;
    while (j >= 0 && x[j] == box.hi[j]) {
      x[j] = box.lo[j];
      --j;
    }
    if (j < 0) return;
    ++x[j];
  }
}

}  // namespace

Integer count_points_reference(const Polytope& p, std::int64_t m, bool strict, std::uint64_t budget) {
  const IntegerBox box = bounding_box(p, m);
  check_budget(box, budget);
  const Rational factor(Integer(static_cast<long>(m)));
  std::vector<HalfSpace> scaled = p.facets();
  for (auto& f : scaled) f.bound *= factor;
  Integer total = 0;
  Point x(p.dim());
  for_each_cell(box, [&](const LatticePoint& z) {
    for (int j = 0; j < p.dim(); ++j) x[j] = Rational(z[j]);
    if (std::all_of(scaled.begin(), scaled.end(),
                    [&](const HalfSpace& h) { return h.contains(x, strict); })) {
      ++total;
    }
  });
  return total;
}

std::vector<LatticePoint> lattice_points(const Polytope& p, std::int64_t m, bool strict,
                                         std::uint64_t budget) {
  const IntegerBox box = bounding_box(p, m);
  check_budget(box, budget);
  std::vector<LatticePoint> out;
  if (box.empty()) return out;
  const Kernel<Integer> k = make_kernel<Integer>(p, m, strict, box);
  auto emit = [&out, n = p.dim()](const std::vector<Integer>& prefix, const Integer& lo,
                                  const Integer& hi) {
    for (Integer x = lo; x <= hi; ++x) {
      LatticePoint pt(prefix.begin(), prefix.begin() + (n - 1));
      pt.push_back(x);
      out.push_back(std::move(pt));
    }
  };
  std::vector<Integer> prefix(p.dim());
  walk_rows(k, prefix, 0, emit);
  return out;
}

CountRecord count_record(const Polytope& p, std::int64_t m, std::uint64_t budget) {
  return CountRecord{m, count_points(p, m, false, budget), count_points(p, m, true, budget)};
}

ShiftComparison compare_interior_shift(const Polytope& p, std::int64_t m, std::uint64_t budget) {
  if (m < 1) throw Error(Errc::InvalidArgument, "interior shift needs m >= 1");
  const auto interior = lattice_points(p, m, true, budget);
  const auto shifted = lattice_points(p, m - 1, false, budget);
  ShiftComparison out;
  out.m = m;
  out.interior_size = interior.size();
  out.shifted_size = shifted.size();
  out.equal = interior == shifted;
  if (!out.equal) {
    std::vector<LatticePoint> only_interior;
    std::vector<LatticePoint> only_shifted;
    std::set_difference(interior.begin(), interior.end(), shifted.begin(), shifted.end(),
                        std::back_inserter(only_interior));
    std::set_difference(shifted.begin(), shifted.end(), interior.begin(), interior.end(),
                        std::back_inserter(only_shifted));
    if (only_shifted.empty() ||
        (!only_interior.empty() && only_interior.front() < only_shifted.front())) {
      out.witness = only_interior.front();
      out.witness_in_interior = true;
    } else {
      out.witness = only_shifted.front();
    }
  }
  return out;
}

bool interior_shift_check(const Polytope& p, std::int64_t m, std::uint64_t budget) {
  if (!dual_is_lattice(p)) {
    throw Error(Errc::DualNotLattice, "interior shift identity needs a lattice dual");
  }
  return compare_interior_shift(p, m, budget).equal;
}

std::optional<ShiftComparison> find_interior_shift_violation(const Polytope& p, std::int64_t m_max,
                                                             std::uint64_t budget) {
  for (std::int64_t m = 1; m <= m_max; ++m) {
    auto cmp = compare_interior_shift(p, m, budget);
    if (!cmp.equal) return cmp;
  }
  return std::nullopt;
}

std::vector<Integer> height_profile(const HalfSpace& u, const IntegerBox& box, std::uint64_t budget) {
  if (u.dim() != box.dim()) throw Error(Errc::DimensionMismatch, "normal and box differ in length");
  if (!u.has_integer_normal()) {
    throw Error(Errc::NonIntegerNormal, "normal " + to_string(u.normal) + " is not integral");
  }
  check_budget(box, budget);
  std::vector<Integer> heights;
  for_each_cell(box, [&](const LatticePoint& x) {
    Integer h = 0;
    for (int j = 0; j < box.dim(); ++j) h += u.normal[j].num() * x[j];
    heights.push_back(std::move(h));
  });
  std::sort(heights.begin(), heights.end());
  return heights;
}

}  // namespace ehrhart
