#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ehrhart/geometry.hpp"

namespace ehrhart {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Closed integer box [lo_0, hi_0] x ... x [lo_{n-1}, hi_{n-1}].
struct IntegerBox {
  LatticePoint lo;
  LatticePoint hi;

  int dim() const { return static_cast<int>(lo.size()); }
  bool empty() const;
  Integer cell_count() const;
};

/// Integer hull of the rational bounding box of mP (floor/ceil per axis).
IntegerBox bounding_box(const Polytope& p, std::int64_t m);

/// |mP ∩ Z^n| (strict: |mP° ∩ Z^n|).
///
/// Partitions the bounding box into slabs along the first axis and counts the
/// slabs with OpenMP. Inside a slab every axis but the last is walked and the
/// last axis is solved as an interval from the facet inequalities. Works with
/// 64-bit arithmetic when the magnitudes allow it and falls back to GMP
/// otherwise. Throws BudgetExceeded when the bounding box has more than
/// `budget` cells. m = 0 counts the single point {0}.
Integer count_points(const Polytope& p, std::int64_t m, bool strict = false,
                     std::uint64_t budget = kDefaultBudget);

/// Serial reference: tests every cell of the bounding box against every facet
/// in exact rational arithmetic. Kept for cross-checking count_points.
Integer count_points_reference(const Polytope& p, std::int64_t m, bool strict = false,
                               std::uint64_t budget = kDefaultBudget);

/// The lattice points of mP (or mP°), sorted lexicographically.
std::vector<LatticePoint> lattice_points(const Polytope& p, std::int64_t m, bool strict = false,
                                         std::uint64_t budget = kDefaultBudget);

struct CountRecord {
  std::int64_t m = 0;
  Integer closed_count;
  Integer interior_count;
};

CountRecord count_record(const Polytope& p, std::int64_t m, std::uint64_t budget = kDefaultBudget);

/// Outcome of comparing mP° ∩ Z^n with (m-1)P ∩ Z^n as sets.
struct ShiftComparison {
  std::int64_t m = 0;
  bool equal = true;
  std::size_t interior_size = 0;
  std::size_t shifted_size = 0;
  /// Lexicographically first point in the symmetric difference.
  std::optional<LatticePoint> witness;
  /// True when the witness lies in mP° but not in (m-1)P.
  bool witness_in_interior = false;
};

/// Set comparison without any precondition on the dual.
ShiftComparison compare_interior_shift(const Polytope& p, std::int64_t m,
                                       std::uint64_t budget = kDefaultBudget);

/// Set equality mP° ∩ Z^n == (m-1)P ∩ Z^n for m >= 1. Throws DualNotLattice
/// when dual(P) is not a lattice polytope, since the identity is then not
/// guaranteed.
bool interior_shift_check(const Polytope& p, std::int64_t m, std::uint64_t budget = kDefaultBudget);

/// First m in 1..m_max at which the two sets differ, if any.
std::optional<ShiftComparison> find_interior_shift_violation(const Polytope& p, std::int64_t m_max,
                                                             std::uint64_t budget = kDefaultBudget);

/// <u, x> for every lattice point x of `box`, sorted. Throws NonIntegerNormal
/// unless u has an integer normal and DimensionMismatch on length mismatch.
std::vector<Integer> height_profile(const HalfSpace& u, const IntegerBox& box,
                                    std::uint64_t budget = kDefaultBudget);

}  // namespace ehrhart
