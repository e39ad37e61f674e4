#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ehrhart/geometry.hpp"
#include "ehrhart/lattice_count.hpp"

namespace ehrhart {

/// Generalised binomial x(x-1)...(x-n+1)/n!, defined for negative x.
Integer binomial(const Integer& x, unsigned n);

struct Reflection {
  int sign = 1;
  Integer top;
};

/// C(x, n) = (-1)^n C(n-1-x, n); returns {(-1)^n, n-1-x}.
Reflection negative_binomial_reflect(const Integer& x, unsigned n);

/// delta(i, r) for 0 <= i <= n, 0 <= r < k: the coordinates of the residue
/// polynomial L_r(l) = L(lk + r) in the basis C(l+n-i, n).
class ResidueDeltaTable {
 public:
  ResidueDeltaTable() = default;
  ResidueDeltaTable(int n, std::int64_t k);

  int n() const { return n_; }
  std::int64_t k() const { return k_; }

  Integer& at(int i, std::int64_t r) { return data_[index(i, r)]; }
  const Integer& at(int i, std::int64_t r) const { return data_[index(i, r)]; }

  /// Column for residue r: (delta(0, r), ..., delta(n, r)).
  std::vector<Integer> column(std::int64_t r) const;

  friend bool operator==(const ResidueDeltaTable&, const ResidueDeltaTable&) = default;

 private:
  std::size_t index(int i, std::int64_t r) const;

  int n_ = 0;
  std::int64_t k_ = 1;
  std::vector<Integer> data_;  // residue-major
};

struct DeltaVector {
  std::vector<Integer> entries;

  std::size_t size() const { return entries.size(); }
  const Integer& operator[](std::size_t j) const { return entries[j]; }
  friend bool operator==(const DeltaVector&, const DeltaVector&) = default;
};

/// Ehrhart quasi-polynomial of period k, held per residue in the binomial
/// basis. Monomial/periodic coefficients are not stored.
struct EhrhartQP {
  ResidueDeltaTable table;

  int n() const { return table.n(); }
  std::int64_t k() const { return table.k(); }
};

/// The period k = denominator(P) as a machine integer.
std::int64_t period(const Polytope& p);

/// L_P(0), ..., L_P(count - 1).
std::vector<Integer> ehrhart_counts(const Polytope& p, std::int64_t count,
                                    std::uint64_t budget = kDefaultBudget);

/// Solve for the residue table from counts[m] = L(m), m = 0 .. k(n+1)-1.
/// Forward substitution: at l only the terms i <= l are non-zero and the
/// diagonal coefficient C(n, n) is 1.
EhrhartQP fit_qp_from_counts(int n, std::int64_t k, std::span<const Integer> counts);
EhrhartQP fit_qp(const Polytope& p, std::uint64_t budget = kDefaultBudget);

/// L(m) for any integer m, including negative m: m = lk + r with
/// r = m mod k in [0, k) and l possibly negative.
Integer evaluate_qp(const EhrhartQP& qp, const Integer& m);

/// entries[ik + r] = delta(i, r).
DeltaVector delta_vector(const EhrhartQP& qp);
DeltaVector interleave(const ResidueDeltaTable& t);
ResidueDeltaTable deinterleave(const DeltaVector& d, int n, std::int64_t k);

/// Coefficients 0 .. k(n+1)-1 of (sum_m L(m) t^m) * (1 - t^k)^(n+1).
DeltaVector series_delta_from_counts(int n, std::int64_t k, std::span<const Integer> counts);
DeltaVector delta_vector_series(const Polytope& p, std::uint64_t budget = kDefaultBudget);

}  // namespace ehrhart
