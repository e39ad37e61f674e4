#include "ehrhart/ehrhart.hpp"

#include "ehrhart/error.hpp"

namespace ehrhart {

Integer binomial(const Integer& x, unsigned n) {
  Integer num = 1;
  Integer den = 1;
  for (unsigned j = 0; j < n; ++j) {
    num *= x - j;
    den *= j + 1;
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

Reflection negative_binomial_reflect(const Integer& x, unsigned n) {
  return Reflection{n % 2 == 0 ? 1 : -1, Integer(n) - 1 - x};
}

ResidueDeltaTable::ResidueDeltaTable(int n, std::int64_t k)
    : n_(n), k_(k), data_(static_cast<std::size_t>(k) * static_cast<std::size_t>(n + 1)) {
  if (n < 0 || k < 1) throw Error(Errc::InvalidArgument, "residue table needs n >= 0, k >= 1");
}

std::size_t ResidueDeltaTable::index(int i, std::int64_t r) const {
  if (i < 0 || i > n_ || r < 0 || r >= k_) {
    throw Error(Errc::InvalidArgument, "residue table index out of range");
  }
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(i);
}

std::vector<Integer> ResidueDeltaTable::column(std::int64_t r) const {
  std::vector<Integer> col;
  col.reserve(n_ + 1);
  for (int i = 0; i <= n_; ++i) col.push_back(at(i, r));
  return col;
}

std::int64_t period(const Polytope& p) {
  const Integer k = denominator(p);
  if (k > Integer(1) << 31) {
    throw Error(Errc::BudgetExceeded, "denominator " + k.get_str() + " is too large to fit");
  }
  return to_int64(k);
}

std::vector<Integer> ehrhart_counts(const Polytope& p, std::int64_t count, std::uint64_t budget) {
  std::vector<Integer> counts;
  counts.reserve(count);
  for (std::int64_t m = 0; m < count; ++m) counts.push_back(count_points(p, m, false, budget));
  return counts;
}

namespace {

void check_count_length(int n, std::int64_t k, std::size_t have) {
  const auto need = static_cast<std::size_t>(k) * static_cast<std::size_t>(n + 1);
  if (have < need) {
    throw Error(Errc::InvalidArgument,
                "need " + std::to_string(need) + " counts, got " + std::to_string(have));
  }
}

}  // namespace

EhrhartQP fit_qp_from_counts(int n, std::int64_t k, std::span<const Integer> counts) {
  check_count_length(n, k, counts.size());
  const auto un = static_cast<unsigned>(n);
  EhrhartQP qp{ResidueDeltaTable(n, k)};
  for (std::int64_t r = 0; r < k; ++r) {
    for (int l = 0; l <= n; ++l) {
      // L_r(l) = sum_{i <= l} delta(i, r) C(l + n - i, n); solve for i = l.
      Rational rest(counts[static_cast<std::size_t>(l * k + r)]);
      for (int i = 0; i < l; ++i) rest -= Rational(qp.table.at(i, r) * binomial(l + n - i, un));
      const Rational diag(binomial(n, un));
      const Rational delta = rest / diag;
      if (!delta.is_integer()) {
        throw Error(Errc::NonIntegerDelta, "delta(" + std::to_string(l) + ", " + std::to_string(r) +
                                               ") = " + delta.str());
      }
      qp.table.at(l, r) = delta.num();
    }
  }
  return qp;
}

EhrhartQP fit_qp(const Polytope& p, std::uint64_t budget) {
  const std::int64_t k = period(p);
  const auto counts = ehrhart_counts(p, k * (p.dim() + 1), budget);
  return fit_qp_from_counts(p.dim(), k, counts);
}

Integer evaluate_qp(const EhrhartQP& qp, const Integer& m) {
  const Integer k(static_cast<long>(qp.k()));
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), m.get_mpz_t(), k.get_mpz_t());
  const Integer l = (m - r) / k;
  const std::int64_t ri = to_int64(r);
  const auto un = static_cast<unsigned>(qp.n());
  Integer sum = 0;
  for (int i = 0; i <= qp.n(); ++i) sum += qp.table.at(i, ri) * binomial(l + qp.n() - i, un);
  return sum;
}

DeltaVector interleave(const ResidueDeltaTable& t) {
  DeltaVector d;
  d.entries.resize(static_cast<std::size_t>(t.k()) * static_cast<std::size_t>(t.n() + 1));
  for (int i = 0; i <= t.n(); ++i) {
    for (std::int64_t r = 0; r < t.k(); ++r) d.entries[static_cast<std::size_t>(i * t.k() + r)] = t.at(i, r);
  }
  return d;
}

DeltaVector delta_vector(const EhrhartQP& qp) { return interleave(qp.table); }

ResidueDeltaTable deinterleave(const DeltaVector& d, int n, std::int64_t k) {
  ResidueDeltaTable t(n, k);
  if (d.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(n + 1)) {
    throw Error(Errc::InvalidArgument, "delta vector length is not k(n+1)");
  }
  for (int i = 0; i <= n; ++i) {
    for (std::int64_t r = 0; r < k; ++r) t.at(i, r) = d.entries[static_cast<std::size_t>(i * k + r)];
  }
  return t;
}

DeltaVector series_delta_from_counts(int n, std::int64_t k, std::span<const Integer> counts) {
  check_count_length(n, k, counts.size());
  const std::int64_t len = k * (n + 1);
  DeltaVector d;
  d.entries.reserve(len);
  for (std::int64_t j = 0; j < len; ++j) {
    Integer c = 0;
    for (int s = 0; s <= n + 1 && j - s * k >= 0; ++s) {
      const Integer term = binomial(n + 1, static_cast<unsigned>(s)) * counts[static_cast<std::size_t>(j - s * k)];
      if (s % 2 == 0) {
        c += term;
      } else {
        c -= term;
      }
    }
    d.entries.push_back(std::move(c));
  }
  return d;
}

DeltaVector delta_vector_series(const Polytope& p, std::uint64_t budget) {
  const std::int64_t k = period(p);
  const auto counts = ehrhart_counts(p, k * (p.dim() + 1), budget);
  return series_delta_from_counts(p.dim(), k, counts);
}

}  // namespace ehrhart
