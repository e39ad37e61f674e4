#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ehrhart/ehrhart.hpp"

namespace ehrhart {

struct CheckResult {
  std::string name;
  bool passed = true;
  /// First violation (index, dilation, point) when the check fails, or an
  /// informational note.
  std::optional<std::string> witness;
  /// A failure here contradicts a proven statement rather than an expected
  /// negative outcome.
  bool fatal = false;
};

/// evaluate_qp(qp, -m) == (-1)^n |mP° ∩ Z^n| for m = 1 .. m_max.
CheckResult check_reciprocity(const Polytope& p, const EhrhartQP& qp, std::int64_t m_max,
                              std::uint64_t budget = kDefaultBudget);
CheckResult check_reciprocity(const Polytope& p, std::int64_t m_max,
                              std::uint64_t budget = kDefaultBudget);

/// entries[j] == entries[len-1-j] for every j.
CheckResult check_palindrome(const DeltaVector& d);

/// delta(i, r) == delta(n-i, k-1-r) for every i, r.
CheckResult check_theorem(const ResidueDeltaTable& t);

/// d interleaves t entry by entry, and check_theorem(t) passes iff
/// check_palindrome(d) passes.
CheckResult check_equivalence(const ResidueDeltaTable& t, const DeltaVector& d);

CheckResult check_nonnegative(const DeltaVector& d);

/// delta_0 = 1, delta(0, r) = L(r), and equal column sums.
CheckResult check_structure(const ResidueDeltaTable& t, std::span<const Integer> counts);

/// Residue-table fit and series product give the same delta-vector.
CheckResult check_oracle(const DeltaVector& fitted, const DeltaVector& series);

/// mP° ∩ Z^n == (m-1)P ∩ Z^n for m = 1 .. m_max. Expected to hold when the
/// dual is lattice; otherwise a failure is reported without being fatal.
CheckResult check_interior_shift(const Polytope& p, std::int64_t m_max,
                                 std::uint64_t budget = kDefaultBudget);

/// Passes iff "dual is lattice" and "delta-vector is palindromic" agree.
/// Lattice dual with a non-palindromic vector is flagged fatal.
CheckResult check_characterization(const Polytope& p, std::uint64_t budget = kDefaultBudget);
CheckResult check_characterization(bool dual_lattice, const DeltaVector& d);

struct VerifyConfig {
  std::int64_t m_max = 6;
  std::uint64_t budget = kDefaultBudget;
};

struct VerificationReport {
  std::string polytope_id;
  int n = 0;
  std::int64_t k = 1;
  bool dual_is_lattice = false;
  DeltaVector delta;
  ResidueDeltaTable residue_table;
  std::vector<CheckResult> checks;

  bool fatal() const;
  const CheckResult* find(std::string_view name) const;
};

/// Runs every check on P. Requires the origin strictly inside P.
VerificationReport full_report(const Polytope& p, std::string polytope_id,
                               const VerifyConfig& cfg = {});

/// 0 when the report has no fatal check, 1 otherwise.
int exit_code(const VerificationReport& report);

nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const DeltaVector& d);
nlohmann::json to_json(const ResidueDeltaTable& t);
nlohmann::json to_json(const VerificationReport& r);
std::string to_text(const VerificationReport& r);

DeltaVector delta_vector_from_json(const nlohmann::json& j);
ResidueDeltaTable residue_table_from_json(const nlohmann::json& j);

}  // namespace ehrhart
