#include "ehrhart/verify.hpp"

#include <sstream>

#include "ehrhart/error.hpp"
#include "ehrhart/io.hpp"

namespace ehrhart {

namespace {

CheckResult pass(std::string name) { return CheckResult{std::move(name), true, std::nullopt, false}; }

CheckResult fail(std::string name, std::string witness, bool fatal) {
  return CheckResult{std::move(name), false, std::move(witness), fatal};
}

std::string str(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace

CheckResult check_reciprocity(const Polytope& p, const EhrhartQP& qp, std::int64_t m_max,
                              std::uint64_t budget) {
  for (std::int64_t m = 1; m <= m_max; ++m) {
    const Integer lhs = evaluate_qp(qp, Integer(static_cast<long>(-m)));
    Integer rhs = count_points(p, m, true, budget);
    if (p.dim() % 2 == 1) rhs = -rhs;
    if (lhs != rhs) {
      return fail("reciprocity",
                  "m=" + std::to_string(m) + ": L(-m)=" + lhs.get_str() +
                      " but (-1)^n*interior=" + rhs.get_str(),
                  true);
    }
  }
  return pass("reciprocity");
}

CheckResult check_reciprocity(const Polytope& p, std::int64_t m_max, std::uint64_t budget) {
  return check_reciprocity(p, fit_qp(p, budget), m_max, budget);
}

CheckResult check_palindrome(const DeltaVector& d) {
  const std::size_t len = d.size();
  for (std::size_t j = 0; j < len; ++j) {
    if (d[j] != d[len - 1 - j]) {
      return fail("palindrome",
                  "j=" + std::to_string(j) + ": " + d[j].get_str() + " != " + d[len - 1 - j].get_str(),
                  false);
    }
  }
  return pass("palindrome");
}

CheckResult check_theorem(const ResidueDeltaTable& t) {
  const int n = t.n();
  const std::int64_t k = t.k();
  for (int i = 0; i <= n; ++i) {
    for (std::int64_t r = 0; r < k; ++r) {
      if (t.at(i, r) != t.at(n - i, k - 1 - r)) {
        return fail("theorem",
                    "i=" + std::to_string(i) + ", r=" + std::to_string(r) + ": " +
                        t.at(i, r).get_str() + " != delta(" + std::to_string(n - i) + ", " +
                        std::to_string(k - 1 - r) + ")=" + t.at(n - i, k - 1 - r).get_str(),
                    false);
      }
    }
  }
  return pass("theorem");
}

CheckResult check_equivalence(const ResidueDeltaTable& t, const DeltaVector& d) {
  const std::size_t len = static_cast<std::size_t>(t.k()) * static_cast<std::size_t>(t.n() + 1);
  if (d.size() != len) {
    return fail("equivalence",
                "length " + std::to_string(d.size()) + " != k(n+1)=" + std::to_string(len), true);
  }
  for (int i = 0; i <= t.n(); ++i) {
    for (std::int64_t r = 0; r < t.k(); ++r) {
      const auto j = static_cast<std::size_t>(i * t.k() + r);
      if (d[j] != t.at(i, r)) {
        return fail("equivalence",
                    "index " + std::to_string(j) + " (i=" + std::to_string(i) + ", r=" +
                        std::to_string(r) + "): " + d[j].get_str() + " != " + t.at(i, r).get_str(),
                    true);
      }
    }
  }
  const bool theorem = check_theorem(t).passed;
  const bool palindrome = check_palindrome(d).passed;
  if (theorem != palindrome) {
    return fail("equivalence",
                std::string("theorem ") + (theorem ? "passes" : "fails") + " but palindrome " +
                    (palindrome ? "passes" : "fails"),
                true);
  }
  return pass("equivalence");
}

CheckResult check_nonnegative(const DeltaVector& d) {
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j] < 0) return fail("nonnegative", "j=" + std::to_string(j) + ": " + d[j].get_str(), true);
  }
  return pass("nonnegative");
}

CheckResult check_structure(const ResidueDeltaTable& t, std::span<const Integer> counts) {
  if (t.at(0, 0) != 1) return fail("structure", "delta_0=" + t.at(0, 0).get_str(), true);
  Integer first_sum;
  for (std::int64_t r = 0; r < t.k(); ++r) {
    if (static_cast<std::size_t>(r) < counts.size() && t.at(0, r) != counts[static_cast<std::size_t>(r)]) {
      return fail("structure",
                  "delta(0," + std::to_string(r) + ")=" + t.at(0, r).get_str() +
                      " != L(" + std::to_string(r) + ")=" + counts[static_cast<std::size_t>(r)].get_str(),
                  true);
    }
    Integer sum = 0;
    for (int i = 0; i <= t.n(); ++i) sum += t.at(i, r);
    if (r == 0) {
      first_sum = sum;
    } else if (sum != first_sum) {
      return fail("structure",
                  "column sum for r=" + std::to_string(r) + " is " + sum.get_str() + ", r=0 has " +
                      first_sum.get_str(),
                  true);
    }
  }
  return pass("structure");
}

CheckResult check_oracle(const DeltaVector& fitted, const DeltaVector& series) {
  if (fitted.size() != series.size()) {
    return fail("oracle", "lengths " + std::to_string(fitted.size()) + " vs " + std::to_string(series.size()),
                true);
  }
  for (std::size_t j = 0; j < fitted.size(); ++j) {
    if (fitted[j] != series[j]) {
      return fail("oracle",
                  "j=" + std::to_string(j) + ": fit " + fitted[j].get_str() + " vs series " +
                      series[j].get_str(),
                  true);
    }
  }
  return pass("oracle");
}

CheckResult check_interior_shift(const Polytope& p, std::int64_t m_max, std::uint64_t budget) {
  const bool lattice = dual_is_lattice(p);
  if (auto v = find_interior_shift_violation(p, m_max, budget)) {
    return fail("interior_shift",
                "m=" + std::to_string(v->m) + ": point " + to_string(*v->witness) +
                    (v->witness_in_interior ? " in mP° but not in (m-1)P" : " in (m-1)P but not in mP°"),
                lattice);
  }
  return pass("interior_shift");
}

CheckResult check_characterization(bool dual_lattice, const DeltaVector& d) {
  const bool palindromic = check_palindrome(d).passed;
  if (dual_lattice == palindromic) return pass("characterization");
  if (dual_lattice) {
    return fail("characterization", "dual is lattice but delta-vector is not palindromic", true);
  }
  return fail("characterization", "delta-vector is palindromic but dual is not lattice", false);
}

CheckResult check_characterization(const Polytope& p, std::uint64_t budget) {
  const bool lattice = dual_is_lattice(p);
  return check_characterization(lattice, delta_vector(fit_qp(p, budget)));
}

bool VerificationReport::fatal() const {
  for (const auto& c : checks) {
    if (!c.passed && c.fatal) return true;
  }
  return false;
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport full_report(const Polytope& p, std::string polytope_id, const VerifyConfig& cfg) {
  VerificationReport rep;
  rep.polytope_id = std::move(polytope_id);
  rep.n = p.dim();
  rep.k = period(p);
  rep.dual_is_lattice = dual_is_lattice(p);

  const auto counts = ehrhart_counts(p, rep.k * (rep.n + 1), cfg.budget);
  const EhrhartQP qp = fit_qp_from_counts(rep.n, rep.k, counts);
  rep.residue_table = qp.table;
  rep.delta = delta_vector(qp);
  const DeltaVector series = series_delta_from_counts(rep.n, rep.k, counts);

  rep.checks.push_back(check_oracle(rep.delta, series));
  rep.checks.push_back(check_structure(rep.residue_table, counts));
  rep.checks.push_back(check_nonnegative(rep.delta));
  rep.checks.push_back(check_reciprocity(p, qp, cfg.m_max, cfg.budget));
  auto theorem = check_theorem(rep.residue_table);
  auto palindrome = check_palindrome(rep.delta);
  theorem.fatal = palindrome.fatal = rep.dual_is_lattice;
  rep.checks.push_back(std::move(theorem));
  rep.checks.push_back(std::move(palindrome));
  rep.checks.push_back(check_equivalence(rep.residue_table, rep.delta));
  rep.checks.push_back(check_interior_shift(p, cfg.m_max, cfg.budget));
  rep.checks.push_back(check_characterization(rep.dual_is_lattice, rep.delta));
  return rep;
}

int exit_code(const VerificationReport& report) { return report.fatal() ? 1 : 0; }

using nlohmann::json;

json to_json(const CheckResult& c) {
  json j{{"name", c.name}, {"passed", c.passed}, {"fatal", c.fatal}};
  j["witness"] = c.witness ? json(*c.witness) : json(nullptr);
  return j;
}

json to_json(const DeltaVector& d) {
  json a = json::array();
  for (const auto& e : d.entries) a.push_back(e.get_str());
  return a;
}

json to_json(const ResidueDeltaTable& t) {
  json a = json::array();
  for (std::int64_t r = 0; r < t.k(); ++r) {
    json col = json::array();
    for (int i = 0; i <= t.n(); ++i) col.push_back(t.at(i, r).get_str());
    a.push_back(std::move(col));
  }
  return a;
}

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return json{{"polytope", r.polytope_id},
              {"n", r.n},
              {"k", r.k},
              {"dual_is_lattice", r.dual_is_lattice},
              {"delta", to_json(r.delta)},
              {"residue_table", to_json(r.residue_table)},
              {"checks", std::move(checks)},
              {"status", r.fatal() ? "FATAL" : "OK"}};
}

DeltaVector delta_vector_from_json(const json& j) {
  DeltaVector d;
  for (const auto& e : j) d.entries.push_back(parse_integer(e.get<std::string>()));
  return d;
}

ResidueDeltaTable residue_table_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty()) {
    throw Error(Errc::ParseError, "residue table must be a non-empty array of columns");
  }
  const auto k = static_cast<std::int64_t>(j.size());
  const int n = static_cast<int>(j.front().size()) - 1;
  ResidueDeltaTable t(n, k);
  for (std::int64_t r = 0; r < k; ++r) {
    const json& col = j[static_cast<std::size_t>(r)];
    if (static_cast<int>(col.size()) != n + 1) throw Error(Errc::ParseError, "ragged residue table");
    for (int i = 0; i <= n; ++i) t.at(i, r) = parse_integer(col[static_cast<std::size_t>(i)].get<std::string>());
  }
  return t;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "polytope " << r.polytope_id << "  n=" << r.n << "  k=" << r.k
     << "  dual_is_lattice=" << (r.dual_is_lattice ? "true" : "false") << '\n';
  os << "delta = " << str(r.delta.entries) << '\n';
  for (std::int64_t c = 0; c < r.k; ++c) os << "  r=" << c << ": " << str(r.residue_table.column(c)) << '\n';
  for (const auto& c : r.checks) {
    os << (c.passed ? "  [pass] " : (c.fatal ? "  [FATAL] " : "  [fail] ")) << c.name;
    if (c.witness) os << "  -- " << *c.witness;
    os << '\n';
  }
  os << "status: " << (r.fatal() ? "FATAL" : "OK") << '\n';
  return os.str();
}

}  // namespace ehrhart
