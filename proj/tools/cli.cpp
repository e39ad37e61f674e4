#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ehrhart/ehrhart.hpp"
#include "ehrhart/error.hpp"
#include "ehrhart/generate.hpp"
#include "ehrhart/io.hpp"
#include "ehrhart/verify.hpp"

namespace ehrhart::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string format = "text";
  std::uint64_t budget = kDefaultBudget;
  int max_dim = kDefaultMaxDim;
  std::int64_t m = 0;
  std::int64_t m_max = 6;
  std::uint64_t seed = 0;
  int dim = 2;
  int bound = 2;
  int denominator_bound = 3;
  std::int64_t max_denominator = 0;
};

struct Loaded {
  std::string id;
  Polytope polytope;
};

Loaded load(const Options& o) {
  if (o.input == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return {"stdin", polytope_from_string(buf.str(), o.max_dim)};
  }
  const bool is_file = std::filesystem::is_regular_file(o.input);
  if (auto p = catalog_lookup(o.input)) {
    if (is_file) {
      throw Error(Errc::InvalidArgument,
                  "'" + o.input + "' names both a catalog entry and a file; use ./" + o.input);
    }
    return {o.input, *p};
  }
  if (!is_file) throw Error(Errc::InvalidArgument, "'" + o.input + "' is neither a catalog name nor a file");
  std::ifstream in(o.input);
  std::stringstream buf;
  buf << in.rdbuf();
  return {o.input, polytope_from_string(buf.str(), o.max_dim)};
}

std::string join(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

int cmd_info(const Options& o, std::ostream& out) {
  const auto [id, p] = load(o);
  const bool interior = origin_in_interior(p);
  json facets = json::array();
  for (const auto& f : p.facets()) facets.push_back(to_json(f));
  json doc{{"polytope", id},
           {"dim", p.dim()},
           {"vertex_count", p.vertices().size()},
           {"denominator", denominator(p).get_str()},
           {"is_lattice", is_lattice(p)},
           {"origin_interior", interior},
           {"facet_count", p.facets().size()},
           {"vertices", polytope_to_json(p)["vertices"]},
           {"facets", std::move(facets)}};
  doc["dual_is_lattice"] = interior ? json(dual_is_lattice(p)) : json(nullptr);
  if (o.format == "json") {
    emit(out, doc);
    return kOk;
  }
  out << "polytope: " << id << '\n'
      << "n: " << p.dim() << '\n'
      << "vertices: " << p.vertices().size() << '\n'
      << "k: " << denominator(p).get_str() << '\n'
      << "lattice: " << (is_lattice(p) ? "true" : "false") << '\n'
      << "origin_interior: " << (interior ? "true" : "false") << '\n'
      << "facets: " << p.facets().size() << '\n';
  for (const auto& v : p.vertices()) out << "  v " << to_string(v) << '\n';
  for (const auto& f : p.facets()) out << "  f " << to_string(f) << '\n';
  return kOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const auto [id, p] = load(o);
  const CountRecord rec = count_record(p, o.m, o.budget);
  if (o.format == "json") {
    emit(out, json{{"polytope", id},
                   {"m", rec.m},
                   {"closed_count", rec.closed_count.get_str()},
                   {"interior_count", rec.interior_count.get_str()}});
  } else {
    out << "m: " << rec.m << '\n'
        << "closed: " << rec.closed_count.get_str() << '\n'
        << "interior: " << rec.interior_count.get_str() << '\n';
  }
  return kOk;
}

int cmd_delta(const Options& o, std::ostream& out, std::ostream& err) {
  const auto [id, p] = load(o);
  const std::int64_t k = period(p);
  const auto counts = ehrhart_counts(p, k * (p.dim() + 1), o.budget);
  const EhrhartQP qp = fit_qp_from_counts(p.dim(), k, counts);
  const DeltaVector d = delta_vector(qp);
  const CheckResult oracle = check_oracle(d, series_delta_from_counts(p.dim(), k, counts));
  if (!oracle.passed) {
    err << "fatal: delta extraction methods disagree: " << *oracle.witness << '\n';
    return kFatal;
  }
  const bool palindromic = check_palindrome(d).passed;
  if (o.format == "json") {
    emit(out, json{{"polytope", id},
                   {"n", p.dim()},
                   {"k", k},
                   {"delta", to_json(d)},
                   {"residue_table", to_json(qp.table)},
                   {"palindromic", palindromic}});
  } else {
    out << "n: " << p.dim() << "  k: " << k << '\n'
        << "delta: " << join(d.entries) << '\n';
    for (std::int64_t r = 0; r < k; ++r) out << "  r=" << r << ": " << join(qp.table.column(r)) << '\n';
    out << "palindromic: " << (palindromic ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_dual(const Options& o, std::ostream& out) {
  const auto [id, p] = load(o);
  const Polytope q = dual(p);
  if (o.format == "json") {
    out << polytope_to_string(q) << '\n';
  } else {
    out << "dual of " << id << ": n=" << q.dim() << ", " << q.vertices().size() << " vertices, k="
        << denominator(q).get_str() << '\n';
    for (const auto& v : q.vertices()) out << "  v " << to_string(v) << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto [id, p] = load(o);
  const VerificationReport rep = full_report(p, id, VerifyConfig{o.m_max, o.budget});
  if (o.format == "json") {
    emit(out, to_json(rep));
  } else {
    out << to_text(rep);
  }
  return exit_code(rep);
}

int cmd_gen(const Options& o, std::ostream& out) {
  GeneratorConfig cfg;
  cfg.seed = o.seed;
  cfg.dim = o.dim;
  cfg.coordinate_bound = o.bound;
  cfg.denominator_bound = o.denominator_bound;
  cfg.max_denominator = o.max_denominator;
  Polytope p = [&] {
    if (o.input == "lattice") return gen_lattice_with_interior_origin(cfg);
    if (o.input == "dual-of-lattice") return gen_dual_of_lattice(cfg);
    if (o.input == "rational") return gen_rational_control(cfg);
    throw Error(Errc::InvalidArgument, "unknown generator '" + o.input +
                                           "' (expected lattice, dual-of-lattice or rational)");
  }();
  out << polytope_to_string(p) << '\n';
  return kOk;
}

int exit_for(Errc code) {
  switch (code) {
    case Errc::BudgetExceeded:
    case Errc::GenerationExhausted:
      return kComputation;
    case Errc::NonIntegerDelta:
      return kFatal;
    default:
      return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ehrhart quasi-polynomials and delta-vectors of rational polytopes", "ehrhart"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&o](CLI::App* sub, bool takes_input = true) {
    if (takes_input) {
      sub->add_option("input", o.input, "catalog name, polytope JSON file, or - for stdin")->required();
    }
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--budget", o.budget, "maximum bounding-box cells per count");
    sub->add_option("--max-dim", o.max_dim, "dimension cap for input polytopes");
  };

  auto* info = app.add_subcommand("info", "dimension, vertices, denominator, facets");
  common(info);
  auto* count = app.add_subcommand("count", "lattice points of mP and its interior");
  common(count);
  count->add_option("--m", o.m, "dilation factor")->required()->check(CLI::NonNegativeNumber);
  auto* delta = app.add_subcommand("delta", "delta-vector and residue table");
  common(delta);
  auto* dual_cmd = app.add_subcommand("dual", "polar dual polytope");
  common(dual_cmd);
  auto* verify = app.add_subcommand("verify", "run every check and report");
  common(verify);
  verify->add_option("--m-max", o.m_max, "largest dilation checked")->check(CLI::PositiveNumber);
  auto* gen = app.add_subcommand("gen", "generate a seeded polytope");
  gen->add_option("input", o.input, "lattice | dual-of-lattice | rational")->required();
  gen->add_option("--seed", o.seed, "PRNG seed");
  gen->add_option("--dim", o.dim, "ambient dimension")->check(CLI::Range(1, 4));
  gen->add_option("--bound", o.bound, "coordinate bound B");
  gen->add_option("--denominator-bound", o.denominator_bound, "largest denominator (rational)");
  gen->add_option("--max-denominator", o.max_denominator, "reject instances with larger k");
  gen->add_option("--format", o.format, "ignored; gen always prints JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (info->parsed()) return cmd_info(o, out);
    if (count->parsed()) return cmd_count(o, out);
    if (delta->parsed()) return cmd_delta(o, out, err);
    if (dual_cmd->parsed()) return cmd_dual(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e.code());
  }
  return kUsage;
}

}  // namespace ehrhart::cli
