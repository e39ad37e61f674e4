#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "ehrhart/generate.hpp"
#include "ehrhart/io.hpp"
#include "ehrhart/verify.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ehrhart::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("ehrhart_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("info") {
    const Run r = run({"info", "square2", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["dim"] == 2);
    CHECK(j["denominator"] == "1");
    CHECK(j["is_lattice"] == true);
    CHECK(j["facet_count"] == 4);
    CHECK(j["origin_interior"] == true);

    const json h = json::parse(run({"info", "halfdiamond2", "--format", "json"}).out);
    CHECK(h["denominator"] == "2");
    CHECK(h["is_lattice"] == false);

    const Run text = run({"info", "square2"});
    CHECK(text.out.find("k: 1") != std::string::npos);
    CHECK(text.out.find("facets: 4") != std::string::npos);
  }

  TEST_CASE("malformed input is a parse error with exit 2") {
    const Run r = run({"info", temp_file("bad.json", "{\"dim\": 2, \"vertices\": [")});
    CHECK(r.code == 2);
    CHECK(r.err.find("ParseError") != std::string::npos);
    const Run f = run({"info", temp_file("float.json", R"({"dim":1,"vertices":[[0.5],[-1]]})")});
    CHECK(f.code == 2);
    CHECK(f.err.find("$.vertices[0][0]") != std::string::npos);
  }

  TEST_CASE("delta") {
    const json sq = json::parse(run({"delta", "square2", "--format", "json"}).out);
    CHECK(sq["delta"] == json({"1", "6", "1"}));
    CHECK(sq["palindromic"] == true);
    const json seg = json::parse(run({"delta", "seg_m1_2", "--format", "json"}).out);
    CHECK(seg["delta"] == json({"1", "2"}));
    CHECK(seg["palindromic"] == false);
    const json third = json::parse(run({"delta", "seg_mhalf_third", "--format", "json"}).out);
    CHECK(third["delta"] == json({"1", "1", "2", "3", "4", "4", "4", "4", "3", "2", "1", "1"}));
    CHECK(third["k"] == 6);
    CHECK(third["palindromic"] == true);
    const json half = json::parse(run({"delta", "seg_mhalf_1", "--format", "json"}).out);
    CHECK(half["residue_table"] == json::array({json::array({"1", "2"}), json::array({"2", "1"})}));
  }

  TEST_CASE("count") {
    const json j = json::parse(run({"count", "square2", "--m", "2", "--format", "json"}).out);
    CHECK(j["closed_count"] == "25");
    CHECK(j["interior_count"] == "9");
    CHECK(run({"count", "square2"}).code == 2);  // --m is required
  }

  TEST_CASE("dual prints the polytope format") {
    const Run r = run({"dual", "square2", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(ehrhart::polytope_from_string(r.out) == *ehrhart::catalog_lookup("diamond2"));
    CHECK(run({"dual", temp_file("edge.json", R"({"dim":1,"vertices":[["0"],["1"]]})")}).code == 2);
  }

  TEST_CASE("verify exit codes") {
    const Run half = run({"verify", "halfdiamond2"});
    CHECK(half.code == 0);
    CHECK(half.out.find("status: OK") != std::string::npos);
    const Run seg = run({"verify", "seg_m23_1", "--format", "json"});
    CHECK(seg.code == 0);
    const json j = json::parse(seg.out);
    CHECK(j["dual_is_lattice"] == false);
    for (const auto& c : j["checks"]) {
      if (c["name"] == "palindrome") CHECK(c["passed"] == false);
      if (c["name"] == "characterization") CHECK(c["passed"] == true);
    }
    CHECK(run({"verify", "seg_m23_1", "--m-max", "0"}).code == 2);
  }

  TEST_CASE("budget errors use their own exit code") {
    const Run r = run({"verify", "cube3", "--budget", "10"});
    CHECK(r.code == 3);
    CHECK(r.err.find("BudgetExceeded") != std::string::npos);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate", "square2"}).code == 2);
    CHECK(run({"info", "square2", "--bogus"}).code == 2);
    CHECK(run({"info", "no_such_thing"}).code == 2);
    CHECK(run({"info", "square2", "--format", "yaml"}).code == 2);
  }

  TEST_CASE("catalog name that is also a file is ambiguous") {
    const auto dir = std::filesystem::temp_directory_path() / "ehrhart_cli_ambig";
    std::filesystem::create_directories(dir);
    const auto old = std::filesystem::current_path();
    std::filesystem::current_path(dir);
    std::ofstream("square2") << R"({"dim":1,"vertices":[["-1"],["1"]]})";
    const Run r = run({"info", "square2"});
    const Run explicit_path = run({"info", "./square2", "--format", "json"});
    std::filesystem::current_path(old);
    CHECK(r.code == 2);
    CHECK(r.err.find("both") != std::string::npos);
    CHECK(explicit_path.code == 0);
  }

  TEST_CASE("gen is deterministic and round-trips") {
    const Run a = run({"gen", "dual-of-lattice", "--seed", "5", "--dim", "2"});
    const Run b = run({"gen", "dual-of-lattice", "--seed", "5", "--dim", "2"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto p = ehrhart::polytope_from_string(a.out);
    CHECK(ehrhart::is_lattice(ehrhart::dual(p)));
    CHECK(run({"gen", "rational", "--seed", "5", "--dim", "3", "--bound", "1"}).code == 0);
    CHECK(run({"gen", "bogus"}).code == 2);
    CHECK(run({"gen", "lattice", "--bound", "0"}).code == 3);
  }

  TEST_CASE("json outputs parse back to exact values") {
    const json j = json::parse(run({"verify", "seg_mhalf_third", "--format", "json"}).out);
    const auto d = ehrhart::delta_vector_from_json(j["delta"]);
    const auto t = ehrhart::residue_table_from_json(j["residue_table"]);
    CHECK(ehrhart::interleave(t) == d);
    CHECK(d == ehrhart::delta_vector(ehrhart::fit_qp(*ehrhart::catalog_lookup("seg_mhalf_third"))));
  }
}
