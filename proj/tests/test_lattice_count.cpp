#include <doctest.h>

#include "ehrhart/error.hpp"
#include "ehrhart/generate.hpp"
#include "ehrhart/lattice_count.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace ehrhart;
using testing_helpers::fixture;
using testing_helpers::ints;
using testing_helpers::poly;

namespace {

LatticePoint lp(std::initializer_list<long> c) { return ints(c); }

std::vector<Polytope> mixed_instances() {
  std::vector<Polytope> out;
  for (const auto& e : catalog()) out.push_back(e.polytope);
  for (int dim = 1; dim <= 3; ++dim) {
    GeneratorConfig cfg;
    cfg.seed = 100 + static_cast<std::uint64_t>(dim);
    cfg.dim = dim;
    cfg.coordinate_bound = dim == 3 ? 1 : 2;
    InstanceGenerator gen(cfg);
    for (int i = 0; i < 4; ++i) {
      out.push_back(gen.dual_of_lattice());
      out.push_back(gen.rational_control());
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("lattice-count") {
  TEST_CASE("square counts") {
    const Polytope& sq = fixture("square2");
    CHECK(count_points(sq, 2) == 25);
    CHECK(count_points(sq, 1, true) == 1);
    for (std::int64_t m = 0; m <= 6; ++m) {
      CHECK(count_points(sq, m) == (2 * m + 1) * (2 * m + 1));
    }
  }

  TEST_CASE("zero dilation is the origin") {
    for (const auto& e : catalog()) {
      CHECK(count_points(e.polytope, 0) == 1);
      CHECK(count_points(e.polytope, 0, true) == 0);
    }
  }

  TEST_CASE("segment counts match the closed form") {
    for (auto [a, b] : {std::pair{"-1/2", "1/3"}, {"-2/3", "1"}, {"-1", "2"}, {"-7/5", "3/4"}}) {
      const Polytope seg = poly({{a}, {b}});
      for (std::int64_t m = 0; m <= 20; ++m) {
        CHECK(count_points(seg, m) ==
              oracle::segment_count(Rational::parse(a), Rational::parse(b), m));
      }
    }
  }

  TEST_CASE("products of intervals match per-axis products") {
    const char* lo[] = {"-1/2", "-2/3", "-3/4"};
    const char* hi[] = {"1", "1/3", "5/2"};
    std::vector<Point> corners;
    for (int mask = 0; mask < 8; ++mask) {
      Point p;
      for (int j = 0; j < 3; ++j) p.push_back(Rational::parse((mask >> j) & 1 ? hi[j] : lo[j]));
      corners.push_back(p);
    }
    const Polytope box = Polytope::from_vertices(corners);
    for (std::int64_t m = 0; m <= 8; ++m) {
      std::int64_t expect = 1;
      for (int j = 0; j < 3; ++j) expect *= oracle::segment_count(Rational::parse(lo[j]), Rational::parse(hi[j]), m);
      CHECK(count_points(box, m) == expect);
    }
  }

  TEST_CASE("parallel kernel, serial reference and hull oracle agree") {
    for (const auto& p : mixed_instances()) {
      for (std::int64_t m = 0; m <= 3; ++m) {
        for (bool strict : {false, true}) {
          CHECK(count_points(p, m, strict) == count_points_reference(p, m, strict));
        }
        CHECK(count_points(p, m) == oracle::hull_count(p.vertices(), m));
        CHECK(count_points(p, m) == static_cast<long>(lattice_points(p, m).size()));
      }
    }
  }

  TEST_CASE("monotone in m, interior never exceeds closed") {
    for (const auto& p : mixed_instances()) {
      Integer prev = 0;
      for (std::int64_t m = 0; m <= 6; ++m) {
        const CountRecord rec = count_record(p, m);
        CHECK(rec.closed_count >= prev);
        CHECK(rec.interior_count <= rec.closed_count);
        prev = rec.closed_count;
      }
    }
  }

  TEST_CASE("budget guard") {
    CHECK_THROWS_AS(count_points(fixture("cube3"), 50, false, 1000), Error);
    try {
      (void)count_points(fixture("cube3"), 50, false, 1000);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BudgetExceeded);
    }
    CHECK(count_points(fixture("cube3"), 4, false, 729) == 729);
  }

  TEST_CASE("big-integer fallback path") {
    // A vertex at (2, 2 + 2^-62) gives a facet normal with entries near 2^62,
    // beyond what the 64-bit row solve accepts.
    const Polytope tilted = poly({{"-2", "-2"}, {"2", "9223372036854775809/4611686018427387904"}, {"-2", "2"}});
    CHECK(abs(tilted.facets().front().normal[0].num()) + abs(tilted.facets().back().normal[0].num()) >
          Integer(1) << 61);
    for (std::int64_t m : {1, 2, 3}) {
      for (bool strict : {false, true}) {
        CHECK(count_points(tilted, m, strict) == count_points_reference(tilted, m, strict));
        CHECK(count_points(tilted, m, strict) ==
              static_cast<long>(lattice_points(tilted, m, strict).size()));
      }
    }
  }

  TEST_CASE("lattice_points lists sorted points") {
    const auto pts = lattice_points(fixture("diamond2"), 2, true);
    CHECK(pts == std::vector<LatticePoint>{lp({-1, 0}), lp({0, -1}), lp({0, 0}), lp({0, 1}), lp({1, 0})});
  }
}

TEST_SUITE("interior-shift") {
  TEST_CASE("square, m = 2") {
    const Polytope& sq = fixture("square2");
    CHECK(interior_shift_check(sq, 2));
    const auto cmp = compare_interior_shift(sq, 2);
    CHECK(cmp.equal);
    CHECK(cmp.interior_size == 9);
    CHECK(lattice_points(sq, 2, true) == lattice_points(sq, 1));
  }

  TEST_CASE("halfdiamond, m = 3") { CHECK(interior_shift_check(fixture("halfdiamond2"), 3)); }

  TEST_CASE("non-lattice dual is rejected") {
    try {
      (void)interior_shift_check(fixture("seg_m1_2"), 1);
      FAIL("expected DualNotLattice");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DualNotLattice);
    }
  }

  TEST_CASE("violations on non-lattice-dual fixtures") {
    const auto v = find_interior_shift_violation(fixture("seg_m1_2"), 6);
    REQUIRE(v);
    CHECK(v->m == 1);
    CHECK(*v->witness == lp({1}));
    CHECK(v->witness_in_interior);
    // [-2/3, 1]: interior of 2P = (-4/3, 2) has -1, but 1P = [-2/3, 1] does not.
    const auto w = find_interior_shift_violation(fixture("seg_m23_1"), 6);
    REQUIRE(w);
    CHECK(w->m == 2);
    CHECK(*w->witness == lp({-1}));
  }

  TEST_CASE("set identity on generated lattice-dual polytopes") {
    for (int dim = 1; dim <= 3; ++dim) {
      GeneratorConfig cfg;
      cfg.seed = 900 + static_cast<std::uint64_t>(dim);
      cfg.dim = dim;
      cfg.coordinate_bound = dim == 3 ? 1 : 2;
      InstanceGenerator gen(cfg);
      for (int i = 0; i < 5; ++i) {
        const Polytope p = gen.dual_of_lattice();
        for (std::int64_t m = 1; m <= 6; ++m) CHECK(interior_shift_check(p, m));
      }
    }
  }
}

TEST_SUITE("heights") {
  TEST_CASE("unit square") {
    const IntegerBox box{lp({0, 0}), lp({1, 1})};
    CHECK(height_profile(HalfSpace{{1, 1}, 1}, box) == ints({0, 1, 1, 2}));
  }

  TEST_CASE("3x3 box") {
    const IntegerBox box{lp({-1, -1}), lp({1, 1})};
    CHECK(height_profile(HalfSpace{{1, 0}, 1}, box) == ints({-1, -1, -1, 0, 0, 0, 1, 1, 1}));
  }

  TEST_CASE("rational normal rejected") {
    const IntegerBox box{lp({0, 0}), lp({1, 1})};
    try {
      (void)height_profile(HalfSpace{{Rational::parse("1/2"), 0}, 1}, box);
      FAIL("expected NonIntegerNormal");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NonIntegerNormal);
    }
  }

  TEST_CASE("lattice dual means integral unit-form normals") {
    GeneratorConfig cfg;
    cfg.seed = 5;
    cfg.dim = 3;
    cfg.coordinate_bound = 1;
    InstanceGenerator gen(cfg);
    for (int i = 0; i < 5; ++i) {
      const Polytope p = gen.dual_of_lattice();
      for (const auto& f : p.facets()) {
        const HalfSpace u = f.unit_bound();
        REQUIRE(u.has_integer_normal());
        CHECK_NOTHROW((void)height_profile(u, bounding_box(p, 3)));
      }
    }
  }
}
