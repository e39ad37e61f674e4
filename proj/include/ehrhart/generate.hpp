#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ehrhart/geometry.hpp"

namespace ehrhart {

struct GeneratorConfig {
  std::uint64_t seed = 0;
  int dim = 2;
  int min_vertices = 0;  // 0 selects dim + 1
  int max_vertices = 0;  // 0 selects dim + 4
  /// Lattice generator: coordinates in [-B, B]. Rational generator: values in [-B, B].
  int coordinate_bound = 2;
  /// Rational generator: denominators drawn from [1, D].
  int denominator_bound = 3;
  /// Reject candidates whose denominator k exceeds this (0 = no limit).
  std::int64_t max_denominator = 0;
  int max_attempts = 1000;
};

/// Seeded polytope source.
///
/// Randomness comes from std::mt19937_64, whose output sequence is fixed by
/// the C++ standard, and integers in [lo, hi] are drawn by rejection from the
/// raw 64-bit output (no std::uniform_int_distribution, whose algorithm is
/// implementation-defined). Equal configs therefore give equal sequences on
/// every conforming platform.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(GeneratorConfig cfg);

  /// Lattice polytope with the origin strictly inside: hull of random points
  /// of [-B, B]^n, retried until full-dimensional with interior origin.
  Polytope lattice_with_interior_origin();
  /// dual(Q) for Q from lattice_with_interior_origin(); its dual is Q.
  Polytope dual_of_lattice();
  /// Rational polytope with interior origin, no constraint on its dual.
  Polytope rational_control();

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  template <class Draw>
  Polytope sample(Draw&& draw, const char* what);

  GeneratorConfig cfg_;
  std::mt19937_64 rng_;
};

Polytope gen_lattice_with_interior_origin(const GeneratorConfig& cfg);
Polytope gen_dual_of_lattice(const GeneratorConfig& cfg);
Polytope gen_rational_control(const GeneratorConfig& cfg);

struct CatalogEntry {
  std::string name;
  Polytope polytope;
};

/// square2, diamond2, halfdiamond2, seg_m1_2, seg_mhalf_1, seg_mhalf_third,
/// seg_m23_1, cube3, octa3.
const std::vector<CatalogEntry>& catalog();
std::optional<Polytope> catalog_lookup(std::string_view name);

}  // namespace ehrhart
