#include "ehrhart/generate.hpp"

#include <limits>

#include "ehrhart/error.hpp"

namespace ehrhart {

InstanceGenerator::InstanceGenerator(GeneratorConfig cfg) : cfg_(cfg), rng_(cfg.seed) {
  if (cfg_.dim < 1) throw Error(Errc::InvalidArgument, "generator dimension must be >= 1");
  if (cfg_.min_vertices == 0) cfg_.min_vertices = cfg_.dim + 1;
  if (cfg_.max_vertices == 0) cfg_.max_vertices = cfg_.dim + 4;
  if (cfg_.min_vertices > cfg_.max_vertices || cfg_.coordinate_bound < 0 || cfg_.denominator_bound < 1) {
    throw Error(Errc::InvalidArgument, "inconsistent generator config");
  }
}

std::int64_t InstanceGenerator::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<std::int64_t>(rng_());  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = rng_();
  while (x >= limit) x = rng_();
  return lo + static_cast<std::int64_t>(x % span);
}

template <class Draw>
Polytope InstanceGenerator::sample(Draw&& draw, const char* what) {
  for (int attempt = 0; attempt < cfg_.max_attempts; ++attempt) {
    const auto count = uniform(cfg_.min_vertices, cfg_.max_vertices);
    std::vector<Point> pts;
    for (std::int64_t v = 0; v < count; ++v) {
      Point p(cfg_.dim);
      for (auto& c : p) c = draw();
      pts.push_back(std::move(p));
    }
    try {
      Polytope p = Polytope::from_vertices(std::move(pts), cfg_.dim);
      if (origin_in_interior(p)) return p;
    } catch (const Error& e) {
      if (e.code() != Errc::DimensionDeficient) throw;
    }
  }
  throw Error(Errc::GenerationExhausted,
              std::string(what) + ": no valid instance after " + std::to_string(cfg_.max_attempts) +
                  " attempts");
}

Polytope InstanceGenerator::lattice_with_interior_origin() {
  const std::int64_t b = cfg_.coordinate_bound;
  return sample([&] { return Rational(Integer(static_cast<long>(uniform(-b, b)))); },
                "lattice generator");
}

Polytope InstanceGenerator::dual_of_lattice() {
  for (int attempt = 0; attempt < cfg_.max_attempts; ++attempt) {
    Polytope p = dual(lattice_with_interior_origin());
    if (cfg_.max_denominator == 0 || denominator(p) <= cfg_.max_denominator) return p;
  }
  throw Error(Errc::GenerationExhausted, "dual-of-lattice generator: denominator cap never met");
}

Polytope InstanceGenerator::rational_control() {
  const std::int64_t b = cfg_.coordinate_bound;
  const std::int64_t dmax = cfg_.denominator_bound;
  for (int attempt = 0; attempt < cfg_.max_attempts; ++attempt) {
    Polytope p = sample(
        [&] {
          const std::int64_t den = uniform(1, dmax);
          const std::int64_t num = uniform(-b * den, b * den);
          return Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
        },
        "rational generator");
    if (cfg_.max_denominator == 0 || denominator(p) <= cfg_.max_denominator) return p;
  }
  throw Error(Errc::GenerationExhausted, "rational generator: denominator cap never met");
}

Polytope gen_lattice_with_interior_origin(const GeneratorConfig& cfg) {
  return InstanceGenerator(cfg).lattice_with_interior_origin();
}

Polytope gen_dual_of_lattice(const GeneratorConfig& cfg) { return InstanceGenerator(cfg).dual_of_lattice(); }

Polytope gen_rational_control(const GeneratorConfig& cfg) { return InstanceGenerator(cfg).rational_control(); }

namespace {

Polytope make(std::initializer_list<std::initializer_list<const char*>> verts) {
  std::vector<Point> pts;
  for (const auto& v : verts) {
    Point p;
    for (const char* c : v) p.push_back(Rational::parse(c));
    pts.push_back(std::move(p));
  }
  return Polytope::from_vertices(std::move(pts));
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"square2", make({{"-1", "-1"}, {"1", "-1"}, {"1", "1"}, {"-1", "1"}})});
  c.push_back({"diamond2", make({{"1", "0"}, {"-1", "0"}, {"0", "1"}, {"0", "-1"}})});
  c.push_back({"halfdiamond2", make({{"1/2", "0"}, {"-1/2", "0"}, {"0", "1/2"}, {"0", "-1/2"}})});
  c.push_back({"seg_m1_2", make({{"-1"}, {"2"}})});
  c.push_back({"seg_mhalf_1", make({{"-1/2"}, {"1"}})});
  c.push_back({"seg_mhalf_third", make({{"-1/2"}, {"1/3"}})});
  c.push_back({"seg_m23_1", make({{"-2/3"}, {"1"}})});
  c.push_back({"cube3", make({{"-1", "-1", "-1"}, {"-1", "-1", "1"}, {"-1", "1", "-1"}, {"-1", "1", "1"},
                              {"1", "-1", "-1"}, {"1", "-1", "1"}, {"1", "1", "-1"}, {"1", "1", "1"}})});
  c.push_back({"octa3", make({{"1", "0", "0"}, {"-1", "0", "0"}, {"0", "1", "0"}, {"0", "-1", "0"},
                              {"0", "0", "1"}, {"0", "0", "-1"}})});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::optional<Polytope> catalog_lookup(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e.polytope;
  }
  return std::nullopt;
}

}  // namespace ehrhart
