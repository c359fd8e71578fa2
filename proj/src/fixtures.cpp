// Licensed under the Apache License 2.0 (see LICENSE file).

#include "stablevol/fixtures.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "stablevol/baselines.hpp"

namespace stablevol {

namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream};
  return std::mt19937_64(seq);
}

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::vector<std::string> fixture_names() {
  return {"fig1-five-points", "lattice-3x3x3", "lattice-2d-defects", "hexagon", "annulus"};
}

PointCloud generate_fixture(const std::string& name, std::uint64_t seed) {
  if (name == "fig1-five-points") return fig1_five_points();
  if (name == "lattice-3x3x3") return lattice_3x3x3(seed);
  if (name == "lattice-2d-defects") return lattice_2d_defects(seed);
  if (name == "hexagon") return hexagon();
  if (name == "annulus") return annulus(seed);
  throw Error("unknown fixture '" + name + "'");
}

PointCloud fig1_five_points(double a) {
  PointCloud p;
  p.dim = 2;
  p.points = {{0, 0, 0}, {a, 0, 0}, {a, a, 0}, {0, a, 0}, {-a * std::sqrt(3.0) / 2, a / 2, 0}};
  return p;
}

PointCloud lattice_3x3x3(std::uint64_t seed, double half_width) {
  PointCloud p;
  p.dim = 3;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) p.points.push_back({double(x), double(y), double(z)});
  return perturb(p, NoiseModel{half_width, seed}, 0);
}

PointCloud lattice_2d_defects(std::uint64_t seed, int side, double keep, double half_width) {
  auto rng = make_rng(seed, 1);
  PointCloud p;
  p.dim = 2;
  for (int x = 0; x < side; ++x)
    for (int y = 0; y < side; ++y) {
      const bool perimeter = x == 0 || y == 0 || x == side - 1 || y == side - 1;
      const double u = unit_uniform(rng);  // drawn for every site to keep the stream aligned
      if (perimeter || u < keep) p.points.push_back({double(x), double(y), 0});
    }
  return perturb(p, NoiseModel{half_width, seed}, 0);
}

PointCloud hexagon(double side) {
  PointCloud p;
  p.dim = 2;
  for (int i = 0; i < 6; ++i) {
    const double t = i * std::numbers::pi / 3;
    p.points.push_back({side * std::cos(t), side * std::sin(t), 0});
  }
  return p;
}

PointCloud annulus(std::uint64_t seed, std::size_t count) {
  auto rng = make_rng(seed, 2);
  PointCloud p;
  p.dim = 2;
  while (p.points.size() < count) {
    const double x = 4 * unit_uniform(rng) - 2, y = 4 * unit_uniform(rng) - 2;
    const double r2 = x * x + y * y;
    if (r2 >= 1 && r2 <= 4) p.points.push_back({x, y, 0});
  }
  return p;
}

OrderWithLevel octagon_rsc_filtration() {
  struct Staged {
    Simplex s;
    double stage;
  };
  std::vector<Staged> items;
  for (VertexId v = 0; v < 8; ++v) items.push_back({Simplex{v}, 1});
  for (VertexId v = 0; v < 8; ++v) items.push_back({Simplex{v, (v + 1) % 8}, 2});
  items.push_back({Simplex{0, 6}, 4});
  items.push_back({Simplex{0, 6, 7}, 4});
  items.push_back({Simplex{1, 3}, 5});
  items.push_back({Simplex{1, 2, 3}, 5});
  items.push_back({Simplex{0, 5}, 6});
  items.push_back({Simplex{0, 5, 6}, 6});
  items.push_back({Simplex{0, 3}, 7});
  items.push_back({Simplex{0, 4}, 7});
  items.push_back({Simplex{0, 1, 3}, 7});
  items.push_back({Simplex{0, 3, 4}, 7});
  items.push_back({Simplex{0, 4, 5}, 7});
  std::vector<Simplex> simplices;
  for (const auto& it : items) simplices.push_back(it.s);
  auto c = std::make_shared<const SimplicialComplex>(std::move(simplices));
  std::vector<double> level(c->size());
  for (const auto& it : items) level[c->find(it.s)] = it.stage;
  return build_order(c, level);
}

}  // namespace stablevol
