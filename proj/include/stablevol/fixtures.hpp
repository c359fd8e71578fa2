// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef STABLEVOL_FIXTURES_HPP
#define STABLEVOL_FIXTURES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stablevol/alpha.hpp"

namespace stablevol {

/// Names accepted by generate_fixture.
std::vector<std::string> fixture_names();

/// Deterministic point clouds:
///   fig1-five-points   unit square plus an equilateral triangle on its left edge
///   lattice-3x3x3      {0,1,2}^3 with uniform noise of half width 0.05
///   lattice-2d-defects 30x30 unit lattice, interior points dropped with
///                      probability 1/2, uniform noise of half width 0.1
///   hexagon            regular hexagon with unit sides
///   annulus            60 points uniform in the annulus 1 <= |x| <= 2
/// Throws Error for unknown names.
PointCloud generate_fixture(const std::string& name, std::uint64_t seed = 0);

PointCloud fig1_five_points(double a = 1.0);
PointCloud lattice_3x3x3(std::uint64_t seed, double half_width = 0.05);
PointCloud lattice_2d_defects(std::uint64_t seed, int side = 30, double keep = 0.5, double half_width = 0.1);
PointCloud hexagon(double side = 1.0);
PointCloud annulus(std::uint64_t seed, std::size_t count = 60);

/// Hand-built octagon filtration for reconstructed shortest cycles. Levels
/// are stage numbers 1..7; the loop born at stage 2 dies at stage 7 and every
/// stage in between adds one chord that shortens the shortest loop.
OrderWithLevel octagon_rsc_filtration();

}  // namespace stablevol

#endif  // STABLEVOL_FIXTURES_HPP
