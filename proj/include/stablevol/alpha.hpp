// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef STABLEVOL_ALPHA_HPP
#define STABLEVOL_ALPHA_HPP

#include <array>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "stablevol/complex.hpp"

namespace stablevol {

using Point = std::array<double, 3>;

/// 2D or 3D points; 2D points keep z = 0.
struct PointCloud {
  int dim = 2;
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }
};

/// Whitespace- or comma-separated coordinates, one point per line. Blank
/// lines and lines starting with '#' are skipped; dimension is the column
/// count of the first data line. Throws ParseError.
PointCloud parse_pointcloud(std::istream& in);
PointCloud read_pointcloud(const std::string& path);
std::string format_pointcloud(const PointCloud& p);

/// Delaunay triangulation (Bowyer-Watson) with exact predicates evaluated
/// on a deterministically jittered copy of the input. Simplices are ordered by
/// (dimension, vertex list); vertex ids are point indices.
SimplicialComplex delaunay(const PointCloud& p);

/// Alpha value of every simplex, as a radius. Gabriel simplices take their
/// smallest circumradius, others the minimum level of their cofaces.
std::vector<double> alpha_levels(const SimplicialComplex& c, const PointCloud& p);

struct AlphaFiltration {
  std::shared_ptr<const SimplicialComplex> complex;
  OrderWithLevel order;
};

/// Delaunay + alpha levels + order. With squared = true every level is
/// squared (the order is unchanged).
AlphaFiltration alpha_filtration(const PointCloud& p, bool squared = false);

/// Smallest circumsphere radius of the given points (affine hull centre).
/// Returns a negative value when the points are affinely dependent.
double circumradius(std::span<const Point> pts, int dim);

}  // namespace stablevol

#endif  // STABLEVOL_ALPHA_HPP
