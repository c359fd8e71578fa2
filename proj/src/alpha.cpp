// Licensed under the Apache License 2.0 (see LICENSE file).

#include "stablevol/alpha.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "predicates.hpp"

namespace stablevol {

// ---------------------------------------------------------------------------
// Pointcloud text format

PointCloud parse_pointcloud(std::istream& in) {
  PointCloud out;
  out.dim = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    for (char& ch : line)
      if (ch == ',' || ch == ';' || ch == '\t' || ch == '\r') ch = ' ';
    std::size_t first = line.find_first_not_of(' ');
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<double> values;
    std::string token;
    while (fields >> token) {
      char* end = nullptr;
      double v = std::strtod(token.c_str(), &end);
      if (end == token.c_str() || *end != '\0' || !std::isfinite(v))
        throw ParseError("line " + std::to_string(lineno) + ": bad coordinate '" + token + "'");
      values.push_back(v);
    }
    if (out.dim == 0) {
      if (values.size() != 2 && values.size() != 3)
        throw ParseError("line " + std::to_string(lineno) + ": expected 2 or 3 columns, got " +
                         std::to_string(values.size()));
      out.dim = static_cast<int>(values.size());
    } else if (static_cast<int>(values.size()) != out.dim) {
      throw ParseError("line " + std::to_string(lineno) + ": column count changed");
    }
    Point p{0.0, 0.0, 0.0};
    std::copy(values.begin(), values.end(), p.begin());
    out.points.push_back(p);
  }
  if (out.points.empty()) throw ParseError("pointcloud has no points");
  return out;
}

PointCloud read_pointcloud(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_pointcloud(in);
}

std::string format_pointcloud(const PointCloud& p) {
  std::string out;
  char buf[64];
  for (const Point& pt : p.points) {
    for (int j = 0; j < p.dim; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", pt[j]);
      if (j) out += ' ';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Delaunay

namespace {

constexpr VertexId kInfinite = -1;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Perturbation of magnitude 1e-9 * bbox, a fixed function of (index, axis).
std::vector<Point> jitter(const PointCloud& p) {
  double extent = 0;
  for (int j = 0; j < p.dim; ++j) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const Point& pt : p.points) {
      lo = std::min(lo, pt[j]);
      hi = std::max(hi, pt[j]);
    }
    extent = std::max(extent, hi - lo);
  }
  if (extent == 0) extent = 1;
  std::vector<Point> out = p.points;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int j = 0; j < p.dim; ++j) {
      std::uint64_t h = splitmix64(i * 4 + static_cast<std::uint64_t>(j) + 1);
      double u = static_cast<double>(h >> 11) * 0x1.0p-53 * 2.0 - 1.0;
      out[i][j] += 1e-9 * extent * u;
    }
  }
  return out;
}

template <std::size_t D>
class BowyerWatson {
 public:
  using Cell = std::array<VertexId, D + 1>;
  using Facet = std::array<VertexId, D>;

  explicit BowyerWatson(const std::vector<Point>& pts) : pts_(pts) {}

  std::vector<Cell> run(const std::vector<VertexId>& insertion) {
    std::vector<bool> used(pts_.size(), false);
    Cell first = initial_simplex(insertion);
    for (VertexId v : first) used[v] = true;
    cells_.push_back(first);
    for (std::size_t i = 0; i <= D; ++i) {
      Cell inf = first;
      inf[i] = kInfinite;
      // Flip so that the infinite vertex sits on the outer side.
      std::size_t a = (i + 1) % (D + 1), b = (i + 2) % (D + 1);
      std::swap(inf[a], inf[b]);
      cells_.push_back(inf);
    }
    for (VertexId v : insertion) {
      if (used[v]) continue;
      insert(v);
    }
    std::vector<Cell> finite;
    for (const Cell& c : cells_)
      if (std::find(c.begin(), c.end(), kInfinite) == c.end()) finite.push_back(c);
    return finite;
  }

 private:
  std::array<const Point*, D + 1> points_of(const Cell& c) const {
    std::array<const Point*, D + 1> out{};
    for (std::size_t i = 0; i <= D; ++i) out[i] = &pts_[c[i]];
    return out;
  }

  Cell initial_simplex(const std::vector<VertexId>& order) {
    const std::size_t n = order.size();
    if constexpr (D == 2) {
      for (std::size_t c = 2; c < n; ++c) {
        Cell cell{order[0], order[1], order[c]};
        int s = predicates::orient<2>(points_of(cell));
        if (s != 0) {
          if (s < 0) std::swap(cell[1], cell[2]);
          return cell;
        }
      }
    } else {
      for (std::size_t c = 2; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          Cell cell{order[0], order[1], order[c], order[d]};
          int s = predicates::orient<3>(points_of(cell));
          if (s != 0) {
            if (s < 0) std::swap(cell[2], cell[3]);
            return cell;
          }
        }
      }
    }
    throw DegenerateInputError("points are affinely dependent after perturbation");
  }

  int conflict(const Cell& c, VertexId v) const {
    const Point& q = pts_[v];
    auto inf = std::find(c.begin(), c.end(), kInfinite);
    if (inf == c.end()) return predicates::in_sphere<D>(points_of(c), q);
    Cell sub = c;
    sub[inf - c.begin()] = v;
    return predicates::orient<D>(points_of(sub));
  }

  void insert(VertexId v) {
    std::vector<Cell> keep, hit;
    keep.reserve(cells_.size() + 2 * D);
    for (const Cell& c : cells_) {
      int s = conflict(c, v);
      if (s == 0)
        throw DegenerateInputError("point " + std::to_string(v) +
                                   " is cospherical/coplanar after perturbation");
      (s > 0 ? hit : keep).push_back(c);
    }
    if (hit.empty())
      throw DegenerateInputError("point " + std::to_string(v) + " has no conflict region");
    std::map<Facet, int> count;
    for (const Cell& c : hit)
      for (std::size_t i = 0; i <= D; ++i) ++count[facet_key(c, i)];
    for (const Cell& c : hit) {
      for (std::size_t i = 0; i <= D; ++i) {
        if (count[facet_key(c, i)] != 1) continue;
        Cell nc = c;
        nc[i] = v;
        if (std::find(nc.begin(), nc.end(), kInfinite) == nc.end() &&
            predicates::orient<D>(points_of(nc)) <= 0)
          throw DegenerateInputError("flat cell created while inserting point " +
                                     std::to_string(v));
        keep.push_back(nc);
      }
    }
    cells_ = std::move(keep);
  }

  static Facet facet_key(const Cell& c, std::size_t skip) {
    Facet f{};
    std::size_t k = 0;
    for (std::size_t i = 0; i <= D; ++i)
      if (i != skip) f[k++] = c[i];
    std::sort(f.begin(), f.end());
    return f;
  }

  const std::vector<Point>& pts_;
  std::vector<Cell> cells_;
};

template <std::size_t D>
std::vector<Simplex> delaunay_cells(const PointCloud& p) {
  std::vector<Point> jittered = jitter(p);
  std::vector<VertexId> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    if (p.points[a] != p.points[b]) return p.points[a] < p.points[b];
    return a < b;
  });
  BowyerWatson<D> bw(jittered);
  std::vector<Simplex> out;
  for (const auto& cell : bw.run(order))
    out.emplace_back(std::vector<VertexId>(cell.begin(), cell.end()));
  return out;
}

// Exact test on the unjittered input: some dim+1 points are affinely
// independent. Collinearity in 3D is collinearity of all three projections.
bool full_dimensional(const PointCloud& p) {
  const Point& a = p.points[0];
  const Point& b = p.points[1];
  auto project = [](const Point& x, int drop) {
    return drop == 2 ? Point{x[0], x[1], 0} : drop == 1 ? Point{x[0], x[2], 0} : Point{x[1], x[2], 0};
  };
  auto collinear = [&](const Point& c) {
    for (int drop = (p.dim == 2 ? 2 : 0); drop <= 2; ++drop) {
      Point pa = project(a, drop), pb = project(b, drop), pc = project(c, drop);
      if (predicates::orient<2>({&pa, &pb, &pc}) != 0) return false;
    }
    return true;
  };
  for (std::size_t i = 2; i < p.size(); ++i) {
    const Point& c = p.points[i];
    if (collinear(c)) continue;
    if (p.dim == 2) return true;
    for (std::size_t j = 2; j < p.size(); ++j)
      if (predicates::orient<3>({&a, &b, &c, &p.points[j]}) != 0) return true;
    return false;
  }
  return false;
}

}  // namespace

SimplicialComplex delaunay(const PointCloud& p) {
  if (p.dim != 2 && p.dim != 3) throw DegenerateInputError("pointcloud dimension must be 2 or 3");
  if (p.points.empty()) throw DegenerateInputError("empty pointcloud");
  {
    std::vector<Point> sorted = p.points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DegenerateInputError("duplicate points");
  }
  std::vector<Simplex> top;
  const std::size_t n = p.size();
  if (n <= static_cast<std::size_t>(p.dim)) {
    // Too few points for a full-dimensional cell: the points span a simplex.
    std::vector<VertexId> all(n);
    std::iota(all.begin(), all.end(), 0);
    if (n == 3) {
      const Point &a = p.points[0], &b = p.points[1], &c = p.points[2];
      double cx = (b[1] - a[1]) * (c[2] - a[2]) - (b[2] - a[2]) * (c[1] - a[1]);
      double cy = (b[2] - a[2]) * (c[0] - a[0]) - (b[0] - a[0]) * (c[2] - a[2]);
      double cz = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
      if (cx == 0 && cy == 0 && cz == 0) throw DegenerateInputError("three collinear points");
    }
    top.emplace_back(all);
  } else if (!full_dimensional(p)) {
    throw DegenerateInputError(p.dim == 2 ? "all points are collinear" : "all points are coplanar");
  } else if (p.dim == 2) {
    top = delaunay_cells<2>(p);
  } else {
    top = delaunay_cells<3>(p);
  }
  return SimplicialComplex::closure(top);
}

// ---------------------------------------------------------------------------
// Alpha levels

namespace {

struct Sphere {
  Point center;
  long double radius2;
};

std::optional<Sphere> smallest_circumsphere(std::span<const Point> pts, int dim) {
  const std::size_t k = pts.size() - 1;
  if (k == 0) return Sphere{pts[0], 0.0L};
  std::vector<std::array<long double, 3>> v(k);
  for (std::size_t i = 0; i < k; ++i)
    for (int j = 0; j < 3; ++j)
      v[i][j] = static_cast<long double>(pts[i + 1][j]) - static_cast<long double>(pts[0][j]);
  // Gram system G lambda = diag(G) / 2.
  std::vector<std::vector<long double>> g(k, std::vector<long double>(k + 1, 0.0L));
  long double scale = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      long double s = 0;
      for (int a = 0; a < dim; ++a) s += v[i][a] * v[j][a];
      g[i][j] = s;
    }
    g[i][k] = g[i][i] / 2;
    scale = std::max(scale, g[i][i]);
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::fabs(g[r][col]) > std::fabs(g[piv][col])) piv = r;
    if (std::fabs(g[piv][col]) <= 1e-12L * scale) return std::nullopt;
    std::swap(g[piv], g[col]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      long double f = g[r][col] / g[col][col];
      for (std::size_t c = col; c <= k; ++c) g[r][c] -= f * g[col][c];
    }
  }
  std::array<long double, 3> off{0, 0, 0};
  for (std::size_t i = 0; i < k; ++i) {
    long double lambda = g[i][k] / g[i][i];
    for (int a = 0; a < 3; ++a) off[a] += lambda * v[i][a];
  }
  Sphere s;
  s.radius2 = off[0] * off[0] + off[1] * off[1] + off[2] * off[2];
  for (int a = 0; a < 3; ++a)
    s.center[a] = static_cast<double>(static_cast<long double>(pts[0][a]) + off[a]);
  return s;
}

std::vector<Point> gather(const Simplex& s, const PointCloud& p) {
  std::vector<Point> out;
  for (VertexId v : s.vertices()) out.push_back(p.points.at(v));
  return out;
}

// Radius of the smallest circumsphere; for affinely dependent vertex sets the
// largest such radius over the facets (the limit of the nearby non-degenerate
// cells).
double radius_or_fallback(const Simplex& s, const PointCloud& p) {
  std::vector<Point> pts = gather(s, p);
  if (auto sphere = smallest_circumsphere(pts, p.dim))
    return static_cast<double>(std::sqrt(sphere->radius2));
  double best = 0;
  for (const Simplex& f : s.facets()) best = std::max(best, radius_or_fallback(f, p));
  return best;
}

}  // namespace

double circumradius(std::span<const Point> pts, int dim) {
  auto s = smallest_circumsphere(pts, dim);
  return s ? static_cast<double>(std::sqrt(s->radius2)) : -1.0;
}

std::vector<double> alpha_levels(const SimplicialComplex& c, const PointCloud& p) {
  std::vector<double> level(c.size(), 0.0);
  for (int k = c.dim(); k >= 0; --k) {
    for (SimplexId id : c.simplices_of_dim(k)) {
      const Simplex& s = c.simplex(id);
      auto cof = c.cofacets(id);
      double coface_min = std::numeric_limits<double>::infinity();
      for (SimplexId cf : cof) coface_min = std::min(coface_min, level[cf]);
      if (k == 0) {
        level[id] = 0.0;
        continue;
      }
      std::vector<Point> pts = gather(s, p);
      auto sphere = smallest_circumsphere(pts, p.dim);
      bool gabriel = false;
      if (sphere) {
        gabriel = true;
        const long double limit = sphere->radius2 * (1.0L - 1e-10L);
        for (std::size_t q = 0; q < p.size() && gabriel; ++q) {
          if (std::binary_search(s.vertices().begin(), s.vertices().end(),
                                 static_cast<VertexId>(q)))
            continue;
          long double d2 = 0;
          for (int a = 0; a < p.dim; ++a) {
            long double diff = static_cast<long double>(p.points[q][a]) - sphere->center[a];
            d2 += diff * diff;
          }
          if (d2 < limit) gabriel = false;
        }
      }
      double value;
      if (cof.empty())
        value = sphere ? static_cast<double>(std::sqrt(sphere->radius2)) : radius_or_fallback(s, p);
      else if (gabriel)
        value = static_cast<double>(std::sqrt(sphere->radius2));
      else
        value = coface_min;
      // Monotone repair against round-off between a face and its cofaces.
      level[id] = std::min(value, coface_min);
    }
  }
  return level;
}

AlphaFiltration alpha_filtration(const PointCloud& p, bool squared) {
  auto complex = std::make_shared<const SimplicialComplex>(delaunay(p));
  std::vector<double> level = alpha_levels(*complex, p);
  if (squared)
    for (double& l : level) l *= l;
  AlphaFiltration f;
  f.order = build_order(complex, std::move(level));
  f.complex = std::move(complex);
  return f;
}

}  // namespace stablevol
