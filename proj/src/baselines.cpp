// Licensed under the Apache License 2.0 (see LICENSE file).

#include "stablevol/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <random>

#include "stablevol/dual_graph.hpp"
#include "stablevol/parallel.hpp"
#include "stablevol/volume.hpp"

namespace stablevol {

namespace {

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

PointCloud perturb(const PointCloud& p, const NoiseModel& noise, std::uint64_t trial) {
  if (!(noise.half_width > 0)) throw Error("noise half width must be positive");
  std::seed_seq seq{static_cast<std::uint32_t>(noise.seed), static_cast<std::uint32_t>(noise.seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  PointCloud out = p;
  for (Point& x : out.points)
    for (int a = 0; a < p.dim; ++a) x[a] += (2 * unit_uniform(rng) - 1) * noise.half_width;
  return out;
}

FrequencyMap statistical_frequencies(const PointCloud& p, int degree, double birth, double death,
                                     const NoiseModel& noise, std::size_t trials, unsigned threads) {
  if (trials == 0) throw Error("at least one trial is required");
  enum class Outcome { Unmatched, Failed, Ok };
  struct Trial {
    Outcome outcome = Outcome::Unmatched;
    std::vector<VertexId> vertices;
  };
  std::vector<Trial> results(trials);
  const double radius = std::max(2 * noise.half_width, 1e-6);
  parallel_for(trials, threads, [&](std::size_t t) {
    AlphaFiltration f = alpha_filtration(perturb(p, noise, t));
    const OrderWithLevel& o = f.order;
    Diagram d = diagram(reduce(o), o, degree);
    const PersistencePair* best = nullptr;
    double best_dist = std::numeric_limits<double>::infinity();
    for (const PersistencePair& q : d.pairs) {
      if (q.essential()) continue;
      double dist = std::max(std::fabs(q.birth_time - birth), std::fabs(q.death_time - death));
      if (dist < best_dist) {
        best_dist = dist;
        best = &q;
      }
    }
    Trial& out = results[t];
    if (best == nullptr || best_dist > radius) return;
    Chain bd(Field::Z2, 0);
    try {
      if (degree == o.complex().dim() - 1) {
        PersistenceTree tree = compute_tree(build_dual_graph(o), o);
        bd = volume_boundary(o.complex(), optimal_volume_tree(tree, *best));
      } else {
        bd = optimal_volume_lp(o, *best).boundary;
      }
    } catch (const ApproximationMismatch&) {
      out.outcome = Outcome::Failed;
      return;
    } catch (const InfeasibleError&) {
      out.outcome = Outcome::Failed;
      return;
    }
    out.outcome = Outcome::Ok;
    for (SimplexId s : bd.support())
      for (VertexId v : o.complex().simplex(s).vertices()) out.vertices.push_back(v);
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  });

  FrequencyMap map;
  map.trials = trials;
  std::vector<std::size_t> count(p.size(), 0);
  for (const Trial& t : results) {
    if (t.outcome == Outcome::Unmatched) continue;
    ++map.matched;
    if (t.outcome == Outcome::Failed) {
      ++map.failed;
      continue;
    }
    for (VertexId v : t.vertices) ++count[v];
  }
  map.frequency.assign(p.size(), 0.0);
  if (map.matched > 0)
    for (std::size_t i = 0; i < p.size(); ++i)
      map.frequency[i] = static_cast<double>(count[i]) / static_cast<double>(map.matched);
  if (2 * map.matched < trials) map.status = "warning";
  return map;
}

std::int32_t rsc_index_for_level(const OrderWithLevel& o, const PersistencePair& pair, double t) {
  const std::int32_t lo = o.rank(pair.birth);
  const std::int32_t hi = pair.essential() ? static_cast<std::int32_t>(o.size()) - 1 : o.rank(pair.death) - 1;
  std::int32_t k = lo;
  for (std::int32_t r = lo; r <= hi; ++r)
    if (o.level(o.at(r)) <= t) k = r;
  return k;
}

CycleLoop reconstructed_shortest_cycle(const OrderWithLevel& o, const PersistencePair& pair,
                                       std::int32_t k_index, const PointCloud* points) {
  if (pair.degree != 1) throw DegreeError("reconstructed shortest cycles need a degree-1 pair");
  CohomologyResult coh = cohomology_reduce(o);
  for (std::size_t i = 0; i < coh.pairs.size(); ++i)
    if (coh.pairs[i].degree == 1 && coh.pairs[i].birth == pair.birth)
      return reconstructed_shortest_cycle(o, pair, coh.cocycles[i], k_index, points);
  throw Error("pair not found in the cohomology decomposition");
}

CycleLoop reconstructed_shortest_cycle(const OrderWithLevel& o, const PersistencePair& pair,
                                       const std::vector<SimplexId>& cocycle, std::int32_t k_index,
                                       const PointCloud* points) {
  if (pair.degree != 1) throw DegreeError("reconstructed shortest cycles need a degree-1 pair");
  const std::int32_t hi = pair.essential() ? static_cast<std::int32_t>(o.size()) : o.rank(pair.death);
  if (k_index < o.rank(pair.birth) || k_index >= hi)
    throw Error("prefix index must lie between the birth and death ranks");
  const SimplicialComplex& c = o.complex();
  const std::size_t nv = c.vertex_count();
  std::vector<bool> in_cocycle(c.size(), false);
  for (SimplexId s : cocycle) in_cocycle[s] = true;

  auto weight = [&](SimplexId e) {
    if (points == nullptr) return 1.0;
    const Point& a = points->points[c.simplex(e)[0]];
    const Point& b = points->points[c.simplex(e)[1]];
    return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
  };
  struct Arc {
    VertexId to;
    SimplexId edge;
    double w;
  };
  std::vector<std::vector<Arc>> adj(nv);
  for (SimplexId e : c.simplices_of_dim(1)) {
    if (o.rank(e) > k_index || in_cocycle[e]) continue;
    VertexId a = c.simplex(e)[0], b = c.simplex(e)[1];
    adj[a].push_back({b, e, weight(e)});
    adj[b].push_back({a, e, weight(e)});
  }
  for (auto& arcs : adj)
    std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) { return x.to < y.to; });

  CycleLoop best;
  std::vector<double> dist(nv);
  std::vector<SimplexId> via(nv);
  std::vector<VertexId> prev(nv);
  for (SimplexId sigma : cocycle) {
    if (c.dim(sigma) != 1 || o.rank(sigma) > k_index) continue;
    const VertexId u = c.simplex(sigma)[0], v = c.simplex(sigma)[1];
    std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
    std::fill(via.begin(), via.end(), kNoSimplex);
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[u] = 0;
    heap.push({0.0, u});
    while (!heap.empty()) {
      auto [d, x] = heap.top();
      heap.pop();
      if (d > dist[x]) continue;
      if (x == v) break;
      for (const Arc& a : adj[x]) {
        if (d + a.w < dist[a.to]) {
          dist[a.to] = d + a.w;
          via[a.to] = a.edge;
          prev[a.to] = x;
          heap.push({dist[a.to], a.to});
        }
      }
    }
    if (!std::isfinite(dist[v])) continue;
    const double total = dist[v] + weight(sigma);
    if (best.found && !(total < best.weight)) continue;
    best.found = true;
    best.weight = total;
    best.edges = {sigma};
    best.vertices = {u};
    for (VertexId x = v; x != u; x = prev[x]) {
      best.vertices.push_back(x);
      best.edges.push_back(via[x]);
    }
  }
  return best;
}

}  // namespace stablevol
