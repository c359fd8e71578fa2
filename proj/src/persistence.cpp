// Licensed under the Apache License 2.0 (see LICENSE file).

#include "stablevol/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace stablevol {

namespace {

using Column = std::vector<std::int32_t>;  // sorted ranks, Z/2 entries

void add_into(Column& target, const Column& source, Column& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                std::back_inserter(scratch));
  target.swap(scratch);
}

Column boundary_column(const OrderWithLevel& o, SimplexId id) {
  Column col;
  for (SimplexId f : o.complex().facets(id))
    if (f != kNoSimplex) col.push_back(o.rank(f));
  std::sort(col.begin(), col.end());
  return col;
}

std::vector<PersistencePair> collect_pairs(const OrderWithLevel& o,
                                           const std::vector<std::int32_t>& death_of_birth,
                                           const std::vector<bool>& is_death) {
  std::vector<PersistencePair> out;
  const std::int32_t n = static_cast<std::int32_t>(o.size());
  for (std::int32_t r = 0; r < n; ++r) {
    if (is_death[r]) continue;
    SimplexId b = o.at(r);
    PersistencePair p;
    p.degree = o.complex().dim(b);
    p.birth = b;
    p.birth_time = o.level(b);
    if (death_of_birth[r] >= 0) {
      p.death = o.at(death_of_birth[r]);
      p.death_time = o.level(p.death);
    }
    out.push_back(p);
  }
  std::stable_sort(out.begin(), out.end(), [](const PersistencePair& a, const PersistencePair& b) {
    return a.degree < b.degree;
  });
  return out;
}

}  // namespace

std::vector<PersistencePair> reduce(const OrderWithLevel& o) {
  const std::int32_t n = static_cast<std::int32_t>(o.size());
  std::vector<std::int32_t> pivot_column(n, -1);  // row rank -> reducing column rank
  std::vector<std::int32_t> death_of_birth(n, -1);
  std::vector<bool> is_death(n, false), cleared(n, false);
  Column scratch;
  std::vector<Column> reduced(n);
  const int top = o.complex().dim();
  for (int d = top; d >= 1; --d) {
    for (std::int32_t j = 0; j < n; ++j) {
      SimplexId id = o.at(j);
      if (o.complex().dim(id) != d || cleared[j]) continue;
      Column col = boundary_column(o, id);
      while (!col.empty() && pivot_column[col.back()] >= 0)
        add_into(col, reduced[pivot_column[col.back()]], scratch);
      if (col.empty()) continue;
      std::int32_t low = col.back();
      pivot_column[low] = j;
      death_of_birth[low] = j;
      is_death[j] = true;
      cleared[low] = true;
      reduced[j] = std::move(col);
    }
  }
  return collect_pairs(o, death_of_birth, is_death);
}

std::vector<PersistencePair> reduce_standard(const OrderWithLevel& o) {
  const std::int32_t n = static_cast<std::int32_t>(o.size());
  std::vector<std::int32_t> pivot_column(n, -1);
  std::vector<std::int32_t> death_of_birth(n, -1);
  std::vector<bool> is_death(n, false);
  std::vector<Column> reduced(n);
  Column scratch;
  for (std::int32_t j = 0; j < n; ++j) {
    Column col = boundary_column(o, o.at(j));
    while (!col.empty() && pivot_column[col.back()] >= 0)
      add_into(col, reduced[pivot_column[col.back()]], scratch);
    if (col.empty()) continue;
    pivot_column[col.back()] = j;
    death_of_birth[col.back()] = j;
    is_death[j] = true;
    reduced[j] = std::move(col);
  }
  return collect_pairs(o, death_of_birth, is_death);
}

Diagram diagram(const std::vector<PersistencePair>& pairs, const OrderWithLevel& o, int degree) {
  Diagram d;
  d.degree = degree;
  for (const PersistencePair& p : pairs) {
    if (p.degree != degree) continue;
    double b = o.level(p.birth);
    double e = p.essential() ? kInfinity : o.level(p.death);
    if (b == e) continue;
    PersistencePair q = p;
    q.birth_time = b;
    q.death_time = e;
    d.pairs.push_back(q);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Bottleneck distance

namespace {

// Hopcroft-Karp on a dense adjacency predicate.
class Matcher {
 public:
  Matcher(std::size_t n, std::vector<std::vector<std::int32_t>> adj)
      : n_(n), adj_(std::move(adj)), match_l_(n, -1), match_r_(n, -1), dist_(n) {}

  std::size_t max_matching() {
    std::size_t size = 0;
    while (bfs())
      for (std::size_t u = 0; u < n_; ++u)
        if (match_l_[u] < 0 && dfs(static_cast<std::int32_t>(u))) ++size;
    return size;
  }

 private:
  bool bfs() {
    std::vector<std::int32_t> queue;
    bool found = false;
    for (std::size_t u = 0; u < n_; ++u) {
      if (match_l_[u] < 0) {
        dist_[u] = 0;
        queue.push_back(static_cast<std::int32_t>(u));
      } else {
        dist_[u] = -1;
      }
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
      std::int32_t u = queue[h];
      for (std::int32_t v : adj_[u]) {
        std::int32_t w = match_r_[v];
        if (w < 0) {
          found = true;
        } else if (dist_[w] < 0) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::int32_t u) {
    for (std::int32_t v : adj_[u]) {
      std::int32_t w = match_r_[v];
      if (w < 0 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_l_[u] = v;
        match_r_[v] = u;
        return true;
      }
    }
    dist_[u] = -1;
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<std::int32_t>> adj_;
  std::vector<std::int32_t> match_l_, match_r_, dist_;
};

double linf(const PersistencePair& a, const PersistencePair& b) {
  return std::max(std::fabs(a.birth_time - b.birth_time), std::fabs(a.death_time - b.death_time));
}

double to_diagonal(const PersistencePair& a) { return (a.death_time - a.birth_time) / 2; }

bool perfect_matching(const std::vector<PersistencePair>& a, const std::vector<PersistencePair>& b,
                      double delta) {
  // Left: a_0..a_{n-1}, then diagonal copies of b. Right: b_0..b_{m-1}, then
  // diagonal copies of a.
  const std::size_t n = a.size(), m = b.size(), total = n + m;
  std::vector<std::vector<std::int32_t>> adj(total);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      if (linf(a[i], b[j]) <= delta) adj[i].push_back(static_cast<std::int32_t>(j));
    if (to_diagonal(a[i]) <= delta) adj[i].push_back(static_cast<std::int32_t>(m + i));
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<std::int32_t>& row = adj[n + j];
    if (to_diagonal(b[j]) <= delta) row.push_back(static_cast<std::int32_t>(j));
    for (std::size_t i = 0; i < n; ++i) row.push_back(static_cast<std::int32_t>(m + i));
  }
  return Matcher(total, std::move(adj)).max_matching() == total;
}

}  // namespace

double bottleneck(const Diagram& da, const Diagram& db) {
  std::vector<PersistencePair> fa, fb;
  std::vector<double> ea, eb;
  for (const auto& p : da.pairs) (p.death_time == kInfinity ? ea.push_back(p.birth_time) : fa.push_back(p));
  for (const auto& p : db.pairs) (p.death_time == kInfinity ? eb.push_back(p.birth_time) : fb.push_back(p));
  if (ea.size() != eb.size()) return kInfinity;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  double essential = 0;
  for (std::size_t i = 0; i < ea.size(); ++i) essential = std::max(essential, std::fabs(ea[i] - eb[i]));

  std::vector<double> candidates{0.0};
  for (const auto& p : fa) candidates.push_back(to_diagonal(p));
  for (const auto& p : fb) candidates.push_back(to_diagonal(p));
  for (const auto& p : fa)
    for (const auto& q : fb) candidates.push_back(linf(p, q));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (perfect_matching(fa, fb, candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return std::max(essential, candidates[lo]);
}

// ---------------------------------------------------------------------------
// Cohomology

CohomologyResult cohomology_reduce(const OrderWithLevel& o) {
  const std::int32_t n = static_cast<std::int32_t>(o.size());
  const SimplicialComplex& c = o.complex();
  // Anti-transposed index: a = n - 1 - rank. Columns are coboundaries.
  auto anti = [n](std::int32_t rank) { return n - 1 - rank; };
  std::vector<std::int32_t> pivot_column(n, -1);  // anti row -> anti column
  std::vector<Column> reduced(n), witness(n);
  std::vector<bool> cleared(n, false);
  std::vector<std::int32_t> death_of_birth(n, -1);  // by rank
  std::vector<bool> is_death(n, false);
  Column scratch;
  const int top = c.dim();
  for (int d = 0; d < top; ++d) {
    for (std::int32_t a = 0; a < n; ++a) {
      std::int32_t r = anti(a);
      SimplexId id = o.at(r);
      if (c.dim(id) != d || cleared[a]) continue;
      Column col;
      for (SimplexId cf : c.cofacets(id)) col.push_back(anti(o.rank(cf)));
      std::sort(col.begin(), col.end());
      Column v{a};
      while (!col.empty() && pivot_column[col.back()] >= 0) {
        std::int32_t other = pivot_column[col.back()];
        add_into(col, reduced[other], scratch);
        add_into(v, witness[other], scratch);
      }
      witness[a] = std::move(v);
      if (col.empty()) continue;
      std::int32_t low = col.back();
      pivot_column[low] = a;
      cleared[low] = true;
      // Cohomology pair (a, low) is the homology pair (birth r, death rank(low)).
      death_of_birth[r] = anti(low);
      is_death[anti(low)] = true;
      reduced[a] = std::move(col);
    }
  }
  CohomologyResult result;
  result.pairs = collect_pairs(o, death_of_birth, is_death);
  result.cocycles.reserve(result.pairs.size());
  for (const PersistencePair& p : result.pairs) {
    std::vector<SimplexId> support;
    std::int32_t a = anti(o.rank(p.birth));
    Column ranks;
    for (std::int32_t w : witness[a]) ranks.push_back(anti(w));
    if (ranks.empty()) ranks.push_back(o.rank(p.birth));  // top dimension: never reduced
    std::sort(ranks.begin(), ranks.end());
    for (std::int32_t r : ranks) support.push_back(o.at(r));
    result.cocycles.push_back(std::move(support));
  }
  return result;
}

}  // namespace stablevol
