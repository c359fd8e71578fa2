// Licensed under the Apache License 2.0 (see LICENSE file).

#include "stablevol/stablevol.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "stablevol/alpha.hpp"
#include "stablevol/baselines.hpp"
#include "stablevol/dual_graph.hpp"
#include "stablevol/fixtures.hpp"
#include "stablevol/json_io.hpp"
#include "stablevol/parallel.hpp"
#include "stablevol/volume.hpp"

using namespace stablevol;

struct sv_filtration {
  OrderWithLevel order;
  std::optional<PointCloud> points;
  std::vector<PersistencePair> pairs;
  mutable std::optional<PersistenceTree> tree;

  const PointCloud* cloud() const { return points ? &*points : nullptr; }
  const PersistenceTree& persistence_tree() const {
    if (!tree) tree = compute_tree(build_dual_graph(order), order);
    return *tree;
  }
};

namespace {

thread_local std::string g_last_error;
unsigned g_threads = 0;

unsigned threads() { return g_threads == 0 ? default_thread_count() : g_threads; }

// Runs fn, translating exceptions into status codes.
template <typename Fn>
sv_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return SV_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return SV_PARSE;
  } catch (const DegenerateInputError& e) {
    g_last_error = e.what();
    return SV_DEGENERATE;
  } catch (const AmbiguousPairError& e) {
    g_last_error = e.what();
    return SV_AMBIGUOUS;
  } catch (const StarPairError& e) {
    g_last_error = e.what();
    return SV_STAR_PAIR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SV_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return SV_ERROR;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw ParseError(std::string(what) + " must not be null");
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

PersistencePair select_pair(const std::vector<PersistencePair>& pairs, const OrderWithLevel& o, int degree,
                            const sv_pair_selector* sel) {
  require(sel, "pair selector");
  Diagram d = diagram(pairs, o, degree);
  if (sel->by_index) {
    if (sel->index >= d.pairs.size())
      throw AmbiguousPairError("pair index " + std::to_string(sel->index) + " out of range (diagram has " +
                               std::to_string(d.pairs.size()) + " pairs)");
    return d.pairs[sel->index];
  }
  const double tol = sel->tolerance > 0 ? sel->tolerance : 1e-3;
  std::vector<PersistencePair> hits;
  for (const auto& p : d.pairs) {
    if (std::fabs(p.birth_time - sel->birth) > tol) continue;
    if (sel->death < 0 ? !p.essential() : (p.essential() || std::fabs(p.death_time - sel->death) > tol))
      continue;
    hits.push_back(p);
  }
  if (hits.size() != 1)
    throw AmbiguousPairError(std::to_string(hits.size()) + " pairs match the birth/death window");
  return hits.front();
}

sv_filtration* make_from_points(PointCloud pc, bool squared) {
  auto f = std::make_unique<sv_filtration>();
  AlphaFiltration a = alpha_filtration(pc, squared);
  f->order = std::move(a.order);
  f->points = std::move(pc);
  f->pairs = reduce(f->order);
  return f.release();
}

bool is_top_degree(const sv_filtration* f, int degree) { return degree == f->order.complex().dim() - 1; }

VolumeRecord record_of(const VolumeSolution& s, const char* method) {
  VolumeRecord r;
  r.pair = s.pair;
  r.epsilon = s.epsilon;
  r.cells = s.cells;
  r.boundary = s.boundary;
  r.method = method;
  r.objective = s.objective;
  r.status = s.status;
  return r;
}

}  // namespace

extern "C" {

const char* sv_last_error(void) { return g_last_error.c_str(); }

void sv_string_free(char* s) { std::free(s); }

const char* sv_version(void) { return "1.0.0"; }

void sv_set_threads(unsigned t) { g_threads = t; }

sv_status sv_filtration_from_points(const char* text, int squared, sv_filtration** out) {
  return guarded([&] {
    require(text, "input");
    require(out, "output");
    std::istringstream in(text);
    *out = make_from_points(parse_pointcloud(in), squared != 0);
  });
}

sv_status sv_filtration_from_complex_json(const char* text, sv_filtration** out) {
  return guarded([&] {
    require(text, "input");
    require(out, "output");
    auto f = std::make_unique<sv_filtration>();
    f->order = parse_complex_json(std::string(text));
    f->pairs = reduce(f->order);
    *out = f.release();
  });
}

void sv_filtration_free(sv_filtration* f) { delete f; }

size_t sv_filtration_size(const sv_filtration* f) { return f ? f->order.size() : 0; }

int sv_filtration_dim(const sv_filtration* f) { return f ? f->order.complex().dim() : -1; }

sv_status sv_complex_json(const sv_filtration* f, char** out) {
  return guarded([&] {
    require(f, "filtration");
    *out = copy_string(dump(complex_to_json(f->order)));
  });
}

sv_status sv_diagram_json(const sv_filtration* f, int degree, char** out) {
  return guarded([&] {
    require(f, "filtration");
    *out = copy_string(dump(diagram_to_json(diagram(f->pairs, f->order, degree))));
  });
}

sv_status sv_diagram_tsv(const sv_filtration* f, int degree, char** out) {
  return guarded([&] {
    require(f, "filtration");
    std::string s = "birth\tdeath\n";
    for (const auto& p : diagram(f->pairs, f->order, degree).pairs)
      s += format_number(p.birth_time) + "\t" + (p.essential() ? "inf" : format_number(p.death_time)) + "\n";
    *out = copy_string(s);
  });
}

sv_status sv_volume_json(const sv_filtration* f, int degree, const sv_pair_selector* sel, sv_method method,
                         double epsilon, char** out) {
  return guarded([&] {
    require(f, "filtration");
    if (!(epsilon >= 0)) throw ParseError("epsilon must be non-negative");
    const OrderWithLevel& o = f->order;
    PersistencePair pair = select_pair(f->pairs, o, degree, sel);
    if (pair.essential()) throw StarPairError("selected pair never dies");
    const bool top = is_top_degree(f, degree);
    VolumeRecord rec;
    switch (method) {
      case SV_METHOD_OPTIMAL:
        if (top) {
          rec.pair = pair;
          rec.cells = optimal_volume_tree(f->persistence_tree(), pair);
          rec.boundary = volume_boundary(o.complex(), rec.cells);
          rec.method = "tree-optimal";
        } else {
          rec = record_of(optimal_volume_lp(o, pair), "lp-optimal");
        }
        break;
      case SV_METHOD_STABLE_TREE: {
        StableVolumeResult r = stable_volume_tree(f->persistence_tree(), o, pair, epsilon);
        rec.pair = pair;
        rec.epsilon = epsilon;
        rec.cells = r.cells;
        rec.boundary = r.boundary;
        rec.method = "tree-stable";
        break;
      }
      case SV_METHOD_STABLE_LP:
        rec = record_of(stable_volume_lp(o, pair, epsilon), "lp-stable");
        break;
      case SV_METHOD_SUB: {
        std::vector<SimplexId> ov =
            top ? optimal_volume_tree(f->persistence_tree(), pair) : optimal_volume_lp(o, pair).cells;
        rec = record_of(stable_subvolume_lp(o, pair, epsilon, ov), "lp-sub");
        break;
      }
      default:
        throw ParseError("unknown volume method");
    }
    *out = copy_string(dump(volume_to_json(rec, o.complex(), f->cloud())));
  });
}

sv_status sv_sweep_tsv(const sv_filtration* f, int degree, const sv_pair_selector* sel, double first,
                       double last, double step, char** out) {
  return guarded([&] {
    require(f, "filtration");
    if (!(step > 0) || !(first >= 0) || !(last >= first))
      throw ParseError("epsilon grid needs 0 <= first <= last and step > 0");
    const std::size_t count = static_cast<std::size_t>(std::floor((last - first) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) grid[i] = first + static_cast<double>(i) * step;
    const OrderWithLevel& o = f->order;
    PersistencePair pair = select_pair(f->pairs, o, degree, sel);
    if (pair.essential()) throw StarPairError("selected pair never dies");
    std::vector<std::size_t> sizes(count);
    if (is_top_degree(f, degree)) {
      auto rows = sweep_sizes(f->persistence_tree(), o, pair, grid);
      for (std::size_t i = 0; i < count; ++i) sizes[i] = rows[i].second;
    } else {
      parallel_for(count, threads(), [&](std::size_t i) {
        sizes[i] = stable_volume_lp(o, pair, grid[i]).cells.size();
      });
    }
    std::string s;
    for (std::size_t i = 0; i < count; ++i) s += format_number(grid[i]) + "\t" + std::to_string(sizes[i]) + "\n";
    *out = copy_string(s);
  });
}

sv_status sv_rsc_json(const sv_filtration* f, const sv_pair_selector* sel, double parameter, int euclidean,
                      char** out) {
  return guarded([&] {
    require(f, "filtration");
    const OrderWithLevel& o = f->order;
    PersistencePair pair = select_pair(f->pairs, o, 1, sel);
    if (euclidean && !f->points) throw ParseError("--euclidean needs point cloud input");
    std::int32_t k;
    if (parameter < 0)
      k = pair.essential() ? static_cast<std::int32_t>(o.size()) - 1 : o.rank(pair.death) - 1;
    else
      k = rsc_index_for_level(o, pair, pair.birth_time + parameter);
    CycleLoop loop = reconstructed_shortest_cycle(o, pair, k, euclidean ? f->cloud() : nullptr);
    *out = copy_string(dump(loop_to_json(loop, pair, parameter < 0 ? 0.0 : parameter, o.complex(), f->cloud())));
  });
}

sv_status sv_statistical_json(const char* points_text, int degree, const sv_pair_selector* sel,
                              double half_width, uint64_t seed, size_t trials, char** out) {
  return guarded([&] {
    require(points_text, "input");
    std::istringstream in(points_text);
    PointCloud pc = parse_pointcloud(in);
    AlphaFiltration a = alpha_filtration(pc);
    PersistencePair pair = select_pair(reduce(a.order), a.order, degree, sel);
    if (pair.essential()) throw StarPairError("selected pair never dies");
    if (!(half_width > 0)) throw ParseError("noise half width must be positive");
    if (trials == 0) throw ParseError("trials must be positive");
    FrequencyMap m = statistical_frequencies(pc, degree, pair.birth_time, pair.death_time,
                                             NoiseModel{half_width, seed}, trials, threads());
    *out = copy_string(dump(frequency_to_json(m)));
  });
}

sv_status sv_generate_fixture(const char* name, uint64_t seed, char** out) {
  return guarded([&] {
    require(name, "fixture name");
    try {
      *out = copy_string(format_pointcloud(generate_fixture(name, seed)));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  });
}

}  // extern "C"
