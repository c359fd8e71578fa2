// Licensed under the Apache License 2.0 (see LICENSE file).

#include "stablevol/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace stablevol {

OrderWithLevel parse_complex_json(const std::string& text) {
  std::istringstream in(text);
  return parse_complex_json(in);
}

OrderWithLevel parse_complex_json(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("simplices"))
    throw ParseError("complex JSON needs \"vertices\" and \"simplices\"");
  if (!j["vertices"].is_number_integer() || j["vertices"].get<long long>() < 0)
    throw ParseError("\"vertices\" must be a non-negative integer");
  const auto nv = j["vertices"].get<long long>();
  if (nv > std::numeric_limits<VertexId>::max()) throw ParseError("too many vertices");
  if (!j["simplices"].is_array()) throw ParseError("\"simplices\" must be an array");

  std::map<Simplex, double> listed;
  for (const auto& s : j["simplices"]) {
    if (!s.is_object() || !s.contains("v") || !s["v"].is_array() || !s.contains("level") ||
        !s["level"].is_number())
      throw ParseError("each simplex needs \"v\" (array) and \"level\" (number)");
    std::vector<VertexId> verts;
    for (const auto& v : s["v"]) {
      if (!v.is_number_integer()) throw ParseError("vertex ids must be integers");
      const auto id = v.get<long long>();
      if (id < 0 || id >= nv) throw ParseError("vertex id " + std::to_string(id) + " out of range");
      verts.push_back(static_cast<VertexId>(id));
    }
    const double level = s["level"].get<double>();
    if (!std::isfinite(level)) throw ParseError("levels must be finite");
    Simplex simplex;
    try {
      simplex = Simplex(std::move(verts));
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
    if (!listed.emplace(simplex, level).second) throw ParseError("duplicate simplex in input");
  }
  std::vector<double> vertex_level(static_cast<std::size_t>(nv), std::numeric_limits<double>::infinity());
  for (const auto& [s, level] : listed)
    for (VertexId v : s.vertices()) vertex_level[v] = std::min(vertex_level[v], level);
  for (VertexId v = 0; v < nv; ++v) {
    Simplex s{v};
    if (!listed.count(s)) listed.emplace(s, std::isfinite(vertex_level[v]) ? vertex_level[v] : 0.0);
  }
  std::vector<Simplex> simplices;
  simplices.reserve(listed.size());
  for (const auto& [s, level] : listed) simplices.push_back(s);
  // Same id convention as delaunay(): by dimension, then vertex list.
  std::stable_sort(simplices.begin(), simplices.end(),
                   [](const Simplex& a, const Simplex& b) { return a.dim() < b.dim(); });
  auto c = std::make_shared<const SimplicialComplex>(simplices);
  ValidationReport report = validate_complex(*c);
  if (!report.ok)
    throw ComplexError("complex is not closed under faces: " + std::to_string(report.violations.size()) +
                       " missing faces");
  std::vector<double> level(c->size());
  for (const auto& [s, lv] : listed) level[c->find(s)] = lv;
  return build_order(c, std::move(level));
}

Json complex_to_json(const OrderWithLevel& o) {
  const SimplicialComplex& c = o.complex();
  Json j;
  j["vertices"] = c.vertex_count();
  Json arr = Json::array();
  for (SimplexId id : o.sequence()) {
    Json s;
    s["v"] = std::vector<VertexId>(c.simplex(id).vertices().begin(), c.simplex(id).vertices().end());
    s["level"] = o.level(id);
    arr.push_back(std::move(s));
  }
  j["simplices"] = std::move(arr);
  return j;
}

Json pair_to_json(const PersistencePair& p) {
  Json j;
  j["degree"] = p.degree;
  j["birth"] = p.birth_time;
  j["death"] = p.essential() ? Json(nullptr) : Json(p.death_time);
  j["birth_simplex"] = p.birth;
  j["death_simplex"] = p.essential() ? Json(nullptr) : Json(p.death);
  return j;
}

Json diagram_to_json(const Diagram& d) {
  Json j;
  j["degree"] = d.degree;
  Json arr = Json::array();
  for (const auto& p : d.pairs) {
    Json q = pair_to_json(p);
    q.erase("degree");
    arr.push_back(std::move(q));
  }
  j["pairs"] = std::move(arr);
  return j;
}

namespace {

Json boundary_points(const std::vector<VertexId>& verts, const PointCloud* points) {
  Json pts = Json::array();
  if (points == nullptr) return pts;
  for (VertexId v : verts) {
    const Point& x = points->points.at(v);
    Json row = Json::array({x[0], x[1]});
    if (points->dim == 3) row.push_back(x[2]);
    pts.push_back(std::move(row));
  }
  return pts;
}

}  // namespace

Json volume_to_json(const VolumeRecord& v, const SimplicialComplex& c, const PointCloud* points) {
  Json j;
  j["pair"] = pair_to_json(v.pair);
  j["epsilon"] = v.epsilon;
  if (!v.method.empty()) j["method"] = v.method;
  j["cells"] = v.cells;
  std::vector<SimplexId> bd = v.boundary.support();
  j["boundary"] = bd;
  std::vector<VertexId> verts;
  for (SimplexId s : bd)
    for (VertexId x : c.simplex(s).vertices()) verts.push_back(x);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  j["boundary_vertices"] = verts;
  j["points"] = boundary_points(verts, points);
  if (v.objective) j["objective"] = *v.objective;
  if (v.status) j["status"] = *v.status;
  return j;
}

Json loop_to_json(const CycleLoop& loop, const PersistencePair& pair, double parameter,
                  const SimplicialComplex& c, const PointCloud* points) {
  (void)c;
  Json j;
  j["pair"] = pair_to_json(pair);
  j["epsilon"] = parameter;
  j["method"] = "rsc";
  j["cells"] = Json::array();
  std::vector<SimplexId> edges = loop.edges;
  std::sort(edges.begin(), edges.end());
  j["boundary"] = edges;
  j["boundary_vertices"] = loop.vertices;
  j["points"] = boundary_points(loop.vertices, points);
  j["objective"] = loop.weight;
  j["status"] = loop.found ? "optimal" : "disconnected";
  return j;
}

Json frequency_to_json(const FrequencyMap& f) {
  Json j;
  j["trials"] = f.trials;
  j["matched"] = f.matched;
  j["failed"] = f.failed;
  j["status"] = f.status;
  Json arr = Json::array();
  for (std::size_t i = 0; i < f.frequency.size(); ++i) arr.push_back(Json{{"point", i}, {"f", f.frequency[i]}});
  j["frequencies"] = std::move(arr);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace stablevol
