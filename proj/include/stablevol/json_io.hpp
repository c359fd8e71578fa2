// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef STABLEVOL_JSON_IO_HPP
#define STABLEVOL_JSON_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stablevol/alpha.hpp"
#include "stablevol/baselines.hpp"
#include "stablevol/chain.hpp"
#include "stablevol/persistence.hpp"

namespace stablevol {

using Json = nlohmann::ordered_json;

/// Reads {"vertices": N, "simplices": [{"v": [...], "level": x}, ...]}.
/// Vertices 0..N-1 are always present; a vertex not listed explicitly gets the
/// minimum level of the listed simplices containing it (0 if none). Throws
/// ParseError for malformed input and ComplexError for missing faces.
OrderWithLevel parse_complex_json(std::istream& in);
OrderWithLevel parse_complex_json(const std::string& text);

Json complex_to_json(const OrderWithLevel& o);
Json pair_to_json(const PersistencePair& p);
Json diagram_to_json(const Diagram& d);

struct VolumeRecord {
  PersistencePair pair;
  double epsilon = 0;
  std::vector<SimplexId> cells;
  Chain boundary{Field::Z2, 0};
  std::string method;
  std::optional<double> objective;
  std::optional<std::string> status;
};

/// Volume JSON; "points" lists coordinates of the boundary vertices when a
/// point cloud is available, in ascending vertex order.
Json volume_to_json(const VolumeRecord& v, const SimplicialComplex& c, const PointCloud* points);

Json loop_to_json(const CycleLoop& loop, const PersistencePair& pair, double parameter,
                  const SimplicialComplex& c, const PointCloud* points);

Json frequency_to_json(const FrequencyMap& f);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace stablevol

#endif  // STABLEVOL_JSON_IO_HPP
