#pragma once

#include <json.hpp>

#include "dsolid/divisor.hpp"
#include "dsolid/poly.hpp"

namespace dsolid {

using json = nlohmann::json;

/// Big integers are emitted as JSON numbers when they fit in 64 bits and as
/// decimal strings beyond that; both forms are accepted on input.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json curve_class_to_json(const CurveClass& c);
CurveClass curve_class_from_json(const json& j, const LatticeBasis& basis);

/// Versioned CycleConfig schema. The divisor multiplicities are included as
/// derived, human-readable fields; loading ignores them and recomputes.
json cycle_config_to_json(const CycleConfig& cfg);
CycleConfig cycle_config_from_json(const json& j);

json poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const json& j);

}  // namespace dsolid
