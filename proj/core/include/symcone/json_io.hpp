#pragma once

#include <nlohmann/json.hpp>

#include "symcone/morphisms.hpp"
#include "symcone/projections.hpp"
#include "symcone/spectral.hpp"

namespace symcone {

using Json = nlohmann::json;

// Element encoding:
//   {"algebra":{"kind":"sym","n":3},  "data":[[..],[..],[..]]}
//   {"algebra":{"kind":"vector","n":k},"data":[..]}
//   {"algebra":{"kind":"spin","dim":d},"data":{"h":[..],"t":s}}
//   {"algebra":{"kind":"sum","parts":[descriptors]},"data":[component data, ...]}
// Malformed input raises InvalidInput.

Json to_json(const Algebra& algebra);
Algebra algebra_from_json(const Json& j);

Json to_json(const Element& a);
Element element_from_json(const Json& j);

Json to_json(const JordanIsoRep& iso);
JordanIsoRep iso_from_json(const Json& j);

/// {"metric":"T"|"H","b":element,"p":element|null,"epsilon":1|-1|null,"iso":{...}}
Json to_json(const IsometryDescriptor& d);
IsometryDescriptor descriptor_from_json(const Json& j);

Json to_json(const ProjectionChain& chain);
Json to_json(const OrthoReport& report);
Json to_json(const SpectralFrame& frame);

std::string metric_name(Metric metric);
/// Accepts "T", "thompson", "H", "hilbert" (case-insensitive).
Metric metric_from_string(const std::string& s);

}  // namespace symcone
