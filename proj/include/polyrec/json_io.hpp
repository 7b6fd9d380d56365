#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "polyrec/polytope.hpp"
#include "polyrec/schurgt.hpp"

namespace polyrec {

using Json = nlohmann::ordered_json;

// {"dim": n, "vertices": [[...], ...]}; coordinates are integers or "p/q"
// strings, never floats.
Polytope polytope_from_json(const Json& j);
Polytope load_polytope(const std::string& path);

struct ShapeInput {
    SkewShape shape;
    std::optional<Partition> kappa;
    std::optional<Partition> nu;
};

// {"lambda": [...], "mu": [...], "n": k} with optional "kappa"/"nu".
ShapeInput shape_from_json(const Json& j);
ShapeInput load_shape(const std::string& path);

Json ratvec_to_json(const RatVec& v);
Json expo_to_json(const Expo& e);
std::string expo_key(const Expo& e);  // "a,b,c" map key for vertex-indexed maps

}  // namespace polyrec
