#pragma once

#include <string>

#include <json.hpp>

#include "toric/fan.hpp"
#include "toric/morphism.hpp"

namespace toric {

// All CLI input and output uses nlohmann JSON with insertion-ordered keys so
// that serialization is byte-identical across runs.
using Json = nlohmann::ordered_json;

// Scalar and array conversions.  Integers on the wire are plain JSON numbers;
// values that do not fit in 64 bits are rejected rather than silently rounded.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j, const std::string& what);

Json intvec_to_json(const IntVec& v);
IntVec intvec_from_json(const Json& j, const std::string& what);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, const std::string& what);

// Fan wire format: {"n": int, "rays": [[int,...],...], "max_cones": [[int,...],...]}
Json fan_to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

// Morphism wire format: {"source": fan, "target": fan, "matrix": [[int,...],...]}
// where the matrix has target.n rows and source.n columns.
Json morphism_to_json(const ToricMorphism& phi);
ToricMorphism morphism_from_json(const Json& j);

// Parses text as JSON, rethrowing parse failures as InvalidInputError so the
// CLI reports them uniformly.
Json parse_json(const std::string& text, const std::string& what);

}  // namespace toric
