#pragma once

// JSON (de)serialization: integer matrices and vectors as arrays of decimal
// strings (exact), fans, cones, and graded presentations.

#include "coxk3/cones.hpp"
#include "coxk3/graded.hpp"
#include "coxk3/toric.hpp"

#include <json.hpp>

namespace coxk3::io {

using json = nlohmann::json;

json to_json(const Int& x);
Int int_from_json(const json& j);

json to_json(const IVec& v);
IVec vec_from_json(const json& j);

json to_json(const IMat& m);
IMat mat_from_json(const json& j);

json to_json(const cones::Cone& c);

json to_json(const toric::Fan& f);
toric::Fan fan_from_json(const json& j);

json to_json(const graded::GradedPresentation& p);
graded::GradedPresentation presentation_from_json(const json& j);

/// "1 0 -1; 0 1 4" -> 2x3 matrix (rows separated by ';').
IMat parse_matrix_text(const std::string& text);

/// "2,2" -> vector.
IVec parse_vector_text(const std::string& text);

}  // namespace coxk3::io
