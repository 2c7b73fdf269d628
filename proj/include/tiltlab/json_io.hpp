#pragma once

#include <string>

#include "json.hpp"
#include "tiltlab/indec.hpp"
#include "tiltlab/rep.hpp"
#include "tiltlab/verify.hpp"

namespace tiltlab {

// Quiver schema: {"vertices":[1,2,3,4],"arrows":[[1,2],[2,3],[4,3]]}.
nlohmann::json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

// Representation schema: dims keyed by vertex id, one matrix per arrow as an
// array of rows of "num/den" strings.
nlohmann::json rep_to_json(const Representation& r);
Representation rep_from_json(const nlohmann::json& j);

// Table dump: one record per indecomposable (id, dims, label).
nlohmann::json table_to_json(const IndecTable& table);

nlohmann::json report_to_json(const FlipFlopReport& report);

}  // namespace tiltlab
