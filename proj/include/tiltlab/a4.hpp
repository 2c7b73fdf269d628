#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tiltlab/quiver.hpp"

namespace tiltlab {

// Transcribed reference data for the A4 example: both tilting posets with
// their marked nodes and Hasse edges, the restriction-map values, and the
// indecomposable correspondence under reflection at the source.
struct A4Fixture {
  struct Node {
    std::string at;  // grid position in the source diagram
    std::vector<std::string> summands;
    bool bold = false;
    std::vector<std::string> pi;
  };
  struct Diagram {
    std::vector<Node> nodes;
    std::vector<std::pair<std::string, std::string>> edges;  // by grid position
  };

  Quiver quiver;
  Quiver reflected;
  int source = 0;
  std::vector<std::pair<std::string, std::string>> indec_reflection;
  std::string rejected_at_source;
  Diagram top;
  Diagram bottom;
};

// The copy of data/a4_fixture.json baked into the library at build time.
const std::string& embedded_a4_fixture_json();

A4Fixture parse_a4_fixture(const nlohmann::json& j);

// Each check recomputes the corresponding engine output and returns one
// human-readable line per mismatch (empty = exact match).
std::vector<std::string> check_a4_poset(const A4Fixture& fixture, bool reflected_side);
std::vector<std::string> check_a4_pi_maps(const A4Fixture& fixture, bool reflected_side);
std::vector<std::string> check_a4_indec_reflection(const A4Fixture& fixture);

// All of the above, both sides.
std::vector<std::string> run_a4_check(const A4Fixture& fixture);

}  // namespace tiltlab
