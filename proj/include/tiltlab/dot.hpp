#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tiltlab {

struct DotNode {
  std::string label;
  bool bold = false;
  friend bool operator==(const DotNode&, const DotNode&) = default;
};

// Deterministic DOT for a Hasse diagram: nodes t0, t1, ... with the given
// labels (bold nodes carry style=bold), one edge per covering pair oriented
// from the smaller to the larger element. An optional comment (the source
// quiver, in CLI use) goes on the first line.
std::string hasse_dot(const std::vector<DotNode>& nodes,
                      const std::vector<std::pair<int, int>>& edges,
                      const std::string& comment = "");

// Inverse of hasse_dot, for round-trip checks and downstream tooling.
struct DotGraph {
  std::vector<DotNode> nodes;
  std::vector<std::pair<int, int>> edges;
};
DotGraph parse_hasse_dot(const std::string& text);

}  // namespace tiltlab
