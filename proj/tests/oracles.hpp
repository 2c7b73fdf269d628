#pragma once

// Test-only oracles, independent of the production paths they check.

#include <vector>

#include "tiltlab/indec.hpp"
#include "tiltlab/quiver.hpp"
#include "tiltlab/tilting.hpp"

namespace tiltlab::testing {

// Positive roots by brute-force scan of the Tits form q(d) = 1 over the box
// 0 <= d_i <= bound (bound 6 covers every ADE diagram that fits the guard).
inline std::vector<DimVector> tits_scan_roots(const Quiver& q, int bound = 6) {
  const int n = q.num_vertices();
  std::vector<DimVector> roots;
  DimVector d(n, 0);
  auto tits = [&](const DimVector& v) {
    long value = 0;
    for (int i = 0; i < n; ++i) value += static_cast<long>(v[i]) * v[i];
    for (const Arrow& a : q.arrows()) {
      value -= static_cast<long>(v[q.vertex_index(a.from)]) * v[q.vertex_index(a.to)];
    }
    return value;
  };
  auto scan = [&](auto&& self, int at) -> void {
    if (at == n) {
      if (tits(d) == 1) roots.push_back(d);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      d[at] = v;
      self(self, at + 1);
    }
    d[at] = 0;
  };
  scan(scan, 0);
  return roots;  // generated in lexicographic order
}

// Tilting enumeration by scanning every n-element subset of the table.
inline std::vector<TiltingModule> brute_force_tilting(const IndecTable& table) {
  const int n = table.quiver().num_vertices();
  const int count = table.size();
  std::vector<TiltingModule> found;
  std::vector<int> subset;
  auto scan = [&](auto&& self, int next) -> void {
    if (static_cast<int>(subset.size()) == n) {
      for (int i : subset) {
        for (int j : subset) {
          if (table.ext(i, j) != 0) return;
        }
      }
      found.push_back({subset});
      return;
    }
    for (int i = next; i < count; ++i) {
      subset.push_back(i);
      self(self, i + 1);
      subset.pop_back();
    }
  };
  scan(scan, 0);
  return found;
}

// All 2^(edges) orientations of a Dynkin diagram given as an edge list.
inline std::vector<Quiver> orientations(const std::vector<int>& vertices,
                                        const std::vector<std::pair<int, int>>& edges) {
  std::vector<Quiver> out;
  const size_t m = edges.size();
  for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
    std::vector<Arrow> arrows;
    for (size_t e = 0; e < m; ++e) {
      if (mask & (size_t{1} << e)) {
        arrows.push_back({edges[e].second, edges[e].first});
      } else {
        arrows.push_back({edges[e].first, edges[e].second});
      }
    }
    out.push_back(Quiver::validate(vertices, std::move(arrows)));
  }
  return out;
}

inline std::vector<std::pair<int, int>> path_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return edges;
}

}  // namespace tiltlab::testing
