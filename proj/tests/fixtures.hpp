#pragma once

#include <random>
#include <vector>

#include "tiltlab/quiver.hpp"
#include "tiltlab/rational.hpp"

namespace tiltlab::testing {

// The running A4 pair: Q = (1->2, 2->3, 4->3), its reflection at the
// source 4 is the linear quiver Q' = (1->2->3->4).
inline Quiver a4_q() {
  return Quiver::validate({1, 2, 3, 4}, {{1, 2}, {2, 3}, {4, 3}});
}

inline Quiver a4_q_reflected() {
  return Quiver::validate({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}});
}

inline Quiver linear_a(int n) {
  std::vector<int> vertices;
  std::vector<Arrow> arrows;
  for (int v = 1; v <= n; ++v) vertices.push_back(v);
  for (int v = 1; v < n; ++v) arrows.push_back({v, v + 1});
  return Quiver::validate(std::move(vertices), std::move(arrows));
}

// D4 star with central vertex 2.
inline Quiver d4_star() {
  return Quiver::validate({1, 2, 3, 4}, {{2, 1}, {2, 3}, {2, 4}});
}

inline RatMatrix random_rat_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = rat(num(rng), den(rng));
  }
  return m;
}

}  // namespace tiltlab::testing
