#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tiltlab/errors.hpp"

namespace tiltlab {

// Finite partial order as a dense boolean matrix. All instances here are
// tiny, so simplicity beats asymptotics.
class Poset {
 public:
  Poset() = default;
  // Validates reflexivity, antisymmetry and transitivity
  // (NotAPartialOrder otherwise).
  static Poset make(std::vector<std::vector<bool>> leq);
  static Poset antichain(int n);

  int size() const { return static_cast<int>(leq_.size()); }
  bool leq(int a, int b) const { return leq_[a][b]; }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::vector<std::vector<bool>> leq_;
};

// Induced subposet on a list of element indices (in the given order).
Poset subposet(const Poset& p, const std::vector<int>& elements);

struct MonotoneMap {
  Poset domain;
  Poset codomain;
  std::vector<int> map;
};

// Validates that x <= x' implies f(x) <= f(x'); NotMonotone (with a witness
// pair in the message) otherwise.
MonotoneMap check_monotone(Poset domain, Poset codomain, std::vector<int> map);

// The two glued orders on X + Y defined by a monotone f : X -> Y. Elements
// 0..|X|-1 are the X part, |X|..|X|+|Y|-1 the Y part; inside each part the
// original order is kept. In the plus order the only cross relations are
// x <= y iff f(x) <= y; in the minus order, y <= x iff y <= f(x).
Poset flip_flop_plus(const MonotoneMap& f);
Poset flip_flop_minus(const MonotoneMap& f);

// Exact order-isomorphism search (backtracking with degree/ideal-size
// pruning). Returns a witness bijection, re-verified in both directions, or
// nullopt when none exists.
std::optional<std::vector<int>> is_isomorphic(const Poset& p, const Poset& q);

// Upward / downward closure of a subset (the "open" / "closed" subsets).
bool is_up_closed(const Poset& p, const std::vector<int>& subset);
bool is_down_closed(const Poset& p, const std::vector<int>& subset);

// Covering pairs (a, b) with a < b and nothing strictly between:
// the transitive reduction.
std::vector<std::pair<int, int>> hasse(const Poset& p);

}  // namespace tiltlab
