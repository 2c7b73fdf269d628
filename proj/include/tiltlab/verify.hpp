#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltlab/quiver.hpp"
#include "tiltlab/tilting.hpp"

namespace tiltlab {

// Outcome of the flip-flop verification for one (quiver, source) instance.
// The six checks, in order:
//   ffsource  - T_Q is isomorphic to (X + Y, plus order) with X the tilting
//               modules without S_x, Y those with it, f = iota pi;
//   ffsink    - dually, T_Q' is isomorphic to (X' + Y', minus order);
//   rho_iso   - the reflection-induced map X -> X' is an order isomorphism;
//   iota_iso  - iota and iota' are order isomorphisms from T_{Q minus x}
//               onto Y and Y';
//   commute   - pi = pi' after rho on X;
//   theorem   - a single (X, T_{Q minus x}, f) produces both posets: the
//               plus order gives T_Q, the minus order gives T_Q'.
struct FlipFlopReport {
  Quiver quiver;
  Quiver reflected;
  int source = 0;

  int size_tq = 0;        // |T_Q|
  int size_tq_prime = 0;  // |T_Q'|
  int size_y = 0;         // |T_Q^x|
  int size_y_prime = 0;   // |T_Q'^x|
  int size_sub = 0;       // |T_{Q minus x}|

  bool ffsource = false;
  bool ffsink = false;
  bool rho_iso = false;
  bool iota_iso = false;
  bool commute = false;
  bool theorem = false;

  // Witness bijections (element indices) for the isomorphism claims.
  std::vector<int> witness_ffsource;
  std::vector<int> witness_ffsink;
  std::vector<int> witness_rho;
  std::vector<int> witness_theorem_plus;
  std::vector<int> witness_theorem_minus;

  // Whatever the exact search says about T_Q vs T_Q' themselves; the
  // flip-flop does not make them isomorphic in general.
  bool posets_isomorphic = false;
  std::vector<int> witness_posets;

  double elapsed_ms = 0.0;
  std::string failure;  // first failed check, empty when all pass

  bool all_pass() const {
    return ffsource && ffsink && rho_iso && iota_iso && commute && theorem;
  }
};

// Runs the whole pipeline for a representation-finite quiver and a source x:
// builds both tilting posets, the deleted-vertex poset, the four maps, the
// reflection, and checks the six statements. Throws NotSource / NotRepFinite
// on bad input, never on a failed check.
FlipFlopReport verify_flipflop(const Quiver& q, int x);

// Every (orientation, source) pair of the given Dynkin diagram, verified.
// Desk-scale guard: A_n up to n = 5, D_4 (GuardExceeded beyond). Instances
// run in parallel subject to TILTLAB_THREADS.
std::vector<FlipFlopReport> sweep(const DynkinType& type);

// The orientations enumerated by sweep, exposed for the CLI and tests.
std::vector<Quiver> dynkin_orientations(const DynkinType& type);

}  // namespace tiltlab
