#pragma once

#include "tiltlab/rep.hpp"

namespace tiltlab {

class IndecTable;
struct TiltingModule;

// Module-level BGP reflection at a source x: the value at x becomes the
// cokernel of the assembled map M(x) -> sum of M(y_i) over the arrows
// x -> y_i (in stored arrow order); each reversed arrow y_i -> x carries
// the quotient map composed with the block inclusion. Requires M to have no
// S_x summand, i.e. the assembled map to be injective
// (HasSimpleSummandAtX otherwise).
Representation reflect_source(const Representation& m, int x);

// Dual construction at a sink x: kernel of the assembled map
// sum of M(y_l) -> M(x); requires the map to be surjective. Inverse of
// reflect_source up to isomorphism.
Representation reflect_sink(const Representation& m, int x);

// The induced map on tilting modules: applies reflect_source to every
// summand of T and identifies the images in the reflected quiver's table by
// dimension vector. Requires S_x not in T (ContainsSimpleAtX).
TiltingModule rho(const TiltingModule& t, int x, const IndecTable& table_q,
                  const IndecTable& table_q_reflected);

}  // namespace tiltlab
