#pragma once

#include <vector>

#include "tiltlab/rep.hpp"

namespace tiltlab {

// A morphism of representations, one matrix per vertex index
// (component at y has shape dims_N(y) x dims_M(y)).
using Morphism = std::vector<RatMatrix>;

// The stacked intertwiner operator whose kernel is Hom(M, N): unknowns are
// the per-vertex components, one equation block N(a) phi_y - phi_{y'} M(a)
// per arrow a : y -> y'.
RatMatrix intertwiner_operator(const Representation& m, const Representation& n);

// dim Hom(M, N) over the common quiver; QuiverMismatch otherwise.
int hom_dim(const Representation& m, const Representation& n);

// Explicit basis of Hom(M, N), in kernel_basis order.
std::vector<Morphism> hom_basis(const Representation& m, const Representation& n);

// Euler (Tits) bilinear form of the quiver:
// <d, e> = sum_y d_y e_y - sum_{a : y -> y'} d_y e_{y'}.
long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

// dim Ext^1(M, N) via the hereditary shortcut
// dim Ext^1 = dim Hom - <dim M, dim N>. The path algebra of an acyclic
// quiver has global dimension <= 1, so Ext^1 is the only higher Ext.
// Throws NegativeExt if the shortcut goes negative (engine bug).
int ext_dim(const Representation& m, const Representation& n);

// Independent route: build the standard projective presentation
// 0 -> P1 -> P0 -> M -> 0 explicitly and compute
// Ext^1(M, N) = coker(Hom(P0, N) -> Hom(P1, N)).
int ext_dim_resolution(const Representation& m, const Representation& n);

// The presentation itself (exposed for tests): P1, P0 and the per-vertex
// matrices of the morphism P1 -> P0.
struct ProjectivePresentation {
  Representation p1;
  Representation p0;
  Morphism delta;
};
ProjectivePresentation projective_presentation(const Representation& m);

}  // namespace tiltlab
