#pragma once

#include <vector>

#include "tiltlab/linalg.hpp"
#include "tiltlab/quiver.hpp"
#include "tiltlab/rational.hpp"

namespace tiltlab {

// Dimension vector, indexed by vertex position in the ambient quiver's
// vertex list. Always paired with that quiver when vertex ids matter.
using DimVector = std::vector<int>;

// A finite-dimensional representation: one vector space dimension per vertex
// and one exact rational matrix per arrow, acting on column vectors. The
// matrix of an arrow y -> y' has shape dims(y') x dims(y). Immutable after
// construction; the zero representation (all dims 0) is a legal value.
class Representation {
 public:
  // Validates matrix shapes against dims; throws ShapeMismatch.
  static Representation make(Quiver quiver, DimVector dims,
                             std::vector<RatMatrix> maps);
  static Representation zero(const Quiver& q);

  const Quiver& quiver() const { return quiver_; }
  const DimVector& dims() const { return dims_; }
  const std::vector<RatMatrix>& maps() const { return maps_; }

  int dim_at(int vertex_id) const { return dims_[quiver_.vertex_index(vertex_id)]; }
  const RatMatrix& map(int arrow_index) const { return maps_[arrow_index]; }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

 private:
  Quiver quiver_;
  DimVector dims_;
  std::vector<RatMatrix> maps_;
};

// Simple module S_y: one-dimensional at y, zero elsewhere.
Representation simple(const Quiver& q, int y);

// Indecomposable projective P_y (basis: paths starting at y) and injective
// I_y (paths ending at y). Path bases are ordered lexicographically by
// arrow-index sequence so the matrices are reproducible.
Representation projective(const Quiver& q, int y);
Representation injective(const Quiver& q, int y);

// True when the underlying graph is A_n with vertex ids 1..n appearing in
// path order (the labeling convention behind the "ij" interval notation).
bool is_path_labeled_type_a(const Quiver& q);

// Interval module "ij" of a linearly labeled type-A quiver: dims 1 on
// [i, j], identity on every arrow inside the support.
// Throws NotTypeA unless the underlying graph is A_n with vertices 1..n in
// path order, BadInterval unless 1 <= i <= j <= n.
Representation interval(const Quiver& q, int i, int j);

// Block-diagonal direct sum in input order; direct_sum(q, {}) is the zero
// representation.
Representation direct_sum(const Quiver& q, const std::vector<Representation>& parts);

// Restriction to Q minus {x}: implements both j^{-1} (x a source) and
// i^{-1} (x a sink); data at the remaining vertices is copied verbatim.
Representation restrict(const Representation& m, int x);

// Right adjoint j_* at a source x of q: the value at x is the direct sum of
// the values at the arrow targets (in stored arrow order) and the map along
// x -> y_i is the projection onto the i-th block.
Representation extend_source(const Representation& n, const Quiver& q, int x);

// Left adjoint i_! at a sink x of q: the value at x is the direct sum of the
// values at the arrow sources and the map along y_l -> x is the inclusion of
// the l-th block.
Representation extend_sink(const Representation& n, const Quiver& q, int x);

// All paths starting at y (arrow-index sequences, empty path included),
// in lexicographic order. The basis order used by projective().
std::vector<std::vector<int>> paths_from(const Quiver& q, int y);
// The same paths bucketed per vertex index: entry [zi] lists the basis paths
// of P_y at vertex zi, in the order projective() numbers them.
std::vector<std::vector<std::vector<int>>> projective_path_basis(const Quiver& q, int y);
// All paths ending at y, same ordering convention (used by injective()).
std::vector<std::vector<int>> paths_into(const Quiver& q, int y);
// Endpoint of a path starting at y.
int path_target(const Quiver& q, int y, const std::vector<int>& path);

}  // namespace tiltlab
