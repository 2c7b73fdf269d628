#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tiltlab/errors.hpp"

namespace tiltlab {

struct Arrow {
  int from = 0;
  int to = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Finite acyclic quiver with an ordered vertex list. Vertex ids are small
// integers and are preserved by delete_vertex/reflect so that labels stay
// comparable across the derived quivers. Parallel arrows are permitted by
// the data model (classify rejects them).
class Quiver {
 public:
  Quiver() = default;

  // Validates the invariants: distinct vertex ids, declared endpoints, no
  // oriented cycles. Throws BadArrow or CyclicQuiver.
  static Quiver validate(std::vector<int> vertices, std::vector<Arrow> arrows);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  // Vertex ids in a topological order (sources first; ties by vertex id).
  const std::vector<int>& topological_order() const { return topo_; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }

  bool has_vertex(int v) const;
  // Position of v in the vertex list; throws UnknownVertex.
  int vertex_index(int v) const;

  std::set<int> sources() const;
  std::set<int> sinks() const;
  bool is_source(int v) const;
  bool is_sink(int v) const;

  // Arrow indices leaving / entering v, in stored arrow order.
  std::vector<int> arrows_from(int v) const;
  std::vector<int> arrows_into(int v) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<int> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<int> topo_;
};

struct DynkinType {
  enum class Family { A, D, E };
  Family family = Family::A;
  int rank = 1;

  std::string name() const;
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

// Q minus {x} and all incident arrows; remaining ids and order preserved.
Quiver delete_vertex(const Quiver& q, int x);

// BGP reflection: reverses every arrow incident to x. Requires x to be a
// source or a sink (NotSourceOrSink otherwise).
Quiver reflect(const Quiver& q, int x);

// ADE type of the underlying graph when it is a (connected, simply laced)
// Dynkin diagram; nullopt otherwise.
std::optional<DynkinType> classify(const Quiver& q);

// Every connected component is a Dynkin diagram. This is the actual gate for
// Gabriel enumeration: vertex deletion can disconnect a Dynkin quiver, and
// the pieces stay representation-finite.
bool is_rep_finite(const Quiver& q);

// Undirected adjacency (vertex indices), counting each arrow once.
std::vector<std::vector<int>> underlying_adjacency(const Quiver& q);

}  // namespace tiltlab
