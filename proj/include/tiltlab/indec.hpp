#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltlab/homext.hpp"
#include "tiltlab/rep.hpp"

namespace tiltlab {

// All positive roots of the underlying (possibly disconnected) Dynkin
// diagram, as dimension vectors, sorted lexicographically. Computed by
// reflection closure of the simple roots; throws NotRepFinite when some
// component is not ADE.
std::vector<DimVector> positive_roots(const Quiver& q);

// An indecomposable representation with dimension vector d (a positive
// root; NotARoot otherwise). Realized by walking d down to a simple root
// through an admissible sequence of sink reflections and replaying the walk
// backwards with the module-level reflection functor.
Representation realize(const Quiver& q, const DimVector& d);

struct IndecEntry {
  DimVector dims;
  Representation rep;
  std::string label;  // "ij" interval notation for type A, digit string otherwise
};

// The Krull-Schmidt coordinate system of a representation-finite quiver:
// one representative per positive root plus precomputed Hom/Ext dimension
// tables. Entries are ordered so that hom[i][j] > 0 with i != j implies
// i < j (directedness order), ties broken by lexicographic dimension
// vector; this makes the decomposition solve unitriangular.
class IndecTable {
 public:
  static IndecTable build(const Quiver& q);

  const Quiver& quiver() const { return quiver_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const IndecEntry& entry(int id) const { return entries_[id]; }
  const std::vector<IndecEntry>& entries() const { return entries_; }
  int hom(int i, int j) const { return hom_[i][j]; }
  int ext(int i, int j) const { return ext_[i][j]; }

  std::optional<int> find_by_dims(const DimVector& d) const;
  std::optional<int> find_by_label(const std::string& label) const;
  // Id of the simple module at vertex x.
  int simple_id(int x) const;

 private:
  Quiver quiver_;
  std::vector<IndecEntry> entries_;
  std::vector<std::vector<int>> hom_, ext_;
};

// Multiplicities of M in Krull-Schmidt coordinates, returned as a sorted
// multiset of table ids (repeats = multiplicity). Solves the Hom-counting
// system against the table's unitriangular Hom matrix; throws
// InconsistentDecomposition if the result fails the dimension cross-check.
std::vector<int> decompose(const Representation& m, const IndecTable& table);

// Duplicate-free support of a multiset of ids.
std::vector<int> basic(const std::vector<int>& multiset);

}  // namespace tiltlab
