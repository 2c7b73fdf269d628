#pragma once

#include <vector>

#include "tiltlab/indec.hpp"
#include "tiltlab/poset.hpp"

namespace tiltlab {

// A basic tilting module, stored as the sorted set of its summand ids in an
// IndecTable. Invariants: exactly |vertices| ids, and ext[i][j] = 0 for all
// pairs in the set.
struct TiltingModule {
  std::vector<int> ids;
  friend bool operator==(const TiltingModule&, const TiltingModule&) = default;
  friend auto operator<=>(const TiltingModule&, const TiltingModule&) = default;
};

// All basic tilting modules of the table's quiver, canonically sorted
// (lexicographically by the sorted list of summand dimension vectors).
// Backtracking over the directedness order with Ext-compatibility pruning;
// for a hereditary algebra a rigid module with n distinct indecomposable
// summands is tilting, so no generation check is needed.
std::vector<TiltingModule> enumerate_tilting(const IndecTable& table);

// T <= T' in the tilting order: Ext^1(T, T') = 0 summand by summand.
bool leq(const IndecTable& table, const TiltingModule& t, const TiltingModule& u);

// The tilting poset: elements in canonical order, the order matrix (checked
// for the partial-order axioms) and its Hasse diagram.
struct TiltingPoset {
  std::vector<TiltingModule> elements;
  Poset order;
  std::vector<std::pair<int, int>> hasse_edges;

  int index_of(const TiltingModule& t) const;
};
TiltingPoset build_poset(const IndecTable& table);

// Indices of the elements containing a given summand id (the simple at the
// reflection vertex, in every use below).
std::vector<int> with_summand(const TiltingPoset& poset, int summand_id);

// pi_x : T -> basic(restriction of T), a tilting module of Q minus {x}.
// The same restriction underlies both versions; they differ only in which
// end of the reflection they sit at (source vs sink) and the precondition.
TiltingModule pi_source(const IndecTable& table_q, const TiltingModule& t, int x,
                        const IndecTable& table_sub);
TiltingModule pi_sink(const IndecTable& table_q, const TiltingModule& t, int x,
                      const IndecTable& table_sub);

// iota_x : T -> S_x + (extension of T), a tilting module of Q containing
// S_x; the source version extends along j_*, the sink version along i_!.
TiltingModule iota_source(const IndecTable& table_sub, const TiltingModule& t, int x,
                          const IndecTable& table_q);
TiltingModule iota_sink(const IndecTable& table_sub, const TiltingModule& t, int x,
                        const IndecTable& table_q);

}  // namespace tiltlab
