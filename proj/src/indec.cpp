#include "tiltlab/indec.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "tiltlab/bgp.hpp"

namespace tiltlab {

namespace {

bool is_simple_root(const DimVector& d) {
  int ones = 0;
  for (int v : d) {
    if (v == 1) ++ones;
    else if (v != 0) return false;
  }
  return ones == 1;
}

// Simple reflection s_y on dimension vectors of a simply laced diagram.
DimVector simple_reflection(const std::vector<std::vector<int>>& adj, const DimVector& d, int yi) {
  DimVector r = d;
  int neighbor_sum = 0;
  for (int zi : adj[yi]) neighbor_sum += d[zi];
  r[yi] = neighbor_sum - d[yi];
  return r;
}

}  // namespace

std::vector<DimVector> positive_roots(const Quiver& q) {
  if (!is_rep_finite(q)) {
    throw NotRepFinite("positive_roots: quiver is not representation-finite");
  }
  const int n = q.num_vertices();
  const auto adj = underlying_adjacency(q);

  std::set<DimVector> roots;
  std::vector<DimVector> frontier;
  for (int vi = 0; vi < n; ++vi) {
    DimVector d(n, 0);
    d[vi] = 1;
    roots.insert(d);
    frontier.push_back(std::move(d));
  }
  while (!frontier.empty()) {
    std::vector<DimVector> next;
    for (const DimVector& d : frontier) {
      for (int yi = 0; yi < n; ++yi) {
        DimVector r = simple_reflection(adj, d, yi);
        if (std::any_of(r.begin(), r.end(), [](int v) { return v < 0; })) continue;
        if (roots.insert(r).second) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }
  return {roots.begin(), roots.end()};  // set order = lexicographic
}

Representation realize(const Quiver& q, const DimVector& d) {
  const auto roots = positive_roots(q);
  if (!std::binary_search(roots.begin(), roots.end(), d)) {
    throw NotARoot("realize: dimension vector is not a positive root");
  }
  const int n = q.num_vertices();
  const auto adj = underlying_adjacency(q);

  // Admissible sink sequence: the reverse of a topological order of Q is a
  // sequence of sinks of the successively reflected quivers, and one full
  // pass returns the quiver to Q. Walking d through it must hit a simple
  // root (Coxeter argument), well before the safety cap.
  std::vector<int> order(q.topological_order().rbegin(), q.topological_order().rend());
  DimVector current = d;
  std::vector<int> steps;
  const int cap = 64 * n * static_cast<int>(roots.size() + 1);
  int iter = 0;
  while (!is_simple_root(current)) {
    if (++iter > cap) throw EngineBug("realize: reflection walk did not terminate");
    const int y = order[(iter - 1) % n];
    current = simple_reflection(adj, current, q.vertex_index(y));
    if (std::any_of(current.begin(), current.end(), [](int v) { return v < 0; })) {
      throw EngineBug("realize: walk left the positive cone");
    }
    steps.push_back(y);
  }

  // The walk ends on some quiver in the reflection orbit; rebuild it.
  Quiver walked = q;
  for (int y : steps) walked = reflect(walked, y);
  int simple_vertex = 0;
  for (int vi = 0; vi < n; ++vi) {
    if (current[vi] == 1) simple_vertex = q.vertices()[vi];
  }

  Representation m = simple(walked, simple_vertex);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    m = reflect_source(m, *it);
  }
  if (!(m.dims() == d)) throw EngineBug("realize: replay produced wrong dimension vector");
  return m;
}

namespace {

std::string make_label(const Quiver& q, const DimVector& d, bool type_a_labels) {
  if (type_a_labels) {
    int lo = -1, hi = -1;
    for (int vi = 0; vi < q.num_vertices(); ++vi) {
      if (d[vi] == 0) continue;
      const int v = q.vertices()[vi];
      if (lo < 0 || v < lo) lo = v;
      if (v > hi) hi = v;
    }
    return std::to_string(lo) + std::to_string(hi);
  }
  std::string s;
  for (int v : d) s += std::to_string(v);
  return s;
}

}  // namespace

IndecTable IndecTable::build(const Quiver& q) {
  const auto roots = positive_roots(q);
  const int count = static_cast<int>(roots.size());

  std::vector<Representation> reps;
  reps.reserve(roots.size());
  for (const DimVector& d : roots) reps.push_back(realize(q, d));

  std::vector<std::vector<int>> hom(count, std::vector<int>(count, 0));
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) hom[i][j] = hom_dim(reps[i], reps[j]);
  }

  // Directedness order: topological sort of the Hom-existence digraph,
  // ties broken by lexicographic dimension vector.
  std::vector<int> indegree(count, 0);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if (i != j && hom[i][j] > 0) ++indegree[j];
    }
  }
  std::vector<int> order;
  std::vector<bool> placed(count, false);
  for (int step = 0; step < count; ++step) {
    int pick = -1;
    for (int i = 0; i < count; ++i) {
      if (placed[i] || indegree[i] != 0) continue;
      if (pick < 0 || roots[i] < roots[pick]) pick = i;
    }
    if (pick < 0) throw DirectednessViolation("Hom-existence digraph has a cycle");
    placed[pick] = true;
    order.push_back(pick);
    for (int j = 0; j < count; ++j) {
      if (j != pick && !placed[j] && hom[pick][j] > 0) --indegree[j];
    }
  }

  IndecTable table;
  table.quiver_ = q;
  const bool type_a = is_path_labeled_type_a(q);
  table.hom_.assign(count, std::vector<int>(count, 0));
  table.ext_.assign(count, std::vector<int>(count, 0));
  for (int i = 0; i < count; ++i) {
    const int oi = order[i];
    table.entries_.push_back({roots[oi], reps[oi], make_label(q, roots[oi], type_a)});
  }
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      table.hom_[i][j] = hom[order[i]][order[j]];
      const long e = table.hom_[i][j] - euler_form(q, roots[order[i]], roots[order[j]]);
      if (e < 0) throw NegativeExt("IndecTable: negative Ext dimension");
      table.ext_[i][j] = static_cast<int>(e);
    }
  }
  for (int i = 0; i < count; ++i) {
    if (table.hom_[i][i] != 1) throw EngineBug("IndecTable: entry is not a brick");
    if (table.ext_[i][i] != 0) throw EngineBug("IndecTable: entry is not rigid");
  }
  return table;
}

std::optional<int> IndecTable::find_by_dims(const DimVector& d) const {
  for (int i = 0; i < size(); ++i) {
    if (entries_[i].dims == d) return i;
  }
  return std::nullopt;
}

std::optional<int> IndecTable::find_by_label(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (entries_[i].label == label) return i;
  }
  return std::nullopt;
}

int IndecTable::simple_id(int x) const {
  DimVector d(quiver_.num_vertices(), 0);
  d[quiver_.vertex_index(x)] = 1;
  const auto id = find_by_dims(d);
  if (!id) throw EngineBug("IndecTable: missing simple module");
  return *id;
}

std::vector<int> decompose(const Representation& m, const IndecTable& table) {
  if (!(m.quiver() == table.quiver())) {
    throw QuiverMismatch("decompose: representation over a different quiver");
  }
  const int count = table.size();
  std::vector<long> h(count), mult(count, 0);
  for (int j = 0; j < count; ++j) h[j] = hom_dim(table.entry(j).rep, m);

  // hom[j][i] vanishes for i < j (directedness) and is 1 on the diagonal:
  // back-substitute from the last entry.
  for (int j = count - 1; j >= 0; --j) {
    long value = h[j];
    for (int i = j + 1; i < count; ++i) value -= static_cast<long>(table.hom(j, i)) * mult[i];
    if (value < 0) throw InconsistentDecomposition("negative multiplicity");
    mult[j] = value;
  }

  DimVector total(m.quiver().num_vertices(), 0);
  std::vector<int> result;
  for (int i = 0; i < count; ++i) {
    for (long c = 0; c < mult[i]; ++c) result.push_back(i);
    for (int vi = 0; vi < m.quiver().num_vertices(); ++vi) {
      total[vi] += static_cast<int>(mult[i]) * table.entry(i).dims[vi];
    }
  }
  if (!(total == m.dims())) {
    throw InconsistentDecomposition("multiplicities do not add up to the dimension vector");
  }
  return result;
}

std::vector<int> basic(const std::vector<int>& multiset) {
  std::vector<int> out = multiset;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace tiltlab
