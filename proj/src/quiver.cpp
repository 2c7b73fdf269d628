#include "tiltlab/quiver.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

namespace tiltlab {

namespace {

// Kahn's algorithm with a min-id priority queue: deterministic order,
// detects cycles.
std::optional<std::vector<int>> topological_sort(const std::vector<int>& vertices,
                                                 const std::vector<Arrow>& arrows) {
  std::map<int, int> indegree;
  for (int v : vertices) indegree[v] = 0;
  for (const Arrow& a : arrows) ++indegree[a.to];
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (auto& [v, d] : indegree) {
    if (d == 0) ready.push(v);
  }
  std::vector<int> order;
  order.reserve(vertices.size());
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (const Arrow& a : arrows) {
      if (a.from == v && --indegree[a.to] == 0) ready.push(a.to);
    }
  }
  if (order.size() != vertices.size()) return std::nullopt;
  return order;
}

}  // namespace

Quiver Quiver::validate(std::vector<int> vertices, std::vector<Arrow> arrows) {
  std::set<int> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size()) {
    throw BadArrow("duplicate vertex ids");
  }
  for (const Arrow& a : arrows) {
    if (!seen.count(a.from) || !seen.count(a.to)) {
      throw BadArrow("arrow endpoint " + std::to_string(seen.count(a.from) ? a.to : a.from) +
                     " is not a declared vertex");
    }
  }
  auto topo = topological_sort(vertices, arrows);
  if (!topo) throw CyclicQuiver("quiver has an oriented cycle");
  Quiver q;
  q.vertices_ = std::move(vertices);
  q.arrows_ = std::move(arrows);
  q.topo_ = std::move(*topo);
  return q;
}

bool Quiver::has_vertex(int v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

int Quiver::vertex_index(int v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) {
    throw UnknownVertex("unknown vertex " + std::to_string(v));
  }
  return static_cast<int>(it - vertices_.begin());
}

std::set<int> Quiver::sources() const {
  std::set<int> s(vertices_.begin(), vertices_.end());
  for (const Arrow& a : arrows_) s.erase(a.to);
  return s;
}

std::set<int> Quiver::sinks() const {
  std::set<int> s(vertices_.begin(), vertices_.end());
  for (const Arrow& a : arrows_) s.erase(a.from);
  return s;
}

bool Quiver::is_source(int v) const {
  vertex_index(v);
  return std::none_of(arrows_.begin(), arrows_.end(),
                      [v](const Arrow& a) { return a.to == v; });
}

bool Quiver::is_sink(int v) const {
  vertex_index(v);
  return std::none_of(arrows_.begin(), arrows_.end(),
                      [v](const Arrow& a) { return a.from == v; });
}

std::vector<int> Quiver::arrows_from(int v) const {
  std::vector<int> out;
  for (int i = 0; i < num_arrows(); ++i) {
    if (arrows_[i].from == v) out.push_back(i);
  }
  return out;
}

std::vector<int> Quiver::arrows_into(int v) const {
  std::vector<int> out;
  for (int i = 0; i < num_arrows(); ++i) {
    if (arrows_[i].to == v) out.push_back(i);
  }
  return out;
}

std::string DynkinType::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E: return "E" + std::to_string(rank);
  }
  return "?";
}

Quiver delete_vertex(const Quiver& q, int x) {
  q.vertex_index(x);
  std::vector<int> vertices;
  for (int v : q.vertices()) {
    if (v != x) vertices.push_back(v);
  }
  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows()) {
    if (a.from != x && a.to != x) arrows.push_back(a);
  }
  return Quiver::validate(std::move(vertices), std::move(arrows));
}

Quiver reflect(const Quiver& q, int x) {
  if (!q.is_source(x) && !q.is_sink(x)) {
    throw NotSourceOrSink("vertex " + std::to_string(x) + " is neither a source nor a sink");
  }
  std::vector<Arrow> arrows = q.arrows();
  for (Arrow& a : arrows) {
    if (a.from == x || a.to == x) std::swap(a.from, a.to);
  }
  return Quiver::validate(q.vertices(), std::move(arrows));
}

std::vector<std::vector<int>> underlying_adjacency(const Quiver& q) {
  std::vector<std::vector<int>> adj(q.num_vertices());
  for (const Arrow& a : q.arrows()) {
    int u = q.vertex_index(a.from), v = q.vertex_index(a.to);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

namespace {

std::optional<DynkinType> classify_component(const Quiver&,
                                             const std::vector<int>& comp,
                                             const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(comp.size());
  // Simply laced tree: n-1 edges within the component, no repeats, no loops.
  int edges = 0;
  std::set<std::pair<int, int>> seen;
  for (int u : comp) {
    for (int v : adj[u]) {
      if (u == v) return std::nullopt;
      if (u < v) {
        ++edges;
        if (!seen.insert({u, v}).second) return std::nullopt;  // parallel edge
      }
    }
  }
  if (edges != n - 1) return std::nullopt;

  std::vector<int> degree3;
  for (int u : comp) {
    size_t deg = adj[u].size();
    if (deg > 3) return std::nullopt;
    if (deg == 3) degree3.push_back(u);
  }
  if (degree3.empty()) {
    return DynkinType{DynkinType::Family::A, n};
  }
  if (degree3.size() > 1) return std::nullopt;

  // Branch lengths from the unique trivalent vertex, sorted ascending.
  const int center = degree3[0];
  std::vector<int> lengths;
  for (int first : adj[center]) {
    int len = 1, prev = center, cur = first;
    while (adj[cur].size() == 2) {
      int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  if (lengths[0] == 1 && lengths[1] == 1) {
    return DynkinType{DynkinType::Family::D, n};  // n >= 4 forced by degree 3
  }
  if (lengths[0] == 1 && lengths[1] == 2 && lengths[2] >= 2 && lengths[2] <= 4) {
    return DynkinType{DynkinType::Family::E, n};  // branch (1,2,k) with n = 4+k
  }
  return std::nullopt;
}

std::vector<std::vector<int>> components(const Quiver& q,
                                         const std::vector<std::vector<int>>& adj) {
  const int n = q.num_vertices();
  std::vector<int> comp_of(n, -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (comp_of[s] >= 0) continue;
    std::vector<int> comp, stack{s};
    comp_of[s] = static_cast<int>(comps.size());
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : adj[u]) {
        if (comp_of[v] < 0) {
          comp_of[v] = comp_of[s];
          stack.push_back(v);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

std::optional<DynkinType> classify(const Quiver& q) {
  if (q.num_vertices() == 0) return std::nullopt;
  auto adj = underlying_adjacency(q);
  auto comps = components(q, adj);
  if (comps.size() != 1) return std::nullopt;
  return classify_component(q, comps[0], adj);
}

bool is_rep_finite(const Quiver& q) {
  auto adj = underlying_adjacency(q);
  for (const auto& comp : components(q, adj)) {
    if (!classify_component(q, comp, adj)) return false;
  }
  return true;
}

}  // namespace tiltlab
