#include "tiltlab/rep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace tiltlab {

Representation Representation::make(Quiver quiver, DimVector dims,
                                    std::vector<RatMatrix> maps) {
  if (dims.size() != static_cast<size_t>(quiver.num_vertices())) {
    throw ShapeMismatch("representation: dims length != vertex count");
  }
  for (int d : dims) {
    if (d < 0) throw ShapeMismatch("representation: negative dimension");
  }
  if (maps.size() != static_cast<size_t>(quiver.num_arrows())) {
    throw ShapeMismatch("representation: one matrix per arrow required");
  }
  for (int a = 0; a < quiver.num_arrows(); ++a) {
    const Arrow& ar = quiver.arrows()[a];
    const int rows = dims[quiver.vertex_index(ar.to)];
    const int cols = dims[quiver.vertex_index(ar.from)];
    if (maps[a].rows() != rows || maps[a].cols() != cols) {
      throw ShapeMismatch("representation: arrow " + std::to_string(a) +
                          " matrix has wrong shape");
    }
  }
  Representation r;
  r.quiver_ = std::move(quiver);
  r.dims_ = std::move(dims);
  r.maps_ = std::move(maps);
  return r;
}

Representation Representation::zero(const Quiver& q) {
  DimVector dims(q.num_vertices(), 0);
  std::vector<RatMatrix> maps(q.num_arrows(), RatMatrix::Zero(0, 0));
  return make(q, std::move(dims), std::move(maps));
}

int Representation::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), 0);
}

Representation simple(const Quiver& q, int y) {
  DimVector dims(q.num_vertices(), 0);
  dims[q.vertex_index(y)] = 1;
  std::vector<RatMatrix> maps;
  maps.reserve(q.num_arrows());
  for (const Arrow& a : q.arrows()) {
    maps.push_back(RatMatrix::Zero(dims[q.vertex_index(a.to)],
                                   dims[q.vertex_index(a.from)]));
  }
  return Representation::make(q, std::move(dims), std::move(maps));
}

std::vector<std::vector<int>> paths_from(const Quiver& q, int y) {
  q.vertex_index(y);
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  // DFS taking arrows in ascending index order = lexicographic output.
  auto walk = [&](auto&& self, int at) -> void {
    out.push_back(current);
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (q.arrows()[a].from != at) continue;
      current.push_back(a);
      self(self, q.arrows()[a].to);
      current.pop_back();
    }
  };
  walk(walk, y);
  return out;
}

std::vector<std::vector<int>> paths_into(const Quiver& q, int y) {
  q.vertex_index(y);
  std::vector<std::vector<int>> out;
  std::vector<int> current;  // built back to front
  auto walk = [&](auto&& self, int at) -> void {
    out.push_back(std::vector<int>(current.rbegin(), current.rend()));
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (q.arrows()[a].to != at) continue;
      current.push_back(a);
      self(self, q.arrows()[a].from);
      current.pop_back();
    }
  };
  walk(walk, y);
  std::sort(out.begin(), out.end());
  return out;
}

int path_target(const Quiver& q, int y, const std::vector<int>& path) {
  int at = y;
  for (int a : path) {
    if (q.arrows()[a].from != at) throw EngineBug("path_target: broken path");
    at = q.arrows()[a].to;
  }
  return at;
}

namespace {

// Bucket a path list by endpoint index, preserving order, and index each
// bucket by path for O(log) lookups.
struct PathBuckets {
  std::vector<std::vector<std::vector<int>>> by_vertex;  // vertex index -> paths
  std::vector<std::map<std::vector<int>, int>> position;

  PathBuckets(const Quiver& q, const std::vector<std::vector<int>>& paths,
              bool from_start, int y)
      : by_vertex(q.num_vertices()), position(q.num_vertices()) {
    for (const auto& p : paths) {
      int end = from_start ? path_target(q, y, p)
                           : (p.empty() ? y : q.arrows()[p.front()].from);
      int zi = q.vertex_index(end);
      position[zi][p] = static_cast<int>(by_vertex[zi].size());
      by_vertex[zi].push_back(p);
    }
  }
};

}  // namespace

std::vector<std::vector<std::vector<int>>> projective_path_basis(const Quiver& q, int y) {
  return PathBuckets(q, paths_from(q, y), /*from_start=*/true, y).by_vertex;
}

Representation projective(const Quiver& q, int y) {
  PathBuckets b(q, paths_from(q, y), /*from_start=*/true, y);
  DimVector dims(q.num_vertices());
  for (int zi = 0; zi < q.num_vertices(); ++zi) {
    dims[zi] = static_cast<int>(b.by_vertex[zi].size());
  }
  std::vector<RatMatrix> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows()[a];
    int zi = q.vertex_index(ar.from), wi = q.vertex_index(ar.to);
    RatMatrix m = RatMatrix::Zero(dims[wi], dims[zi]);
    for (int c = 0; c < dims[zi]; ++c) {
      std::vector<int> extended = b.by_vertex[zi][c];
      extended.push_back(a);
      m(b.position[wi].at(extended), c) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Representation::make(q, std::move(dims), std::move(maps));
}

Representation injective(const Quiver& q, int y) {
  PathBuckets b(q, paths_into(q, y), /*from_start=*/false, y);
  DimVector dims(q.num_vertices());
  for (int zi = 0; zi < q.num_vertices(); ++zi) {
    dims[zi] = static_cast<int>(b.by_vertex[zi].size());
  }
  std::vector<RatMatrix> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows()[a];
    int zi = q.vertex_index(ar.from), wi = q.vertex_index(ar.to);
    RatMatrix m = RatMatrix::Zero(dims[wi], dims[zi]);
    // A path z' ~> y pulls back along the arrow z -> z' to the path that
    // starts with it; the matrix is the transpose of that precomposition.
    for (int r = 0; r < dims[wi]; ++r) {
      std::vector<int> pulled;
      pulled.push_back(a);
      pulled.insert(pulled.end(), b.by_vertex[wi][r].begin(), b.by_vertex[wi][r].end());
      auto it = b.position[zi].find(pulled);
      if (it != b.position[zi].end()) m(r, it->second) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Representation::make(q, std::move(dims), std::move(maps));
}

bool is_path_labeled_type_a(const Quiver& q) {
  const int n = q.num_vertices();
  if (n == 0) return false;
  std::vector<int> sorted = q.vertices();
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[i] != i + 1) return false;
  }
  if (q.num_arrows() != n - 1) return false;
  std::set<std::pair<int, int>> edges;
  for (const Arrow& a : q.arrows()) {
    edges.insert({std::min(a.from, a.to), std::max(a.from, a.to)});
  }
  for (int i = 1; i < n; ++i) {
    if (!edges.count({i, i + 1})) return false;
  }
  return true;
}

Representation interval(const Quiver& q, int i, int j) {
  if (!is_path_labeled_type_a(q)) {
    throw NotTypeA("interval modules need an A_n quiver labeled 1..n along the path");
  }
  if (i < 1 || j > q.num_vertices() || i > j) {
    throw BadInterval("bad interval [" + std::to_string(i) + "," + std::to_string(j) + "]");
  }
  DimVector dims(q.num_vertices(), 0);
  for (int v = i; v <= j; ++v) dims[q.vertex_index(v)] = 1;
  std::vector<RatMatrix> maps;
  for (const Arrow& a : q.arrows()) {
    int r = dims[q.vertex_index(a.to)], c = dims[q.vertex_index(a.from)];
    RatMatrix m = RatMatrix::Zero(r, c);
    if (r == 1 && c == 1) m(0, 0) = 1;
    maps.push_back(std::move(m));
  }
  return Representation::make(q, std::move(dims), std::move(maps));
}

Representation direct_sum(const Quiver& q, const std::vector<Representation>& parts) {
  for (const Representation& p : parts) {
    if (!(p.quiver() == q)) throw QuiverMismatch("direct_sum: parts over different quivers");
  }
  DimVector dims(q.num_vertices(), 0);
  for (const Representation& p : parts) {
    for (int i = 0; i < q.num_vertices(); ++i) dims[i] += p.dims()[i];
  }
  std::vector<RatMatrix> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows()[a];
    int wi = q.vertex_index(ar.to), zi = q.vertex_index(ar.from);
    RatMatrix m = RatMatrix::Zero(dims[wi], dims[zi]);
    int row = 0, col = 0;
    for (const Representation& p : parts) {
      const RatMatrix& block = p.map(a);
      m.block(row, col, block.rows(), block.cols()) = block;
      row += static_cast<int>(block.rows());
      col += static_cast<int>(block.cols());
    }
    maps.push_back(std::move(m));
  }
  return Representation::make(q, std::move(dims), std::move(maps));
}

Representation restrict(const Representation& m, int x) {
  const Quiver& q = m.quiver();
  Quiver sub = delete_vertex(q, x);
  DimVector dims(sub.num_vertices());
  for (int i = 0; i < sub.num_vertices(); ++i) {
    dims[i] = m.dims()[q.vertex_index(sub.vertices()[i])];
  }
  // Arrow order is preserved by deletion: walk the original list and keep
  // the survivors.
  std::vector<RatMatrix> maps;
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& a = q.arrows()[ai];
    if (a.from == x || a.to == x) continue;
    maps.push_back(m.map(ai));
  }
  return Representation::make(std::move(sub), std::move(dims), std::move(maps));
}

Representation extend_source(const Representation& n, const Quiver& q, int x) {
  if (!q.is_source(x)) throw NotSource("vertex " + std::to_string(x) + " is not a source");
  Quiver sub = delete_vertex(q, x);
  if (!(n.quiver() == sub)) throw QuiverMismatch("extend_source: representation not over Q minus {x}");

  DimVector dims(q.num_vertices(), 0);
  for (int i = 0; i < sub.num_vertices(); ++i) {
    dims[q.vertex_index(sub.vertices()[i])] = n.dims()[i];
  }
  const std::vector<int> out = q.arrows_from(x);
  int total = 0;
  std::vector<int> offsets;
  for (int a : out) {
    offsets.push_back(total);
    total += n.dim_at(q.arrows()[a].to);
  }
  dims[q.vertex_index(x)] = total;

  std::vector<RatMatrix> maps(q.num_arrows());
  int sub_arrow = 0;
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& a = q.arrows()[ai];
    if (a.from == x) continue;
    maps[ai] = n.map(sub_arrow++);
  }
  for (size_t k = 0; k < out.size(); ++k) {
    const int target_dim = n.dim_at(q.arrows()[out[k]].to);
    RatMatrix proj = RatMatrix::Zero(target_dim, total);
    for (int r = 0; r < target_dim; ++r) proj(r, offsets[k] + r) = 1;
    maps[out[k]] = std::move(proj);
  }
  return Representation::make(q, std::move(dims), std::move(maps));
}

Representation extend_sink(const Representation& n, const Quiver& q, int x) {
  if (!q.is_sink(x)) throw NotSink("vertex " + std::to_string(x) + " is not a sink");
  Quiver sub = delete_vertex(q, x);
  if (!(n.quiver() == sub)) throw QuiverMismatch("extend_sink: representation not over Q minus {x}");

  DimVector dims(q.num_vertices(), 0);
  for (int i = 0; i < sub.num_vertices(); ++i) {
    dims[q.vertex_index(sub.vertices()[i])] = n.dims()[i];
  }
  const std::vector<int> in = q.arrows_into(x);
  int total = 0;
  std::vector<int> offsets;
  for (int a : in) {
    offsets.push_back(total);
    total += n.dim_at(q.arrows()[a].from);
  }
  dims[q.vertex_index(x)] = total;

  std::vector<RatMatrix> maps(q.num_arrows());
  int sub_arrow = 0;
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& a = q.arrows()[ai];
    if (a.to == x) continue;
    maps[ai] = n.map(sub_arrow++);
  }
  for (size_t k = 0; k < in.size(); ++k) {
    const int source_dim = n.dim_at(q.arrows()[in[k]].from);
    RatMatrix incl = RatMatrix::Zero(total, source_dim);
    for (int r = 0; r < source_dim; ++r) incl(offsets[k] + r, r) = 1;
    maps[in[k]] = std::move(incl);
  }
  return Representation::make(q, std::move(dims), std::move(maps));
}

}  // namespace tiltlab
