#include "tiltlab/homext.hpp"

#include <map>
#include <numeric>
#include <utility>

#include "tiltlab/linalg.hpp"

namespace tiltlab {

namespace {

std::vector<int> component_offsets(const Representation& m, const Representation& n) {
  const int nv = m.quiver().num_vertices();
  std::vector<int> off(nv + 1, 0);
  for (int vi = 0; vi < nv; ++vi) {
    off[vi + 1] = off[vi] + m.dims()[vi] * n.dims()[vi];
  }
  return off;
}

}  // namespace

RatMatrix intertwiner_operator(const Representation& m, const Representation& n) {
  if (!(m.quiver() == n.quiver())) throw QuiverMismatch("hom: different quivers");
  const Quiver& q = m.quiver();
  const auto off = component_offsets(m, n);
  const int unknowns = off.back();

  int rows = 0;
  for (const Arrow& a : q.arrows()) {
    rows += m.dim_at(a.from) * n.dim_at(a.to);
  }
  RatMatrix op = RatMatrix::Zero(rows, unknowns);

  int row0 = 0;
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& a = q.arrows()[ai];
    const int yi = q.vertex_index(a.from), wi = q.vertex_index(a.to);
    const RatMatrix& ma = m.map(ai);
    const RatMatrix& na = n.map(ai);
    const int my = m.dims()[yi], ny = n.dims()[yi];
    const int nw = n.dims()[wi];
    // Equation (r, c) for r < nw, c < my:
    //   sum_k N(a)[r,k] phi_y[k,c] - sum_k phi_w[r,k] M(a)[k,c] = 0
    // Unknown phi_v[i,j] sits at off[v] + j * n_v + i (column-major).
    for (int r = 0; r < nw; ++r) {
      for (int c = 0; c < my; ++c) {
        const int row = row0 + c * nw + r;
        for (int k = 0; k < ny; ++k) {
          op(row, off[yi] + c * ny + k) += na(r, k);
        }
        for (int k = 0; k < m.dims()[wi]; ++k) {
          op(row, off[wi] + k * nw + r) -= ma(k, c);
        }
      }
    }
    row0 += my * nw;
  }
  return op;
}

int hom_dim(const Representation& m, const Representation& n) {
  const RatMatrix op = intertwiner_operator(m, n);
  return static_cast<int>(op.cols() - rank<Rat>(op));
}

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n) {
  const RatMatrix op = intertwiner_operator(m, n);
  const RatMatrix k = kernel_basis<Rat>(op);
  const auto off = component_offsets(m, n);
  const Quiver& q = m.quiver();

  std::vector<Morphism> basis;
  for (Eigen::Index col = 0; col < k.cols(); ++col) {
    Morphism phi;
    for (int vi = 0; vi < q.num_vertices(); ++vi) {
      const int rows = n.dims()[vi], cols = m.dims()[vi];
      RatMatrix comp(rows, cols);
      for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) {
          comp(i, j) = k(off[vi] + j * rows + i, col);
        }
      }
      phi.push_back(std::move(comp));
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  if (d.size() != static_cast<size_t>(q.num_vertices()) ||
      e.size() != static_cast<size_t>(q.num_vertices())) {
    throw ShapeMismatch("euler_form: dimension vector length");
  }
  long value = 0;
  for (int vi = 0; vi < q.num_vertices(); ++vi) {
    value += static_cast<long>(d[vi]) * e[vi];
  }
  for (const Arrow& a : q.arrows()) {
    value -= static_cast<long>(d[q.vertex_index(a.from)]) * e[q.vertex_index(a.to)];
  }
  return value;
}

int ext_dim(const Representation& m, const Representation& n) {
  const long h = hom_dim(m, n);
  const long e = h - euler_form(m.quiver(), m.dims(), n.dims());
  if (e < 0) throw NegativeExt("ext_dim came out negative");
  return static_cast<int>(e);
}

ProjectivePresentation projective_presentation(const Representation& m) {
  const Quiver& q = m.quiver();
  const int nv = q.num_vertices();

  // P0 = sum over vertices y of dims_M(y) copies of P_y,
  // P1 = sum over arrows a : y -> y' of dims_M(y) copies of P_{y'}.
  std::vector<Representation> projs(nv);
  std::vector<std::vector<std::vector<std::vector<int>>>> bases(nv);
  std::vector<std::map<std::vector<int>, int>> path_pos(nv);
  for (int vi = 0; vi < nv; ++vi) {
    projs[vi] = projective(q, q.vertices()[vi]);
    bases[vi] = projective_path_basis(q, q.vertices()[vi]);
  }

  std::vector<Representation> p0_parts, p1_parts;
  std::vector<std::vector<int>> p0_index(nv);  // (vertex, copy) -> P0 summand
  std::vector<std::pair<int, int>> p1_source;  // P1 summand -> (arrow, copy)
  for (int vi = 0; vi < nv; ++vi) {
    for (int c = 0; c < m.dims()[vi]; ++c) {
      p0_index[vi].push_back(static_cast<int>(p0_parts.size()));
      p0_parts.push_back(projs[vi]);
    }
  }
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& a = q.arrows()[ai];
    const int yi = q.vertex_index(a.from), wi = q.vertex_index(a.to);
    for (int c = 0; c < m.dims()[yi]; ++c) {
      p1_parts.push_back(projs[wi]);
      p1_source.push_back({ai, c});
    }
  }
  Representation p0 = direct_sum(q, p0_parts);
  Representation p1 = direct_sum(q, p1_parts);

  // Row offsets of each summand inside the direct sums, per vertex.
  auto offsets = [nv](const std::vector<Representation>& parts) {
    std::vector<std::vector<int>> off(parts.size(), std::vector<int>(nv, 0));
    std::vector<int> acc(nv, 0);
    for (size_t s = 0; s < parts.size(); ++s) {
      off[s] = acc;
      for (int vi = 0; vi < nv; ++vi) acc[vi] += parts[s].dims()[vi];
    }
    return off;
  };
  const auto off0 = offsets(p0_parts);
  const auto off1 = offsets(p1_parts);

  // Index of each path inside its projective's bucket.
  auto locate = [&](int proj_vi, int zi, const std::vector<int>& path) {
    const auto& bucket = bases[proj_vi][zi];
    for (size_t k = 0; k < bucket.size(); ++k) {
      if (bucket[k] == path) return static_cast<int>(k);
    }
    throw EngineBug("projective_presentation: path missing from basis");
  };

  // delta(p' (x) e_i) = (a then p') (x) e_i - p' (x) M(a) e_i
  // for the P1 summand of arrow a : y -> y', copy i.
  Morphism delta;
  for (int zi = 0; zi < nv; ++zi) {
    RatMatrix d = RatMatrix::Zero(p0.dims()[zi], p1.dims()[zi]);
    for (size_t s = 0; s < p1_parts.size(); ++s) {
      const auto [ai, copy] = p1_source[s];
      const Arrow& a = q.arrows()[ai];
      const int yi = q.vertex_index(a.from), wi = q.vertex_index(a.to);
      const auto& bucket = bases[wi][zi];  // paths of P_{y'} at z
      const RatMatrix& ma = m.map(ai);
      for (size_t pk = 0; pk < bucket.size(); ++pk) {
        const int col = off1[s][zi] + static_cast<int>(pk);
        // Component into (y, copy): prepend the arrow to the path.
        std::vector<int> extended;
        extended.push_back(ai);
        extended.insert(extended.end(), bucket[pk].begin(), bucket[pk].end());
        d(off0[p0_index[yi][copy]][zi] + locate(yi, zi, extended), col) += 1;
        // Components into (y', j): minus the matrix entries of M(a).
        for (int j = 0; j < m.dims()[wi]; ++j) {
          if (ma(j, copy) == 0) continue;
          d(off0[p0_index[wi][j]][zi] + static_cast<int>(pk), col) -= ma(j, copy);
        }
      }
    }
    delta.push_back(std::move(d));
  }
  return {std::move(p1), std::move(p0), std::move(delta)};
}

namespace {

RatVector flatten(const Morphism& phi) {
  int total = 0;
  for (const RatMatrix& c : phi) total += static_cast<int>(c.size());
  RatVector v(total);
  int at = 0;
  for (const RatMatrix& c : phi) {
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      for (Eigen::Index i = 0; i < c.rows(); ++i) v(at++) = c(i, j);
    }
  }
  return v;
}

}  // namespace

int ext_dim_resolution(const Representation& m, const Representation& n) {
  if (!(m.quiver() == n.quiver())) throw QuiverMismatch("ext: different quivers");
  const auto pres = projective_presentation(m);
  const auto b0 = hom_basis(pres.p0, n);
  const auto b1 = hom_basis(pres.p1, n);
  if (b1.empty()) return 0;
  if (b0.empty()) return static_cast<int>(b1.size());

  RatMatrix basis1(flatten(b1[0]).rows(), static_cast<Eigen::Index>(b1.size()));
  for (size_t k = 0; k < b1.size(); ++k) basis1.col(static_cast<Eigen::Index>(k)) = flatten(b1[k]);

  // Matrix of precomposition with delta, in the two kernel bases.
  RatMatrix images(basis1.rows(), static_cast<Eigen::Index>(b0.size()));
  for (size_t k = 0; k < b0.size(); ++k) {
    Morphism composed;
    for (size_t vi = 0; vi < b0[k].size(); ++vi) {
      composed.push_back(b0[k][vi] * pres.delta[vi]);
    }
    images.col(static_cast<Eigen::Index>(k)) = flatten(composed);
  }
  const RatMatrix coords = coordinates_in_basis<Rat>(basis1, images);
  return static_cast<int>(b1.size()) - static_cast<int>(rank<Rat>(coords));
}

}  // namespace tiltlab
