#include "tiltlab/bgp.hpp"

#include <algorithm>
#include <string>

#include "tiltlab/indec.hpp"
#include "tiltlab/linalg.hpp"
#include "tiltlab/tilting.hpp"

namespace tiltlab {

Representation reflect_source(const Representation& m, int x) {
  const Quiver& q = m.quiver();
  if (!q.is_source(x)) throw NotSource("reflect_source: " + std::to_string(x) + " is not a source");
  const Quiver qr = reflect(q, x);
  const std::vector<int> out = q.arrows_from(x);

  // Assemble M(x) -> sum of M(y_i), blocks stacked in arrow order.
  int total = 0;
  std::vector<int> offsets;
  for (int a : out) {
    offsets.push_back(total);
    total += m.dim_at(q.arrows()[a].to);
  }
  const int dx = m.dim_at(x);
  RatMatrix assembled = RatMatrix::Zero(total, dx);
  for (size_t k = 0; k < out.size(); ++k) {
    assembled.block(offsets[k], 0, m.map(out[k]).rows(), dx) = m.map(out[k]);
  }
  if (rank<Rat>(assembled) < dx) {
    throw HasSimpleSummandAtX("reflect_source: representation has S_" + std::to_string(x) +
                              " as direct summand");
  }
  const RatMatrix quotient = cokernel_projection<Rat>(assembled);

  DimVector dims = m.dims();
  dims[q.vertex_index(x)] = static_cast<int>(quotient.rows());
  std::vector<RatMatrix> maps(qr.num_arrows());
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& a = q.arrows()[ai];
    if (a.from != x) {
      maps[ai] = m.map(ai);  // reflect preserves arrow order
      continue;
    }
    // Reversed arrow y_i -> x: quotient map composed with block inclusion.
    const size_t k = static_cast<size_t>(std::find(out.begin(), out.end(), ai) - out.begin());
    maps[ai] = quotient.middleCols(offsets[k], m.dim_at(a.to));
  }
  return Representation::make(qr, std::move(dims), std::move(maps));
}

Representation reflect_sink(const Representation& m, int x) {
  const Quiver& q = m.quiver();
  if (!q.is_sink(x)) throw NotSink("reflect_sink: " + std::to_string(x) + " is not a sink");
  const Quiver qr = reflect(q, x);
  const std::vector<int> in = q.arrows_into(x);

  // Assemble sum of M(y_l) -> M(x), blocks side by side in arrow order.
  int total = 0;
  std::vector<int> offsets;
  for (int a : in) {
    offsets.push_back(total);
    total += m.dim_at(q.arrows()[a].from);
  }
  const int dx = m.dim_at(x);
  RatMatrix assembled = RatMatrix::Zero(dx, total);
  for (size_t k = 0; k < in.size(); ++k) {
    assembled.block(0, offsets[k], dx, m.map(in[k]).cols()) = m.map(in[k]);
  }
  if (rank<Rat>(assembled) < dx) {
    throw HasSimpleSummandAtX("reflect_sink: representation has S_" + std::to_string(x) +
                              " as direct summand");
  }
  const RatMatrix kernel = kernel_basis<Rat>(assembled);

  DimVector dims = m.dims();
  dims[q.vertex_index(x)] = static_cast<int>(kernel.cols());
  std::vector<RatMatrix> maps(qr.num_arrows());
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& a = q.arrows()[ai];
    if (a.to != x) {
      maps[ai] = m.map(ai);
      continue;
    }
    // Reversed arrow x -> y_l: kernel inclusion followed by block projection.
    const size_t k = static_cast<size_t>(std::find(in.begin(), in.end(), ai) - in.begin());
    maps[ai] = kernel.middleRows(offsets[k], m.dim_at(a.from));
  }
  return Representation::make(qr, std::move(dims), std::move(maps));
}

TiltingModule rho(const TiltingModule& t, int x, const IndecTable& table_q,
                  const IndecTable& table_q_reflected) {
  const int sx = table_q.simple_id(x);
  if (std::find(t.ids.begin(), t.ids.end(), sx) != t.ids.end()) {
    throw ContainsSimpleAtX("rho: tilting module contains the simple at " + std::to_string(x));
  }
  std::vector<int> ids;
  for (int id : t.ids) {
    const Representation image = reflect_source(table_q.entry(id).rep, x);
    const auto target = table_q_reflected.find_by_dims(image.dims());
    if (!target) throw EngineBug("rho: image dimension vector missing from reflected table");
    ids.push_back(*target);
  }
  std::sort(ids.begin(), ids.end());
  return TiltingModule{std::move(ids)};
}

}  // namespace tiltlab
