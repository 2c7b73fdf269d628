#include "tiltlab/tilting.hpp"

#include <algorithm>
#include <string>

#include "tiltlab/rep.hpp"

namespace tiltlab {

namespace {

void check_ids(const IndecTable& table, const TiltingModule& t) {
  for (int id : t.ids) {
    if (id < 0 || id >= table.size()) {
      throw TableMismatch("tilting module id " + std::to_string(id) +
                          " outside the table");
    }
  }
}

std::vector<DimVector> sort_key(const IndecTable& table, const TiltingModule& t) {
  std::vector<DimVector> key;
  for (int id : t.ids) key.push_back(table.entry(id).dims);
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

std::vector<TiltingModule> enumerate_tilting(const IndecTable& table) {
  const int n = table.quiver().num_vertices();
  const int count = table.size();
  std::vector<TiltingModule> found;
  std::vector<int> chosen;

  auto compatible = [&](int i, int j) {
    return table.ext(i, j) == 0 && table.ext(j, i) == 0;
  };
  auto extend = [&](auto&& self, int next) -> void {
    if (static_cast<int>(chosen.size()) == n) {
      found.push_back({chosen});
      return;
    }
    const int missing = n - static_cast<int>(chosen.size());
    for (int i = next; i + missing <= count; ++i) {
      bool ok = true;
      for (int c : chosen) {
        if (!compatible(c, i)) { ok = false; break; }
      }
      if (!ok) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);

  std::sort(found.begin(), found.end(),
            [&](const TiltingModule& a, const TiltingModule& b) {
              return sort_key(table, a) < sort_key(table, b);
            });
  return found;
}

bool leq(const IndecTable& table, const TiltingModule& t, const TiltingModule& u) {
  check_ids(table, t);
  check_ids(table, u);
  for (int i : t.ids) {
    for (int j : u.ids) {
      if (table.ext(i, j) != 0) return false;
    }
  }
  return true;
}

int TiltingPoset::index_of(const TiltingModule& t) const {
  const auto it = std::find(elements.begin(), elements.end(), t);
  if (it == elements.end()) throw TableMismatch("tilting module not in the poset");
  return static_cast<int>(it - elements.begin());
}

TiltingPoset build_poset(const IndecTable& table) {
  TiltingPoset poset;
  poset.elements = enumerate_tilting(table);
  const int n = static_cast<int>(poset.elements.size());
  std::vector<std::vector<bool>> matrix(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      matrix[a][b] = leq(table, poset.elements[a], poset.elements[b]);
    }
  }
  poset.order = Poset::make(std::move(matrix));  // asserts the axioms
  poset.hasse_edges = hasse(poset.order);
  return poset;
}

std::vector<int> with_summand(const TiltingPoset& poset, int summand_id) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(poset.elements.size()); ++i) {
    const auto& ids = poset.elements[i].ids;
    if (std::find(ids.begin(), ids.end(), summand_id) != ids.end()) out.push_back(i);
  }
  return out;
}

namespace {

TiltingModule restrict_and_reduce(const IndecTable& table_q, const TiltingModule& t, int x,
                                  const IndecTable& table_sub) {
  check_ids(table_q, t);
  std::vector<Representation> parts;
  for (int id : t.ids) parts.push_back(table_q.entry(id).rep);
  const Representation whole = direct_sum(table_q.quiver(), parts);
  return {basic(decompose(restrict(whole, x), table_sub))};
}

TiltingModule glue_simple(const IndecTable& table_sub, const TiltingModule& t, int x,
                          const IndecTable& table_q, bool at_source) {
  check_ids(table_sub, t);
  const Quiver& q = table_q.quiver();
  std::vector<int> ids{table_q.simple_id(x)};
  for (int id : t.ids) {
    const Representation& n = table_sub.entry(id).rep;
    const Representation extended =
        at_source ? extend_source(n, q, x) : extend_sink(n, q, x);
    const auto found = table_q.find_by_dims(extended.dims());
    if (!found) throw EngineBug("iota: extended module missing from the table");
    ids.push_back(*found);
  }
  std::sort(ids.begin(), ids.end());
  return {std::move(ids)};
}

}  // namespace

TiltingModule pi_source(const IndecTable& table_q, const TiltingModule& t, int x,
                        const IndecTable& table_sub) {
  if (!table_q.quiver().is_source(x)) {
    throw NotSource("pi_source: " + std::to_string(x) + " is not a source");
  }
  return restrict_and_reduce(table_q, t, x, table_sub);
}

TiltingModule pi_sink(const IndecTable& table_q, const TiltingModule& t, int x,
                      const IndecTable& table_sub) {
  if (!table_q.quiver().is_sink(x)) {
    throw NotSink("pi_sink: " + std::to_string(x) + " is not a sink");
  }
  return restrict_and_reduce(table_q, t, x, table_sub);
}

TiltingModule iota_source(const IndecTable& table_sub, const TiltingModule& t, int x,
                          const IndecTable& table_q) {
  return glue_simple(table_sub, t, x, table_q, /*at_source=*/true);
}

TiltingModule iota_sink(const IndecTable& table_sub, const TiltingModule& t, int x,
                        const IndecTable& table_q) {
  return glue_simple(table_sub, t, x, table_q, /*at_source=*/false);
}

}  // namespace tiltlab
