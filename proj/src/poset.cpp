#include "tiltlab/poset.hpp"

#include <algorithm>
#include <string>

namespace tiltlab {

Poset Poset::make(std::vector<std::vector<bool>> leq) {
  const int n = static_cast<int>(leq.size());
  for (const auto& row : leq) {
    if (static_cast<int>(row.size()) != n) throw NotAPartialOrder("leq matrix not square");
  }
  for (int a = 0; a < n; ++a) {
    if (!leq[a][a]) throw NotAPartialOrder("not reflexive at " + std::to_string(a));
    for (int b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) {
        throw NotAPartialOrder("not antisymmetric at (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
      }
      if (!leq[a][b]) continue;
      for (int c = 0; c < n; ++c) {
        if (leq[b][c] && !leq[a][c]) {
          throw NotAPartialOrder("not transitive at (" + std::to_string(a) + "," +
                                 std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  Poset p;
  p.leq_ = std::move(leq);
  return p;
}

Poset Poset::antichain(int n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  return make(std::move(leq));
}

Poset subposet(const Poset& p, const std::vector<int>& elements) {
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) leq[a][b] = p.leq(elements[a], elements[b]);
  }
  return Poset::make(std::move(leq));
}

MonotoneMap check_monotone(Poset domain, Poset codomain, std::vector<int> map) {
  if (static_cast<int>(map.size()) != domain.size()) {
    throw NotMonotone("map length does not match the domain");
  }
  for (int v : map) {
    if (v < 0 || v >= codomain.size()) throw NotMonotone("map value out of range");
  }
  for (int a = 0; a < domain.size(); ++a) {
    for (int b = 0; b < domain.size(); ++b) {
      if (domain.leq(a, b) && !codomain.leq(map[a], map[b])) {
        throw NotMonotone("not order preserving on the pair (" + std::to_string(a) + "," +
                          std::to_string(b) + ")");
      }
    }
  }
  return {std::move(domain), std::move(codomain), std::move(map)};
}

namespace {

Poset glue(const MonotoneMap& f, bool plus) {
  const int nx = f.domain.size(), ny = f.codomain.size();
  const int n = nx + ny;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < nx; ++a) {
    for (int b = 0; b < nx; ++b) leq[a][b] = f.domain.leq(a, b);
  }
  for (int a = 0; a < ny; ++a) {
    for (int b = 0; b < ny; ++b) leq[nx + a][nx + b] = f.codomain.leq(a, b);
  }
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      if (plus) {
        leq[x][nx + y] = f.codomain.leq(f.map[x], y);
      } else {
        leq[nx + y][x] = f.codomain.leq(y, f.map[x]);
      }
    }
  }
  // Transitivity of the glued relation is a theorem for monotone f; going
  // through the validating factory turns any engine slip into a loud error.
  return Poset::make(std::move(leq));
}

}  // namespace

Poset flip_flop_plus(const MonotoneMap& f) { return glue(f, true); }
Poset flip_flop_minus(const MonotoneMap& f) { return glue(f, false); }

namespace {

struct Signature {
  int below = 0, above = 0, covers_up = 0, covers_down = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const Poset& p) {
  const int n = p.size();
  std::vector<Signature> sig(n);
  const auto cov = hasse(p);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (p.leq(a, b)) {
        ++sig[a].above;
        ++sig[b].below;
      }
    }
  }
  for (const auto& [a, b] : cov) {
    ++sig[a].covers_up;
    ++sig[b].covers_down;
  }
  return sig;
}

bool verify_iso(const Poset& p, const Poset& q, const std::vector<int>& map) {
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      if (p.leq(a, b) != q.leq(map[a], map[b])) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return std::nullopt;
  const int n = p.size();
  const auto sp = signatures(p), sq = signatures(q);

  {
    // Cheap global screen: the signature multisets must agree.
    auto key = [](const Signature& s) {
      return std::tuple(s.below, s.above, s.covers_up, s.covers_down);
    };
    std::vector<std::tuple<int, int, int, int>> kp, kq;
    for (int i = 0; i < n; ++i) {
      kp.push_back(key(sp[i]));
      kq.push_back(key(sq[i]));
    }
    std::sort(kp.begin(), kp.end());
    std::sort(kq.begin(), kq.end());
    if (kp != kq) return std::nullopt;
  }

  std::vector<int> map(n, -1), used(n, 0);
  auto extend = [&](auto&& self, int a) -> bool {
    if (a == n) return true;
    for (int b = 0; b < n; ++b) {
      if (used[b] || !(sp[a] == sq[b])) continue;
      bool ok = true;
      for (int prev = 0; prev < a && ok; ++prev) {
        ok = (p.leq(prev, a) == q.leq(map[prev], b)) &&
             (p.leq(a, prev) == q.leq(b, map[prev]));
      }
      if (!ok) continue;
      map[a] = b;
      used[b] = 1;
      if (self(self, a + 1)) return true;
      used[b] = 0;
      map[a] = -1;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  if (!verify_iso(p, q, map)) throw EngineBug("is_isomorphic: witness failed re-verification");
  return map;
}

bool is_up_closed(const Poset& p, const std::vector<int>& subset) {
  std::vector<bool> in(p.size(), false);
  for (int s : subset) in[s] = true;
  for (int s : subset) {
    for (int b = 0; b < p.size(); ++b) {
      if (p.leq(s, b) && !in[b]) return false;
    }
  }
  return true;
}

bool is_down_closed(const Poset& p, const std::vector<int>& subset) {
  std::vector<bool> in(p.size(), false);
  for (int s : subset) in[s] = true;
  for (int s : subset) {
    for (int b = 0; b < p.size(); ++b) {
      if (p.leq(b, s) && !in[b]) return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> hasse(const Poset& p) {
  std::vector<std::pair<int, int>> covers;
  const int n = p.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !p.leq(a, b)) continue;
      bool covering = true;
      for (int c = 0; c < n && covering; ++c) {
        if (c != a && c != b && p.leq(a, c) && p.leq(c, b)) covering = false;
      }
      if (covering) covers.push_back({a, b});
    }
  }
  return covers;
}

}  // namespace tiltlab
