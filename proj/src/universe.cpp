#include "setj/universe.hpp"

#include <algorithm>

namespace setj {

std::size_t FiniteUniverse::v_size(unsigned k) {
  // |V_0| = 0, then |V_{k+1}| = 2^|V_k|.
  static const std::size_t sizes[] = {0, 1, 2, 4, 16, 65536};
  if (k > 5) throw UniverseError("universe rank cap too large: V_" + std::to_string(k) +
                                 " is not materializable");
  return sizes[k];
}

FiniteUniverse FiniteUniverse::build(unsigned rank_cap, std::vector<unsigned> layer_ranks,
                                     std::vector<SetCode> j) {
  FiniteUniverse u;
  u.rank_cap_ = rank_cap;
  u.size_ = v_size(rank_cap);
  u.rank_.resize(u.size_, 0);
  for (SetCode e = 1; e < u.size_; ++e) {
    unsigned r = 0;
    for (SetCode m = 0; m < 64 && (e >> m) != 0; ++m)
      if ((e >> m) & 1u) r = std::max(r, static_cast<unsigned>(u.rank_[m]) + 1);
    u.rank_[e] = static_cast<std::uint8_t>(r);
  }

  if (!layer_ranks.empty()) {
    for (std::size_t i = 0; i + 1 < layer_ranks.size(); ++i)
      if (layer_ranks[i] >= layer_ranks[i + 1])
        throw UniverseError("layer ranks must be strictly increasing");
    if (layer_ranks.back() > rank_cap)
      throw UniverseError("layer rank exceeds universe rank cap");
    u.layer_ranks_ = std::move(layer_ranks);
  }

  if (!j.empty()) {
    if (j.size() != u.size_) throw UniverseError("j interpretation is not total");
    for (SetCode v : j)
      if (v >= u.size_) throw UniverseError("j maps outside the universe");
    if (!u.layer_ranks_.empty()) {
      for (SetCode e = 0; e < u.size_; ++e) {
        for (std::size_t m = 0; m < u.layer_ranks_.size(); ++m) {
          if (u.rank_[e] < u.layer_ranks_[m]) {
            std::size_t target = std::min(m + 1, u.layer_ranks_.size() - 1);
            if (u.rank_[j[e]] >= u.layer_ranks_[target])
              throw UniverseError("j does not map layer W_" + std::to_string(m) +
                                  " into W_" + std::to_string(m + 1));
            break;
          }
        }
      }
    }
    u.j_ = std::move(j);
  }

  // Von Neumann naturals: 0 = empty set, n+1 = n u {n}.
  SetCode n = 0;
  while (u.contains(n)) {
    u.naturals_.push_back(n);
    if (n >= 63) break;
    SetCode next = n | (SetCode{1} << n);
    if (next == n || !u.contains(next)) break;
    n = next;
  }
  return u;
}

unsigned FiniteUniverse::rank(SetCode e) const {
  if (!contains(e)) throw UniverseError("element outside universe");
  return rank_[e];
}

std::vector<SetCode> FiniteUniverse::members(SetCode e) const {
  std::vector<SetCode> out;
  for (SetCode m = 0; m < 64 && (e >> m) != 0; ++m)
    if ((e >> m) & 1u) out.push_back(m);
  return out;
}

unsigned FiniteUniverse::degree(SetCode e) const {
  if (layer_ranks_.empty()) throw UniverseError("degree requires layers");
  unsigned r = rank(e);
  for (std::size_t m = 0; m < layer_ranks_.size(); ++m)
    if (r < layer_ranks_[m]) return static_cast<unsigned>(m);
  throw UniverseError("degree undefined: element outside every layer");
}

SetCode FiniteUniverse::layer_rep(std::size_t m) const {
  if (m >= layer_ranks_.size()) throw UniverseError("no such layer");
  std::size_t count = v_size(layer_ranks_[m]);
  if (count >= 63) throw UniverseError("layer representative does not fit in code space");
  SetCode rep = (SetCode{1} << count) - 1;
  if (!contains(rep)) throw UniverseError("layer representative outside universe");
  return rep;
}

bool FiniteUniverse::is_natural(SetCode e) const {
  return std::binary_search(naturals_.begin(), naturals_.end(), e);
}

SetCode code_singleton(SetCode a) { return SetCode{1} << a; }

SetCode code_unordered_pair(SetCode a, SetCode b) {
  return (SetCode{1} << a) | (SetCode{1} << b);
}

SetCode code_kuratowski_pair(SetCode a, SetCode b) {
  return code_unordered_pair(code_singleton(a), code_unordered_pair(a, b));
}

SetCode code_set_union(SetCode a, SetCode b) { return a | b; }

SetCode code_big_union(SetCode a) {
  SetCode out = 0;
  for (SetCode m = 0; m < 64 && (a >> m) != 0; ++m)
    if ((a >> m) & 1u) out |= m;
  return out;
}

}  // namespace setj
