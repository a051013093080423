#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "setj/term.hpp"

namespace setj {

struct UniverseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Hereditarily finite sets of rank < N under the Ackermann encoding: the
// elements of V_N are exactly the codes 0..|V_N|-1, in numeric order.
// Member codes stay below 64 for every constructible N, so membership is a
// bit test. V_6 would have 2^65536 elements; construction stops at N = 5.
class FiniteUniverse {
 public:
  // layer_ranks: optional strictly increasing rank cutoffs r_0 < ... < r_k;
  // layer m is W_m = V_{r_m} = { e : rank(e) < r_m }, a toy critical
  // sequence. j: total map on element codes (identity when omitted). When
  // layers are present, j must map each W_m into W_{m+1} (top layer into
  // itself).
  static FiniteUniverse build(unsigned rank_cap,
                              std::vector<unsigned> layer_ranks = {},
                              std::vector<SetCode> j = {});

  unsigned rank_cap() const { return rank_cap_; }
  std::size_t size() const { return size_; }

  bool contains(SetCode e) const { return e < size_; }
  static bool member(SetCode x, SetCode y) { return x < 64 && ((y >> x) & 1u); }

  unsigned rank(SetCode e) const;

  // Members of e in ascending code order.
  std::vector<SetCode> members(SetCode e) const;

  SetCode apply_j(SetCode e) const { return j_.empty() ? e : j_.at(e); }
  SetCode apply_j_power(SetCode e, std::uint32_t power) const {
    for (std::uint32_t i = 0; i < power; ++i) e = apply_j(e);
    return e;
  }
  bool has_custom_j() const { return !j_.empty(); }

  bool has_layers() const { return !layer_ranks_.empty(); }
  std::size_t layer_count() const { return layer_ranks_.size(); }
  bool in_layer(SetCode e, std::size_t m) const { return rank(e) < layer_ranks_.at(m); }
  // Least m with e in W_m; throws UniverseError when e is outside every layer.
  unsigned degree(SetCode e) const;
  // The set V_{r_m} as an element (code 2^|V_{r_m}| - 1); requires it to fit
  // in the universe's code space.
  SetCode layer_rep(std::size_t m) const;

  std::optional<SetCode> kappa_slot, vkappa_slot;

  // Von Neumann naturals present in the universe, ascending.
  const std::vector<SetCode>& naturals() const { return naturals_; }
  bool is_natural(SetCode e) const;

  // |V_k| for k <= 5.
  static std::size_t v_size(unsigned k);

 private:
  unsigned rank_cap_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint8_t> rank_;
  std::vector<unsigned> layer_ranks_;
  std::vector<SetCode> j_;
  std::vector<SetCode> naturals_;
};

// Convenience for tests: the code of { a, b } and of the Kuratowski pair
// <a, b> = { {a}, {a,b} }. Valid while the resulting codes stay below 2^63.
SetCode code_singleton(SetCode a);
SetCode code_unordered_pair(SetCode a, SetCode b);
SetCode code_kuratowski_pair(SetCode a, SetCode b);
SetCode code_set_union(SetCode a, SetCode b);
SetCode code_big_union(SetCode a);

}  // namespace setj
