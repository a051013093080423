#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace setj {

// Ackermann code of a hereditarily finite set: bit i of the code is set
// iff the set with code i is a member. Codes are canonical, so equality
// of codes is equality of sets. All universes built here keep member
// codes below 64, so a plain uint64 suffices.
using SetCode = std::uint64_t;

inline constexpr SetCode kEmptySet = 0;

// Designated constant slots resolved by a universe at evaluation time.
inline constexpr SetCode kKappaSlot = ~SetCode{0};
inline constexpr SetCode kVKappaSlot = ~SetCode{0} - 1;
inline constexpr SetCode kOmegaSlot = ~SetCode{0} - 2;

inline bool is_slot_code(SetCode c) { return c >= kOmegaSlot; }

using VarIndex = std::uint32_t;

// A term is a variable v_i, a constant naming a universe element, or a
// j-power applied to a variable (or, after instantiation, to a constant).
struct Term {
  enum class Kind : std::uint8_t { Var, Const, JApp };

  Kind kind = Kind::Var;
  VarIndex var = 0;      // Var, JApp over a variable
  SetCode code = 0;      // Const, JApp over a constant
  std::uint32_t power = 0;  // JApp only, >= 1
  bool base_is_const = false;

  static Term mk_var(VarIndex v) {
    Term t;
    t.kind = Kind::Var;
    t.var = v;
    return t;
  }
  static Term mk_const(SetCode c) {
    Term t;
    t.kind = Kind::Const;
    t.code = c;
    return t;
  }
  static Term mk_japp(VarIndex v, std::uint32_t power) {
    Term t;
    t.kind = Kind::JApp;
    t.var = v;
    t.power = power;
    return t;
  }
  static Term mk_japp_const(SetCode c, std::uint32_t power) {
    Term t;
    t.kind = Kind::JApp;
    t.code = c;
    t.power = power;
    t.base_is_const = true;
    return t;
  }

  bool is_var() const { return kind == Kind::Var; }
  bool is_const() const { return kind == Kind::Const; }
  bool is_japp() const { return kind == Kind::JApp; }
  bool mentions_j() const { return kind == Kind::JApp; }

  bool mentions_var(VarIndex v) const {
    if (kind == Kind::Const) return false;
    if (kind == Kind::JApp && base_is_const) return false;
    return var == v;
  }

  // Applies one more j. Powers fold: j(j^k(x)) = j^{k+1}(x).
  Term j_applied() const {
    switch (kind) {
      case Kind::Var: return mk_japp(var, 1);
      case Kind::Const: return mk_japp_const(code, 1);
      case Kind::JApp: {
        Term t = *this;
        t.power += 1;
        return t;
      }
    }
    return *this;
  }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::Var: return a.var == b.var;
      case Kind::Const: return a.code == b.code;
      case Kind::JApp:
        return a.power == b.power && a.base_is_const == b.base_is_const &&
               (a.base_is_const ? a.code == b.code : a.var == b.var);
    }
    return false;
  }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
};

// Tuple of universe elements indexed by variable number. Lookups past the
// end yield the empty set.
struct Assignment {
  std::vector<SetCode> entries;

  Assignment() = default;
  explicit Assignment(std::vector<SetCode> e) : entries(std::move(e)) {}

  SetCode get(VarIndex i) const {
    return i < entries.size() ? entries[i] : kEmptySet;
  }

  // a[b/v_i]: pads with empty sets when i is past the end.
  Assignment with(VarIndex i, SetCode b) const {
    Assignment out = *this;
    if (i >= out.entries.size()) out.entries.resize(i + 1, kEmptySet);
    out.entries[i] = b;
    return out;
  }

  std::size_t size() const { return entries.size(); }
};

}  // namespace setj
