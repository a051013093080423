#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "setj/term.hpp"

namespace setj {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class Rel : std::uint8_t { In, Eq };
enum class Conn : std::uint8_t { And, Or, Implies };
enum class Quant : std::uint8_t { Forall, Exists };

// Immutable AST of first-order {in, =, j}-formulas. Bounded quantifiers are
// distinct nodes. Top/Bottom are first-class so pre-evaluation can splice
// the true sentence directly. Sat and RankLess are abstract atoms: a coded
// satisfaction claim "model |= phi(args)" and a rank comparison, expanded
// concretely only by the finite-universe evaluator.
struct Formula {
  enum class Kind : std::uint8_t {
    Atom,      // lhs rel rhs
    Sat,       // model |= coded(args)
    RankLess,  // rank(lhs) < rank(rhs)
    Not,
    Bin,
    Quant,
    BQuant,
    Top,
    Bottom,
  };

  Kind kind = Kind::Top;

  Rel rel = Rel::In;
  Term lhs, rhs;

  Term model;
  FormulaPtr coded;
  std::vector<Term> args;

  Conn conn = Conn::And;
  FormulaPtr left, right;  // Not uses left only

  Quant q = Quant::Forall;
  VarIndex var = 0;
  Term bound;  // BQuant only
  FormulaPtr body;
};

FormulaPtr mk_atom(Rel rel, Term lhs, Term rhs);
FormulaPtr mk_in(Term lhs, Term rhs);
FormulaPtr mk_eq(Term lhs, Term rhs);
FormulaPtr mk_sat(Term model, FormulaPtr coded, std::vector<Term> args);
FormulaPtr mk_rank_less(Term lhs, Term rhs);
FormulaPtr mk_not(FormulaPtr f);
FormulaPtr mk_bin(Conn c, FormulaPtr a, FormulaPtr b);
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b);
// (a -> b) & (b -> a); iff is sugar, not a primitive node.
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_quant(Quant q, VarIndex var, FormulaPtr body);
FormulaPtr mk_forall(VarIndex var, FormulaPtr body);
FormulaPtr mk_exists(VarIndex var, FormulaPtr body);
// Throws std::invalid_argument if the bound mentions the quantified variable.
FormulaPtr mk_bquant(Quant q, VarIndex var, Term bound, FormulaPtr body);
FormulaPtr mk_bforall(VarIndex var, Term bound, FormulaPtr body);
FormulaPtr mk_bexists(VarIndex var, Term bound, FormulaPtr body);
FormulaPtr mk_top();
FormulaPtr mk_bottom();

// Conjunction/disjunction of a list, right-nested; empty list gives the unit.
FormulaPtr mk_and_all(const std::vector<FormulaPtr>& fs);
FormulaPtr mk_or_all(const std::vector<FormulaPtr>& fs);

bool equal(const FormulaPtr& a, const FormulaPtr& b);
std::size_t hash_of(const FormulaPtr& f);

bool mentions_j(const FormulaPtr& f);

// Free variable indices, sorted ascending.
std::vector<VarIndex> free_vars(const FormulaPtr& f);
// All variable indices occurring anywhere (free or bound), sorted.
std::vector<VarIndex> all_vars(const FormulaPtr& f);
// Smallest index not occurring anywhere in f and not in `extra`.
VarIndex fresh_var(const FormulaPtr& f, const std::vector<VarIndex>& extra = {});

// Canonical text form (parses back to a structurally equal formula).
std::string print_text(const FormulaPtr& f);
// Canonical s-expression, one line, covering every node kind.
std::string print_sexpr(const FormulaPtr& f);
std::string print_term(const Term& t);

}  // namespace setj
