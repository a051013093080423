#include "setj/formula.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace setj {

namespace {

FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

void collect_term_vars(const Term& t, std::set<VarIndex>& out) {
  if (t.is_var() || (t.is_japp() && !t.base_is_const)) out.insert(t.var);
}

}  // namespace

FormulaPtr mk_atom(Rel rel, Term lhs, Term rhs) {
  Formula f;
  f.kind = Formula::Kind::Atom;
  f.rel = rel;
  f.lhs = lhs;
  f.rhs = rhs;
  return make(std::move(f));
}

FormulaPtr mk_in(Term lhs, Term rhs) { return mk_atom(Rel::In, lhs, rhs); }
FormulaPtr mk_eq(Term lhs, Term rhs) { return mk_atom(Rel::Eq, lhs, rhs); }

FormulaPtr mk_sat(Term model, FormulaPtr coded, std::vector<Term> args) {
  Formula f;
  f.kind = Formula::Kind::Sat;
  f.model = model;
  f.coded = std::move(coded);
  f.args = std::move(args);
  return make(std::move(f));
}

FormulaPtr mk_rank_less(Term lhs, Term rhs) {
  Formula f;
  f.kind = Formula::Kind::RankLess;
  f.lhs = lhs;
  f.rhs = rhs;
  return make(std::move(f));
}

FormulaPtr mk_not(FormulaPtr x) {
  Formula f;
  f.kind = Formula::Kind::Not;
  f.left = std::move(x);
  return make(std::move(f));
}

FormulaPtr mk_bin(Conn c, FormulaPtr a, FormulaPtr b) {
  Formula f;
  f.kind = Formula::Kind::Bin;
  f.conn = c;
  f.left = std::move(a);
  f.right = std::move(b);
  return make(std::move(f));
}

FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) { return mk_bin(Conn::And, std::move(a), std::move(b)); }
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) { return mk_bin(Conn::Or, std::move(a), std::move(b)); }
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b) { return mk_bin(Conn::Implies, std::move(a), std::move(b)); }
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b) {
  return mk_and(mk_implies(a, b), mk_implies(b, a));
}

FormulaPtr mk_quant(Quant q, VarIndex var, FormulaPtr body) {
  Formula f;
  f.kind = Formula::Kind::Quant;
  f.q = q;
  f.var = var;
  f.body = std::move(body);
  return make(std::move(f));
}

FormulaPtr mk_forall(VarIndex var, FormulaPtr body) { return mk_quant(Quant::Forall, var, std::move(body)); }
FormulaPtr mk_exists(VarIndex var, FormulaPtr body) { return mk_quant(Quant::Exists, var, std::move(body)); }

FormulaPtr mk_bquant(Quant q, VarIndex var, Term bound, FormulaPtr body) {
  if (bound.mentions_var(var))
    throw std::invalid_argument("bounded quantifier: bound term mentions the quantified variable");
  Formula f;
  f.kind = Formula::Kind::BQuant;
  f.q = q;
  f.var = var;
  f.bound = bound;
  f.body = std::move(body);
  return make(std::move(f));
}

FormulaPtr mk_bforall(VarIndex var, Term bound, FormulaPtr body) {
  return mk_bquant(Quant::Forall, var, bound, std::move(body));
}
FormulaPtr mk_bexists(VarIndex var, Term bound, FormulaPtr body) {
  return mk_bquant(Quant::Exists, var, bound, std::move(body));
}

FormulaPtr mk_top() {
  Formula f;
  f.kind = Formula::Kind::Top;
  return make(std::move(f));
}

FormulaPtr mk_bottom() {
  Formula f;
  f.kind = Formula::Kind::Bottom;
  return make(std::move(f));
}

FormulaPtr mk_and_all(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return mk_top();
  FormulaPtr out = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) out = mk_and(fs[i], out);
  return out;
}

FormulaPtr mk_or_all(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return mk_bottom();
  FormulaPtr out = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) out = mk_or(fs[i], out);
  return out;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Atom:
      return a->rel == b->rel && a->lhs == b->lhs && a->rhs == b->rhs;
    case Formula::Kind::RankLess:
      return a->lhs == b->lhs && a->rhs == b->rhs;
    case Formula::Kind::Sat:
      return a->model == b->model && a->args == b->args && equal(a->coded, b->coded);
    case Formula::Kind::Not:
      return equal(a->left, b->left);
    case Formula::Kind::Bin:
      return a->conn == b->conn && equal(a->left, b->left) && equal(a->right, b->right);
    case Formula::Kind::Quant:
      return a->q == b->q && a->var == b->var && equal(a->body, b->body);
    case Formula::Kind::BQuant:
      return a->q == b->q && a->var == b->var && a->bound == b->bound && equal(a->body, b->body);
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
      return true;
  }
  return false;
}

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

std::size_t hash_term(const Term& t) {
  std::size_t h = static_cast<std::size_t>(t.kind);
  h = mix(h, t.is_const() || t.base_is_const ? static_cast<std::size_t>(t.code)
                                             : static_cast<std::size_t>(t.var));
  h = mix(h, t.power);
  return h;
}

}  // namespace

std::size_t hash_of(const FormulaPtr& f) {
  if (!f) return 0;
  std::size_t h = static_cast<std::size_t>(f->kind);
  switch (f->kind) {
    case Formula::Kind::Atom:
      h = mix(h, static_cast<std::size_t>(f->rel));
      h = mix(h, hash_term(f->lhs));
      h = mix(h, hash_term(f->rhs));
      break;
    case Formula::Kind::RankLess:
      h = mix(h, hash_term(f->lhs));
      h = mix(h, hash_term(f->rhs));
      break;
    case Formula::Kind::Sat:
      h = mix(h, hash_term(f->model));
      h = mix(h, hash_of(f->coded));
      for (const auto& t : f->args) h = mix(h, hash_term(t));
      break;
    case Formula::Kind::Not:
      h = mix(h, hash_of(f->left));
      break;
    case Formula::Kind::Bin:
      h = mix(h, static_cast<std::size_t>(f->conn));
      h = mix(h, hash_of(f->left));
      h = mix(h, hash_of(f->right));
      break;
    case Formula::Kind::Quant:
      h = mix(h, static_cast<std::size_t>(f->q));
      h = mix(h, f->var);
      h = mix(h, hash_of(f->body));
      break;
    case Formula::Kind::BQuant:
      h = mix(h, static_cast<std::size_t>(f->q));
      h = mix(h, f->var);
      h = mix(h, hash_term(f->bound));
      h = mix(h, hash_of(f->body));
      break;
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
      break;
  }
  return h;
}

bool mentions_j(const FormulaPtr& f) {
  if (!f) return false;
  switch (f->kind) {
    case Formula::Kind::Atom:
      return f->lhs.mentions_j() || f->rhs.mentions_j();
    case Formula::Kind::RankLess:
      return f->lhs.mentions_j() || f->rhs.mentions_j();
    case Formula::Kind::Sat: {
      if (f->model.mentions_j()) return true;
      for (const auto& t : f->args)
        if (t.mentions_j()) return true;
      // The coded formula is an opaque set parameter, not live syntax.
      return false;
    }
    case Formula::Kind::Not:
      return mentions_j(f->left);
    case Formula::Kind::Bin:
      return mentions_j(f->left) || mentions_j(f->right);
    case Formula::Kind::Quant:
      return mentions_j(f->body);
    case Formula::Kind::BQuant:
      return f->bound.mentions_j() || mentions_j(f->body);
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
      return false;
  }
  return false;
}

namespace {

void walk_vars(const FormulaPtr& f, std::set<VarIndex>& bound,
               std::set<VarIndex>& free, std::set<VarIndex>& all) {
  if (!f) return;
  auto term = [&](const Term& t) {
    if (t.is_const() || (t.is_japp() && t.base_is_const)) return;
    all.insert(t.var);
    if (!bound.count(t.var)) free.insert(t.var);
  };
  switch (f->kind) {
    case Formula::Kind::Atom:
    case Formula::Kind::RankLess:
      term(f->lhs);
      term(f->rhs);
      break;
    case Formula::Kind::Sat:
      term(f->model);
      for (const auto& t : f->args) term(t);
      break;
    case Formula::Kind::Not:
      walk_vars(f->left, bound, free, all);
      break;
    case Formula::Kind::Bin:
      walk_vars(f->left, bound, free, all);
      walk_vars(f->right, bound, free, all);
      break;
    case Formula::Kind::Quant: {
      all.insert(f->var);
      bool was = bound.count(f->var) != 0;
      bound.insert(f->var);
      walk_vars(f->body, bound, free, all);
      if (!was) bound.erase(f->var);
      break;
    }
    case Formula::Kind::BQuant: {
      term(f->bound);
      all.insert(f->var);
      bool was = bound.count(f->var) != 0;
      bound.insert(f->var);
      walk_vars(f->body, bound, free, all);
      if (!was) bound.erase(f->var);
      break;
    }
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
      break;
  }
}

}  // namespace

std::vector<VarIndex> free_vars(const FormulaPtr& f) {
  std::set<VarIndex> bound, free, all;
  walk_vars(f, bound, free, all);
  return {free.begin(), free.end()};
}

std::vector<VarIndex> all_vars(const FormulaPtr& f) {
  std::set<VarIndex> bound, free, all;
  walk_vars(f, bound, free, all);
  return {all.begin(), all.end()};
}

VarIndex fresh_var(const FormulaPtr& f, const std::vector<VarIndex>& extra) {
  std::set<VarIndex> used;
  for (VarIndex v : all_vars(f)) used.insert(v);
  for (VarIndex v : extra) used.insert(v);
  VarIndex i = 0;
  while (used.count(i)) ++i;
  return i;
}

// ---------------------------------------------------------------------------
// Printing

std::string print_term(const Term& t) {
  std::ostringstream os;
  auto base = [&]() -> std::string {
    if (t.base_is_const || t.is_const()) {
      if (t.code == kKappaSlot) return "kappa";
      if (t.code == kVKappaSlot) return "Vkappa";
      if (t.code == kOmegaSlot) return "omega";
      return "#" + std::to_string(t.code);
    }
    return "v" + std::to_string(t.var);
  };
  switch (t.kind) {
    case Term::Kind::Var:
      os << "v" << t.var;
      break;
    case Term::Kind::Const:
      os << base();
      break;
    case Term::Kind::JApp:
      if (t.power == 1)
        os << "j(" << base() << ")";
      else
        os << "j^" << t.power << "(" << base() << ")";
      break;
  }
  return os.str();
}

namespace {

void print_text_rec(const FormulaPtr& f, std::ostringstream& os) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      os << print_term(f->lhs) << (f->rel == Rel::In ? " in " : " = ") << print_term(f->rhs);
      break;
    case Formula::Kind::RankLess:
      os << "rank(" << print_term(f->lhs) << ") < rank(" << print_term(f->rhs) << ")";
      break;
    case Formula::Kind::Sat:
      os << "Sat(" << print_term(f->model) << ", [" << print_sexpr(f->coded) << "]";
      for (const auto& a : f->args) os << ", " << print_term(a);
      os << ")";
      break;
    case Formula::Kind::Not:
      os << "~(";
      print_text_rec(f->left, os);
      os << ")";
      break;
    case Formula::Kind::Bin: {
      const char* c = f->conn == Conn::And ? " & " : f->conn == Conn::Or ? " | " : " -> ";
      os << "(";
      print_text_rec(f->left, os);
      os << c;
      print_text_rec(f->right, os);
      os << ")";
      break;
    }
    case Formula::Kind::Quant:
      // Quantifier scope extends maximally right, so the whole form is
      // parenthesized to survive reparsing as a connective operand.
      os << "(" << (f->q == Quant::Forall ? "A" : "E") << " v" << f->var << ": ";
      print_text_rec(f->body, os);
      os << ")";
      break;
    case Formula::Kind::BQuant:
      os << "(" << (f->q == Quant::Forall ? "A" : "E") << " v" << f->var << " in "
         << print_term(f->bound) << ": ";
      print_text_rec(f->body, os);
      os << ")";
      break;
    case Formula::Kind::Top:
      os << "T";
      break;
    case Formula::Kind::Bottom:
      os << "F";
      break;
  }
}

std::string sexpr_term(const Term& t) {
  auto base = [&]() -> std::string {
    if (t.base_is_const || t.is_const()) {
      if (t.code == kKappaSlot) return "kappa";
      if (t.code == kVKappaSlot) return "Vkappa";
      if (t.code == kOmegaSlot) return "omega";
      return "(const " + std::to_string(t.code) + ")";
    }
    return "v" + std::to_string(t.var);
  };
  switch (t.kind) {
    case Term::Kind::Var:
      return "v" + std::to_string(t.var);
    case Term::Kind::Const:
      return base();
    case Term::Kind::JApp:
      return "(j " + std::to_string(t.power) + " " + base() + ")";
  }
  return "?";
}

void print_sexpr_rec(const FormulaPtr& f, std::ostringstream& os) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      os << (f->rel == Rel::In ? "(in " : "(eq ") << sexpr_term(f->lhs) << " "
         << sexpr_term(f->rhs) << ")";
      break;
    case Formula::Kind::RankLess:
      os << "(rankless " << sexpr_term(f->lhs) << " " << sexpr_term(f->rhs) << ")";
      break;
    case Formula::Kind::Sat:
      os << "(sat " << sexpr_term(f->model) << " ";
      print_sexpr_rec(f->coded, os);
      for (const auto& a : f->args) os << " " << sexpr_term(a);
      os << ")";
      break;
    case Formula::Kind::Not:
      os << "(not ";
      print_sexpr_rec(f->left, os);
      os << ")";
      break;
    case Formula::Kind::Bin:
      os << (f->conn == Conn::And ? "(and " : f->conn == Conn::Or ? "(or " : "(imp ");
      print_sexpr_rec(f->left, os);
      os << " ";
      print_sexpr_rec(f->right, os);
      os << ")";
      break;
    case Formula::Kind::Quant:
      os << (f->q == Quant::Forall ? "(forall v" : "(exists v") << f->var << " ";
      print_sexpr_rec(f->body, os);
      os << ")";
      break;
    case Formula::Kind::BQuant:
      os << (f->q == Quant::Forall ? "(bforall v" : "(bexists v") << f->var << " "
         << sexpr_term(f->bound) << " ";
      print_sexpr_rec(f->body, os);
      os << ")";
      break;
    case Formula::Kind::Top:
      os << "(top)";
      break;
    case Formula::Kind::Bottom:
      os << "(bot)";
      break;
  }
}

}  // namespace

std::string print_text(const FormulaPtr& f) {
  std::ostringstream os;
  print_text_rec(f, os);
  return os.str();
}

std::string print_sexpr(const FormulaPtr& f) {
  std::ostringstream os;
  print_sexpr_rec(f, os);
  return os.str();
}

}  // namespace setj
