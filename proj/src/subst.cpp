#include "setj/subst.hpp"

#include <set>
#include <stdexcept>
#include <unordered_map>

namespace setj {

namespace {

struct Renamer {
  std::set<VarIndex> used;           // free vars of the whole formula + allocated binders
  std::map<VarIndex, VarIndex> scope;  // active binder renaming

  VarIndex fresh() {
    VarIndex i = 0;
    while (used.count(i)) ++i;
    used.insert(i);
    return i;
  }

  Term rename_term(const Term& t) {
    if (t.is_const() || (t.is_japp() && t.base_is_const)) return t;
    auto it = scope.find(t.var);
    if (it == scope.end()) return t;
    Term out = t;
    out.var = it->second;
    return out;
  }

  FormulaPtr rec(const FormulaPtr& f) {
    switch (f->kind) {
      case Formula::Kind::Atom:
        return mk_atom(f->rel, rename_term(f->lhs), rename_term(f->rhs));
      case Formula::Kind::RankLess:
        return mk_rank_less(rename_term(f->lhs), rename_term(f->rhs));
      case Formula::Kind::Sat: {
        std::vector<Term> args;
        args.reserve(f->args.size());
        for (const auto& a : f->args) args.push_back(rename_term(a));
        return mk_sat(rename_term(f->model), f->coded, std::move(args));
      }
      case Formula::Kind::Not:
        return mk_not(rec(f->left));
      case Formula::Kind::Bin: {
        FormulaPtr l = rec(f->left);
        FormulaPtr r = rec(f->right);
        return mk_bin(f->conn, l, r);
      }
      case Formula::Kind::Quant:
      case Formula::Kind::BQuant: {
        Term bound;
        if (f->kind == Formula::Kind::BQuant) bound = rename_term(f->bound);
        VarIndex target;
        if (!used.count(f->var)) {
          target = f->var;
          used.insert(target);
        } else {
          target = fresh();
        }
        auto it = scope.find(f->var);
        bool had = it != scope.end();
        VarIndex prev = had ? it->second : 0;
        scope[f->var] = target;
        FormulaPtr body = rec(f->body);
        if (had)
          scope[f->var] = prev;
        else
          scope.erase(f->var);
        if (f->kind == Formula::Kind::Quant) return mk_quant(f->q, target, body);
        return mk_bquant(f->q, target, bound, body);
      }
      case Formula::Kind::Top:
        return mk_top();
      case Formula::Kind::Bottom:
        return mk_bottom();
    }
    throw std::logic_error("unreachable");
  }
};

}  // namespace

FormulaPtr rename_apart(const FormulaPtr& f) {
  Renamer r;
  for (VarIndex v : free_vars(f)) r.used.insert(v);
  return r.rec(f);
}

namespace {

FormulaPtr subst_rec(const FormulaPtr& f, const std::map<VarIndex, Term>& repl,
                     std::set<VarIndex>& bound) {
  auto term = [&](const Term& t) -> Term {
    if (t.is_const() || (t.is_japp() && t.base_is_const)) return t;
    if (bound.count(t.var)) return t;
    auto it = repl.find(t.var);
    if (it == repl.end()) return t;
    const Term& r = it->second;
    if (!t.is_japp()) return r;
    // j^k applied to a substituted base: fold powers; base must stay simple.
    if (r.is_var()) return Term::mk_japp(r.var, t.power);
    if (r.is_const()) return Term::mk_japp_const(r.code, t.power);
    return Term::mk_japp(r.var, t.power + r.power);
  };
  switch (f->kind) {
    case Formula::Kind::Atom:
      return mk_atom(f->rel, term(f->lhs), term(f->rhs));
    case Formula::Kind::RankLess:
      return mk_rank_less(term(f->lhs), term(f->rhs));
    case Formula::Kind::Sat: {
      std::vector<Term> args;
      args.reserve(f->args.size());
      for (const auto& a : f->args) args.push_back(term(a));
      return mk_sat(term(f->model), f->coded, std::move(args));
    }
    case Formula::Kind::Not:
      return mk_not(subst_rec(f->left, repl, bound));
    case Formula::Kind::Bin: {
      FormulaPtr l = subst_rec(f->left, repl, bound);
      FormulaPtr r = subst_rec(f->right, repl, bound);
      return mk_bin(f->conn, l, r);
    }
    case Formula::Kind::Quant:
    case Formula::Kind::BQuant: {
      Term b;
      if (f->kind == Formula::Kind::BQuant) b = term(f->bound);
      bool was = bound.count(f->var) != 0;
      bound.insert(f->var);
      FormulaPtr body = subst_rec(f->body, repl, bound);
      if (!was) bound.erase(f->var);
      if (f->kind == Formula::Kind::Quant) return mk_quant(f->q, f->var, body);
      return mk_bquant(f->q, f->var, b, body);
    }
    case Formula::Kind::Top:
      return mk_top();
    case Formula::Kind::Bottom:
      return mk_bottom();
  }
  throw std::logic_error("unreachable");
}

}  // namespace

FormulaPtr substitute_terms(const FormulaPtr& f, const std::map<VarIndex, Term>& repl) {
  std::set<VarIndex> bound;
  return subst_rec(f, repl, bound);
}

FormulaPtr substitute(const FormulaPtr& f, const Assignment& a) {
  std::map<VarIndex, Term> repl;
  for (VarIndex v : free_vars(f)) repl.emplace(v, Term::mk_const(a.get(v)));
  return substitute_terms(f, repl);
}

namespace {

void collect_subformulas(const FormulaPtr& f, std::vector<FormulaPtr>& out,
                         std::unordered_map<std::size_t, std::vector<FormulaPtr>>& seen) {
  switch (f->kind) {
    case Formula::Kind::Not:
      collect_subformulas(f->left, out, seen);
      break;
    case Formula::Kind::Bin:
      collect_subformulas(f->left, out, seen);
      collect_subformulas(f->right, out, seen);
      break;
    case Formula::Kind::Quant:
    case Formula::Kind::BQuant:
      collect_subformulas(f->body, out, seen);
      break;
    default:
      break;
  }
  std::size_t h = hash_of(f);
  auto& bucket = seen[h];
  for (const auto& g : bucket)
    if (equal(g, f)) return;
  bucket.push_back(f);
  out.push_back(f);
}

}  // namespace

std::vector<FormulaPtr> subformulas(const FormulaPtr& f) {
  std::vector<FormulaPtr> out;
  std::unordered_map<std::size_t, std::vector<FormulaPtr>> seen;
  collect_subformulas(f, out, seen);
  return out;
}

}  // namespace setj
