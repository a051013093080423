#include "setj/eval.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace setj {

namespace {

// Values are element codes, with the omega sentinel flowing through so the
// class of naturals can act as a quantifier bound.
struct EvalCtx {
  const FiniteUniverse* u;
  std::vector<SetCode> env;  // indexed by variable
  // Unbounded quantifier range: all universe elements, or the members of a
  // relativizing set (inside a satisfaction atom).
  std::optional<std::vector<SetCode>> relativized;

  SetCode lookup(VarIndex v) const { return v < env.size() ? env[v] : kEmptySet; }

  void set(VarIndex v, SetCode c) {
    if (v >= env.size()) env.resize(v + 1, kEmptySet);
    env[v] = c;
  }

  SetCode term_value(const Term& t) const {
    SetCode base;
    switch (t.kind) {
      case Term::Kind::Var:
        return lookup(t.var);
      case Term::Kind::Const:
        base = t.code;
        break;
      case Term::Kind::JApp:
        base = t.base_is_const ? t.code : lookup(t.var);
        break;
    }
    if (base == kKappaSlot) {
      if (!u->kappa_slot) throw UniverseError("kappa slot not set");
      base = *u->kappa_slot;
    } else if (base == kVKappaSlot) {
      if (!u->vkappa_slot) throw UniverseError("Vkappa slot not set");
      base = *u->vkappa_slot;
    } else if (base == kOmegaSlot) {
      if (t.is_japp()) throw UniverseError("j applied to omega");
      return kOmegaSlot;
    }
    if (t.is_japp()) return u->apply_j_power(base, t.power);
    return base;
  }
};

unsigned rank_or_omega(const EvalCtx& c, SetCode v) {
  // omega outranks every element of a finite universe.
  if (v == kOmegaSlot) return c.u->rank_cap() + 1;
  return c.u->rank(v);
}

bool eval_rec(const FormulaPtr& f, EvalCtx& c);

bool eval_quant(const FormulaPtr& f, EvalCtx& c) {
  bool is_forall = f->q == Quant::Forall;
  if (c.relativized) {
    for (SetCode e : *c.relativized) {
      SetCode prev = c.lookup(f->var);
      c.set(f->var, e);
      bool b = eval_rec(f->body, c);
      c.set(f->var, prev);
      if (b != is_forall) return !is_forall;
    }
    return is_forall;
  }
  for (SetCode e = 0; e < c.u->size(); ++e) {
    SetCode prev = c.lookup(f->var);
    c.set(f->var, e);
    bool b = eval_rec(f->body, c);
    c.set(f->var, prev);
    if (b != is_forall) return !is_forall;
  }
  return is_forall;
}

bool eval_bquant(const FormulaPtr& f, EvalCtx& c) {
  bool is_forall = f->q == Quant::Forall;
  SetCode bound = c.term_value(f->bound);
  SetCode prev = c.lookup(f->var);
  if (bound == kOmegaSlot) {
    for (SetCode n : c.u->naturals()) {
      c.set(f->var, n);
      bool b = eval_rec(f->body, c);
      if (b != is_forall) {
        c.set(f->var, prev);
        return !is_forall;
      }
    }
    c.set(f->var, prev);
    return is_forall;
  }
  for (SetCode m = 0; m < 64 && (bound >> m) != 0; ++m) {
    if (!((bound >> m) & 1u)) continue;
    c.set(f->var, m);
    bool b = eval_rec(f->body, c);
    if (b != is_forall) {
      c.set(f->var, prev);
      return !is_forall;
    }
  }
  c.set(f->var, prev);
  return is_forall;
}

bool eval_rec(const FormulaPtr& f, EvalCtx& c) {
  switch (f->kind) {
    case Formula::Kind::Atom: {
      SetCode a = c.term_value(f->lhs);
      SetCode b = c.term_value(f->rhs);
      if (f->rel == Rel::Eq) return a == b;
      if (b == kOmegaSlot) return a != kOmegaSlot && c.u->is_natural(a);
      if (a == kOmegaSlot) return false;
      return FiniteUniverse::member(a, b);
    }
    case Formula::Kind::RankLess: {
      SetCode a = c.term_value(f->lhs);
      SetCode b = c.term_value(f->rhs);
      return rank_or_omega(c, a) < rank_or_omega(c, b);
    }
    case Formula::Kind::Sat: {
      SetCode model = c.term_value(f->model);
      if (model == kOmegaSlot) throw UniverseError("omega as a satisfaction model");
      EvalCtx inner;
      inner.u = c.u;
      inner.relativized = c.u->members(model);
      for (std::size_t i = 0; i < f->args.size(); ++i)
        inner.set(static_cast<VarIndex>(i), c.term_value(f->args[i]));
      return eval_rec(f->coded, inner);
    }
    case Formula::Kind::Not:
      return !eval_rec(f->left, c);
    case Formula::Kind::Bin:
      switch (f->conn) {
        case Conn::And:
          return eval_rec(f->left, c) && eval_rec(f->right, c);
        case Conn::Or:
          return eval_rec(f->left, c) || eval_rec(f->right, c);
        case Conn::Implies:
          return !eval_rec(f->left, c) || eval_rec(f->right, c);
      }
      return false;
    case Formula::Kind::Quant:
      return eval_quant(f, c);
    case Formula::Kind::BQuant:
      return eval_bquant(f, c);
    case Formula::Kind::Top:
      return true;
    case Formula::Kind::Bottom:
      return false;
  }
  return false;
}

}  // namespace

bool eval(const FormulaPtr& f, const Valuation& v) {
  EvalCtx c;
  c.u = v.universe;
  c.env = v.assignment.entries;
  return eval_rec(f, c);
}

unsigned sweep_workers() {
  if (const char* e = std::getenv("SETJ_WORKERS")) {
    int n = std::atoi(e);
    if (n >= 1 && n <= 64) return static_cast<unsigned>(n);
  }
  return 1;
}

namespace {

Assignment assignment_at(const std::vector<VarIndex>& vars, const FiniteUniverse& u,
                         std::uint64_t index) {
  Assignment a;
  // Last variable cycles fastest.
  std::vector<SetCode> vals(vars.size(), 0);
  for (std::size_t k = vars.size(); k-- > 0;) {
    vals[k] = index % u.size();
    index /= u.size();
  }
  for (std::size_t k = 0; k < vars.size(); ++k) a = a.with(vars[k], vals[k]);
  return a;
}

}  // namespace

EquivalenceResult check_equivalence(const FormulaPtr& f, const FormulaPtr& g,
                                    const FiniteUniverse& u) {
  std::vector<VarIndex> vars = free_vars(f);
  for (VarIndex v : free_vars(g))
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) total *= u.size();

  auto check_range = [&](std::uint64_t lo, std::uint64_t hi) -> std::optional<std::uint64_t> {
    EvalCtx cf, cg;
    cf.u = cg.u = &u;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t rest = idx;
      std::vector<SetCode> vals(vars.size(), 0);
      for (std::size_t k = vars.size(); k-- > 0;) {
        vals[k] = rest % u.size();
        rest /= u.size();
      }
      cf.env.clear();
      for (std::size_t k = 0; k < vars.size(); ++k) cf.set(vars[k], vals[k]);
      cg.env = cf.env;
      if (eval_rec(f, cf) != eval_rec(g, cg)) return idx;
    }
    return std::nullopt;
  };

  unsigned workers = sweep_workers();
  std::optional<std::uint64_t> hit;
  if (workers <= 1 || total < 1024) {
    hit = check_range(0, total);
  } else {
    std::vector<std::optional<std::uint64_t>> results(workers);
    std::vector<std::thread> threads;
    std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t lo = w * chunk;
      std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
      if (lo >= hi) break;
      threads.emplace_back([&, w, lo, hi] { results[w] = check_range(lo, hi); });
    }
    for (auto& t : threads) t.join();
    for (const auto& r : results)
      if (r && (!hit || *r < *hit)) hit = r;  // first in canonical order wins
  }

  EquivalenceResult res;
  if (hit) {
    res.equal = false;
    res.counterexample = assignment_at(vars, u, *hit);
    res.lhs_value = eval(f, Valuation{res.counterexample, &u});
  }
  return res;
}

ElementarityResult check_elementarity(const FormulaPtr& f, const FiniteUniverse& u) {
  if (mentions_j(f)) throw UniverseError("elementarity check expects a j-free formula");
  std::vector<VarIndex> vars = free_vars(f);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) total *= u.size();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Assignment a = assignment_at(vars, u, idx);
    if (!eval(f, Valuation{a, &u})) continue;
    Assignment ja = a;
    for (VarIndex v : vars) ja = ja.with(v, u.apply_j(a.get(v)));
    if (!eval(f, Valuation{ja, &u})) {
      ElementarityResult r;
      r.holds = false;
      r.counterexample = a;
      return r;
    }
  }
  return {};
}

}  // namespace setj
