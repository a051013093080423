#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "setj/hierarchy.hpp"
#include "setj/parse.hpp"
#include "setj/subst.hpp"

using namespace setj;

namespace {

Term v(VarIndex i) { return Term::mk_var(i); }

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  VarIndex pick_var() { return static_cast<VarIndex>(rng() % 4); }

  FormulaPtr jfree(unsigned depth) {
    if (depth == 0)
      return rng() % 2 ? mk_in(v(pick_var()), v(pick_var()))
                       : mk_eq(v(pick_var()), v(pick_var()));
    switch (rng() % 7) {
      case 0: return jfree(0);
      case 1: return mk_not(jfree(depth - 1));
      case 2: return mk_and(jfree(depth - 1), jfree(depth - 1));
      case 3: return mk_or(jfree(depth - 1), jfree(depth - 1));
      case 4: return mk_implies(jfree(depth - 1), jfree(depth - 1));
      case 5: return mk_quant(rng() % 2 ? Quant::Forall : Quant::Exists, pick_var(),
                              jfree(depth - 1));
      default: {
        VarIndex x = pick_var();
        VarIndex b = (x + 1) % 4;
        return mk_bquant(rng() % 2 ? Quant::Forall : Quant::Exists, x, v(b),
                         jfree(depth - 1));
      }
    }
  }

  // A member of the Delta0 layer of the Sigma_inf-based family: a j-free
  // formula with j-powers substituted for some free variables.
  FormulaPtr dj0(unsigned depth) {
    FormulaPtr base = rename_apart(jfree(depth));
    std::map<VarIndex, Term> repl;
    for (VarIndex fv : free_vars(base))
      if (rng() % 2) repl.emplace(fv, Term::mk_japp(fv, 1 + rng() % 2));
    return substitute_terms(base, repl);
  }
};

}  // namespace

TEST_CASE("classify_levy: displayed Delta0 characterization") {
  // z = {x,y} as a bounded formula
  FormulaPtr f = parse("(x in z & y in z) & A w in z: (w = x | w = y)");
  CHECK(classify_levy(f).is(ShapeKind::Delta0));
}

TEST_CASE("classify_levy: repeated block is not literally Sigma_1") {
  FormulaPtr f = parse("Ex: Ey: (x in y)");
  HierarchyClass c = classify_levy(f);
  CHECK(c.is(ShapeKind::NotInFamily));
  REQUIRE(!c.certificate.empty());
  CHECK(c.certificate.back().find("strict") != std::string::npos);
}

TEST_CASE("classify_levy: alternating prefix") {
  CHECK(classify_levy(parse("Au0: Eu1: (u0 in u1)")).is(ShapeKind::Pi, 2));
  CHECK(classify_levy(parse("Eu0: Au1: (u0 in u1)")).is(ShapeKind::Sigma, 2));
  CHECK(classify_levy(parse("Ex: (x = x)")).is(ShapeKind::Sigma, 1));
}

TEST_CASE("classify_levy rejects j-formulas") {
  CHECK(classify_levy(parse("j(x) = x")).is(ShapeKind::NotInFamily));
}

TEST_CASE("classify_levy: unbounded quantifier below a connective breaks prenex") {
  CHECK(classify_levy(parse("~(Ex: (x = x))")).is(ShapeKind::NotInFamily));
  CHECK(classify_levy(parse("x = x & Ay: (y = y)")).is(ShapeKind::NotInFamily));
}

TEST_CASE("classify_j: bounded j-free collapses in") {
  CHECK(classify_j(parse("A w in z: (w = x)")).is(ShapeKind::Delta0));
  CHECK(classify_j(parse("j(x) in y")).is(ShapeKind::Delta0));
  CHECK(classify_j(parse("Ef: (j(f) = x)")).is(ShapeKind::Sigma, 1));
}

TEST_CASE("classify_j equals classify_levy on j-free formulas") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Gen g(seed);
    FormulaPtr f = g.jfree(4);
    HierarchyClass a = classify_levy(f);
    HierarchyClass b = classify_j(f);
    CHECK(a.kind == b.kind);
    CHECK(a.level == b.level);
  }
}

TEST_CASE("classification is deterministic and replays") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Gen g(seed + 1000);
    FormulaPtr f = g.dj0(3);
    HierarchyClass a = classify_sigma_inf(f);
    HierarchyClass b = classify_sigma_inf(f);
    CHECK(a.kind == b.kind);
    CHECK(a.level == b.level);
    CHECK(a.certificate == b.certificate);
  }
}

TEST_CASE("classify_sigma_inf: bounded j-quantifier over a j-free body") {
  // E x in j(a): psi(x) with psi containing arbitrary unbounded quantifiers
  FormulaPtr psi = parse("Au: Ew: (u in w & x = x)");
  FormulaPtr f = mk_bexists(5, Term::mk_japp(1, 1), psi);
  CHECK(classify_sigma_inf(f).is(ShapeKind::Delta0));
}

TEST_CASE("classify_sigma_inf: one-variable elementarity shape is Pi(1)") {
  // A x: (phi(x) -> phi(j(x))) with phi j-free
  FormulaPtr f = parse("Ax: (x in p -> j(x) in p)");
  CHECK(classify_sigma_inf(f).is(ShapeKind::Pi, 1));
  // the matrix alone is Delta0 of the family
  REQUIRE(f->kind == Formula::Kind::Quant);
  CHECK(classify_sigma_inf(f->body).is(ShapeKind::Delta0));
}

TEST_CASE("classify_sigma_inf: purely j-free sentences are base members") {
  CHECK(classify_sigma_inf(parse("Ax: Ey: Az: (x in y -> z in y)")).is(ShapeKind::Delta0));
}

TEST_CASE("classify_sigma_inf: j under an in-family unbounded quantifier") {
  // E x: psi(j(x)) is Sigma(1): the matrix has j on a variable free in it
  FormulaPtr f = mk_exists(0, mk_in(Term::mk_japp(0, 1), v(1)));
  CHECK(classify_sigma_inf(f).is(ShapeKind::Sigma, 1));
  // but a negation above the quantifier leaves the family
  CHECK(classify_sigma_inf(mk_not(f)).is(ShapeKind::NotInFamily));
}

TEST_CASE("classify_fleischmann: bounded") {
  HierarchyClass c = classify_fleischmann(parse("A w in z: (w = x)"));
  CHECK(c.is(ShapeKind::Delta0));
}

TEST_CASE("classify_fleischmann: unbounded exists under a bounded forall") {
  FormulaPtr f = parse("A w in z: (Ex: (x in w))");
  CHECK(classify_fleischmann(f).is(ShapeKind::Sigma, 1));
}

TEST_CASE("classify_fleischmann: implication clause") {
  // (Ex phi0) -> Ay psi0 lands in Pi(1) via the implication clause
  FormulaPtr f = parse("(Ex: (x in a)) -> (Ay: (y = y))");
  CHECK(classify_fleischmann(f).is(ShapeKind::Pi, 1));
}

TEST_CASE("classify_fleischmann: levels stack") {
  // exists-over-forall needs Sigma(2)
  FormulaPtr f = parse("Ex: (Ay: (y in x))");
  CHECK(classify_fleischmann(f).is(ShapeKind::Sigma, 2));
  // negation over a quantifier is outside the closure rules
  CHECK(classify_fleischmann(parse("~(Ex: (x = x))")).is(ShapeKind::NotInFamily));
}

TEST_CASE("j_height: examples") {
  CHECK(j_height(parse("Ax: Ey: (x in y)")).value == 0);
  CHECK(j_height(parse("j(x) in j(x)")).value == 2);

  // E x in j(y): psi(j(x)) has height 2: bound contributes 1, body 1
  FormulaPtr body = mk_in(Term::mk_japp(0, 1), v(2));
  FormulaPtr f = mk_bexists(0, Term::mk_japp(1, 1), body);
  CHECK(j_height(f).value == 2);
}

TEST_CASE("j_height: outside the family") {
  FormulaPtr inner = mk_exists(0, mk_in(Term::mk_japp(0, 1), v(1)));
  CHECK_THROWS_AS(j_height(mk_not(inner)), HierarchyError);
}

TEST_CASE("j_height: additive over conjunction, invariant under negation") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Gen g(seed + 99);
    FormulaPtr a = g.dj0(3);
    FormulaPtr b = g.dj0(2);
    unsigned ha = j_height_raw(a), hb = j_height_raw(b);
    CHECK(j_height_raw(mk_and(a, b)) == ha + hb);
    CHECK(j_height_raw(mk_not(a)) == ha);
    CHECK(j_height(mk_and(a, b)).value == ha + hb);
  }
}
