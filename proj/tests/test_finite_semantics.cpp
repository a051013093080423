#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "setj/eval.hpp"
#include "setj/parse.hpp"
#include "setj/universe.hpp"

using namespace setj;

namespace {

Term v(VarIndex i) { return Term::mk_var(i); }

// Layer-raising j for a layered V_5: wraps into a singleton while that stays
// inside the universe, identity above.
std::vector<SetCode> singleton_j(const FiniteUniverse& u) {
  std::vector<SetCode> j(u.size());
  for (SetCode e = 0; e < u.size(); ++e)
    j[e] = u.rank(e) + 1 < u.rank_cap() ? code_singleton(e) : e;
  return j;
}

}  // namespace

TEST_CASE("universe sizes") {
  CHECK(FiniteUniverse::build(1).size() == 1);
  CHECK(FiniteUniverse::build(2).size() == 2);
  CHECK(FiniteUniverse::build(3).size() == 4);

  // Iterating the powerset from the empty set gives the expected counts.
  std::size_t count = 0;  // |V_0|
  for (unsigned k = 1; k <= 5; ++k) {
    count = std::size_t{1} << count;
    CHECK(FiniteUniverse::build(k).size() == count);
  }
  CHECK(FiniteUniverse::build(4).size() == 16);
  CHECK(FiniteUniverse::build(5).size() == 65536);
  CHECK_THROWS_AS(FiniteUniverse::build(6), UniverseError);
}

TEST_CASE("membership is extensional and well-founded by construction") {
  FiniteUniverse u = FiniteUniverse::build(4);
  for (SetCode a = 0; a < u.size(); ++a) {
    CHECK_FALSE(FiniteUniverse::member(a, a));
    for (SetCode b = 0; b < u.size(); ++b) {
      if (a == b) continue;
      // distinct codes differ in some member
      bool differ = false;
      for (SetCode m = 0; m < u.size(); ++m)
        if (FiniteUniverse::member(m, a) != FiniteUniverse::member(m, b)) differ = true;
      CHECK(differ);
    }
  }
}

TEST_CASE("rank basics") {
  FiniteUniverse u = FiniteUniverse::build(4);
  CHECK(u.rank(0) == 0);                    // empty set
  CHECK(u.rank(code_singleton(0)) == 1);    // {0}
  CHECK(u.rank(code_singleton(code_singleton(0))) == 2);
  for (SetCode e = 0; e < u.size(); ++e) CHECK(u.rank(e) <= 3);
}

TEST_CASE("naturals and omega bound") {
  FiniteUniverse u = FiniteUniverse::build(5);
  // 0, 1, 2, 3, 4 are present in V_5
  CHECK(u.naturals().size() == 5);
  CHECK(u.is_natural(0));
  CHECK(u.is_natural(1));
  CHECK(u.is_natural(3));   // 2 = {0,1}
  CHECK(u.is_natural(11));  // 3 = {0,1,2}
  CHECK_FALSE(u.is_natural(2));

  FormulaPtr all_nat_le = parse("A m in omega: m in #11 | m = #11 | #11 in m");
  CHECK(eval(all_nat_le, Valuation{{}, &u}));
}

TEST_CASE("build errors") {
  CHECK_THROWS_AS(FiniteUniverse::build(4, {}, std::vector<SetCode>{0, 1}), UniverseError);
  CHECK_THROWS_AS(FiniteUniverse::build(4, {3, 2}), UniverseError);
  // j must raise layers by at most one: map W_0 straight to rank 3.
  std::vector<SetCode> bad(16);
  for (SetCode e = 0; e < 16; ++e) bad[e] = e;
  bad[0] = code_singleton(code_singleton(code_singleton(0)));
  CHECK_THROWS_AS(FiniteUniverse::build(4, {1, 2, 3, 4}, bad), UniverseError);
}

TEST_CASE("eval basics") {
  FiniteUniverse u = FiniteUniverse::build(3);
  CHECK(eval(parse("x = x"), Valuation{{}, &u}));
  CHECK(eval(parse("Ax: Ey: (x = y)"), Valuation{{}, &u}));
  CHECK_FALSE(eval(parse("Ax: Ey: (x in y)"), Valuation{{}, &u}));

  // bounded exists over an empty j-image
  std::vector<SetCode> jzero(u.size(), 0);
  FiniteUniverse uz = FiniteUniverse::build(3, {}, jzero);
  CHECK_FALSE(eval(parse("E x in j(a): x = x"), Valuation{{}, &uz}));
}

TEST_CASE("j-term evaluation uses the interpretation") {
  FiniteUniverse u = FiniteUniverse::build(4, {}, [] {
    std::vector<SetCode> j(16);
    for (SetCode e = 0; e < 16; ++e) j[e] = e;
    j[0] = 1;  // j(0) = {0}
    j[1] = 2;  // j({0}) = {{0}}
    return j;
  }());
  // j^2(x) with x = empty set lands on {{0}}
  FormulaPtr f = parse("j^2(x) = #2");
  CHECK(eval(f, Valuation{Assignment{{0}}, &u}));
}

TEST_CASE("check_equivalence finds the canonical first counterexample") {
  FiniteUniverse u = FiniteUniverse::build(3);
  FormulaPtr f = parse("v0 in v1");
  FormulaPtr g = parse("v1 in v0");
  EquivalenceResult r = check_equivalence(f, g, u);
  REQUIRE_FALSE(r.equal);
  CHECK(r.counterexample.get(0) == 0);  // x = empty set
  CHECK(r.counterexample.get(1) == 1);  // y = {empty set}
  CHECK(r.lhs_value == true);

  CHECK(check_equivalence(f, f, u).equal);
}

TEST_CASE("layers, degree, representatives") {
  FiniteUniverse u = FiniteUniverse::build(5, {2, 3, 4, 5}, singleton_j(FiniteUniverse::build(5)));
  CHECK(u.layer_count() == 4);
  CHECK(u.degree(0) == 0);
  CHECK(u.degree(code_singleton(0)) == 0);                  // rank 1 < 2
  CHECK(u.degree(code_singleton(code_singleton(0))) == 1);  // rank 2
  CHECK(u.layer_rep(0) == 3);      // V_2 as an element
  CHECK(u.layer_rep(1) == 15);     // V_3
  CHECK(u.layer_rep(2) == 65535);  // V_4
  CHECK(u.rank(u.layer_rep(2)) == 4);
}

TEST_CASE("degree bookkeeping: deg(b) <= deg(a)+e under layer-raising j") {
  FiniteUniverse base = FiniteUniverse::build(4);
  FiniteUniverse u = FiniteUniverse::build(4, {1, 2, 3, 4}, [&] {
    std::vector<SetCode> j(base.size());
    for (SetCode e = 0; e < base.size(); ++e)
      j[e] = base.rank(e) + 1 < 4 ? code_singleton(e) : e;
    return j;
  }());
  for (SetCode a = 0; a < u.size(); ++a) {
    for (unsigned e = 0; e <= 3; ++e) {
      SetCode img = u.apply_j_power(a, e);
      for (SetCode b : u.members(img)) CHECK(u.degree(b) <= u.degree(a) + e);
    }
  }
}

TEST_CASE("satisfaction atom relativizes to the model's members") {
  FiniteUniverse u = FiniteUniverse::build(4);
  // "some two distinct elements exist" holds relative to V_2 = {0, {0}}
  FormulaPtr coded = mk_exists(0, mk_exists(1, mk_not(mk_eq(v(0), v(1)))));
  FormulaPtr sat = mk_sat(Term::mk_const(3), coded, {});
  CHECK(eval(sat, Valuation{{}, &u}));
  // ... but not relative to a singleton model {0}
  FormulaPtr sat1 = mk_sat(Term::mk_const(code_singleton(0)), coded, {});
  CHECK_FALSE(eval(sat1, Valuation{{}, &u}));
}

TEST_CASE("rank-less atom") {
  FiniteUniverse u = FiniteUniverse::build(4);
  CHECK(eval(mk_rank_less(v(0), v(1)),
             Valuation{Assignment{{0, code_singleton(0)}}, &u}));
  CHECK_FALSE(eval(mk_rank_less(v(0), v(1)), Valuation{Assignment{{0, 0}}, &u}));
  // everything ranks below omega
  CHECK(eval(mk_rank_less(v(0), Term::mk_const(kOmegaSlot)),
             Valuation{Assignment{{15}}, &u}));
}

TEST_CASE("check_elementarity") {
  FiniteUniverse id4 = FiniteUniverse::build(4);
  FormulaPtr f = parse("x in y -> x in y");
  CHECK(check_elementarity(parse("x in y"), id4).holds);

  // constant-to-empty j violates "x = {y} -> j(x) = {j(y)}" style instances
  std::vector<SetCode> jz(16, 0);
  FiniteUniverse uz = FiniteUniverse::build(4, {}, jz);
  FormulaPtr inst = parse("y in x");
  ElementarityResult r = check_elementarity(inst, uz);
  CHECK_FALSE(r.holds);
}

TEST_CASE("code helpers agree with the encoding") {
  CHECK(code_singleton(0) == 1);
  CHECK(code_unordered_pair(0, 1) == 3);
  CHECK(code_kuratowski_pair(0, 0) == 2);  // <0,0> = {{0}}
  CHECK(code_big_union(code_unordered_pair(code_singleton(0), code_singleton(1))) ==
        code_unordered_pair(0, 1));
  FiniteUniverse u = FiniteUniverse::build(4);
  // Kuratowski pairs of V_2 elements land in V_4
  for (SetCode a = 0; a < 2; ++a)
    for (SetCode b = 0; b < 2; ++b) CHECK(u.contains(code_kuratowski_pair(a, b)));
}
