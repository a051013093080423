#pragma once

#include <optional>
#include <variant>

#include "setj/formula.hpp"
#include "setj/universe.hpp"

namespace setj {

struct Valuation {
  Assignment assignment;
  const FiniteUniverse* universe = nullptr;
};

// Tarskian satisfaction. Unbounded quantifiers range over the whole
// universe; bounded quantifiers over the members of the evaluated bound
// term; j-terms go through the universe's j interpretation. The abstract
// atoms expand concretely here: rank comparison on actual ranks, and the
// satisfaction atom as truth relative to the members of the model value
// (layers standing in for the V_{j^m(kappa)}).
bool eval(const FormulaPtr& f, const Valuation& v);

struct EquivalenceResult {
  bool equal = true;
  Assignment counterexample;  // set when equal is false
  bool lhs_value = false;     // value of f at the counterexample
};

// Exhaustive over all assignments of the shared free variables, in canonical
// order (ascending variable index, last variable cycling fastest). Returns
// the first counterexample. Partitions work across SETJ_WORKERS threads with
// a deterministic merge.
EquivalenceResult check_equivalence(const FormulaPtr& f, const FormulaPtr& g,
                                    const FiniteUniverse& u);

struct ElementarityResult {
  bool holds = true;
  Assignment counterexample;
};

// Verifies forall x-vec [phi(x-vec) -> phi(j(x-vec))] in u for j-free phi.
ElementarityResult check_elementarity(const FormulaPtr& f, const FiniteUniverse& u);

// Worker count used by assignment sweeps (env SETJ_WORKERS, default 1).
unsigned sweep_workers();

}  // namespace setj
