#pragma once

#include <map>
#include <vector>

#include "setj/formula.hpp"

namespace setj {

// Alpha-renames so every binder uses a distinct index, disjoint from free
// indices. Deterministic: fresh indices are the smallest unused, allocated
// in left-to-right traversal order. Inner binders shadow outer ones.
FormulaPtr rename_apart(const FormulaPtr& f);

// Replaces free variables by constants naming universe elements. Missing
// slots become the empty set. Bound variables are untouched.
FormulaPtr substitute(const FormulaPtr& f, const Assignment& a);

// Replaces free occurrences of the listed variables by terms. The caller is
// responsible for capture (use on renamed-apart formulas with fresh targets).
FormulaPtr substitute_terms(const FormulaPtr& f, const std::map<VarIndex, Term>& repl);

// Subformula enumeration: every subformula precedes any formula containing
// it, duplicates merged, the formula itself last. Deterministic.
std::vector<FormulaPtr> subformulas(const FormulaPtr& f);

}  // namespace setj
