#pragma once

#include <string>
#include <vector>

#include "setj/formula.hpp"

namespace setj {

enum class Family : std::uint8_t { Levy, LevyJ, SigmaInfBased, Fleischmann };

enum class ShapeKind : std::uint8_t { Delta0, Sigma, Pi, NotInFamily };

// Certificate placing a formula in one of the hierarchies. Classification is
// literal (strict prenex): Sigma(n)/Pi(n) demand exactly the alternating
// unbounded prefix over a family matrix; repeated same-type quantifiers are
// the normalizer's business, not the classifier's. Provable (theory-relative)
// classification is deliberately not decided.
struct HierarchyClass {
  Family family = Family::Levy;
  ShapeKind kind = ShapeKind::NotInFamily;
  unsigned level = 0;  // Sigma/Pi only
  std::vector<std::string> certificate;

  bool is(ShapeKind k) const { return kind == k; }
  bool is(ShapeKind k, unsigned n) const { return kind == k && level == n; }

  std::string to_string() const;
};

// Levy hierarchy for j-free formulas; a j-symbol anywhere gives NotInFamily.
HierarchyClass classify_levy(const FormulaPtr& f);

// Same prenex discipline, atoms may mention j.
HierarchyClass classify_j(const FormulaPtr& f);

// Hierarchy over the Sigma_inf base: the Delta0 layer is generated from
// j-free formulas (with j-terms substituted for free variables) by
// connectives and quantifiers bounded by terms; Sigma(n)/Pi(n) add strict
// unbounded alternations on top.
HierarchyClass classify_sigma_inf(const FormulaPtr& f);

// Least-fixed-point membership in the bounded-quantifier-friendly hierarchy,
// implication clause included; reports the least level.
HierarchyClass classify_fleischmann(const FormulaPtr& f);

struct JHeight {
  unsigned value = 0;
};

struct HierarchyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Number of j-applications the formula needs evaluated: substituted j-powers
// summed over atoms, additive over connectives, bounded-by-j^l adds l,
// invariant under negation and unbounded quantifiers. Requires membership in
// the Sigma_inf-based family.
JHeight j_height(const FormulaPtr& f);

// The raw inductive computation, total on all formulas (used internally and
// by the truth-predicate builder after its own membership checks).
unsigned j_height_raw(const FormulaPtr& f);

}  // namespace setj
