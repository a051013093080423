#include "setj/hierarchy.hpp"

#include <map>
#include <set>

namespace setj {

std::string HierarchyClass::to_string() const {
  switch (kind) {
    case ShapeKind::Delta0: return "Delta0";
    case ShapeKind::Sigma: return "Sigma(" + std::to_string(level) + ")";
    case ShapeKind::Pi: return "Pi(" + std::to_string(level) + ")";
    case ShapeKind::NotInFamily: return "NotInFamily";
  }
  return "?";
}

namespace {

// No unbounded quantifiers anywhere. Abstract atoms count as atomic.
bool bounded(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Quant:
      return false;
    case Formula::Kind::Not:
      return bounded(f->left);
    case Formula::Kind::Bin:
      return bounded(f->left) && bounded(f->right);
    case Formula::Kind::BQuant:
      return bounded(f->body);
    default:
      return true;
  }
}

// Substitution instance of a j-free formula: every j-application sits on a
// variable free at that position (or on a constant).
bool substitution_instance_of_jfree(const FormulaPtr& f, std::set<VarIndex>& bound) {
  auto term_ok = [&](const Term& t) {
    if (!t.is_japp()) return true;
    if (t.base_is_const) return true;
    return bound.count(t.var) == 0;
  };
  switch (f->kind) {
    case Formula::Kind::Atom:
    case Formula::Kind::RankLess:
      return term_ok(f->lhs) && term_ok(f->rhs);
    case Formula::Kind::Sat: {
      if (!term_ok(f->model)) return false;
      for (const auto& a : f->args)
        if (!term_ok(a)) return false;
      return true;
    }
    case Formula::Kind::Not:
      return substitution_instance_of_jfree(f->left, bound);
    case Formula::Kind::Bin:
      return substitution_instance_of_jfree(f->left, bound) &&
             substitution_instance_of_jfree(f->right, bound);
    case Formula::Kind::Quant:
    case Formula::Kind::BQuant: {
      if (f->kind == Formula::Kind::BQuant && !term_ok(f->bound)) return false;
      bool was = bound.count(f->var) != 0;
      bound.insert(f->var);
      bool ok = substitution_instance_of_jfree(f->body, bound);
      if (!was) bound.erase(f->var);
      return ok;
    }
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
      return true;
  }
  return false;
}

bool is_si_jfree(const FormulaPtr& f) {
  std::set<VarIndex> bound;
  return substitution_instance_of_jfree(f, bound);
}

// Membership in the Delta0 layer of the Sigma_inf-based family.
bool is_dj0(const FormulaPtr& f) {
  if (is_si_jfree(f)) return true;
  switch (f->kind) {
    case Formula::Kind::Not:
      return is_dj0(f->left);
    case Formula::Kind::Bin:
      return is_dj0(f->left) && is_dj0(f->right);
    case Formula::Kind::BQuant:
      return is_dj0(f->body);
    default:
      // Unbounded quantifiers over non-substitution-instance bodies leave
      // the Delta0 layer.
      return false;
  }
}

struct PrefixEntry {
  Quant q;
  VarIndex var;
};

HierarchyClass classify_prenex(const FormulaPtr& f, Family family,
                               bool (*matrix_pred)(const FormulaPtr&),
                               const char* matrix_name) {
  HierarchyClass out;
  out.family = family;

  std::vector<PrefixEntry> prefix;
  FormulaPtr cur = f;
  std::string path = "root";
  while (true) {
    if (matrix_pred(cur)) break;
    if (cur->kind != Formula::Kind::Quant) {
      out.kind = ShapeKind::NotInFamily;
      out.certificate.push_back("matrix not " + std::string(matrix_name) + " at " + path);
      return out;
    }
    if (!prefix.empty() && prefix.back().q == cur->q) {
      out.kind = ShapeKind::NotInFamily;
      out.certificate.push_back("repeated " +
                                std::string(cur->q == Quant::Forall ? "forall" : "exists") +
                                " in prefix at " + path + " (strict reading)");
      return out;
    }
    prefix.push_back({cur->q, cur->var});
    out.certificate.push_back(std::string("prefix: ") +
                              (cur->q == Quant::Forall ? "forall v" : "exists v") +
                              std::to_string(cur->var));
    cur = cur->body;
    path += ".body";
  }

  out.certificate.push_back(std::string("matrix: ") + matrix_name);
  if (prefix.empty()) {
    out.kind = ShapeKind::Delta0;
    out.level = 0;
  } else {
    out.kind = prefix.front().q == Quant::Exists ? ShapeKind::Sigma : ShapeKind::Pi;
    out.level = static_cast<unsigned>(prefix.size());
  }
  out.certificate.push_back("verdict: " + out.to_string());
  return out;
}

}  // namespace

HierarchyClass classify_levy(const FormulaPtr& f) {
  if (mentions_j(f)) {
    HierarchyClass out;
    out.family = Family::Levy;
    out.kind = ShapeKind::NotInFamily;
    out.certificate.push_back("j-symbol present; not a Levy formula");
    return out;
  }
  return classify_prenex(f, Family::Levy, &bounded, "bounded");
}

HierarchyClass classify_j(const FormulaPtr& f) {
  return classify_prenex(f, Family::LevyJ, &bounded, "bounded");
}

HierarchyClass classify_sigma_inf(const FormulaPtr& f) {
  return classify_prenex(f, Family::SigmaInfBased, &is_dj0,
                         "Delta0 of the Sigma_inf-based family");
}

// ---------------------------------------------------------------------------
// Levy-Fleischmann hierarchy

namespace {

struct FleischmannMemo {
  // keyed by node identity; values per level
  std::map<std::pair<const Formula*, unsigned>, bool> sigma, pi;

  bool usigma(const FormulaPtr& f, unsigned n);
  bool upi(const FormulaPtr& f, unsigned n);
};

bool FleischmannMemo::usigma(const FormulaPtr& f, unsigned n) {
  if (n == 0) return bounded(f);
  auto key = std::make_pair(f.get(), n);
  auto it = sigma.find(key);
  if (it != sigma.end()) return it->second;
  bool r = false;
  if (upi(f, n - 1)) {
    r = true;
  } else {
    switch (f->kind) {
      case Formula::Kind::Bin:
        if (f->conn == Conn::And || f->conn == Conn::Or)
          r = usigma(f->left, n) && usigma(f->right, n);
        break;
      case Formula::Kind::BQuant:
        r = usigma(f->body, n);
        break;
      case Formula::Kind::Quant:
        if (f->q == Quant::Exists) r = usigma(f->body, n);
        break;
      default:
        break;
    }
  }
  sigma.emplace(key, r);
  return r;
}

bool FleischmannMemo::upi(const FormulaPtr& f, unsigned n) {
  if (n == 0) return bounded(f);
  auto key = std::make_pair(f.get(), n);
  auto it = pi.find(key);
  if (it != pi.end()) return it->second;
  bool r = false;
  if (usigma(f, n - 1)) {
    r = true;
  } else {
    switch (f->kind) {
      case Formula::Kind::Bin:
        if (f->conn == Conn::And || f->conn == Conn::Or)
          r = upi(f->left, n) && upi(f->right, n);
        else if (f->conn == Conn::Implies)
          // phi -> psi with phi in the Sigma class of the same level.
          r = usigma(f->left, n) && upi(f->right, n);
        break;
      case Formula::Kind::BQuant:
        r = upi(f->body, n);
        break;
      case Formula::Kind::Quant:
        if (f->q == Quant::Forall) r = upi(f->body, n);
        break;
      default:
        break;
    }
  }
  pi.emplace(key, r);
  return r;
}

unsigned fleischmann_bound(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Not:
      return fleischmann_bound(f->left);
    case Formula::Kind::Bin:
      return fleischmann_bound(f->left) + fleischmann_bound(f->right) +
             (f->conn == Conn::Implies ? 1 : 0);
    case Formula::Kind::Quant:
      return 1 + fleischmann_bound(f->body);
    case Formula::Kind::BQuant:
      return fleischmann_bound(f->body);
    default:
      return 0;
  }
}

}  // namespace

HierarchyClass classify_fleischmann(const FormulaPtr& f) {
  HierarchyClass out;
  out.family = Family::Fleischmann;
  if (bounded(f)) {
    out.kind = ShapeKind::Delta0;
    out.certificate.push_back("bounded formula");
    out.certificate.push_back("verdict: Delta0");
    return out;
  }
  FleischmannMemo memo;
  unsigned bound = fleischmann_bound(f) + 2;
  unsigned least_sigma = bound + 1, least_pi = bound + 1;
  for (unsigned n = 1; n <= bound; ++n) {
    if (least_sigma > bound && memo.usigma(f, n)) least_sigma = n;
    if (least_pi > bound && memo.upi(f, n)) least_pi = n;
    if (least_sigma <= bound || least_pi <= bound) break;
  }
  if (least_sigma > bound && least_pi > bound) {
    out.kind = ShapeKind::NotInFamily;
    out.certificate.push_back(
        "not generated by the closure rules (negation or implication over "
        "an unbounded pattern)");
    return out;
  }
  if (least_sigma <= bound && (least_pi > bound || least_sigma <= least_pi)) {
    out.kind = ShapeKind::Sigma;
    out.level = least_sigma;
    if (least_pi == least_sigma)
      out.certificate.push_back("also Pi(" + std::to_string(least_pi) + ")");
  } else {
    out.kind = ShapeKind::Pi;
    out.level = least_pi;
  }
  out.certificate.push_back("verdict: " + out.to_string());
  return out;
}

// ---------------------------------------------------------------------------
// j-height

unsigned j_height_raw(const FormulaPtr& f) {
  auto term_power = [](const Term& t) -> unsigned { return t.is_japp() ? t.power : 0; };
  switch (f->kind) {
    case Formula::Kind::Atom:
    case Formula::Kind::RankLess:
      return term_power(f->lhs) + term_power(f->rhs);
    case Formula::Kind::Sat: {
      unsigned s = term_power(f->model);
      for (const auto& a : f->args) s += term_power(a);
      return s;
    }
    case Formula::Kind::Not:
      return j_height_raw(f->left);
    case Formula::Kind::Bin:
      return j_height_raw(f->left) + j_height_raw(f->right);
    case Formula::Kind::Quant:
      return j_height_raw(f->body);
    case Formula::Kind::BQuant:
      return term_power(f->bound) + j_height_raw(f->body);
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
      return 0;
  }
  return 0;
}

JHeight j_height(const FormulaPtr& f) {
  HierarchyClass c = classify_sigma_inf(f);
  if (c.kind == ShapeKind::NotInFamily) {
    std::string why = c.certificate.empty() ? "" : (": " + c.certificate.front());
    throw HierarchyError("j-height undefined outside the Sigma_inf-based family" + why);
  }
  return JHeight{j_height_raw(f)};
}

}  // namespace setj
