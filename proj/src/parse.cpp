#include "setj/parse.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace setj {

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class TextParser {
 public:
  explicit TextParser(const std::string& s) : src_(s) {}

  FormulaPtr run() {
    FormulaPtr f = formula();
    skip_ws();
    if (pos_ != src_.size()) fail("trailing input");
    return f;
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;
  std::map<std::string, VarIndex> names_;
  VarIndex next_index_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_str(const std::string& s) {
    skip_ws();
    if (src_.compare(pos_, s.size(), s) == 0) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  std::string peek_ident() {
    skip_ws();
    std::size_t i = pos_;
    if (i >= src_.size() || !(std::isalpha(static_cast<unsigned char>(src_[i])) || src_[i] == '_'))
      return "";
    std::string out;
    while (i < src_.size() && ident_char(src_[i])) out += src_[i++];
    return out;
  }

  std::string take_ident() {
    std::string id = peek_ident();
    if (id.empty()) fail("expected identifier");
    pos_ += id.size();
    return id;
  }

  std::uint64_t take_nat() {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected number");
    std::uint64_t n = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      n = n * 10 + static_cast<std::uint64_t>(src_[pos_++] - '0');
    return n;
  }

  VarIndex var_index(const std::string& name) {
    if (name.size() > 1 && name[0] == 'v') {
      bool digits = true;
      for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
      if (digits) {
        VarIndex idx = static_cast<VarIndex>(std::stoul(name.substr(1)));
        next_index_ = std::max(next_index_, idx + 1);
        return idx;
      }
    }
    auto it = names_.find(name);
    if (it != names_.end()) return it->second;
    VarIndex idx = next_index_++;
    names_.emplace(name, idx);
    return idx;
  }

  bool is_reserved(const std::string& id) {
    return id == "in" || id == "T" || id == "F" || id == "j" || id == "kappa" ||
           id == "Vkappa" || id == "omega";
  }

  Term term() {
    skip_ws();
    if (eat('#')) return Term::mk_const(take_nat());
    std::string id = peek_ident();
    if (id.empty()) fail("expected term");
    if (id == "j") {
      pos_ += id.size();
      std::uint32_t power = 1;
      if (eat('^')) power = static_cast<std::uint32_t>(take_nat());
      if (!eat('(')) fail("expected '(' after j");
      Term inner = term();
      if (!eat(')')) fail("expected ')'");
      if (power == 0) fail("j power must be >= 1");
      // Fold nested applications; reject j of a j-free compound (none exist).
      Term out = inner;
      for (std::uint32_t i = 0; i < power; ++i) out = out.j_applied();
      return out;
    }
    if (id == "kappa") { pos_ += id.size(); return Term::mk_const(kKappaSlot); }
    if (id == "Vkappa") { pos_ += id.size(); return Term::mk_const(kVKappaSlot); }
    if (id == "omega") { pos_ += id.size(); return Term::mk_const(kOmegaSlot); }
    if (is_reserved(id)) fail("reserved word '" + id + "' used as term");
    pos_ += id.size();
    return Term::mk_var(var_index(id));
  }

  // Tries to read a quantifier head at the current position: 'A'/'E',
  // possibly glued to the variable name as in "Ax:".
  std::optional<FormulaPtr> quantifier() {
    skip_ws();
    std::size_t save = pos_;
    std::string id = peek_ident();
    if (id.empty() || (id[0] != 'A' && id[0] != 'E')) return std::nullopt;
    Quant q = id[0] == 'A' ? Quant::Forall : Quant::Exists;
    std::string varname;
    if (id.size() > 1) {
      pos_ += id.size();
      varname = id.substr(1);
    } else {
      pos_ += 1;
      std::string v = peek_ident();
      if (v.empty() || is_reserved(v)) {
        pos_ = save;
        return std::nullopt;
      }
      pos_ += v.size();
      varname = v;
    }
    std::optional<Term> bound;
    if (eat_str("in")) bound = term();
    if (!eat(':')) {
      pos_ = save;
      return std::nullopt;
    }
    VarIndex v = var_index(varname);
    FormulaPtr body = formula();
    if (bound) return mk_bquant(q, v, *bound, body);
    return mk_quant(q, v, body);
  }

  FormulaPtr unary() {
    skip_ws();
    if (eat('~')) return mk_not(unary());
    if (auto qf = quantifier()) return *qf;
    if (peek() == '(') {
      eat('(');
      FormulaPtr f = formula();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    std::string id = peek_ident();
    if (id == "T" && !ident_char_after(id)) { pos_ += 1; return mk_top(); }
    if (id == "F" && !ident_char_after(id)) { pos_ += 1; return mk_bottom(); }
    Term lhs = term();
    skip_ws();
    if (eat('=')) return mk_eq(lhs, term());
    if (eat_str("in")) return mk_in(lhs, term());
    fail("expected 'in' or '=' in atom");
  }

  bool ident_char_after(const std::string& id) {
    skip_ws();
    return pos_ + id.size() < src_.size() && ident_char(src_[pos_ + id.size()]);
  }

  FormulaPtr conjunct() {
    FormulaPtr f = unary();
    while (true) {
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == '&') {
        ++pos_;
        f = mk_and(f, unary());
      } else {
        return f;
      }
    }
  }

  FormulaPtr disjunct() {
    FormulaPtr f = conjunct();
    while (true) {
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == '|') {
        ++pos_;
        f = mk_or(f, conjunct());
      } else {
        return f;
      }
    }
  }

  FormulaPtr formula() {
    FormulaPtr f = disjunct();
    skip_ws();
    if (src_.compare(pos_, 2, "->") == 0) {
      pos_ += 2;
      return mk_implies(f, formula());
    }
    if (src_.compare(pos_, 3, "<->") == 0) {
      pos_ += 3;
      return mk_iff(f, formula());
    }
    return f;
  }
};

// --------------------------------------------------------------------------
// S-expressions

class SexprParser {
 public:
  explicit SexprParser(const std::string& s) : src_(s) {}

  FormulaPtr run() {
    FormulaPtr f = formula();
    skip_ws();
    if (pos_ != src_.size()) fail("trailing input");
    return f;
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= src_.size() || src_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string token() {
    skip_ws();
    std::string out;
    while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_])) &&
           src_[pos_] != '(' && src_[pos_] != ')')
      out += src_[pos_++];
    if (out.empty()) fail("expected token");
    return out;
  }

  std::uint64_t nat(const std::string& s) {
    if (s.empty()) fail("expected number");
    std::uint64_t n = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected number");
      n = n * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return n;
  }

  VarIndex var_of(const std::string& t) {
    if (t.size() < 2 || t[0] != 'v') fail("expected variable, got '" + t + "'");
    return static_cast<VarIndex>(nat(t.substr(1)));
  }

  Term term() {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '(') {
      ++pos_;
      std::string head = token();
      if (head == "const") {
        SetCode c = nat(token());
        expect(')');
        return Term::mk_const(c);
      }
      if (head == "j") {
        std::uint32_t power = static_cast<std::uint32_t>(nat(token()));
        Term base = term();
        expect(')');
        if (power == 0) fail("j power must be >= 1");
        if (base.is_var()) return Term::mk_japp(base.var, power);
        if (base.is_const()) return Term::mk_japp_const(base.code, power);
        fail("j applied to a non-variable term");
      }
      fail("unknown term head '" + head + "'");
    }
    std::string t = token();
    if (t == "kappa") return Term::mk_const(kKappaSlot);
    if (t == "Vkappa") return Term::mk_const(kVKappaSlot);
    if (t == "omega") return Term::mk_const(kOmegaSlot);
    return Term::mk_var(var_of(t));
  }

  bool at_term_start() {
    skip_ws();
    if (pos_ >= src_.size()) return false;
    if (src_[pos_] == ')') return false;
    if (src_[pos_] != '(') return true;
    // Peek the head of the parenthesized form.
    std::size_t i = pos_ + 1;
    std::string head;
    while (i < src_.size() && !std::isspace(static_cast<unsigned char>(src_[i])) &&
           src_[i] != '(' && src_[i] != ')')
      head += src_[i++];
    return head == "const" || head == "j";
  }

  FormulaPtr formula() {
    expect('(');
    std::string head = token();
    FormulaPtr out;
    if (head == "top") {
      out = mk_top();
    } else if (head == "bot") {
      out = mk_bottom();
    } else if (head == "in" || head == "eq") {
      Term a = term(), b = term();
      out = mk_atom(head == "in" ? Rel::In : Rel::Eq, a, b);
    } else if (head == "rankless") {
      Term a = term(), b = term();
      out = mk_rank_less(a, b);
    } else if (head == "not") {
      out = mk_not(formula());
    } else if (head == "and" || head == "or" || head == "imp") {
      FormulaPtr a = formula(), b = formula();
      Conn c = head == "and" ? Conn::And : head == "or" ? Conn::Or : Conn::Implies;
      out = mk_bin(c, a, b);
    } else if (head == "forall" || head == "exists") {
      VarIndex v = var_of(token());
      out = mk_quant(head == "forall" ? Quant::Forall : Quant::Exists, v, formula());
    } else if (head == "bforall" || head == "bexists") {
      VarIndex v = var_of(token());
      Term bound = term();
      out = mk_bquant(head == "bforall" ? Quant::Forall : Quant::Exists, v, bound, formula());
    } else if (head == "sat") {
      Term model = term();
      FormulaPtr coded = formula();
      std::vector<Term> args;
      while (at_term_start()) args.push_back(term());
      out = mk_sat(model, coded, std::move(args));
    } else {
      fail("unknown form '" + head + "'");
    }
    expect(')');
    return out;
  }
};

}  // namespace

FormulaPtr parse(const std::string& text) { return TextParser(text).run(); }

FormulaPtr parse_sexpr(const std::string& text) { return SexprParser(text).run(); }

FormulaPtr parse_any(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '(') return parse_sexpr(text);
  return parse(text);
}

}  // namespace setj
