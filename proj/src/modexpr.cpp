#include "temper/modexpr.hpp"

#include <cctype>
#include <stdexcept>

namespace temper {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("module expression \"" + text + "\" offset " +
                                std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    if (!eat(c)) fail("expected " + what);
  }

  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  // The word starting at the next non-space position, without consuming it.
  std::string peek_word() {
    skip_ws();
    std::size_t p = pos;
    if (p >= text.size() || std::isdigit(static_cast<unsigned char>(text[p])))
      return "";
    std::string w;
    while (p < text.size() && word_char(text[p])) w += text[p++];
    return w;
  }

  std::string take_word() {
    std::string w = peek_word();
    pos += w.size();
    return w;
  }

  long take_int(const std::string& what) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == start) fail("expected " + what);
    return std::stol(text.substr(start, pos - start));
  }
};

FactorRep parse_factorrep(Cursor& cur) {
  FactorRep f;
  f.repname = cur.take_word();
  if (f.repname.empty()) cur.fail("expected representation name");
  if (cur.peek() == '(') {
    ++cur.pos;
    long arg = cur.take_int("integer argument");
    cur.expect(')', "')'");
    f.repname += "(" + std::to_string(arg) + ")";
  }
  cur.expect('@', "'@' after representation name");
  long idx = cur.take_int("factor index");
  f.index = static_cast<int>(idx);
  return f;
}

ExprTerm parse_term(Cursor& cur) {
  ExprTerm t;
  bool has_mult = false;
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    t.mult = cur.take_int("multiplicity");
    if (t.mult < 1) cur.fail("multiplicity must be positive");
    cur.expect('*', "'*' after multiplicity");
    has_mult = true;
  }
  if (cur.peek_word() == "trivial") {
    if (has_mult) cur.fail("multiplicity prefix not allowed before trivial(...)");
    cur.take_word();
    cur.expect('(', "'(' after trivial");
    t.trivial_dim = cur.take_int("trivial dimension");
    if (t.trivial_dim < 1) cur.fail("trivial dimension must be positive");
    cur.expect(')', "')'");
    t.trivial = true;
    return t;
  }
  t.factors.push_back(parse_factorrep(cur));
  while (cur.peek_word() == "x") {
    cur.take_word();
    t.factors.push_back(parse_factorrep(cur));
  }
  std::size_t mark = cur.pos;
  if (cur.eat('+') && cur.peek_word() == "dual") {
    cur.take_word();
    if (cur.peek() == '@' || cur.peek() == '(')
      cur.fail("\"dual\" is not a representation name");
    t.plus_dual = true;
  } else {
    cur.pos = mark;
  }
  return t;
}

}  // namespace

ModuleExpr parse_module_expr(const std::string& text) {
  Cursor cur{text};
  if (cur.peek() == '\0') cur.fail("empty module expression");
  ModuleExpr expr;
  expr.terms.push_back(parse_term(cur));
  while (cur.peek() != '\0') {
    cur.expect('+', "'+' between terms");
    expr.terms.push_back(parse_term(cur));
  }
  return expr;
}

std::string ModuleExpr::str() const {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    const ExprTerm& t = terms[i];
    if (t.trivial) {
      out += "trivial(" + std::to_string(t.trivial_dim) + ")";
      continue;
    }
    if (t.mult != 1) out += std::to_string(t.mult) + " * ";
    for (std::size_t j = 0; j < t.factors.size(); ++j) {
      if (j) out += " x ";
      out += t.factors[j].repname + "@" + std::to_string(t.factors[j].index);
    }
    if (t.plus_dual) out += " +dual";
  }
  return out;
}

ModuleSpec lower_module_expr(const SemisimpleAlg& alg, const ModuleExpr& expr) {
  ModuleSpec spec;
  spec.trivial_dim = 0;
  for (const ExprTerm& t : expr.terms) {
    if (t.trivial) {
      spec.trivial_dim += t.trivial_dim;
      continue;
    }
    ModuleSummand s;
    s.mult = t.mult;
    s.plus_dual = t.plus_dual;
    s.factor_weights.assign(alg.factors.size(), HighestWeight{});
    for (const FactorRep& f : t.factors) {
      if (f.index < 1 || f.index > static_cast<int>(alg.factors.size())) {
        throw std::invalid_argument(
            "factor index " + std::to_string(f.index) + " out of range: " +
            alg.name() + " has " + std::to_string(alg.factors.size()) +
            " factor(s)");
      }
      HighestWeight& slot = s.factor_weights[f.index - 1];
      if (!slot.empty()) {
        throw std::invalid_argument("factor " + std::to_string(f.index) +
                                    " used twice in one product");
      }
      slot = named_rep(alg.factors[f.index - 1], f.repname);
    }
    spec.summands.push_back(std::move(s));
  }
  check_spec(alg, spec);
  return spec;
}

ModuleSpec parse_module(const SemisimpleAlg& alg, const std::string& text) {
  return lower_module_expr(alg, parse_module_expr(text));
}

}  // namespace temper
