#pragma once

#include <string>
#include <vector>

#include "temper/rho.hpp"

namespace temper {

struct FactorRep {
  std::string repname;
  int index = 1;
};

struct ExprTerm {
  long mult = 1;
  bool trivial = false;
  long trivial_dim = 0;
  std::vector<FactorRep> factors;
  bool plus_dual = false;
};

// Surface form of a module description. The grammar:
//
//   module    := term (" + " term)*
//   term      := [int " * "] product [" +dual"] | "trivial(" int ")"
//   product   := factorrep (" x " factorrep)*
//   factorrep := repname "@" factor-index
//
// Factor indices are 1-based; factors an expression never mentions act
// trivially. Whitespace between tokens is ignored.
struct ModuleExpr {
  std::vector<ExprTerm> terms;

  // Canonical rendering: single spaces, multiplicity omitted when 1.
  // parse_module_expr(str()) reproduces the structure exactly.
  std::string str() const;
};

// Syntax-only parse; throws std::invalid_argument with the offending
// offset on malformed input. Representation names are not resolved here.
ModuleExpr parse_module_expr(const std::string& text);

// Resolves representation names against the factors of alg, checks every
// factor index, and returns a ModuleSpec that satisfies check_spec.
ModuleSpec lower_module_expr(const SemisimpleAlg& alg, const ModuleExpr& expr);

ModuleSpec parse_module(const SemisimpleAlg& alg, const std::string& text);

}  // namespace temper
