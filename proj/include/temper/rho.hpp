#pragma once

#include <string>
#include <vector>

#include "temper/repkit.hpp"

namespace temper {

// Direct sum of simple algebras, realized in the concatenation of the
// factors' ambient coordinate spaces.
struct SemisimpleAlg {
  std::vector<RootSystem> factors;
  std::vector<int> offsets;
  int ambient_dim = 0;

  long dim() const;
  std::string name() const;  // "A1+C3"
  RatVec embed(int factor, const RatVec& v) const;
  // Cartan-subspace membership: orthogonality to every span normal.
  std::vector<RatVec> span_rows() const;
  // Dominant chamber: nonnegative pairing with every simple root.
  std::vector<RatVec> chamber_rows() const;
};

SemisimpleAlg make_alg(const std::vector<std::string>& names);

// One summand of a finite-dimensional module: an outer multiplicity, a
// highest weight per factor (empty = the factor acts trivially), and a
// flag that also adds the dual summand.
struct ModuleSummand {
  long mult = 1;
  std::vector<HighestWeight> factor_weights;
  bool plus_dual = false;
};

struct ModuleSpec {
  std::vector<ModuleSummand> summands;
  long trivial_dim = 0;
};

// Structural validation: per-summand factor counts and weight ranks must
// match alg, multiplicities must be positive, and fully trivial summands
// must use trivial_dim instead. Throws std::invalid_argument.
void check_spec(const SemisimpleAlg& alg, const ModuleSpec& spec);

long module_dim(const SemisimpleAlg& alg, const ModuleSpec& spec);
ModuleSpec module_dual(const SemisimpleAlg& alg, const ModuleSpec& spec);
bool has_invariant_vector(const SemisimpleAlg& alg, const ModuleSpec& spec);

// rho(Y) = 1/2 sum_lines m |l(Y)|. Opposite weights are merged into one
// line whose multiplicity counts both; zero weights are tracked only
// for dimension bookkeeping.
struct RhoFunction {
  int ambient_dim = 0;
  std::vector<std::pair<RatVec, long>> lines;
  long zero_mult = 0;
  long total_dim = 0;
};

RhoFunction module_weights(const SemisimpleAlg& alg, const ModuleSpec& spec);
// The half-sum over the adjoint module: rho_h(Y) = sum of positive-root
// values on the dominant chamber.
RhoFunction rho_h(const SemisimpleAlg& alg);
Rat rho_eval(const RhoFunction& f, const RatVec& y);

}  // namespace temper
