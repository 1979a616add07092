#pragma once

#include <string>
#include <utility>
#include <vector>

#include "temper/rootsys.hpp"

namespace temper {

// Dominant integral highest weight in fundamental-weight coordinates.
using HighestWeight = std::vector<long>;

struct WeightSystem {
  // Every weight of the representation with its multiplicity, Weyl
  // orbits fully expanded, sorted lexicographically.
  std::vector<std::pair<RatVec, long>> weights;
  long dim = 0;
};

long weyl_dimension(const RootSystem& rs, const HighestWeight& hw);
mpz_class weyl_dimension_big(const RootSystem& rs, const HighestWeight& hw);

// Multiplicities via the Freudenthal recursion, then orbit expansion.
// Results are memoized per (algebra, weight); the returned reference
// stays valid for the program lifetime.
const WeightSystem& weight_system(const RootSystem& rs,
                                  const HighestWeight& hw);

RatVec weight_vector(const RootSystem& rs, const HighestWeight& hw);
HighestWeight dual_weight(const RootSystem& rs, const HighestWeight& hw);

// Dictionary of representation names used in module expressions:
//   std, adjoint, fund(i), sym(k) [A], ext(k) [A], ext0(k) [C],
//   sym0(2) [B,D], spin [B], halfspin_plus / halfspin_minus [D].
// Throws std::invalid_argument when the name does not apply.
HighestWeight named_rep(const RootSystem& rs, const std::string& name);

std::string hw_str(const HighestWeight& hw);

}  // namespace temper
