#pragma once

#include "temper/ratlp.hpp"
#include "temper/rho.hpp"

namespace temper {

struct PvResult {
  bool infinite = false;
  Rat value;        // p, meaningful when finite
  Rat inverse;      // 1/p; zero when infinite
  RatVec minimizer; // slice point attaining the minimum of rho_V
  long dim = 0;     // module dimension

  std::string str() const;  // "5/3" or "inf"
};

// p = inf{ t > 0 : rho_h <= t rho_V on the dominant chamber }, computed
// exactly as the reciprocal of min rho_V over the rho_h = 1 slice of
// the chamber. Infinite when rho_V vanishes somewhere on that slice.
PvResult compute_pv(const SemisimpleAlg& alg, const ModuleSpec& spec);

// The same slice minimization for arbitrary numerator/denominator line
// functions over a cone cut out by `cone_rows >= 0` and `span_rows = 0`.
// Every denominator line must be nonnegative on the cone; the result is
// substituted back and verified.
PvResult compute_pv_over_cone(const RhoFunction& rho_den,
                              const RhoFunction& rho_num,
                              const std::vector<RatVec>& cone_rows,
                              const std::vector<RatVec>& span_rows);

struct Verdict {
  bool tempered = false;
  PvResult p;
  RatVec witness;  // point with rho_h > rho_V when not tempered
  Rat rho_h_at_witness;
  Rat rho_v_at_witness;
};

// Decides rho_h <= rho_V for the adjoint function of `alg` against the
// module `spec`, with an exact witness on failure.
Verdict temperedness_check(const SemisimpleAlg& alg, const ModuleSpec& spec);

// Chain bound for a two-factor tensor product: p <= p1/d2 + p2/d1.
Rat tensor_bound(const Rat& p1, long d1, const Rat& p2, long d2);

// Exact verification of 1/p(V1 + V2) >= 1/p(V1) + 1/p(V2).
bool superadditivity_check(const SemisimpleAlg& alg, const ModuleSpec& v1,
                           const ModuleSpec& v2);

ModuleSpec module_concat(const ModuleSpec& a, const ModuleSpec& b);

}  // namespace temper
