#include "temper/pvcore.hpp"

#include <stdexcept>

namespace temper {

std::string PvResult::str() const {
  return infinite ? "inf" : rat_str(value);
}

PvResult compute_pv_over_cone(const RhoFunction& rho_den,
                              const RhoFunction& rho_num,
                              const std::vector<RatVec>& cone_rows,
                              const std::vector<RatVec>& span_rows) {
  if (rho_den.ambient_dim != rho_num.ambient_dim)
    throw std::invalid_argument("rho dimension mismatch");
  int n = rho_den.ambient_dim;
  int nlines = static_cast<int>(rho_num.lines.size());

  // Variables: the cone point Y, then one epigraph value per line of
  // the numerator. At the optimum s_j = |l_j . Y| because every s_j
  // carries positive cost.
  LinProgram lp;
  lp.nvars = n + nlines;
  lp.objective.assign(lp.nvars, Rat(0));
  for (int j = 0; j < nlines; ++j)
    lp.objective[n + j] = Rat(rho_num.lines[j].second) / 2;

  auto push_row = [&](const RatVec& coeff, Rel rel, const Rat& rhs) {
    lp.rows.push_back(LpRow{coeff, rel, rhs});
  };
  for (int j = 0; j < nlines; ++j) {
    const RatVec& l = rho_num.lines[j].first;
    RatVec above(lp.nvars, Rat(0)), below(lp.nvars, Rat(0));
    for (int i = 0; i < n; ++i) {
      above[i] = -l[i];
      below[i] = l[i];
    }
    above[n + j] = 1;
    below[n + j] = 1;
    push_row(above, Rel::GE, 0);
    push_row(below, Rel::GE, 0);
  }
  for (const RatVec& c : cone_rows) {
    RatVec row(lp.nvars, Rat(0));
    for (int i = 0; i < n; ++i) row[i] = c[i];
    push_row(row, Rel::GE, 0);
  }
  for (const RatVec& s : span_rows) {
    RatVec row(lp.nvars, Rat(0));
    for (int i = 0; i < n; ++i) row[i] = s[i];
    push_row(row, Rel::EQ, 0);
  }
  // Normalization: rho_den is linear on the cone, so the slice
  // rho_den = 1 is the single affine row (1/2) sum m_d (l_d . Y) = 1.
  RatVec norm(lp.nvars, Rat(0));
  for (const auto& [l, m] : rho_den.lines)
    for (int i = 0; i < n; ++i) norm[i] += Rat(m) * l[i] / 2;
  push_row(norm, Rel::EQ, 1);

  LpOutcome out = solve_lp(lp);
  if (out.status == LpStatus::Unbounded)
    throw std::logic_error("slice minimization cannot be unbounded");
  if (out.status == LpStatus::Infeasible)
    throw std::logic_error("denominator function vanishes on the cone");

  PvResult res;
  res.minimizer.assign(out.point.begin(), out.point.begin() + n);
  if (rho_eval(rho_den, res.minimizer) != 1)
    throw std::logic_error("slice constraint violated at the minimizer");
  if (rho_eval(rho_num, res.minimizer) != out.value)
    throw std::logic_error("epigraph values diverge from the minimizer");
  for (const RatVec& c : cone_rows)
    if (dot(c, res.minimizer) < 0)
      throw std::logic_error("minimizer left the cone");
  res.inverse = out.value;
  if (out.value == 0) {
    res.infinite = true;
  } else {
    res.value = 1 / out.value;
  }
  return res;
}

PvResult compute_pv(const SemisimpleAlg& alg, const ModuleSpec& spec) {
  PvResult res = compute_pv_over_cone(rho_h(alg), module_weights(alg, spec),
                                      alg.chamber_rows(), alg.span_rows());
  res.dim = module_dim(alg, spec);
  return res;
}

Verdict temperedness_check(const SemisimpleAlg& alg, const ModuleSpec& spec) {
  Verdict v;
  v.p = compute_pv(alg, spec);
  v.tempered = !v.p.infinite && v.p.value <= 1;
  if (!v.tempered) {
    v.witness = v.p.minimizer;
    v.rho_h_at_witness = rho_eval(rho_h(alg), v.witness);
    v.rho_v_at_witness = rho_eval(module_weights(alg, spec), v.witness);
    if (v.rho_h_at_witness <= v.rho_v_at_witness)
      throw std::logic_error("witness does not separate the functions");
  }
  return v;
}

Rat tensor_bound(const Rat& p1, long d1, const Rat& p2, long d2) {
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("bad dimension");
  return p1 / d2 + p2 / d1;
}

ModuleSpec module_concat(const ModuleSpec& a, const ModuleSpec& b) {
  ModuleSpec out = a;
  out.summands.insert(out.summands.end(), b.summands.begin(),
                      b.summands.end());
  out.trivial_dim += b.trivial_dim;
  return out;
}

bool superadditivity_check(const SemisimpleAlg& alg, const ModuleSpec& v1,
                           const ModuleSpec& v2) {
  PvResult p1 = compute_pv(alg, v1);
  PvResult p2 = compute_pv(alg, v2);
  PvResult joint = compute_pv(alg, module_concat(v1, v2));
  return joint.inverse >= p1.inverse + p2.inverse;
}

}  // namespace temper
