#include "temper/rho.hpp"

#include <map>
#include <stdexcept>

namespace temper {

long SemisimpleAlg::dim() const {
  long d = 0;
  for (const RootSystem& f : factors) d += f.dim();
  return d;
}

std::string SemisimpleAlg::name() const {
  std::string n;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) n += "+";
    n += factors[i].name();
  }
  return n;
}

RatVec SemisimpleAlg::embed(int factor, const RatVec& v) const {
  RatVec out(ambient_dim, Rat(0));
  for (size_t i = 0; i < v.size(); ++i) out[offsets[factor] + i] = v[i];
  return out;
}

std::vector<RatVec> SemisimpleAlg::span_rows() const {
  std::vector<RatVec> rows;
  for (size_t f = 0; f < factors.size(); ++f)
    for (const RatVec& n : factors[f].span_normals)
      rows.push_back(embed(static_cast<int>(f), n));
  return rows;
}

std::vector<RatVec> SemisimpleAlg::chamber_rows() const {
  std::vector<RatVec> rows;
  for (size_t f = 0; f < factors.size(); ++f)
    for (const RatVec& a : factors[f].simple_roots)
      rows.push_back(embed(static_cast<int>(f), a));
  return rows;
}

SemisimpleAlg make_alg(const std::vector<std::string>& names) {
  if (names.empty()) throw std::invalid_argument("empty algebra list");
  SemisimpleAlg alg;
  for (const std::string& n : names) {
    RootSystem rs = build_root_system(n);
    alg.offsets.push_back(alg.ambient_dim);
    alg.ambient_dim += rs.ambient_dim;
    alg.factors.push_back(std::move(rs));
  }
  return alg;
}

void check_spec(const SemisimpleAlg& alg, const ModuleSpec& spec) {
  for (const ModuleSummand& s : spec.summands) {
    if (s.factor_weights.size() != alg.factors.size())
      throw std::invalid_argument("summand factor count mismatch");
    if (s.mult < 1) throw std::invalid_argument("summand multiplicity < 1");
    bool nontrivial = false;
    for (size_t f = 0; f < alg.factors.size(); ++f) {
      const HighestWeight& hw = s.factor_weights[f];
      if (hw.empty()) continue;
      if (static_cast<int>(hw.size()) != alg.factors[f].rank)
        throw std::invalid_argument("summand weight rank mismatch");
      for (long c : hw) nontrivial = nontrivial || c != 0;
    }
    if (!nontrivial)
      throw std::invalid_argument(
          "all-trivial summand; use the trivial dimension field");
  }
  if (spec.trivial_dim < 0)
    throw std::invalid_argument("negative trivial dimension");
}

namespace {

long summand_dim(const SemisimpleAlg& alg, const ModuleSummand& s) {
  long d = s.mult;
  for (size_t f = 0; f < alg.factors.size(); ++f)
    if (!s.factor_weights[f].empty())
      d *= weyl_dimension(alg.factors[f], s.factor_weights[f]);
  return s.plus_dual ? 2 * d : d;
}

}  // namespace

long module_dim(const SemisimpleAlg& alg, const ModuleSpec& spec) {
  check_spec(alg, spec);
  long d = spec.trivial_dim;
  for (const ModuleSummand& s : spec.summands) d += summand_dim(alg, s);
  return d;
}

ModuleSpec module_dual(const SemisimpleAlg& alg, const ModuleSpec& spec) {
  check_spec(alg, spec);
  ModuleSpec out = spec;
  for (ModuleSummand& s : out.summands)
    for (size_t f = 0; f < alg.factors.size(); ++f)
      if (!s.factor_weights[f].empty())
        s.factor_weights[f] = dual_weight(alg.factors[f], s.factor_weights[f]);
  return out;
}

bool has_invariant_vector(const SemisimpleAlg& alg, const ModuleSpec& spec) {
  return spec.trivial_dim > 0;
}

RhoFunction module_weights(const SemisimpleAlg& alg, const ModuleSpec& spec) {
  check_spec(alg, spec);
  std::map<RatVec, long, VecLess> acc;
  for (const ModuleSummand& s : spec.summands) {
    std::vector<std::pair<RatVec, long>> partial = {
        {RatVec(alg.ambient_dim, Rat(0)), s.mult}};
    for (size_t f = 0; f < alg.factors.size(); ++f) {
      if (s.factor_weights[f].empty()) continue;
      const WeightSystem& ws =
          weight_system(alg.factors[f], s.factor_weights[f]);
      std::vector<std::pair<RatVec, long>> next;
      next.reserve(partial.size() * ws.weights.size());
      for (const auto& [w, m] : partial)
        for (const auto& [fw, fm] : ws.weights)
          next.emplace_back(vsum(w, alg.embed(static_cast<int>(f), fw)),
                            m * fm);
      partial = std::move(next);
    }
    for (const auto& [w, m] : partial) {
      acc[w] += m;
      if (s.plus_dual) acc[vneg(w)] += m;
    }
  }

  RhoFunction out;
  out.ambient_dim = alg.ambient_dim;
  out.zero_mult = spec.trivial_dim;
  out.total_dim = spec.trivial_dim;
  for (const auto& [w, m] : acc) {
    out.total_dim += m;
    if (vzero(w)) {
      out.zero_mult += m;
      continue;
    }
    // Keep each +-pair once, keyed by its lexicographically larger member.
    if (vcompare(w, vneg(w)) > 0) {
      long total = m;
      auto it = acc.find(vneg(w));
      if (it != acc.end()) total += it->second;
      out.lines.emplace_back(w, total);
    } else if (acc.find(vneg(w)) == acc.end()) {
      out.lines.emplace_back(vneg(w), m);
    }
  }
  if (out.total_dim != module_dim(alg, spec))
    throw std::logic_error("module weight count mismatch");
  return out;
}

RhoFunction rho_h(const SemisimpleAlg& alg) {
  RhoFunction out;
  out.ambient_dim = alg.ambient_dim;
  for (size_t f = 0; f < alg.factors.size(); ++f) {
    for (const RatVec& r : alg.factors[f].positive_roots)
      out.lines.emplace_back(alg.embed(static_cast<int>(f), r), 2);
    out.zero_mult += alg.factors[f].rank;
  }
  out.total_dim = alg.dim();
  return out;
}

Rat rho_eval(const RhoFunction& f, const RatVec& y) {
  if (static_cast<int>(y.size()) != f.ambient_dim)
    throw std::invalid_argument("rho_eval: dimension mismatch");
  Rat s = 0;
  for (const auto& [l, m] : f.lines) s += m * abs(dot(l, y));
  return s / 2;
}

}  // namespace temper
