#include <doctest.h>

#include <random>

#include "temper/rho.hpp"

using namespace temper;

namespace {

ModuleSpec one_rep(const SemisimpleAlg& alg, int factor,
                   const std::string& name, long mult = 1,
                   bool plus_dual = false) {
  ModuleSummand s;
  s.mult = mult;
  s.plus_dual = plus_dual;
  s.factor_weights.assign(alg.factors.size(), {});
  s.factor_weights[factor] = named_rep(alg.factors[factor], name);
  return ModuleSpec{{s}, 0};
}

RatVec random_cartan_point(const SemisimpleAlg& alg, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  RatVec y(alg.ambient_dim, Rat(0));
  for (size_t f = 0; f < alg.factors.size(); ++f)
    for (const RatVec& w : alg.factors[f].fundamental_weights)
      y = vsum(y, vscale(rat(num(rng), den(rng)),
                         alg.embed(static_cast<int>(f), w)));
  return y;
}

}  // namespace

TEST_SUITE("rho") {

TEST_CASE("algebra direct sums") {
  SemisimpleAlg alg = make_alg({"A1", "C3"});
  CHECK(alg.name() == "A1+C3");
  CHECK(alg.dim() == 24);
  CHECK(alg.ambient_dim == 5);
  CHECK(alg.embed(1, rat_vec({1, 2, 3})) == rat_vec({0, 0, 1, 2, 3}));
  CHECK(alg.chamber_rows().size() == 4);
  CHECK(alg.span_rows().size() == 1);
  CHECK_THROWS_AS(make_alg({}), std::invalid_argument);
}

TEST_CASE("adjoint rho values") {
  SemisimpleAlg c2 = make_alg({"C2"});
  RhoFunction h = rho_h(c2);
  CHECK(h.total_dim == 10);
  CHECK(h.zero_mult == 2);
  CHECK(rho_eval(h, rat_vec({1, 0})) == 4);
  CHECK(rho_eval(h, rat_vec({1, 1})) == 6);
  CHECK(rho_eval(h, rat_vec({-1, 0})) == 4);

  SemisimpleAlg b2 = make_alg({"B2"});
  CHECK(rho_eval(rho_h(b2), rat_vec({1, 0})) == 3);

  SemisimpleAlg a1a1 = make_alg({"A1", "A1"});
  CHECK(rho_eval(rho_h(a1a1), rat_vec({1, -1, 2, -2})) == 6);
}

TEST_CASE("traceless pair module of sp_2") {
  SemisimpleAlg c2 = make_alg({"C2"});
  ModuleSpec spec = one_rep(c2, 0, "ext0(2)");
  RhoFunction f = module_weights(c2, spec);
  CHECK(f.total_dim == 5);
  CHECK(f.zero_mult == 1);
  CHECK(f.lines.size() == 2);
  CHECK(rho_eval(f, rat_vec({1, 0})) == 2);
  CHECK(rho_eval(f, rat_vec({1, 1})) == 2);
}

TEST_CASE("tensor product across factors") {
  SemisimpleAlg alg = make_alg({"A1", "C3"});
  ModuleSummand s;
  s.factor_weights = {named_rep(alg.factors[0], "std"),
                      named_rep(alg.factors[1], "ext0(3)")};
  ModuleSpec spec{{s}, 0};
  CHECK(module_dim(alg, spec) == 28);
  RhoFunction f = module_weights(alg, spec);
  CHECK(f.total_dim == 28);
  CHECK(f.zero_mult == 0);
  CHECK(f.lines.size() == 14);
}

TEST_CASE("plus-dual and outer multiplicity scale rho") {
  SemisimpleAlg a2 = make_alg({"A2"});
  ModuleSpec base = one_rep(a2, 0, "std");
  ModuleSpec doubled = one_rep(a2, 0, "std", 3, true);
  RhoFunction f1 = module_weights(a2, base);
  RhoFunction f6 = module_weights(a2, doubled);
  CHECK(f6.total_dim == 18);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 25; ++i) {
    RatVec y = random_cartan_point(a2, rng);
    CHECK(rho_eval(f6, y) == 6 * rho_eval(f1, y));
  }
}

TEST_CASE("dual module has identical rho") {
  SemisimpleAlg alg = make_alg({"A3", "A2"});
  ModuleSummand s;
  s.factor_weights = {named_rep(alg.factors[0], "ext(2)"),
                      named_rep(alg.factors[1], "sym(2)")};
  ModuleSpec spec{{s}, 0};
  ModuleSpec dual = module_dual(alg, spec);
  CHECK(dual.summands[0].factor_weights[1] == HighestWeight{0, 2});
  RhoFunction f = module_weights(alg, spec);
  RhoFunction g = module_weights(alg, dual);
  CHECK(f.total_dim == g.total_dim);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 25; ++i) {
    RatVec y = random_cartan_point(alg, rng);
    CHECK(rho_eval(f, y) == rho_eval(g, y));
  }
}

TEST_CASE("rho is even and convex along segments") {
  SemisimpleAlg alg = make_alg({"B2"});
  ModuleSpec spec = one_rep(alg, 0, "spin");
  RhoFunction f = module_weights(alg, spec);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    RatVec y = random_cartan_point(alg, rng);
    RatVec z = random_cartan_point(alg, rng);
    CHECK(rho_eval(f, vneg(y)) == rho_eval(f, y));
    RatVec mid = vscale(rat(1, 2), vsum(y, z));
    CHECK(2 * rho_eval(f, mid) <= rho_eval(f, y) + rho_eval(f, z));
  }
}

TEST_CASE("weight function is Weyl invariant") {
  SemisimpleAlg alg = make_alg({"G2"});
  ModuleSpec spec = one_rep(alg, 0, "fund(1)");
  RhoFunction f = module_weights(alg, spec);
  const RootSystem& g2 = alg.factors[0];
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    RatVec y = random_cartan_point(alg, rng);
    for (const RatVec& img : weyl_orbit(g2, y))
      CHECK(rho_eval(f, img) == rho_eval(f, y));
  }
}

TEST_CASE("invariant vector detection") {
  SemisimpleAlg a2 = make_alg({"A2"});
  ModuleSpec spec = one_rep(a2, 0, "std");
  CHECK_FALSE(has_invariant_vector(a2, spec));
  spec.trivial_dim = 2;
  CHECK(has_invariant_vector(a2, spec));
  CHECK(module_dim(a2, spec) == 5);
}

TEST_CASE("spec validation") {
  SemisimpleAlg alg = make_alg({"A1", "A1"});
  ModuleSummand s;
  s.factor_weights = {{}, {}};
  CHECK_THROWS_AS(module_dim(alg, ModuleSpec{{s}, 0}),
                  std::invalid_argument);
  s.factor_weights = {HighestWeight{1}, {}};
  s.mult = 0;
  CHECK_THROWS_AS(module_dim(alg, ModuleSpec{{s}, 0}),
                  std::invalid_argument);
  s.mult = 1;
  s.factor_weights = {HighestWeight{1, 2}, {}};
  CHECK_THROWS_AS(module_dim(alg, ModuleSpec{{s}, 0}),
                  std::invalid_argument);
}

}  // TEST_SUITE
