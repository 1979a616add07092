#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "temper/modexpr.hpp"
#include "temper/pvcore.hpp"

using namespace temper;

TEST_SUITE("modexpr") {

TEST_CASE("single tensor product across two factors") {
  SemisimpleAlg alg = make_alg({"A1", "C3"});
  ModuleSpec spec = parse_module(alg, "std@1 x ext0(3)@2");
  REQUIRE(spec.summands.size() == 1);
  CHECK(spec.trivial_dim == 0);
  CHECK(spec.summands[0].mult == 1);
  CHECK_FALSE(spec.summands[0].plus_dual);
  CHECK(spec.summands[0].factor_weights[0] == named_rep(alg.factors[0], "std"));
  CHECK(spec.summands[0].factor_weights[1] ==
        named_rep(alg.factors[1], "ext0(3)"));
  CHECK(module_dim(alg, spec) == 2 * 14);
}

TEST_CASE("dual marker doubles the summand") {
  SemisimpleAlg a2 = make_alg({"A2"});
  ModuleSpec spec = parse_module(a2, "std@1 +dual");
  REQUIRE(spec.summands.size() == 1);
  CHECK(spec.summands[0].plus_dual);
  CHECK(module_dim(a2, spec) == 6);
}

TEST_CASE("trivial summands accumulate") {
  SemisimpleAlg a2 = make_alg({"A2"});
  ModuleSpec spec = parse_module(a2, "trivial(1) + std@1 +dual");
  CHECK(spec.trivial_dim == 1);
  CHECK(module_dim(a2, spec) == 7);
  CHECK(has_invariant_vector(a2, spec));

  ModuleSpec more = parse_module(a2, "trivial(2) + trivial(3)");
  CHECK(more.summands.empty());
  CHECK(more.trivial_dim == 5);
}

TEST_CASE("multiplicity prefix") {
  SemisimpleAlg a1 = make_alg({"A1"});
  ModuleSpec spec = parse_module(a1, "2 * std@1");
  REQUIRE(spec.summands.size() == 1);
  CHECK(spec.summands[0].mult == 2);
  CHECK(module_dim(a1, spec) == 4);

  SemisimpleAlg two = make_alg({"A1", "A1"});
  ModuleSpec big = parse_module(two, "3 * std@1 x std@2 +dual");
  CHECK(module_dim(two, big) == 24);
}

TEST_CASE("omitted factors act trivially") {
  SemisimpleAlg alg = make_alg({"A1", "C3"});
  ModuleSpec spec = parse_module(alg, "std@2");
  CHECK(module_dim(alg, spec) == 6);
  RhoFunction rho = module_weights(alg, spec);
  for (const auto& [line, mult] : rho.lines) {
    CHECK(line[0] == 0);
    CHECK(line[1] == 0);
  }
}

TEST_CASE("parenthesized names resolve per factor") {
  SemisimpleAlg alg = make_alg({"B3", "G2"});
  ModuleSpec spec = parse_module(alg, "fund(2)@1 x fund(1)@2");
  CHECK(module_dim(alg, spec) == 21 * 7);
}

TEST_CASE("canonical strings round-trip exactly") {
  const std::vector<std::string> forms = {
      "std@1",
      "2 * std@1",
      "std@1 +dual",
      "std@1 x ext0(3)@2",
      "trivial(4)",
      "2 * sym(2)@1 +dual + trivial(1)",
      "halfspin_plus@2 x fund(4)@1",
      "adjoint@1 + spin@2 +dual + trivial(2)",
  };
  for (const std::string& s : forms) {
    CAPTURE(s);
    CHECK(parse_module_expr(s).str() == s);
  }
}

TEST_CASE("whitespace variations normalize to one rendering") {
  CHECK(parse_module_expr("  2*std@1 x  ext0(3)@2   +dual ").str() ==
        "2 * std@1 x ext0(3)@2 +dual");
  CHECK(parse_module_expr("trivial( 3 )+std@1").str() ==
        "trivial(3) + std@1");
  CHECK(parse_module_expr("std@1 + dual").str() == "std@1 +dual");
}

TEST_CASE("syntax errors carry the offset") {
  auto offset_of = [](const std::string& text) -> std::string {
    try {
      parse_module_expr(text);
    } catch (const std::invalid_argument& e) {
      return e.what();
    }
    return "";
  };
  CHECK(offset_of("").find("empty module expression") != std::string::npos);
  CHECK(offset_of("std").find("'@'") != std::string::npos);
  CHECK(offset_of("std@").find("factor index") != std::string::npos);
  CHECK(offset_of("2 std@1").find("'*'") != std::string::npos);
  CHECK(offset_of("0 * std@1").find("multiplicity must be positive") !=
        std::string::npos);
  CHECK(offset_of("2 * trivial(3)").find("not allowed before trivial") !=
        std::string::npos);
  CHECK(offset_of("trivial(0)").find("trivial dimension must be positive") !=
        std::string::npos);
  CHECK(offset_of("trivial 3").find("'('") != std::string::npos);
  CHECK(offset_of("std@1 & std@2").find("'+' between terms") !=
        std::string::npos);
  CHECK(offset_of("std@1 x").find("representation name") != std::string::npos);
  CHECK(offset_of("std@1 +").find("representation name") != std::string::npos);
  CHECK(offset_of("std@3x").find("representation name") != std::string::npos);
}

TEST_CASE("lowering rejects bad factor references") {
  SemisimpleAlg a1 = make_alg({"A1"});
  SemisimpleAlg two = make_alg({"A1", "A1"});
  auto lower_error = [](const SemisimpleAlg& alg,
                        const std::string& text) -> std::string {
    try {
      parse_module(alg, text);
    } catch (const std::invalid_argument& e) {
      return e.what();
    }
    return "";
  };
  CHECK(lower_error(a1, "std@2").find("out of range") != std::string::npos);
  CHECK(lower_error(a1, "std@0").find("out of range") != std::string::npos);
  CHECK(lower_error(two, "std@1 x sym(2)@1").find("used twice") !=
        std::string::npos);
  CHECK(lower_error(a1, "bogus@1").find("unknown") != std::string::npos);
  CHECK(lower_error(a1, "spin@1").find("spin") != std::string::npos);
}

TEST_CASE("full corpus-style expression lowers and evaluates") {
  SemisimpleAlg alg = make_alg({"A1", "B5"});
  ModuleSpec spec = parse_module(alg, "std@1 x std@2 + spin@2 + trivial(1)");
  CHECK(module_dim(alg, spec) == 2 * 11 + 32 + 1);
  PvResult r = compute_pv(alg, spec);
  CHECK_FALSE(r.infinite);
  CHECK(r.value > 0);
}

}  // TEST_SUITE
