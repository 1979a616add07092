#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "temper/rootsys.hpp"

using namespace temper;

namespace {

// rank + 2 * |positive roots| for each supported type.
const std::map<std::string, long> kDims = {
    {"A1", 3},   {"A2", 8},   {"A5", 35},  {"A8", 80},  {"B2", 10},
    {"B4", 36},  {"B7", 105}, {"C1", 3},   {"C3", 21},  {"C6", 78},
    {"D3", 15},  {"D4", 28},  {"D8", 120}, {"E6", 78},  {"E7", 133},
    {"F4", 52},  {"G2", 14},  {"E8", 248}};

}  // namespace

TEST_SUITE("rootsys") {

TEST_CASE("dimension across all series") {
  for (const auto& [name, dim] : kDims) {
    RootSystem rs = build_root_system(name);
    CHECK_MESSAGE(rs.dim() == dim, name);
    CHECK(rs.name() == name);
  }
}

TEST_CASE("name parsing accepts underscore and lowercase") {
  CHECK(build_root_system("a_3").name() == "A3");
  CHECK(build_root_system("e8").name() == "E8");
  CHECK_THROWS_AS(build_root_system("H4"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("B1"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("D2"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("A0"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("E5"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("A"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("A3x"), std::invalid_argument);
}

TEST_CASE("cartan matrices") {
  CHECK(build_root_system("G2").cartan ==
        std::vector<std::vector<long>>{{2, -1}, {-3, 2}});
  CHECK(build_root_system("B2").cartan ==
        std::vector<std::vector<long>>{{2, -2}, {-1, 2}});
  CHECK(build_root_system("C3").cartan ==
        std::vector<std::vector<long>>{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  CHECK(build_root_system("F4").cartan ==
        std::vector<std::vector<long>>{
            {2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
  RootSystem e6 = build_root_system("E6");
  for (int i = 0; i < 6; ++i) CHECK(e6.cartan[i][i] == 2);
}

TEST_CASE("fundamental weights pair dually with simple roots") {
  for (const auto& [name, dim] : kDims) {
    RootSystem rs = build_root_system(name);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j)
        CHECK(coroot_pairing(rs.fundamental_weights[i], rs.simple_roots[j]) ==
              (i == j ? 1 : 0));
  }
}

TEST_CASE("A-series vectors are trace-zero") {
  RootSystem a3 = build_root_system("A3");
  for (const RatVec& v : a3.positive_roots) {
    Rat s = 0;
    for (const Rat& x : v) s += x;
    CHECK(s == 0);
  }
  for (const RatVec& v : a3.fundamental_weights) {
    Rat s = 0;
    for (const Rat& x : v) s += x;
    CHECK(s == 0);
  }
  REQUIRE(a3.span_normals.size() == 1);
  CHECK(a3.span_normals[0] == rat_vec({1, 1, 1, 1}));
}

TEST_CASE("A2 fundamental weight realization") {
  RootSystem a2 = build_root_system("A2");
  CHECK(a2.fundamental_weights[0] ==
        RatVec{rat(2, 3), rat(-1, 3), rat(-1, 3)});
  CHECK(a2.fundamental_weights[1] ==
        RatVec{rat(1, 3), rat(1, 3), rat(-2, 3)});
}

TEST_CASE("positive root sum is twice the weight-lattice rho") {
  for (const auto& [name, dim] : kDims) {
    RootSystem rs = build_root_system(name);
    RatVec sum(rs.ambient_dim, Rat(0));
    for (const RatVec& r : rs.positive_roots) sum = vsum(sum, r);
    RatVec two_rho(rs.ambient_dim, Rat(0));
    for (const RatVec& w : rs.fundamental_weights)
      two_rho = vsum(two_rho, vscale(Rat(2), w));
    CHECK_MESSAGE(sum == two_rho, name);
  }
}

TEST_CASE("span normals annihilate roots and weights") {
  for (const std::string name : {"E6", "E7", "G2", "A4"}) {
    RootSystem rs = build_root_system(name);
    CHECK(rs.span_normals.size() ==
          static_cast<size_t>(rs.ambient_dim - rs.rank));
    for (const RatVec& n : rs.span_normals) {
      for (const RatVec& r : rs.positive_roots) CHECK(dot(n, r) == 0);
      for (const RatVec& w : rs.fundamental_weights) CHECK(dot(n, w) == 0);
    }
  }
  CHECK(build_root_system("B5").span_normals.empty());
  CHECK(build_root_system("F4").span_normals.empty());
}

TEST_CASE("weyl orbit sizes") {
  RootSystem b4 = build_root_system("B4");
  CHECK(weyl_orbit(b4, b4.fundamental_weights[3]).size() == 16);

  RootSystem c2 = build_root_system("C2");
  auto orbit = weyl_orbit(c2, c2.fundamental_weights[0]);
  CHECK(orbit.size() == 4);
  std::set<RatVec, VecLess> expect = {rat_vec({1, 0}), rat_vec({-1, 0}),
                                      rat_vec({0, 1}), rat_vec({0, -1})};
  std::set<RatVec, VecLess> got(orbit.begin(), orbit.end());
  CHECK(got == expect);

  RootSystem a1 = build_root_system("A1");
  CHECK(weyl_orbit(a1, a1.fundamental_weights[0]).size() == 2);
}

TEST_CASE("orbit size divides weyl group order") {
  for (const std::string name : {"A3", "B3", "C4", "D4", "G2", "F4"}) {
    RootSystem rs = build_root_system(name);
    unsigned long order = weyl_order(rs.series, rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
      size_t n = weyl_orbit(rs, rs.fundamental_weights[i]).size();
      CHECK_MESSAGE(order % n == 0, name << " weight " << i);
    }
  }
}

TEST_CASE("dominant representative is dominant and in-orbit") {
  RootSystem d4 = build_root_system("D4");
  RatVec wild = {rat(-3), rat(7, 2), rat(1), rat(-2)};
  RatVec dom = dominant_representative(d4, wild);
  CHECK(is_dominant(d4, dom));
  auto orbit = weyl_orbit(d4, dom);
  CHECK(std::count(orbit.begin(), orbit.end(), wild) == 1);
}

TEST_CASE("dual highest weight") {
  RootSystem a2 = build_root_system("A2");
  CHECK(dual_highest_weight(a2, a2.fundamental_weights[0]) ==
        a2.fundamental_weights[1]);

  RootSystem e6 = build_root_system("E6");
  CHECK(dual_highest_weight(e6, e6.fundamental_weights[0]) ==
        e6.fundamental_weights[5]);

  for (const std::string name : {"B3", "C4", "D4", "E7", "F4", "G2"}) {
    RootSystem rs = build_root_system(name);
    for (const RatVec& w : rs.fundamental_weights)
      CHECK_MESSAGE(dual_highest_weight(rs, w) == w, name);
  }

  // Involution everywhere, including the odd orthogonal half-spin pair.
  RootSystem d5 = build_root_system("D5");
  RatVec w4 = d5.fundamental_weights[3], w5 = d5.fundamental_weights[4];
  CHECK(dual_highest_weight(d5, w5) == w4);
  CHECK(dual_highest_weight(d5, w4) == w5);
  RootSystem d6 = build_root_system("D6");
  for (const RatVec& w : d6.fundamental_weights)
    CHECK(dual_highest_weight(d6, w) == w);
}

TEST_CASE("highest root matches adjoint highest weight") {
  CHECK(highest_root(build_root_system("A2")) == rat_vec({1, 0, -1}));
  CHECK(highest_root(build_root_system("B3")) == rat_vec({1, 1, 0}));
  CHECK(highest_root(build_root_system("C3")) == rat_vec({2, 0, 0}));
  CHECK(highest_root(build_root_system("G2")) == rat_vec({-1, -1, 2}));
  RootSystem e8 = build_root_system("E8");
  RatVec hr = highest_root(e8);
  CHECK(is_dominant(e8, hr));
  CHECK(weyl_orbit(e8, hr).size() == 240);
}

TEST_CASE("positive root counts") {
  CHECK(build_root_system("G2").positive_roots.size() == 6);
  CHECK(build_root_system("F4").positive_roots.size() == 24);
  CHECK(build_root_system("E6").positive_roots.size() == 36);
  CHECK(build_root_system("E7").positive_roots.size() == 63);
  CHECK(build_root_system("E8").positive_roots.size() == 120);
  CHECK(build_root_system("A8").positive_roots.size() == 36);
  CHECK(build_root_system("B6").positive_roots.size() == 36);
  CHECK(build_root_system("C6").positive_roots.size() == 36);
  CHECK(build_root_system("D7").positive_roots.size() == 42);
}

}  // TEST_SUITE
