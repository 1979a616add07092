#pragma once

#include <string>
#include <vector>

#include "temper/rational.hpp"

namespace temper {

enum class Series { A, B, C, D, E, F, G };

char series_char(Series s);
Series series_from_char(char c);

// A simple Lie algebra's root datum in its standard coordinate
// realization:
//   A_l  in Q^{l+1} (trace-zero span), l >= 1
//   B_l  in Q^l, l >= 2        C_l  in Q^l, l >= 1
//   D_l  in Q^l, l >= 3        E_l  in Q^8, l in {6,7,8}
//   F_4  in Q^4                G_2  in Q^3 (trace-zero span)
// Cartan matrix convention: cartan[i][j] = <alpha_i, alpha_j^vee>.
struct RootSystem {
  Series series;
  int rank = 0;
  int ambient_dim = 0;
  std::vector<RatVec> simple_roots;
  std::vector<RatVec> positive_roots;
  std::vector<RatVec> fundamental_weights;
  // Basis of the orthogonal complement of the root span; a vector lies
  // in the span iff it is orthogonal to all of these.
  std::vector<RatVec> span_normals;
  std::vector<std::vector<long>> cartan;

  std::string name() const;  // e.g. "A3", "G2"
  long dim() const;          // rank + number of roots
};

RootSystem build_root_system(Series s, int rank);
// Accepts "A3", "a3", "E8". Throws std::invalid_argument on bad input.
RootSystem build_root_system(const std::string& name);

// 2 (x, root) / (root, root)
Rat coroot_pairing(const RatVec& x, const RatVec& root);

bool is_dominant(const RootSystem& rs, const RatVec& x);
// The unique dominant vector in the Weyl orbit of x.
RatVec dominant_representative(const RootSystem& rs, RatVec x);
std::vector<RatVec> weyl_orbit(const RootSystem& rs, const RatVec& x);
unsigned long weyl_order(Series s, int rank);

// Weight of the dual representation: for dominant lambda this is
// -w0(lambda), again dominant. Involutive.
RatVec dual_highest_weight(const RootSystem& rs, const RatVec& dominant);

// Coordinates of x in the simple-root basis, if x lies in the span.
std::optional<RatVec> simple_root_coords(const RootSystem& rs,
                                         const RatVec& x);

// <x, alpha_i^vee> for each simple root; integral for weights.
RatVec fundamental_coords(const RootSystem& rs, const RatVec& x);

// The highest root (unique root of maximal height).
RatVec highest_root(const RootSystem& rs);

}  // namespace temper
