#pragma once

#include <string>
#include <utility>
#include <vector>

#include "temper/pvcore.hpp"

namespace temper {

// Restriction of a complex root datum to the split Cartan subspace a of
// a real form. Weights and roots push forward through `map`; points of a
// pull back through its transpose, so evaluation commutes:
// (map w) . y = w . (map^T y).
struct RestrictedRootDatum {
  std::string name;
  SemisimpleAlg complex_alg;
  int restricted_rank = 0;
  std::vector<RatVec> map;  // rows are coordinates on the complex Cartan
  // One representative per opposite pair of restricted roots (first
  // nonzero entry positive) with the number of complex roots mapping
  // onto it.
  std::vector<std::pair<RatVec, long>> restricted_roots;
  std::string cite;

  int codomain_dim() const;
  RatVec embed_point(const RatVec& y) const;  // map^T y
  // Equations cutting the genuine split subspace out of the codomain
  // coordinates: the images of the complex-Cartan span normals.
  std::vector<RatVec> span_rows() const;
  // Halfspaces of the restricted dominant cone, one per root line.
  std::vector<RatVec> cone_rows() const;
};

// Reads one restriction datum. The stored roots must be exactly the
// folded image multiset of the complex roots (zero images dropped), and
// both their span and the subspace cut out by span_rows must have
// dimension restricted_rank. Violations throw std::runtime_error naming
// the file and field.
RestrictedRootDatum load_restriction(const std::string& path);

// Checked-in restriction data by short name ("sl2H", "so61", ...).
RestrictedRootDatum restriction_datum(const std::string& name);
const std::vector<std::string>& restriction_names();

// Pushes a line function forward through the restriction map: lines map
// to their images, opposite images merge, zero images join the zero
// multiplicity. Evaluation at y then equals evaluation at map^T y.
RhoFunction restrict_rho(const RhoFunction& f, const RestrictedRootDatum& d);

// rho_h of the real form: half the multiplicity-weighted sum of absolute
// restricted-root values. Agrees with restrict_rho of the complex rho_h.
RhoFunction restricted_rho_h(const RestrictedRootDatum& d);

// p of the module over the split subspace: the slice minimization of
// compute_pv with the restricted rho_h as denominator and the restricted
// module weights as numerator, over the restricted dominant cone.
PvResult real_pv(const RestrictedRootDatum& d, const ModuleSpec& spec);

// Exact strict comparison rho_h(x) > rho_V(x). The point must be a
// nonzero element of the Cartan subspace of h; anything else throws
// std::invalid_argument.
bool check_witness_vector(const SemisimpleAlg& h, const ModuleSpec& v,
                          const RatVec& x);

// One row of a witness table: either a fixed pair (h, v) with explicit
// separating vectors or an any-nonzero-vector claim, or a parametric
// family swept over a relation between p and q.
struct WitnessCase {
  std::string id;
  std::string suite;
  std::string case_name;

  std::vector<std::string> h_factors;  // fixed rows
  std::string v_expr;                  // fixed rows
  std::vector<RatVec> witnesses;       // explicit vectors, fixed rows

  std::string family;    // a1 / bd1 / c1 / a2 / c2 / d2; empty on fixed rows
  std::string relation;  // "p = q+2", "p >= q+3", "p >= 2", ... family rows
  std::vector<std::string> witness_patterns;  // symbolic vectors per instance

  bool any_nonzero = false;  // every nonzero Cartan vector separates
  bool pair_witness = false; // diagonal vectors (Y, Y) separate

  std::string real_forms;
  std::string note;
  std::string cite;
};

struct WitnessSuite {
  std::string suite;
  std::string description;
  std::vector<WitnessCase> cases;
};

// Reads a witness table. Fixed rows must parse and their vectors must be
// nonzero Cartan-subspace points of h; family rows must carry a known
// family key, a parsable relation, and exactly one claim kind.
WitnessSuite load_witness_corpus(const std::string& path);

struct WitnessReport {
  std::string id;
  bool ok = false;
  long checked = 0;  // (instance, vector) comparisons evaluated
  std::string detail;
};

// Verifies one row. Family rows sweep their relation with p capped at
// max_p and check every claimed vector of every instance; any-nonzero
// and diagonal claims draw `samples` deterministic rational points per
// instance, projected into the Cartan subspace.
WitnessReport verify_witness_case(const WitnessCase& c, long max_p = 8,
                                  int samples = 50);

std::string witness_report_line(const WitnessReport& rep);

}  // namespace temper
