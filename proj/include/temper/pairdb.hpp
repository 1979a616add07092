#pragma once

#include <optional>
#include <string>
#include <vector>

#include "temper/modexpr.hpp"
#include "temper/pvcore.hpp"

namespace temper {

// One corpus row: a subalgebra h together with the complement module q,
// the expected outcome, and inert annotations. Family rows describe a
// parametric (p, q) sweep instead of a single pair and carry no h or q
// of their own until expansion.
struct PairRecord {
  std::string id;
  std::string suite;

  std::vector<std::string> g_factors;  // ambient algebra, when the table names one
  std::vector<std::string> h_factors;
  std::string q_expr;                  // module expression; empty on starred rows

  std::optional<Rat> expected_p;       // exact value rows
  std::optional<Rat> expected_p_max;   // upper-bound rows
  std::optional<bool> expected_tempered;

  std::vector<long> dims;  // {dim g, dim h, dim q} when the table prints them
  bool ambiguous = false;  // outer choice (dual / half-spin label) not pinned
  bool starred = false;    // no explicit q; verified by dimension threshold
  long threshold = 0;      // minimal dim q for starred rows
  long count = 1;          // embeddings sharing this row

  std::string family;  // parametric family key; empty on concrete rows
  std::string note;
  std::string cite;
};

struct Corpus {
  std::string suite;
  std::string description;
  std::vector<PairRecord> records;
};

// Reads one corpus JSON file. Schema violations throw std::runtime_error
// naming the record id and field. Dimension identities are enforced here:
// dims[0] = dims[1] + dims[2], dims[1] = dim h, dims[2] = dim q when q is
// explicit, and dims[0] = dim g when g is concrete.
Corpus load_corpus(const std::string& path);

// Replaces each family row by its concrete instances, sweeping the family
// parameters with p capped at max_p. Concrete rows pass through unchanged.
// Instances of the four one-subalgebra families carry the exact expected
// p value implied by the standard-module tables.
std::vector<PairRecord> expand_families(const std::vector<PairRecord>& records,
                                        long max_p = 8);

struct Report {
  std::string id;
  bool ok = false;         // expectation met and dimensions consistent
  bool dims_ok = true;
  std::string computed_p;  // "num/den" or "inf"; empty on starred rows
  bool tempered = false;
  RatVec witness;          // separating vector when not tempered
  std::string detail;
};

// Checks one concrete record against its expectation. Disagreement is
// data in the report, never an exception. Rows flagged ambiguous are
// re-run with the half-spin labels flipped and with the dual module, and
// every variant must reach the same outcome.
Report verify_record(const PairRecord& rec);

// Stable one-line rendering used by suite reports.
std::string report_line(const Report& rep);

// Corpus directory: TEMPER_CORPUS_DIR when set, else the checked-in data.
std::string default_corpus_dir();

// Maps a suite name ("air", ..., "groups", "witness-classical", ...) to
// its file under the corpus directory. Throws on unknown names.
std::string corpus_path(const std::string& suite);

// The table suites verified through verify_record, in report order.
const std::vector<std::string>& pair_suites();

}  // namespace temper
