#include "temper/pairdb.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace temper {
namespace {

using nlohmann::json;

std::string file_label(const std::string& path) {
  size_t pos = path.find_last_of('/');
  return pos == std::string::npos ? path : path.substr(pos + 1);
}

[[noreturn]] void fail(const std::string& file, const std::string& id,
                       const std::string& field, const std::string& what) {
  throw std::runtime_error(file + ": record '" + (id.empty() ? "?" : id) +
                           "': field '" + field + "': " + what);
}

std::vector<std::string> read_factors(const json& j, const std::string& file,
                                      const std::string& id,
                                      const std::string& field) {
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array() ||
      j["factors"].empty())
    fail(file, id, field, "expected an object with a nonempty 'factors' array");
  std::vector<std::string> names;
  for (const auto& f : j["factors"]) {
    if (!f.is_string()) fail(file, id, field, "factor names must be strings");
    names.push_back(f.get<std::string>());
  }
  return names;
}

Rat read_rat(const json& j, const std::string& file, const std::string& id,
             const std::string& field) {
  if (!j.is_string()) fail(file, id, field, "rationals are written as strings");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(file, id, field, e.what());
  }
}

long read_positive(const json& j, const std::string& file, const std::string& id,
                   const std::string& field) {
  if (!j.is_number_integer() || j.get<long>() < 1)
    fail(file, id, field, "expected a positive integer");
  return j.get<long>();
}

const std::set<std::string> kFamilies = {
    "a1", "a1-sub", "a2",     "bd1", "bd1-sub",
    "bd1-thin",     "d2",     "c1",  "c1-sub",   "c2"};

// The realization of so(n) inside the engine, together with the factor
// representation names whose tensor product is the n-dimensional vector
// module. so(3) and so(4) are handled through their A-series isomorphs.
struct SoPiece {
  std::vector<std::string> factors;
  std::vector<std::string> vector_reps;
};

SoPiece so_piece(long n) {
  if (n == 3) return {{"A1"}, {"sym(2)"}};
  if (n == 4) return {{"A1", "A1"}, {"std", "std"}};
  if (n == 5) return {{"B2"}, {"std"}};
  if (n == 6) return {{"D3"}, {"std"}};
  if (n % 2 == 1) return {{"B" + std::to_string((n - 1) / 2)}, {"std"}};
  return {{"D" + std::to_string(n / 2)}, {"std"}};
}

std::string sl_name(long n) { return "A" + std::to_string(n - 1); }
std::string sp_name(long n) { return "C" + std::to_string(n); }

// Tensor product of the pieces' vector modules, factor indices running
// over all pieces in order.
std::string vector_product(const std::vector<SoPiece>& pieces) {
  std::string s;
  int idx = 1;
  for (const auto& piece : pieces)
    for (const auto& rep : piece.vector_reps) {
      if (!s.empty()) s += " x ";
      s += rep + "@" + std::to_string(idx++);
    }
  return s;
}

std::string with_mult(long mult, const std::string& product) {
  if (mult == 1) return product;
  return std::to_string(mult) + " * " + product;
}

std::string with_trivial(std::string expr, long t) {
  if (t > 0) expr += " + trivial(" + std::to_string(t) + ")";
  return expr;
}

ModuleExpr flip_halfspins(ModuleExpr expr) {
  for (auto& term : expr.terms)
    for (auto& f : term.factors) {
      if (f.repname == "halfspin_plus")
        f.repname = "halfspin_minus";
      else if (f.repname == "halfspin_minus")
        f.repname = "halfspin_plus";
    }
  return expr;
}

// The outer choices a table row leaves open: the flip of every half-spin
// label and the dual module. Rows where a variant coincides with the
// primary module just verify it twice.
std::vector<ModuleSpec> alternate_specs(const SemisimpleAlg& alg,
                                        const ModuleExpr& expr,
                                        const ModuleSpec& spec) {
  std::vector<ModuleSpec> alts;
  alts.push_back(lower_module_expr(alg, flip_halfspins(expr)));
  alts.push_back(module_dual(alg, spec));
  return alts;
}

bool dims_consistent(const PairRecord& rec, const SemisimpleAlg& h,
                     const ModuleSpec* spec) {
  if (rec.dims.empty()) return true;
  if (rec.dims.size() != 3) return false;
  if (rec.dims[0] != rec.dims[1] + rec.dims[2]) return false;
  if (h.dim() != rec.dims[1]) return false;
  if (!rec.g_factors.empty() && make_alg(rec.g_factors).dim() != rec.dims[0])
    return false;
  if (spec && module_dim(h, *spec) != rec.dims[2]) return false;
  return true;
}

}  // namespace

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  const std::string file = file_label(path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error(file + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("records") || !doc["records"].is_array())
    throw std::runtime_error(file +
                             ": top level must be an object with a 'records' array");

  Corpus corpus;
  corpus.suite = doc.value("suite", "");
  corpus.description = doc.value("description", "");

  std::set<std::string> seen;
  for (const auto& j : doc["records"]) {
    if (!j.is_object() || !j.contains("id") || !j["id"].is_string())
      throw std::runtime_error(file + ": every record needs a string 'id'");

    PairRecord rec;
    rec.suite = corpus.suite;
    rec.id = j["id"].get<std::string>();
    if (!seen.insert(rec.id).second) fail(file, rec.id, "id", "duplicate");

    rec.family = j.value("family", "");
    rec.note = j.value("note", "");
    rec.cite = j.value("cite", "");
    rec.ambiguous = j.value("ambiguous", false);
    rec.starred = j.value("starred", false);
    if (j.contains("count"))
      rec.count = read_positive(j["count"], file, rec.id, "count");

    if (!j.contains("expected") || !j["expected"].is_object())
      fail(file, rec.id, "expected", "missing");
    const json& ex = j["expected"];
    int kinds = 0;
    if (ex.contains("p")) {
      rec.expected_p = read_rat(ex["p"], file, rec.id, "expected.p");
      ++kinds;
    }
    if (ex.contains("p_max")) {
      rec.expected_p_max = read_rat(ex["p_max"], file, rec.id, "expected.p_max");
      ++kinds;
    }
    if (ex.contains("tempered")) {
      if (!ex["tempered"].is_boolean())
        fail(file, rec.id, "expected.tempered", "expected a boolean");
      rec.expected_tempered = ex["tempered"].get<bool>();
      ++kinds;
    }
    if (kinds != 1)
      fail(file, rec.id, "expected", "exactly one of p, p_max, tempered");

    if (j.contains("ags")) {
      const std::string ags = j["ags"].get<std::string>();
      if (ags != "Y" && ags != "N") fail(file, rec.id, "ags", "expected Y or N");
      if (!rec.expected_tempered || *rec.expected_tempered != (ags == "Y"))
        fail(file, rec.id, "ags", "flag contradicts expected.tempered");
    }

    if (j.contains("dims")) {
      if (!j["dims"].is_array() || j["dims"].size() != 3)
        fail(file, rec.id, "dims", "expected [dim g, dim h, dim q]");
      for (const auto& d : j["dims"])
        rec.dims.push_back(read_positive(d, file, rec.id, "dims"));
      if (rec.dims[0] != rec.dims[1] + rec.dims[2])
        fail(file, rec.id, "dims", "dim g != dim h + dim q");
    }

    if (!rec.family.empty()) {
      if (!kFamilies.count(rec.family))
        fail(file, rec.id, "family", "unknown family key");
      if (j.contains("h") || j.contains("q"))
        fail(file, rec.id, "family", "family rows carry no h or q of their own");
      corpus.records.push_back(std::move(rec));
      continue;
    }

    if (!j.contains("h")) fail(file, rec.id, "h", "missing");
    rec.h_factors = read_factors(j["h"], file, rec.id, "h");
    SemisimpleAlg h;
    try {
      h = make_alg(rec.h_factors);
    } catch (const std::invalid_argument& e) {
      fail(file, rec.id, "h", e.what());
    }
    if (j.contains("g")) {
      rec.g_factors = read_factors(j["g"], file, rec.id, "g");
      try {
        make_alg(rec.g_factors);
      } catch (const std::invalid_argument& e) {
        fail(file, rec.id, "g", e.what());
      }
    }

    ModuleSpec spec;
    bool have_spec = false;
    if (rec.starred) {
      if (j.contains("q"))
        fail(file, rec.id, "q", "starred rows carry no module expression");
      if (!j.contains("threshold"))
        fail(file, rec.id, "threshold", "starred rows need a dimension threshold");
      rec.threshold = read_positive(j["threshold"], file, rec.id, "threshold");
      if (rec.dims.empty())
        fail(file, rec.id, "dims", "starred rows need the dimension split");
    } else {
      if (!j.contains("q") || !j["q"].is_string())
        fail(file, rec.id, "q", "missing module expression");
      rec.q_expr = j["q"].get<std::string>();
      try {
        spec = parse_module(h, rec.q_expr);
        have_spec = true;
      } catch (const std::invalid_argument& e) {
        fail(file, rec.id, "q", e.what());
      }
    }

    if (!dims_consistent(rec, h, have_spec ? &spec : nullptr))
      fail(file, rec.id, "dims", "dimension split disagrees with h and q");

    corpus.records.push_back(std::move(rec));
  }
  return corpus;
}

std::vector<PairRecord> expand_families(const std::vector<PairRecord>& records,
                                        long max_p) {
  std::vector<PairRecord> out;
  for (const auto& fam : records) {
    if (fam.family.empty()) {
      out.push_back(fam);
      continue;
    }
    auto emit = [&](long p, long q, std::vector<std::string> g,
                    std::vector<std::string> h, std::string q_expr,
                    std::optional<Rat> exact_p = std::nullopt) {
      PairRecord rec;
      rec.id = fam.id + "-p" + std::to_string(p) +
               (q >= 0 ? "q" + std::to_string(q) : "");
      rec.suite = fam.suite;
      rec.g_factors = std::move(g);
      rec.h_factors = std::move(h);
      rec.q_expr = std::move(q_expr);
      rec.expected_tempered = fam.expected_tempered;
      rec.expected_p = exact_p;
      rec.cite = fam.cite;
      out.push_back(std::move(rec));
    };
    const std::string& f = fam.family;
    if (f == "a1") {
      for (long q = 2; q + 2 <= max_p; ++q)
        for (long p = q + 2; p <= max_p; ++p)
          emit(p, q, {sl_name(p + q)}, {sl_name(p), sl_name(q)},
               "std@1 x ext(" + std::to_string(q - 1) + ")@2 +dual + trivial(1)");
    } else if (f == "a1-sub") {
      for (long q = 1; q + 2 <= max_p; ++q)
        for (long p = q + 2; p <= max_p; ++p)
          emit(p, q, {sl_name(p + q)}, {sl_name(p)},
               with_trivial(with_mult(q, "std@1") + " +dual", q * q),
               rat(p - 1, q));
    } else if (f == "a2") {
      for (long p = 2; p <= max_p; ++p)
        emit(p, -1, {sl_name(2 * p)}, {sp_name(p)}, "ext0(2)@1");
    } else if (f == "bd1") {
      for (long q = 3; q + 3 <= max_p; ++q)
        for (long p = q + 3; p <= max_p; ++p) {
          SoPiece hp = so_piece(p), hq = so_piece(q);
          std::vector<std::string> h = hp.factors;
          h.insert(h.end(), hq.factors.begin(), hq.factors.end());
          emit(p, q, so_piece(p + q).factors, h, vector_product({hp, hq}));
        }
    } else if (f == "bd1-sub") {
      for (long q = 1; q + 3 <= max_p; ++q)
        for (long p = q + 3; p <= max_p; ++p) {
          SoPiece hp = so_piece(p);
          emit(p, q, so_piece(p + q).factors, hp.factors,
               with_trivial(with_mult(q, vector_product({hp})), q * (q - 1) / 2),
               rat(p - 2, q));
        }
    } else if (f == "bd1-thin") {
      for (long p = 5; p <= max_p; ++p) {
        SoPiece hp = so_piece(p);
        emit(p, -1, so_piece(p + 2).factors, hp.factors,
             with_trivial(with_mult(2, vector_product({hp})), 1), rat(p - 2, 2));
      }
    } else if (f == "d2") {
      for (long p = 3; p <= max_p; ++p)
        emit(p, -1, so_piece(2 * p).factors, {sl_name(p)},
             "ext(2)@1 +dual + trivial(1)");
    } else if (f == "c1") {
      for (long q = 1; q + 1 <= max_p; ++q)
        for (long p = q + 1; p <= max_p; ++p)
          emit(p, q, {sp_name(p + q)}, {sp_name(p), sp_name(q)},
               "std@1 x std@2");
    } else if (f == "c1-sub") {
      for (long q = 1; q + 1 <= max_p; ++q)
        for (long p = q + 1; p <= max_p; ++p)
          emit(p, q, {sp_name(p + q)}, {sp_name(p)},
               with_trivial(with_mult(2 * q, "std@1"), q * (2 * q + 1)),
               rat(p, q));
    } else if (f == "c2") {
      for (long p = 1; p <= max_p; ++p)
        emit(p, -1, {sp_name(2 * p)}, {sp_name(p), sp_name(p)},
             "std@1 x std@2");
    } else {
      throw std::invalid_argument("unknown family key: " + f);
    }
  }
  return out;
}

Report verify_record(const PairRecord& rec) {
  if (!rec.family.empty())
    throw std::invalid_argument("family record '" + rec.id +
                                "' must be expanded before verification");
  Report rep;
  rep.id = rec.id;

  SemisimpleAlg h = make_alg(rec.h_factors);

  if (rec.starred) {
    rep.dims_ok = dims_consistent(rec, h, nullptr);
    bool met = rec.dims.size() == 3 && rec.dims[2] >= rec.threshold;
    rep.tempered = met;
    rep.ok = rep.dims_ok && met && rec.expected_tempered &&
             *rec.expected_tempered == met;
    std::ostringstream os;
    os << "dim q = " << (rec.dims.size() == 3 ? rec.dims[2] : -1)
       << (met ? " meets" : " misses") << " the small-module threshold "
       << rec.threshold;
    rep.detail = os.str();
    return rep;
  }

  ModuleExpr expr = parse_module_expr(rec.q_expr);
  ModuleSpec spec = lower_module_expr(h, expr);
  rep.dims_ok = dims_consistent(rec, h, &spec);

  Verdict v = temperedness_check(h, spec);
  rep.computed_p = v.p.str();
  rep.tempered = v.tempered;
  if (!v.tempered) rep.witness = v.witness;

  std::vector<std::string> problems;
  auto check_one = [&](const Verdict& verdict, const char* label) {
    if (rec.expected_p) {
      if (verdict.p.infinite || verdict.p.value != *rec.expected_p)
        problems.push_back(std::string(label) + "expected p = " +
                           rat_str(*rec.expected_p) + ", computed " +
                           verdict.p.str());
    }
    if (rec.expected_p_max) {
      if (verdict.p.infinite || verdict.p.value > *rec.expected_p_max)
        problems.push_back(std::string(label) + "expected p <= " +
                           rat_str(*rec.expected_p_max) + ", computed " +
                           verdict.p.str());
    }
    if (rec.expected_tempered && verdict.tempered != *rec.expected_tempered)
      problems.push_back(std::string(label) +
                         (*rec.expected_tempered
                              ? "expected rho_h <= rho_q, engine disagrees"
                              : "expected a separating vector, none exists"));
  };
  check_one(v, "");
  if (rec.ambiguous && problems.empty())
    for (const ModuleSpec& alt : alternate_specs(h, expr, spec))
      check_one(temperedness_check(h, alt), "alternate outer choice: ");

  if (!problems.empty()) {
    std::string joined;
    for (const auto& p : problems) {
      if (!joined.empty()) joined += "; ";
      joined += p;
    }
    rep.detail = joined;
  }
  rep.ok = rep.dims_ok && problems.empty();
  return rep;
}

std::string report_line(const Report& rep) {
  std::string s = rep.id + ": " + (rep.ok ? "agree" : "DISAGREE");
  if (!rep.computed_p.empty()) s += " p=" + rep.computed_p;
  s += rep.tempered ? " tempered" : " not-tempered";
  if (!rep.witness.empty()) s += " witness=" + vec_str(rep.witness);
  if (!rep.dims_ok) s += " dims-mismatch";
  if (!rep.detail.empty()) s += " [" + rep.detail + "]";
  return s;
}

std::string default_corpus_dir() {
  if (const char* env = std::getenv("TEMPER_CORPUS_DIR")) return env;
  return std::string(TEMPER_DATA_DIR) + "/corpus";
}

std::string corpus_path(const std::string& suite) {
  static const std::set<std::string> plain = {"air", "nir",  "eir",
                                              "abcd", "efg", "ral",
                                              "sal", "ghh",  "groups"};
  std::string name;
  if (plain.count(suite))
    name = suite;
  else if (suite == "witness-classical")
    name = "witness_classical";
  else if (suite == "witness-exceptional")
    name = "witness_exceptional";
  else
    throw std::invalid_argument("unknown suite name: " + suite);
  return default_corpus_dir() + "/" + name + ".json";
}

const std::vector<std::string>& pair_suites() {
  static const std::vector<std::string> suites = {
      "air", "nir", "eir", "abcd", "efg", "ral", "sal", "ghh"};
  return suites;
}

}  // namespace temper
