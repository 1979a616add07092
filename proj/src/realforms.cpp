#include "temper/realforms.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "temper/modexpr.hpp"

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

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error(file_label(path) + ": " + e.what());
  }
}

RatVec read_vec(const json& j, size_t dim, const std::string& file,
                const std::string& id, const std::string& field) {
  if (!j.is_array() || j.size() != dim)
    fail(file, id, field,
         "expected an array of " + std::to_string(dim) + " rationals");
  RatVec v;
  for (const auto& entry : j) {
    if (!entry.is_string())
      fail(file, id, field, "coordinates are written as strings");
    try {
      v.push_back(parse_rat(entry.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      fail(file, id, field, e.what());
    }
  }
  return v;
}

RatVec fold_line(RatVec v) {
  if (vcompare(v, vneg(v)) < 0) return vneg(v);
  return v;
}

bool lex_positive(const RatVec& v) { return vcompare(v, vneg(v)) > 0; }

RatVec image_of(const std::vector<RatVec>& map_rows, const RatVec& w) {
  RatVec out;
  out.reserve(map_rows.size());
  for (const auto& row : map_rows) out.push_back(dot(row, w));
  return out;
}

// Folded image multiset of the complex roots: one entry per opposite
// pair, counting the positive roots that land on either member.
std::map<RatVec, long, VecLess> root_images(const SemisimpleAlg& alg,
                                            const std::vector<RatVec>& map_rows,
                                            long* zero_images) {
  std::map<RatVec, long, VecLess> tally;
  long zeros = 0;
  for (size_t i = 0; i < alg.factors.size(); ++i)
    for (const auto& beta : alg.factors[i].positive_roots) {
      RatVec img = image_of(map_rows, alg.embed(static_cast<int>(i), beta));
      if (vzero(img))
        ++zeros;
      else
        tally[fold_line(std::move(img))] += 1;
    }
  if (zero_images) *zero_images = zeros;
  return tally;
}

// Returns "" when x is a usable Cartan point of alg, else the problem.
std::string cartan_point_error(const SemisimpleAlg& alg, const RatVec& x) {
  if (static_cast<int>(x.size()) != alg.ambient_dim)
    return "point has " + std::to_string(x.size()) + " coordinates, ambient is " +
           std::to_string(alg.ambient_dim);
  if (vzero(x)) return "point is zero";
  for (const auto& n : alg.span_rows())
    if (dot(n, x) != 0) return "point " + vec_str(x) + " is outside the Cartan subspace";
  return "";
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Deterministic nonzero rational point of the Cartan subspace: small
// integer coordinates projected orthogonally onto the span.
RatVec sample_cartan_point(const SemisimpleAlg& alg, std::mt19937_64& eng) {
  const std::vector<RatVec> normals = alg.span_rows();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RatVec v;
    v.reserve(alg.ambient_dim);
    for (int i = 0; i < alg.ambient_dim; ++i)
      v.push_back(rat(static_cast<long>(eng() % 19) - 9));
    if (!normals.empty()) {
      std::vector<RatVec> gram;
      RatVec rhs;
      for (const auto& a : normals) {
        RatVec row;
        for (const auto& b : normals) row.push_back(dot(a, b));
        gram.push_back(std::move(row));
        rhs.push_back(dot(a, v));
      }
      auto coeff = solve_linear(gram, rhs);
      for (size_t k = 0; k < normals.size(); ++k)
        v = vdiff(v, vscale((*coeff)[k], normals[k]));
    }
    if (!vzero(v)) return v;
  }
  throw std::runtime_error("could not sample a nonzero Cartan point of " +
                           alg.name());
}

const std::vector<std::string> kRestrictionNames = {
    "split_a2", "sl2H", "sl3H",  "so61",  "so52",
    "so71",     "so81", "so91",  "so111", "sostar8"};

const std::set<std::string> kWitnessFamilies = {"a1", "bd1", "c1",
                                                "a2", "c2",  "d2"};

const std::set<std::string> kWitnessPatterns = {
    "e1", "e1 + e2", "e1 - ep", "e1 + e2 - e(p-1) - ep"};

// "p = q+2", "p >= q+3", "p >= 2", "p = 3" with arbitrary spacing.
struct Relation {
  bool ge = false;
  bool has_q = false;
  long k = 0;
};

bool parse_relation(const std::string& text, Relation* out) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  size_t pos = 0;
  if (pos >= s.size() || s[pos] != 'p') return false;
  ++pos;
  Relation rel;
  if (s.compare(pos, 2, ">=") == 0) {
    rel.ge = true;
    pos += 2;
  } else if (pos < s.size() && s[pos] == '=') {
    ++pos;
  } else {
    return false;
  }
  if (s.compare(pos, 2, "q+") == 0) {
    rel.has_q = true;
    pos += 2;
  }
  if (pos >= s.size()) return false;
  size_t digits = 0;
  long k = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    k = 10 * k + (s[pos] - '0');
    ++pos;
    ++digits;
  }
  if (digits == 0 || pos != s.size()) return false;
  rel.k = k;
  *out = rel;
  return true;
}

std::string with_mult(long mult, const std::string& expr) {
  if (mult == 1) return expr;
  return std::to_string(mult) + " * " + expr;
}

std::string so_name(long p) {
  if (p % 2 == 1) return "B" + std::to_string((p - 1) / 2);
  return "D" + std::to_string(p / 2);
}

struct WitnessInstance {
  SemisimpleAlg h;
  ModuleSpec v;
  std::string label;
  std::vector<RatVec> vectors;  // claimed witnesses; empty when sampling
};

RatVec pattern_vector(const std::string& pattern, int n) {
  RatVec v(n, rat(0));
  if (pattern == "e1") {
    v[0] = 1;
  } else if (pattern == "e1 + e2") {
    v[0] = 1;
    v[1] = 1;
  } else if (pattern == "e1 - ep") {
    v[0] = 1;
    v[n - 1] = -1;
  } else {  // "e1 + e2 - e(p-1) - ep"
    v[0] = 1;
    v[1] = 1;
    v[n - 2] -= 1;
    v[n - 1] -= 1;
  }
  return v;
}

// The p range a relation allows for a fixed q (or ignoring q), clipped
// to [p_floor, max_p].
std::vector<long> relation_ps(const Relation& rel, long q, long p_floor,
                              long max_p) {
  long base = rel.has_q ? q + rel.k : rel.k;
  std::vector<long> ps;
  if (!rel.ge) {
    if (base >= p_floor && base <= max_p) ps.push_back(base);
    return ps;
  }
  for (long p = std::max(base, p_floor); p <= max_p; ++p) ps.push_back(p);
  return ps;
}

std::vector<WitnessInstance> family_instances(const WitnessCase& c,
                                              long max_p) {
  Relation rel;
  parse_relation(c.relation, &rel);
  std::vector<WitnessInstance> out;

  auto add = [&](long p, long q, const std::vector<std::string>& h_names,
                 const std::string& v_expr) {
    WitnessInstance inst;
    inst.h = make_alg(h_names);
    inst.v = parse_module(inst.h, v_expr);
    inst.label = "p=" + std::to_string(p);
    if (q > 0) inst.label += " q=" + std::to_string(q);
    for (const auto& pattern : c.witness_patterns)
      inst.vectors.push_back(pattern_vector(pattern, inst.h.ambient_dim));
    out.push_back(std::move(inst));
  };

  if (c.family == "a1" || c.family == "d2") {
    const std::string v_expr = c.family == "a1" ? "std@1 +dual" : "ext(2)@1 +dual";
    if (rel.has_q) {
      for (long q = 1; q <= max_p; ++q)
        for (long p : relation_ps(rel, q, 3, max_p))
          add(p, q, {"A" + std::to_string(p - 1)}, with_mult(q, v_expr));
    } else {
      for (long p : relation_ps(rel, 0, 3, max_p))
        add(p, 0, {"A" + std::to_string(p - 1)}, v_expr);
    }
  } else if (c.family == "bd1") {
    for (long q = 1; q <= max_p; ++q)
      for (long p : relation_ps(rel, q, 5, max_p))
        add(p, q, {so_name(p)}, with_mult(q, "std@1"));
  } else if (c.family == "c1") {
    for (long q = 1; q <= max_p; ++q)
      for (long p : relation_ps(rel, q, 1, max_p))
        add(p, q, {"C" + std::to_string(p)}, with_mult(q, "std@1"));
  } else if (c.family == "a2") {
    for (long p : relation_ps(rel, 0, 2, max_p))
      add(p, 0, {"C" + std::to_string(p)}, "ext0(2)@1");
  } else {  // c2
    for (long p : relation_ps(rel, 0, 1, max_p)) {
      const std::string cp = "C" + std::to_string(p);
      add(p, 0, {cp, cp}, "std@1 x std@2");
    }
  }
  return out;
}

}  // namespace

int RestrictedRootDatum::codomain_dim() const {
  return static_cast<int>(map.size());
}

RatVec RestrictedRootDatum::embed_point(const RatVec& y) const {
  if (y.size() != map.size())
    throw std::invalid_argument("point has " + std::to_string(y.size()) +
                                " coordinates, restriction codomain is " +
                                std::to_string(map.size()));
  RatVec x(complex_alg.ambient_dim, rat(0));
  for (size_t r = 0; r < map.size(); ++r)
    for (int i = 0; i < complex_alg.ambient_dim; ++i) x[i] += map[r][i] * y[r];
  return x;
}

std::vector<RatVec> RestrictedRootDatum::span_rows() const {
  std::vector<RatVec> rows;
  for (const auto& n : complex_alg.span_rows()) {
    RatVec img = image_of(map, n);
    if (!vzero(img)) rows.push_back(std::move(img));
  }
  return rows;
}

std::vector<RatVec> RestrictedRootDatum::cone_rows() const {
  std::vector<RatVec> rows;
  rows.reserve(restricted_roots.size());
  for (const auto& [vec, mult] : restricted_roots) rows.push_back(vec);
  return rows;
}

RestrictedRootDatum load_restriction(const std::string& path) {
  const json doc = parse_json_file(path);
  const std::string file = file_label(path);
  if (!doc.is_object() || !doc.contains("name") || !doc["name"].is_string())
    throw std::runtime_error(file + ": top level must be an object with a 'name'");

  RestrictedRootDatum d;
  d.name = doc["name"].get<std::string>();
  d.cite = doc.value("cite", "");

  if (!doc.contains("complex"))
    fail(file, d.name, "complex", "missing");
  std::vector<std::string> names;
  if (doc["complex"].is_array())
    for (const auto& f : doc["complex"]) {
      if (!f.is_string()) fail(file, d.name, "complex", "factor names must be strings");
      names.push_back(f.get<std::string>());
    }
  if (names.empty()) fail(file, d.name, "complex", "expected a nonempty array");
  try {
    d.complex_alg = make_alg(names);
  } catch (const std::invalid_argument& e) {
    fail(file, d.name, "complex", e.what());
  }

  if (!doc.contains("restricted_rank") || !doc["restricted_rank"].is_number_integer() ||
      doc["restricted_rank"].get<long>() < 1)
    fail(file, d.name, "restricted_rank", "expected a positive integer");
  d.restricted_rank = static_cast<int>(doc["restricted_rank"].get<long>());

  if (!doc.contains("map") || !doc["map"].is_array() || doc["map"].empty())
    fail(file, d.name, "map", "expected a nonempty array of rows");
  for (const auto& row : doc["map"])
    d.map.push_back(read_vec(row, d.complex_alg.ambient_dim, file, d.name, "map"));

  if (!doc.contains("restricted_roots") || !doc["restricted_roots"].is_array() ||
      doc["restricted_roots"].empty())
    fail(file, d.name, "restricted_roots", "expected a nonempty array");
  std::map<RatVec, long, VecLess> stored;
  for (const auto& entry : doc["restricted_roots"]) {
    if (!entry.is_object() || !entry.contains("vec") || !entry.contains("mult") ||
        !entry["mult"].is_number_integer() || entry["mult"].get<long>() < 1)
      fail(file, d.name, "restricted_roots",
           "entries are objects with 'vec' and a positive 'mult'");
    RatVec v = read_vec(entry["vec"], d.map.size(), file, d.name, "restricted_roots");
    if (!lex_positive(v))
      fail(file, d.name, "restricted_roots",
           "representatives have a positive first nonzero coordinate");
    if (!stored.emplace(std::move(v), entry["mult"].get<long>()).second)
      fail(file, d.name, "restricted_roots", "duplicate representative");
  }

  const auto images = root_images(d.complex_alg, d.map, nullptr);
  if (images != stored)
    fail(file, d.name, "restricted_roots",
         "stored roots disagree with the image multiset of the complex roots");
  d.restricted_roots.assign(stored.begin(), stored.end());

  std::vector<RatVec> root_vecs;
  for (const auto& [vec, mult] : d.restricted_roots) root_vecs.push_back(vec);
  if (matrix_rank(root_vecs) != d.restricted_rank)
    fail(file, d.name, "restricted_rank",
         "restricted roots span a space of a different dimension");
  const int cut = matrix_rank(d.span_rows());
  if (d.codomain_dim() - cut != d.restricted_rank)
    fail(file, d.name, "map",
         "the split subspace cut out of the codomain has the wrong dimension");
  return d;
}

RestrictedRootDatum restriction_datum(const std::string& name) {
  return load_restriction(std::string(TEMPER_DATA_DIR) + "/realforms/" + name +
                          ".json");
}

const std::vector<std::string>& restriction_names() { return kRestrictionNames; }

RhoFunction restrict_rho(const RhoFunction& f, const RestrictedRootDatum& d) {
  RhoFunction g;
  g.ambient_dim = d.codomain_dim();
  g.zero_mult = f.zero_mult;
  g.total_dim = f.total_dim;
  std::map<RatVec, long, VecLess> merged;
  for (const auto& [line, mult] : f.lines) {
    RatVec img = image_of(d.map, line);
    if (vzero(img))
      g.zero_mult += mult;
    else
      merged[fold_line(std::move(img))] += mult;
  }
  g.lines.assign(merged.begin(), merged.end());
  return g;
}

RhoFunction restricted_rho_h(const RestrictedRootDatum& d) {
  RhoFunction f;
  f.ambient_dim = d.codomain_dim();
  f.total_dim = d.complex_alg.dim();
  long covered = 0;
  for (const auto& [vec, mult] : d.restricted_roots) {
    f.lines.emplace_back(vec, 2 * mult);
    covered += 2 * mult;
  }
  f.zero_mult = f.total_dim - covered;
  return f;
}

PvResult real_pv(const RestrictedRootDatum& d, const ModuleSpec& spec) {
  check_spec(d.complex_alg, spec);
  const RhoFunction den = restricted_rho_h(d);
  const RhoFunction num = restrict_rho(module_weights(d.complex_alg, spec), d);
  return compute_pv_over_cone(den, num, d.cone_rows(), d.span_rows());
}

bool check_witness_vector(const SemisimpleAlg& h, const ModuleSpec& v,
                          const RatVec& x) {
  check_spec(h, v);
  const std::string err = cartan_point_error(h, x);
  if (!err.empty()) throw std::invalid_argument(err);
  return rho_eval(rho_h(h), x) > rho_eval(module_weights(h, v), x);
}

WitnessSuite load_witness_corpus(const std::string& path) {
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

  WitnessSuite suite;
  suite.suite = doc.value("suite", "");
  suite.description = doc.value("description", "");

  std::set<std::string> seen;
  for (const auto& j : doc["records"]) {
    if (!j.is_object() || !j.contains("id") || !j["id"].is_string())
      throw std::runtime_error(file + ": every record needs a string 'id'");

    WitnessCase c;
    c.suite = suite.suite;
    c.id = j["id"].get<std::string>();
    if (!seen.insert(c.id).second) fail(file, c.id, "id", "duplicate");

    c.case_name = j.value("case", "");
    c.family = j.value("family", "");
    c.relation = j.value("relation", "");
    c.real_forms = j.value("real_forms", "");
    c.note = j.value("note", "");
    c.cite = j.value("cite", "");
    c.any_nonzero = j.value("any_nonzero", false);
    c.pair_witness = j.value("pair_witness", false);

    if (j.contains("expected_witnesses")) {
      if (!j["expected_witnesses"].is_array() || j["expected_witnesses"].empty())
        fail(file, c.id, "expected_witnesses", "expected a nonempty array");
      for (const auto& p : j["expected_witnesses"]) {
        if (!p.is_string() || !kWitnessPatterns.count(p.get<std::string>()))
          fail(file, c.id, "expected_witnesses", "unknown vector pattern");
        c.witness_patterns.push_back(p.get<std::string>());
      }
    }

    int claims = (c.any_nonzero ? 1 : 0) + (c.pair_witness ? 1 : 0) +
                 (c.witness_patterns.empty() ? 0 : 1) +
                 (j.contains("witnesses") ? 1 : 0);
    if (claims != 1)
      fail(file, c.id, "witnesses",
           "exactly one of expected_witnesses, witnesses, any_nonzero, "
           "pair_witness");

    if (!c.family.empty()) {
      if (!kWitnessFamilies.count(c.family))
        fail(file, c.id, "family", "unknown family key");
      Relation rel;
      if (!parse_relation(c.relation, &rel))
        fail(file, c.id, "relation", "expected 'p = q+K', 'p >= q+K' or 'p >= K'");
      if (j.contains("h") || j.contains("v") || j.contains("witnesses"))
        fail(file, c.id, "family",
             "family rows carry no h, v or explicit witnesses");
      if (c.pair_witness && c.family != "c2")
        fail(file, c.id, "pair_witness", "only the c2 family samples pairs");
      suite.cases.push_back(std::move(c));
      continue;
    }

    if (!j.contains("h") || !j["h"].is_object() || !j["h"].contains("factors") ||
        !j["h"]["factors"].is_array() || j["h"]["factors"].empty())
      fail(file, c.id, "h", "expected an object with a nonempty 'factors' array");
    for (const auto& f : j["h"]["factors"]) {
      if (!f.is_string()) fail(file, c.id, "h", "factor names must be strings");
      c.h_factors.push_back(f.get<std::string>());
    }
    SemisimpleAlg h;
    try {
      h = make_alg(c.h_factors);
    } catch (const std::invalid_argument& e) {
      fail(file, c.id, "h", e.what());
    }

    if (!j.contains("v") || !j["v"].is_string()) fail(file, c.id, "v", "missing");
    c.v_expr = j["v"].get<std::string>();
    try {
      parse_module(h, c.v_expr);
    } catch (const std::invalid_argument& e) {
      fail(file, c.id, "v", e.what());
    }

    if (c.pair_witness) fail(file, c.id, "pair_witness", "family rows only");
    if (j.contains("witnesses")) {
      if (!j["witnesses"].is_array() || j["witnesses"].empty())
        fail(file, c.id, "witnesses", "expected a nonempty array of vectors");
      for (const auto& w : j["witnesses"]) {
        RatVec x = read_vec(w, h.ambient_dim, file, c.id, "witnesses");
        const std::string err = cartan_point_error(h, x);
        if (!err.empty()) fail(file, c.id, "witnesses", err);
        c.witnesses.push_back(std::move(x));
      }
    }
    suite.cases.push_back(std::move(c));
  }
  return suite;
}

WitnessReport verify_witness_case(const WitnessCase& c, long max_p,
                                  int samples) {
  WitnessReport rep;
  rep.id = c.id;
  rep.ok = true;

  auto check_one = [&](const WitnessInstance& inst, const RatVec& x) {
    ++rep.checked;
    if (check_witness_vector(inst.h, inst.v, x)) return;
    rep.ok = false;
    if (rep.detail.empty()) {
      std::string where = inst.label.empty() ? "" : inst.label + ": ";
      rep.detail = where + "rho_h <= rho_V at " + vec_str(x);
    }
  };

  auto sample_into = [&](WitnessInstance& inst) {
    std::mt19937_64 eng(fnv1a(c.id + "|" + inst.label));
    for (int s = 0; s < samples; ++s) {
      if (c.pair_witness) {
        const auto& cp = inst.h.factors[0];
        RatVec y;
        do {
          y.clear();
          for (int i = 0; i < cp.ambient_dim; ++i)
            y.push_back(rat(static_cast<long>(eng() % 19) - 9));
        } while (vzero(y));
        RatVec x = inst.h.embed(0, y);
        x = vsum(x, inst.h.embed(1, y));
        inst.vectors.push_back(std::move(x));
      } else {
        inst.vectors.push_back(sample_cartan_point(inst.h, eng));
      }
    }
  };

  std::vector<WitnessInstance> instances;
  if (c.family.empty()) {
    WitnessInstance inst;
    inst.h = make_alg(c.h_factors);
    inst.v = parse_module(inst.h, c.v_expr);
    inst.vectors = c.witnesses;
    instances.push_back(std::move(inst));
  } else {
    instances = family_instances(c, max_p);
    if (instances.empty()) {
      rep.ok = false;
      rep.detail = "relation '" + c.relation + "' admits no instance up to p = " +
                   std::to_string(max_p);
      return rep;
    }
  }

  for (auto& inst : instances) {
    if (c.any_nonzero || c.pair_witness) sample_into(inst);
    for (const auto& x : inst.vectors) check_one(inst, x);
  }
  return rep;
}

std::string witness_report_line(const WitnessReport& rep) {
  std::string s = rep.id + ": " + (rep.ok ? "agree" : "DISAGREE");
  s += " checked=" + std::to_string(rep.checked);
  if (!rep.detail.empty()) s += " [" + rep.detail + "]";
  return s;
}

}  // namespace temper
