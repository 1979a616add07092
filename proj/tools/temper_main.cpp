#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "temper/modexpr.hpp"
#include "temper/pairdb.hpp"
#include "temper/suites.hpp"

namespace {

using namespace temper;

// "B3" or "A1+C3", matching SemisimpleAlg::name().
SemisimpleAlg parse_algebra(const std::string& text) {
  std::vector<std::string> names;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, '+')) {
    size_t a = piece.find_first_not_of(" \t");
    size_t b = piece.find_last_not_of(" \t");
    if (a != std::string::npos) names.push_back(piece.substr(a, b - a + 1));
  }
  return make_alg(names);
}

int run_pv(const std::string& algebra, const std::string& rep) {
  SemisimpleAlg alg = parse_algebra(algebra);
  PvResult r = compute_pv(alg, parse_module(alg, rep));
  std::cout << r.str() << "\n";
  std::cout << (r.infinite ? "vanishing direction = " : "minimizer = ")
            << vec_str(r.minimizer) << "\n";
  std::cout << "dim V = " << r.dim << "\n";
  return 0;
}

int run_check_pair(const std::string& corpus, const std::string& id,
                   bool json_out) {
  std::string path = corpus;
  if (!std::filesystem::exists(path)) path = corpus_path(corpus);
  std::vector<PairRecord> records = expand_families(load_corpus(path).records);
  if (!id.empty()) {
    std::vector<PairRecord> picked;
    for (const auto& rec : records)
      if (rec.id == id) picked.push_back(rec);
    if (picked.empty())
      throw std::invalid_argument("no record with id '" + id + "' in " + path);
    records = std::move(picked);
  }

  long disagreed = 0;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& rec : records) {
    Report rep = verify_record(rec);
    if (!rep.ok) ++disagreed;
    if (json_out) {
      nlohmann::json row;
      row["id"] = rep.id;
      row["ok"] = rep.ok;
      if (!rep.computed_p.empty()) row["p"] = rep.computed_p;
      row["tempered"] = rep.tempered;
      if (!rep.witness.empty()) row["witness"] = vec_str(rep.witness);
      if (!rep.detail.empty()) row["detail"] = rep.detail;
      rows.push_back(std::move(row));
    } else {
      std::cout << report_line(rep) << "\n";
    }
  }
  if (json_out) {
    nlohmann::json out;
    out["corpus"] = path;
    out["checked"] = records.size();
    out["disagreed"] = disagreed;
    out["records"] = std::move(rows);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << records.size() << " checked, " << disagreed << " disagreed\n";
  }
  return disagreed == 0 ? 0 : 1;
}

int run_verify(const std::string& suite, int jobs, bool json_out) {
  SuiteResult r = run_suite(suite, jobs);
  if (json_out) {
    nlohmann::json out;
    out["suite"] = r.suite;
    out["checked"] = r.checked;
    out["disagreed"] = r.disagreed;
    nlohmann::json rows = nlohmann::json::array();
    std::stringstream ss(r.report);
    std::string line;
    while (std::getline(ss, line)) rows.push_back(line);
    out["records"] = std::move(rows);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.report;
    std::cout << "suite " << r.suite << ": " << r.checked << " checked, "
              << r.disagreed << " disagreed\n";
  }
  return r.disagreed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact temperedness engine for reductive pairs"};
  app.require_subcommand(1);

  std::string algebra, rep;
  CLI::App* pv = app.add_subcommand(
      "pv", "Exact p of a module: rho_h <= t rho_V threshold");
  pv->add_option("--algebra", algebra, "Algebra, e.g. C3 or A1+C3")->required();
  pv->add_option("--rep", rep, "Module expression, e.g. \"ext0(3)@1\"")
      ->required();

  std::string corpus, id;
  bool pair_json = false;
  CLI::App* check = app.add_subcommand(
      "check-pair", "Verify corpus records against their expectations");
  check->add_option("--corpus", corpus, "Corpus file path or suite name")
      ->required();
  check->add_option("--id", id, "Verify a single record");
  check->add_flag("--json", pair_json, "Machine-readable output");

  std::string suite;
  int jobs = 1;
  bool suite_json = false;
  CLI::App* verify =
      app.add_subcommand("verify", "Run one verification suite end to end");
  verify->add_option("--suite", suite, "One of: air nir eir abcd efg ral sal ghh witness-classical witness-exceptional")
      ->required();
  verify->add_option("--jobs", jobs, "Fan records out across N threads")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--json", suite_json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (pv->parsed()) return run_pv(algebra, rep);
    if (check->parsed()) return run_check_pair(corpus, id, pair_json);
    return run_verify(suite, jobs, suite_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
