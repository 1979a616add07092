#include "temper/suites.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <stdexcept>

#include "temper/pairdb.hpp"
#include "temper/realforms.hpp"

namespace temper {
namespace {

const std::vector<std::string> kWitnessSuites = {"witness-classical",
                                                 "witness-exceptional"};

bool is_witness_suite(const std::string& suite) {
  return std::find(kWitnessSuites.begin(), kWitnessSuites.end(), suite) !=
         kWitnessSuites.end();
}

// One record check as a closure over its index, so the fan-out below is
// uniform across record kinds.
struct SuiteJob {
  std::string suite;
  long n = 0;
  std::function<void(long, std::string*, bool*)> run_one;
};

SuiteJob make_job(const std::string& suite) {
  SuiteJob job;
  job.suite = suite;
  if (is_witness_suite(suite)) {
    auto cases = std::make_shared<std::vector<WitnessCase>>(
        load_witness_corpus(corpus_path(suite)).cases);
    job.n = static_cast<long>(cases->size());
    job.run_one = [cases](long i, std::string* line, bool* ok) {
      WitnessReport rep = verify_witness_case((*cases)[i]);
      *line = witness_report_line(rep);
      *ok = rep.ok;
    };
    return job;
  }
  auto records = std::make_shared<std::vector<PairRecord>>(
      expand_families(load_corpus(corpus_path(suite)).records));
  job.n = static_cast<long>(records->size());
  job.run_one = [records](long i, std::string* line, bool* ok) {
    Report rep = verify_record((*records)[i]);
    *line = report_line(rep);
    *ok = rep.ok;
  };
  return job;
}

SuiteResult collect(const std::string& suite, const std::vector<std::string>& lines,
                    const std::vector<char>& oks) {
  SuiteResult result;
  result.suite = suite;
  result.checked = static_cast<long>(lines.size());
  for (size_t i = 0; i < lines.size(); ++i) {
    if (!oks[i]) ++result.disagreed;
    result.report += lines[i];
    result.report += '\n';
  }
  return result;
}

void run_slot(const SuiteJob& job, long i, std::vector<std::string>* lines,
              std::vector<char>* oks) {
  try {
    bool ok = false;
    job.run_one(i, &(*lines)[i], &ok);
    (*oks)[i] = ok ? 1 : 0;
  } catch (const std::exception& e) {
    (*lines)[i] = std::string("record ") + std::to_string(i) + ": ERROR " + e.what();
    (*oks)[i] = 0;
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> all = pair_suites();
    all.insert(all.end(), kWitnessSuites.begin(), kWitnessSuites.end());
    return all;
  }();
  return names;
}

SuiteResult run_suite_serial(const std::string& suite) {
  SuiteJob job = make_job(suite);
  std::vector<std::string> lines(job.n);
  std::vector<char> oks(job.n, 0);
  for (long i = 0; i < job.n; ++i) run_slot(job, i, &lines, &oks);
  return collect(suite, lines, oks);
}

SuiteResult run_suite(const std::string& suite, int jobs) {
  if (jobs <= 1) return run_suite_serial(suite);
  SuiteJob job = make_job(suite);
  std::vector<std::string> lines(job.n);
  std::vector<char> oks(job.n, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
  for (long i = 0; i < job.n; ++i) run_slot(job, i, &lines, &oks);
  return collect(suite, lines, oks);
}

}  // namespace temper
