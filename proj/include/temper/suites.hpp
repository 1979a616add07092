#pragma once

#include <string>
#include <vector>

namespace temper {

struct SuiteResult {
  std::string suite;
  long checked = 0;    // records verified after family expansion
  long disagreed = 0;  // records whose computed outcome missed the expectation
  std::string report;  // one line per record, in corpus order
};

// Every runnable suite: the pair-table suites, the check-pair-only groups
// corpus, and the two witness tables.
const std::vector<std::string>& suite_names();

// Verifies all records of one suite. jobs > 1 fans records out across
// OpenMP threads into indexed slots, so the merged report is byte-equal
// to the serial one for any job count. Unknown names throw
// std::invalid_argument.
SuiteResult run_suite(const std::string& suite, int jobs = 1);

// Plain-loop reference path; run_suite(suite, 1) takes this route.
SuiteResult run_suite_serial(const std::string& suite);

}  // namespace temper
