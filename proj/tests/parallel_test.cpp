#include <doctest.h>

#include <stdexcept>
#include <string>

#include "temper/suites.hpp"

using namespace temper;

TEST_SUITE("parallel") {

TEST_CASE("suite inventory") {
  const auto& names = suite_names();
  REQUIRE(names.size() == 10);
  CHECK(names.front() == "air");
  CHECK(names.back() == "witness-exceptional");
  CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
}

TEST_CASE("serial and parallel reports are byte-identical") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    SuiteResult serial = run_suite_serial(name);
    SuiteResult parallel = run_suite(name, 4);
    CHECK(serial.checked > 0);
    CHECK(serial.disagreed == 0);
    CHECK(parallel.checked == serial.checked);
    CHECK(parallel.disagreed == serial.disagreed);
    CHECK(parallel.report == serial.report);
  }
}

TEST_CASE("the job count never changes the merged report") {
  SuiteResult reference = run_suite("air", 1);
  CHECK(reference.checked == 32);
  for (int jobs : {2, 3, 8}) {
    CAPTURE(jobs);
    SuiteResult r = run_suite("air", jobs);
    CHECK(r.report == reference.report);
  }
}

TEST_CASE("family rows are expanded before the fan-out") {
  SuiteResult abcd = run_suite("abcd", 2);
  CHECK(abcd.checked == 142);
  CHECK(abcd.disagreed == 0);

  SuiteResult wc = run_suite("witness-classical", 2);
  CHECK(wc.checked == 13);
  CHECK(wc.report.find("wc-c1: agree checked=56") != std::string::npos);
}

}  // TEST_SUITE
