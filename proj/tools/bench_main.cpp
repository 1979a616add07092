#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "temper/suites.hpp"

namespace {

using namespace temper;
using Clock = std::chrono::steady_clock;

double best_ms(int repeat, const std::function<SuiteResult()>& fn,
               SuiteResult* out) {
  double best = 0.0;
  for (int r = 0; r < repeat; ++r) {
    auto t0 = Clock::now();
    SuiteResult result = fn();
    auto t1 = Clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (r == 0 || ms < best) {
      best = ms;
      *out = std::move(result);
    }
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs fanned-out suite verification timings"};
  std::vector<std::string> picked;
  int jobs =
#ifdef _OPENMP
      omp_get_max_threads();
#else
      2;
#endif
  int repeat = 1;
  app.add_option("--suite", picked, "Suites to time (default: all)");
  app.add_option("--jobs", jobs, "Thread count for the fanned-out path")
      ->check(CLI::PositiveNumber);
  app.add_option("--repeat", repeat, "Keep the best of N runs")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::string>& names =
      picked.empty() ? suite_names() : picked;
  std::printf("%-22s %8s %12s %14s %8s %10s\n", "suite", "records",
              "serial ms", "parallel ms", "speedup", "identical");

  bool all_ok = true;
  for (const auto& name : names) {
    SuiteResult serial_result, parallel_result;
    double serial_ms =
        best_ms(repeat, [&] { return run_suite_serial(name); }, &serial_result);
    double parallel_ms = best_ms(
        repeat, [&] { return run_suite(name, jobs); }, &parallel_result);
    bool identical = serial_result.report == parallel_result.report;
    all_ok = all_ok && identical && serial_result.disagreed == 0;
    std::printf("%-22s %8ld %12.1f %14.1f %8.2f %10s\n", name.c_str(),
                serial_result.checked, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                identical ? "yes" : "NO");
  }
  if (!all_ok) {
    std::cerr << "mismatch or disagreement detected\n";
    return 1;
  }
  return 0;
}
