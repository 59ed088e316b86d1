#include <chrono>
#include <cstdio>

#include <omp.h>

#include "polya/batch.hpp"

using namespace polya;
using clock_type = std::chrono::steady_clock;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = clock_type::now();
  f();
  const auto t1 = clock_type::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-36s serial %8.3fs  openmp %8.3fs  speedup %.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
  const int threads = omp_get_max_threads();
  std::printf("threads: %d\n", threads);

  report("a1 corpus (q1*q2 <= 20000)",
         seconds([] { a1_corpus(20000, serial_policy()); }),
         seconds([] { a1_corpus(20000, parallel_policy()); }));

  report("a2 corpus (p1*p2*p3 <= 200000)",
         seconds([] { a2_corpus(200000, serial_policy()); }),
         seconds([] { a2_corpus(200000, parallel_policy()); }));

  report("hilbert crosscheck (d <= 2000)",
         seconds([] { crosscheck_disagreements(2000, serial_policy()); }),
         seconds([] { crosscheck_disagreements(2000, parallel_policy()); }));

  report("search case1 (bound 400)",
         seconds([] { enumerate_tuples(case_preset(CaseId::case1, 400, 0), serial_policy()); }),
         seconds([] { enumerate_tuples(case_preset(CaseId::case1, 400, 0), parallel_policy()); }));

  report("verify-theorem (bound 300, limit 10)",
         seconds([] { verify_theorem(300, std::nullopt, 10, serial_policy()); }),
         seconds([] { verify_theorem(300, std::nullopt, 10, parallel_policy()); }));
  return 0;
}
