#include <chrono>
#include <cstdio>
#include <iostream>

#include "cgn/suites.hpp"

namespace {

struct Criterion {
  int number;
  const char* title;
  const char* suite;
};

const Criterion kCriteria[] = {
    {1, "ultrametric and ring axioms on random numbers", "ultrametric"},
    {2, "exchange property via clean idempotents", "exchange"},
    {3, "zero-divisor splitting and its equivalences", "zero-divisor"},
    {4, "Bezout generators and meets of principal ideals", "bezout"},
    {5, "closed finitely generated ideals: equivalence matrix", "thm-closed-fin-gen"},
    {6, "gallery certificates", "gallery"},
    {7, "annihilator witnesses versus closure", "annihilator"},
    {8, "filter quotients", "quotient"},
    {9, "oracle concordance at depth 64", "oracle"},
    {10, "script language: golden round-trip, determinism, fuzzing", "cli"},
};

}  // namespace

int main() {
  int failed = 0;
  auto start = std::chrono::steady_clock::now();
  for (const Criterion& c : kCriteria) {
    auto t0 = std::chrono::steady_clock::now();
    cgn::SuiteReport r = cgn::run_suite(c.suite, 0, 64);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d %s: %s [%s] %zu checks passed, %zu failed, %zu/%zu cases skipped (%.2fs)\n",
                c.number, r.ok() ? "PASS" : "FAIL", c.title, c.suite, r.passed, r.failed, r.skipped, r.cases, secs);
    if (!r.ok()) {
      ++failed;
      for (const auto& f : r.failures) {
        std::printf("    %s [seed %llu]: %s\n", f.property.c_str(), static_cast<unsigned long long>(f.seed),
                    f.counterexample.substr(0, 400).c_str());
      }
    }
    std::fflush(stdout);
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 10 criteria passed in %.2fs\n", 10 - failed, total);
  return failed == 0 ? 0 : 1;
}
