#pragma once

// Seeded property suites over random and fixed corpora. Each suite reports
// pass/fail counts per property and, for every failing property, the
// smallest counterexample seen together with the seed that reproduces it.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "cgn/gennum.hpp"

namespace cgn {

/// Random sets and generalized numbers drawn from small, fast shapes.
class RandomCorpus {
 public:
  explicit RandomCorpus(std::uint64_t seed, Mode m = Mode::R) : rng_(seed), mode_(m) {}

  long uniform(long lo, long hi);
  bool chance(double p);

  Q exponent();
  Coeff coeff();
  IndexSet set();
  /// A set that is neither null nor full at 0.
  IndexSet splitting_set();
  GenNum monomial();
  GenNum graded_term();
  GenNum element();
  /// Nonzero at every sampled block from 32 on, with valuation attained at
  /// a Nu2 piece of index at most 4.
  GenNum oracle_element();

  Mode mode() const { return mode_; }

 private:
  std::mt19937_64 rng_;
  Mode mode_;
};

struct PropertyFailure {
  std::string property;
  std::uint64_t seed = 0;
  std::string counterexample;
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  long depth = 64;
  std::size_t passed = 0, failed = 0;
  // Random cases abandoned because an intermediate value exceeded the
  // representation limits (ResourceLimit); at most 5% are tolerated.
  std::size_t cases = 0, skipped = 0;
  std::map<std::string, std::pair<std::size_t, std::size_t>> properties;  // name -> (passed, failed)
  std::vector<PropertyFailure> failures;

  bool ok() const { return failed == 0 && passed > 0 && skipped * 20 <= cases; }
  nlohmann::json to_json() const;
  std::string summary() const;
};

const std::vector<std::string>& suite_names();
/// Throws UnknownSuite.
SuiteReport run_suite(const std::string& name, std::uint64_t seed = 0, long depth = 64);

/// Canonical golden script and its expected report, fixed at build time.
const std::string& golden_script();
const std::string& golden_report();

/// A random script for robustness testing; mixes well-formed statements
/// with character-level mutations.
std::string fuzz_script(std::mt19937_64& rng);

}  // namespace cgn
