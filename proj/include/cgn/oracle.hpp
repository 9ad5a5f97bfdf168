#pragma once

// Floating-point sampling of representatives. Used only to falsify symbolic
// results; it never certifies an equality.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "cgn/gennum.hpp"

namespace cgn {

struct SampleProfile {
  long depth = 64;         // deepest block sampled
  int per_block = 3;       // grid point, midpoint, lower point
};

/// value = mantissa * 2^scale.
struct Sample {
  std::uint64_t block = 0;
  Q eps;
  double log2_eps = 0;
  bool zero = true;
  std::complex<long double> mantissa;
  long double scale = 0;

  long double log2_abs() const;
  std::complex<double> value() const;
};

std::vector<Sample> sample_net(const GenNum& x, const SampleProfile& p = {});
std::string sample_csv(const std::vector<Sample>& table);

struct OracleInterval {
  double lo, hi;
  std::size_t samples = 0;
  bool contains(double v) const { return lo <= v && v <= hi; }
};
/// Bracket for the valuation from the smallest log-slope over blocks N/2..N.
OracleInterval oracle_val(const GenNum& x, const SampleProfile& p = {});

enum class Verdict { ConsistentWith, Contradicts };
std::string to_string(Verdict v);
/// Pointwise x <= y (real parts) beyond depth N/2, relative margin 1e-6.
Verdict oracle_leq(const GenNum& x, const GenNum& y, const SampleProfile& p = {});
/// Pointwise agreement beyond depth N/2, relative margin 1e-6.
Verdict oracle_eq(const GenNum& x, const GenNum& y, const SampleProfile& p = {});

}  // namespace cgn
