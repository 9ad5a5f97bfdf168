#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cgn {

using Q = mpq_class;

/// Base error for every failure surfaced by the library.
struct Error : std::runtime_error {
  std::string kind;
  Error(std::string k, const std::string& msg) : std::runtime_error(msg), kind(std::move(k)) {}
};

inline Q make_q(long num, long den = 1) {
  Q q(num, den);
  q.canonicalize();
  return q;
}

Q parse_q(const std::string& text);
std::string to_string(const Q& q);
double to_double(const Q& q);
Q floor_q(const Q& q);
Q ceil_q(const Q& q);
bool is_integer(const Q& q);
long to_long(const Q& q);
/// Exact square root when q is a square of a rational.
bool exact_sqrt(const Q& q, Q& out);
Q pow_q(const Q& base, unsigned exp);
Q pow2(long e);

/// Gaussian rational, the scalar field in both coefficient modes.
struct Coeff {
  Q re, im;

  Coeff() = default;
  Coeff(Q r) : re(std::move(r)), im(0) {}
  Coeff(Q r, Q i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  Q norm2() const { return re * re + im * im; }
  Coeff conj() const { return {re, -im}; }
  Coeff inverse() const;

  friend Coeff operator+(const Coeff& a, const Coeff& b) { return {a.re + b.re, a.im + b.im}; }
  friend Coeff operator-(const Coeff& a, const Coeff& b) { return {a.re - b.re, a.im - b.im}; }
  friend Coeff operator-(const Coeff& a) { return {-a.re, -a.im}; }
  friend Coeff operator*(const Coeff& a, const Coeff& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Coeff operator/(const Coeff& a, const Coeff& b) { return a * b.inverse(); }
  friend bool operator==(const Coeff& a, const Coeff& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }
  /// Total order used only for canonical sorting.
  friend bool operator<(const Coeff& a, const Coeff& b) {
    return a.re < b.re || (a.re == b.re && a.im < b.im);
  }
};

std::string to_string(const Coeff& c);

}  // namespace cgn
