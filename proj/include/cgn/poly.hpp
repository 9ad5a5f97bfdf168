#pragma once

// Exponent functions and graded values.
//
// An exponent function is a separable polynomial E(i, j) = p(i) + q(j) in the
// piece coordinates of a block. A graded value is a ratio of finite sums of
// terms c * eps^E.

#include <optional>
#include <string>
#include <vector>

#include "cgn/rational.hpp"

namespace cgn {

/// Univariate polynomial with rational coefficients, lowest degree first.
using UPoly = std::vector<Q>;

void trim(UPoly& p);
int degree(const UPoly& p);  // -1 for the zero polynomial
Q eval(const UPoly& p, const Q& x);
/// Sign of the polynomial for all sufficiently large integer arguments.
int eventual_sign(const UPoly& p);
/// Smallest T >= from such that p has the eventual sign on every integer k >= T.
long sign_threshold(const UPoly& p, long from);

/// Infimum and supremum of p over the integers k >= from; nullopt means
/// unbounded in that direction.
struct Range {
  std::optional<Q> lo, hi;
};
Range range_from(const UPoly& p, long from);

/// Separable exponent p(i) + q(j). The constant lives in p; q has no constant.
class SepPoly {
 public:
  SepPoly() = default;
  SepPoly(Q c) : p_{std::move(c)} { norm(); }
  static SepPoly in_i(UPoly p);
  static SepPoly in_j(UPoly q);  // q[0] is folded into the constant

  const UPoly& p() const { return p_; }
  const UPoly& q() const { return q_; }
  int deg_i() const { return std::max(0, degree(p_)); }
  int deg_j() const { return std::max(0, degree(q_)); }
  bool is_const() const { return degree(p_) <= 0 && degree(q_) <= 0; }
  bool depends_i() const { return degree(p_) > 0; }
  bool depends_j() const { return degree(q_) > 0; }
  Q constant() const { return p_.empty() ? Q(0) : p_[0]; }

  Q at(long i, long j) const;
  SepPoly fix_i(long i) const;
  SepPoly fix_j(long j) const;
  /// q(j) with the constant of p included, as a univariate polynomial.
  UPoly as_j(long fixed_i) const;

  friend SepPoly operator+(const SepPoly& a, const SepPoly& b);
  friend SepPoly operator-(const SepPoly& a, const SepPoly& b);
  friend SepPoly operator*(const Q& k, const SepPoly& a);
  friend bool operator==(const SepPoly& a, const SepPoly& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
  friend bool operator!=(const SepPoly& a, const SepPoly& b) { return !(a == b); }
  friend bool operator<(const SepPoly& a, const SepPoly& b);

  /// Rendering in i and j, e.g. "2*i^2+i+1" or "(i+1)+(j+1)".
  std::string to_string() const;

 private:
  UPoly p_, q_;
  void norm();
};

struct Term {
  Coeff c;
  SepPoly e;
};

/// Finite sum of terms. `merged()` combines equal exponents and drops zeros,
/// sorting structurally; dominance order is imposed by the law layer.
struct GradedPoly {
  std::vector<Term> terms;

  static GradedPoly monomial(Coeff c, SepPoly e);
  static GradedPoly constant(Coeff c) { return monomial(std::move(c), SepPoly()); }

  bool is_zero() const { return terms.empty(); }
  bool is_const_exponent() const;
  bool depends_i() const;
  bool depends_j() const;
  GradedPoly merged() const;
  GradedPoly fix_i(long i) const;
  GradedPoly fix_j(long j) const;
  GradedPoly conj() const;
  GradedPoly shift(const SepPoly& by) const;
  GradedPoly scale(const Coeff& k) const;

  friend GradedPoly operator+(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator-(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  /// Structural equality after merging.
  friend bool same(const GradedPoly& a, const GradedPoly& b);

  std::string to_string() const;
};

/// num / den with den nonzero.
struct Value {
  GradedPoly num, den;

  static Value of(GradedPoly n) { return {std::move(n), GradedPoly::constant(Coeff(Q(1)))}; }
  bool is_zero() const { return num.is_zero(); }
  bool depends_i() const { return num.depends_i() || den.depends_i(); }
  bool depends_j() const { return num.depends_j() || den.depends_j(); }
  Value fix_i(long i) const { return {num.fix_i(i), den.fix_i(i)}; }
  Value fix_j(long j) const { return {num.fix_j(j), den.fix_j(j)}; }
  Value conj() const { return {num.conj(), den.conj()}; }
  Value inverse() const;

  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Value& b);
  friend Value operator*(const Value& a, const Value& b);
  friend Value operator-(const Value& a) { return {GradedPoly() - a.num, a.den}; }
  /// Equality as rational functions (cross-multiplication).
  friend bool equivalent(const Value& a, const Value& b);

  std::string to_string() const;
};

/// Exact reduction of a value with constant exponents: cancels the gcd of
/// numerator and denominator viewed as Laurent polynomials in eps^(1/L).
Value reduce_plain(const Value& v);

}  // namespace cgn
