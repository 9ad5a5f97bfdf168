#include "cgn/rational.hpp"

#include <cctype>

namespace cgn {

Q parse_q(const std::string& text) {
  std::string s = text;
  auto slash = s.find('/');
  auto dot = s.find('.');
  try {
    if (dot != std::string::npos && slash == std::string::npos) {
      std::string intpart = s.substr(0, dot), frac = s.substr(dot + 1);
      bool neg = !intpart.empty() && intpart[0] == '-';
      if (neg) intpart = intpart.substr(1);
      if (intpart.empty()) intpart = "0";
      mpz_class num(intpart + frac), den = 1;
      for (size_t k = 0; k < frac.size(); ++k) den *= 10;
      Q q(num, den);
      q.canonicalize();
      return neg ? Q(-q) : q;
    }
    Q q(s);
    if (q.get_den() == 0) throw Error("SyntaxError", "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error("SyntaxError", "bad rational literal '" + text + "'");
  }
}

std::string to_string(const Q& q) { return q.get_str(); }

double to_double(const Q& q) { return q.get_d(); }

Q floor_q(const Q& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Q(r);
}

Q ceil_q(const Q& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Q(r);
}

bool is_integer(const Q& q) { return q.get_den() == 1; }

long to_long(const Q& q) {
  Q f = floor_q(q);
  if (!f.get_num().fits_slong_p()) throw Error("Overflow", "integer too large: " + q.get_str());
  return f.get_num().get_si();
}

bool exact_sqrt(const Q& q, Q& out) {
  if (sgn(q) < 0) return false;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn = sqrt(n), rd = sqrt(d);
  out = Q(rn, rd);
  out.canonicalize();
  return true;
}

Q pow_q(const Q& base, unsigned exp) {
  Q r = 1;
  for (unsigned k = 0; k < exp; ++k) r *= base;
  return r;
}

Q pow2(long e) {
  mpz_class p = 1;
  if (e >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    return Q(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(-e));
  return Q(mpz_class(1), p);
}

Coeff Coeff::inverse() const {
  Q n = norm2();
  if (sgn(n) == 0) throw Error("DivisionByZero", "inverse of zero coefficient");
  return {re / n, -im / n};
}

std::string to_string(const Coeff& c) {
  if (c.is_real()) return to_string(c.re);
  std::string im = to_string(c.im);
  if (sgn(c.re) == 0) return im + "*i";
  std::string sign = sgn(c.im) < 0 ? "" : "+";
  return "(" + to_string(c.re) + sign + im + "*i)";
}

}  // namespace cgn
