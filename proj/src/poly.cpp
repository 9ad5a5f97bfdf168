#include "cgn/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cgn {

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const UPoly& p) {
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
    if (sgn(p[static_cast<std::size_t>(k)]) != 0) return k;
  }
  return -1;
}

Q eval(const UPoly& p, const Q& x) {
  Q r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

int eventual_sign(const UPoly& p) {
  int d = degree(p);
  return d < 0 ? 0 : sgn(p[static_cast<std::size_t>(d)]);
}

namespace {

constexpr long kScanLimit = 1L << 20;

// Coefficients of p(x + 1) - p(x).
UPoly forward_difference(const UPoly& p) {
  std::size_t n = p.size();
  UPoly shifted(n, Q(0));
  // p(x+1) = sum_d a_d sum_k C(d,k) x^k
  for (std::size_t d = 0; d < n; ++d) {
    mpz_class binom = 1;
    for (std::size_t k = 0; k <= d; ++k) {
      if (k > 0) binom = binom * static_cast<unsigned long>(d - k + 1) / static_cast<unsigned long>(k);
      shifted[k] += p[d] * Q(binom);
    }
  }
  for (std::size_t k = 0; k < n; ++k) shifted[k] -= p[k];
  trim(shifted);
  return shifted;
}

}  // namespace

long sign_threshold(const UPoly& p, long from) {
  int d = degree(p);
  if (d <= 0) return from;
  Q lead = p[static_cast<std::size_t>(d)];
  Q bound = 0;
  for (int k = 0; k < d; ++k) {
    Q r = p[static_cast<std::size_t>(k)] / lead;
    if (r < 0) r = -r;
    if (r > bound) bound = r;
  }
  Q cauchy = bound + 1;
  if (cauchy > Q(kScanLimit)) throw Error("ResourceLimit", "polynomial root bound too large");
  long top = std::max(from, to_long(ceil_q(cauchy)));
  int s = sgn(lead);
  long t = top;
  while (t > from && sgn(eval(p, Q(t - 1))) == s) --t;
  return t;
}

Range range_from(const UPoly& p, long from) {
  int d = degree(p);
  if (d <= 0) {
    Q c = d < 0 ? Q(0) : p[0];
    return {c, c};
  }
  long stop = sign_threshold(forward_difference(p), from);
  int s = eventual_sign(p);
  Q best = eval(p, Q(from));
  for (long k = from + 1; k <= stop; ++k) {
    Q v = eval(p, Q(k));
    if (s > 0 ? v < best : v > best) best = v;
  }
  Range r;
  if (s > 0) {
    r.lo = best;
  } else {
    r.hi = best;
  }
  return r;
}

// ---------------------------------------------------------------- SepPoly

void SepPoly::norm() {
  trim(p_);
  if (!q_.empty() && sgn(q_[0]) != 0) {
    if (p_.empty()) p_.push_back(Q(0));
    p_[0] += q_[0];
    q_[0] = 0;
    trim(p_);
  }
  trim(q_);
}

SepPoly SepPoly::in_i(UPoly p) {
  SepPoly s;
  s.p_ = std::move(p);
  s.norm();
  return s;
}

SepPoly SepPoly::in_j(UPoly q) {
  SepPoly s;
  s.q_ = std::move(q);
  s.norm();
  return s;
}

Q SepPoly::at(long i, long j) const { return eval(p_, Q(i)) + eval(q_, Q(j)); }

SepPoly SepPoly::fix_i(long i) const {
  SepPoly s;
  s.p_ = {eval(p_, Q(i))};
  s.q_ = q_;
  s.norm();
  return s;
}

SepPoly SepPoly::fix_j(long j) const {
  SepPoly s;
  s.p_ = p_;
  if (s.p_.empty()) s.p_.push_back(Q(0));
  s.p_[0] += eval(q_, Q(j));
  s.norm();
  return s;
}

UPoly SepPoly::as_j(long fixed_i) const {
  UPoly r = q_;
  if (r.empty()) r.push_back(Q(0));
  r[0] += eval(p_, Q(fixed_i));
  trim(r);
  return r;
}

namespace {

UPoly add_poly(const UPoly& a, const UPoly& b, int sign) {
  UPoly r(std::max(a.size(), b.size()), Q(0));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += sign > 0 ? b[k] : Q(-b[k]);
  trim(r);
  return r;
}

bool poly_less(const UPoly& a, const UPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

std::string render_poly(const UPoly& p, const std::string& var, bool with_const) {
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (k == 0 && !with_const) break;
    const Q& c = p[k];
    if (sgn(c) == 0) continue;
    Q mag = abs(c);
    std::string sign = sgn(c) < 0 ? "-" : (out.empty() ? "" : "+");
    std::string body;
    if (k == 0) {
      body = to_string(mag);
    } else {
      body = mag == 1 ? "" : to_string(mag) + "*";
      body += var;
      if (k > 1) body += "^" + std::to_string(k);
    }
    out += sign + body;
  }
  return out;
}

}  // namespace

SepPoly operator+(const SepPoly& a, const SepPoly& b) {
  SepPoly s;
  s.p_ = add_poly(a.p_, b.p_, 1);
  s.q_ = add_poly(a.q_, b.q_, 1);
  s.norm();
  return s;
}

SepPoly operator-(const SepPoly& a, const SepPoly& b) {
  SepPoly s;
  s.p_ = add_poly(a.p_, b.p_, -1);
  s.q_ = add_poly(a.q_, b.q_, -1);
  s.norm();
  return s;
}

SepPoly operator*(const Q& k, const SepPoly& a) {
  SepPoly s = a;
  for (Q& c : s.p_) c *= k;
  for (Q& c : s.q_) c *= k;
  s.norm();
  return s;
}

bool operator<(const SepPoly& a, const SepPoly& b) {
  if (a.p_ != b.p_) return poly_less(a.p_, b.p_);
  return poly_less(a.q_, b.q_);
}

std::string SepPoly::to_string() const {
  std::string ip = render_poly(p_, "i", false);
  std::string jp = render_poly(q_, "j", false);
  std::string out = ip;
  if (!jp.empty()) out += (out.empty() || jp[0] == '-') ? jp : "+" + jp;
  Q c = constant();
  if (sgn(c) != 0 || out.empty()) {
    std::string cs = cgn::to_string(c);
    out += (out.empty() || sgn(c) < 0) ? cs : "+" + cs;
  }
  return out;
}

// ---------------------------------------------------------------- GradedPoly

GradedPoly GradedPoly::monomial(Coeff c, SepPoly e) {
  GradedPoly g;
  if (!c.is_zero()) g.terms.push_back({std::move(c), std::move(e)});
  return g;
}

bool GradedPoly::is_const_exponent() const {
  return std::all_of(terms.begin(), terms.end(), [](const Term& t) { return t.e.is_const(); });
}

bool GradedPoly::depends_i() const {
  return std::any_of(terms.begin(), terms.end(), [](const Term& t) { return t.e.depends_i(); });
}

bool GradedPoly::depends_j() const {
  return std::any_of(terms.begin(), terms.end(), [](const Term& t) { return t.e.depends_j(); });
}

GradedPoly GradedPoly::merged() const {
  std::map<SepPoly, Coeff> acc;
  for (const Term& t : terms) {
    auto [it, fresh] = acc.emplace(t.e, t.c);
    if (!fresh) it->second = it->second + t.c;
  }
  GradedPoly g;
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) g.terms.push_back({c, e});
  }
  return g;
}

GradedPoly GradedPoly::fix_i(long i) const {
  GradedPoly g;
  for (const Term& t : terms) g.terms.push_back({t.c, t.e.fix_i(i)});
  return g.merged();
}

GradedPoly GradedPoly::fix_j(long j) const {
  GradedPoly g;
  for (const Term& t : terms) g.terms.push_back({t.c, t.e.fix_j(j)});
  return g.merged();
}

GradedPoly GradedPoly::conj() const {
  GradedPoly g = *this;
  for (Term& t : g.terms) t.c = t.c.conj();
  return g;
}

GradedPoly GradedPoly::shift(const SepPoly& by) const {
  GradedPoly g = *this;
  for (Term& t : g.terms) t.e = t.e + by;
  return g;
}

GradedPoly GradedPoly::scale(const Coeff& k) const {
  GradedPoly g;
  for (const Term& t : terms) g.terms.push_back({t.c * k, t.e});
  return g.merged();
}

GradedPoly operator+(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly g = a;
  g.terms.insert(g.terms.end(), b.terms.begin(), b.terms.end());
  return g.merged();
}

GradedPoly operator-(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly g = a;
  for (const Term& t : b.terms) g.terms.push_back({-t.c, t.e});
  return g.merged();
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly g;
  for (const Term& x : a.terms) {
    for (const Term& y : b.terms) g.terms.push_back({x.c * y.c, x.e + y.e});
  }
  return g.merged();
}

bool same(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly x = a.merged(), y = b.merged();
  if (x.terms.size() != y.terms.size()) return false;
  for (std::size_t k = 0; k < x.terms.size(); ++k) {
    if (x.terms[k].c != y.terms[k].c || x.terms[k].e != y.terms[k].e) return false;
  }
  return true;
}

std::string GradedPoly::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const Term& t : terms) {
    std::string coeff = cgn::to_string(t.c);
    bool neg = !coeff.empty() && coeff[0] == '-';
    std::string mag = neg ? coeff.substr(1) : coeff;
    std::string body;
    bool unit_exp = t.e == SepPoly();
    if (unit_exp) {
      body = mag;
    } else {
      std::string e = t.e.to_string();
      bool simple = e.find_first_of("+-*^/") == std::string::npos;
      std::string pw = e == "1" ? "eps" : "eps^" + (simple ? e : "(" + e + ")");
      body = mag == "1" ? pw : mag + "*" + pw;
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

// ---------------------------------------------------------------- Value

Value Value::inverse() const {
  if (num.is_zero()) throw Error("DivisionByZero", "inverse of zero");
  return {den, num};
}

Value operator+(const Value& a, const Value& b) {
  if (same(a.den, b.den)) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

Value operator-(const Value& a, const Value& b) {
  if (same(a.den, b.den)) return {a.num - b.num, a.den};
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}

Value operator*(const Value& a, const Value& b) { return {a.num * b.num, a.den * b.den}; }

bool equivalent(const Value& a, const Value& b) { return same(a.num * b.den, b.num * a.den); }

std::string Value::to_string() const {
  GradedPoly one = GradedPoly::constant(Coeff(Q(1)));
  if (same(den, one)) return num.to_string();
  auto wrap = [](const GradedPoly& g) {
    std::string s = g.to_string();
    return g.terms.size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num) + " / " + wrap(den);
}

// ---------------------------------------------------------------- reduction

namespace {

using CPoly = std::vector<Coeff>;  // lowest degree first

void ctrim(CPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Polynomial long division; returns quotient, leaves remainder in r.
CPoly cdivmod(CPoly r, const CPoly& d, CPoly& rem) {
  ctrim(r);
  CPoly q(r.size() >= d.size() ? r.size() - d.size() + 1 : 0);
  Coeff lead_inv = d.back().inverse();
  while (r.size() >= d.size() && !r.empty()) {
    std::size_t shift = r.size() - d.size();
    Coeff f = r.back() * lead_inv;
    q[shift] = f;
    for (std::size_t k = 0; k < d.size(); ++k) r[shift + k] = r[shift + k] - f * d[k];
    r.pop_back();
    ctrim(r);
  }
  rem = r;
  return q;
}

CPoly cgcd(CPoly a, CPoly b) {
  ctrim(a);
  ctrim(b);
  while (!b.empty()) {
    CPoly rem;
    cdivmod(a, b, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  if (!a.empty()) {
    Coeff inv = a.back().inverse();
    for (Coeff& c : a) c = c * inv;
  }
  return a;
}

// Laurent form: g = t^low * P(t) with P(0) != 0, where t = eps^(1/L).
CPoly to_cpoly(const GradedPoly& g, long L, long& low) {
  low = 0;
  bool first = true;
  for (const Term& t : g.terms) {
    long k = to_long(t.e.constant() * L);
    if (first || k < low) low = k;
    first = false;
  }
  CPoly p;
  for (const Term& t : g.terms) {
    long k = to_long(t.e.constant() * L) - low;
    if (static_cast<long>(p.size()) <= k) p.resize(static_cast<std::size_t>(k) + 1);
    p[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k)] + t.c;
  }
  return p;
}

GradedPoly from_cpoly(const CPoly& p, long L, long low) {
  GradedPoly g;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!p[k].is_zero()) g.terms.push_back({p[k], SepPoly(make_q(static_cast<long>(k) + low, L))});
  }
  return g.merged();
}

}  // namespace

Value reduce_plain(const Value& v) {
  if (v.num.is_zero()) return {GradedPoly(), GradedPoly::constant(Coeff(Q(1)))};
  if (v.den.is_zero()) throw Error("DivisionByZero", "zero denominator");
  mpz_class L = 1;
  for (const GradedPoly* g : {&v.num, &v.den}) {
    for (const Term& t : g->terms) {
      if (!t.e.is_const()) throw Error("DomainError", "reduce_plain on graded value");
      mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), t.e.constant().get_den_mpz_t());
    }
  }
  if (!L.fits_slong_p()) throw Error("Overflow", "exponent denominators too large");
  long l = L.get_si();
  long ln = 0, ld = 0;
  CPoly n = to_cpoly(v.num, l, ln), d = to_cpoly(v.den, l, ld);
  if (n.size() > 4096 || d.size() > 4096) throw Error("ResourceLimit", "Laurent degree too large");
  CPoly g = cgcd(n, d);
  CPoly rem;
  if (g.size() > 1) {
    n = cdivmod(n, g, rem);
    d = cdivmod(d, g, rem);
  }
  Coeff d0inv = d[0].inverse();
  for (Coeff& c : n) c = c * d0inv;
  for (Coeff& c : d) c = c * d0inv;
  return {from_cpoly(n, l, ln - ld), from_cpoly(d, l, 0)};
}

}  // namespace cgn
