#include "cgn/oracle.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace cgn {

namespace {

struct Scaled {
  std::complex<long double> z;
  long double s = 0;
};

// Sum of c * eps^E over the terms, scaled by the first term's power.
Scaled eval_poly(const GradedPoly& g, long double log2_eps) {
  Scaled out;
  if (g.terms.empty()) return out;
  long double e0 = static_cast<long double>(to_double(g.terms.front().e.constant()));
  out.s = e0 * log2_eps;
  for (const Term& t : g.terms) {
    long double e = static_cast<long double>(to_double(t.e.constant()));
    long double w = std::exp2((e - e0) * log2_eps);
    out.z += std::complex<long double>(to_double(t.c.re), to_double(t.c.im)) * w;
  }
  return out;
}

Sample sample_at(const GenNum& x, std::uint64_t n, const Q& factor, double log2_factor) {
  Sample s;
  s.block = n;
  s.eps = factor * pow2(-static_cast<long>(n));
  s.log2_eps = -static_cast<double>(n) + log2_factor;
  for (const Law& l : x.laws()) {
    if (!l.dom.contains(s.eps)) continue;
    Value v = l.val;
    if (v.depends_i()) v = v.fix_i(nu2(n));
    if (v.depends_j()) v = v.fix_j(nu2_second(n));
    Scaled num = eval_poly(v.num, s.log2_eps), den = eval_poly(v.den, s.log2_eps);
    s.mantissa = num.z / den.z;
    s.scale = num.s - den.s;
    s.zero = std::abs(s.mantissa) == 0;
    break;
  }
  return s;
}

// Samples in blocks depth/2 .. depth.
template <class F>
void deep_pairs(const GenNum& x, const GenNum& y, const SampleProfile& p, F f) {
  std::vector<Sample> sx = sample_net(x, p), sy = sample_net(y, p);
  for (std::size_t k = 0; k < sx.size(); ++k) {
    if (static_cast<long>(sx[k].block) * 2 < p.depth) continue;
    f(sx[k], sy[k]);
  }
}

// Mantissas of a and b rescaled to a common power of two.
std::pair<std::complex<long double>, std::complex<long double>> common(const Sample& a, const Sample& b) {
  if (a.zero && b.zero) return {0, 0};
  long double m = a.zero ? b.log2_abs() : b.zero ? a.log2_abs() : std::max(a.log2_abs(), b.log2_abs());
  auto rescale = [m](const Sample& s) {
    return s.zero ? std::complex<long double>(0) : s.mantissa * std::exp2(s.scale - m);
  };
  return {rescale(a), rescale(b)};
}

constexpr long double kMargin = 1e-6L;

}  // namespace

long double Sample::log2_abs() const {
  if (zero) return -std::numeric_limits<long double>::infinity();
  return scale + std::log2(std::abs(mantissa));
}

std::complex<double> Sample::value() const {
  if (zero) return {0, 0};
  std::complex<long double> v = mantissa * std::exp2(scale);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::vector<Sample> sample_net(const GenNum& x, const SampleProfile& p) {
  if (p.depth < 8) throw Error("DomainError", "sampling depth must be at least 8");
  static const Q factors[] = {Q(1), Q(3, 4), Q(5, 8)};
  static const double logs[] = {0.0, std::log2(0.75), std::log2(0.625)};
  int per = std::max(1, std::min(p.per_block, 3));
  std::vector<Sample> out;
  for (long n = 0; n <= p.depth; ++n) {
    for (int k = 0; k < per; ++k) {
      if (n == 0 && k == 0) continue;  // eps = 1 lies outside (0,1)
      out.push_back(sample_at(x, static_cast<std::uint64_t>(n), factors[k], logs[k]));
    }
  }
  return out;
}

std::string sample_csv(const std::vector<Sample>& table) {
  std::ostringstream os;
  os.precision(12);
  os << "block,eps,re,im,log2_abs\n";
  for (const Sample& s : table) {
    std::complex<double> v = s.value();
    os << s.block << ',' << to_string(s.eps) << ',' << v.real() << ',' << v.imag() << ',';
    if (s.zero) {
      os << "-inf";
    } else {
      os << static_cast<double>(s.log2_abs());
    }
    os << '\n';
  }
  return os.str();
}

OracleInterval oracle_val(const GenNum& x, const SampleProfile& p) {
  double inf = std::numeric_limits<double>::infinity();
  OracleInterval r{-inf, inf, 0};
  double best = inf;
  for (const Sample& s : sample_net(x, p)) {
    if (static_cast<long>(s.block) * 2 < p.depth || s.zero) continue;
    double slope = static_cast<double>(s.log2_abs() / s.log2_eps);
    best = std::min(best, slope);
    ++r.samples;
  }
  if (r.samples == 0) {
    if (x.is_zero()) r.lo = inf;
    return r;
  }
  r.lo = best - 0.5;
  r.hi = best + 0.5;
  return r;
}

std::string to_string(Verdict v) { return v == Verdict::ConsistentWith ? "ConsistentWith" : "Contradicts"; }

Verdict oracle_leq(const GenNum& x, const GenNum& y, const SampleProfile& p) {
  Verdict out = Verdict::ConsistentWith;
  deep_pairs(x, y, p, [&](const Sample& a, const Sample& b) {
    auto [u, w] = common(a, b);
    if (u.real() - w.real() > kMargin) out = Verdict::Contradicts;
  });
  return out;
}

Verdict oracle_eq(const GenNum& x, const GenNum& y, const SampleProfile& p) {
  Verdict out = Verdict::ConsistentWith;
  deep_pairs(x, y, p, [&](const Sample& a, const Sample& b) {
    auto [u, w] = common(a, b);
    if (std::abs(u - w) > kMargin) out = Verdict::Contradicts;
  });
  return out;
}

}  // namespace cgn
