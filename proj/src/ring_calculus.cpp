#include "cgn/ring_calculus.hpp"

namespace cgn {

namespace {

GenNum map_exponents(const GenNum& x, const Q& factor, Mode mode) {
  std::vector<Law> raw;
  for (const Law& l : x.laws()) {
    raw.push_back({l.dom, Value::of(GradedPoly::monomial(Coeff(Q(1)), factor * l.exponent()))});
  }
  return GenNum::from_laws(mode, std::move(raw));
}

}  // namespace

GenNum skeleton(const GenNum& x) { return map_exponents(x, Q(1), x.mode()); }

GenNum nth_root_skeleton(const GenNum& x, long n) {
  if (n < 1) throw Error("DomainError", "root index must be positive");
  return map_exponents(x, make_q(1, n), x.mode());
}

GenNum divide_lawwise(const GenNum& x, const GenNum& a) {
  IndexSet sa = a.support();
  for (const Law& l : x.laws()) {
    if (!germ_subset(l.dom, sa)) throw Error("NotMember", "numerator is nonzero where the divisor vanishes");
  }
  std::vector<Law> raw;
  for (const Law& lx : x.laws()) {
    for (const Law& la : a.laws()) {
      IndexSet s = lx.dom.intersect(la.dom);
      if (!s.germ_null()) raw.push_back({s, lx.val * la.val.inverse()});
    }
  }
  try {
    return GenNum::from_laws(x.mode(), std::move(raw));
  } catch (const Error& e) {
    if (e.kind == "NonModerate") throw Error("NotMember", "quotient is not moderate");
    throw;
  }
}

IndexSet clean_idempotent(const GenNum& a) {
  IndexSet t = a.support().complement();
  for (const Law& l : a.laws()) {
    bool small = l.coeff().norm2() <= Q(1, 4);
    for (const SignedPart& part : split_by_sign(l.dom, l.family(), l.exponent())) {
      if (part.sign > 0 || (part.sign == 0 && small)) t = t.unite(part.set);
    }
  }
  return t;
}

IndexSet split_zero_divisors(const GenNum& x, const GenNum& y) {
  if (!(x * y).is_zero()) throw Error("NotOrthogonal", "x*y is not zero");
  return x.support().complement();
}

BezoutResult bezout_gen(const GenNum& a, const GenNum& b) {
  if (a.mode() != b.mode()) throw Error("ModeError", "operands live in different coefficient modes");
  GenNum sa = skeleton(a).with_mode(Mode::R), sb = skeleton(b).with_mode(Mode::R);
  GenNum d = sb - sa;
  IndexSet pb;
  for (const Law& l : d.laws()) {
    if (sgn(l.coeff().re) > 0) pb = pb.unite(l.dom);
  }
  Mode m = a.mode();
  GenNum ga = sa.restrict(pb.complement()).with_mode(m);
  GenNum gb = sb.restrict(pb).with_mode(m);
  BezoutResult out{ga + gb, divide_lawwise(ga, a), divide_lawwise(gb, b)};
  return out;
}

GenNum meet_gen(const GenNum& a, const GenNum& b) {
  if (a.mode() != b.mode()) throw Error("ModeError", "operands live in different coefficient modes");
  GenNum sa = skeleton(a).with_mode(Mode::R), sb = skeleton(b).with_mode(Mode::R);
  return inf(sa, sb).with_mode(a.mode());
}

}  // namespace cgn
