#include "doctest.h"

#include "cgn/ring_calculus.hpp"

using namespace cgn;

namespace {

const Mode R = Mode::R;
GenNum num(long c) { return GenNum::rational(Coeff(Q(c)), R); }
GenNum eps() { return GenNum::alpha(R); }
GenNum e(const IndexSet& s) { return GenNum::idempotent(s, R); }
GenNum beta() { return GenNum::graded(PieceFamily::Nu2, SepPoly::in_i({Q(1), Q(1)}), Coeff(Q(1)), R); }
IndexSet even() { return IndexSet::blocks(0, 2); }
IndexSet odd() { return IndexSet::blocks(1, 2); }

bool divides(const GenNum& a, const GenNum& x) {
  try {
    GenNum y = divide_lawwise(x, a);
    return equal_germ(a * y, x);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

TEST_CASE("skeletons") {
  CHECK(equal_germ(skeleton(num(3) * pow(eps(), 2) + pow(eps(), 5)), pow(eps(), 2)));
  GenNum z = GenNum::rational(Coeff(Q(1), Q(1)), Mode::C) * GenNum::alpha(Mode::C);
  CHECK(equal_germ(skeleton(z), GenNum::alpha(Mode::C)));
  GenNum x = e(even()) * num(-7) + beta() * e(odd());
  CHECK(divides(x, skeleton(x)));
  CHECK(divides(skeleton(x), x));
}

TEST_CASE("clean idempotents") {
  CHECK(clean_idempotent(eps()).germ_full());
  CHECK(clean_idempotent(num(1) + eps()).germ_null());
  GenNum a = e(even()) * num(3) + e(odd()) * eps();
  IndexSet t = clean_idempotent(a);
  CHECK(germ_equal(t, odd()));
  CHECK(classify_element(a + e(t)) == ElementClass::Invertible);
  GenNum half = GenNum::rational(Coeff(Q(-1, 2)), R);
  CHECK(classify_element(half + e(clean_idempotent(half))) == ElementClass::Invertible);
}

TEST_CASE("zero divisor splitting") {
  IndexSet s = even();
  IndexSet r = split_zero_divisors(e(s), e(s.complement()));
  CHECK(z_test(e(s), r));
  CHECK(z_test(e(s.complement()), r.complement()));
  IndexSet r2 = split_zero_divisors(eps() * e(s), pow(eps(), 2) * e(s.complement()));
  CHECK(germ_equal(r2, s.complement()));
  CHECK_THROWS_AS(split_zero_divisors(eps(), eps()), Error);
}

TEST_CASE("bezout and meet generators") {
  BezoutResult b = bezout_gen(pow(eps(), 2), pow(eps(), 3));
  CHECK(equal_germ(b.g, pow(eps(), 2)));
  CHECK(equal_germ(b.r * pow(eps(), 2) + b.s * pow(eps(), 3), b.g));
  BezoutResult u = bezout_gen(e(even()), e(odd()));
  CHECK(equal_germ(u.g, num(1)));
  BezoutResult w = bezout_gen(beta(), pow(eps(), 3));
  CHECK(equal_germ(w.r * beta() + w.s * pow(eps(), 3), w.g));
  CHECK(divides(w.g, beta()));
  CHECK(divides(w.g, pow(eps(), 3)));
  GenNum m = meet_gen(eps() * e(even()), pow(eps(), 2));
  CHECK(divides(eps() * e(even()), m));
  CHECK(divides(pow(eps(), 2), m));
  CHECK(equal_germ(m, pow(eps(), 2) * e(even())));
}

TEST_CASE("roots of skeletons") {
  CHECK(equal_germ(nth_root_skeleton(pow(eps(), 4), 2), pow(eps(), 2)));
  GenNum g = GenNum::graded(PieceFamily::Nu2, SepPoly::in_i({Q(0), Q(2)}), Coeff(Q(1)), R);
  GenNum h = GenNum::graded(PieceFamily::Nu2, SepPoly::in_i({Q(0), Q(1)}), Coeff(Q(1)), R);
  CHECK(equal_germ(nth_root_skeleton(g, 2), h));
}
