#include "doctest.h"

#include "cgn/poly.hpp"

using namespace cgn;

namespace {

UPoly up(std::initializer_list<long> cs) {
  UPoly p;
  for (long c : cs) p.push_back(Q(c));
  return p;
}

// Brute-force minimum over from..limit, assuming the polynomial grows past limit.
Q brute_min(const UPoly& p, long from, long limit) {
  Q best = eval(p, Q(from));
  for (long k = from; k <= limit; ++k) best = std::min(best, eval(p, Q(k)));
  return best;
}

}  // namespace

TEST_CASE("sign thresholds are minimal") {
  UPoly p = up({-6, 1});  // i - 6
  CHECK(sign_threshold(p, 0) == 7);
  CHECK(sign_threshold(p, 10) == 10);
  UPoly sq = up({9, -6, 1});  // (i-3)^2
  CHECK(sign_threshold(sq, 0) == 4);
  CHECK(sign_threshold(up({5}), 3) == 3);
}

TEST_CASE("ranges match brute force") {
  for (const UPoly& p : {up({9, -6, 1}), up({0, -10, 0, 1}), up({4, 1}), up({-3, 7, -2}), up({2})}) {
    Range r = range_from(p, 0);
    int s = eventual_sign(p);
    if (degree(p) <= 0) {
      CHECK(r.lo);
      CHECK(r.hi);
    } else if (s > 0) {
      REQUIRE(r.lo);
      CHECK_FALSE(r.hi);
      CHECK(*r.lo == brute_min(p, 0, 200));
    } else {
      REQUIRE(r.hi);
      CHECK_FALSE(r.lo);
      UPoly neg;
      for (const Q& c : p) neg.push_back(-c);
      CHECK(-*r.hi == brute_min(neg, 0, 200));
    }
  }
  CHECK(*range_from(up({9, -6, 1}), 0).lo == 0);
}

TEST_CASE("separable exponents") {
  SepPoly a = SepPoly::in_i(up({1, 1}));
  SepPoly b = SepPoly::in_j(up({1, 1}));
  SepPoly g = a + b;
  CHECK(g.at(0, 0) == 2);
  CHECK(g.at(3, 4) == 9);
  CHECK(g.to_string() == "i+j+2");
  CHECK(g.fix_i(2).at(0, 5) == 9);
  CHECK((g - a) == b);
  CHECK(SepPoly(Q(3)).is_const());
  CHECK((Q(2) * a).to_string() == "2*i+2");
}

TEST_CASE("graded polynomial arithmetic") {
  GradedPoly x = GradedPoly::monomial(Coeff(Q(1)), SepPoly(Q(1)));
  GradedPoly one = GradedPoly::constant(Coeff(Q(1)));
  GradedPoly s = x + one;
  GradedPoly sq = s * s;
  CHECK(sq.terms.size() == 3);
  CHECK(same(sq - s * s, GradedPoly()));
  CHECK(x.to_string() == "eps");
}

TEST_CASE("plain reduction cancels common factors") {
  // (eps^2 - 1) / (eps - 1) = eps + 1
  GradedPoly e1 = GradedPoly::monomial(Coeff(Q(1)), SepPoly(Q(1)));
  GradedPoly e2 = GradedPoly::monomial(Coeff(Q(1)), SepPoly(Q(2)));
  GradedPoly one = GradedPoly::constant(Coeff(Q(1)));
  Value v{e2 - one, e1 - one};
  Value r = reduce_plain(v);
  CHECK(same(r.num, e1 + one));
  CHECK(same(r.den, one));
  // (eps^(1/2) + eps) / eps^(1/2) = 1 + eps^(1/2)
  GradedPoly h = GradedPoly::monomial(Coeff(Q(1)), SepPoly(Q(1, 2)));
  Value w = reduce_plain({h + e1, h});
  CHECK(same(w.num, one + h));
  CHECK(equivalent(w, {h + e1, h}));
}
