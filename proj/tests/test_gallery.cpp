#include "doctest.h"

#include <cmath>

#include "cgn/gallery.hpp"
#include "cgn/oracle.hpp"

using namespace cgn;

TEST_CASE("gallery exponents") {
  CHECK(valuation(gallery_beta()) == ExtVal::of(Q(1)));
  CHECK(valuation(gallery_beta_m(3)) == ExtVal::of(Q(1)));
  CHECK(valuation(gallery_gamma()) == ExtVal::of(Q(2)));
  CHECK(gallery_beta_m(3).laws().front().exponent().to_string() == SepPoly::in_i({Q(1), Q(3), Q(3), Q(1)}).to_string());
  CHECK_THROWS_AS(gallery_beta_m(0), Error);
  CHECK_THROWS_AS(gallery_named("delta"), Error);
}

TEST_CASE("sampled nets") {
  auto table = sample_net(GenNum::alpha(Mode::R));
  for (const Sample& s : table) {
    if (s.block > 40) continue;
    CHECK(s.value().real() == doctest::Approx(to_double(s.eps)).epsilon(1e-12));
  }
  auto idem = sample_net(GenNum::idempotent(IndexSet::blocks(0, 2), Mode::R));
  for (const Sample& s : idem) {
    bool inside = IndexSet::blocks(0, 2).contains(s.eps);
    CHECK(s.value().real() == (inside ? 1.0 : 0.0));
  }
  for (const Sample& s : sample_net(gallery_beta())) {
    if (s.block < 32) continue;
    double slope = static_cast<double>(s.log2_abs()) / s.log2_eps;
    CHECK(std::abs(slope - (nu2(s.block) + 1)) <= 0.1 * (nu2(s.block) + 1));
  }
  CHECK(sample_csv(sample_net(gallery_beta(), {8, 1})).rfind("block,eps", 0) == 0);
}

TEST_CASE("oracle brackets and verdicts") {
  GenNum a = GenNum::alpha(Mode::R);
  OracleInterval v = oracle_val(pow(a, 3));
  CHECK(v.contains(2.95));
  CHECK(v.contains(3.05));
  CHECK(v.hi - v.lo <= 1.0);
  CHECK(oracle_leq(pow(a, 2), a) == Verdict::ConsistentWith);
  CHECK(oracle_leq(a, pow(a, 2)) == Verdict::Contradicts);
  OracleInterval g = oracle_val(gallery_gamma());
  CHECK(std::abs(g.lo + 0.5 - 2.0) < 0.05);
  CHECK(oracle_eq(a * a, pow(a, 2)) == Verdict::ConsistentWith);
  GenNum quad = GenNum::graded(PieceFamily::Nu2, SepPoly::in_i({Q(9), Q(-6), Q(1)}), Coeff(Q(1)), Mode::R);
  CHECK(oracle_val(quad).contains(0.0));
}
