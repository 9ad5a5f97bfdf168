#include "doctest.h"

#include "cgn/gallery.hpp"
#include "cgn/ideal.hpp"

using namespace cgn;

namespace {

const Mode R = Mode::R;
GenNum num(long c) { return GenNum::rational(Coeff(Q(c)), R); }
GenNum eps(long k = 1) { return pow(GenNum::alpha(R), k); }
GenNum e(const IndexSet& s) { return GenNum::idempotent(s, R); }
IndexSet even() { return IndexSet::blocks(0, 2); }
IndexSet odd() { return IndexSet::blocks(1, 2); }

IdealCore core(CoreKind k, const GenNum& g) { return {k, g}; }

}  // namespace

TEST_CASE("principal membership") {
  auto m = in_principal(eps(3), eps(2));
  REQUIRE(m.member);
  CHECK(equal_germ(*m.witness, eps()));
  CHECK(in_principal(eps(2), eps(3)).member);  // eps is a unit
  CHECK_FALSE(in_principal(eps(2), eps(3) * gallery_beta()).member);
  CHECK(in_principal(gallery_beta_m(3), gallery_beta_m(2)).member);
  CHECK_FALSE(in_principal(gallery_beta_m(2), gallery_beta_m(3)).member);
  CHECK_FALSE(in_principal(num(1), e(even())).member);
  CHECK(in_principal(eps(4) * e(even()), e(even())).member);
}

TEST_CASE("inv_subset") {
  GenNum b = gallery_beta();
  CHECK(inv_subset(b, b * b));
  CHECK(inv_subset(b * b, b));
  for (long m = 2; m <= 5; ++m) {
    for (long n = 2; n <= 5; ++n) CHECK(inv_subset(gallery_beta_m(m), gallery_beta_m(n)));
  }
  CHECK_FALSE(inv_subset(e(even()), e(IndexSet::blocks(0, 3))));
  CHECK(inv_subset(e(even()), e(IndexSet::blocks(0, 4))));
  CHECK_FALSE(inv_subset(b, eps()));
  CHECK(inv_subset(eps(), b));
}

TEST_CASE("radical membership") {
  CHECK(in_radical(eps(), eps(5)));
  CHECK_FALSE(in_radical(eps(), gallery_beta()));
  for (long m = 2; m <= 5; ++m) {
    CHECK_FALSE(in_radical(gallery_beta_m(m - 1), gallery_beta_m(m)));
    CHECK(in_principal(gallery_beta_m(m), gallery_beta_m(m - 1)).member);
  }
  GenNum g = gallery_gamma();
  CHECK(in_radical(g, g * g * g));
  CHECK_FALSE(in_radical(gallery_beta(), g));
}

TEST_CASE("closure routes") {
  GenNum b = gallery_beta();
  GenNum y = gallery_closure_witness(b);
  CHECK(in_closure(y, b));
  CHECK(in_z_closure(y, b));
  CHECK_FALSE(in_principal(y, b).member);
  CHECK_FALSE(in_closure(eps(), b));
  CHECK_FALSE(in_z_closure(eps(), b));
  CHECK(in_z_closure(b * b, b));
  CHECK(in_closure(b, b));
  CHECK_THROWS_WITH_AS(gallery_closure_witness(eps(2)), doctest::Contains("idempotent"), Error);
  GenNum g = gallery_gamma();
  GenNum w = gallery_closure_witness(g);
  CHECK(in_closure(w, g));
  CHECK_FALSE(in_principal(w, g).member);
  // beta restricted to a row-type region: eps^(j+1) on the i = 0 row is not in the closure of gamma
  GenNum row = GenNum::graded(PieceFamily::Nu2Squared, SepPoly(Q(1)), Coeff(Q(1)), R);
  CHECK_FALSE(in_closure(row, g));
  CHECK_FALSE(in_z_closure(row, g));
}

TEST_CASE("stationary level sets") {
  CHECK(stationary(eps(2))->germ_full());
  auto s = stationary(e(even()) * eps(3));
  REQUIRE(s);
  CHECK(germ_equal(*s, even()));
  CHECK_FALSE(stationary(gallery_beta()));
  GenNum a = e(even()) * eps(3);
  CHECK(in_principal(e(*s), a).member);
  CHECK(in_principal(a, e(*s)).member);
}

TEST_CASE("pure parts and merged generators") {
  PureScheme p = pure_part(e(even()) * eps());
  REQUIRE(p.single());
  REQUIRE(p.sets.size() == 1);
  CHECK(germ_equal(p.sets[0], even()));
  PureScheme q = pure_part(num(1) + eps());
  CHECK(q.single());
  CHECK(merged_generator(q, R).support().germ_full());
  PureScheme b = pure_part(gallery_beta());
  CHECK_FALSE(b.single());
  PureScheme fam = family_scheme(PieceFamily::Nu2, IndexSet::full());
  GenNum g = merged_generator(fam, R);
  CHECK(equal_germ(skeleton(g), skeleton(gallery_beta())));
  for (long n = 0; n < 5; ++n) CHECK(germ_equal(fam.generator_set(n), level_set(g, Q(n + 1))));
}

TEST_CASE("orthogonal decomposition") {
  Decomposition d = orthogonal_decomposition(eps(2));
  CHECK(d.complete);
  REQUIRE(d.sets.size() == 1);
  CHECK(d.sets[0].germ_full());
  Decomposition b = orthogonal_decomposition(gallery_beta(), 5);
  CHECK_FALSE(b.complete);
  REQUIRE(b.sets.size() == 5);
  for (unsigned i = 0; i < 5; ++i) CHECK(germ_equal(b.sets[i], IndexSet::nu2_piece(i)));
  for (std::size_t i = 0; i < b.sets.size(); ++i) {
    for (std::size_t j = i + 1; j < b.sets.size(); ++j) CHECK(b.sets[i].intersect(b.sets[j]).germ_null());
  }
}

TEST_CASE("annihilator witnesses") {
  GenNum b = gallery_beta();
  auto t = find_ann_witness(num(1), b);
  REQUIRE(t);
  CHECK(t->diagonal);
  CHECK(t->diag.grid_point);
  CHECK(annihilates(b, *t));
  CHECK_FALSE(annihilates(num(1), *t));
  for (long k = t->diag.k0; k < t->diag.k0 + 6; ++k) {
    auto n = t->diag.block(k);
    REQUIRE(n);
    CHECK(nu2(*n) == static_cast<unsigned>(k));
    CHECK(t->diag.point_in(t->diag.cell, k));
  }
  CHECK_FALSE(find_ann_witness(b, b));
  auto plain = find_ann_witness(num(1), e(even()));
  REQUIRE(plain);
  CHECK_FALSE(plain->diagonal);
  CHECK(germ_equal(plain->set, odd()));

  GenNum g = gallery_gamma();
  GenNum row = GenNum::graded(PieceFamily::Nu2Squared, SepPoly(Q(1)), Coeff(Q(1)), R);
  auto w = find_ann_witness(row, g);
  REQUIRE(w);
  CHECK(annihilates(g, *w));
  CHECK_FALSE(annihilates(row, *w));
}

TEST_CASE("orthogonal witnesses and annihilator splits") {
  OrthoWitness o = orthogonal_witness(IndexSet::full(), {gallery_beta()});
  CHECK(annihilates(gallery_beta(), o.t));
  CHECK(annihilates(gallery_beta(), o.twin));
  CHECK(o.t.diag.lane != o.twin.diag.lane);
  for (long k = o.t.diag.k0; k < o.t.diag.k0 + 4; ++k) CHECK(*o.t.diag.block(k) != *o.twin.diag.block(k));

  OrthoWitness p = orthogonal_witness(even(), {e(odd())});
  CHECK(germ_subset(p.t.set, even()));
  CHECK(germ_subset(p.twin.set, even()));
  CHECK(p.t.set.intersect(p.twin.set).germ_null());
  CHECK_FALSE(p.t.set.germ_null());
  CHECK(annihilates(e(odd()), p.t));
  CHECK_THROWS_WITH_AS(orthogonal_witness(even(), {e(even()) * eps()}), doctest::Contains("closure"), Error);

  CHECK(germ_equal(annihilator_split(e(even()), {e(odd())}), even()));
  CHECK_THROWS_AS(annihilator_split(e(even()), {num(1)}), Error);
}

TEST_CASE("ideal expression normalization") {
  using K = IdealExpr::Kind;
  GenNum b = gallery_beta();
  auto pb = IdealExpr::principal(b);
  CHECK(normalize(*IdealExpr::unary(K::Closure, pb)).kind == CoreKind::Closure);
  CHECK(normalize(*IdealExpr::unary(K::ZClosure, pb)).kind == CoreKind::Closure);
  CHECK(normalize(*IdealExpr::unary(K::Radical, IdealExpr::unary(K::Closure, pb))).kind == CoreKind::Closure);
  CHECK(normalize(*IdealExpr::unary(K::ZClosure, IdealExpr::unary(K::PurePart, pb))).kind == CoreKind::Pure);
  GenNum b2 = gallery_beta_m(2);
  IdealCore s = normalize(*IdealExpr::binary(K::Sum, IdealExpr::principal(b), IdealExpr::principal(b2)));
  CHECK(s.kind == CoreKind::Principal);
  CHECK(equal_germ(s.g, b));
  IdealCore i = normalize(*IdealExpr::binary(K::Intersect, IdealExpr::principal(b), IdealExpr::principal(b2)));
  CHECK(equal_germ(i.g, b2));
  CHECK(normalize(*IdealExpr::binary(K::Sum, IdealExpr::principal(eps(3)), pb)).g.support().germ_full());
  CHECK_THROWS_WITH_AS(normalize(*IdealExpr::binary(K::Sum, pb, IdealExpr::unary(K::Closure, pb))),
                       doctest::Contains("no normal form"), Error);
  IdealCore ann = normalize(*IdealExpr::annihilator(e(even())));
  CHECK(member(e(odd()), ann));
  CHECK_FALSE(member(e(even()), ann));
  IdealCore idem = normalize(*IdealExpr::idempotents({IndexSet::nu2_piece(0), IndexSet::nu2_piece(1)}, R));
  CHECK(member(e(IndexSet::nu2_piece(1)) * eps(), idem));
  CHECK_FALSE(member(num(1), idem));
  CHECK_FALSE(in_closure(num(1), idem));
  // pure part of beta contains each piece but not beta
  IdealCore pure = core(CoreKind::Pure, b);
  CHECK(member(e(IndexSet::nu2_piece(3)), pure));
  CHECK_FALSE(member(b, pure));
  CHECK(member(gallery_closure_witness(b), core(CoreKind::Closure, b)));
  CHECK(member(gallery_beta_m(2), core(CoreKind::Radical, gallery_beta_m(2) * gallery_beta_m(2))));
}

TEST_CASE("pseudoprime reports") {
  IdealCore i = core(CoreKind::Principal, e(even()));
  PseudoprimeReport r = pseudoprime_check(i, {even()});
  CHECK_FALSE(r.refuted);
  PseudoprimeReport r2 = pseudoprime_check(i, {even(), IndexSet::blocks(1, 4)});
  CHECK(r2.refuted);
  PseudoprimeReport r3 = pseudoprime_check(core(CoreKind::Principal, num(1)), {even(), IndexSet::blocks(1, 3)});
  CHECK_FALSE(r3.refuted);
  for (const auto& en : r3.entries) CHECK(en.in);
}

TEST_CASE("filter quotients") {
  IndexSet s = even();
  FilterBase f({s});
  CHECK(quotient_equiv(eps() + num(5) * e(s), eps(), f));
  CHECK_FALSE(quotient_equiv(num(1), num(0), f));
  GenNum x = e(s) * pow(eps(), -1) + e(s.complement()) * eps(2);
  CHECK(quotient_val(x, f) == ExtVal::of(Q(2)));
  CHECK(quotient_val(e(s), f) == ExtVal::inf());
  CHECK_THROWS_WITH_AS(FilterBase({even(), odd()}), doctest::Contains("full"), Error);
  FilterBase g({IndexSet::blocks(0, 4), IndexSet::blocks(1, 4)});
  CHECK(g.members().size() == 3);
}

TEST_CASE("level and annihilator duality") {
  GenNum b = gallery_beta();
  GenNum x = e(IndexSet::nu2_piece(0).complement()) * num(3);
  bool annihilated = (x * b).is_zero();
  bool levels = true;
  for (long m = 0; m < 8; ++m) levels = levels && (x * e(level_set(b, Q(m)))).is_zero();
  CHECK(annihilated == levels);
}
