#include "cgn/ideal.hpp"

namespace cgn {

IdealPtr IdealExpr::principal(GenNum g) {
  auto e = std::make_shared<IdealExpr>();
  e->kind = Kind::Principal;
  e->g = std::move(g);
  return e;
}

IdealPtr IdealExpr::idempotents(std::vector<IndexSet> sets, Mode m) {
  auto e = std::make_shared<IdealExpr>();
  e->kind = Kind::IdempotentGen;
  e->sets = std::move(sets);
  e->g = GenNum::zero(m);
  return e;
}

IdealPtr IdealExpr::binary(Kind k, IdealPtr l, IdealPtr r) {
  auto e = std::make_shared<IdealExpr>();
  e->kind = k;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

IdealPtr IdealExpr::unary(Kind k, IdealPtr inner) {
  auto e = std::make_shared<IdealExpr>();
  e->kind = k;
  e->lhs = std::move(inner);
  return e;
}

IdealPtr IdealExpr::annihilator(GenNum g) {
  auto e = std::make_shared<IdealExpr>();
  e->kind = Kind::Annihilator;
  e->g = std::move(g);
  return e;
}

std::string to_string(CoreKind k) {
  switch (k) {
    case CoreKind::Principal: return "Principal";
    case CoreKind::Pure: return "Pure";
    case CoreKind::Closure: return "Closure";
    case CoreKind::Radical: return "Radical";
  }
  return "?";
}

std::string IdealCore::to_string() const { return cgn::to_string(kind) + "(" + g.to_string() + ")"; }

namespace {

bool is_zero_ideal(const IdealCore& c) { return c.g.is_zero(); }
bool is_unit_ideal(const IdealCore& c) { return classify_element(c.g) == ElementClass::Invertible; }

IdealCore same_kind(const IdealCore& l, const IdealCore& r, const char* op) {
  if (l.kind != r.kind) {
    throw Error("UnnormalizableIdeal", std::string(op) + " of " + to_string(l.kind) + " and " + to_string(r.kind) +
                                           " ideals has no normal form");
  }
  return l;
}

}  // namespace

IdealCore normalize(const IdealExpr& e) {
  using K = IdealExpr::Kind;
  switch (e.kind) {
    case K::Principal:
      return {CoreKind::Principal, *e.g};
    case K::IdempotentGen: {
      IndexSet u;
      for (const IndexSet& s : e.sets) u = u.unite(s);
      return {CoreKind::Principal, GenNum::idempotent(u, e.g->mode())};
    }
    case K::Annihilator:
      return {CoreKind::Principal, GenNum::idempotent(e.g->support().complement(), e.g->mode())};
    case K::Sum: {
      IdealCore l = normalize(*e.lhs), r = normalize(*e.rhs);
      if (is_zero_ideal(l) || is_unit_ideal(r)) return r;
      if (is_zero_ideal(r) || is_unit_ideal(l)) return l;
      same_kind(l, r, "sum");
      return {l.kind, bezout_gen(l.g, r.g).g};
    }
    case K::Product:
    case K::Intersect: {
      IdealCore l = normalize(*e.lhs), r = normalize(*e.rhs);
      if (is_zero_ideal(l) || is_unit_ideal(r)) return l;
      if (is_zero_ideal(r) || is_unit_ideal(l)) return r;
      same_kind(l, r, e.kind == K::Product ? "product" : "intersection");
      if (e.kind == K::Product && l.kind == CoreKind::Principal) return {l.kind, l.g * r.g};
      return {l.kind, meet_gen(l.g, r.g)};
    }
    case K::Radical: {
      IdealCore in = normalize(*e.lhs);
      if (in.kind == CoreKind::Principal) in.kind = CoreKind::Radical;
      return in;
    }
    case K::Closure: {
      IdealCore in = normalize(*e.lhs);
      in.kind = CoreKind::Closure;
      return in;
    }
    case K::ZClosure: {
      IdealCore in = normalize(*e.lhs);
      if (in.kind != CoreKind::Pure) in.kind = CoreKind::Closure;
      return in;
    }
    case K::PurePart: {
      IdealCore in = normalize(*e.lhs);
      in.kind = CoreKind::Pure;
      return in;
    }
  }
  throw Error("UnnormalizableIdeal", "unknown ideal construction");
}

bool member(const GenNum& x, const IdealCore& I) {
  switch (I.kind) {
    case CoreKind::Principal: return in_principal(x, I.g).member;
    case CoreKind::Closure: return in_closure(x, I.g);
    case CoreKind::Radical: return in_radical(x, I.g);
    case CoreKind::Pure: return inv_test(I.g, x.support());
  }
  return false;
}

bool idempotent_member(const IndexSet& s, const IdealCore& I) { return inv_test(I.g, s); }

bool in_closure(const GenNum& x, const IdealCore& I) { return in_closure(x, I.g); }

PseudoprimeReport pseudoprime_check(const IdealCore& I, const std::vector<IndexSet>& family) {
  if (family.size() > 3) throw Error("DomainError", "pseudoprime check takes at most 3 sets");
  std::vector<IndexSet> atoms;
  for (std::size_t mask = 0; mask < (std::size_t(1) << family.size()); ++mask) {
    IndexSet a = IndexSet::full();
    for (std::size_t t = 0; t < family.size(); ++t) {
      a = a.intersect((mask >> t) & 1 ? family[t] : family[t].complement());
    }
    if (!a.germ_null()) atoms.push_back(a);
  }
  PseudoprimeReport rep;
  std::vector<IndexSet> seen;
  for (std::size_t mask = 0; mask < (std::size_t(1) << atoms.size()); ++mask) {
    IndexSet s;
    for (std::size_t t = 0; t < atoms.size(); ++t) {
      if ((mask >> t) & 1) s = s.unite(atoms[t]);
    }
    bool dup = false;
    for (const IndexSet& o : seen) dup = dup || germ_equal(o, s);
    if (dup) continue;
    seen.push_back(s);
    PseudoprimeEntry en{s, idempotent_member(s, I), idempotent_member(s.complement(), I)};
    rep.refuted = rep.refuted || (!en.in && !en.co_in);
    rep.entries.push_back(std::move(en));
  }
  return rep;
}

FilterBase::FilterBase(std::vector<IndexSet> gens) {
  if (gens.empty()) throw Error("DomainError", "filter base needs at least one set");
  if (gens.size() > 8) throw Error("ResourceLimit", "filter base is limited to 8 generating sets");
  for (const IndexSet& g : gens) {
    if (g.germ_full()) throw Error("ImproperFilter", "member " + g.to_string() + " is full at 0");
    if (g.germ_null()) throw Error("DomainError", "member " + g.to_string() + " is null at 0");
  }
  for (std::size_t mask = 1; mask < (std::size_t(1) << gens.size()); ++mask) {
    IndexSet u;
    for (std::size_t t = 0; t < gens.size(); ++t) {
      if ((mask >> t) & 1) u = u.unite(gens[t]);
    }
    bool dup = false;
    for (const IndexSet& o : members_) dup = dup || germ_equal(o, u);
    if (!dup) members_.push_back(u);
    top_ = top_.unite(u);
  }
  if (top_.germ_full()) throw Error("ImproperFilter", "the union of the filter base is full at 0");
}

bool quotient_equiv(const GenNum& x, const GenNum& y, const FilterBase& f) {
  return z_test(x - y, f.top().complement());
}

ExtVal quotient_val(const GenNum& x, const FilterBase& f) {
  ExtVal best = valuation(x.restrict(f.members().front().complement()));
  for (const IndexSet& s : f.members()) {
    ExtVal v = valuation(x.restrict(s.complement()));
    if (best < v) best = v;
  }
  return best;
}

}  // namespace cgn
