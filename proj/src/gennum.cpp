#include "cgn/gennum.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace cgn {

namespace {

constexpr int kMaxDepth = 48;

void check_depth(int depth) {
  if (depth > kMaxDepth) throw Error("ResourceLimit", "sign refinement does not terminate");
}

Q upoly_const(const UPoly& p) { return p.empty() ? Q(0) : p[0]; }

std::optional<int> univariate_sign(const UPoly& p, long from) {
  if (degree(p) <= 0) return sgn(upoly_const(p));
  if (sign_threshold(p, from) == from) return eventual_sign(p);
  return std::nullopt;
}

Range add_ranges(const Range& a, const Range& b) {
  Range r;
  if (a.lo && b.lo) r.lo = *a.lo + *b.lo;
  if (a.hi && b.hi) r.hi = *a.hi + *b.hi;
  return r;
}

void widen(Range& acc, const Range& r, bool& first) {
  if (first) {
    acc = r;
    first = false;
    return;
  }
  if (!acc.lo || !r.lo) {
    acc.lo.reset();
  } else if (*r.lo < *acc.lo) {
    acc.lo = r.lo;
  }
  if (!acc.hi || !r.hi) {
    acc.hi.reset();
  } else if (*r.hi > *acc.hi) {
    acc.hi = r.hi;
  }
}

// Sub-sets refining r so that e gets a uniform sign on each; only called when
// sign_on(r, e) is not uniform.
std::vector<IndexSet> split_region(const Region& r, const SepPoly& e) {
  SepPoly d = specialize(e, r);
  std::vector<IndexSet> parts;
  auto keep = [&](const IndexSet& s) {
    if (!s.germ_null()) parts.push_back(s);
  };
  switch (r.kind) {
    case RegionKind::Point:
      break;
    case RegionKind::Tail1: {
      long t = sign_threshold(d.p(), r.from);
      for (long i = r.from; i < t; ++i) keep(r.set.intersect(IndexSet::nu2_piece(static_cast<unsigned>(i))));
      keep(r.set.intersect(IndexSet::nu2_at_least(static_cast<unsigned>(t))));
      break;
    }
    case RegionKind::Row: {
      UPoly u = d.as_j(r.i);
      long t = sign_threshold(u, r.from);
      for (long j = r.from; j < t; ++j) {
        keep(r.set.intersect(IndexSet::nu2sq_piece(static_cast<unsigned>(r.i), static_cast<unsigned>(j))));
      }
      keep(r.set.intersect(IndexSet::nu2sq_row_tail(static_cast<unsigned>(r.i), static_cast<unsigned>(t))));
      break;
    }
    case RegionKind::Tail2: {
      const UPoly& p = d.p();
      const UPoly& q = d.q();
      if (degree(q) <= 0) {
        long t = sign_threshold(p, r.from);
        for (long i = r.from; i < t; ++i) keep(r.set.intersect(IndexSet::nu2_piece(static_cast<unsigned>(i))));
        keep(r.set.intersect(IndexSet::nu2_at_least(static_cast<unsigned>(t))));
        break;
      }
      int sp = eventual_sign(p), sq = eventual_sign(q);
      if (degree(p) <= 0 || sp != sq) {
        throw Error("Unsupported", "sign of exponent " + e.to_string() + " varies along Nu2Squared columns");
      }
      Range rq = range_from(q, 0);
      Q qext = sq > 0 ? *rq.lo : *rq.hi;
      UPoly pshift = p;
      if (pshift.empty()) pshift.push_back(Q(0));
      pshift[0] += qext;
      long ti = sign_threshold(pshift, r.from);
      IndexSet rest = r.set;
      for (long i = r.from; i < ti; ++i) {
        UPoly qi = q;
        if (qi.empty()) qi.push_back(Q(0));
        qi[0] += eval(p, Q(i));
        long tj = sign_threshold(qi, 0);
        for (long j = 0; j < tj; ++j) {
          IndexSet piece = IndexSet::nu2sq_piece(static_cast<unsigned>(i), static_cast<unsigned>(j));
          keep(r.set.intersect(piece));
          rest = rest.minus(piece);
        }
      }
      keep(rest);
      break;
    }
  }
  return parts;
}

std::string value_key(const Value& v) { return v.num.to_string() + " | " + v.den.to_string(); }

void sort_by_dominance(GradedPoly& g, const Region& r) {
  std::stable_sort(g.terms.begin(), g.terms.end(), [&](const Term& a, const Term& b) {
    auto s = sign_on(r, a.e - b.e);
    return s && *s < 0;
  });
}

void normalize_den(Value& w) {
  Term d0 = w.den.terms.front();
  Coeff inv = d0.c.inverse();
  SepPoly neg = SepPoly() - d0.e;
  for (GradedPoly* g : {&w.num, &w.den}) {
    for (Term& t : g->terms) {
      t.c = t.c * inv;
      t.e = t.e + neg;
    }
  }
}

void canon_law(const IndexSet& dom, const Value& v, std::vector<Law>& out, int depth);

void canon_region(const Region& region, const Value& v, std::vector<Law>& out, int depth) {
  Value w = specialize(v, region);
  if (w.num.is_zero()) return;
  if (w.den.is_zero()) throw Error("DivisionByZero", "zero denominator");
  if (family_of(w) == Family::Whole) {
    w = reduce_plain(w);
    auto by_exp = [](const Term& a, const Term& b) { return a.e.constant() < b.e.constant(); };
    std::sort(w.num.terms.begin(), w.num.terms.end(), by_exp);
    std::sort(w.den.terms.begin(), w.den.terms.end(), by_exp);
    out.push_back({region.set, std::move(w)});
    return;
  }
  for (const GradedPoly* g : {&w.num, &w.den}) {
    for (std::size_t a = 0; a < g->terms.size(); ++a) {
      for (std::size_t b = a + 1; b < g->terms.size(); ++b) {
        SepPoly diff = g->terms[a].e - g->terms[b].e;
        auto s = sign_on(region, diff);
        if (s && *s != 0) continue;
        if (s) throw Error("InternalError", "coinciding exponents survived merging");
        for (const IndexSet& part : split_region(region, diff)) canon_law(part, w, out, depth + 1);
        return;
      }
    }
  }
  sort_by_dominance(w.num, region);
  sort_by_dominance(w.den, region);
  normalize_den(w);
  if (w.den.terms.size() == 1) w.den = GradedPoly::constant(Coeff(Q(1)));
  Range r = range_on(region, w.num.terms.front().e);
  if (!r.lo) throw Error("NonModerate", "exponent " + w.num.terms.front().e.to_string() + " is unbounded below");
  out.push_back({region.set, std::move(w)});
}

void canon_law(const IndexSet& dom, const Value& v, std::vector<Law>& out, int depth) {
  check_depth(depth);
  Value w{v.num.merged(), v.den.merged()};
  if (w.num.is_zero() || dom.germ_null()) return;
  if (w.den.is_zero()) throw Error("DivisionByZero", "zero denominator");
  Family fam = family_of(w);
  for (const Region& r : active_regions(dom, fam)) canon_region(r, w, out, depth);
}

std::vector<Law> canonicalize(const std::vector<Law>& raw) {
  std::vector<Law> laws;
  for (const Law& l : raw) canon_law(l.dom, l.val, laws, 0);
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < laws.size(); ++k) groups[value_key(laws[k].val)].push_back(k);
  std::vector<Law> out;
  for (auto& [key, idx] : groups) {
    if (idx.size() == 1) {
      out.push_back(laws[idx[0]]);
      continue;
    }
    IndexSet dom = laws[idx[0]].dom;
    for (std::size_t k = 1; k < idx.size(); ++k) dom = dom.unite(laws[idx[k]].dom);
    if (laws[idx[0]].family() == Family::Whole) {
      out.push_back({dom, laws[idx[0]].val});
    } else {
      canon_law(dom, laws[idx[0]].val, out, 0);
    }
  }
  std::sort(out.begin(), out.end(), [](const Law& a, const Law& b) {
    std::string ka = value_key(a.val), kb = value_key(b.val);
    if (ka != kb) return ka < kb;
    return a.dom.key() < b.dom.key();
  });
  return out;
}

void check_mode(const GenNum& a, const GenNum& b) {
  if (a.mode() != b.mode()) throw Error("ModeError", "operands live in different coefficient modes");
}

IndexSet union_of(const std::vector<Law>& laws) {
  IndexSet u;
  for (const Law& l : laws) u = u.unite(l.dom);
  return u;
}

}  // namespace

std::string to_string(Mode m) { return m == Mode::R ? "real" : "complex"; }

Family family_of(const Value& v) {
  if (v.depends_j()) return Family::Nu2Sq;
  if (v.depends_i()) return Family::Nu2;
  return Family::Whole;
}

// ---------------------------------------------------------------- regions

std::vector<Region> active_regions(const IndexSet& dom, Family fam) {
  std::vector<Region> out;
  if (dom.germ_null()) return out;
  if (fam == Family::Whole) {
    out.push_back({dom, RegionKind::Point});
    return out;
  }
  long a = dom.two_adic();
  for (long i = 0; i < a; ++i) {
    if (fam == Family::Nu2) {
      if (!dom.meets_residue(std::size_t{1} << i, std::size_t{2} << i)) continue;
      IndexSet s = dom.intersect(IndexSet::nu2_piece(static_cast<unsigned>(i)));
      if (!s.germ_null()) out.push_back({s, RegionKind::Point, i});
      continue;
    }
    for (long j = 0; j < a - i - 1; ++j) {
      std::size_t r = (std::size_t{1} << i) * ((std::size_t{1} << (j + 1)) - 1);
      if (!dom.meets_residue(r, std::size_t{1} << (i + j + 2))) continue;
      IndexSet s = dom.intersect(IndexSet::nu2sq_piece(static_cast<unsigned>(i), static_cast<unsigned>(j)));
      if (!s.germ_null()) out.push_back({s, RegionKind::Point, i, j});
    }
    long js = a - i - 1;
    IndexSet s = dom.intersect(IndexSet::nu2sq_row_tail(static_cast<unsigned>(i), static_cast<unsigned>(js)));
    if (!s.germ_null()) out.push_back({s, RegionKind::Row, i, -1, js});
  }
  IndexSet tail = dom.intersect(IndexSet::nu2_at_least(static_cast<unsigned>(a)));
  if (!tail.germ_null()) {
    out.push_back({tail, fam == Family::Nu2 ? RegionKind::Tail1 : RegionKind::Tail2, -1, -1, a});
  }
  return out;
}

SepPoly specialize(const SepPoly& e, const Region& r) {
  SepPoly d = e;
  if (r.i >= 0) d = d.fix_i(r.i);
  if (r.j >= 0) d = d.fix_j(r.j);
  return d;
}

Value specialize(const Value& v, const Region& r) {
  Value w = v;
  if (r.i >= 0) w = w.fix_i(r.i);
  if (r.j >= 0) w = w.fix_j(r.j);
  return w;
}

std::optional<int> sign_on(const Region& r, const SepPoly& e) {
  SepPoly d = specialize(e, r);
  switch (r.kind) {
    case RegionKind::Point:
      if (!d.is_const()) throw Error("InternalError", "point region with free exponent");
      return sgn(d.constant());
    case RegionKind::Tail1:
      return univariate_sign(d.p(), r.from);
    case RegionKind::Row:
      return univariate_sign(d.as_j(r.i), r.from);
    case RegionKind::Tail2: {
      if (d.is_const()) return sgn(d.constant());
      Range rr = add_ranges(range_from(d.p(), r.from), range_from(d.q(), 0));
      if (rr.lo && sgn(*rr.lo) > 0) return 1;
      if (rr.hi && sgn(*rr.hi) < 0) return -1;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Range range_on(const Region& r, const SepPoly& e) {
  SepPoly d = specialize(e, r);
  switch (r.kind) {
    case RegionKind::Point:
      return {d.constant(), d.constant()};
    case RegionKind::Tail1:
      return range_from(d.p(), r.from);
    case RegionKind::Row:
      return range_from(d.as_j(r.i), r.from);
    case RegionKind::Tail2:
      return add_ranges(range_from(d.p(), r.from), range_from(d.q(), 0));
  }
  return {};
}

namespace {

void split_rec(const IndexSet& dom, Family fam, const SepPoly& e, std::vector<SignedPart>& out, int depth) {
  check_depth(depth);
  for (const Region& r : active_regions(dom, fam)) {
    auto s = sign_on(r, e);
    if (s) {
      out.push_back({r.set, *s});
      continue;
    }
    for (const IndexSet& part : split_region(r, e)) split_rec(part, fam, e, out, depth + 1);
  }
}

}  // namespace

std::vector<SignedPart> split_by_sign(const IndexSet& dom, Family fam, const SepPoly& e) {
  std::vector<SignedPart> out;
  split_rec(dom, fam, e, out, 0);
  return out;
}

Range range_over(const IndexSet& dom, Family fam, const SepPoly& e) {
  Range acc;
  bool first = true;
  for (const Region& r : active_regions(dom, fam)) widen(acc, range_on(r, e), first);
  return acc;
}

// ---------------------------------------------------------------- GenNum

GenNum GenNum::from_laws(Mode m, std::vector<Law> laws) {
  if (m == Mode::R) {
    for (const Law& l : laws) {
      for (const GradedPoly* g : {&l.val.num, &l.val.den}) {
        for (const Term& t : g->terms) {
          if (!t.c.is_real()) throw Error("ModeError", "complex coefficient in real mode");
        }
      }
    }
  }
  GenNum x(m);
  x.laws_ = canonicalize(laws);
  return x;
}

GenNum GenNum::one(Mode m) { return rational(Coeff(Q(1)), m); }

GenNum GenNum::alpha(Mode m) {
  return from_laws(m, {{IndexSet::full(), Value::of(GradedPoly::monomial(Coeff(Q(1)), SepPoly(Q(1))))}});
}

GenNum GenNum::idempotent(const IndexSet& s, Mode m) {
  return from_laws(m, {{s, Value::of(GradedPoly::constant(Coeff(Q(1))))}});
}

GenNum GenNum::rational(const Coeff& c, Mode m) {
  return from_laws(m, {{IndexSet::full(), Value::of(GradedPoly::constant(c))}});
}

GenNum GenNum::graded(PieceFamily f, const SepPoly& g, const Coeff& c, Mode m) {
  switch (f) {
    case PieceFamily::BlockIndexed: {
      if (g.depends_j()) throw Error("DomainError", "BlockIndexed exponent depends on j");
      int s = eventual_sign(g.p());
      if (g.is_const()) return from_laws(m, {{IndexSet::full(), Value::of(GradedPoly::monomial(c, g))}});
      if (s > 0) return zero(m);
      throw Error("NonModerate", "exponent " + g.to_string() + " is unbounded below");
    }
    case PieceFamily::Nu2:
      if (g.depends_j()) throw Error("DomainError", "Nu2 exponent depends on j");
      return from_laws(m, {{IndexSet::full(), Value::of(GradedPoly::monomial(c, g))}});
    case PieceFamily::Nu2Squared:
      return from_laws(m, {{IndexSet::full(), Value::of(GradedPoly::monomial(c, g))}});
  }
  return zero(m);
}

IndexSet GenNum::support() const { return union_of(laws_); }

GenNum GenNum::restrict(const IndexSet& s) const {
  std::vector<Law> raw;
  for (const Law& l : laws_) raw.push_back({l.dom.intersect(s), l.val});
  return from_laws(mode_, std::move(raw));
}

GenNum GenNum::conj() const {
  std::vector<Law> raw;
  for (const Law& l : laws_) raw.push_back({l.dom, l.val.conj()});
  return from_laws(mode_, std::move(raw));
}

GenNum GenNum::with_mode(Mode m) const {
  if (m == mode_) return *this;
  return from_laws(m, laws_);
}

GenNum operator+(const GenNum& a, const GenNum& b) {
  check_mode(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<Law> raw;
  IndexSet ua = a.support(), ub = b.support();
  for (const Law& x : a.laws()) {
    for (const Law& y : b.laws()) {
      IndexSet s = x.dom.intersect(y.dom);
      if (!s.germ_null()) raw.push_back({s, x.val + y.val});
    }
    raw.push_back({x.dom.minus(ub), x.val});
  }
  for (const Law& y : b.laws()) raw.push_back({y.dom.minus(ua), y.val});
  return GenNum::from_laws(a.mode(), std::move(raw));
}

GenNum operator-(const GenNum& a) {
  std::vector<Law> raw;
  for (const Law& l : a.laws()) raw.push_back({l.dom, -l.val});
  return GenNum::from_laws(a.mode(), std::move(raw));
}

GenNum operator-(const GenNum& a, const GenNum& b) { return a + (-b); }

GenNum operator*(const GenNum& a, const GenNum& b) {
  check_mode(a, b);
  std::vector<Law> raw;
  for (const Law& x : a.laws()) {
    for (const Law& y : b.laws()) {
      IndexSet s = x.dom.intersect(y.dom);
      if (!s.germ_null()) raw.push_back({s, x.val * y.val});
    }
  }
  return GenNum::from_laws(a.mode(), std::move(raw));
}

std::string GenNum::to_string() const {
  if (laws_.empty()) return "0";
  auto tag = [](const Law& l) -> std::string {
    switch (l.family()) {
      case Family::Whole: return "";
      case Family::Nu2: return " [nu2]";
      case Family::Nu2Sq: return " [nu2sq]";
    }
    return "";
  };
  if (laws_.size() == 1 && laws_[0].dom.germ_full()) return laws_[0].val.to_string() + tag(laws_[0]);
  std::string out = "{";
  for (std::size_t k = 0; k < laws_.size(); ++k) {
    if (k) out += "; ";
    out += laws_[k].val.to_string() + tag(laws_[k]) + " on " + laws_[k].dom.to_string();
  }
  return out + "}";
}

GenNum pow(const GenNum& x, long n) {
  if (n < 0) return pow(invert(x), -n);
  GenNum result = GenNum::one(x.mode()), base = x;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

namespace {

bool exact_root(const Q& c, unsigned long k, Q& out) {
  if (sgn(c) <= 0) return false;
  mpz_class rn, rd;
  mpz_class n = c.get_num(), d = c.get_den();
  if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k)) return false;
  if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return false;
  out = Q(rn, rd);
  out.canonicalize();
  return true;
}

}  // namespace

GenNum pow(const GenNum& x, const Q& e) {
  if (is_integer(e)) return pow(x, to_long(e));
  if (sgn(e) < 0) return pow(invert(x), Q(-e));
  if (!e.get_num().fits_ulong_p() || !e.get_den().fits_ulong_p()) throw Error("Overflow", "exponent too large");
  unsigned long p = e.get_num().get_ui(), q = e.get_den().get_ui();
  std::vector<Law> raw;
  for (const Law& l : x.laws()) {
    bool single = l.val.num.terms.size() == 1 && l.val.den.terms.size() == 1 && l.val.den.terms[0].e == SepPoly();
    if (!single) throw Error("DomainError", "fractional power of a multi-term value");
    const Term& t = l.val.num.terms[0];
    Coeff dc = l.val.den.terms[0].c;
    Coeff c = t.c / dc;
    Q root;
    if (!c.is_real() || !exact_root(c.re, q, root)) {
      throw Error("DomainError", "fractional power of coefficient " + to_string(c) + " is not rational");
    }
    raw.push_back({l.dom, Value::of(GradedPoly::monomial(Coeff(pow_q(root, static_cast<unsigned>(p))), e * t.e))});
  }
  return GenNum::from_laws(x.mode(), std::move(raw));
}

bool equal_germ(const GenNum& a, const GenNum& b) { return (a - b).is_zero(); }

ExtVal valuation(const GenNum& x) {
  ExtVal best = ExtVal::inf();
  for (const Law& l : x.laws()) {
    Range r = range_over(l.dom, l.family(), l.exponent());
    if (!r.lo) throw Error("NonModerate", "exponent unbounded below");
    ExtVal v = ExtVal::of(*r.lo);
    if (v < best) best = v;
  }
  return best;
}

namespace {

void require_real(const GenNum& x, const char* op) {
  if (x.mode() != Mode::R) throw Error("ModeError", std::string(op) + " is only defined in real mode");
}

IndexSet positive_part(const GenNum& d) {
  IndexSet p;
  for (const Law& l : d.laws()) {
    if (sgn(l.coeff().re) > 0) p = p.unite(l.dom);
  }
  return p;
}

}  // namespace

bool leq(const GenNum& x, const GenNum& y) {
  require_real(x, "leq");
  GenNum d = y - x;
  return std::all_of(d.laws().begin(), d.laws().end(), [](const Law& l) { return sgn(l.coeff().re) > 0; });
}

GenNum sup(const GenNum& x, const GenNum& y) {
  require_real(x, "sup");
  check_mode(x, y);
  IndexSet p = positive_part(y - x);
  return x.restrict(p.complement()) + y.restrict(p);
}

GenNum inf(const GenNum& x, const GenNum& y) {
  require_real(x, "inf");
  check_mode(x, y);
  IndexSet p = positive_part(y - x);
  return x.restrict(p) + y.restrict(p.complement());
}

AbsResult abs(const GenNum& x) {
  if (x.mode() == Mode::R) {
    IndexSet p = positive_part(x);
    return {x.restrict(p) - x.restrict(p.complement()), false};
  }
  std::vector<Law> raw;
  bool skeletal = false;
  for (const Law& l : x.laws()) {
    bool single = l.val.num.terms.size() == 1 && l.val.den.terms.size() == 1;
    Q mod;
    if (single && exact_sqrt(l.coeff().norm2(), mod)) {
      raw.push_back({l.dom, Value::of(GradedPoly::monomial(Coeff(mod), l.exponent()))});
      continue;
    }
    skeletal = true;
    double approx = std::sqrt(to_double(l.coeff().norm2()));
    Q m(approx);
    raw.push_back({l.dom, Value::of(GradedPoly::monomial(Coeff(m), l.exponent()))});
  }
  return {GenNum::from_laws(x.mode(), std::move(raw)), skeletal};
}

GenNum abs2(const GenNum& x) { return x * x.conj(); }

std::string to_string(ElementClass c) {
  switch (c) {
    case ElementClass::Zero: return "Zero";
    case ElementClass::Invertible: return "Invertible";
    case ElementClass::ZeroDivisor: return "ZeroDivisor";
  }
  return "?";
}

bool exponents_bounded(const GenNum& x) {
  for (const Law& l : x.laws()) {
    if (!range_over(l.dom, l.family(), l.exponent()).hi) return false;
  }
  return true;
}

ElementClass classify_element(const GenNum& x) {
  if (x.is_zero()) return ElementClass::Zero;
  if (x.support().germ_full() && exponents_bounded(x)) return ElementClass::Invertible;
  return ElementClass::ZeroDivisor;
}

namespace {

GenNum invert_laws(const GenNum& x) {
  std::vector<Law> raw;
  for (const Law& l : x.laws()) raw.push_back({l.dom, l.val.inverse()});
  return GenNum::from_laws(x.mode(), std::move(raw));
}

}  // namespace

GenNum invert(const GenNum& x) {
  ElementClass c = classify_element(x);
  if (c == ElementClass::Zero) throw Error("DivisionByZero", "inverse of zero");
  if (c != ElementClass::Invertible) throw Error("NotInvertible", "element is a zero divisor");
  return invert_laws(x);
}

bool inv_test(const GenNum& x, const IndexSet& s) {
  if (s.germ_null()) return true;
  GenNum y = x.restrict(s);
  return germ_subset(s, y.support()) && exponents_bounded(y);
}

bool z_test(const GenNum& x, const IndexSet& s) { return x.restrict(s).is_zero(); }

GenNum invert_on(const GenNum& x, const IndexSet& s) {
  if (!inv_test(x, s)) throw Error("NotInvertibleOnS", "element is not invertible with respect to the set");
  return invert_laws(x.restrict(s));
}

IndexSet level_set(const GenNum& x, const Q& m) {
  IndexSet out;
  for (const Law& l : x.laws()) {
    bool unit = l.coeff().norm2() >= 1;
    for (const SignedPart& part : split_by_sign(l.dom, l.family(), l.exponent() - SepPoly(m))) {
      if (part.sign < 0 || (part.sign == 0 && unit)) out = out.unite(part.set);
    }
  }
  return out;
}

}  // namespace cgn
