#include "cgn/suites.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include "cgn/gallery.hpp"
#include "cgn/ideal.hpp"
#include "cgn/oracle.hpp"
#include "cgn/ring_calculus.hpp"
#include "cgn/script.hpp"

namespace cgn {

long RandomCorpus::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

bool RandomCorpus::chance(double p) { return std::bernoulli_distribution(p)(rng_); }

Q RandomCorpus::exponent() { return make_q(uniform(-4, 8), chance(0.3) ? 2 : 1); }

Coeff RandomCorpus::coeff() {
  auto part = [&] {
    long n = uniform(1, 5) * (chance(0.5) ? 1 : -1);
    return make_q(n, uniform(1, 3));
  };
  if (mode_ == Mode::C && chance(0.3)) return Coeff(chance(0.5) ? part() : Q(0), part());
  return Coeff(part());
}

IndexSet RandomCorpus::set() {
  auto base = [&]() -> IndexSet {
    switch (uniform(0, 7)) {
      case 0: return IndexSet::full();
      case 1: {
        long m = uniform(2, 4);
        return IndexSet::blocks(static_cast<std::size_t>(uniform(0, m - 1)), static_cast<std::size_t>(m));
      }
      case 2: {
        long m = uniform(1, 3);
        return IndexSet::grid(static_cast<std::size_t>(uniform(0, m - 1)), static_cast<std::size_t>(m));
      }
      case 3: return IndexSet::interval(make_q(1, 2 << uniform(0, 3)), Q(1));
      case 4: return IndexSet::nu2_piece(static_cast<unsigned>(uniform(0, 2)));
      case 5: return IndexSet::nu2_at_least(static_cast<unsigned>(uniform(1, 2)));
      default: return IndexSet::blocks(static_cast<std::size_t>(uniform(0, 1)), 2);
    }
  };
  IndexSet s = base();
  if (chance(0.25)) s = s.complement();
  if (chance(0.2)) s = s.unite(base());
  return s;
}

IndexSet RandomCorpus::splitting_set() {
  for (;;) {
    IndexSet s = set();
    if (s.classify() == SetClass::Splitting) return s;
  }
}

GenNum RandomCorpus::monomial() {
  return GenNum::rational(coeff(), mode_) * pow(GenNum::alpha(mode_), exponent());
}

GenNum RandomCorpus::graded_term() {
  UPoly p{Q(uniform(0, 2)), Q(uniform(1, 2))};
  if (chance(0.2)) p.push_back(Q(1));
  return GenNum::graded(PieceFamily::Nu2, SepPoly::in_i(p), coeff(), mode_);
}

GenNum RandomCorpus::element() {
  if (chance(0.05)) return GenNum::zero(mode_);
  GenNum x = GenNum::zero(mode_);
  long terms = uniform(1, 3);
  for (long t = 0; t < terms; ++t) {
    GenNum m = chance(0.2) ? graded_term() : monomial();
    x = x + (chance(0.6) ? m * GenNum::idempotent(set(), mode_) : m);
  }
  return x;
}

GenNum RandomCorpus::oracle_element() {
  // The leading full-support monomial keeps every sampled block nonzero.
  GenNum x = monomial();
  long terms = uniform(0, 2);
  for (long t = 0; t < terms; ++t) {
    GenNum m = chance(0.3) ? graded_term() : monomial();
    if (chance(0.5)) m = m * GenNum::idempotent(IndexSet::blocks(static_cast<std::size_t>(uniform(0, 1)), 2), mode_);
    x = x + m;
  }
  return x;
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json props = nlohmann::json::object();
  for (const auto& [k, v] : properties) props[k] = {{"passed", v.first}, {"failed", v.second}};
  nlohmann::json fails = nlohmann::json::array();
  for (const PropertyFailure& f : failures) {
    fails.push_back({{"property", f.property}, {"seed", f.seed}, {"counterexample", f.counterexample}});
  }
  return {{"schema", "cgn-suite/1"},
          {"suite", name},
          {"seed", seed},
          {"depth", depth},
          {"passed", passed},
          {"failed", failed},
          {"cases", cases},
          {"skipped", skipped},
          {"ok", ok()},
          {"properties", props},
          {"failures", fails}};
}

std::string SuiteReport::summary() const {
  std::ostringstream os;
  os << name << ": " << (ok() ? "PASS" : "FAIL") << " (" << passed << " passed, " << failed << " failed";
  if (cases > 0) os << ", " << skipped << " of " << cases << " random cases skipped";
  os << ", seed " << seed << ")";
  for (const PropertyFailure& f : failures) {
    os << "\n  " << f.property << " [seed " << f.seed << "]: " << f.counterexample;
  }
  return os.str();
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Runner {
 public:
  Runner(std::string name, std::uint64_t seed, long depth) {
    rep_.name = std::move(name);
    rep_.seed = seed;
    rep_.depth = depth;
  }

  std::uint64_t case_seed(std::size_t k) const { return mix(rep_.seed * 0x100000001b3ULL + k); }

  void check(const std::string& prop, bool ok, std::uint64_t seed, const std::function<std::string()>& describe) {
    auto& counts = rep_.properties[prop];
    if (ok) {
      ++counts.first;
      ++rep_.passed;
      return;
    }
    ++counts.second;
    ++rep_.failed;
    std::string ce = describe();
    for (PropertyFailure& f : rep_.failures) {
      if (f.property == prop) {
        if (ce.size() < f.counterexample.size()) f = {prop, seed, ce};
        return;
      }
    }
    rep_.failures.push_back({prop, seed, ce});
  }

  /// Runs body for n derived seeds; a thrown Error fails the property.
  void cases(const std::string& prop, std::size_t n, const std::function<void(RandomCorpus&, std::uint64_t)>& body,
             Mode m = Mode::R) {
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t s = case_seed(k);
      RandomCorpus rc(s, m);
      ++rep_.cases;
      try {
        body(rc, s);
      } catch (const Error& e) {
        if (e.kind == "ResourceLimit") {
          ++rep_.skipped;
          continue;
        }
        check(prop + " (no error)", false, s, [&] { return e.kind + ": " + e.what(); });
      }
    }
  }

  long depth() const { return rep_.depth; }
  SuiteReport done() { return std::move(rep_); }

 private:
  SuiteReport rep_;
};

std::string show(std::initializer_list<std::pair<const char*, const GenNum*>> xs) {
  std::string out;
  for (const auto& [n, x] : xs) out += std::string(out.empty() ? "" : ", ") + n + " = " + x->to_string();
  return out;
}

ExtVal add(const ExtVal& a, const ExtVal& b) {
  if (a.infinite || b.infinite) return ExtVal::inf();
  return ExtVal::of(a.v + b.v);
}

ExtVal min(const ExtVal& a, const ExtVal& b) { return b < a ? b : a; }

GenNum one(Mode m) { return GenNum::one(m); }
GenNum e(const IndexSet& s, Mode m = Mode::R) { return GenNum::idempotent(s, m); }
GenNum eps(long k) { return pow(GenNum::alpha(Mode::R), k); }

SuiteReport ultrametric(Runner& r) {
  for (Mode m : {Mode::R, Mode::C}) {
    std::string tag = m == Mode::R ? "" : " [C]";
    r.cases("ring", m == Mode::R ? 300 : 200, [&](RandomCorpus& rc, std::uint64_t s) {
      GenNum x = rc.element(), y = rc.element(), z = rc.element();
      auto d = [&] { return show({{"x", &x}, {"y", &y}, {"z", &z}}); };
      ExtVal vx = valuation(x), vy = valuation(y), vs = valuation(x + y);
      r.check("v(x+y) >= min" + tag, min(vx, vy) <= vs, s, d);
      if (!(vx == vy)) r.check("v(x+y) = min when vx != vy" + tag, vs == min(vx, vy), s, d);
      r.check("v(xy) >= vx+vy" + tag, add(vx, vy) <= valuation(x * y), s, d);
      r.check("v(-x) = v(x)" + tag, valuation(-x) == vx, s, d);
      r.check("add assoc" + tag, equal_germ((x + y) + z, x + (y + z)), s, d);
      r.check("add comm" + tag, equal_germ(x + y, y + x), s, d);
      r.check("mul assoc" + tag, equal_germ((x * y) * z, x * (y * z)), s, d);
      r.check("mul comm" + tag, equal_germ(x * y, y * x), s, d);
      r.check("distributive" + tag, equal_germ(x * (y + z), x * y + x * z), s, d);
      r.check("identities" + tag, equal_germ(x + GenNum::zero(m), x) && equal_germ(x * one(m), x), s, d);
      r.check("additive inverse" + tag, (x - x).is_zero() && equal_germ(x + (-x), GenNum::zero(m)), s, d);
    }, m);
  }
  return r.done();
}

SuiteReport exchange(Runner& r) {
  for (Mode m : {Mode::R, Mode::C}) {
    std::string tag = m == Mode::R ? "" : " [C]";
    r.cases("exchange", 100, [&](RandomCorpus& rc, std::uint64_t s) {
      GenNum a = rc.element();
      IndexSet t = clean_idempotent(a);
      GenNum et = e(t, m);
      auto d = [&] { return show({{"a", &a}}) + ", T = " + t.to_string(); };
      r.check("e^2 = e" + tag, equal_germ(et * et, et), s, d);
      r.check("a + e invertible" + tag, classify_element(a + et) == ElementClass::Invertible, s, d);
      GenNum u = a + et;
      r.check("(a + e) * inverse = 1" + tag, equal_germ(u * invert(u), one(m)), s, d);
    }, m);
  }
  return r.done();
}

SuiteReport zero_divisor(Runner& r) {
  r.cases("orthogonal", 200, [&](RandomCorpus& rc, std::uint64_t s) {
    IndexSet cut = rc.set();
    GenNum x = rc.element() * e(cut), y = rc.element() * e(cut.complement());
    if (rc.chance(0.3)) x = x * e(rc.set());
    auto d = [&] { return show({{"x", &x}, {"y", &y}}); };
    IndexSet t = split_zero_divisors(x, y);
    r.check("x e_S = 0", (x * e(t)).is_zero(), s, d);
    r.check("y e_coS = 0", (y * e(t.complement())).is_zero(), s, d);
    r.check("xy = 0 iff inf(|x|,|y|) = 0 (orthogonal)", inf(abs(x).value, abs(y).value).is_zero(), s, d);
  });
  r.cases("random pair", 200, [&](RandomCorpus& rc, std::uint64_t s) {
    GenNum x = rc.element(), y = rc.element();
    auto d = [&] { return show({{"x", &x}, {"y", &y}}); };
    bool zero = (x * y).is_zero();
    bool meet_zero = inf(abs(x).value, abs(y).value).is_zero();
    bool splits = true;
    try {
      IndexSet t = split_zero_divisors(x, y);
      splits = (x * e(t)).is_zero() && (y * e(t.complement())).is_zero();
    } catch (const Error& err) {
      if (err.kind != "NotOrthogonal") throw;
      splits = false;
    }
    r.check("xy = 0 iff inf(|x|,|y|) = 0", zero == meet_zero, s, d);
    r.check("xy = 0 iff a splitter exists", zero == splits, s, d);
  });
  return r.done();
}

std::vector<GenNum> probe_corpus(RandomCorpus& rc, const GenNum& a, const GenNum& b, std::size_t extra) {
  std::vector<GenNum> ps{a, b, a * b, a + b, eps(1) * a, one(Mode::R)};
  for (std::size_t k = 0; k < extra; ++k) ps.push_back(rc.element());
  return ps;
}

SuiteReport bezout(Runner& r) {
  r.cases("bezout", 200, [&](RandomCorpus& rc, std::uint64_t s) {
    GenNum a = rc.element(), b = rc.element();
    if (rc.chance(0.2)) a = a * gallery_beta();
    auto d = [&] { return show({{"a", &a}, {"b", &b}}); };
    BezoutResult br = bezout_gen(a, b);
    r.check("g = ra + sb", equal_germ(br.g, br.r * a + br.s * b), s, d);
    r.check("a in gK", in_principal(a, br.g).member, s, d);
    r.check("b in gK", in_principal(b, br.g).member, s, d);
    GenNum m = meet_gen(a, b);
    r.check("meet in aK", in_principal(m, a).member, s, d);
    r.check("meet in bK", in_principal(m, b).member, s, d);
    for (const GenNum& x : probe_corpus(rc, a, b, 4)) {
      bool both = in_principal(x, a).member && in_principal(x, b).member;
      r.check("probe: x in aK and bK iff x in meet K", both == in_principal(x, m).member, s,
              [&] { return d() + ", x = " + x.to_string(); });
      bool sum = in_principal(x, br.g).member;
      r.check("probe: aK + bK contains x iff x in gK", !in_principal(x, a).member || sum, s,
              [&] { return d() + ", x = " + x.to_string(); });
    }
  });
  return r.done();
}

std::vector<GenNum> closure_corpus() {
  const Mode R = Mode::R;
  IndexSet even = IndexSet::blocks(0, 2), odd = IndexSet::blocks(1, 2);
  GenNum b = gallery_beta(R);
  std::vector<GenNum> c{
      eps(0), eps(1), eps(2), eps(3), eps(-1),
      e(even), e(odd) * eps(2), e(IndexSet::blocks(0, 3)) * GenNum::rational(Coeff(Q(3)), R),
      e(IndexSet::nu2_piece(1)) * eps(4), e(IndexSet::grid(0, 1)) * pow(GenNum::alpha(R), make_q(1, 2)),
      e(even) * eps(2) + e(odd), e(IndexSet::nu2_at_least(1)) * eps(-2), e(IndexSet::interval(make_q(1, 4), Q(1))),
      e(IndexSet::grid(0, 2).complement()) * eps(5), GenNum::zero(R),
      b, gallery_beta_m(2, R), gallery_beta_m(3, R), gallery_beta_m(4, R), gallery_beta_m(5, R),
      b * e(even), b * e(IndexSet::nu2_at_least(1)), b * eps(1), pow(b, 2), gallery_gamma(R),
      b * e(even) + e(odd), b * e(odd) + eps(3) * e(even),
      GenNum::graded(PieceFamily::Nu2, SepPoly::in_i({Q(1), Q(2)}), Coeff(Q(1)), R),
      GenNum::graded(PieceFamily::Nu2, SepPoly::in_i({Q(0), Q(1)}), Coeff(make_q(1, 3)), R),
      b * e(IndexSet::grid(0, 1)),
  };
  return c;
}

std::vector<GenNum> closure_probes(const GenNum& a) {
  std::vector<GenNum> ps{one(Mode::R), eps(1), eps(3), e(IndexSet::blocks(0, 2)), e(IndexSet::blocks(1, 2)),
                         gallery_beta(), nth_root_skeleton(gallery_beta(), 2), a, a * eps(1), skeleton(a),
                         nth_root_skeleton(a, 2), nth_root_skeleton(a, 3), a * e(IndexSet::blocks(0, 2))};
  try {
    ps.push_back(gallery_closure_witness(a));
  } catch (const Error& err) {
    if (err.kind != "NotApplicable") throw;
  }
  return ps;
}

SuiteReport thm_closed_fin_gen(Runner& r) {
  std::vector<GenNum> corpus = closure_corpus();
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const GenNum& a = corpus[k];
    std::uint64_t s = k;
    try {
      bool p_stat = stationary(a).has_value();
      bool p_rad = in_principal(nth_root_skeleton(a, 2), a).member;
      bool p_pure = pure_part(a).single();
      bool p_cl = true, p_z = true;
      for (const GenNum& x : closure_probes(a)) {
        bool mem = in_principal(x, a).member;
        p_cl = p_cl && in_closure(x, a) == mem;
        p_z = p_z && in_z_closure(x, a) == mem;
      }
      bool all = p_stat == p_rad && p_rad == p_pure && p_pure == p_cl && p_cl == p_z;
      r.check(p_stat ? "equivalence matrix: closed" : "equivalence matrix: not closed", all, s, [&] {
        std::ostringstream os;
        os << "a = " << a.to_string() << ": stationary=" << p_stat << " radical=" << p_rad << " pure=" << p_pure
           << " closure=" << p_cl << " zclosure=" << p_z;
        return os.str();
      });
    } catch (const Error& err) {
      r.check("equivalence matrix (no error)", false, s, [&] { return a.to_string() + ": " + err.what(); });
    }
  }
  return r.done();
}

SuiteReport gallery(Runner& r) {
  auto ok = [&](const std::string& p, bool v, std::uint64_t s, std::string d) {
    r.check(p, v, s, [&] { return d; });
  };
  for (long m = 2; m <= 5; ++m) {
    GenNum bm = gallery_beta_m(m), bp = gallery_beta_m(m - 1);
    std::string d = "m = " + std::to_string(m);
    ok("beta_m in beta_{m-1}K", in_principal(bm, bp).member, m, d);
    ok("beta_{m-1} not in rad(beta_m K)", !in_radical(bp, bm), m, d);
    for (long n = 2; n <= 5; ++n) {
      ok("Inv(beta_m) = Inv(beta_n)", inv_subset(bm, gallery_beta_m(n)) && inv_subset(gallery_beta_m(n), bm), m,
         d + ", n = " + std::to_string(n));
    }
  }
  GenNum b = gallery_beta();
  GenNum y = gallery_closure_witness(b);
  ok("witness in closure(beta K)", in_closure(y, b), 0, y.to_string());
  Membership mem = in_principal(y, b);
  ok("witness not in beta K", !mem.member && !mem.witness, 0, y.to_string());
  ok("in_principal(beta_3, beta_2)", in_principal(gallery_beta_m(3), gallery_beta_m(2)).member, 0, "beta_3, beta_2");
  ok("not in_radical(beta_2, beta_3)", !in_radical(gallery_beta_m(2), gallery_beta_m(3)), 0, "beta_2, beta_3");
  GenNum g = gallery_gamma();
  ok("v(gamma) = 2", valuation(g) == ExtVal::of(Q(2)), 0, g.to_string());
  return r.done();
}

SuiteReport annihilator(Runner& r) {
  const IndexSet even = IndexSet::blocks(0, 2);
  std::vector<GenNum> gal{gallery_beta(), gallery_beta_m(2), gallery_gamma(), gallery_beta() * e(even)};
  r.cases("ann", 100, [&](RandomCorpus& rc, std::uint64_t s) {
    const GenNum& a = gal[static_cast<std::size_t>(rc.uniform(0, static_cast<long>(gal.size()) - 1))];
    GenNum x;
    switch (rc.uniform(0, 5)) {
      case 0: x = rc.element(); break;
      case 1: x = a * rc.element(); break;
      case 2: x = gallery_closure_witness(a); break;
      case 3: x = nth_root_skeleton(a, rc.uniform(2, 3)) * rc.monomial(); break;
      case 4: x = rc.monomial() * e(rc.set()); break;
      default: x = pow(a, rc.uniform(1, 2)) + a * rc.monomial(); break;
    }
    auto d = [&] { return show({{"x", &x}, {"a", &a}}); };
    auto w = find_ann_witness(x, a);
    r.check("witness iff not in closure", w.has_value() == !in_closure(x, a), s, d);
    if (w) r.check("witness separates", annihilates(a, *w) && !annihilates(x, *w), s, d);
  });
  return r.done();
}

FilterBase random_filter(RandomCorpus& rc) {
  static const std::vector<IndexSet> pool{IndexSet::blocks(0, 4), IndexSet::blocks(1, 4), IndexSet::nu2_piece(1),
                                          IndexSet::grid(0, 2),   IndexSet::blocks(2, 8), IndexSet::blocks(0, 3)};
  std::vector<IndexSet> gens{pool[static_cast<std::size_t>(rc.uniform(0, 5))]};
  if (rc.chance(0.5)) gens.push_back(pool[static_cast<std::size_t>(rc.uniform(0, 5))]);
  return FilterBase(gens);
}

SuiteReport quotient(Runner& r) {
  r.cases("quotient", 50, [&](RandomCorpus& rc, std::uint64_t s) {
    FilterBase f = random_filter(rc);
    GenNum et = e(f.top());
    GenNum x = rc.element();
    GenNum y = rc.chance(0.6) ? x + rc.element() * et : rc.element();
    GenNum z = rc.chance(0.6) ? y + rc.element() * et : rc.element();
    auto d = [&] { return show({{"x", &x}, {"y", &y}, {"z", &z}}) + ", top = " + f.top().to_string(); };
    bool xy = quotient_equiv(x, y, f), yx = quotient_equiv(y, x, f), yz = quotient_equiv(y, z, f);
    bool xz = quotient_equiv(x, z, f);
    r.check("reflexive", quotient_equiv(x, x, f), s, d);
    r.check("symmetric", xy == yx, s, d);
    r.check("transitive", !(xy && yz) || xz, s, d);
    ExtVal vx = quotient_val(x, f), vy = quotient_val(y, f);
    r.check("qval ultrametric", min(vx, vy) <= quotient_val(x + y, f), s, d);
    r.check("qval infinite iff equivalent to 0", vx.infinite == quotient_equiv(x, GenNum::zero(Mode::R), f), s, d);
    r.check("qval(x - y) infinite iff x ~ y", quotient_val(x - y, f).infinite == xy, s, d);
  });
  return r.done();
}

SuiteReport oracle(Runner& r) {
  SampleProfile p;
  p.depth = r.depth();
  r.cases("oracle", 100, [&](RandomCorpus& rc, std::uint64_t s) {
    GenNum x = rc.oracle_element(), y = rc.oracle_element();
    auto d = [&] { return show({{"x", &x}, {"y", &y}}); };
    ExtVal v = valuation(x);
    OracleInterval oi = oracle_val(x, p);
    r.check("valuation in bracket", !v.infinite && oi.contains(to_double(v.v)), s,
            [&] { return d() + " bracket [" + std::to_string(oi.lo) + ", " + std::to_string(oi.hi) + "]"; });
    r.check("bracket half-width <= 0.5", oi.hi - oi.lo <= 1.0 + 1e-12, s, d);
    if (leq(x, y)) r.check("leq consistent", oracle_leq(x, y, p) == Verdict::ConsistentWith, s, d);
    if (leq(y, x)) r.check("leq consistent", oracle_leq(y, x, p) == Verdict::ConsistentWith, s, d);
    GenNum mx = sup(x, y);
    r.check("x <= sup(x, y)", oracle_leq(x, mx, p) == Verdict::ConsistentWith, s, d);
    r.check("eq consistent: xy = yx", oracle_eq(x * y, y * x, p) == Verdict::ConsistentWith, s, d);
    r.check("eq consistent: (x + y) - y = x", oracle_eq((x + y) - y, x, p) == Verdict::ConsistentWith, s, d);
  });
  std::vector<GenNum> gal{gallery_beta(), gallery_beta_m(2), gallery_gamma(), eps(3)};
  for (std::size_t k = 0; k < gal.size(); ++k) {
    OracleInterval oi = oracle_val(gal[k], p);
    ExtVal v = valuation(gal[k]);
    r.check("gallery valuation in bracket", oi.contains(to_double(v.v)) && oi.hi - oi.lo <= 1.0 + 1e-12, k,
            [&] { return gal[k].to_string(); });
  }
  return r.done();
}

SuiteReport cli(Runner& r) {
  using script::Session;
  const std::string& text = golden_script();
  try {
    script::Script a = script::parse(text);
    std::string printed = script::print(a);
    script::Script b = script::parse(printed);
    r.check("golden: print(parse) is identity", printed == text, 0, [&] { return printed; });
    r.check("golden: parse(print(parse)) = parse", script::print(b) == printed, 0, [&] { return printed; });
  } catch (const Error& err) {
    r.check("golden: parses", false, 0, [&] { return std::string(err.what()); });
  }
  Session s1, s2;
  s1.depth = s2.depth = r.depth();
  std::string rep1 = script::eval_script(s1, text).dump(2) + "\n";
  std::string rep2 = script::eval_script(s2, text).dump(2) + "\n";
  r.check("report determinism", rep1 == rep2, 0, [] { return std::string("two runs differ"); });
  if (r.depth() == 64) {
    r.check("golden report", rep1 == golden_report(), 0, [&] { return rep1; });
  }
  std::mt19937_64 rng(r.case_seed(0));
  std::size_t crashes = 0, structured = 0;
  for (std::size_t k = 0; k < 10000; ++k) {
    std::string src = fuzz_script(rng);
    try {
      Session s;
      s.depth = std::min<long>(r.depth(), 16);
      nlohmann::json rep = script::eval_script(s, src);
      bool internal = false;
      for (const auto& en : rep["results"]) {
        if (!en.value("ok", false)) {
          ++structured;
          internal = internal || en["error"]["kind"] == "InternalError";
        }
      }
      r.check("fuzz: no internal errors", !internal, k, [&] { return src; });
    } catch (const std::exception& ex) {
      ++crashes;
      r.check("fuzz: no crash", false, k, [&] { return src + " => " + ex.what(); });
    }
  }
  (void)crashes;
  (void)structured;
  return r.done();
}

const std::map<std::string, SuiteReport (*)(Runner&)>& registry() {
  static const std::map<std::string, SuiteReport (*)(Runner&)> m{
      {"ultrametric", ultrametric}, {"exchange", exchange},       {"zero-divisor", zero_divisor},
      {"bezout", bezout},           {"thm-closed-fin-gen", thm_closed_fin_gen},
      {"gallery", gallery},         {"annihilator", annihilator}, {"quotient", quotient},
      {"oracle", oracle},           {"cli", cli}};
  return m;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ultrametric", "exchange", "zero-divisor", "bezout",
                                              "thm-closed-fin-gen", "gallery", "annihilator", "quotient",
                                              "oracle", "cli"};
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, long depth) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error("UnknownSuite", "no suite named '" + name + "'");
  if (depth < 8) throw Error("DomainError", "depth must be at least 8");
  Runner r(name, seed, depth);
  return it->second(r);
}

}  // namespace cgn
