#include <cmath>
#include <map>
#include <functional>

#include "cgn/gallery.hpp"
#include "cgn/ideal.hpp"
#include "cgn/oracle.hpp"
#include "cgn/script.hpp"

namespace cgn::script {

struct Session::Binding {
  enum class Kind { Num, Set, Ideal };
  Kind kind = Kind::Num;
  GenNum num;
  IndexSet set;
  IdealPtr ideal;
};

namespace {

using Val = Session::Binding;
using VK = Val::Kind;

Val of_num(GenNum x) {
  Val v;
  v.kind = VK::Num;
  v.num = std::move(x);
  return v;
}
Val of_set(IndexSet s) {
  Val v;
  v.kind = VK::Set;
  v.set = std::move(s);
  return v;
}
Val of_ideal(IdealPtr i) {
  Val v;
  v.kind = VK::Ideal;
  v.ideal = std::move(i);
  return v;
}

const char* kind_name(VK k) {
  switch (k) {
    case VK::Num: return "number";
    case VK::Set: return "set";
    case VK::Ideal: return "ideal";
  }
  return "?";
}

std::string where(const Expr& e) { return "line " + std::to_string(e.line) + ", col " + std::to_string(e.col) + ": "; }

[[noreturn]] void mismatch(const Expr& e, const std::string& msg) { throw Error("TypeMismatch", where(e) + msg); }

constexpr long kMaxPower = 256;
constexpr long kMaxModulus = 4096;
constexpr long kMaxPiece = 14;

class Evaluator {
 public:
  explicit Evaluator(Session& s) : s_(s) {}

  Val eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Number:
        return of_num(GenNum::rational(Coeff(parse_q(e.text)), s_.mode));
      case Expr::Kind::Ident:
        return ident(e);
      case Expr::Kind::Idempotent:
        return of_num(GenNum::idempotent(set(*e.args[0]), s_.mode));
      case Expr::Kind::Principal:
        return of_ideal(IdealExpr::principal(num(*e.args[0])));
      case Expr::Kind::Lambda:
        mismatch(e, "an exponent function is only allowed inside graded(...)");
      case Expr::Kind::Unary:
        if (e.text == "-") return of_num(-num(*e.args[0]));
        return of_set(set(*e.args[0]).complement());
      case Expr::Kind::Binary:
        return binary(e);
      case Expr::Kind::Call:
        return call(e);
    }
    mismatch(e, "unknown expression");
  }

  GenNum num(const Expr& e) {
    Val v = eval(e);
    if (v.kind != VK::Num) mismatch(e, std::string("expected a number, found a ") + kind_name(v.kind));
    return v.num;
  }

  IndexSet set(const Expr& e) {
    Val v = eval(e);
    if (v.kind != VK::Set) mismatch(e, std::string("expected a set, found a ") + kind_name(v.kind));
    return v.set;
  }

  IdealPtr ideal(const Expr& e) {
    Val v = eval(e);
    if (v.kind == VK::Num) return IdealExpr::principal(v.num);
    if (v.kind != VK::Ideal) mismatch(e, std::string("expected an ideal, found a ") + kind_name(v.kind));
    return v.ideal;
  }

  Q constant(const Expr& e) {
    GenNum x = num(e);
    if (x.is_zero()) return Q(0);
    const auto& ls = x.laws();
    if (ls.size() == 1 && ls[0].dom.germ_full() && ls[0].val.num.terms.size() == 1 && ls[0].val.den.terms.size() == 1) {
      const Term& t = ls[0].val.num.terms[0];
      const Term& d = ls[0].val.den.terms[0];
      if (t.e.is_const() && sgn(t.e.constant()) == 0 && d.e.is_const() && sgn(d.e.constant()) == 0 && t.c.is_real() &&
          d.c.is_real()) {
        return t.c.re / d.c.re;
      }
    }
    mismatch(e, "expected a rational constant");
  }

  long integer(const Expr& e, long lo, long hi) {
    Q q = constant(e);
    if (!is_integer(q)) mismatch(e, "expected an integer");
    if (q < lo || q > hi) {
      throw Error("ResourceLimit", where(e) + "integer " + to_string(q) + " outside [" + std::to_string(lo) + ", " +
                                       std::to_string(hi) + "]");
    }
    return to_long(q);
  }

  Mode mode() const { return s_.mode; }

 private:
  Session& s_;

  Val ident(const Expr& e) {
    auto it = s_.env.find(e.text);
    if (it != s_.env.end()) return *it->second;
    if (e.text == "eps") return of_num(GenNum::alpha(s_.mode));
    if (e.text == "i" || e.text == "I") {
      if (s_.mode == Mode::R) throw Error("ModeError", where(e) + "the imaginary unit needs complex mode");
      return of_num(GenNum::rational(Coeff(Q(0), Q(1)), Mode::C));
    }
    if (e.text == "full") return of_set(IndexSet::full());
    if (e.text == "empty") return of_set(IndexSet::empty());
    if (e.text == "beta" || e.text == "gamma") return of_num(gallery_named(e.text, s_.mode));
    throw Error("UnknownIdentifier", where(e) + "'" + e.text + "' is not bound");
  }

  Val binary(const Expr& e) {
    const std::string& op = e.text;
    Val l = eval(*e.args[0]);
    if (op == "^") {
      if (l.kind == VK::Ideal) {
        return of_ideal(IdealExpr::binary(IdealExpr::Kind::Intersect, l.ideal, ideal(*e.args[1])));
      }
      if (l.kind != VK::Num) mismatch(e, "'^' needs a number or an ideal on the left");
      Q k = constant(*e.args[1]);
      if (is_integer(k)) {
        if (abs(k) > kMaxPower) throw Error("ResourceLimit", where(e) + "power too large");
        return of_num(pow(l.num, to_long(k)));
      }
      if (k.get_den() > 64 || abs(k) > kMaxPower) throw Error("ResourceLimit", where(e) + "power too large");
      return of_num(pow(l.num, k));
    }
    Val r = eval(*e.args[1]);
    if (l.kind != r.kind) {
      if (l.kind == VK::Ideal && r.kind == VK::Num) r = of_ideal(IdealExpr::principal(r.num));
      else if (l.kind == VK::Num && r.kind == VK::Ideal) l = of_ideal(IdealExpr::principal(l.num));
      else mismatch(e, std::string("'") + op + "' between a " + kind_name(l.kind) + " and a " + kind_name(r.kind));
    }
    switch (l.kind) {
      case VK::Num:
        if (op == "+") return of_num(l.num + r.num);
        if (op == "-") return of_num(l.num - r.num);
        if (op == "*") return of_num(l.num * r.num);
        if (op == "/") return of_num(l.num * invert(r.num));
        break;
      case VK::Set:
        if (op == "|") return of_set(l.set.unite(r.set));
        if (op == "&") return of_set(l.set.intersect(r.set));
        if (op == "-") return of_set(l.set.minus(r.set));
        break;
      case VK::Ideal:
        if (op == "+") return of_ideal(IdealExpr::binary(IdealExpr::Kind::Sum, l.ideal, r.ideal));
        if (op == "*") return of_ideal(IdealExpr::binary(IdealExpr::Kind::Product, l.ideal, r.ideal));
        break;
    }
    mismatch(e, std::string("'") + op + "' is not defined on a " + kind_name(l.kind));
  }

  void arity(const Expr& e, std::size_t lo, std::size_t hi) {
    if (e.args.size() < lo || e.args.size() > hi) {
      mismatch(e, e.text + "(...) takes " + std::to_string(lo) + (hi > lo ? " to " + std::to_string(hi) : "") +
                      " arguments, got " + std::to_string(e.args.size()));
    }
  }

  std::string name_arg(const Expr& e) {
    if (e.kind != Expr::Kind::Ident) mismatch(e, "expected a name");
    return e.text;
  }

  SepPoly exponent(const Expr& lam, bool allow_j) {
    if (lam.kind != Expr::Kind::Lambda) mismatch(lam, "expected an exponent function such as i -> i+1");
    if (lam.params.size() == 2 && !allow_j) mismatch(lam, "nu2 exponents take one variable");
    using Poly2 = std::map<std::pair<int, int>, Q>;
    std::function<Poly2(const Expr&)> go = [&](const Expr& x) -> Poly2 {
      auto deg = [](const Poly2& p) {
        int d = 0;
        for (const auto& [k, c] : p) d = std::max(d, k.first + k.second);
        return d;
      };
      auto clean = [](Poly2 p) {
        for (auto it = p.begin(); it != p.end();) it = sgn(it->second) == 0 ? p.erase(it) : std::next(it);
        return p;
      };
      auto as_const = [&](const Poly2& p, const Expr& at) {
        if (p.empty()) return Q(0);
        if (p.size() == 1 && p.begin()->first == std::make_pair(0, 0)) return p.begin()->second;
        mismatch(at, "expected a constant");
      };
      switch (x.kind) {
        case Expr::Kind::Number:
          return clean({{{0, 0}, parse_q(x.text)}});
        case Expr::Kind::Ident:
          if (x.text == lam.params[0]) return {{{1, 0}, Q(1)}};
          if (lam.params.size() == 2 && x.text == lam.params[1]) return {{{0, 1}, Q(1)}};
          mismatch(x, "unknown variable '" + x.text + "' in exponent");
        case Expr::Kind::Unary: {
          if (x.text != "-") break;
          Poly2 p = go(*x.args[0]);
          for (auto& [k, c] : p) c = -c;
          return p;
        }
        case Expr::Kind::Binary: {
          Poly2 a = go(*x.args[0]);
          if (x.text == "^") {
            Q k = as_const(go(*x.args[1]), *x.args[1]);
            if (!is_integer(k) || k < 0 || k > 12) mismatch(x, "exponent powers must be integers in [0, 12]");
            Poly2 r{{{0, 0}, Q(1)}};
            for (long t = 0; t < to_long(k); ++t) {
              Poly2 n;
              for (const auto& [ka, ca] : r) {
                for (const auto& [kb, cb] : a) n[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
              }
              r = clean(n);
              if (deg(r) > 12) throw Error("ResourceLimit", where(x) + "exponent degree above 12");
            }
            return r;
          }
          Poly2 b = go(*x.args[1]);
          if (x.text == "+" || x.text == "-") {
            for (const auto& [k, c] : b) a[k] += x.text == "+" ? c : Q(-c);
            return clean(a);
          }
          if (x.text == "*") {
            Poly2 n;
            for (const auto& [ka, ca] : a) {
              for (const auto& [kb, cb] : b) n[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
            }
            n = clean(n);
            if (deg(n) > 12) throw Error("ResourceLimit", where(x) + "exponent degree above 12");
            return n;
          }
          if (x.text == "/") {
            Q d = as_const(b, *x.args[1]);
            if (sgn(d) == 0) throw Error("DivisionByZero", where(x) + "division by zero in exponent");
            for (auto& [k, c] : a) c /= d;
            return a;
          }
          break;
        }
        default:
          break;
      }
      mismatch(x, "exponents are polynomials in the piece coordinates");
    };
    Poly2 p = go(*lam.args[0]);
    UPoly pi, qj;
    for (const auto& [k, c] : p) {
      if (k.first > 0 && k.second > 0) mismatch(lam, "exponent must be separable as p(i) + q(j)");
      UPoly& tgt = k.second > 0 ? qj : pi;
      std::size_t d = static_cast<std::size_t>(k.second > 0 ? k.second : k.first);
      if (tgt.size() <= d) tgt.resize(d + 1, Q(0));
      tgt[d] += c;
    }
    if (pi.empty()) pi.push_back(Q(0));
    if (!qj.empty()) qj[0] = 0;
    return SepPoly::in_i(pi) + (qj.empty() ? SepPoly() : SepPoly::in_j(qj));
  }

  Q unit_rational(const Expr& e) {
    Q q = constant(e);
    if (q <= 0 || q > 1) mismatch(e, "expected a rational in (0, 1]");
    if (q < pow2(-64)) throw Error("ResourceLimit", where(e) + "interval endpoint below 2^-64");
    return q;
  }

  Val call(const Expr& e) {
    const std::string& f = e.text;
    const auto& a = e.args;
    if (f == "graded") {
      arity(e, 2, 3);
      std::string fam = name_arg(*a[0]);
      PieceFamily pf;
      if (fam == "nu2") pf = PieceFamily::Nu2;
      else if (fam == "nu2sq") pf = PieceFamily::Nu2Squared;
      else mismatch(*a[0], "family must be nu2 or nu2sq");
      GenNum g = GenNum::graded(pf, exponent(*a[1], pf == PieceFamily::Nu2Squared), Coeff(Q(1)), s_.mode);
      if (a.size() == 3) g = g * num(*a[2]);
      return of_num(g);
    }
    if (f == "abs") return arity(e, 1, 1), of_num(cgn::abs(num(*a[0])).value);
    if (f == "abs2") return arity(e, 1, 1), of_num(abs2(num(*a[0])));
    if (f == "conj") return arity(e, 1, 1), of_num(num(*a[0]).conj());
    if (f == "sup" || f == "max") return arity(e, 2, 2), of_num(sup(num(*a[0]), num(*a[1])));
    if (f == "inf" || f == "min") return arity(e, 2, 2), of_num(inf(num(*a[0]), num(*a[1])));
    if (f == "inv") return arity(e, 1, 1), of_num(invert(num(*a[0])));
    if (f == "skel") return arity(e, 1, 1), of_num(skeleton(num(*a[0])));
    if (f == "root") return arity(e, 2, 2), of_num(nth_root_skeleton(num(*a[0]), integer(*a[1], 1, 64)));
    if (f == "restrict") return arity(e, 2, 2), of_num(num(*a[0]).restrict(set(*a[1])));
    if (f == "witness") return arity(e, 1, 1), of_num(gallery_closure_witness(num(*a[0])));
    if (f == "gallery") return arity(e, 1, 1), of_num(gallery_named(name_arg(*a[0]), s_.mode));
    if (f == "blocks" || f == "grid") {
      arity(e, 2, 2);
      long m = integer(*a[1], 1, kMaxModulus);
      long r = integer(*a[0], 0, kMaxModulus * 64);
      auto ur = static_cast<std::size_t>(r % m), um = static_cast<std::size_t>(m);
      return of_set(f == "blocks" ? IndexSet::blocks(ur, um) : IndexSet::grid(ur, um));
    }
    if (f == "interval") return arity(e, 2, 2), of_set(IndexSet::interval(unit_rational(*a[0]), unit_rational(*a[1])));
    if (f == "nu2") return arity(e, 1, 1), of_set(IndexSet::nu2_piece(static_cast<unsigned>(integer(*a[0], 0, kMaxPiece))));
    if (f == "nu2ge") {
      arity(e, 1, 1);
      return of_set(IndexSet::nu2_at_least(static_cast<unsigned>(integer(*a[0], 0, kMaxPiece))));
    }
    if (f == "nu2sq" || f == "rowtail") {
      arity(e, 2, 2);
      auto i = static_cast<unsigned>(integer(*a[0], 0, kMaxPiece));
      auto j = static_cast<unsigned>(integer(*a[1], 0, kMaxPiece));
      if (i + j > kMaxPiece) throw Error("ResourceLimit", where(e) + "piece index too deep");
      return of_set(f == "nu2sq" ? IndexSet::nu2sq_piece(i, j) : IndexSet::nu2sq_row_tail(i, j));
    }
    if (f == "support") return arity(e, 1, 1), of_set(num(*a[0]).support());
    if (f == "level") return arity(e, 2, 2), of_set(level_set(num(*a[0]), constant(*a[1])));
    if (f == "clean") return arity(e, 1, 1), of_set(clean_idempotent(num(*a[0])));
    if (f == "union") return arity(e, 2, 2), of_set(set(*a[0]).unite(set(*a[1])));
    if (f == "inter") return arity(e, 2, 2), of_set(set(*a[0]).intersect(set(*a[1])));
    if (f == "co" || f == "not") return arity(e, 1, 1), of_set(set(*a[0]).complement());
    using IK = IdealExpr::Kind;
    if (f == "rad") return arity(e, 1, 1), of_ideal(IdealExpr::unary(IK::Radical, ideal(*a[0])));
    if (f == "cl") return arity(e, 1, 1), of_ideal(IdealExpr::unary(IK::Closure, ideal(*a[0])));
    if (f == "zcl") return arity(e, 1, 1), of_ideal(IdealExpr::unary(IK::ZClosure, ideal(*a[0])));
    if (f == "m") return arity(e, 1, 1), of_ideal(IdealExpr::unary(IK::PurePart, ideal(*a[0])));
    if (f == "ann") return arity(e, 1, 1), of_ideal(IdealExpr::annihilator(num(*a[0])));
    throw Error("UnknownIdentifier", where(e) + "no function named '" + f + "'");
  }
};

json ext(const ExtVal& v) { return v.to_string(); }

json bound(double d) {
  if (std::isinf(d)) return nullptr;
  return std::round(d * 1e9) / 1e9;
}

std::string option_value(const Statement& st, const std::string& name, bool* present = nullptr) {
  for (const Option& o : st.options) {
    if (o.name == name) {
      if (present) *present = true;
      return o.value.value_or("");
    }
  }
  if (present) *present = false;
  return "";
}

json certificate_for(const GenNum& x, const IdealCore& core) {
  json c;
  switch (core.kind) {
    case CoreKind::Principal: {
      Membership m = in_principal(x, core.g);
      c["witness"] = m.witness ? json(m.witness->to_string()) : json(nullptr);
      if (!m.member) c["reason"] = m.reason;
      break;
    }
    case CoreKind::Closure: {
      Q level = closure_level(x, core.g);
      c["level"] = to_string(level);
      c["level_set"] = level_set(x, level).to_string();
      break;
    }
    case CoreKind::Radical:
      c["rule"] = "exponent degrees per piece coordinate";
      break;
    case CoreKind::Pure:
      c["support"] = x.support().to_string();
      break;
  }
  return c;
}

json witness_json(const AnnWitness& w) {
  json j;
  j["diagonal"] = w.diagonal;
  j["set"] = w.to_string();
  return j;
}

json run_query(Evaluator& ev, Session& s, const Statement& st) {
  const auto& a = st.args;
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (a.size() < lo || a.size() > hi) {
      throw Error("TypeMismatch", ":" + st.name + " takes " + std::to_string(lo) +
                                      (hi > lo ? (hi == 99 ? " or more" : " to " + std::to_string(hi)) : "") +
                                      " arguments, got " + std::to_string(a.size()));
    }
  };
  auto sets_from = [&](std::size_t k) {
    std::vector<IndexSet> out;
    for (; k < a.size(); ++k) out.push_back(ev.set(*a[k]));
    return out;
  };
  for (const Option& o : st.options) {
    bool known = st.name == "oracle" && (o.name == "depth" || o.name == "json" || o.name == "csv");
    if (!known) throw Error("UnknownOption", "option --" + o.name + " is not accepted by :" + st.name);
  }
  json r;
  const std::string& v = st.name;
  if (v == "val") {
    need(1, 1);
    r["value"] = ext(valuation(ev.num(*a[0])));
  } else if (v == "show") {
    need(1, 1);
    GenNum x = ev.num(*a[0]);
    r["value"] = x.to_string();
    r["laws"] = x.laws().size();
  } else if (v == "eq") {
    need(2, 2);
    r["result"] = equal_germ(ev.num(*a[0]), ev.num(*a[1]));
  } else if (v == "leq") {
    need(2, 2);
    r["result"] = leq(ev.num(*a[0]), ev.num(*a[1]));
  } else if (v == "classify") {
    need(1, 1);
    r["class"] = to_string(classify_element(ev.num(*a[0])));
  } else if (v == "invert") {
    need(1, 1);
    r["value"] = invert(ev.num(*a[0])).to_string();
  } else if (v == "invert-on") {
    need(2, 2);
    r["value"] = invert_on(ev.num(*a[0]), ev.set(*a[1])).to_string();
  } else if (v == "set") {
    need(1, 1);
    IndexSet t = ev.set(*a[0]);
    r["set"] = t.to_string();
    r["class"] = to_string(t.classify());
  } else if (v == "germ") {
    need(2, 2);
    r["relation"] = to_string(germ_relation(ev.set(*a[0]), ev.set(*a[1])));
  } else if (v == "clean") {
    need(1, 1);
    GenNum x = ev.num(*a[0]);
    IndexSet t = clean_idempotent(x);
    r["set"] = t.to_string();
    r["invertible"] = classify_element(x + GenNum::idempotent(t, x.mode())) == ElementClass::Invertible;
  } else if (v == "split") {
    need(2, 2);
    r["set"] = split_zero_divisors(ev.num(*a[0]), ev.num(*a[1])).to_string();
  } else if (v == "gcd") {
    need(2, 2);
    BezoutResult b = bezout_gen(ev.num(*a[0]), ev.num(*a[1]));
    r["g"] = b.g.to_string();
    r["r"] = b.r.to_string();
    r["s"] = b.s.to_string();
  } else if (v == "meet") {
    need(2, 2);
    r["value"] = meet_gen(ev.num(*a[0]), ev.num(*a[1])).to_string();
  } else if (v == "root") {
    need(2, 2);
    r["value"] = nth_root_skeleton(ev.num(*a[0]), ev.integer(*a[1], 1, 64)).to_string();
  } else if (v == "skeleton") {
    need(1, 1);
    r["value"] = skeleton(ev.num(*a[0])).to_string();
  } else if (v == "levels") {
    need(1, 2);
    GenNum x = ev.num(*a[0]);
    if (a.size() == 2) {
      r["set"] = level_set(x, ev.constant(*a[1])).to_string();
    } else {
      LevelScheme ls = level_scheme(x);
      r["finite"] = ls.finite;
      json bps = json::array();
      for (const Q& q : ls.breakpoints) bps.push_back(to_string(q));
      r["breakpoints"] = bps;
    }
  } else if (v == "stationary") {
    need(1, 1);
    auto st_set = stationary(ev.num(*a[0]));
    r["stationary"] = st_set.has_value();
    r["set"] = st_set ? json(st_set->to_string()) : json(nullptr);
  } else if (v == "in" || v == "closure-in") {
    need(2, 2);
    GenNum x = ev.num(*a[0]);
    IdealCore core = normalize(*ev.ideal(*a[1]));
    r["ideal"] = core.to_string();
    if (v == "in") {
      r["result"] = member(x, core);
      r["certificate"] = certificate_for(x, core);
    } else {
      r["result"] = in_closure(x, core);
      r["certificate"] = certificate_for(x, IdealCore{CoreKind::Closure, core.g});
    }
  } else if (v == "rad-in") {
    need(2, 2);
    r["result"] = in_radical(ev.num(*a[0]), ev.num(*a[1]));
  } else if (v == "zclosure-in") {
    need(2, 2);
    r["result"] = in_z_closure(ev.num(*a[0]), ev.num(*a[1]));
  } else if (v == "ann") {
    need(2, 2);
    r["result"] = in_annihilator(ev.num(*a[0]), ev.num(*a[1]));
  } else if (v == "ann-witness") {
    need(2, 2);
    GenNum x = ev.num(*a[0]), g = ev.num(*a[1]);
    auto w = find_ann_witness(x, g);
    r["found"] = w.has_value();
    if (w) {
      r["witness"] = witness_json(*w);
      r["verified"] = annihilates(g, *w) && !annihilates(x, *w);
    }
  } else if (v == "ortho") {
    need(1, 99);
    IndexSet sset = ev.set(*a[0]);
    std::vector<GenNum> gens;
    for (std::size_t k = 1; k < a.size(); ++k) gens.push_back(ev.num(*a[k]));
    OrthoWitness o = orthogonal_witness(sset, gens);
    r["t"] = witness_json(o.t);
    r["twin"] = witness_json(o.twin);
  } else if (v == "decompose") {
    need(1, 1);
    Decomposition d = orthogonal_decomposition(ev.num(*a[0]));
    json sets = json::array();
    for (std::size_t k = 0; k < d.sets.size(); ++k) {
      sets.push_back({{"level", d.levels[k]}, {"set", d.sets[k].to_string()}});
    }
    r["sets"] = sets;
    r["complete"] = d.complete;
  } else if (v == "pure") {
    need(1, 1);
    GenNum x = ev.num(*a[0]);
    PureScheme p = pure_part(x);
    r["scheme"] = p.to_string();
    r["single"] = p.single();
    r["generator"] = merged_generator(p, x.mode()).to_string();
  } else if (v == "pseudoprime") {
    need(1, 4);
    PseudoprimeReport rep = pseudoprime_check(normalize(*ev.ideal(*a[0])), sets_from(1));
    json es = json::array();
    for (const auto& en : rep.entries) es.push_back({{"set", en.set.to_string()}, {"in", en.in}, {"co_in", en.co_in}});
    r["entries"] = es;
    r["refuted"] = rep.refuted;
  } else if (v == "qequiv") {
    need(3, 10);
    GenNum x = ev.num(*a[0]), y = ev.num(*a[1]);
    r["result"] = quotient_equiv(x, y, FilterBase(sets_from(2)));
  } else if (v == "qval") {
    need(2, 9);
    GenNum x = ev.num(*a[0]);
    r["value"] = ext(quotient_val(x, FilterBase(sets_from(1))));
  } else if (v == "gallery") {
    need(1, 1);
    if (a[0]->kind != Expr::Kind::Ident) throw Error("TypeMismatch", ":gallery takes a name");
    r["value"] = gallery_named(a[0]->text, s.mode).to_string();
  } else if (v == "oracle") {
    need(1, 1);
    GenNum x = ev.num(*a[0]);
    SampleProfile p;
    p.depth = s.depth;
    bool has_depth = false;
    std::string d = option_value(st, "depth", &has_depth);
    if (has_depth) {
      try {
        p.depth = std::stol(d);
      } catch (const std::exception&) {
        throw Error("TypeMismatch", "--depth needs an integer");
      }
    }
    if (p.depth < 8 || p.depth > 1024) throw Error("ResourceLimit", "oracle depth must lie in [8, 1024]");
    OracleInterval oi = oracle_val(x, p);
    r["depth"] = p.depth;
    r["bracket"] = {bound(oi.lo), bound(oi.hi)};
    r["samples"] = oi.samples;
    ExtVal sym = valuation(x);
    r["valuation"] = ext(sym);
    r["concordant"] = sym.infinite ? (oi.samples == 0) : oi.contains(to_double(sym.v));
    bool csv = false;
    option_value(st, "csv", &csv);
    if (csv) r["csv"] = sample_csv(sample_net(x, p));
  } else if (v == "annsplit") {
    need(1, 99);
    GenNum x = ev.num(*a[0]);
    std::vector<GenNum> bs;
    for (std::size_t k = 1; k < a.size(); ++k) bs.push_back(ev.num(*a[k]));
    r["set"] = annihilator_split(x, bs).to_string();
  } else {
    throw Error("TypeMismatch", "unknown verb :" + v);
  }
  return r;
}

json error_json(const std::string& kind, const std::string& msg) { return {{"kind", kind}, {"message", msg}}; }

}  // namespace

json eval_statement(Session& s, const Statement& st) {
  json entry;
  entry["line"] = st.line;
  entry["statement"] = print(st);
  try {
    Evaluator ev(s);
    switch (st.kind) {
      case Statement::Kind::Let: {
        auto b = std::make_shared<Val>(ev.eval(*st.expr));
        entry["let"] = st.name;
        entry["type"] = kind_name(b->kind);
        if (b->kind == VK::Num) entry["value"] = b->num.to_string();
        if (b->kind == VK::Set) entry["value"] = b->set.to_string();
        s.env[st.name] = b;
        break;
      }
      case Statement::Kind::Mode:
        s.mode = st.name == "real" ? Mode::R : Mode::C;
        entry["mode"] = st.name;
        break;
      case Statement::Kind::Query:
        entry["verb"] = st.name;
        entry.update(run_query(ev, s, st));
        break;
    }
    entry["ok"] = true;
  } catch (const Error& e) {
    entry["ok"] = false;
    entry["error"] = error_json(e.kind, e.what());
  } catch (const std::exception& e) {
    entry["ok"] = false;
    entry["error"] = error_json("InternalError", e.what());
  }
  return entry;
}

json eval_script(Session& s, const std::string& text) {
  json results = json::array();
  int line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) nl = text.size();
    ++line;
    std::string src = text.substr(start, nl - start);
    start = nl + 1;
    std::vector<Statement> sts;
    try {
      sts = parse_line(src, line);
    } catch (const Error& e) {
      results.push_back({{"line", line}, {"source", src}, {"ok", false}, {"error", error_json(e.kind, e.what())}});
      continue;
    } catch (const std::exception& e) {
      results.push_back({{"line", line}, {"source", src}, {"ok", false}, {"error", error_json("InternalError", e.what())}});
      continue;
    }
    for (const Statement& st : sts) results.push_back(eval_statement(s, st));
  }
  return {{"schema", kSchema}, {"results", results}};
}

std::string render_text(const json& entry) {
  std::string head = entry.contains("statement") ? entry["statement"].get<std::string>()
                                                 : entry.value("source", std::string());
  if (!entry.value("ok", false)) {
    const json& err = entry["error"];
    return head + "  =>  " + err["kind"].get<std::string>() + ": " + err["message"].get<std::string>();
  }
  std::string body;
  for (const auto& [key, val] : entry.items()) {
    if (key == "line" || key == "statement" || key == "ok" || key == "verb" || key == "csv") continue;
    if (!body.empty()) body += "  ";
    body += key + "=" + (val.is_string() ? val.get<std::string>() : val.dump());
  }
  std::string out = head + "  =>  " + body;
  if (entry.contains("csv")) out += "\n" + entry["csv"].get<std::string>();
  return out;
}

}  // namespace cgn::script
