#include "cgn/ideal.hpp"

#include <algorithm>
#include <numeric>

namespace cgn {

namespace {

Family join(Family a, Family b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

Family cell_family(const Cell& c) {
  Family f = Family::Whole;
  if (c.x) f = join(f, c.x->family());
  if (c.a) f = join(f, c.a->family());
  return f;
}

// Whether the specialized exponent varies along the infinite coordinate of r.
bool varies_i(const Region& r, const SepPoly& e) {
  return (r.kind == RegionKind::Tail1 || r.kind == RegionKind::Tail2) && specialize(e, r).depends_i();
}
bool varies_j(const Region& r, const SepPoly& e) {
  return (r.kind == RegionKind::Row || r.kind == RegionKind::Tail2) && specialize(e, r).depends_j();
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

// Inverse of 2 modulo an odd b.
u64 inv2(u64 b) { return b == 1 ? 0 : (b + 1) / 2; }

u64 order_of_two(u64 b) {
  if (b == 1) return 1;
  u64 v = 2 % b, k = 1;
  while (v != 1) {
    v = mulmod(v, 2, b);
    ++k;
  }
  return k;
}

u64 odd_part(u64 m) {
  while (m % 2 == 0) m /= 2;
  return m;
}

unsigned bit_length(u64 v) {
  unsigned n = 0;
  while (v) {
    ++n;
    v >>= 1;
  }
  return n;
}

DiagonalSet make_diag(const IndexSet& set, int dir, long fixed) {
  DiagonalSet d;
  d.cell = set;
  d.dir = dir;
  d.fixed = fixed;
  d.k0 = static_cast<long>(set.two_adic()) + 2;
  const auto& pat = set.pattern();
  for (std::size_t r = 0; r < pat.size(); ++r) {
    if (pat[r] == Trace::Empty) continue;
    d.residue = r;
    d.grid_point = (static_cast<int>(pat[r]) & 1) != 0;
    return d;
  }
  throw Error("InternalError", "diagonal on an empty set");
}

}  // namespace

// ---------------------------------------------------------------- cells

std::vector<Cell> refine(const GenNum& x, const GenNum& a) {
  std::vector<Cell> out;
  for (const Law& lx : x.laws()) {
    IndexSet rest = lx.dom;
    for (const Law& la : a.laws()) {
      IndexSet s = lx.dom.intersect(la.dom);
      if (!s.germ_null()) out.push_back({s, lx, la});
      rest = rest.minus(la.dom);
    }
    if (!rest.germ_null()) out.push_back({rest, lx, std::nullopt});
  }
  IndexSet sx = x.support();
  for (const Law& la : a.laws()) {
    IndexSet rest = la.dom.minus(sx);
    if (!rest.germ_null()) out.push_back({rest, std::nullopt, la});
  }
  return out;
}

// ---------------------------------------------------------------- levels

LevelScheme level_scheme(const GenNum& a) {
  LevelScheme ls{a, true, {}};
  for (const Law& l : a.laws()) {
    for (const Region& r : active_regions(l.dom, l.family())) {
      if (varies_i(r, l.exponent()) || varies_j(r, l.exponent())) {
        ls.finite = false;
        ls.breakpoints.push_back(*range_on(r, l.exponent()).lo);
      } else {
        ls.breakpoints.push_back(specialize(l.exponent(), r).constant());
      }
    }
  }
  std::sort(ls.breakpoints.begin(), ls.breakpoints.end());
  ls.breakpoints.erase(std::unique(ls.breakpoints.begin(), ls.breakpoints.end()), ls.breakpoints.end());
  return ls;
}

std::optional<IndexSet> stationary(const GenNum& a) {
  if (!level_scheme(a).finite) return std::nullopt;
  return a.support();
}

// ---------------------------------------------------------------- membership

Membership in_principal(const GenNum& x, const GenNum& a) {
  for (const Cell& c : refine(x, a)) {
    if (!c.x) continue;
    if (!c.a) return {false, std::nullopt, "x is nonzero on " + c.set.to_string() + " where a vanishes"};
    SepPoly diff = c.x->exponent() - c.a->exponent();
    if (!range_over(c.set, cell_family(c), diff).lo) {
      return {false, std::nullopt, "exponent gap " + diff.to_string() + " is unbounded below on " + c.set.to_string()};
    }
  }
  return {true, divide_lawwise(x, a), ""};
}

bool inv_subset(const GenNum& a, const GenNum& b) {
  // Cells carry b in the x slot.
  for (const Cell& c : refine(b, a)) {
    if (!c.x) continue;
    if (!c.a) return false;
    for (const Region& r : active_regions(c.set, cell_family(c))) {
      const SepPoly& eb = c.x->exponent();
      const SepPoly& ea = c.a->exponent();
      if (!varies_i(r, eb) && varies_i(r, ea)) return false;
      if (!varies_j(r, eb) && varies_j(r, ea)) return false;
    }
  }
  return true;
}

bool in_radical(const GenNum& x, const GenNum& a) {
  for (const Cell& c : refine(x, a)) {
    if (!c.x) continue;
    if (!c.a) return false;
    for (const Region& r : active_regions(c.set, cell_family(c))) {
      SepPoly ex = specialize(c.x->exponent(), r), ea = specialize(c.a->exponent(), r);
      bool di = r.kind == RegionKind::Tail1 || r.kind == RegionKind::Tail2;
      bool dj = r.kind == RegionKind::Row || r.kind == RegionKind::Tail2;
      if (di && ex.deg_i() < ea.deg_i()) return false;
      if (dj && ex.deg_j() < ea.deg_j()) return false;
    }
  }
  return true;
}

Q closure_level(const GenNum& x, const GenNum& a) {
  Q m(0);
  bool first = true;
  for (const Cell& c : refine(x, a)) {
    if (!c.x) continue;
    for (const Region& r : active_regions(c.set, cell_family(c))) {
      Q level = ceil_q(*range_on(r, c.x->exponent()).lo) + 1;
      if (first || level > m) m = level;
      first = false;
    }
  }
  return m;
}

bool in_closure(const GenNum& x, const GenNum& a) {
  if (x.is_zero()) return true;
  return inv_test(a, level_set(x, closure_level(x, a)));
}

bool in_z_closure(const GenNum& x, const GenNum& a) { return inv_subset(a, x); }

// ---------------------------------------------------------------- pure parts

IndexSet PureScheme::generator_set(long n) const {
  switch (kind) {
    case Kind::FiniteSets: {
      IndexSet u;
      for (std::size_t k = 0; k < sets.size() && static_cast<long>(k) <= n; ++k) u = u.unite(sets[k]);
      return u;
    }
    case Kind::LevelsOf:
      return level_set(*source, Q(n));
    case Kind::FamilyPieces: {
      IndexSet u;
      for (long i = 0; i <= n; ++i) {
        if (family == PieceFamily::Nu2Squared) {
          for (long j = 0; i + j <= n; ++j) {
            u = u.unite(family_piece(family, static_cast<unsigned>(i), static_cast<int>(j)));
          }
        } else {
          u = u.unite(family_piece(family, static_cast<unsigned>(i)));
        }
      }
      return u.intersect(mask);
    }
  }
  return {};
}

std::string PureScheme::to_string() const {
  switch (kind) {
    case Kind::FiniteSets: {
      std::string s = "FiniteSets[";
      for (std::size_t k = 0; k < sets.size(); ++k) s += (k ? ", " : "") + sets[k].to_string();
      return s + "]";
    }
    case Kind::LevelsOf:
      return "LevelsOf(" + source->to_string() + ")";
    case Kind::FamilyPieces:
      return "FamilyPieces(" + cgn::to_string(family) + ", " + mask.to_string() + ")";
  }
  return "?";
}

PureScheme pure_part(const GenNum& a) {
  PureScheme s;
  LevelScheme ls = level_scheme(a);
  if (!ls.finite) {
    s.kind = PureScheme::Kind::LevelsOf;
    s.source = a;
    return s;
  }
  s.kind = PureScheme::Kind::FiniteSets;
  IndexSet prev;
  for (const Q& bp : ls.breakpoints) {
    IndexSet l = ls.at(bp + 1);
    if (germ_subset(l, prev)) continue;
    s.sets.push_back(l);
    prev = prev.unite(l);
  }
  return s;
}

PureScheme family_scheme(PieceFamily f, const IndexSet& mask) {
  PureScheme s;
  s.kind = PureScheme::Kind::FamilyPieces;
  s.family = f;
  s.mask = mask;
  return s;
}

GenNum merged_generator(const PureScheme& s, Mode m) {
  switch (s.kind) {
    case PureScheme::Kind::FiniteSets: {
      IndexSet u;
      for (const IndexSet& t : s.sets) u = u.unite(t);
      return GenNum::idempotent(u, m);
    }
    case PureScheme::Kind::LevelsOf:
      return skeleton(*s.source).with_mode(m);
    case PureScheme::Kind::FamilyPieces: {
      SepPoly e = SepPoly::in_i({Q(1), Q(1)});
      switch (s.family) {
        case PieceFamily::BlockIndexed:
          return GenNum::zero(m);
        case PieceFamily::Nu2:
          return GenNum::graded(PieceFamily::Nu2, e, Coeff(Q(1)), m).restrict(s.mask);
        case PieceFamily::Nu2Squared:
          return GenNum::graded(PieceFamily::Nu2Squared, e + SepPoly::in_j({Q(1), Q(1)}), Coeff(Q(1)), m)
              .restrict(s.mask);
      }
    }
  }
  return GenNum::zero(m);
}

Decomposition orthogonal_decomposition(const GenNum& a, std::size_t limit) {
  Decomposition d;
  if (a.is_zero()) {
    d.complete = true;
    return d;
  }
  LevelScheme ls = level_scheme(a);
  std::vector<long> candidates;
  long start = to_long(floor_q(valuation(a).v));
  if (ls.finite) {
    for (const Q& bp : ls.breakpoints) {
      long f = to_long(floor_q(bp));
      candidates.push_back(f);
      candidates.push_back(f + 1);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  } else {
    for (long n = start; n < start + 4096; ++n) candidates.push_back(n);
  }
  IndexSet prev;
  for (long n : candidates) {
    IndexSet l;
    try {
      l = level_set(a, Q(n));
    } catch (const Error& e) {
      if (e.kind != "ResourceLimit" || ls.finite) throw;
      return d;
    }
    IndexSet s = l.minus(prev);
    prev = l;
    if (s.germ_null()) continue;
    if (d.sets.size() == limit) return d;
    d.sets.push_back(s);
    d.levels.push_back(n);
  }
  d.complete = ls.finite;
  return d;
}

// ---------------------------------------------------------------- diagonals

u64 DiagonalSet::block_mod(long k, u64 mod) const {
  u64 b = odd_part(cell.modulus());
  u64 r = residue % b;
  if (dir == 0) {
    unsigned t = static_cast<unsigned>(fixed) + 2;
    u64 w = (u64(1) << (fixed + 1)) - 1;
    u64 c = mulmod(r, powmod(inv2(b), static_cast<u64>(k), b), b);
    u64 u = b == 1 ? 0 : mulmod((c + b - w % b) % b, powmod(inv2(b), t, b), b);
    u64 o = w + (u + static_cast<u64>(lane) * b) * (u64(1) << t);
    return mulmod(powmod(2, static_cast<u64>(k), mod), o % mod, mod);
  }
  u64 c = mulmod(r, powmod(inv2(b), static_cast<u64>(fixed), b), b);
  u64 lead = (powmod(2, static_cast<u64>(k) + 1, b) + b - 1) % b;
  u64 u = b == 1 ? 0 : mulmod((c + b - lead) % b, powmod(inv2(b), static_cast<u64>(k) + 2, b), b);
  u64 o = (powmod(2, static_cast<u64>(k) + 1, mod) + mod - 1 % mod) % mod;
  o = (o + mulmod(powmod(2, static_cast<u64>(k) + 2, mod), (u + static_cast<u64>(lane) * b) % mod, mod)) % mod;
  return mulmod(powmod(2, static_cast<u64>(fixed), mod), o, mod);
}

std::optional<u64> DiagonalSet::block(long k) const {
  u64 b = odd_part(cell.modulus());
  unsigned need = static_cast<unsigned>(k) + bit_length(b) + static_cast<unsigned>(fixed) + 6;
  if (need >= 62) return std::nullopt;
  return block_mod(k, u64(1) << 62);
}

bool DiagonalSet::point_in(const IndexSet& s, long k) const {
  auto n = block(k);
  if (n && *n < s.prefix_length()) return s.contains(point(k));
  Trace t = s.pattern()[block_mod(k, s.modulus())];
  return (static_cast<int>(t) & (grid_point ? 1 : 2)) != 0;
}

Q DiagonalSet::point(long k) const {
  auto n = block(k);
  if (!n) throw Error("ResourceLimit", "diagonal point is too deep to write exactly");
  long e = static_cast<long>(*n);
  return grid_point ? pow2(-e) : Q(3) * pow2(-(e + 2));
}

std::string DiagonalSet::to_string() const {
  std::string coord = dir == 0 ? "i = k, j = " + std::to_string(fixed) : "i = " + std::to_string(fixed) + ", j = k";
  return "Diagonal(" + coord + ", k >= " + std::to_string(k0) + ", residue " + std::to_string(residue) + " mod " +
         std::to_string(cell.modulus()) + ", lane " + std::to_string(lane) + ", " +
         (grid_point ? "grid points" : "midpoints") + ")";
}

std::string AnnWitness::to_string() const { return diagonal ? diag.to_string() : set.to_string(); }

bool annihilates(const GenNum& y, const AnnWitness& t) {
  if (!t.diagonal) return z_test(y, t.set);
  const DiagonalSet& d = t.diag;
  u64 ob = order_of_two(odd_part(d.cell.modulus()));
  for (const Law& l : y.laws()) {
    u64 period = std::lcm(ob, order_of_two(odd_part(l.dom.modulus())));
    if (period > (u64(1) << 22)) throw Error("ResourceLimit", "diagonal period too large");
    long start = std::max<long>({d.k0, static_cast<long>(l.dom.two_adic()) + 2, 64});
    bool infinite = false;
    for (u64 s = 0; s < period && !infinite; ++s) {
      long k = start + static_cast<long>(s);
      Trace tr = l.dom.pattern()[d.block_mod(k, l.dom.modulus())];
      infinite = (static_cast<int>(tr) & (d.grid_point ? 1 : 2)) != 0;
    }
    if (!infinite) continue;
    bool grows = d.dir == 0 ? l.exponent().fix_j(d.fixed).depends_i() : l.exponent().fix_i(d.fixed).depends_j();
    if (!grows) return false;
  }
  return true;
}

std::optional<AnnWitness> find_ann_witness(const GenNum& x, const GenNum& a) {
  std::vector<Cell> cells = refine(x, a);
  for (const Cell& c : cells) {
    if (c.x && !c.a) return AnnWitness{false, c.set, {}};
  }
  for (const Cell& c : cells) {
    if (!c.x || !c.a) continue;
    const SepPoly& ex = c.x->exponent();
    const SepPoly& ea = c.a->exponent();
    for (const Region& r : active_regions(c.set, cell_family(c))) {
      if (!varies_i(r, ex) && varies_i(r, ea)) {
        return AnnWitness{true, {}, make_diag(r.set, 0, 0)};
      }
      if (!varies_j(r, ex) && varies_j(r, ea)) {
        long fixed = r.kind == RegionKind::Row ? r.i : r.from;
        return AnnWitness{true, {}, make_diag(r.set, 1, fixed)};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Half of the residues of s modulo twice its modulus.
IndexSet half(const IndexSet& s, int lane) {
  std::size_t m = s.modulus();
  std::vector<Trace> pat(2 * m, Trace::Empty);
  for (std::size_t k = 0; k < m; ++k) pat[lane == 0 ? k : k + m] = Trace::Full;
  return s.intersect(IndexSet::from_pattern(std::move(pat)));
}

}  // namespace

OrthoWitness orthogonal_witness(const IndexSet& s, const std::vector<GenNum>& gens) {
  Mode m = gens.empty() ? Mode::R : gens.front().mode();
  GenNum g = GenNum::zero(m);
  for (const GenNum& a : gens) g = bezout_gen(g, a.with_mode(m)).g;
  if (inv_test(g, s)) throw Error("SIsCovered", "e_S lies in the closure of the ideal");
  auto w = find_ann_witness(GenNum::idempotent(s, m), g);
  if (!w) throw Error("InternalError", "no annihilating set found");
  OrthoWitness out{*w, *w};
  if (w->diagonal) {
    out.twin.diag.lane = 1;
  } else {
    out.t.set = half(w->set, 0);
    out.twin.set = half(w->set, 1);
  }
  return out;
}

IndexSet annihilator_split(const GenNum& a, const std::vector<GenNum>& bs) {
  for (const GenNum& b : bs) {
    if (!(a * b).is_zero()) throw Error("NotOrthogonal", "a generator does not annihilate a");
  }
  return a.support();
}

}  // namespace cgn
