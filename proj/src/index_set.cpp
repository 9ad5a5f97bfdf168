#include "cgn/index_set.hpp"

#include <algorithm>
#include <numeric>

namespace cgn {

// ---------------------------------------------------------------- RealSet

RealSet RealSet::open(const Q& lo, const Q& hi) {
  RealSet s;
  if (lo >= hi) return s;
  s.pts_ = {lo, hi};
  s.at_ = {false, false};
  s.gap_ = {false, true, false};
  return s;
}

RealSet RealSet::left_open(const Q& lo, const Q& hi) {
  RealSet s;
  if (lo >= hi) return s;
  s.pts_ = {lo, hi};
  s.at_ = {false, true};
  s.gap_ = {false, true, false};
  return s;
}

RealSet RealSet::point(const Q& p) {
  RealSet s;
  s.pts_ = {p};
  s.at_ = {true};
  s.gap_ = {false, false};
  return s;
}

bool RealSet::contains(const Q& x) const {
  auto it = std::lower_bound(pts_.begin(), pts_.end(), x);
  std::size_t k = static_cast<std::size_t>(it - pts_.begin());
  if (it != pts_.end() && *it == x) return at_[k];
  return gap_.empty() ? false : gap_[k];
}

bool RealSet::gap_contains_after(const Q& u) const {
  if (gap_.empty()) return false;
  auto it = std::upper_bound(pts_.begin(), pts_.end(), u);
  return gap_[static_cast<std::size_t>(it - pts_.begin())];
}

bool RealSet::empty() const {
  return std::none_of(at_.begin(), at_.end(), [](bool b) { return b; }) &&
         std::none_of(gap_.begin(), gap_.end(), [](bool b) { return b; });
}

template <class Op>
RealSet RealSet::combine(const RealSet& o, Op op) const {
  RealSet r;
  std::vector<Q> pts;
  std::merge(pts_.begin(), pts_.end(), o.pts_.begin(), o.pts_.end(), std::back_inserter(pts));
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  bool g0a = gap_.empty() ? false : gap_[0];
  bool g0b = o.gap_.empty() ? false : o.gap_[0];
  r.gap_ = {op(g0a, g0b)};
  for (const Q& p : pts) {
    r.pts_.push_back(p);
    r.at_.push_back(op(contains(p), o.contains(p)));
    r.gap_.push_back(op(gap_contains_after(p), o.gap_contains_after(p)));
  }
  r.normalize();
  return r;
}

void RealSet::normalize() {
  if (gap_.empty()) gap_ = {false};
  std::vector<Q> pts;
  std::vector<bool> at, gap{gap_[0]};
  for (std::size_t k = 0; k < pts_.size(); ++k) {
    if (at_[k] == gap.back() && gap_[k + 1] == gap.back()) continue;
    pts.push_back(pts_[k]);
    at.push_back(at_[k]);
    gap.push_back(gap_[k + 1]);
  }
  pts_ = std::move(pts);
  at_ = std::move(at);
  gap_ = std::move(gap);
}

RealSet RealSet::unite(const RealSet& o) const {
  return combine(o, [](bool a, bool b) { return a || b; });
}
RealSet RealSet::intersect(const RealSet& o) const {
  return combine(o, [](bool a, bool b) { return a && b; });
}
RealSet RealSet::minus(const RealSet& o) const {
  return combine(o, [](bool a, bool b) { return a && !b; });
}

std::string RealSet::to_string() const {
  if (empty()) return "{}";
  std::string out;
  auto add = [&](const std::string& piece) {
    if (!out.empty()) out += " U ";
    out += piece;
  };
  std::size_t n = pts_.size();
  std::size_t k = 0;
  // Walk runs of membership. A run starts either at a member point or in a
  // member gap.
  while (k <= n) {
    bool gap_in = gap_.size() > k && gap_[k];
    if (!gap_in) {
      if (k < n && at_[k] && !gap_[k + 1]) add("{" + cgn::to_string(pts_[k]) + "}");
      if (k < n && at_[k] && gap_[k + 1]) {
        std::string lo = "[" + cgn::to_string(pts_[k]);
        std::size_t e = k + 1;
        while (e < n && at_[e] && gap_[e + 1]) ++e;
        std::string hi = e < n ? cgn::to_string(pts_[e]) + (at_[e] ? "]" : ")") : "inf)";
        add(lo + "," + hi);
        k = e + 1;
        continue;
      }
      ++k;
      continue;
    }
    std::string lo = k == 0 ? "(-inf" : "(" + cgn::to_string(pts_[k - 1]);
    std::size_t e = k;
    while (e < n && at_[e] && gap_[e + 1]) ++e;
    std::string hi = e < n ? cgn::to_string(pts_[e]) + (at_[e] ? "]" : ")") : "inf)";
    add(lo + "," + hi);
    k = e + 1;
  }
  return out;
}

// ---------------------------------------------------------------- blocks

char trace_char(Trace t) {
  switch (t) {
    case Trace::Empty: return '.';
    case Trace::Grid: return 'g';
    case Trace::FullMinusGrid: return 'r';
    case Trace::Full: return 'F';
  }
  return '?';
}

Q block_lo(std::uint64_t n) { return pow2(-static_cast<long>(n) - 1); }
Q block_hi(std::uint64_t n) { return pow2(-static_cast<long>(n)); }

std::uint64_t block_of(const Q& eps) {
  if (sgn(eps) <= 0 || eps >= 1) throw Error("DomainError", "point outside (0,1): " + to_string(eps));
  long guess = static_cast<long>(mpz_sizeinbase(eps.get_den_mpz_t(), 2)) -
               static_cast<long>(mpz_sizeinbase(eps.get_num_mpz_t(), 2));
  long n = std::max(0L, guess - 2);
  while (!(eps > block_lo(n))) ++n;
  while (n > 0 && eps > block_hi(n)) --n;
  return static_cast<std::uint64_t>(n);
}

RealSet block_realset(std::uint64_t n) {
  if (n == 0) return RealSet::open(Q(1, 2), Q(1));
  return RealSet::left_open(block_lo(n), block_hi(n));
}

RealSet trace_realset(std::uint64_t n, Trace t) {
  RealSet rest = RealSet::open(block_lo(n), block_hi(n));
  RealSet grid = n == 0 ? RealSet() : RealSet::point(block_hi(n));
  switch (t) {
    case Trace::Empty: return RealSet();
    case Trace::Grid: return grid;
    case Trace::FullMinusGrid: return rest;
    case Trace::Full: return rest.unite(grid);
  }
  return RealSet();
}

unsigned nu2(std::uint64_t n) {
  if (n == 0) throw Error("DomainError", "nu2 of zero");
  return static_cast<unsigned>(__builtin_ctzll(n));
}

unsigned nu2_second(std::uint64_t n) {
  std::uint64_t o = n >> nu2(n);
  return nu2(o + 1) - 1;
}

std::string to_string(SetClass c) {
  switch (c) {
    case SetClass::NullAtZero: return "NullAtZero";
    case SetClass::FullAtZero: return "FullAtZero";
    case SetClass::Splitting: return "Splitting";
  }
  return "?";
}

std::string to_string(GermRelation r) {
  switch (r) {
    case GermRelation::EqualGerm: return "EqualGerm";
    case GermRelation::SubsetGerm: return "SubsetGerm";
    case GermRelation::SupersetGerm: return "SupersetGerm";
    case GermRelation::DisjointGerm: return "DisjointGerm";
    case GermRelation::Incomparable: return "Incomparable";
  }
  return "?";
}

std::string to_string(PieceFamily f) {
  switch (f) {
    case PieceFamily::BlockIndexed: return "BlockIndexed";
    case PieceFamily::Nu2: return "Nu2";
    case PieceFamily::Nu2Squared: return "Nu2Squared";
  }
  return "?";
}

// ---------------------------------------------------------------- IndexSet

namespace {

std::size_t checked_lcm(std::size_t a, std::size_t b) {
  std::size_t l = std::lcm(a, b);
  if (l > kMaxModulus) throw Error("ResourceLimit", "index-set modulus exceeds 2^16");
  return l;
}

std::size_t pow2_modulus(unsigned e) {
  if (e > 16) throw Error("ResourceLimit", "index-set modulus exceeds 2^16");
  return std::size_t{1} << e;
}

BlockTrace plain(Trace t) { return BlockTrace{t, false, RealSet()}; }

RealSet as_realset(std::uint64_t n, const BlockTrace& b) {
  return b.is_explicit ? b.points : trace_realset(n, b.kind);
}

}  // namespace

IndexSet::IndexSet() : prefix_{plain(Trace::Empty)}, pattern_{Trace::Empty} {}

IndexSet IndexSet::full() { return from_pattern({Trace::Full}); }

IndexSet IndexSet::from_pattern(std::vector<Trace> pattern) {
  return from_parts({}, std::move(pattern));
}

IndexSet IndexSet::from_parts(std::vector<BlockTrace> prefix, std::vector<Trace> pattern) {
  if (pattern.empty()) throw Error("DomainError", "empty periodic pattern");
  if (pattern.size() > kMaxModulus) throw Error("ResourceLimit", "index-set modulus exceeds 2^16");
  IndexSet s;
  s.pattern_ = std::move(pattern);
  if (prefix.empty()) prefix.push_back(plain(s.pattern_[0]));
  s.prefix_ = std::move(prefix);
  s.canonicalize();
  return s;
}

void IndexSet::canonicalize() {
  // Periods dividing m are closed under gcd, so removing prime factors one
  // at a time reaches the least period.
  std::size_t m = pattern_.size();
  auto has_period = [&](std::size_t d) {
    for (std::size_t k = d; k < m; ++k) {
      if (pattern_[k] != pattern_[k - d]) return false;
    }
    return true;
  };
  std::size_t period = m, rest = m;
  for (std::size_t p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    while (period % p == 0 && has_period(period / p)) period /= p;
  }
  pattern_.resize(period);
  for (std::size_t n = 0; n < prefix_.size(); ++n) {
    BlockTrace& b = prefix_[n];
    if (b.is_explicit) {
      b.points = b.points.intersect(block_realset(n));
      for (Trace t : {Trace::Empty, Trace::Grid, Trace::FullMinusGrid, Trace::Full}) {
        if (b.points == trace_realset(n, t)) {
          b = plain(t);
          break;
        }
      }
    }
    if (!b.is_explicit) b.points = RealSet();
    if (n == 0 && !b.is_explicit && b.kind == Trace::Grid) b.kind = Trace::Empty;
    if (n == 0 && !b.is_explicit && b.kind == Trace::FullMinusGrid) b.kind = Trace::Full;
  }
  while (prefix_.size() > 1) {
    std::size_t n = prefix_.size() - 1;
    const BlockTrace& b = prefix_.back();
    if (b.is_explicit || b.kind != pattern_[n % pattern_.size()]) break;
    prefix_.pop_back();
  }
}

IndexSet IndexSet::interval(const Q& p, const Q& q) {
  Q hi = q > 1 ? Q(1) : q;
  if (p >= hi || p >= 1 || sgn(hi) <= 0) return IndexSet();
  RealSet range = RealSet::open(p, hi);
  std::uint64_t last;
  std::vector<Trace> pattern;
  if (sgn(p) <= 0) {
    last = hi == 1 ? 0 : block_of(hi);
    pattern = {Trace::Full};
  } else {
    last = block_of(p);
    pattern = {Trace::Empty};
  }
  std::vector<BlockTrace> prefix;
  for (std::uint64_t n = 0; n <= last; ++n) {
    prefix.push_back(BlockTrace{Trace::Empty, true, block_realset(n).intersect(range)});
  }
  return from_parts(std::move(prefix), std::move(pattern));
}

IndexSet IndexSet::blocks(std::size_t residue, std::size_t modulus) {
  if (modulus == 0) throw Error("DomainError", "zero modulus");
  std::vector<Trace> pat(modulus, Trace::Empty);
  pat[residue % modulus] = Trace::Full;
  return from_pattern(std::move(pat));
}

IndexSet IndexSet::grid(std::size_t residue, std::size_t modulus) {
  if (modulus == 0) throw Error("DomainError", "zero modulus");
  std::vector<Trace> pat(modulus, Trace::Empty);
  pat[residue % modulus] = Trace::Grid;
  return from_pattern(std::move(pat));
}

IndexSet IndexSet::nu2_piece(unsigned i) {
  std::size_t m = pow2_modulus(i + 1);
  return blocks(std::size_t{1} << i, m);
}

IndexSet IndexSet::nu2_at_least(unsigned k) {
  std::size_t m = pow2_modulus(k);
  std::vector<Trace> pat(m, Trace::Empty);
  pat[0] = Trace::Full;
  return from_parts({plain(Trace::Empty)}, std::move(pat));
}

IndexSet IndexSet::nu2sq_piece(unsigned i, unsigned j) {
  std::size_t m = pow2_modulus(i + j + 2);
  std::size_t r = (std::size_t{1} << i) * ((std::size_t{1} << (j + 1)) - 1);
  return blocks(r, m);
}

IndexSet IndexSet::nu2sq_row_tail(unsigned i, unsigned j) {
  std::size_t m = pow2_modulus(i + j + 1);
  std::size_t r = (std::size_t{1} << i) * ((std::size_t{1} << (j + 1)) - 1);
  return blocks(r % m, m);
}

IndexSet family_piece(PieceFamily f, unsigned i, int j) {
  switch (f) {
    case PieceFamily::BlockIndexed: {
      std::vector<BlockTrace> prefix(i + 1, plain(Trace::Empty));
      prefix[i] = plain(Trace::Full);
      return IndexSet::from_parts(std::move(prefix), {Trace::Empty});
    }
    case PieceFamily::Nu2: return IndexSet::nu2_piece(i);
    case PieceFamily::Nu2Squared:
      if (j < 0) throw Error("DomainError", "Nu2Squared piece needs two indices");
      return IndexSet::nu2sq_piece(i, static_cast<unsigned>(j));
  }
  return IndexSet();
}

template <class Op>
IndexSet IndexSet::combine(const IndexSet& o, Op op, bool (*bop)(bool, bool)) const {
  std::size_t m = checked_lcm(pattern_.size(), o.pattern_.size());
  std::vector<Trace> pat(m);
  for (std::size_t k = 0; k < m; ++k) {
    pat[k] = op(pattern_[k % pattern_.size()], o.pattern_[k % o.pattern_.size()]);
  }
  std::size_t len = std::max(prefix_.size(), o.prefix_.size());
  std::vector<BlockTrace> prefix;
  for (std::size_t n = 0; n < len; ++n) {
    BlockTrace a = block_trace(n), b = o.block_trace(n);
    if (!a.is_explicit && !b.is_explicit) {
      prefix.push_back(plain(op(a.kind, b.kind)));
      continue;
    }
    RealSet ra = as_realset(n, a), rb = as_realset(n, b);
    RealSet r = bop(true, true) ? (bop(true, false) ? ra.unite(rb) : ra.intersect(rb)) : ra.minus(rb);
    prefix.push_back(BlockTrace{Trace::Empty, true, r});
  }
  return from_parts(std::move(prefix), std::move(pat));
}

IndexSet IndexSet::unite(const IndexSet& o) const {
  return combine(o, trace_or, [](bool a, bool b) { return a || b; });
}

IndexSet IndexSet::intersect(const IndexSet& o) const {
  return combine(o, trace_and, [](bool a, bool b) { return a && b; });
}

IndexSet IndexSet::minus(const IndexSet& o) const {
  return combine(
      o, [](Trace a, Trace b) { return trace_and(a, trace_not(b)); },
      [](bool a, bool b) { return a && !b; });
}

IndexSet IndexSet::complement() const { return full().minus(*this); }

BlockTrace IndexSet::block_trace(std::uint64_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  Trace t = pattern_[n % pattern_.size()];
  if (n == 0) t = trace_and(t, Trace::FullMinusGrid);
  return plain(t);
}

bool IndexSet::contains(const Q& eps) const {
  if (sgn(eps) <= 0 || eps >= 1) return false;
  std::uint64_t n = block_of(eps);
  BlockTrace b = block_trace(n);
  if (b.is_explicit) return b.points.contains(eps);
  bool is_grid = n > 0 && eps == block_hi(n);
  int bit = is_grid ? 1 : 2;
  if (n == 0 && b.kind == Trace::Full) return true;
  return (static_cast<int>(b.kind) & bit) != 0;
}

SetClass IndexSet::classify() const {
  bool all_empty = std::all_of(pattern_.begin(), pattern_.end(), [](Trace t) { return t == Trace::Empty; });
  if (all_empty) return SetClass::NullAtZero;
  bool all_full = std::all_of(pattern_.begin(), pattern_.end(), [](Trace t) { return t == Trace::Full; });
  return all_full ? SetClass::FullAtZero : SetClass::Splitting;
}

bool IndexSet::meets_residue(std::size_t residue, std::size_t modulus) const {
  std::size_t m = pattern_.size();
  std::size_t l = std::lcm(m, modulus);
  for (std::size_t k = residue % modulus; k < l; k += modulus) {
    if (pattern_[k % m] != Trace::Empty) return true;
  }
  return false;
}

unsigned IndexSet::two_adic() const {
  return static_cast<unsigned>(__builtin_ctzll(static_cast<unsigned long long>(pattern_.size())));
}

IndexSet IndexSet::germ() const { return from_pattern(pattern_); }

std::string IndexSet::to_string() const {
  std::string out = "IndexSet(prefix=";
  for (std::size_t n = 0; n < prefix_.size(); ++n) {
    if (prefix_[n].is_explicit) {
      out += "<" + prefix_[n].points.to_string() + ">";
    } else {
      out += trace_char(prefix_[n].kind);
    }
  }
  out += ", period=" + std::to_string(pattern_.size()) + ":";
  for (Trace t : pattern_) out += trace_char(t);
  out += ")";
  return out;
}

std::string IndexSet::key() const { return to_string(); }

bool germ_subset(const IndexSet& a, const IndexSet& b) {
  std::size_t m = checked_lcm(a.modulus(), b.modulus());
  for (std::size_t k = 0; k < m; ++k) {
    if (trace_and(a.tail_trace(k), trace_not(b.tail_trace(k))) != Trace::Empty) return false;
  }
  return true;
}

bool germ_equal(const IndexSet& a, const IndexSet& b) { return a.pattern() == b.pattern(); }

GermRelation germ_relation(const IndexSet& a, const IndexSet& b) {
  if (germ_equal(a, b)) return GermRelation::EqualGerm;
  if (germ_subset(a, b)) return GermRelation::SubsetGerm;
  if (germ_subset(b, a)) return GermRelation::SupersetGerm;
  if (a.intersect(b).germ_null()) return GermRelation::DisjointGerm;
  return GermRelation::Incomparable;
}

}  // namespace cgn
