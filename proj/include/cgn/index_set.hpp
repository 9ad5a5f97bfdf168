#pragma once

// Decidable Boolean algebra of subsets of (0,1).
//
// (0,1) is cut into dyadic blocks B_n = (2^-(n+1), 2^-n], n >= 0 (block 0 is
// (1/2,1)), with grid point g_n = 2^-n in B_n. A set is stored as a finite
// explicit prefix of per-block traces followed by an eventually periodic
// pattern of coarse traces indexed by n mod modulus.

#include <cstdint>
#include <string>
#include <vector>

#include "cgn/rational.hpp"

namespace cgn {

/// Finite union of intervals of the rational line, stored as breakpoints with
/// membership flags for each breakpoint and each open gap between them.
class RealSet {
 public:
  static RealSet open(const Q& lo, const Q& hi);
  static RealSet left_open(const Q& lo, const Q& hi);  // (lo, hi]
  static RealSet point(const Q& p);

  bool contains(const Q& x) const;
  bool empty() const;

  RealSet unite(const RealSet& o) const;
  RealSet intersect(const RealSet& o) const;
  RealSet minus(const RealSet& o) const;

  friend bool operator==(const RealSet&, const RealSet&) = default;
  std::string to_string() const;

 private:
  std::vector<Q> pts_;
  std::vector<bool> at_;
  std::vector<bool> gap_{false};  // gap_[k] covers (pts_[k-1], pts_[k])

  bool gap_contains_after(const Q& u) const;
  template <class Op>
  RealSet combine(const RealSet& o, Op op) const;
  void normalize();
};

/// Coarse trace of a set on one block: bit 0 = grid point, bit 1 = the rest.
enum class Trace : std::uint8_t { Empty = 0, Grid = 1, FullMinusGrid = 2, Full = 3 };

inline Trace trace_and(Trace a, Trace b) {
  return static_cast<Trace>(static_cast<int>(a) & static_cast<int>(b));
}
inline Trace trace_or(Trace a, Trace b) {
  return static_cast<Trace>(static_cast<int>(a) | static_cast<int>(b));
}
inline Trace trace_not(Trace a) { return static_cast<Trace>(3 & ~static_cast<int>(a)); }
char trace_char(Trace t);

/// Trace on a block of the explicit prefix; may be an arbitrary rational
/// interval union when `is_explicit` holds.
struct BlockTrace {
  Trace kind = Trace::Empty;
  bool is_explicit = false;
  RealSet points;  // meaningful only when is_explicit

  friend bool operator==(const BlockTrace&, const BlockTrace&) = default;
};

Q block_lo(std::uint64_t n);
Q block_hi(std::uint64_t n);
/// Block index containing eps in (0,1).
std::uint64_t block_of(const Q& eps);
RealSet block_realset(std::uint64_t n);
RealSet trace_realset(std::uint64_t n, Trace t);

/// Two-adic valuation of n >= 1.
unsigned nu2(std::uint64_t n);
/// Second piece coordinate: j(n) = nu2(o + 1) - 1 where o is the odd part of n.
unsigned nu2_second(std::uint64_t n);

enum class SetClass { NullAtZero, FullAtZero, Splitting };
enum class GermRelation { EqualGerm, SubsetGerm, SupersetGerm, DisjointGerm, Incomparable };

std::string to_string(SetClass c);
std::string to_string(GermRelation r);

inline constexpr std::size_t kMaxModulus = std::size_t{1} << 16;

class IndexSet {
 public:
  IndexSet();  // empty set

  static IndexSet empty() { return IndexSet(); }
  static IndexSet full();
  /// Open interval (p, q) intersected with (0,1); p may be 0.
  static IndexSet interval(const Q& p, const Q& q);
  /// Whole blocks B_n with n = residue (mod modulus).
  static IndexSet blocks(std::size_t residue, std::size_t modulus);
  /// Grid points g_n with n = residue (mod modulus).
  static IndexSet grid(std::size_t residue, std::size_t modulus);
  static IndexSet from_pattern(std::vector<Trace> pattern);
  static IndexSet from_parts(std::vector<BlockTrace> prefix, std::vector<Trace> pattern);
  /// Blocks with nu2(n) == i.
  static IndexSet nu2_piece(unsigned i);
  /// Blocks with nu2(n) >= k (block 0 excluded).
  static IndexSet nu2_at_least(unsigned k);
  /// Blocks with nu2(n) == i and nu2_second(n) == j.
  static IndexSet nu2sq_piece(unsigned i, unsigned j);
  /// Blocks with nu2(n) == i and nu2_second(n) >= j.
  static IndexSet nu2sq_row_tail(unsigned i, unsigned j);

  IndexSet unite(const IndexSet& o) const;
  IndexSet intersect(const IndexSet& o) const;
  IndexSet minus(const IndexSet& o) const;
  IndexSet complement() const;

  bool contains(const Q& eps) const;
  /// Trace on block n (explicit prefix traces reported by their kind only
  /// when they are not explicit; explicit ones report Empty here).
  BlockTrace block_trace(std::uint64_t n) const;
  Trace tail_trace(std::uint64_t n) const { return pattern_[n % pattern_.size()]; }

  SetClass classify() const;
  bool germ_null() const { return classify() == SetClass::NullAtZero; }
  bool germ_full() const { return classify() == SetClass::FullAtZero; }

  std::size_t modulus() const { return pattern_.size(); }
  std::size_t prefix_length() const { return prefix_.size(); }
  const std::vector<Trace>& pattern() const { return pattern_; }
  const std::vector<BlockTrace>& prefix() const { return prefix_; }
  /// a such that modulus = 2^a * odd.
  unsigned two_adic() const;
  /// Whether some block n = residue (mod modulus) far enough out is nonempty,
  /// that is, whether the intersection with blocks(residue, modulus) is not
  /// null at 0.
  bool meets_residue(std::size_t residue, std::size_t modulus) const;

  /// Germ-level copy: explicit prefix replaced by the pattern.
  IndexSet germ() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.key() < b.key(); }

  std::string to_string() const;
  std::string key() const;

 private:
  std::vector<BlockTrace> prefix_;  // blocks 0 .. prefix_.size()-1, size >= 1
  std::vector<Trace> pattern_;      // tail traces, indexed by n mod size

  template <class Op>
  IndexSet combine(const IndexSet& o, Op op, bool (*bop)(bool, bool)) const;
  void canonicalize();
};

bool germ_subset(const IndexSet& a, const IndexSet& b);
bool germ_equal(const IndexSet& a, const IndexSet& b);
GermRelation germ_relation(const IndexSet& a, const IndexSet& b);

/// Catalog of infinite disjoint families of index sets.
enum class PieceFamily { BlockIndexed, Nu2, Nu2Squared };
std::string to_string(PieceFamily f);

/// i-th piece (j used only for Nu2Squared).
IndexSet family_piece(PieceFamily f, unsigned i, int j = -1);

}  // namespace cgn
