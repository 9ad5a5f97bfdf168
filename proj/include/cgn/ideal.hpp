#pragma once

// Level sets, Z/Inv predicates and membership decisions for principal ideals,
// radicals, closures, pure parts, annihilators and filter quotients.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cgn/gennum.hpp"
#include "cgn/ring_calculus.hpp"

namespace cgn {

/// Common refinement of the supports of two elements.
struct Cell {
  IndexSet set;
  std::optional<Law> x, a;
};
std::vector<Cell> refine(const GenNum& x, const GenNum& a);

// ---------------------------------------------------------------- levels

struct LevelScheme {
  GenNum source;
  bool finite = true;          // finitely many distinct level sets
  std::vector<Q> breakpoints;  // levels where L_m jumps (all of them when finite)
  IndexSet at(const Q& m) const { return level_set(source, m); }
};
LevelScheme level_scheme(const GenNum& a);

/// S with aK = e_S K when the level sets are stationary.
std::optional<IndexSet> stationary(const GenNum& a);

// ---------------------------------------------------------------- membership

struct Membership {
  bool member = false;
  std::optional<GenNum> witness;  // y with x = a*y
  std::string reason;
};
Membership in_principal(const GenNum& x, const GenNum& a);

/// Inv(b) is contained in Inv(a), equivalently Z(a) is contained in Z(b).
bool inv_subset(const GenNum& a, const GenNum& b);
bool in_radical(const GenNum& x, const GenNum& a);
/// Level-set route: for all m, e_{L_m(x)} lies in aK.
bool in_closure(const GenNum& x, const GenNum& a);
/// Level at which the level-set route is decided.
Q closure_level(const GenNum& x, const GenNum& a);
/// Zero-set route: Inv(x) is contained in Inv(a).
bool in_z_closure(const GenNum& x, const GenNum& a);
inline bool in_annihilator(const GenNum& x, const GenNum& a) { return (x * a).is_zero(); }

// ---------------------------------------------------------------- pure parts

struct PureScheme {
  enum class Kind { FiniteSets, LevelsOf, FamilyPieces };
  Kind kind = Kind::FiniteSets;
  std::vector<IndexSet> sets;  // FiniteSets
  std::optional<GenNum> source;
  PieceFamily family = PieceFamily::Nu2;
  IndexSet mask;

  bool single() const { return kind == Kind::FiniteSets; }
  /// n-th generating set of the increasing scheme.
  IndexSet generator_set(long n) const;
  std::string to_string() const;
};
PureScheme pure_part(const GenNum& a);
PureScheme family_scheme(PieceFamily f, const IndexSet& mask);
GenNum merged_generator(const PureScheme& s, Mode m);

struct Decomposition {
  std::vector<IndexSet> sets;
  std::vector<long> levels;
  bool complete = false;  // false when the scheme continues past the listed sets
};
/// S_n = L_n minus L_{n-1}, listing at most `limit` nonempty sets.
Decomposition orthogonal_decomposition(const GenNum& a, std::size_t limit = 8);

// ---------------------------------------------------------------- witnesses

/// One sample point per block n_k (k >= k0), n_k in the piece with coordinate
/// k along `dir` and the other coordinate fixed. Not eventually periodic, so
/// it lives outside IndexSet.
struct DiagonalSet {
  IndexSet cell;
  int dir = 0;       // 0: nu2 = k; 1: second coordinate = k
  long fixed = 0;    // j when dir = 0, i when dir = 1
  long k0 = 0;
  int lane = 0;
  std::uint64_t residue = 0;  // residue of every n_k modulo the cell modulus
  bool grid_point = true;

  /// n_k modulo mod (mod >= 1).
  std::uint64_t block_mod(long k, std::uint64_t mod) const;
  /// Exact block index for small k.
  std::optional<std::uint64_t> block(long k) const;
  bool point_in(const IndexSet& s, long k) const;
  Q point(long k) const;
  std::string to_string() const;
};

/// Either a plain index set or a diagonal.
struct AnnWitness {
  bool diagonal = false;
  IndexSet set;
  DiagonalSet diag;
  std::string to_string() const;
};

/// y * e_T = 0.
bool annihilates(const GenNum& y, const AnnWitness& t);
/// T with a*e_T = 0 and x*e_T != 0; none iff x lies in the closure of aK.
std::optional<AnnWitness> find_ann_witness(const GenNum& x, const GenNum& a);

struct OrthoWitness {
  AnnWitness t, twin;
};
/// T, T' inside S, disjoint, annihilating every generator; throws SIsCovered.
OrthoWitness orthogonal_witness(const IndexSet& s, const std::vector<GenNum>& gens);

/// S with a*e_coS = 0 and b*e_S = 0 for every b; throws NotOrthogonal.
IndexSet annihilator_split(const GenNum& a, const std::vector<GenNum>& bs);

// ---------------------------------------------------------------- expressions

struct IdealExpr;
using IdealPtr = std::shared_ptr<const IdealExpr>;

struct IdealExpr {
  enum class Kind {
    Principal, IdempotentGen, Sum, Product, Intersect, Radical, Closure, ZClosure, PurePart, Annihilator
  };
  Kind kind = Kind::Principal;
  std::optional<GenNum> g;
  std::vector<IndexSet> sets;
  IdealPtr lhs, rhs;

  static IdealPtr principal(GenNum g);
  static IdealPtr idempotents(std::vector<IndexSet> sets, Mode m);
  static IdealPtr binary(Kind k, IdealPtr l, IdealPtr r);
  static IdealPtr unary(Kind k, IdealPtr inner);
  static IdealPtr annihilator(GenNum g);
};

enum class CoreKind { Principal, Pure, Closure, Radical };
std::string to_string(CoreKind k);

/// Normal form: one of four ideal constructions applied to a single generator.
struct IdealCore {
  CoreKind kind = CoreKind::Principal;
  GenNum g;
  std::string to_string() const;
};
/// Throws UnnormalizableIdeal outside the rewrite table.
IdealCore normalize(const IdealExpr& e);

bool member(const GenNum& x, const IdealCore& I);
/// e_S lies in I.
bool idempotent_member(const IndexSet& s, const IdealCore& I);
bool in_closure(const GenNum& x, const IdealCore& I);

struct PseudoprimeEntry {
  IndexSet set;
  bool in, co_in;
};
struct PseudoprimeReport {
  std::vector<PseudoprimeEntry> entries;
  bool refuted = false;  // some S with neither e_S nor e_coS in I
};
/// Tests the Boolean algebra generated by the family (at most 3 sets).
PseudoprimeReport pseudoprime_check(const IdealCore& I, const std::vector<IndexSet>& family);

// ---------------------------------------------------------------- quotients

/// Finite union-closed family of splitting sets with a proper union.
class FilterBase {
 public:
  explicit FilterBase(std::vector<IndexSet> gens);
  const std::vector<IndexSet>& members() const { return members_; }
  const IndexSet& top() const { return top_; }

 private:
  std::vector<IndexSet> members_;
  IndexSet top_;
};

bool quotient_equiv(const GenNum& x, const GenNum& y, const FilterBase& f);
ExtVal quotient_val(const GenNum& x, const FilterBase& f);

}  // namespace cgn
