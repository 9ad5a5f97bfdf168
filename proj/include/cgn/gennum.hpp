#pragma once

// Generalized numbers as finite lists of laws. A law is a domain (IndexSet)
// carrying a graded value. Points not covered by any law carry the value 0.
//
// A canonical law is tie-free: every pair of its numerator terms (and of its
// denominator terms) has exponents whose difference has one strict sign on
// all active pieces of the domain. Terms are stored dominant first and the
// dominant denominator term is normalized to 1.

#include <optional>
#include <string>
#include <vector>

#include "cgn/index_set.hpp"
#include "cgn/poly.hpp"

namespace cgn {

enum class Mode { R, C };
std::string to_string(Mode m);

/// Coordinates the exponents of a value depend on.
enum class Family { Whole, Nu2, Nu2Sq };
Family family_of(const Value& v);

/// Active part of a domain with a uniform description of its piece indices.
///   Point: all coordinates of the family fixed (i, j as applicable).
///   Tail1: Nu2 pieces i >= from.
///   Row:   Nu2Squared pieces with i fixed and j >= from.
///   Tail2: Nu2Squared pieces with i >= from and every j.
enum class RegionKind { Point, Tail1, Row, Tail2 };

struct Region {
  IndexSet set;
  RegionKind kind = RegionKind::Point;
  long i = -1;
  long j = -1;
  long from = 0;
};

std::vector<Region> active_regions(const IndexSet& dom, Family fam);
SepPoly specialize(const SepPoly& e, const Region& r);
Value specialize(const Value& v, const Region& r);
/// Strict sign of e on every active piece of r, if uniform (0 only when e is
/// identically zero there).
std::optional<int> sign_on(const Region& r, const SepPoly& e);
/// Range of e over the active pieces of r.
Range range_on(const Region& r, const SepPoly& e);

struct SignedPart {
  IndexSet set;
  int sign;
};
/// Partition of dom into sets on which e has a uniform sign.
std::vector<SignedPart> split_by_sign(const IndexSet& dom, Family fam, const SepPoly& e);
/// Range of e over all active pieces of dom.
Range range_over(const IndexSet& dom, Family fam, const SepPoly& e);

struct Law {
  IndexSet dom;
  Value val;

  Family family() const { return family_of(val); }
  /// Dominant exponent and coefficient.
  const SepPoly& exponent() const { return val.num.terms.front().e; }
  const Coeff& coeff() const { return val.num.terms.front().c; }
};

class GenNum {
 public:
  explicit GenNum(Mode m = Mode::R) : mode_(m) {}

  static GenNum zero(Mode m) { return GenNum(m); }
  static GenNum one(Mode m);
  static GenNum alpha(Mode m);
  static GenNum idempotent(const IndexSet& s, Mode m);
  static GenNum rational(const Coeff& c, Mode m);
  /// c * eps^(g) on the pieces of the family.
  static GenNum graded(PieceFamily f, const SepPoly& g, const Coeff& c, Mode m);
  /// Canonicalizes arbitrary laws; domains must be pairwise disjoint.
  static GenNum from_laws(Mode m, std::vector<Law> laws);

  Mode mode() const { return mode_; }
  const std::vector<Law>& laws() const { return laws_; }
  bool is_zero() const { return laws_.empty(); }
  /// Union of the law domains.
  IndexSet support() const;
  /// x * e_s.
  GenNum restrict(const IndexSet& s) const;
  GenNum conj() const;
  GenNum with_mode(Mode m) const;

  friend GenNum operator+(const GenNum& a, const GenNum& b);
  friend GenNum operator-(const GenNum& a, const GenNum& b);
  friend GenNum operator*(const GenNum& a, const GenNum& b);
  friend GenNum operator-(const GenNum& a);

  std::string to_string() const;

 private:
  Mode mode_;
  std::vector<Law> laws_;
};

GenNum pow(const GenNum& x, long n);
/// x^(p/q); requires every law to be a single term with an exact root of
/// its coefficient.
GenNum pow(const GenNum& x, const Q& e);

bool equal_germ(const GenNum& a, const GenNum& b);

struct ExtVal {
  bool infinite = true;
  Q v;
  static ExtVal inf() { return {}; }
  static ExtVal of(Q q) { return {false, std::move(q)}; }
  friend bool operator==(const ExtVal& a, const ExtVal& b) {
    return a.infinite == b.infinite && (a.infinite || a.v == b.v);
  }
  friend bool operator<(const ExtVal& a, const ExtVal& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.v < b.v;
  }
  friend bool operator<=(const ExtVal& a, const ExtVal& b) { return !(b < a); }
  std::string to_string() const { return infinite ? "inf" : cgn::to_string(v); }
};

ExtVal valuation(const GenNum& x);
inline ExtVal sharp_dist(const GenNum& x, const GenNum& y) { return valuation(x - y); }

bool leq(const GenNum& x, const GenNum& y);
GenNum sup(const GenNum& x, const GenNum& y);
GenNum inf(const GenNum& x, const GenNum& y);

struct AbsResult {
  GenNum value;
  bool skeletal = false;
};
AbsResult abs(const GenNum& x);
GenNum abs2(const GenNum& x);

enum class ElementClass { Zero, Invertible, ZeroDivisor };
std::string to_string(ElementClass c);
ElementClass classify_element(const GenNum& x);
GenNum invert(const GenNum& x);
/// y with x*y = e_s; throws NotInvertibleOnS.
GenNum invert_on(const GenNum& x, const IndexSet& s);
/// Whether x is invertible with respect to s.
bool inv_test(const GenNum& x, const IndexSet& s);
/// Whether x * e_s = 0.
bool z_test(const GenNum& x, const IndexSet& s);

/// Block-granular level set {|x| >= eps^m}: pieces with dominant exponent
/// below m, or equal to m with squared modulus at least 1.
IndexSet level_set(const GenNum& x, const Q& m);

/// Whether every law has a dominant exponent bounded above (hence the
/// level sets stabilize).
bool exponents_bounded(const GenNum& x);

}  // namespace cgn
