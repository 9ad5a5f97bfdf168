#pragma once

// Constructive decompositions: skeletons, clean idempotents, zero-divisor
// splittings, generators of sums and intersections of principal ideals, and
// roots.

#include "cgn/gennum.hpp"

namespace cgn {

/// Per law, eps^E with unit coefficient, E the dominant exponent.
GenNum skeleton(const GenNum& x);

/// y with x = a*y computed law by law; throws NotMember when some law of x
/// is not dominated by a on its domain.
GenNum divide_lawwise(const GenNum& x, const GenNum& a);

/// T such that e_T is idempotent and a + e_T is invertible.
IndexSet clean_idempotent(const GenNum& a);

/// S with x*e_S = 0 and y*e_coS = 0; throws NotOrthogonal unless x*y = 0.
IndexSet split_zero_divisors(const GenNum& x, const GenNum& y);

struct BezoutResult {
  GenNum g, r, s;  // g = r*a + s*b
};
/// Generator of aK + bK with witnesses.
BezoutResult bezout_gen(const GenNum& a, const GenNum& b);
/// Generator of aK intersected with bK.
GenNum meet_gen(const GenNum& a, const GenNum& b);

/// Skeleton with all exponents divided by n.
GenNum nth_root_skeleton(const GenNum& x, long n);

}  // namespace cgn
