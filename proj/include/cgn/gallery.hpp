#pragma once

#include "cgn/gennum.hpp"

namespace cgn {

/// eps^(i+1) on the Nu2 pieces.
GenNum gallery_beta(Mode m = Mode::R);
/// eps^((i+1)^k) on the Nu2 pieces, k >= 1.
GenNum gallery_beta_m(long k, Mode m = Mode::R);
/// eps^((i+1)+(j+1)) on the Nu2Squared pieces.
GenNum gallery_gamma(Mode m = Mode::R);
/// Element of the closure of aK outside aK: a off the grid points of its
/// unbounded laws, the square root of its skeleton on them. Throws
/// NotApplicable when aK is generated by an idempotent.
GenNum gallery_closure_witness(const GenNum& a);

/// Named gallery entries: beta, beta2 .. beta5, gamma, witness.
GenNum gallery_named(const std::string& name, Mode m = Mode::R);
std::vector<std::string> gallery_names();

}  // namespace cgn
