#include "cgn/gallery.hpp"

#include "cgn/ideal.hpp"
#include "cgn/ring_calculus.hpp"

namespace cgn {

namespace {

UPoly binomial_power(long k) {
  UPoly p{Q(1)};
  for (long t = 0; t < k; ++t) {
    UPoly next(p.size() + 1, Q(0));
    for (std::size_t d = 0; d < p.size(); ++d) {
      next[d] += p[d];
      next[d + 1] += p[d];
    }
    p = std::move(next);
  }
  return p;
}

}  // namespace

GenNum gallery_beta(Mode m) { return gallery_beta_m(1, m); }

GenNum gallery_beta_m(long k, Mode m) {
  if (k < 1) throw Error("DomainError", "beta_m needs m >= 1");
  if (k > 12) throw Error("ResourceLimit", "beta_m is limited to m <= 12");
  return GenNum::graded(PieceFamily::Nu2, SepPoly::in_i(binomial_power(k)), Coeff(Q(1)), m);
}

GenNum gallery_gamma(Mode m) {
  SepPoly e = SepPoly::in_i({Q(1), Q(1)}) + SepPoly::in_j({Q(1), Q(1)});
  return GenNum::graded(PieceFamily::Nu2Squared, e, Coeff(Q(1)), m);
}

GenNum gallery_closure_witness(const GenNum& a) {
  if (stationary(a)) throw Error("NotApplicable", "the principal ideal is generated by an idempotent");
  IndexSet unbounded;
  for (const Law& l : a.laws()) {
    if (!range_over(l.dom, l.family(), l.exponent()).hi) unbounded = unbounded.unite(l.dom);
  }
  IndexSet mask = unbounded.intersect(IndexSet::grid(0, 1));
  return a.restrict(mask.complement()) + nth_root_skeleton(a.restrict(mask), 2);
}

std::vector<std::string> gallery_names() { return {"beta", "beta2", "beta3", "beta4", "beta5", "gamma", "witness"}; }

GenNum gallery_named(const std::string& name, Mode m) {
  if (name == "beta") return gallery_beta(m);
  if (name == "gamma") return gallery_gamma(m);
  if (name == "witness") return gallery_closure_witness(gallery_beta(m));
  if (name.size() == 5 && name.rfind("beta", 0) == 0 && name[4] >= '1' && name[4] <= '9') {
    return gallery_beta_m(name[4] - '0', m);
  }
  throw Error("UnknownIdentifier", "no gallery entry named '" + name + "'");
}

}  // namespace cgn
