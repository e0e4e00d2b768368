#include "wreathlab/factorization.hpp"

namespace wreathlab {

Mat pi_of(const BilinFact& f) {
  is_algebra_hom(f.alpha).require("pi_of: alpha");
  is_algebra_hom(f.beta).require("pi_of: beta");
  Mat pi = f.R.mult * kron(f.beta.map, f.alpha.map);
  BimoduleStructure on_r = induced_bimodule(f.R, f.alpha, f.beta);
  is_bimodule_map(pi, outer_bimodule(f.B, f.A), on_r).require("pi_of");
  return pi;
}

Report validate_fact(const BilinFact& f) {
  Report rep("bilinear factorization");
  rep.check_true("fact/shapes",
                 f.alpha.src.dim == f.A.dim && f.beta.src.dim == f.B.dim &&
                     f.alpha.dst.dim == f.R.dim && f.beta.dst.dim == f.R.dim &&
                     f.iota.rows() == f.B.dim * f.A.dim && f.iota.cols() == f.R.dim);
  if (!rep.ok()) return rep;
  rep.merge(is_algebra_hom(f.alpha), "alpha/");
  rep.merge(is_algebra_hom(f.beta), "beta/");
  if (!rep.ok()) return rep;

  Mat pi = f.R.mult * kron(f.beta.map, f.alpha.map);
  rep.check_equal("fact/section-of-pi", pi * f.iota, f.R.id(), {f.R.dim});
  rep.merge(is_bimodule_map(f.iota, induced_bimodule(f.R, f.alpha, f.beta),
                            outer_bimodule(f.B, f.A)),
            "iota/");
  return rep;
}

Wdl wdl_of_fact(const BilinFact& f) {
  validate_fact(f).require("wdl_of_fact");
  Wdl w{f.A, f.B, f.iota * f.R.mult * kron(f.alpha.map, f.beta.map)};
  check_wdl(w).require("wdl_of_fact");

  Mat pi = pi_of(f);
  Report rep("derived law");
  rep.check_equal("fact/idempotent-is-iota-pi", psibar_verified(w), f.iota * pi,
                  {f.B.dim, f.A.dim});
  rep.check_equal("fact/mult-compat", f.iota * f.R.mult * kron(pi, pi),
                  nonunital_mult(w));
  rep.require("wdl_of_fact");
  return w;
}

BilinFact fact_of_wdl(const Wdl& w) {
  WreathProduct wp = weak_wreath(w);
  BilinFact f{w.A, w.B, wp.product, wp.alpha, wp.beta, wp.splitting.incl};
  validate_fact(f).require("fact_of_wdl");
  return f;
}

Report certify_iso(const Algebra& src, const Algebra& dst, const Mat& fwd,
                   const Mat& bwd) {
  Report rep("isomorphism");
  rep.merge(is_algebra_hom(fwd, src, dst), "fwd/");
  rep.merge(is_algebra_hom(bwd, dst, src), "bwd/");
  if (!rep.ok()) return rep;
  rep.check_equal("iso/fwd-bwd", fwd * bwd, dst.id(), {dst.dim});
  rep.check_equal("iso/bwd-fwd", bwd * fwd, src.id(), {src.dim});
  return rep;
}

Report roundtrip_object(const Wdl& w) {
  Wdl back = wdl_of_fact(fact_of_wdl(w));
  Report rep("object roundtrip");
  rep.check_equal("roundtrip/psi", back.psi, w.psi, {w.A.dim, w.B.dim});
  return rep;
}

Report roundtrip_fact(const BilinFact& f) {
  Wdl w = wdl_of_fact(f);
  WreathProduct wp = weak_wreath(w);
  Mat fwd = wp.splitting.proj * f.iota;     // R -> wreath product
  Mat bwd = pi_of(f) * wp.splitting.incl;   // wreath product -> R
  Report rep = certify_iso(f.R, wp.product, fwd, bwd);
  return rep;
}

}  // namespace wreathlab
