#include "wreathlab/wdl.hpp"

namespace wreathlab {

namespace {

// the two one-sided unit insertions whose equality is the weak-unit identity
Mat kappa_left(const Algebra& a, const Algebra& b, const Mat& psi) {
  Mat iba = Mat::identity(b.dim * a.dim);
  return kron(b.id(), a.mult) * kron(psi, a.id()) * kron(a.unit, iba);
}

Mat kappa_right(const Algebra& a, const Algebra& b, const Mat& psi) {
  Mat iba = Mat::identity(b.dim * a.dim);
  return kron(b.mult, a.id()) * kron(b.id(), psi) * kron(iba, b.unit);
}

Mat raw_mult(const Wdl& w) {
  return kron(w.B.mult, w.A.mult) * kron(w.B.id(), w.psi, w.A.id());
}

}  // namespace

Report check_wdl(const Algebra& a, const Algebra& b, const Mat& psi) {
  Report rep("wdl");
  rep.check_true("wdl/shape",
                 psi.rows() == b.dim * a.dim && psi.cols() == a.dim * b.dim);
  if (!rep.ok()) return rep;
  rep.check_equal("wdl/mult-A", psi * kron(a.mult, b.id()),
                  kron(b.id(), a.mult) * kron(psi, a.id()) * kron(a.id(), psi),
                  {a.dim, a.dim, b.dim});
  rep.check_equal("wdl/mult-B", psi * kron(a.id(), b.mult),
                  kron(b.mult, a.id()) * kron(b.id(), psi) * kron(psi, b.id()),
                  {a.dim, b.dim, b.dim});
  rep.check_equal("wdl/weak-unit", kappa_left(a, b, psi), kappa_right(a, b, psi),
                  {b.dim, a.dim});
  return rep;
}

Report check_wdl_alt(const Algebra& a, const Algebra& b, const Mat& psi) {
  Report rep("wdl-alt");
  rep.check_true("wdl/shape",
                 psi.rows() == b.dim * a.dim && psi.cols() == a.dim * b.dim);
  if (!rep.ok()) return rep;
  rep.check_equal("wdl-alt/unit-via-B", psi * kron(a.unit, b.id()),
                  kron(b.mult, a.id()) * kron(b.id(), psi) * kron(b.id(), a.unit, b.unit),
                  {b.dim});
  rep.check_equal("wdl-alt/unit-via-A", psi * kron(a.id(), b.unit),
                  kron(b.id(), a.mult) * kron(psi, a.id()) * kron(a.unit, b.unit, a.id()),
                  {a.dim});
  return rep;
}

Mat nonunital_mult(const Wdl& w) {
  Mat mu = raw_mult(w);
  Mat iba = Mat::identity(w.B.dim * w.A.dim);
  Report rep("nonunital mult");
  rep.check_equal("mu/assoc", mu * kron(mu, iba), mu * kron(iba, mu));
  rep.require("nonunital_mult");
  return mu;
}

Mat psibar(const Wdl& w) { return kappa_right(w.A, w.B, w.psi); }

Mat psibar_verified(const Wdl& w, Report* rep) {
  const Algebra& a = w.A;
  const Algebra& b = w.B;
  Mat right = kappa_right(a, b, w.psi);
  Mat left = kappa_left(a, b, w.psi);
  Mat mu = raw_mult(w);
  Mat via_mu = mu * kron(b.id(), a.unit, b.unit, a.id());
  if (left != right || via_mu != right)
    throw InternalInconsistency("psibar: computation routes disagree");
  const Mat& pb = right;

  Report local("psibar");
  Report& r = rep ? *rep : local;
  r.check_equal("psibar/absorbs-psi", pb * w.psi, w.psi, {a.dim, b.dim});
  r.check_equal("psibar/idempotent", pb * pb, pb, {b.dim, a.dim});
  r.check_equal("psibar/left-linear", kron(b.mult, a.id()) * kron(b.id(), pb),
                pb * kron(b.mult, a.id()), {b.dim, b.dim, a.dim});
  r.check_equal("psibar/right-linear", kron(b.id(), a.mult) * kron(pb, a.id()),
                pb * kron(b.id(), a.mult), {b.dim, a.dim, a.dim});
  r.check_equal("psibar/mult-absorb", mu * kron(pb, pb), mu);
  r.check_equal("psibar/post-mult", pb * mu, mu);
  if (!rep) local.require("psibar");
  return pb;
}

bool is_strict(const Wdl& w) {
  return psibar(w) == Mat::identity(w.B.dim * w.A.dim);
}

WreathProduct weak_wreath(const Wdl& w) {
  check_wdl(w).require("weak_wreath");
  WreathProduct out;
  out.wdl = w;
  out.mu = nonunital_mult(w);
  out.psibar = psibar_verified(w);
  out.splitting = split_idempotent(out.psibar);
  const Splitting& s = out.splitting;

  Algebra& p = out.product;
  p.dim = s.rank();
  for (std::size_t i = 0; i < p.dim; ++i) p.basis.push_back("w" + std::to_string(i));
  p.mult = s.proj * out.mu * kron(s.incl, s.incl);
  p.unit = s.proj * kron(w.B.unit, w.A.unit);
  validate_algebra(p).require("weak_wreath: product");

  out.alpha = {w.A, p, s.proj * kron(w.B.unit, w.A.id())};
  out.beta = {w.B, p, s.proj * kron(w.B.id(), w.A.unit)};
  is_algebra_hom(out.alpha).require("weak_wreath: alpha");
  is_algebra_hom(out.beta).require("weak_wreath: beta");

  Report rep("wreath");
  rep.check_equal("wreath/mult-beta-alpha", p.mult * kron(out.beta.map, out.alpha.map),
                  s.proj, {w.B.dim, w.A.dim});
  rep.require("weak_wreath");

  // proj and incl intertwine the outer actions on B (x) A with the induced
  // actions on the retract
  BimoduleStructure outer = outer_bimodule(w.B, w.A);
  BimoduleStructure retract = induced_bimodule(p, out.alpha, out.beta);
  is_bimodule_map(s.proj, outer, retract).require("weak_wreath: proj");
  is_bimodule_map(s.incl, retract, outer).require("weak_wreath: incl");
  return out;
}

}  // namespace wreathlab
