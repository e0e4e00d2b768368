#include "wreathlab/rmod.hpp"

#include "wreathlab/wdl.hpp"

namespace wreathlab {

Report validate_frobenius(const FrobeniusStructure& s) {
  Report rep("frobenius structure");
  const Algebra& r = s.R;
  bool shapes = s.psi_functional.rows() == 1 && s.psi_functional.cols() == r.dim;
  for (const auto& [e, f] : s.basis_pairs)
    shapes = shapes && e.rows() == r.dim && e.cols() == 1 && f.rows() == r.dim &&
             f.cols() == 1;
  rep.check_true("frob/shapes", shapes);
  if (!rep.ok()) return rep;

  Mat left(r.dim, r.dim), right(r.dim, r.dim), sep(r.dim, 1);
  for (const auto& [e, f] : s.basis_pairs) {
    left = left + f * (s.psi_functional * r.right_mult(e));
    right = right + e * (s.psi_functional * r.left_mult(f));
    sep = sep + r.mult * kron(e, f);
  }
  rep.check_equal("frob/left", left, r.id(), {r.dim});
  rep.check_equal("frob/right", right, r.id(), {r.dim});
  rep.check_equal("frob/separable", sep, r.unit, {1});
  return rep;
}

Report validate_module(const RightModule& m) {
  Report rep("right module");
  const Algebra& r = m.R;
  const Mat id = Mat::identity(m.dim);
  rep.check_true("rmod/shape",
                 m.action.rows() == m.dim && m.action.cols() == m.dim * r.dim);
  if (!rep.ok()) return rep;
  rep.check_equal("rmod/assoc", m.action * kron(m.action, r.id()),
                  m.action * kron(id, r.mult), {m.dim, r.dim, r.dim});
  rep.check_equal("rmod/unit", m.action * kron(id, r.unit), id, {m.dim});
  return rep;
}

Report validate_module(const LeftModule& n) {
  Report rep("left module");
  const Algebra& r = n.R;
  const Mat id = Mat::identity(n.dim);
  rep.check_true("lmod/shape",
                 n.action.rows() == n.dim && n.action.cols() == r.dim * n.dim);
  if (!rep.ok()) return rep;
  rep.check_equal("lmod/assoc", n.action * kron(r.id(), n.action),
                  n.action * kron(r.mult, id), {r.dim, r.dim, n.dim});
  rep.check_equal("lmod/unit", n.action * kron(r.unit, id), id, {n.dim});
  return rep;
}

RightModule right_module_along(const AlgebraHom& eta) {
  is_algebra_hom(eta).require("right_module_along");
  return {eta.src, eta.dst.dim, eta.dst.mult * kron(eta.dst.id(), eta.map)};
}

LeftModule left_module_along(const AlgebraHom& eta) {
  is_algebra_hom(eta).require("left_module_along");
  return {eta.src, eta.dst.dim, eta.dst.mult * kron(eta.map, eta.dst.id())};
}

QuotientSpace tensor_over_R(const RightModule& m, const LeftModule& n,
                            const FrobeniusStructure& s) {
  if (m.R.dim != s.R.dim || n.R.dim != s.R.dim)
    throw DimensionMismatch("tensor_over_R: modules over different base algebras");
  validate_frobenius(s).require("tensor_over_R");
  validate_module(m).require("tensor_over_R: left factor");
  validate_module(n).require("tensor_over_R: right factor");

  const std::size_t dm = m.dim, dn = n.dim, dr = s.R.dim, amb = dm * dn;

  // span of the balancing relations m.r (x) n - m (x) r.n over basis triples
  Mat rel(amb, dm * dr * dn);
  std::size_t c = 0;
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t k = 0; k < dr; ++k)
      for (std::size_t j = 0; j < dn; ++j, ++c) {
        const Mat mr = m.action.columns(i * dr + k, 1);
        const Mat nl = n.action.columns(k * dn + j, 1);
        Mat ei(dm, 1), ej(dn, 1);
        ei.at(i, 0) = 1;
        ej.at(j, 0) = 1;
        const Mat col = kron(mr, ej) - kron(ei, nl);
        for (std::size_t t = 0; t < amb; ++t) rel.at(t, c) = col.at(t, 0);
      }
  const Mat w = column_space_basis(rel);

  // smoothing idempotent m (x) n -> sum_i m.e_i (x) f_i.n
  Mat e(amb, amb);
  for (const auto& [ei, fi] : s.basis_pairs)
    e = e + kron(m.action * kron(Mat::identity(dm), ei),
                 n.action * kron(fi, Mat::identity(dn)));
  if (!(e * rel).is_zero())
    throw IllDefinedSection("tensor_over_R: section does not kill the relations");

  // complete the relation span to a full basis with standard basis vectors
  Mat full = w;
  std::vector<std::size_t> reps;
  for (std::size_t t = 0; t < amb && full.cols() < amb; ++t) {
    Mat cand(amb, 1);
    cand.at(t, 0) = 1;
    Mat ext = hconcat(full, cand);
    if (rank(ext) == ext.cols()) {
      full = std::move(ext);
      reps.push_back(t);
    }
  }
  const Mat inv = inverse(full);

  QuotientSpace q;
  q.ambient = amb;
  q.dim = amb - w.cols();
  q.proj = Mat(q.dim, amb);
  for (std::size_t i = 0; i < q.dim; ++i)
    for (std::size_t j = 0; j < amb; ++j) q.proj.at(i, j) = inv.at(w.cols() + i, j);
  Mat sec(amb, q.dim);
  for (std::size_t i = 0; i < q.dim; ++i) sec.at(reps[i], i) = 1;
  q.incl = e * sec;

  if (q.proj * q.incl != Mat::identity(q.dim) || q.incl * q.proj != e)
    throw InternalInconsistency(
        "tensor_over_R: section and projection fail to split the idempotent");
  return q;
}

}  // namespace wreathlab
