#include "wreathlab/algebra.hpp"

namespace wreathlab {

Algebra make_algebra(std::vector<std::string> basis, const Mat& unit,
                     const std::vector<MultTriple>& triples) {
  Algebra a;
  a.dim = basis.size();
  a.basis = std::move(basis);
  a.unit = unit;
  a.mult = Mat(a.dim, a.dim * a.dim);
  for (const auto& t : triples) {
    if (t.i >= a.dim || t.j >= a.dim || t.k >= a.dim)
      throw DimensionMismatch("make_algebra: index out of range");
    a.mult.at(t.k, t.i * a.dim + t.j) += t.c;
  }
  return a;
}

Report validate_algebra(const Algebra& a) {
  Report rep("algebra");
  const Mat id = a.id();
  rep.check_true("alg/shapes", a.mult.rows() == a.dim && a.mult.cols() == a.dim * a.dim &&
                                   a.unit.rows() == a.dim && a.unit.cols() == 1 &&
                                   a.basis.size() == a.dim);
  if (!rep.ok()) return rep;
  rep.check_equal("alg/assoc", a.mult * kron(a.mult, id), a.mult * kron(id, a.mult),
                  {a.dim, a.dim, a.dim});
  rep.check_equal("alg/unit-left", a.mult * kron(a.unit, id), id, {a.dim});
  rep.check_equal("alg/unit-right", a.mult * kron(id, a.unit), id, {a.dim});
  return rep;
}

Report is_algebra_hom(const Mat& f, const Algebra& src, const Algebra& dst) {
  Report rep("hom");
  rep.check_true("hom/shape", f.rows() == dst.dim && f.cols() == src.dim);
  if (!rep.ok()) return rep;
  rep.check_equal("hom/mult", f * src.mult, dst.mult * kron(f, f), {src.dim, src.dim});
  rep.check_equal("hom/unit", f * src.unit, dst.unit, {1});
  return rep;
}

DirectSum direct_sum(const std::vector<Algebra>& parts) {
  if (parts.empty()) throw DimensionMismatch("direct_sum: empty list");
  DirectSum out;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim;

  Algebra& s = out.sum;
  s.dim = total;
  s.unit = Mat(total, 1);
  s.mult = Mat(total, total * total);
  std::size_t off = 0;
  for (std::size_t idx = 0; idx < parts.size(); ++idx) {
    const Algebra& p = parts[idx];
    for (std::size_t i = 0; i < p.dim; ++i)
      s.basis.push_back(std::to_string(idx) + "." + p.basis[i]);
    Mat inj(total, p.dim), proj(p.dim, total);
    for (std::size_t i = 0; i < p.dim; ++i) {
      inj.at(off + i, i) = 1;
      proj.at(i, off + i) = 1;
    }
    // cross products between distinct summands stay zero
    for (std::size_t i = 0; i < p.dim; ++i)
      for (std::size_t j = 0; j < p.dim; ++j)
        for (std::size_t k = 0; k < p.dim; ++k) {
          const Scalar& c = p.mult.at(k, i * p.dim + j);
          if (c != 0) s.mult.at(off + k, (off + i) * total + (off + j)) = c;
        }
    for (std::size_t i = 0; i < p.dim; ++i) s.unit.at(off + i, 0) = p.unit.at(i, 0);
    out.inj.push_back(std::move(inj));
    out.proj.push_back(std::move(proj));
    off += p.dim;
  }
  return out;
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  Algebra t;
  t.dim = a.dim * b.dim;
  for (const auto& x : a.basis)
    for (const auto& y : b.basis) t.basis.push_back(x + "(x)" + y);
  t.unit = kron(a.unit, b.unit);
  // (A(x)B)(x)(A(x)B) -> A(x)A(x)B(x)B -> A(x)B
  t.mult = kron(a.mult, b.mult) *
           kron(a.id(), Mat::swap(b.dim, a.dim), b.id());
  return t;
}

ImageSubalgebra image_subalgebra(const AlgebraHom& f) {
  is_algebra_hom(f).require("image_subalgebra");
  ImageSubalgebra out;
  out.inclusion = column_space_basis(f.map);
  out.corestriction = solve(out.inclusion, f.map);
  std::size_t r = out.inclusion.cols();
  Algebra& im = out.image;
  im.dim = r;
  for (std::size_t i = 0; i < r; ++i) im.basis.push_back("im" + std::to_string(i));
  // products of image elements stay in the image, so these systems solve
  im.mult = solve(out.inclusion, f.dst.mult * kron(out.inclusion, out.inclusion));
  im.unit = solve(out.inclusion, f.map * f.src.unit);
  return out;
}

BimoduleStructure induced_bimodule(const Algebra& r, const AlgebraHom& alpha,
                                   const AlgebraHom& beta) {
  is_algebra_hom(alpha).require("induced_bimodule: alpha");
  is_algebra_hom(beta).require("induced_bimodule: beta");
  if (alpha.dst.dim != r.dim || beta.dst.dim != r.dim)
    throw DimensionMismatch("induced_bimodule: codomain is not R");
  BimoduleStructure m;
  m.left_alg = beta.src;
  m.right_alg = alpha.src;
  m.dim = r.dim;
  m.left_action = r.mult * kron(beta.map, r.id());
  m.right_action = r.mult * kron(r.id(), alpha.map);
  return m;
}

Report validate_bimodule(const BimoduleStructure& m) {
  Report rep("bimodule");
  const Algebra& b = m.left_alg;
  const Algebra& a = m.right_alg;
  const Mat n = Mat::identity(m.dim);
  const Mat& l = m.left_action;
  const Mat& r = m.right_action;
  rep.check_equal("bimod/left-assoc", l * kron(b.mult, n), l * kron(b.id(), l),
                  {b.dim, b.dim, m.dim});
  rep.check_equal("bimod/left-unit", l * kron(b.unit, n), n, {m.dim});
  rep.check_equal("bimod/right-assoc", r * kron(r, a.id()), r * kron(n, a.mult),
                  {m.dim, a.dim, a.dim});
  rep.check_equal("bimod/right-unit", r * kron(n, a.unit), n, {m.dim});
  rep.check_equal("bimod/commute", l * kron(b.id(), r), r * kron(l, a.id()),
                  {b.dim, m.dim, a.dim});
  return rep;
}

BimoduleStructure outer_bimodule(const Algebra& b, const Algebra& a) {
  BimoduleStructure m;
  m.left_alg = b;
  m.right_alg = a;
  m.dim = b.dim * a.dim;
  m.left_action = kron(b.mult, a.id());
  m.right_action = kron(b.id(), a.mult);
  return m;
}

Report is_bimodule_map(const Mat& f, const BimoduleStructure& src,
                       const BimoduleStructure& dst) {
  Report rep("bimodule map");
  rep.check_true("bimod-map/shape",
                 f.rows() == dst.dim && f.cols() == src.dim &&
                     src.left_alg.dim == dst.left_alg.dim &&
                     src.right_alg.dim == dst.right_alg.dim);
  if (!rep.ok()) return rep;
  rep.check_equal("bimod-map/left", f * src.left_action,
                  dst.left_action * kron(src.left_alg.id(), f), {src.left_alg.dim, src.dim});
  rep.check_equal("bimod-map/right", f * src.right_action,
                  dst.right_action * kron(f, src.right_alg.id()), {src.dim, src.right_alg.dim});
  return rep;
}

}  // namespace wreathlab
