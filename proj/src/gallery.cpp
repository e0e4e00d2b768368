#include "wreathlab/gallery.hpp"

#include "wreathlab/fixtures.hpp"

namespace wreathlab {

namespace {

void set_column(Mat& m, std::size_t j, const Mat& col) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = col.at(i, 0);
}

}  // namespace

Report check_strict_dl(const Wdl& w) {
  Report rep = check_wdl(w);
  rep.check_equal("strict/unit-A", w.psi * kron(w.A.id(), w.B.unit),
                  kron(w.B.unit, w.A.id()), {w.A.dim});
  rep.check_equal("strict/unit-B", w.psi * kron(w.A.unit, w.B.id()),
                  kron(w.B.id(), w.A.unit), {w.B.dim});
  return rep;
}

ImageSubalgebra split_subalgebra(const Algebra& h, const Mat& e_map) {
  if (e_map * e_map != e_map) throw NotIdempotent("split_subalgebra");
  ImageSubalgebra out;
  out.inclusion = column_space_basis(e_map);
  out.corestriction = solve(out.inclusion, e_map);
  const std::size_t r = out.inclusion.cols();
  Algebra& im = out.image;
  im.dim = r;
  for (std::size_t i = 0; i < r; ++i) im.basis.push_back("im" + std::to_string(i));
  im.mult = solve(out.inclusion, h.mult * kron(out.inclusion, out.inclusion));
  im.unit = solve(out.inclusion, e_map * h.unit);
  validate_algebra(im).require("split_subalgebra");
  return out;
}

Algebra opposite_algebra(const Algebra& a) {
  return {a.dim, a.basis, a.mult * Mat::swap(a.dim, a.dim), a.unit};
}

EExtension e_extension(const Algebra& a, const Mat& e, const Algebra& b,
                       const std::optional<Mat>& phi_in) {
  validate_algebra(a).require("e_extension: A");
  validate_algebra(b).require("e_extension: B");
  if (e.rows() != a.dim || e.cols() != 1)
    throw DimensionMismatch("e_extension: e is not an element of A");

  const Mat le = a.left_mult(e);
  const Mat lere = a.right_mult(e) * le;  // x -> e x e
  for (std::size_t t = 0; t < a.dim; ++t)
    for (std::size_t i = 0; i < a.dim; ++i)
      if (le.at(i, t) != lere.at(i, t))
        throw BadIdempotent("e_extension: e*" + a.basis[t] + " differs from e*" +
                                a.basis[t] + "*e",
                            t);

  EExtension out;
  out.ea = split_subalgebra(a, le);
  const Algebra& s = out.ea.image;
  const Mat phi = phi_in ? *phi_in : Mat::swap(s.dim, b.dim);
  const Wdl inner{s, b, phi};
  check_strict_dl(inner).require("e_extension: Phi");

  out.law = Wdl{a, b,
                kron(b.id(), out.ea.inclusion) * phi *
                    kron(out.ea.corestriction, b.id())};
  check_wdl(out.law).require("e_extension");

  out.wreath = weak_wreath(out.law);
  WreathProduct strict = weak_wreath(inner);
  out.strict_product = strict.product;
  out.fwd = strict.splitting.proj * kron(b.id(), out.ea.corestriction) *
            out.wreath.splitting.incl;
  out.bwd = out.wreath.splitting.proj * kron(b.id(), out.ea.inclusion) *
            strict.splitting.incl;
  certify_iso(out.wreath.product, out.strict_product, out.fwd, out.bwd)
      .require("e_extension: wreath iso");
  return out;
}

Refinement subalgebra_refinement(const Wdl& w) {
  Refinement out;
  out.wreath = weak_wreath(w);
  ImageSubalgebra at = image_subalgebra(out.wreath.alpha);
  ImageSubalgebra bt = image_subalgebra(out.wreath.beta);
  out.a_onto = {w.A, at.image, at.corestriction};
  out.b_onto = {w.B, bt.image, bt.corestriction};
  const AlgebraHom alpha_t{at.image, out.wreath.product, at.inclusion};
  const AlgebraHom beta_t{bt.image, out.wreath.product, bt.inclusion};
  const Mat iota_t =
      kron(bt.corestriction, at.corestriction) * out.wreath.splitting.incl;
  out.fact = BilinFact{at.image, bt.image, out.wreath.product, alpha_t, beta_t,
                       iota_t};
  validate_fact(out.fact).require("subalgebra_refinement");
  out.law = wdl_of_fact(out.fact);

  // both unit-insertion diagrams on the input law: inserting the unit on
  // either side and smoothing twice must agree with smoothing directly
  const Algebra& a = w.A;
  const Algebra& b = w.B;
  const Mat p2 = kron(w.psi, w.psi) * kron(a.unit, b.id(), a.id(), b.unit);
  out.diagrams = Report("unit insertion");
  out.diagrams.check_equal("subalg/unit-via-A", p2 * w.psi * kron(a.id(), b.unit),
                           p2 * kron(b.unit, a.id()), {a.dim});
  out.diagrams.check_equal("subalg/unit-via-B", p2 * w.psi * kron(a.unit, b.id()),
                           p2 * kron(b.id(), a.unit), {b.dim});
  out.strict = out.diagrams.ok();
  if (out.strict != is_strict(out.law))
    throw InternalInconsistency(
        "subalgebra_refinement: unit-insertion diagrams disagree with the "
        "refined idempotent");
  return out;
}

DirectSumWdl direct_sum_wdl(const std::vector<Wdl>& laws) {
  if (laws.empty()) throw DimensionMismatch("direct_sum_wdl: empty list");
  std::vector<Algebra> as, bs;
  for (const auto& l : laws) {
    check_strict_dl(l).require("direct_sum_wdl: input law");
    as.push_back(l.A);
    bs.push_back(l.B);
  }

  DirectSumWdl out;
  out.a = direct_sum(as);
  out.b = direct_sum(bs);
  const std::size_t da = out.a.sum.dim, db = out.b.sum.dim;
  Mat psi(db * da, da * db);
  for (std::size_t i = 0; i < laws.size(); ++i)
    psi = psi + kron(out.b.inj[i], out.a.inj[i]) * laws[i].psi *
                    kron(out.a.proj[i], out.b.proj[i]);
  out.law = {out.a.sum, out.b.sum, psi};
  check_wdl(out.law).require("direct_sum_wdl");

  WreathProduct wp = weak_wreath(out.law);
  std::vector<WreathProduct> wps;
  std::vector<Algebra> parts;
  for (const auto& l : laws) {
    wps.push_back(weak_wreath(l));
    parts.push_back(wps.back().product);
  }
  DirectSum blocks = direct_sum(parts);
  out.blockwise = blocks.sum;
  Mat fwd_amb(blocks.sum.dim, db * da);
  Mat bwd_amb(db * da, blocks.sum.dim);
  for (std::size_t i = 0; i < laws.size(); ++i) {
    fwd_amb = fwd_amb + blocks.inj[i] * wps[i].splitting.proj *
                            kron(out.b.proj[i], out.a.proj[i]);
    bwd_amb = bwd_amb + kron(out.b.inj[i], out.a.inj[i]) *
                            wps[i].splitting.incl * blocks.proj[i];
  }
  out.fwd = fwd_amb * wp.splitting.incl;
  out.bwd = wp.splitting.proj * bwd_amb;
  certify_iso(wp.product, out.blockwise, out.fwd, out.bwd)
      .require("direct_sum_wdl: blockwise iso");

  // cross-check against the realization over the diagonal of ground fields
  const std::size_t n = laws.size();
  FrobeniusStructure s;
  s.R = direct_sum(std::vector<Algebra>(n, fixtures::ground())).sum;
  s.psi_functional = Mat(1, n);
  for (std::size_t i = 0; i < n; ++i) {
    s.psi_functional.at(0, i) = 1;
    s.basis_pairs.push_back({s.R.basis_vec(i), s.R.basis_vec(i)});
  }
  Mat ea(da, n), eb(db, n);
  for (std::size_t i = 0; i < n; ++i) {
    set_column(ea, i, out.a.inj[i] * laws[i].A.unit);
    set_column(eb, i, out.b.inj[i] * laws[i].B.unit);
  }
  const AlgebraHom eta_a{s.R, out.a.sum, ea}, eta_b{s.R, out.b.sum, eb};
  QuotientSpace ab =
      tensor_over_R(right_module_along(eta_a), left_module_along(eta_b), s);
  QuotientSpace ba =
      tensor_over_R(right_module_along(eta_b), left_module_along(eta_a), s);
  SfWeakDl sf = sf_weak_dl(out.a.sum, out.b.sum, eta_a, eta_b,
                           ba.proj * psi * ab.incl, s);
  if (sf.law.psi != psi)
    throw InternalInconsistency("direct_sum_wdl: base-ring realization disagrees");
  return out;
}

SfWeakDl sf_weak_dl(const Algebra& a, const Algebra& b, const AlgebraHom& eta_a,
                    const AlgebraHom& eta_b, const Mat& phi_r,
                    const FrobeniusStructure& s) {
  is_algebra_hom(eta_a).require("sf_weak_dl: unit map into A");
  is_algebra_hom(eta_b).require("sf_weak_dl: unit map into B");
  if (eta_a.src.dim != s.R.dim || eta_b.src.dim != s.R.dim ||
      eta_a.dst.dim != a.dim || eta_b.dst.dim != b.dim)
    throw DimensionMismatch("sf_weak_dl: mismatched base algebra");

  SfWeakDl out;
  out.ab = tensor_over_R(right_module_along(eta_a), left_module_along(eta_b), s);
  out.ba = tensor_over_R(right_module_along(eta_b), left_module_along(eta_a), s);
  if (phi_r.rows() != out.ba.dim || phi_r.cols() != out.ab.dim)
    throw DimensionMismatch("sf_weak_dl: phi_r has the wrong shape");

  const Mat ia = a.id(), ib = b.id();
  const std::size_t dr = s.R.dim;
  const Mat idr = Mat::identity(dr);
  const Mat psi = out.ba.incl * phi_r * out.ab.proj;

  Report pre("base-ring distributive law");
  // bilinearity over the base: the quotient-level actions intertwine
  const Mat lm_a = a.mult * kron(eta_a.map, ia), rm_a = a.mult * kron(ia, eta_a.map);
  const Mat lm_b = b.mult * kron(eta_b.map, ib), rm_b = b.mult * kron(ib, eta_b.map);
  const Mat l_ab = out.ab.proj * kron(lm_a, ib) * kron(idr, out.ab.incl);
  const Mat l_ba = out.ba.proj * kron(lm_b, ia) * kron(idr, out.ba.incl);
  const Mat r_ab = out.ab.proj * kron(ia, rm_b) * kron(out.ab.incl, idr);
  const Mat r_ba = out.ba.proj * kron(ib, rm_a) * kron(out.ba.incl, idr);
  pre.check_equal("rdl/left-linear", phi_r * l_ab, l_ba * kron(idr, phi_r),
                  {dr, out.ab.dim});
  pre.check_equal("rdl/right-linear", phi_r * r_ab, r_ba * kron(phi_r, idr),
                  {out.ab.dim, dr});
  // the four law diagrams, lifted along the canonical surjections
  pre.check_equal("rdl/mult-A", phi_r * out.ab.proj * kron(a.mult, ib),
                  out.ba.proj * kron(ib, a.mult) * kron(psi, ia) * kron(ia, psi),
                  {a.dim, a.dim, b.dim});
  pre.check_equal("rdl/mult-B", phi_r * out.ab.proj * kron(ia, b.mult),
                  out.ba.proj * kron(b.mult, ia) * kron(ib, psi) * kron(psi, ib),
                  {a.dim, b.dim, b.dim});
  pre.check_equal("rdl/unit-A", phi_r * out.ab.proj * kron(a.unit, ib),
                  out.ba.proj * kron(ib, a.unit), {b.dim});
  pre.check_equal("rdl/unit-B", phi_r * out.ab.proj * kron(ia, b.unit),
                  out.ba.proj * kron(b.unit, ia), {a.dim});
  pre.require("sf_weak_dl");

  out.law = {a, b, psi};
  check_wdl(out.law).require("sf_weak_dl");
  if (psibar(out.law) != out.ba.incl * out.ba.proj)
    throw InternalInconsistency(
        "sf_weak_dl: canonical idempotent is not the smoothing retract");

  Algebra pr;
  pr.dim = out.ba.dim;
  for (std::size_t i = 0; i < pr.dim; ++i) pr.basis.push_back("q" + std::to_string(i));
  pr.unit = out.ba.proj * kron(b.unit, a.unit);
  pr.mult = out.ba.proj * kron(b.mult, a.mult) * kron(ib, psi, ia) *
            kron(out.ba.incl, out.ba.incl);
  validate_algebra(pr).require("sf_weak_dl: induced product");
  out.product_r = pr;

  out.wreath = weak_wreath(out.law);
  out.fwd = out.ba.proj * out.wreath.splitting.incl;
  out.bwd = out.wreath.splitting.proj * out.ba.incl;
  certify_iso(out.wreath.product, out.product_r, out.fwd, out.bwd)
      .require("sf_weak_dl: wreath iso");
  return out;
}

CapMaps cap_maps(const WeakBialgebra& w) {
  const std::size_t d = w.H.dim;
  const Mat id = w.H.id();
  const Mat u2 = w.comult * w.H.unit;
  const Mat emu = w.counit * w.H.mult;
  CapMaps c;
  c.cap = kron(id, emu) * kron(id, Mat::swap(d, d)) * kron(u2, id);
  c.capbar = kron(emu, id) * kron(id, u2);
  return c;
}

namespace {

CapBase cap_base_unchecked(const WeakBialgebra& w) {
  const Algebra& h = w.H;
  const std::size_t d = h.dim;
  CapBase out;
  out.caps = cap_maps(w);
  out.sub = split_subalgebra(h, out.caps.capbar);
  out.r = opposite_algebra(out.sub.image);
  for (std::size_t i = 0; i < out.r.dim; ++i)
    out.r.basis[i] = "r" + std::to_string(i);

  const Mat u2 = w.comult * h.unit;
  const Mat w2 = kron(out.caps.capbar, Mat::identity(d)) * u2;
  if (kron(out.caps.capbar, out.caps.capbar) * u2 != w2)
    throw InternalInconsistency("cap_base: dual basis legs leave the base");
  const Mat& v = out.sub.inclusion;
  const Mat coords = solve(kron(v, v), w2);
  out.frob.R = out.r;
  out.frob.psi_functional = w.counit * v;
  for (std::size_t i = 0; i < out.r.dim; ++i)
    for (std::size_t j = 0; j < out.r.dim; ++j) {
      const Scalar& c = coords.at(i * out.r.dim + j, 0);
      if (c != 0)
        out.frob.basis_pairs.push_back(
            {c * out.r.basis_vec(i), out.r.basis_vec(j)});
    }
  out.into_h = {out.r, h, out.caps.cap * v};
  return out;
}

}  // namespace

Report validate_weak_bialgebra(const WeakBialgebra& w) {
  Report rep("weak bialgebra");
  const Algebra& h = w.H;
  const std::size_t d = h.dim;
  rep.check_true("wba/shapes", w.comult.rows() == d * d && w.comult.cols() == d &&
                                   w.counit.rows() == 1 && w.counit.cols() == d);
  if (!rep.ok()) return rep;
  rep.merge(validate_algebra(h));
  const Mat id = h.id();
  rep.check_equal("wba/coassoc", kron(w.comult, id) * w.comult,
                  kron(id, w.comult) * w.comult, {d});
  rep.check_equal("wba/counit-left", kron(w.counit, id) * w.comult, id, {d});
  rep.check_equal("wba/counit-right", kron(id, w.counit) * w.comult, id, {d});
  rep.check_equal("wba/comult-mult", w.comult * h.mult,
                  kron(h.mult, h.mult) * kron(id, Mat::swap(d, d), id) *
                      kron(w.comult, w.comult),
                  {d, d});
  if (!rep.ok()) return rep;

  const Mat emu = w.counit * h.mult;
  const Mat mid = w.counit * h.mult * kron(h.mult, id);
  rep.check_equal("wba/weak-counit-left",
                  kron(emu, emu) * kron(id, w.comult, id), mid, {d, d, d});
  rep.check_equal("wba/weak-counit-right",
                  kron(emu, emu) * kron(id, Mat::swap(d, d), id) *
                      kron(id, w.comult, id),
                  mid, {d, d, d});

  const Mat u2 = w.comult * h.unit;
  const Algebra h3 = tensor_algebra(tensor_algebra(h, h), h);
  const Mat x = kron(u2, h.unit), y = kron(h.unit, u2);
  const Mat dd1 = kron(w.comult, id) * u2;
  rep.check_equal("wba/weak-comult-left", h3.mult * kron(x, y), dd1, {1});
  rep.check_equal("wba/weak-comult-right", h3.mult * kron(y, x), dd1, {1});

  const CapMaps c = cap_maps(w);
  rep.check_equal("cap/counit", w.counit * c.cap, w.counit, {d});
  rep.check_equal("capbar/counit", w.counit * c.capbar, w.counit, {d});
  const Mat ins = kron(id, Mat::swap(d, d)) * kron(u2, id);  // h -> 1_1 (x) h (x) 1_2
  rep.check_equal("cap/comult", w.comult * c.cap, kron(id, h.mult) * ins * c.cap,
                  {d});
  rep.check_equal("capbar/comult", w.comult * c.capbar,
                  kron(h.mult, id) * ins * c.capbar, {d});
  const Mat cm = c.cap * h.mult, cbm = c.capbar * h.mult;
  rep.check_equal("cap/absorb-cap", cm * kron(c.cap, id), cm, {d, d});
  rep.check_equal("cap/absorb-capbar", cm * kron(c.capbar, id), cm, {d, d});
  rep.check_equal("capbar/absorb-cap", cbm * kron(c.cap, id), cbm, {d, d});
  rep.check_equal("capbar/absorb-capbar", cbm * kron(c.capbar, id), cbm, {d, d});
  rep.check_equal("cap/commute", h.mult * kron(c.capbar, c.cap),
                  h.mult * kron(c.cap, c.capbar) * Mat::swap(d, d), {d, d});
  rep.check_equal("cap/multiplicative", cm * kron(id, c.cap),
                  h.mult * kron(c.cap, c.cap), {d, d});
  rep.check_equal("capbar/multiplicative", cbm * kron(id, c.capbar),
                  h.mult * kron(c.capbar, c.capbar), {d, d});
  if (!rep.ok()) return rep;

  try {
    const CapBase base = cap_base_unchecked(w);
    rep.merge(validate_frobenius(base.frob), "base/");
    rep.merge(is_algebra_hom(base.into_h), "base/into-h/");
  } catch (const std::exception&) {
    rep.check_true("base/structure", false);
  }
  return rep;
}

CapBase cap_base(const WeakBialgebra& w) {
  validate_weak_bialgebra(w).require("cap_base");
  return cap_base_unchecked(w);
}

Report validate_module_algebra(const WeakBialgebra& w, const ModuleAlgebra& m) {
  Report rep("module algebra");
  const Algebra& a = m.A;
  const Algebra& h = w.H;
  const std::size_t d = h.dim;
  rep.check_true("mod/shape",
                 m.action.rows() == a.dim && m.action.cols() == a.dim * d);
  if (!rep.ok()) return rep;
  rep.merge(validate_module(RightModule{h, a.dim, m.action}));
  const Mat lhs = a.mult * kron(m.action, m.action) *
                  kron(a.id(), Mat::swap(a.dim, d), h.id()) *
                  kron(a.id(), a.id(), w.comult);
  rep.check_equal("mod/mult-compat", lhs, m.action * kron(a.mult, h.id()),
                  {a.dim, a.dim, d});
  const CapMaps c = cap_maps(w);
  rep.check_equal("mod/unit-compat", m.action * kron(a.unit, h.id()),
                  m.action * kron(a.unit, c.capbar), {d});
  return rep;
}

SmashWdl smash_wdl(const WeakBialgebra& w, const ModuleAlgebra& m) {
  validate_weak_bialgebra(w).require("smash_wdl");
  validate_module_algebra(w, m).require("smash_wdl");
  const Algebra& a = m.A;
  const Algebra& h = w.H;

  SmashWdl out;
  out.law = {a, h,
             kron(h.id(), m.action) * kron(Mat::swap(a.dim, h.dim), h.id()) *
                 kron(a.id(), w.comult)};
  check_wdl(out.law).require("smash_wdl");

  out.base = cap_base_unchecked(w);
  const AlgebraHom eta_a{out.base.r, a,
                         m.action * kron(a.unit, out.base.sub.inclusion)};
  is_algebra_hom(eta_a).require("smash_wdl: base map into A");
  is_algebra_hom(out.base.into_h).require("smash_wdl: base map into H");

  const FrobeniusStructure& s = out.base.frob;
  QuotientSpace ab = tensor_over_R(right_module_along(eta_a),
                                   left_module_along(out.base.into_h), s);
  QuotientSpace ba = tensor_over_R(right_module_along(out.base.into_h),
                                   left_module_along(eta_a), s);
  out.sf = sf_weak_dl(a, h, eta_a, out.base.into_h,
                      ba.proj * out.law.psi * ab.incl, s);
  if (out.sf.law.psi != out.law.psi)
    throw InternalInconsistency("smash_wdl: base-ring realization disagrees");
  return out;
}

std::pair<BilinFact, Wdl> triangle_fixture() {
  BilinFact f = fixtures::triangle_fact();
  validate_fact(f).require("triangle_fixture");
  Wdl w = wdl_of_fact(f);
  roundtrip_object(w).require("triangle_fixture");
  roundtrip_fact(f).require("triangle_fixture");
  if (weak_wreath(w).product.dim != 3)
    throw InternalInconsistency("triangle_fixture: wreath dimension");
  return {f, w};
}

}  // namespace wreathlab
