// Acceptance suite: ten criteria, one line each, exact equality throughout.
// A criterion fails if any of its assertions fails, if it throws, or if it
// exceeds its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "wreathlab/fixtures.hpp"
#include "wreathlab/io.hpp"

using namespace wreathlab;
using namespace wreathlab::fixtures;

namespace {

int failures = 0;

void criterion(int n, const char* label, double limit_s,
               const std::function<void(std::function<void(bool)>)>& body) {
  bool ok = true;
  std::string note;
  auto expect = [&](bool cond) { ok = ok && cond; };
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(expect);
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" [threw: ") + e.what() + "]";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) {
    ok = false;
    note += " [over time budget]";
  }
  if (!ok) ++failures;
  std::printf("%s  criterion %2d: %s (%.3f s)%s\n", ok ? "pass" : "FAIL", n, label,
              secs, note.c_str());
}

Algebra two_points() {
  return make_algebra({"p1", "p2"}, Mat::col({1, 1}), {{0, 0, 0, 1}, {1, 1, 1, 1}});
}

FrobeniusStructure diagonal_frob() {
  return {two_points(),
          Mat::from_rows({{1, 1}}),
          {{Mat::col({1, 0}), Mat::col({1, 0})},
           {Mat::col({0, 1}), Mat::col({0, 1})}}};
}

WeakBialgebra groupoid2() {
  Mat comult(4, 2);
  comult.at(0, 0) = 1;
  comult.at(3, 1) = 1;
  return {two_points(), comult, Mat::from_rows({{1, 1}})};
}

ModuleAlgebra componentwise_action() {
  Mat act(2, 4);
  act.at(0, 0) = 1;
  act.at(1, 3) = 1;
  return {two_points(), act};
}

SfWeakDl two_point_sf() {
  Algebra k = ground();
  Wdl triv{k, k, Mat::identity(1)};
  DirectSumWdl two = direct_sum_wdl({triv, triv});
  Algebra r2 = two_points();
  FrobeniusStructure frob = diagonal_frob();
  AlgebraHom ea{r2, two.law.A, Mat::identity(2)};
  AlgebraHom eb{r2, two.law.B, Mat::identity(2)};
  QuotientSpace ab = tensor_over_R(right_module_along(ea), left_module_along(eb), frob);
  QuotientSpace ba = tensor_over_R(right_module_along(eb), left_module_along(ea), frob);
  return sf_weak_dl(two.law.A, two.law.B, ea, eb, ba.proj * two.law.psi * ab.incl,
                    frob);
}

// the six fixture laws of the identity suite
std::vector<Wdl> fixture_laws() {
  std::vector<Wdl> laws;
  laws.push_back({kz2(), kz2(), t3_psi()});             // triangle
  laws.push_back({kz2(), kz2(), Mat::swap(2, 2)});      // swap
  laws.push_back(
      e_extension(t3(), Scalar(1, 2) * Mat::col({1, 0, 1}), kz2()).law);  // e-ext
  Wdl sw{kz2(), kz2(), Mat::swap(2, 2)};
  laws.push_back(direct_sum_wdl({sw, sw}).law);         // dirsum
  laws.push_back(smash_wdl(groupoid2(), componentwise_action()).law);  // smash
  laws.push_back(two_point_sf().law);                   // sF
  return laws;
}

bool has_failure_with_witness(const Report& r) {
  for (const auto& c : r.checks())
    if (!c.pass && c.witness && c.witness->lhs != c.witness->rhs) return true;
  return false;
}

}  // namespace

int main() {
  criterion(1, "triangle reproduction", 1.0, [](auto expect) {
    auto [f, w] = triangle_fixture();
    const Mat pi = pi_of(f);
    expect(pi.columns(3, 1) == Mat::col({-1, -1, -1}));
    expect(f.iota == Scalar(1, 4) * Mat::from_rows({{3, -1, -1},
                                                    {-1, 3, -1},
                                                    {-1, -1, 3},
                                                    {-1, -1, -1}}));
    expect(w.psi == Scalar(1, 4) * Mat::from_rows({{3, -1, -1, -5},
                                                   {-1, -1, 3, 3},
                                                   {-1, 3, -1, 3},
                                                   {-1, -1, -1, -1}}));
    expect(w.psi.columns(3, 1) == Scalar(1, 4) * Mat::col({-5, 3, 3, -1}));
    WreathProduct wp = weak_wreath(w);
    expect(wp.product.dim == 3);
    const Mat fwd = wp.splitting.proj * f.iota;
    const Mat bwd = pi * wp.splitting.incl;
    expect(certify_iso(f.R, wp.product, fwd, bwd).ok());
  });

  criterion(2, "core identity suite on all fixture laws", 5.0, [](auto expect) {
    for (const Wdl& w : fixture_laws()) {
      expect(check_wdl(w).ok());
      expect(check_wdl_alt(w).ok());
      Report rep;
      const Mat pb = psibar_verified(w, &rep);  // all idempotent identities
      expect(rep.ok());
      expect(pb == psibar(w));
      expect(pb * w.psi == w.psi);
      expect(pb * pb == pb);
      Splitting sp = split_idempotent(pb);
      expect(sp.proj * sp.incl == Mat::identity(sp.rank()));
      expect(sp.incl * sp.proj == pb);
    }
  });

  criterion(3, "object-level roundtrips", 0, [](auto expect) {
    for (const Wdl& w : fixture_laws()) expect(roundtrip_object(w).ok());
    expect(roundtrip_fact(triangle_fact()).ok());
  });

  criterion(4, "strict-case degeneration", 0, [](auto expect) {
    std::vector<Wdl> strict;
    strict.push_back({kz2(), kz2(), Mat::swap(2, 2)});
    strict.push_back(e_extension(kz2(), kz2().unit, kz2()).law);
    strict.push_back(subalgebra_refinement(fixture_laws()[2]).law);
    for (const Wdl& w : strict) {
      expect(is_strict(w));
      expect(psibar(w) == Mat::identity(w.B.dim * w.A.dim));
      WreathProduct wp = weak_wreath(w);
      expect(wp.product.dim == w.B.dim * w.A.dim);
      expect(wp.product.mult == wp.mu);
      expect(wp.product.unit == kron(w.B.unit, w.A.unit));
      Refinement r = subalgebra_refinement(w);
      expect(r.strict);
      expect(r.diagrams.ok());
      expect(check_strict_dl(w).ok());
    }
  });

  criterion(5, "direct sum against blockwise and base-ring forms", 0, [](auto expect) {
    Wdl sw{kz2(), kz2(), Mat::swap(2, 2)};
    DirectSumWdl ds = direct_sum_wdl({sw, sw});
    expect(certify_iso(weak_wreath(ds.law).product, ds.blockwise, ds.fwd, ds.bwd).ok());
    Algebra z2 = kz2(), r2 = two_points();
    FrobeniusStructure frob = diagonal_frob();
    AlgebraHom ea{r2, ds.law.A, hconcat(ds.a.inj[0] * z2.unit, ds.a.inj[1] * z2.unit)};
    AlgebraHom eb{r2, ds.law.B, hconcat(ds.b.inj[0] * z2.unit, ds.b.inj[1] * z2.unit)};
    QuotientSpace ab =
        tensor_over_R(right_module_along(ea), left_module_along(eb), frob);
    QuotientSpace ba =
        tensor_over_R(right_module_along(eb), left_module_along(ea), frob);
    SfWeakDl sf = sf_weak_dl(ds.law.A, ds.law.B, ea, eb,
                             ba.proj * ds.law.psi * ab.incl, frob);
    expect(sf.law.psi == ds.law.psi);
  });

  criterion(6, "separable frobenius base", 0, [](auto expect) {
    SfWeakDl sf = two_point_sf();
    expect(psibar(sf.law) == sf.ba.incl * sf.ba.proj);
    expect(rank(psibar(sf.law)) == sf.ba.dim);
  });

  criterion(7, "weak bialgebra and smash product", 0, [](auto expect) {
    WeakBialgebra g2 = groupoid2();
    expect(validate_weak_bialgebra(g2).ok());
    ModuleAlgebra m = componentwise_action();
    expect(validate_module_algebra(g2, m).ok());
    SmashWdl sm = smash_wdl(g2, m);
    expect(check_wdl(sm.law).ok());
    expect(sm.law.psi == sm.sf.law.psi);
  });

  criterion(8, "quasi-derivation law up to degree six", 10.0, [](auto expect) {
    PQQuasiDerivation d = ut2_qd();
    expect(validate_pqqd(d).ok());
    expect(ore_check_properties(d, 6).ok());
    OreTildeBasis tb = ore_tilde_basis(d, 6);  // includes both unit-insertion
    expect(tb.checks.ok());                    // diagrams and the power identity
    for (std::size_t n = 0; n <= 6; ++n)
      for (std::size_t b = 0; b < d.B.dim; ++b)
        expect(ore_psi(d, n, d.B.basis_vec(b)).length() <= n + 2);
  });

  criterion(9, "negative paths with replayable witnesses", 0, [](auto expect) {
    // broken unit axiom: g * 1 = 1 instead of g
    Algebra broken_unit =
        make_algebra({"1", "g"}, Mat::col({1, 0}),
                     {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 0, 1}, {1, 1, 0, 1}});
    Report ru = validate_algebra(broken_unit);
    expect(!ru.ok());
    expect(has_failure_with_witness(ru));
    for (const auto& c : ru.checks())
      if (c.name == "alg/unit-right" && !c.pass && c.witness) {
        // replay the identity at the witness coordinates
        const Mat lhs = broken_unit.mult * kron(broken_unit.id(), broken_unit.unit);
        expect(lhs.at(c.witness->row, c.witness->domain_index[0]) == c.witness->lhs);
        expect(Mat::identity(2).at(c.witness->row, c.witness->domain_index[0]) ==
               c.witness->rhs);
      }

    // broken section: iota sends 1 to the bare tensor 1 (x) 1
    BilinFact bf = triangle_fact();
    for (std::size_t i = 0; i < 4; ++i) bf.iota.at(i, 0) = i == 0 ? 1 : 0;
    Report rs = validate_fact(bf);
    expect(!rs.ok());
    expect(has_failure_with_witness(rs));

    // broken nilpotency: q replaced by the idempotent corner
    PQQuasiDerivation bq = ut2_qd();
    bq.q = bq.p;
    Report rn = validate_pqqd(bq);
    expect(!rn.ok());
    expect(has_failure_with_witness(rn));

    // perturbed zeta on the carrier-permuting cell
    Wdl w{kz2(), kz2(), t3_psi()};
    WdlOneCell cell{w, w, 2, Mat::swap(2, 2), Mat::swap(2, 2)};
    for (std::size_t i = 0; i < cell.zeta.rows(); ++i)
      std::swap(cell.zeta.at(i, 1), cell.zeta.at(i, 2));
    Report rz = check_wdl_onecell(cell);
    expect(!rz.ok());
    expect(has_failure_with_witness(rz));

    // determinism: re-running a failing validation reproduces the report
    expect(to_json(validate_algebra(broken_unit)) == to_json(ru));
  });

  criterion(10, "morphism cells", 0, [](auto expect) {
    Wdl w{kz2(), kz2(), t3_psi()};
    expect(check_wdl_onecell(identity_onecell(w)).ok());
    BilinFact f = fact_of_wdl(w);
    expect(check_fact_onecell(identity_onecell(f)).ok());
    expect(check_2cell(Mat::identity(2),
                       WdlOneCell{w, w, 2, Mat::swap(2, 2), Mat::swap(2, 2)},
                       WdlOneCell{w, w, 2, Mat::swap(2, 2), Mat::swap(2, 2)})
               .ok());
    // reconstruct rho over the nontrivial carrier-permuting cell, then
    // forget it again: the identity on cells
    WdlOneCell braid{w, w, 2, Mat::swap(2, 2), Mat::swap(2, 2)};
    FactOneCell lifted = rho_from(braid, f, f);
    expect(check_fact_onecell(lifted).ok());
    WdlOneCell back = F_on_cells(lifted);
    expect(back.xi == braid.xi);
    expect(back.zeta == braid.zeta);
    expect(back.v == braid.v);
  });

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
