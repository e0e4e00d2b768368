#pragma once

#include <optional>
#include <utility>

#include "wreathlab/factorization.hpp"
#include "wreathlab/rmod.hpp"

namespace wreathlab {

/// The distinguished element passed to e_extension fails e a = e a e; the
/// witness is the index of the first offending basis element.
struct BadIdempotent : std::runtime_error {
  std::size_t witness;
  BadIdempotent(const std::string& msg, std::size_t w)
      : std::runtime_error(msg), witness(w) {}
};

/// Like check_wdl plus the two strict unit conditions
/// "strict/unit-A": psi (A (x) eta_B) = eta_B (x) A and
/// "strict/unit-B": psi (eta_A (x) B) = B (x) eta_A.
Report check_strict_dl(const Wdl& w);

/// The subalgebra cut out by an idempotent linear map e_map : H -> H whose
/// image is closed under multiplication; the image unit is e_map(1). Throws
/// NotIdempotent, NoSolution (image not closed), or CheckFailed (not an
/// associative unital algebra).
ImageSubalgebra split_subalgebra(const Algebra& h, const Mat& e_map);

/// Same carrier, multiplication read in the opposite order.
Algebra opposite_algebra(const Algebra& a);

/// Extension of a strict law on eA (x) B along an element e with ea = eae:
/// the law a (x) b -> Phi(ea (x) b), whose wreath product is the strict
/// wreath product of Phi on B (x) eA. With Phi omitted the flip
/// a (x) b -> b (x) ea is used and the wreath product is the tensor algebra.
struct EExtension {
  Wdl law;                 // on A (x) B
  ImageSubalgebra ea;      // eA inside A, unit e
  WreathProduct wreath;    // of law
  Algebra strict_product;  // B with eA under Phi
  Mat fwd, bwd;            // certified iso wreath.product <-> strict_product
};
EExtension e_extension(const Algebra& a, const Mat& e, const Algebra& b,
                       const std::optional<Mat>& phi = std::nullopt);

/// Refinement of a law to the images of the two canonical maps into its
/// wreath product: an always-valid factorization through injective
/// homomorphisms, strict precisely when the two unit-insertion diagrams
/// (evaluated on the original law, reported in `diagrams`) commute.
struct Refinement {
  WreathProduct wreath;       // of the input law
  BilinFact fact;             // on (Atilde, Btilde, R = wreath.product)
  Wdl law;                    // the refined law
  AlgebraHom a_onto, b_onto;  // A ->> Atilde, B ->> Btilde
  Report diagrams;            // "subalg/unit-via-A", "subalg/unit-via-B"
  bool strict = false;        // diagrams.ok(), cross-checked against the law
};
Refinement subalgebra_refinement(const Wdl& w);

/// The blockwise law a_i (x) b_j -> delta_ij psi_i(a_i (x) b_i) on direct
/// sums of strict laws; its wreath product is certified isomorphic to the
/// direct sum of the summand wreath products, and the whole construction is
/// cross-checked against sf_weak_dl over the diagonal of ground fields.
struct DirectSumWdl {
  Wdl law;
  DirectSum a, b;     // the two ambient sums
  Algebra blockwise;  // direct sum of the summand wreath products
  Mat fwd, bwd;       // certified iso weak wreath <-> blockwise
};
DirectSumWdl direct_sum_wdl(const std::vector<Wdl>& laws);

/// A distributive law over a separable Frobenius base algebra R, presented
/// on the canonical quotient coordinates of tensor_over_R, smoothed to a
/// weak law over the ground field: psi = incl . phi_r . proj. The canonical
/// idempotent is exactly incl . proj, so the wreath product is certified
/// isomorphic to the induced algebra on the quotient B (x)_R A.
struct SfWeakDl {
  Wdl law;
  QuotientSpace ab, ba;  // A (x)_R B and B (x)_R A
  Algebra product_r;     // B (x)_R A with the phi_r-induced multiplication
  WreathProduct wreath;  // of law
  Mat fwd, bwd;          // certified iso wreath.product <-> product_r
};
SfWeakDl sf_weak_dl(const Algebra& a, const Algebra& b, const AlgebraHom& eta_a,
                    const AlgebraHom& eta_b, const Mat& phi_r,
                    const FrobeniusStructure& s);

/// A weak bialgebra: algebra and coalgebra with multiplicative
/// comultiplication, the counit and the comultiplication of the unit
/// subject to the weak axioms checked by validate_weak_bialgebra.
struct WeakBialgebra {
  Algebra H;
  Mat comult;  // H.dim^2 x H.dim
  Mat counit;  // 1 x H.dim
};

/// cap(h) = 1_1 eps(h 1_2), capbar(h) = eps(h 1_1) 1_2.
struct CapMaps {
  Mat cap, capbar;
};
CapMaps cap_maps(const WeakBialgebra& w);

/// All axioms plus the standard identity list for the two cap maps, and the
/// separable Frobenius structure on the opposite of the image of capbar
/// (merged under "base/").
Report validate_weak_bialgebra(const WeakBialgebra& w);

/// The base algebra of a weak bialgebra: the image of capbar with the
/// opposite multiplication, its separable Frobenius structure (counit
/// restricted; dual basis from capbar (x) id applied to comult(1)), and the
/// algebra map into H given by cap.
struct CapBase {
  CapMaps caps;
  ImageSubalgebra sub;  // image of capbar inside H
  Algebra r;            // the opposite algebra on that carrier
  FrobeniusStructure frob;
  AlgebraHom into_h;  // r -> H
};
CapBase cap_base(const WeakBialgebra& w);

/// A right module algebra: an algebra with a right H-action such that the
/// multiplication is H-linear for the diagonal action and the unit absorbs
/// capbar.
struct ModuleAlgebra {
  Algebra A;
  Mat action;  // A.dim x (A.dim * H.dim)
};
Report validate_module_algebra(const WeakBialgebra& w, const ModuleAlgebra& m);

/// The smash-product law a (x) h -> h_1 (x) a <- h_2, together with its
/// realization over the cap base algebra; the two laws are verified equal.
struct SmashWdl {
  Wdl law;  // A (x) H -> H (x) A
  CapBase base;
  SfWeakDl sf;  // sf.law.psi == law.psi, asserted
};
SmashWdl smash_wdl(const WeakBialgebra& w, const ModuleAlgebra& m);

/// The hard-coded three-dimensional factorization datum through two copies
/// of the order-two group algebra, fully re-certified on each call.
std::pair<BilinFact, Wdl> triangle_fixture();

}  // namespace wreathlab
