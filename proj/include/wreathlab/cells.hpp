#pragma once

#include "wreathlab/factorization.hpp"

namespace wreathlab {

/// A monad morphism from src to dst along a carrier of dimension v:
/// xi : src (x) V -> V (x) dst, multiplicative and unital in the sense of
/// check_monad_morph. The familiar case v = 1 is an algebra map.
struct MonadMorphCell {
  Algebra src, dst;
  std::size_t v = 1;
  Mat xi;  // (v * dst.dim) x (src.dim * v)
};

/// "cell/mult": xi (mu_src (x) V) = (V (x) mu_dst)(xi (x) dst)(src (x) xi)
/// "cell/unit": xi (eta_src (x) V) = V (x) eta_dst
Report check_monad_morph(const MonadMorphCell& c);

/// A 1-cell of laws: monad morphisms xi (on the A side) and zeta (on the
/// B side) over a common carrier, compatible with the two laws through the
/// canonical idempotent of the target.
struct WdlOneCell {
  Wdl src, dst;
  std::size_t v = 1;
  Mat xi;    // A_src (x) V -> V (x) A_dst
  Mat zeta;  // B_src (x) V -> V (x) B_dst
};

/// Both constituents pass check_monad_morph (prefixed "xi/", "zeta/") and
/// "cell/law-compat":
///   (V(x)pb)(zeta(x)A)(B'(x)xi)(psi'(x)V) = (V(x)psi)(xi(x)B)(A'(x)zeta)
/// where pb is the canonical idempotent of the target law.
Report check_wdl_onecell(const WdlOneCell& c);

/// A 1-cell of factorizations: xi, zeta as above plus rho on the R side,
/// with rho restricting along alpha and beta to xi and zeta.
struct FactOneCell {
  BilinFact src, dst;
  std::size_t v = 1;
  Mat xi, zeta;
  Mat rho;  // R_src (x) V -> V (x) R_dst
};

/// The three monad-morphism reports plus the two restriction squares
/// "cell/alpha-square", "cell/beta-square".
Report check_fact_onecell(const FactOneCell& c);

/// Forgets rho; asserts the result passes check_wdl_onecell between the
/// derived laws (throws CheckFailed otherwise).
WdlOneCell F_on_cells(const FactOneCell& c);

/// On 2-cells the functor is the identity.
inline Mat F_on_2cell(const Mat& omega) { return omega; }

/// Reconstructs the R-component of a factorization 1-cell over c:
///   rho = (V (x) pi)(zeta (x) A)(B' (x) xi)(iota' (x) V),
/// where src_f, dst_f are factorizations inducing c's two laws. Asserts
/// that rho is a monad morphism and that the full triple passes
/// check_fact_onecell.
FactOneCell rho_from(const WdlOneCell& c, const BilinFact& src_f,
                     const BilinFact& dst_f);

/// The intertwiner condition (omega (x) dst)(xi) = xi'(src (x) omega) for
/// each constituent pair. The condition is linear in omega, so omega = 0 is
/// always a valid 2-cell.
Report check_2cell(const Mat& omega, const MonadMorphCell& s, const MonadMorphCell& d);
Report check_2cell(const Mat& omega, const WdlOneCell& s, const WdlOneCell& d);
/// For factorization cells the rho condition is implied by the others;
/// still evaluated, as a cross-check.
Report check_2cell(const Mat& omega, const FactOneCell& s, const FactOneCell& d);

/// The carrier-dimension-one specialization: a pair of algebra maps is a
/// 1-cell iff pb (zeta (x) xi) psi' = psi (xi (x) zeta). Also cross-checks
/// agreement with check_wdl_onecell at v = 1.
Report check_trivial_onecell(const AlgebraHom& xi, const AlgebraHom& zeta,
                             const Wdl& src, const Wdl& dst);

WdlOneCell identity_onecell(const Wdl& w);
FactOneCell identity_onecell(const BilinFact& f);

/// Horizontal composition: outer runs mid -> dst, inner runs src -> mid;
/// the composite carrier is inner.v * outer.v with no coherence data (all
/// tensor bookkeeping is strict in coordinates).
WdlOneCell hcompose(const WdlOneCell& outer, const WdlOneCell& inner);
FactOneCell hcompose(const FactOneCell& outer, const FactOneCell& inner);

}  // namespace wreathlab
