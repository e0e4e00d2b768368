#pragma once

#include "wreathlab/algebra.hpp"

namespace wreathlab {

/// Two redundant computation routes that must agree disagreed; means a
/// precondition check was bypassed or the library itself is broken.
struct InternalInconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A weak distributive law of A over B: a linear map psi : A (x) B -> B (x) A
/// compatible with both multiplications and weakly with the units
/// (check_wdl verifies the three defining identities).
struct Wdl {
  Algebra A, B;
  Mat psi;  // (dim B * dim A) x (dim A * dim B)
};

/// The three defining identities, each as one exact matrix equality:
///   wdl/mult-A    psi (mu_A (x) B) = (B (x) mu_A)(psi (x) A)(A (x) psi)
///   wdl/mult-B    psi (A (x) mu_B) = (mu_B (x) A)(B (x) psi)(psi (x) B)
///   wdl/weak-unit the two one-sided unit insertions agree on B (x) A
/// All failing identities are reported, each with a witness.
Report check_wdl(const Algebra& a, const Algebra& b, const Mat& psi);
inline Report check_wdl(const Wdl& w) { return check_wdl(w.A, w.B, w.psi); }

/// Equivalent reformulation of the weak-unit identity as two diagrams with
/// domains B and A ("wdl-alt/unit-via-B", "wdl-alt/unit-via-A"). For any
/// psi passing the two multiplicativity identities, this passes iff
/// wdl/weak-unit does; kept as an independent cross-check.
Report check_wdl_alt(const Algebra& a, const Algebra& b, const Mat& psi);
inline Report check_wdl_alt(const Wdl& w) { return check_wdl_alt(w.A, w.B, w.psi); }

/// The associative (generally non-unital) multiplication
/// (mu_B (x) mu_A)(B (x) psi (x) A) on B (x) A. Associativity is asserted;
/// throws CheckFailed if it fails.
Mat nonunital_mult(const Wdl& w);

/// The canonical idempotent on B (x) A, computed by the one-sided unit
/// insertion on the B side (fast path; no cross-validation).
Mat psibar(const Wdl& w);

/// Same value, computed three independent ways (both one-sided insertions
/// and the two-sided one through the non-unital multiplication); throws
/// InternalInconsistency if they disagree — that can only happen when w
/// failed check_wdl. Also verifies the identities the idempotent must
/// satisfy (absorption of psi, idempotence, one-sided linearity,
/// absorption into the multiplication on either side), appending them to
/// *rep when given, throwing CheckFailed otherwise.
Mat psibar_verified(const Wdl& w, Report* rep = nullptr);

/// A law is strict when the canonical idempotent is the identity; then the
/// wreath product below is the whole of B (x) A.
bool is_strict(const Wdl& w);

/// The retract of B (x) A along the split canonical idempotent, as a unital
/// algebra, together with the two algebra maps onto it.
struct WreathProduct {
  Wdl wdl;
  Mat mu;              // nonunital_mult on B (x) A
  Mat psibar;          // the canonical idempotent
  Splitting splitting; // proj/incl through the retract
  Algebra product;     // carrier dim = rank(psibar)
  AlgebraHom alpha;    // A -> product, a |-> proj(1_B (x) a)
  AlgebraHom beta;     // B -> product, b |-> proj(b (x) 1_A)
};

/// Builds the retract algebra and certifies it: the product passes
/// validate_algebra, alpha and beta are unital algebra maps,
/// mult(beta (x) alpha) = proj, and proj/incl are bimodule maps between
/// B (x) A and the retract. Throws CheckFailed on any violation.
WreathProduct weak_wreath(const Wdl& w);

}  // namespace wreathlab
