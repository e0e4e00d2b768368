#pragma once

#include "wreathlab/wdl.hpp"

namespace wreathlab {

/// A bilinear factorization of R through A and B: algebra maps
/// alpha : A -> R and beta : B -> R such that pi := mu_R (beta (x) alpha)
/// splits as a map of B-A bimodules, with chosen section iota. pi itself is
/// derived, never stored.
struct BilinFact {
  Algebra A, B, R;
  AlgebraHom alpha, beta;
  Mat iota;  // (dim B * dim A) x dim R
};

/// pi = mu_R (beta (x) alpha) : B (x) A -> R. Asserts it is a map of B-A
/// bimodules (it always is for valid homs); throws CheckFailed otherwise.
Mat pi_of(const BilinFact& f);

/// All structure invariants: alpha, beta are algebra homs; pi iota = id_R;
/// iota intertwines the left B- and right A-actions.
Report validate_fact(const BilinFact& f);

/// Psi := iota mu_R (alpha (x) beta). Asserts check_wdl passes, that the
/// canonical idempotent equals iota pi, and that iota mu_R (pi (x) pi)
/// equals the non-unital multiplication on B (x) A.
Wdl wdl_of_fact(const BilinFact& f);

/// The wreath product of w as a bilinear factorization: R is the retract
/// algebra with its alpha, beta, and iota = the splitting's inclusion.
BilinFact fact_of_wdl(const Wdl& w);

/// Certifies that fwd and bwd are mutually inverse unital algebra
/// isomorphisms between src and dst.
Report certify_iso(const Algebra& src, const Algebra& dst, const Mat& fwd,
                   const Mat& bwd);

/// Object-level roundtrips: recovering psi exactly from its own wreath
/// factorization, and the two certified isomorphisms between R and the
/// wreath product of the induced law.
Report roundtrip_object(const Wdl& w);
Report roundtrip_fact(const BilinFact& f);

}  // namespace wreathlab
