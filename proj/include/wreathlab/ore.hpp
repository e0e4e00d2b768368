#pragma once

#include <vector>

#include "wreathlab/algebra.hpp"

namespace wreathlab {

/// A (p, q)-quasi-derivation on B: elements p, q with
///   p^2 = p, q^2 = 0, pq = q, qp = 0, pbp = bp,
/// an algebra endomorphism sigma with sigma(1) = sigma(p) = p, sigma(q) = 0,
/// and a map delta with delta(bb') = sigma(b)delta(b') + delta(b)b'p,
/// delta(1) = delta(p) = q, delta(q) = 0. The case (p, q) = (1, 0) is the
/// classical quasi-derivation. Nothing is verified on construction.
struct PQQuasiDerivation {
  Algebra B;
  Mat p, q;      // columns, B.dim x 1
  Mat sigma, delta;  // B.dim x B.dim
};

/// Every defining identity, each as one exact check with a basis witness.
Report validate_pqqd(const PQQuasiDerivation& d);

/// p = 1 and q = 0: the data is a classical quasi-derivation.
bool is_classical(const PQQuasiDerivation& d);

/// A polynomial with coefficients in B, stored as the list of coefficient
/// vectors by degree with trailing zeros trimmed. The same representation
/// serves both sides of the law: coefficients are always indexed by the
/// power of the variable they multiply.
struct OrePoly {
  std::size_t bdim = 0;
  std::vector<Mat> coeff;  // coeff[n] : bdim x 1

  static OrePoly zero(std::size_t bdim) { return {bdim, {}}; }
  static OrePoly monomial(const Mat& b, std::size_t n);

  /// Coefficient of the n-th power; zero column beyond the stored degree.
  Mat at(std::size_t n) const;
  std::size_t length() const { return coeff.size(); }  // degree + 1; 0 if zero
  bool is_zero() const { return coeff.empty(); }
  void trim();

  OrePoly operator+(const OrePoly& o) const;
  bool operator==(const OrePoly& o) const;
  bool operator!=(const OrePoly& o) const { return !(*this == o); }

  /// Multiplication by the n-th power of the variable on the polynomial leg.
  OrePoly shifted(std::size_t n) const;

  /// The coefficients stacked into one column of len blocks (len must cover
  /// the degree); used for exact rank and membership computations.
  Mat flatten(std::size_t len) const;
};

/// The maps b -> (coefficients of psi(X^n (x) b)) for n = 0..n_max:
/// result[n][i] * b is the coefficient of the i-th power, i <= n+1.
/// Built by the three defining clauses:
///   psi(1 (x) b)   = bq (x) X + bp (x) 1,
///   psi(X (x) b)   = sigma(b)q (x) X^2 + (sigma(b)+delta(b)q) (x) X
///                    + delta(b)p (x) 1,
///   psi(X^{n+1} (x) b) = psi(X^n (x) sigma(b)) X + psi(X^n (x) delta(b)).
std::vector<std::vector<Mat>> ore_psi_maps(const PQQuasiDerivation& d,
                                           std::size_t n_max);

/// psi(X^n (x) b) as a polynomial with B-coefficients; its degree is at
/// most n+1 by construction.
OrePoly ore_psi(const PQQuasiDerivation& d, std::size_t n, const Mat& b);

/// The four law properties, exactly, for all basis elements and all degrees
/// up to n_max, plus associativity of the induced multiplication on all
/// monomial triples:
///   "ore/absorb-p"  psi(X^n (x) bp) = psi(X^n (x) b)
///   "ore/kill-q"    psi(X^n (x) bq) = 0
///   "ore/weak-unit" b psi(X^n (x) 1) = psi(1 (x) b) X^n
///   "ore/mult-X"    composing over X^n (x) X^m agrees with psi at X^{n+m}
///   "ore/mult-B"    composing over b (x) b' agrees with psi at bb'
///   "ore/assoc"     ((f g) h) = (f (g h)) on monomials
/// Failing checks carry a replayable witness (degrees and basis indices).
/// No validity of d is assumed, so broken inputs can be diagnosed.
Report ore_check_properties(const PQQuasiDerivation& d, std::size_t n_max);

/// The multiplication induced by psi on B-coefficient polynomials:
/// (b' (x) X^m)(b (x) X^n) = b' psi(X^m (x) b) X^n, extended bilinearly.
OrePoly ore_wreath_mult(const PQQuasiDerivation& d, const OrePoly& f,
                        const OrePoly& g);

/// The graded canonical idempotent b (x) X^n -> b psi(X^n (x) 1).
OrePoly ore_smoothing(const PQQuasiDerivation& d, const OrePoly& f);

struct OreTildeBasis {
  std::vector<OrePoly> generators;  // one per basis element of B
  std::vector<OrePoly> powers;      // psi(X^n (x) 1), n = 0..n_max
  Report checks;
};

/// The two distinguished families inside the induced algebra: the
/// generators b(q (x) X + p (x) 1) and the powers psi(X^n (x) 1), together
/// with the report of the structural checks:
///   "tilde/subalgebra"       generator products realize the product in B
///   "tilde/unit"             psi(1 (x) 1) is a two-sided unit on the image
///   "tilde/power-of-x"       psi(X (x) 1)^n = psi(X^n (x) 1)
///   "tilde/translate"        generator * power = smoothing of b (x) X^n
///   "tilde/independent"      generator-basis times powers is free
///   "tilde/span"             every smoothed monomial lies in their span
///   "tilde/x-normalizes"     X b~ falls in B~ X + B~
///   "tilde/idempotent"       the smoothing squares to itself
///   "tilde/strict-diagram-A" / "-B"  both unit-insertion diagrams commute
OreTildeBasis ore_tilde_basis(const PQQuasiDerivation& d, std::size_t n_max);

}  // namespace wreathlab
