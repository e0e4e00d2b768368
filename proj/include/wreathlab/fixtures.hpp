#pragma once

#include "wreathlab/factorization.hpp"
#include "wreathlab/ore.hpp"

namespace wreathlab {
namespace fixtures {

/// The ground field as a one-dimensional algebra.
inline Algebra ground() {
  return make_algebra({"1"}, Mat::col({1}), {{0, 0, 0, 1}});
}

/// Group algebra of the two-element group: basis {1, g}, g^2 = 1.
inline Algebra kz2() {
  return make_algebra({"1", "g"}, Mat::col({1, 0}),
                      {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}});
}

/// Three-dimensional algebra on {1, a, b} with a^2 = b^2 = 1,
/// ab = a + b - 1 and ba = -(a + b + 1). Realized by upper triangular
/// 2x2 matrices; target of the two maps g -> a and g -> b below.
inline Algebra t3() {
  return make_algebra({"1", "a", "b"}, Mat::col({1, 0, 0}),
                      {
                          {0, 0, 0, 1},
                          {0, 1, 1, 1},
                          {0, 2, 2, 1},
                          {1, 0, 1, 1},
                          {2, 0, 2, 1},
                          {1, 1, 0, 1},  // a^2 = 1
                          {2, 2, 0, 1},  // b^2 = 1
                          {1, 2, 0, -1}, // ab = -1 + a + b
                          {1, 2, 1, 1},
                          {1, 2, 2, 1},
                          {2, 1, 0, -1}, // ba = -1 - a - b
                          {2, 1, 1, -1},
                          {2, 1, 2, -1},
                      });
}

/// g -> a, as a map from kz2 into t3.
inline AlgebraHom t3_alpha() {
  return {kz2(), t3(), Mat::from_rows({{1, 0}, {0, 1}, {0, 0}})};
}

/// g -> b.
inline AlgebraHom t3_beta() {
  return {kz2(), t3(), Mat::from_rows({{1, 0}, {0, 0}, {0, 1}})};
}

/// The bimodule section t3 -> kz2 (x) kz2; columns are the images of
/// 1, a, b in the basis (1(x)1, 1(x)g, g(x)1, g(x)g).
inline Mat t3_iota() {
  return Scalar(1, 4) * Mat::from_rows({{3, -1, -1},
                                        {-1, 3, -1},
                                        {-1, -1, 3},
                                        {-1, -1, -1}});
}

/// The 4x4 law kz2 (x) kz2 -> kz2 (x) kz2 whose wreath product is t3.
/// Columns are the images of 1(x)1, 1(x)g, g(x)1, g(x)g.
inline Mat t3_psi() {
  return Scalar(1, 4) * Mat::from_rows({{3, -1, -1, -5},
                                        {-1, -1, 3, 3},
                                        {-1, 3, -1, 3},
                                        {-1, -1, -1, -1}});
}

/// The triangle datum: t3 factorized through two copies of kz2.
inline BilinFact triangle_fact() {
  return {kz2(), kz2(), t3(), t3_alpha(), t3_beta(), t3_iota()};
}

/// Upper triangular 2x2 matrices, basis {e11, e12, e22}.
inline Algebra ut2() {
  return make_algebra({"e11", "e12", "e22"}, Mat::col({1, 0, 1}),
                      {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}});
}

/// The corner quasi-derivation on ut2: p = e11, q = e12, sigma the corner
/// projection and delta the shift of the corner entry into the strip.
inline PQQuasiDerivation ut2_qd() {
  return {ut2(), Mat::col({1, 0, 0}), Mat::col({0, 1, 0}),
          Mat::from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}),
          Mat::from_rows({{0, 0, 0}, {1, 0, 0}, {0, 0, 0}})};
}

/// The classical quasi-derivation on b with the identity endomorphism and
/// the zero derivation: p = 1, q = 0.
inline PQQuasiDerivation classical_qd(const Algebra& b) {
  return {b, b.unit, Mat(b.dim, 1), b.id(), Mat(b.dim, b.dim)};
}

/// The strict factorization of the tensor algebra on B (x) A, with the
/// canonical corner maps and the identity section.
inline BilinFact tensor_fact(const Algebra& a, const Algebra& b) {
  Algebra r = tensor_algebra(b, a);
  AlgebraHom alpha{a, r, kron(b.unit, a.id())};
  AlgebraHom beta{b, r, kron(b.id(), a.unit)};
  return {a, b, r, alpha, beta, r.id()};
}

}  // namespace fixtures
}  // namespace wreathlab
