#pragma once

#include <utility>

#include "wreathlab/algebra.hpp"

namespace wreathlab {

/// The Frobenius formula for the section of a quotient map failed to vanish
/// on the relation subspace; the supplied structure data is inconsistent.
struct IllDefinedSection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A separable Frobenius structure on R: a functional psi and an element
/// sum_i e_i (x) f_i of R (x) R with
///   sum_i psi(r e_i) f_i = r = sum_i e_i psi(f_i r)   for all r,
///   sum_i e_i f_i = 1.
/// Nothing is verified on construction; validate_frobenius checks all three.
struct FrobeniusStructure {
  Algebra R;
  Mat psi_functional;                          // 1 x R.dim
  std::vector<std::pair<Mat, Mat>> basis_pairs;  // columns (e_i, f_i)
};

/// "frob/left", "frob/right" are the two dual-basis identities,
/// "frob/separable" the splitting of the multiplication.
Report validate_frobenius(const FrobeniusStructure& s);

/// A right R-module: action : M (x) R -> M, associative and unital.
struct RightModule {
  Algebra R;
  std::size_t dim = 0;
  Mat action;  // dim x (dim * R.dim)
};

/// A left R-module: action : R (x) N -> N.
struct LeftModule {
  Algebra R;
  std::size_t dim = 0;
  Mat action;  // dim x (R.dim * dim)
};

Report validate_module(const RightModule& m);
Report validate_module(const LeftModule& n);

/// The codomain of an algebra map R -> A as a right (left) R-module, acting
/// through the map and the multiplication of A.
RightModule right_module_along(const AlgebraHom& eta);
LeftModule left_module_along(const AlgebraHom& eta);

/// The quotient M (x) N -> M (x)_R N together with its canonical section.
/// proj * incl = id; incl * proj is the smoothing idempotent
/// m (x) n -> sum_i m.e_i (x) f_i.n.
struct QuotientSpace {
  std::size_t ambient = 0, dim = 0;
  Mat proj;  // dim x ambient
  Mat incl;  // ambient x dim
};

/// Computes the cokernel of the span of { m.r (x) n - m (x) r.n } with a
/// deterministic pivot-based coordinate choice, and the section given by the
/// Frobenius formula. Throws IllDefinedSection when the formula does not
/// kill the relations (impossible once validate_frobenius passes).
QuotientSpace tensor_over_R(const RightModule& m, const LeftModule& n,
                            const FrobeniusStructure& s);

}  // namespace wreathlab
