#pragma once

#include "wreathlab/linalg.hpp"
#include "wreathlab/report.hpp"

namespace wreathlab {

/// Finite-dimensional unital associative algebra over Q, given by structure
/// constants. mult is the multiplication as a single linear map on the
/// tensor square (column (i,j) of mult holds the coordinates of e_i * e_j),
/// unit the coordinates of the unit element. Nothing is verified on
/// construction; validate_algebra checks the axioms.
struct Algebra {
  std::size_t dim = 0;
  std::vector<std::string> basis;  // labels, for witnesses; size dim
  Mat mult;                        // dim x dim^2
  Mat unit;                        // dim x 1

  Mat id() const { return Mat::identity(dim); }

  /// Left multiplication by the element with coordinate vector x.
  Mat left_mult(const Mat& x) const { return mult * kron(x, id()); }
  Mat right_mult(const Mat& x) const { return mult * kron(id(), x); }

  Mat basis_vec(std::size_t i) const {
    Mat v(dim, 1);
    v.at(i, 0) = 1;
    return v;
  }
};

/// Convenience constructor from a sparse list of structure constants:
/// each entry {i, j, k, c} says e_i * e_j contains c * e_k. Unlisted
/// coefficients are zero.
struct MultTriple {
  std::size_t i, j, k;
  Scalar c;
};
Algebra make_algebra(std::vector<std::string> basis, const Mat& unit,
                     const std::vector<MultTriple>& triples);

struct AlgebraHom {
  Algebra src, dst;
  Mat map;  // dst.dim x src.dim
};

/// A space carrying a left action of one algebra and a right action of
/// another, the two commuting. Actions are linear maps on tensor products:
/// left_action : B (x) N -> N,  right_action : N (x) A -> N.
struct BimoduleStructure {
  Algebra left_alg, right_alg;
  std::size_t dim = 0;  // carrier
  Mat left_action;      // dim x (left_alg.dim * dim)
  Mat right_action;     // dim x (dim * right_alg.dim)
};

/// Checks associativity and both unit laws. Empty report iff the data is a
/// unital associative algebra; failures carry basis witnesses.
Report validate_algebra(const Algebra& a);

/// Checks that f is multiplicative and unital.
Report is_algebra_hom(const Mat& f, const Algebra& src, const Algebra& dst);
inline Report is_algebra_hom(const AlgebraHom& h) {
  return is_algebra_hom(h.map, h.src, h.dst);
}

struct DirectSum {
  Algebra sum;
  std::vector<Mat> inj;   // summand i -> sum; multiplicative, not unital
  std::vector<Mat> proj;  // sum -> summand i
};

/// Block-diagonal multiplication; the unit is the sum of the summand units.
/// Basis labels are prefixed with the summand index.
DirectSum direct_sum(const std::vector<Algebra>& parts);

/// Factorwise multiplication on A (x) B, unit 1_A (x) 1_B.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);

struct ImageSubalgebra {
  Algebra image;      // in its own pivot basis
  Mat inclusion;      // image -> dst, injective multiplicative
  Mat corestriction;  // src -> image, surjective; inclusion*corestriction = f
};

/// The image of an algebra map, re-expressed in a pivot basis with its own
/// structure constants. The image unit is f(1), which need not be the unit
/// of the codomain. Throws CheckFailed when f is not a hom.
ImageSubalgebra image_subalgebra(const AlgebraHom& f);

/// R as a bimodule over the sources of beta (left) and alpha (right):
/// b . r = beta(b) r and r . a = r alpha(a). Throws CheckFailed when either
/// map fails is_algebra_hom.
BimoduleStructure induced_bimodule(const Algebra& r, const AlgebraHom& alpha,
                                   const AlgebraHom& beta);

/// Checks both action axioms on each side and that the actions commute.
Report validate_bimodule(const BimoduleStructure& m);

/// B (x) A with b acting by multiplication on the left leg and a on the
/// right leg.
BimoduleStructure outer_bimodule(const Algebra& b, const Algebra& a);

/// Checks that f intertwines the left and the right actions.
Report is_bimodule_map(const Mat& f, const BimoduleStructure& src,
                       const BimoduleStructure& dst);

}  // namespace wreathlab
