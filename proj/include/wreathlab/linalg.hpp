#pragma once

#include "wreathlab/mat.hpp"

namespace wreathlab {

struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotIdempotent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Splitting of an idempotent E through Q^r, r = rank(E):
///   proj * incl = identity(r),  incl * proj = E.
struct Splitting {
  Mat idempotent;  // n x n
  Mat proj;        // r x n
  Mat incl;        // n x r
  std::size_t rank() const { return proj.rows(); }
};

/// Reduced row echelon form; pivot column indices are appended to *pivots
/// when non-null.
Mat rref(const Mat& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Mat& m);

/// Solves m * x = rhs (any number of right hand sides). Throws NoSolution
/// when some column of rhs is outside the column space of m. When the
/// solution is underdetermined, free variables are set to zero.
Mat solve(const Mat& m, const Mat& rhs);

/// Columns form a basis of ker(m) (one per free column, in column order).
Mat kernel_basis(const Mat& m);

/// Basis of the column space of m: the pivot columns of its column-reduced
/// form, in order. Deterministic.
Mat column_space_basis(const Mat& m);

Mat inverse(const Mat& m);

/// Splits a (checked) idempotent E deterministically: incl is the pivot
/// column basis of the column-reduced E, proj the unique solution of
/// incl * proj = E. Throws NotIdempotent when E*E != E.
Splitting split_idempotent(const Mat& e);

}  // namespace wreathlab
