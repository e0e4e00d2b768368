#include "wreathlab/linalg.hpp"

namespace wreathlab {

Mat rref(const Mat& m, std::vector<std::size_t>* pivots) {
  Mat a = m;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    // first nonzero entry in this column at or below `lead`
    std::size_t piv = lead;
    while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(lead, j));
    Scalar inv = Scalar(1) / a.at(lead, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(lead, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead || a.at(i, col) == 0) continue;
      Scalar f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(lead, j);
    }
    if (pivots) pivots->push_back(col);
    ++lead;
  }
  return a;
}

std::size_t rank(const Mat& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

Mat solve(const Mat& m, const Mat& rhs) {
  if (m.rows() != rhs.rows())
    throw DimensionMismatch("solve: " + m.shape() + " vs rhs " + rhs.shape());
  std::vector<std::size_t> pivots;
  Mat r = rref(hconcat(m, rhs), &pivots);
  Mat x(m.cols(), rhs.cols());
  std::size_t row = 0;
  for (std::size_t p : pivots) {
    if (p >= m.cols())
      throw NoSolution("solve: inconsistent system");
    for (std::size_t j = 0; j < rhs.cols(); ++j) x.at(p, j) = r.at(row, m.cols() + j);
    ++row;
  }
  return x;
}

Mat kernel_basis(const Mat& m) {
  std::vector<std::size_t> pivots;
  Mat r = rref(m, &pivots);
  std::vector<std::size_t> free_cols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (pi < pivots.size() && pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Mat k(m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t fc = free_cols[j];
    k.at(fc, j) = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row)
      k.at(pivots[row], j) = -r.at(row, fc);
  }
  return k;
}

Mat column_space_basis(const Mat& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  Mat b(m.rows(), pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) b.at(i, j) = m.at(i, pivots[j]);
  return b;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of " + m.shape());
  std::vector<std::size_t> pivots;
  Mat r = rref(hconcat(m, Mat::identity(m.rows())), &pivots);
  if (pivots.size() != m.rows() || (!pivots.empty() && pivots.back() >= m.cols()))
    throw NoSolution("inverse: singular matrix");
  return r.columns(m.cols(), m.cols());
}

Splitting split_idempotent(const Mat& e) {
  if (e.rows() != e.cols()) throw NotIdempotent("split_idempotent: not square: " + e.shape());
  if (e * e != e) throw NotIdempotent("split_idempotent: E*E != E");
  Splitting s;
  s.idempotent = e;
  s.incl = column_space_basis(e);
  s.proj = solve(s.incl, e);  // unique: incl has full column rank
  return s;
}

}  // namespace wreathlab
