#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "wreathlab/scalar.hpp"

namespace wreathlab {

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense matrix of exact rationals, thought of as a linear map acting on
/// column vectors: a Mat with r rows and c cols is a map Q^c -> Q^r.
///
/// Tensor products of spaces are always indexed lexicographically with the
/// left factor major: the basis vector e_i (x) e_j of X (x) Y has index
/// i*dim(Y) + j. Every construction involving tensor factors goes through
/// kron() below; index arithmetic is never done by hand elsewhere.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

  /// The flip X (x) Y -> Y (x) X on the lexicographic bases.
  static Mat swap(std::size_t dim_x, std::size_t dim_y) {
    Mat m(dim_x * dim_y, dim_x * dim_y);
    for (std::size_t i = 0; i < dim_x; ++i)
      for (std::size_t j = 0; j < dim_y; ++j)
        m.at(j * dim_x + i, i * dim_y + j) = 1;
    return m;
  }

  /// Row-by-row construction from integer literals, mostly for tests.
  static Mat from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size(), c = r ? rows.begin()->size() : 0;
    Mat m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionMismatch("ragged row list");
      std::size_t j = 0;
      for (long v : row) m.at(i, j++) = v;
      ++i;
    }
    return m;
  }

  /// Column vector from integer literals.
  static Mat col(std::initializer_list<long> entries) {
    Mat m(entries.size(), 1);
    std::size_t i = 0;
    for (long v : entries) m.at(i++, 0) = v;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  Mat operator*(const Mat& g) const {
    if (cols_ != g.rows_)
      throw DimensionMismatch("compose: " + shape() + " * " + g.shape());
    Mat out(rows_, g.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& fik = at(i, k);
        if (fik == 0) continue;
        for (std::size_t j = 0; j < g.cols_; ++j) {
          const Scalar& gkj = g.at(k, j);
          if (gkj != 0) out.at(i, j) += fik * gkj;
        }
      }
    return out;
  }

  Mat operator+(const Mat& o) const {
    require_same_shape(o, "add");
    Mat out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
  }
  Mat operator-(const Mat& o) const {
    require_same_shape(o, "subtract");
    Mat out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
  }
  friend Mat operator*(const Scalar& s, const Mat& m) {
    Mat out = m;
    for (auto& x : out.data_) x *= s;
    return out;
  }

  Mat transpose() const {
    Mat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  /// Columns [first, first+count) as a new matrix.
  Mat columns(std::size_t first, std::size_t count) const {
    Mat out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) out.at(i, j) = at(i, first + j);
    return out;
  }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void require_same_shape(const Mat& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch(std::string(what) + ": " + shape() + " vs " + o.shape());
  }

  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

/// Kronecker product, left factor major: (kron(f,g))(v (x) w) = f(v) (x) g(w).
inline Mat kron(const Mat& f, const Mat& g) {
  Mat out(f.rows() * g.rows(), f.cols() * g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const Scalar& fij = f.at(i, j);
      if (fij == 0) continue;
      for (std::size_t k = 0; k < g.rows(); ++k)
        for (std::size_t l = 0; l < g.cols(); ++l) {
          const Scalar& gkl = g.at(k, l);
          if (gkl != 0) out.at(i * g.rows() + k, j * g.cols() + l) = fij * gkl;
        }
    }
  return out;
}

inline Mat kron(const Mat& a, const Mat& b, const Mat& c) { return kron(kron(a, b), c); }
inline Mat kron(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
  return kron(kron(a, b), kron(c, d));
}

/// [a | b], side by side.
inline Mat hconcat(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hconcat: " + a.shape() + " | " + b.shape());
  Mat out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

}  // namespace wreathlab
