#ifndef NILORBIT_LINALG_HPP
#define NILORBIT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "nilorbit/gaussian.hpp"

namespace nilorbit {

using Vec = std::vector<Scalar>;

Vec vec_zero(std::size_t n);
bool vec_is_zero(const Vec& v);
void vec_axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a*x
Vec vec_scaled(const Vec& v, const Scalar& a);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);

/// Dense matrix over GaussianRational. Row-major, value semantics.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Scalar& c) const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  bool is_zero() const;
  Scalar trace() const;

  Vec col(std::size_t j) const;
  Vec row(std::size_t i) const;
  void set_col(std::size_t j, const Vec& v);

  Vec apply(const Vec& v) const;  // matrix * column vector

private:
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

/// Reduced row echelon form in place. Returns pivot column indices.
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(Mat m);

/// Basis of the right null space {v : M v = 0}, echelon-normalized.
std::vector<Vec> nullspace(const Mat& m);

/// One solution of M x = b with free variables set to zero, or nullopt.
std::optional<Vec> solve(const Mat& m, const Vec& b);

Scalar det(Mat m);

/// Row-span membership helper: fixed span, many queries.
class SpanSolver {
public:
  explicit SpanSolver(const std::vector<Vec>& span_vectors);  // vectors of equal length
  std::size_t dim() const { return pivots_.size(); }
  /// Coefficients c with sum c_i span_i = v, or nullopt if v is outside the span.
  std::optional<Vec> express(const Vec& v) const;
  bool contains(const Vec& v) const;

private:
  Mat a_;  // columns = span vectors, rref'd with transform tracking
  Mat t_;  // row transform applied to a_
  std::vector<std::size_t> pivots_;
  std::size_t ncols_;
};

/// Exact positive-definiteness test for a Hermitian matrix (conjugate-symmetric
/// over GaussianRational), via leading principal minors.
bool hermitian_positive_definite(const Mat& m);

}  // namespace nilorbit

#endif
