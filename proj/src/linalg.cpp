#include "nilorbit/linalg.hpp"

#include <ostream>
#include <stdexcept>

namespace nilorbit {

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

Vec vec_zero(std::size_t n) { return Vec(n); }

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void vec_axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

Vec vec_scaled(const Vec& v, const Scalar& a) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = a * v[i];
  return r;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat multiply: shape mismatch");
  Mat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = (*this)(i, k);
      if (x.is_zero()) continue;  // bases here are very sparse
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& y = o(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::scaled(const Scalar& c) const {
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Scalar Mat::trace() const {
  Scalar t;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

Vec Mat::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Mat::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

void Mat::set_col(std::size_t j, const Vec& v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Vec Mat::apply(const Vec& v) const {
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
  return r;
}

std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = Scalar(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

std::vector<Vec> nullspace(const Mat& m) {
  Mat a = m;
  std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
  Vec x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

Scalar det(Mat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrix required");
  Scalar d(1);
  std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Scalar inv = Scalar(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

SpanSolver::SpanSolver(const std::vector<Vec>& span_vectors) {
  ncols_ = span_vectors.size();
  std::size_t n = span_vectors.empty() ? 0 : span_vectors[0].size();
  a_ = Mat(n, ncols_);
  for (std::size_t j = 0; j < ncols_; ++j) a_.set_col(j, span_vectors[j]);
  // Eliminate while tracking the row transform so express() is a back-read.
  t_ = Mat::identity(n);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols_ && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a_(p, c).is_zero()) ++p;
    if (p == n) continue;
    if (p != r)
      for (std::size_t j = 0; j < n || j < ncols_; ++j) {
        if (j < ncols_) std::swap(a_(p, j), a_(r, j));
        if (j < n) std::swap(t_(p, j), t_(r, j));
      }
    Scalar inv = Scalar(1) / a_(r, c);
    for (std::size_t j = 0; j < ncols_; ++j) a_(r, j) *= inv;
    for (std::size_t j = 0; j < n; ++j) t_(r, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a_(i, c).is_zero()) continue;
      Scalar f = a_(i, c);
      for (std::size_t j = 0; j < ncols_; ++j) a_(i, j) -= f * a_(r, j);
      for (std::size_t j = 0; j < n; ++j) t_(i, j) -= f * t_(r, j);
    }
    pivots_.push_back(c);
    ++r;
  }
}

std::optional<Vec> SpanSolver::express(const Vec& v) const {
  Vec tv = t_.apply(v);
  Vec c(ncols_);
  for (std::size_t r = 0; r < pivots_.size(); ++r) c[pivots_[r]] = tv[r];
  // Rows beyond the span's rank must vanish for consistency.
  for (std::size_t r = pivots_.size(); r < tv.size(); ++r)
    if (!tv[r].is_zero()) return std::nullopt;
  return c;
}

bool SpanSolver::contains(const Vec& v) const { return express(v).has_value(); }

bool hermitian_positive_definite(const Mat& m) {
  // Symmetric elimination: the pivot at step c equals minor_c / minor_{c-1},
  // so all leading principal minors are positive iff every pivot is a
  // positive rational.
  Mat a = m;
  std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    const Scalar piv = a(c, c);
    if (!piv.is_real() || piv.re() <= 0) return false;
    Scalar inv = Scalar(1) / piv;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return true;
}

}  // namespace nilorbit
