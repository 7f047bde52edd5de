#include "nilorbit/liealg.hpp"

namespace nilorbit {

namespace {

Mat unit(int n, int i, int j) {
  Mat m(n, n);
  m(i, j) = Scalar(1);
  return m;
}

Mat entrywise_conj(const Mat& Z) {
  Mat r(Z.rows(), Z.cols());
  for (std::size_t i = 0; i < Z.rows(); ++i)
    for (std::size_t j = 0; j < Z.cols(); ++j) r(i, j) = Z(i, j).conj();
  return r;
}

}  // namespace

AlgebraRealization AlgebraRealization::build(const RealFormDescriptor& d) {
  AlgebraRealization a;
  a.desc_ = d;
  int n = d.ambient();

  if (d.family == Family::SlR) {
    // k_C = so(n,C): antisymmetric; p_C: symmetric traceless.
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) a.basis_.push_back(unit(n, i, j) - unit(n, j, i));
    a.dim_k_ = a.basis_.size();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) a.basis_.push_back(unit(n, i, j) + unit(n, j, i));
    for (int i = 0; i + 1 < n; ++i) a.basis_.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
  } else {
    int p = d.p;
    // k_C = s(gl_p + gl_q): within-block units plus the diagonal chain.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        bool same_block = (i < p) == (j < p);
        if (same_block) a.basis_.push_back(unit(n, i, j));
      }
    for (int i = 0; i + 1 < n; ++i) a.basis_.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
    a.dim_k_ = a.basis_.size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        bool same_block = (i < p) == (j < p);
        if (!same_block) a.basis_.push_back(unit(n, i, j));
      }
  }

  a.build_tables();
  return a;
}

void AlgebraRealization::build_tables() {
  int n = ambient();
  std::size_t N = dim();

  // Torus elements in coordinates.
  if (desc_.family == Family::SlR) {
    torus_.clear();
    for (int r = 0; 2 * r + 1 < n; ++r) {
      Mat t = (unit(n, 2 * r, 2 * r + 1) - unit(n, 2 * r + 1, 2 * r)).scaled(Scalar::i());
      torus_.push_back(coords_of(t));
    }
  } else {
    torus_.clear();
    for (int r = 0; r + 1 < n; ++r)
      torus_.push_back(coords_of(unit(n, r, r) - unit(n, r + 1, r + 1)));
  }

  table_.assign(N, std::vector<SparseVec>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      Mat br = basis_[i] * basis_[j] - basis_[j] * basis_[i];
      Vec c = coords_of(br);
      SparseVec sv;
      for (std::size_t k = 0; k < N; ++k)
        if (!c[k].is_zero()) sv.push_back({k, c[k]});
      table_[i][j] = std::move(sv);
    }

  // Killing Gram: B(b_i,b_j) = sum_k coefficient of e_k in [b_i,[b_j,e_k]].
  killing_gram_ = Mat(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) {
      Scalar s;
      for (std::size_t k = 0; k < N; ++k)
        for (const auto& [l, c] : table_[j][k])
          for (const auto& [k2, c2] : table_[i][l])
            if (k2 == k) s += c * c2;
      killing_gram_(i, j) = s;
      killing_gram_(j, i) = s;
    }

  tau_img_.resize(N);
  sigma_img_.resize(N);
  for (std::size_t i = 0; i < N; ++i) {
    tau_img_[i] = coords_of(tau_matrix(basis_[i]));
    sigma_img_[i] = coords_of(sigma_matrix(basis_[i]));
  }
}

Vec AlgebraRealization::coords_of(const Mat& Z) const {
  int n = ambient();
  Vec c(dim());
  Scalar half(1, 2);
  std::size_t idx = 0;
  if (desc_.family == Family::SlR) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) c[idx++] = (Z(i, j) - Z(j, i)) * half;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) c[idx++] = (Z(i, j) + Z(j, i)) * half;
    Scalar run;
    for (int i = 0; i + 1 < n; ++i) {
      run += Z(i, i);
      c[idx++] = run;
    }
  } else {
    int p = desc_.p;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && (i < p) == (j < p)) c[idx++] = Z(i, j);
    Scalar run;
    for (int i = 0; i + 1 < n; ++i) {
      run += Z(i, i);
      c[idx++] = run;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && (i < p) != (j < p)) c[idx++] = Z(i, j);
  }
  if (!(matrix_of(c) == Z))
    throw ConsistencyError("matrix is not in the span of the algebra basis");
  return c;
}

Mat AlgebraRealization::matrix_of(const Vec& z) const {
  int n = ambient();
  Mat m(n, n);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!z[i].is_zero()) {
      for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r)
        for (std::size_t s = 0; s < static_cast<std::size_t>(n); ++s)
          if (!basis_[i](r, s).is_zero()) m(r, s) += z[i] * basis_[i](r, s);
    }
  return m;
}

bool AlgebraRealization::in_k(const Vec& z) const {
  for (std::size_t i = dim_k_; i < dim(); ++i)
    if (!z[i].is_zero()) return false;
  return true;
}

bool AlgebraRealization::in_p(const Vec& z) const {
  for (std::size_t i = 0; i < dim_k_; ++i)
    if (!z[i].is_zero()) return false;
  return true;
}

Vec AlgebraRealization::k_part(const Vec& z) const {
  Vec r(dim());
  for (std::size_t i = 0; i < dim_k_; ++i) r[i] = z[i];
  return r;
}

Vec AlgebraRealization::p_part(const Vec& z) const {
  Vec r(dim());
  for (std::size_t i = dim_k_; i < dim(); ++i) r[i] = z[i];
  return r;
}

Vec AlgebraRealization::bracket(const Vec& z, const Vec& w) const {
  Vec r(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (z[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (w[j].is_zero()) continue;
      Scalar f = z[i] * w[j];
      for (const auto& [k, c] : table_[i][j]) r[k] += f * c;
    }
  }
  return r;
}

Mat AlgebraRealization::ad_matrix(const Vec& z) const {
  std::size_t N = dim();
  Mat m(N, N);
  for (std::size_t i = 0; i < N; ++i) {
    if (z[i].is_zero()) continue;
    for (std::size_t j = 0; j < N; ++j)
      for (const auto& [k, c] : table_[i][j]) m(k, j) += z[i] * c;
  }
  return m;
}

Scalar AlgebraRealization::killing(const Vec& z, const Vec& w) const {
  Scalar s;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (z[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (!w[j].is_zero()) s += z[i] * w[j] * killing_gram_(i, j);
  }
  return s;
}

Scalar AlgebraRealization::hermitian(const Vec& z, const Vec& w) const {
  return -killing(z, tau(w));
}

Vec AlgebraRealization::theta(const Vec& z) const {
  Vec r = z;
  for (std::size_t i = dim_k_; i < dim(); ++i) r[i] = -r[i];
  return r;
}

Vec AlgebraRealization::tau(const Vec& z) const {
  Vec r(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!z[i].is_zero()) vec_axpy(r, z[i].conj(), tau_img_[i]);
  return r;
}

Vec AlgebraRealization::sigma(const Vec& z) const {
  Vec r(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!z[i].is_zero()) vec_axpy(r, z[i].conj(), sigma_img_[i]);
  return r;
}

Mat AlgebraRealization::conj_transpose(const Mat& Z) const {
  return entrywise_conj(Z).transpose();
}

Mat AlgebraRealization::theta_matrix(const Mat& Z) const {
  if (desc_.family == Family::SlR) return Z.transpose().scaled(Scalar(-1));
  Mat r = Z;
  int p = desc_.p, n = ambient();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i < p) != (j < p)) r(i, j) = -r(i, j);
  return r;
}

Mat AlgebraRealization::tau_matrix(const Mat& Z) const {
  return conj_transpose(Z).scaled(Scalar(-1));
}

Mat AlgebraRealization::sigma_matrix(const Mat& Z) const {
  if (desc_.family == Family::SlR) return entrywise_conj(Z);
  Mat r = conj_transpose(Z).scaled(Scalar(-1));
  int p = desc_.p, n = ambient();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i < p) != (j < p)) r(i, j) = -r(i, j);
  return r;
}

AlgebraRealization build_real_form(const RealFormDescriptor& d) {
  return AlgebraRealization::build(d);
}

}  // namespace nilorbit
