#ifndef NILORBIT_LIEALG_HPP
#define NILORBIT_LIEALG_HPP

#include <memory>
#include <string>
#include <vector>

#include "nilorbit/errors.hpp"
#include "nilorbit/linalg.hpp"

namespace nilorbit {

enum class Family { SlR, SU };

struct RealFormDescriptor {
  Family family = Family::SlR;
  int n = 0;  // sl(n,R)
  int p = 0, q = 0;  // su(p,q)

  static RealFormDescriptor sl_real(int n) {
    if (n < 2) throw DescriptorError("sl(n,R) requires n >= 2");
    RealFormDescriptor d;
    d.family = Family::SlR;
    d.n = n;
    return d;
  }
  static RealFormDescriptor su(int p, int q) {
    if (p < q || q < 1) throw DescriptorError("su(p,q) requires p >= q >= 1");
    RealFormDescriptor d;
    d.family = Family::SU;
    d.p = p;
    d.q = q;
    return d;
  }

  int ambient() const { return family == Family::SlR ? n : p + q; }
  std::string name() const {
    return family == Family::SlR ? "sl(" + std::to_string(n) + ",R)"
                                 : "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
};

struct SparseEntry {
  std::size_t idx;
  Scalar c;
};
using SparseVec = std::vector<SparseEntry>;

/// A complexified classical real form realized by trace-zero matrices over
/// GaussianRational, with a theta-adapted ordered basis (k_C first, then p_C),
/// precomputed structure constants and Killing Gram matrix, and the three
/// conjugations theta, sigma (real form), tau (compact form).
///
/// Immutable after construction; all queries are pure.
class AlgebraRealization {
public:
  static AlgebraRealization build(const RealFormDescriptor& d);

  const RealFormDescriptor& descriptor() const { return desc_; }
  int ambient() const { return desc_.ambient(); }
  std::size_t dim() const { return basis_.size(); }
  std::size_t dim_k() const { return dim_k_; }
  std::size_t dim_p() const { return basis_.size() - dim_k_; }

  const Mat& basis_matrix(std::size_t i) const { return basis_[i]; }
  bool basis_in_k(std::size_t i) const { return i < dim_k_; }

  /// Express a trace-zero ambient matrix in the basis; ConsistencyError if
  /// the matrix is not in the span.
  Vec coords_of(const Mat& Z) const;
  Mat matrix_of(const Vec& z) const;

  bool in_k(const Vec& z) const;
  bool in_p(const Vec& z) const;
  Vec k_part(const Vec& z) const;
  Vec p_part(const Vec& z) const;

  Vec bracket(const Vec& z, const Vec& w) const;
  const SparseVec& basis_bracket(std::size_t i, std::size_t j) const { return table_[i][j]; }
  Mat ad_matrix(const Vec& z) const;

  Scalar killing(const Vec& z, const Vec& w) const;
  const Mat& killing_gram() const { return killing_gram_; }

  /// <z,w> = -B(z, tau(w)): positive definite, linear in z, conjugate-linear in w.
  Scalar hermitian(const Vec& z, const Vec& w) const;

  Vec theta(const Vec& z) const;
  Vec tau(const Vec& z) const;
  Vec sigma(const Vec& z) const;

  Mat theta_matrix(const Mat& Z) const;
  Mat tau_matrix(const Mat& Z) const;
  Mat sigma_matrix(const Mat& Z) const;

  /// Standard compact torus of k_C: i(E_{2r-1,2r}-E_{2r,2r-1}) for sl(n,R),
  /// E_rr - E_{r+1,r+1} for su(p,q).
  std::size_t torus_dim() const { return torus_.size(); }
  const Vec& torus_element(std::size_t r) const { return torus_[r]; }
  const std::vector<Vec>& torus() const { return torus_; }

private:
  RealFormDescriptor desc_;
  std::size_t dim_k_ = 0;
  std::vector<Mat> basis_;
  std::vector<std::vector<SparseVec>> table_;
  Mat killing_gram_;
  std::vector<Vec> tau_img_, sigma_img_;
  std::vector<Vec> torus_;

  Mat conj_transpose(const Mat& Z) const;
  void build_tables();
};

/// Named operations mirroring the library surface used by the CLI.
AlgebraRealization build_real_form(const RealFormDescriptor& d);

}  // namespace nilorbit

#endif
