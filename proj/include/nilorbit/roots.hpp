#ifndef NILORBIT_ROOTS_HPP
#define NILORBIT_ROOTS_HPP

#include <vector>

#include "nilorbit/liealg.hpp"

namespace nilorbit {

/// Integer weight coordinates: epsilon-coordinates of length n/2 for sl(n,R)
/// (k_C = so(n,C)), length p+q with canonical sum-normalization for su(p,q).
using WeightVec = std::vector<long long>;

long long weight_dot(const WeightVec& a, const WeightVec& b);

struct KRoot {
  WeightVec alpha;
  Vec vec;  // root vector, g-coordinates
  bool positive = false;
};

/// A root of (g_C, h) with its Chevalley vector X_alpha and coroot H_alpha.
struct GRoot {
  int i, j;  // epsilon_i - epsilon_j of the diagonalized ambient torus
  Vec x_vec;
  Vec h_vec;
};

/// Roots of (k_C, t_C) for the standard compact torus, a positive system
/// making the supplied grading element dominant (lexicographic tie-break on
/// the walls), Weyl group data, and the ambient Chevalley basis.
class RootDatum {
public:
  const AlgebraRealization* alg = nullptr;
  Vec x;  // the grading element used to orient the positive system

  std::size_t rank = 0;                  // dim t_C
  std::vector<mpq_class> x_torus;        // x in torus-basis coordinates
  std::vector<KRoot> roots;
  std::vector<std::size_t> positive_idx;
  std::vector<std::size_t> simple_idx;
  std::vector<std::size_t> levi_positive_idx;  // positive roots with alpha(x) = 0
  std::vector<std::size_t> levi_simple_idx;    // simple roots of that subsystem
  std::vector<GRoot> groots;

  std::size_t weight_len() const;
  std::size_t borel_dim() const { return rank + positive_idx.size(); }

  mpq_class eval_on_x(const WeightVec& alpha) const;

  WeightVec normalize(WeightVec lambda) const;
  bool is_dominant(const WeightVec& lambda) const;
  /// -w0 lambda for dominant lambda.
  WeightVec dual_ktype(const WeightVec& lambda) const;
  WeightVec apply_w0(const WeightVec& lambda) const;

  /// Simultaneous t_C-weight of an exact weight vector z; ConsistencyError if
  /// z is not a weight vector or the weight is not integral.
  WeightVec weight_of(const Vec& z) const;

  WeightVec two_rho() const;  // sum of positive roots

  std::vector<Vec> nilradical() const;        // n_k root vectors
  std::vector<Vec> nilradical_minus() const;  // opposite
  std::vector<Vec> levi_nilradical() const;   // u(l_k)
  std::vector<Vec> levi_nilradical_simple() const;

  /// Coroot element H_alpha in t_C, normalized so alpha(H_alpha) = 2.
  Vec coroot(std::size_t root_index) const;

  const Mat& w0_matrix() const { return w0_; }

private:
  friend RootDatum build_root_datum(const AlgebraRealization& alg, const Vec& x);
  Mat w0_;  // over weight coordinates, entries small integers as Scalars
  std::vector<mpq_class> x_eval_;  // per-family evaluation data
  WeightVec reflect(const WeightVec& lambda, const WeightVec& alpha) const;
  void compute_w0();
};

RootDatum build_root_datum(const AlgebraRealization& alg, const Vec& x);

/// w0 as a signed permutation matrix on weight coordinates.
Mat longest_weyl_element(const RootDatum& rd);

/// The Weyl involution nu as an exact C-linear involutive automorphism of g_C:
/// nu(H) = -H on the Cartan containing t_C, nu(X_alpha) = -X_{-alpha}.
class WeylInvolution {
public:
  explicit WeylInvolution(const AlgebraRealization& alg);
  Vec apply(const Vec& z) const;
  Mat apply_matrix(const Mat& Z) const;

private:
  const AlgebraRealization* alg_;
};

WeylInvolution weyl_involution(const RootDatum& rd);

bool is_dominant(const RootDatum& rd, const WeightVec& lambda);
WeightVec dual_ktype(const RootDatum& rd, const WeightVec& lambda);

}  // namespace nilorbit

#endif
