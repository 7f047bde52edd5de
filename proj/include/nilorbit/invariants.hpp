#ifndef NILORBIT_INVARIANTS_HPP
#define NILORBIT_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "nilorbit/orbits.hpp"

namespace nilorbit {

/// Homogeneous polynomial in the weight-basis coordinates of p_C(x;2),
/// tagged with its degree and t-weight. Exponent vectors index the fixed
/// variable order of the InvariantContext.
struct WeightedPolynomial {
  int degree = 0;
  WeightVec weight;
  std::map<std::vector<int>, Scalar> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  /// Scale so the lexicographically first monomial has coefficient one.
  void normalize_leading();
};

WeightedPolynomial poly_mul(const WeightedPolynomial& a, const WeightedPolynomial& b);

struct Generator {
  WeightedPolynomial poly;
  int degree = 0;
  WeightVec weight;  // the S[p_C(x;2)]-side weight mu_i
};

struct GeneratorSet {
  std::vector<Generator> gens;
  bool self_dual = false;
  std::vector<WeightVec> mu;            // highest weights as computed
  std::vector<WeightVec> minus_w0_mu;   // dual candidate labels
  std::vector<WeightVec> gamma;         // resolved weights (mu when self dual)
  std::size_t rank() const { return gens.size(); }
};

/// Weight basis of p_C(x;2) together with the u(l_k) action matrices on it.
/// Requires a small orbit (so V cap p_C = p_C(x;2)).
class InvariantContext {
public:
  InvariantContext(const AlgebraRealization& alg, const RootDatum& rd, const AdGrading& g);

  const AlgebraRealization& alg() const { return *alg_; }
  const RootDatum& rd() const { return *rd_; }

  std::size_t var_count() const { return var_vectors_.size(); }
  const Vec& var_vector(std::size_t i) const { return var_vectors_[i]; }
  const WeightVec& var_weight(std::size_t i) const { return var_weights_[i]; }

  /// Action of the s-th simple u(l_k) generator: X_s . v_j = sum_i m(i,j) v_i.
  const std::vector<Mat>& simple_actions() const { return simple_actions_; }
  /// Same for the full positive Levi root set (independent recheck surface).
  const std::vector<Mat>& full_actions() const { return full_actions_; }

  WeightVec monomial_weight(const std::vector<int>& expo) const;

  /// Apply the derivation extension of an action matrix to a monomial.
  std::map<std::vector<int>, Scalar> derive_monomial(const Mat& action,
                                                     const std::vector<int>& expo) const;
  std::map<std::vector<int>, Scalar> derive_poly(const Mat& action,
                                                 const WeightedPolynomial& p) const;

private:
  const AlgebraRealization* alg_;
  const RootDatum* rd_;
  std::vector<Vec> var_vectors_;
  std::vector<WeightVec> var_weights_;
  std::vector<Mat> simple_actions_, full_actions_;
};

/// All degree-n monomials with their weights, indexed and grouped.
struct MonomialBasis {
  int degree = 0;
  std::vector<std::vector<int>> monomials;  // lexicographically sorted
  std::vector<WeightVec> weights;
  std::map<WeightVec, std::vector<std::size_t>> by_weight;
  std::map<std::vector<int>, std::size_t> index;
};

MonomialBasis symmetric_power_basis(const InvariantContext& ctx, int n);

/// Basis of the joint kernel of the u(l_k) derivations on degree-n
/// polynomials, organized by t-weight: the degree-n highest weight vectors.
std::vector<WeightedPolynomial> nilradical_kernel(const InvariantContext& ctx, int n);

/// Degree-by-degree generator extraction for the polynomial invariant ring.
/// Verifies the per-weight monomial count identity up to max_degree and the
/// algebraic independence of the result.
GeneratorSet extract_generators(const InvariantContext& ctx, std::size_t rank_r, int max_degree,
                                std::uint64_t seed);

/// gamma_i = mu_i under self-duality; otherwise both candidate weight sets
/// are surfaced with gamma defaulting to mu.
void resolve_gamma_weights(GeneratorSet& gs, const RootDatum& rd, bool self_dual);

/// #[monomials in the generators of total degree n and weight lambda].
std::map<WeightVec, std::size_t> generator_monomial_counts(const GeneratorSet& gs,
                                                           const RootDatum& rd, int degree);

}  // namespace nilorbit

#endif
