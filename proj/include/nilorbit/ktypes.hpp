#ifndef NILORBIT_KTYPES_HPP
#define NILORBIT_KTYPES_HPP

#include <functional>
#include <vector>

#include "nilorbit/roots.hpp"

namespace nilorbit {

/// The monoid of K-types {sum m_i gamma_i} generated by the invariant-ring
/// generator weights, with exact multiplicity queries.
class KTypeLattice {
public:
  KTypeLattice(const RootDatum& rd, std::vector<WeightVec> generators);

  const std::vector<WeightVec>& generators() const { return gens_; }
  std::size_t rank() const { return gens_.size(); }
  const RootDatum& rd() const { return *rd_; }

  /// #{m in N^r : sum m_i gamma_i = lambda}, by exact bounded enumeration.
  std::size_t multiplicity(const WeightVec& lambda) const;

  /// All lattice points of max-norm <= bound (canonical representatives),
  /// with multiplicities, sorted by weight.
  std::vector<std::pair<WeightVec, std::size_t>> enumerate(long long bound) const;

  /// m(lambda) = m(-w0 lambda) for every point up to the bound (raised to
  /// cover all generators and their duals).
  bool self_dual_check(long long bound) const;

  /// The generator multiset is stable under gamma -> -w0 gamma.
  bool generator_multiset_self_dual() const;

  /// {mu + sum m_i gamma_i} up to max-norm bound; mu must be dominant.
  std::vector<WeightVec> shifted_lattice(const WeightVec& mu, long long bound) const;

private:
  const RootDatum* rd_;
  std::vector<WeightVec> gens_;
  WeightVec xi_;  // strictly positive integer functional on the monoid
  long long xi_of(const WeightVec& w) const;
  void enumerate_budget(long long budget, std::size_t from, WeightVec acc,
                        const std::function<void(const WeightVec&)>& sink) const;
};

/// Rational polyhedral cone spanned by the generator weights, carried both as
/// rays and as the inequality system produced by exact Fourier-Motzkin
/// elimination. For su(p,q) the trace direction is a lineality generator.
struct Cone {
  std::vector<WeightVec> rays;
  std::vector<std::vector<mpz_class>> inequalities;  // <a, v> >= 0
  bool has_lineality = false;  // full trace line included (su weights)
};

Cone asymptotic_cone(const KTypeLattice& lattice);
Cone cone_from_rays(const RootDatum& rd, const std::vector<WeightVec>& rays);

bool cone_contains(const Cone& cone, const std::vector<mpq_class>& v);
bool cone_contains(const Cone& cone, const WeightVec& v);

}  // namespace nilorbit

#endif
