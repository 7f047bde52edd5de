#ifndef NILORBIT_ORBITS_HPP
#define NILORBIT_ORBITS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilorbit/roots.hpp"

namespace nilorbit {

/// Names a nilpotent K_C-orbit: a partition (sl(n,R), optional I/II label when
/// all parts are even), signed rows (su(p,q)), or an explicit matrix in p_C.
struct OrbitDescriptor {
  enum class Kind { Partition, Signed, Matrix };
  Kind kind = Kind::Partition;
  std::vector<int> partition;
  std::string label;  // "", "I", "II"
  std::vector<std::pair<int, char>> rows;  // (length, leading sign)
  Mat matrix;

  static OrbitDescriptor from_partition(std::vector<int> parts, std::string label = "");
  static OrbitDescriptor from_signed(const std::string& rows_spec);
  static OrbitDescriptor from_matrix(Mat m);
  static OrbitDescriptor from_json_text(const std::string& text);

  std::string signed_spec() const;  // canonical "+-+.+-+" form
};

struct NormalTriple {
  Vec x, e, f;
  bool is_zero() const { return vec_is_zero(e); }
};

/// Eigenspace decomposition of g_C, k_C, p_C under ad(x), plus the derived
/// subspaces of the induced parabolic.
struct AdGrading {
  const AlgebraRealization* alg = nullptr;
  Vec x;
  std::map<int, std::vector<Vec>> g_piece, k_piece, p_piece;

  std::size_t g_dim(int j) const;
  std::size_t k_dim(int j) const;
  std::size_t p_dim(int j) const;

  std::vector<Vec> V() const;        // sum_{j>=2} g_C(x;j)
  std::vector<Vec> Vtilde() const;   // V cap p_C
  std::vector<Vec> q_k() const;      // q_C cap k_C = sum_{j>=0} k_C(x;j)
  std::vector<Vec> levi() const;     // l_C = g_C(x;0)
  std::vector<Vec> u_plus() const;   // u_C = sum_{j>0} g_C(x;j)
};

Vec representative(const AlgebraRealization& alg, const OrbitDescriptor& d);

/// Completes nilpotent e in p_C to a normal triple {x,e,f} with x in k_C,
/// preferring solutions with x in the standard torus (catalog representatives
/// always admit one).
NormalTriple complete_to_normal_triple(const AlgebraRealization& alg, const Vec& e);

AdGrading grade(const AlgebraRealization& alg, const Vec& x);

int height(const AdGrading& g);
bool is_small(const AdGrading& g);

enum class Certainty { Certified, MonteCarlo };

struct SphericalResult {
  bool spherical = false;
  Certainty certainty = Certainty::MonteCarlo;
  std::size_t dim_orbit = 0;
  std::size_t dim_borel = 0;
};

/// dim(K_C e) via exact rank; density of a Borel orbit probed at randomized
/// exact points of the orbit.
SphericalResult is_spherical(const AlgebraRealization& alg, const RootDatum& rd, const Vec& e,
                             std::uint64_t seed, int samples);

std::size_t orbit_dimension(const AlgebraRealization& alg, const Vec& e);

/// Surjectivity of z -> [z,e] from q_C cap k_C onto V cap p_C.
bool gy_condition_check(const AdGrading& g, const Vec& e);

/// dim k^x = dim k^{x,e,f} + dim p_C(x;2) with ad(e): k^x -> p_C(x;2) onto.
bool small_exact_sequence_check(const AdGrading& g, const NormalTriple& t);

/// [Vtilde, Vtilde] = 0; for small spherical orbits this must equal height==2.
bool commutativity_check(const AdGrading& g);

/// dim Vtilde minus the generic u(l_k)-orbit dimension inside Vtilde.
std::size_t orbit_rank(const AlgebraRealization& alg, const RootDatum& rd, const AdGrading& g,
                       std::uint64_t seed, int samples);

}  // namespace nilorbit

#endif
