#ifndef NILORBIT_TESTS_FIXTURES_HPP
#define NILORBIT_TESTS_FIXTURES_HPP

#include <map>
#include <string>
#include <utility>

#include "nilorbit/liealg.hpp"
#include "nilorbit/orbits.hpp"

namespace fixtures {

using namespace nilorbit;

inline const AlgebraRealization& sl_real(int n) {
  static std::map<int, AlgebraRealization> cache;
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, AlgebraRealization::build(RealFormDescriptor::sl_real(n))).first;
  return it->second;
}

inline const AlgebraRealization& su(int p, int q) {
  static std::map<std::pair<int, int>, AlgebraRealization> cache;
  auto key = std::make_pair(p, q);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, AlgebraRealization::build(RealFormDescriptor::su(p, q))).first;
  return it->second;
}

/// Representative + triple + root datum + grading, cached per named orbit.
struct OrbitFixture {
  const AlgebraRealization* alg;
  OrbitDescriptor desc;
  Vec e;
  NormalTriple triple;
  RootDatum rd;
  AdGrading grading;
};

inline const OrbitFixture& orbit_fixture(const std::string& name) {
  static std::map<std::string, OrbitFixture> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;

  OrbitFixture f;
  if (name == "speh_sl4R") {
    f.alg = &sl_real(4);
    f.desc = OrbitDescriptor::from_partition({2, 2}, "I");
  } else if (name == "su63_333") {
    f.alg = &su(6, 3);
    f.desc = OrbitDescriptor::from_signed("+-+.+-+.+-+");
  } else if (name == "su21_principal") {
    f.alg = &su(2, 1);
    f.desc = OrbitDescriptor::from_signed("+-+");
  } else if (name == "sl6_2cubed_I") {
    f.alg = &sl_real(6);
    f.desc = OrbitDescriptor::from_partition({2, 2, 2}, "I");
  } else if (name == "sl6_2cubed_II") {
    f.alg = &sl_real(6);
    f.desc = OrbitDescriptor::from_partition({2, 2, 2}, "II");
  } else if (name == "sl4_211") {
    f.alg = &sl_real(4);
    f.desc = OrbitDescriptor::from_partition({2, 1, 1});
  } else if (name == "zero_sl4R") {
    f.alg = &sl_real(4);
    f.desc = OrbitDescriptor::from_partition({1, 1, 1, 1});
  } else if (name == "zero_su21") {
    f.alg = &su(2, 1);
    f.desc = OrbitDescriptor::from_signed("+.+.-");
  } else {
    throw std::runtime_error("unknown test fixture " + name);
  }
  f.e = representative(*f.alg, f.desc);
  f.triple = complete_to_normal_triple(*f.alg, f.e);
  f.rd = build_root_datum(*f.alg, f.triple.x);
  f.grading = grade(*f.alg, f.triple.x);
  return cache.emplace(name, std::move(f)).first->second;
}

inline const std::vector<std::string>& all_orbit_fixture_names() {
  static std::vector<std::string> names = {"speh_sl4R",    "su63_333",     "su21_principal",
                                           "sl6_2cubed_I", "sl6_2cubed_II", "sl4_211",
                                           "zero_sl4R",    "zero_su21"};
  return names;
}

/// The three symmetric 4x4 matrices spanning p_C(x;2) for the sl(4,R)
/// orbit of partition 2+2: Y1, Y2 rank-one blocks on coordinate pairs
/// {1,2} and {3,4}, Y3 the cross term.
inline Mat speh_Y(int which) {
  Scalar one(1), mi = -Scalar::i();
  Mat m(4, 4);
  auto put_block = [&](int r, int c) {
    m(r, c) = one;
    m(r, c + 1) = mi;
    m(r + 1, c) = mi;
    m(r + 1, c + 1) = -one;
  };
  if (which == 1) put_block(0, 0);
  if (which == 2) put_block(2, 2);
  if (which == 3) {
    put_block(0, 2);
    put_block(2, 0);
  }
  return m;
}

}  // namespace fixtures

#endif
