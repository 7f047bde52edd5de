#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "nilorbit/invariants.hpp"
#include "nilorbit/ktypes.hpp"

using namespace nilorbit;

namespace {

const KTypeLattice& speh_lattice() {
  static const KTypeLattice lattice = [] {
    const auto& f = fixtures::orbit_fixture("speh_sl4R");
    return KTypeLattice(f.rd, {{2, 0}, {2, 2}});
  }();
  return lattice;
}

// Brute-force oracle for the Speh lattice: exponents up to 40 cover every
// weight with coordinates below 80.
std::size_t brute_multiplicity(const WeightVec& lambda) {
  std::size_t count = 0;
  for (long long m1 = 0; m1 <= 40; ++m1)
    for (long long m2 = 0; m2 <= 40; ++m2)
      if (2 * m1 + 2 * m2 == lambda[0] && 2 * m2 == lambda[1]) ++count;
  return count;
}

}  // namespace

TEST_CASE("multiplicities on the Speh lattice") {
  const auto& L = speh_lattice();
  CHECK(L.multiplicity({4, 2}) == 1);  // the single monomial f1 f2
  CHECK(L.multiplicity({0, 0}) == 1);  // empty monomial
  CHECK(L.multiplicity({1, 0}) == 0);  // odd coordinate unreachable
  CHECK(L.multiplicity({2, 4}) == 0);
  for (long long a = 0; a <= 10; ++a)
    for (long long b = -4; b <= 10; ++b)
      CHECK(L.multiplicity({a, b}) == brute_multiplicity({a, b}));
}

TEST_CASE("lattice enumeration") {
  const auto& L = speh_lattice();
  auto pts = L.enumerate(4);
  std::map<WeightVec, std::size_t> expect = {{{0, 0}, 1}, {{2, 0}, 1}, {{2, 2}, 1},
                                             {{4, 0}, 1}, {{4, 2}, 1}, {{4, 4}, 1}};
  std::map<WeightVec, std::size_t> got(pts.begin(), pts.end());
  CHECK(got == expect);

  CHECK(L.enumerate(0).size() == 1);
  CHECK(L.enumerate(0)[0].first == WeightVec{0, 0});

  // zero orbit: only the trivial K-type, any bound
  const auto& z = fixtures::orbit_fixture("zero_sl4R");
  KTypeLattice zl(z.rd, {});
  auto zp = zl.enumerate(7);
  REQUIRE(zp.size() == 1);
  CHECK(zp[0].first == WeightVec{0, 0});
  CHECK(zp[0].second == 1);
  CHECK(zl.multiplicity({0, 0}) == 1);
  CHECK(zl.multiplicity({2, 0}) == 0);
}

TEST_CASE("every lattice point is dominant") {
  const auto& f = fixtures::orbit_fixture("speh_sl4R");
  for (const auto& [lambda, mult] : speh_lattice().enumerate(10)) {
    CHECK(f.rd.is_dominant(lambda));
    CHECK(mult >= 1);
  }
}

TEST_CASE("degenerate lattices are rejected") {
  const auto& f = fixtures::orbit_fixture("speh_sl4R");
  CHECK_THROWS_AS(KTypeLattice(f.rd, {{0, 0}}), DescriptorError);
}

TEST_CASE("self-duality") {
  CHECK(speh_lattice().self_dual_check(6));
  CHECK(speh_lattice().generator_multiset_self_dual());

  // sl(6,R) 2^3, either label: not self dual
  for (const char* name : {"sl6_2cubed_I", "sl6_2cubed_II"}) {
    const auto& f = fixtures::orbit_fixture(name);
    InvariantContext ctx(*f.alg, f.rd, f.grading);
    auto gs = extract_generators(ctx, 3, 6, 42);
    KTypeLattice lat(f.rd, gs.mu);
    CHECK(!lat.self_dual_check(8));
    CHECK(!lat.generator_multiset_self_dual());
    // the two checks agree
    CHECK(lat.self_dual_check(8) == lat.generator_multiset_self_dual());
  }

  // zero orbit is trivially self dual
  const auto& z = fixtures::orbit_fixture("zero_su21");
  CHECK(KTypeLattice(z.rd, {}).self_dual_check(4));
}

TEST_CASE("asymptotic cone of the Speh lattice is the half plane u >= v >= 0") {
  Cone cone = asymptotic_cone(speh_lattice());
  REQUIRE(cone.rays.size() == 2);
  // exact inequality description vs. the closed-form one on a lattice patch
  for (long long u = -20; u <= 20; ++u)
    for (long long v = -20; v <= 20; ++v) {
      bool closed_form = u >= v && v >= 0;
      CHECK(cone_contains(cone, WeightVec{u, v}) == closed_form);
    }
  // rational points, cross-checked by solving the 2x2 system directly
  for (long long a = -9; a <= 9; ++a)
    for (long long b = -9; b <= 9; ++b) {
      std::vector<mpq_class> pt = {mpq_class(static_cast<long>(a), 3), mpq_class(static_cast<long>(b), 2)};
      // 2c1 + 2c2 = a/3, 2c2 = b/2 => c2 = b/4, c1 = a/6 - b/4
      mpq_class c2 = pt[1] / 2, c1 = pt[0] / 2 - c2;
      bool direct = c1 >= 0 && c2 >= 0;
      CHECK(cone_contains(cone, pt) == direct);
    }
  CHECK(cone_contains(cone, WeightVec{0, 0}));
  for (const auto& ray : cone.rays) CHECK(cone_contains(cone, ray));
  // positive rational scaling invariance
  std::vector<mpq_class> inside = {mpq_class(3), mpq_class(1)};
  std::vector<mpq_class> scaled = {mpq_class(3, 7), mpq_class(1, 7)};
  CHECK(cone_contains(cone, inside));
  CHECK(cone_contains(cone, scaled));

  CHECK_THROWS_AS(cone_contains(cone, WeightVec{1, 2, 3}), DescriptorError);
}

TEST_CASE("single-ray and zero cones") {
  const auto& f = fixtures::orbit_fixture("sl4_211");
  Cone ray = cone_from_rays(f.rd, {{2, 0}});
  for (long long u = -6; u <= 6; ++u)
    for (long long v = -6; v <= 6; ++v)
      CHECK(cone_contains(ray, WeightVec{u, v}) == (u >= 0 && v == 0));

  Cone zero = cone_from_rays(f.rd, {});
  CHECK(cone_contains(zero, WeightVec{0, 0}));
  CHECK(!cone_contains(zero, WeightVec{1, 0}));
  CHECK(!cone_contains(zero, WeightVec{0, -1}));
}

TEST_CASE("su cone membership is class-invariant") {
  const auto& f = fixtures::orbit_fixture("su21_principal");
  InvariantContext ctx(*f.alg, f.rd, f.grading);
  auto gs = extract_generators(ctx, 2, 6, 42);
  KTypeLattice lat(f.rd, gs.mu);
  Cone cone = asymptotic_cone(lat);
  CHECK(cone.has_lineality);
  for (const auto& g : gs.mu) {
    CHECK(cone_contains(cone, g));
    // shifting by the trace direction must not change membership
    WeightVec shifted = g;
    for (auto& c : shifted) c += 5;
    CHECK(cone_contains(cone, shifted));
  }
}

TEST_CASE("shifted lattice reproduces the Speh K-type family") {
  const auto& L = speh_lattice();
  auto small = L.shifted_lattice({1, 1}, 3);
  std::set<WeightVec> expect_small = {{1, 1}, {3, 1}, {3, 3}};
  CHECK(std::set<WeightVec>(small.begin(), small.end()) == expect_small);

  auto big = L.shifted_lattice({1, 1}, 15);
  std::set<WeightVec> expect_big;
  for (long long m = 0; 2 * m + 1 <= 15; ++m)
    for (long long n = 0; n <= m; ++n) expect_big.insert({2 * m + 1, 2 * n + 1});
  CHECK(std::set<WeightVec>(big.begin(), big.end()) == expect_big);

  // the shifted family lies in mu + cone
  Cone cone = asymptotic_cone(L);
  for (const auto& w : big) CHECK(cone_contains(cone, WeightVec{w[0] - 1, w[1] - 1}));

  CHECK_THROWS_AS(L.shifted_lattice({1, 3}, 5), DescriptorError);

  // zero orbit: {mu}
  const auto& z = fixtures::orbit_fixture("zero_sl4R");
  KTypeLattice zl(z.rd, {});
  auto zs = zl.shifted_lattice({0, 0}, 4);
  REQUIRE(zs.size() == 1);
  CHECK(zs[0] == WeightVec{0, 0});
}

TEST_CASE("multiplicities agree with kernel dimensions across modules") {
  for (const auto& name : {"speh_sl4R", "su21_principal", "sl4_211", "sl6_2cubed_I"}) {
    const auto& f = fixtures::orbit_fixture(name);
    InvariantContext ctx(*f.alg, f.rd, f.grading);
    std::size_t r = orbit_rank(*f.alg, f.rd, f.grading, 1, 8);
    auto gs = extract_generators(ctx, r, 6, 42);
    KTypeLattice lat(f.rd, gs.mu);

    std::map<WeightVec, std::map<int, std::size_t>> kernel_by_weight_degree;
    for (int n = 0; n <= 6; ++n)
      for (const auto& p : nilradical_kernel(ctx, n)) kernel_by_weight_degree[p.weight][n] += 1;

    // independent brute force over generator exponents (cap 12, checked)
    auto brute_degrees = [&](const WeightVec& lambda) {
      std::map<int, std::size_t> by_degree;
      std::function<void(std::size_t, WeightVec, int)> rec = [&](std::size_t from, WeightVec acc,
                                                                 int degree) {
        if (from == gs.gens.size()) {
          if (f.rd.normalize(acc) == lambda) by_degree[degree] += 1;
          return;
        }
        for (int m = 0; m <= 12; ++m) {
          if (m > 0)
            for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += gs.gens[from].weight[t];
          rec(from + 1, acc, degree + m * gs.gens[from].degree);
        }
      };
      rec(0, WeightVec(f.rd.weight_len(), 0), 0);
      return by_degree;
    };

    for (const auto& [lambda, mult] : lat.enumerate(3)) {
      auto by_degree = brute_degrees(lambda);
      std::size_t total = 0, leq6 = 0;
      for (const auto& [deg, c] : by_degree) {
        total += c;
        if (deg <= 6) leq6 += c;
      }
      CHECK(total == mult);
      std::size_t kernel_leq6 = 0;
      for (const auto& [deg, c] : kernel_by_weight_degree[lambda])
        if (deg <= 6) kernel_leq6 += c;
      CHECK(kernel_leq6 == leq6);
    }
  }
}
