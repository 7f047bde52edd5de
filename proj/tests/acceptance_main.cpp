// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every check is exact; the only tolerances are the wall-clock budgets.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "nilorbit/invariants.hpp"
#include "nilorbit/ktypes.hpp"
#include "nilorbit/report.hpp"

using namespace nilorbit;

namespace {

struct Pipeline {
  AlgebraRealization alg;
  Vec e;
  NormalTriple triple;
  RootDatum rd;
  AdGrading grading;
};

Pipeline run_pipeline(const std::string& fixture) {
  AnalysisConfig c = fixture_config(fixture);
  Pipeline p{build_real_form(*c.algebra), {}, {}, {}, {}};
  p.e = representative(p.alg, *c.orbit);
  p.triple = complete_to_normal_triple(p.alg, p.e);
  p.rd = build_root_datum(p.alg, p.triple.x);
  p.grading = grade(p.alg, p.triple.x);
  return p;
}

const std::vector<std::string> kAllFixtures = {
    "speh_sl4R",    "sl4_211",  "sl6_2cubed_I", "sl6_2cubed_II", "su63_333",
    "su21_principal", "zero_sl4R", "zero_sl6R",   "zero_su63",     "zero_su21"};

bool fixture_small_spherical(const Pipeline& p) {
  return is_small(p.grading) && is_spherical(p.alg, p.rd, p.e, 0, 8).spherical;
}

int failures = 0;

void report_line(int number, const std::string& what, bool ok, double seconds,
                 const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << what << "  ["
            << seconds << " s]";
  if (!ok && !detail.empty()) std::cout << "  -- " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

void criterion(int number, const std::string& what, double budget_seconds,
               const std::function<void(std::string&)>& body) {
  std::string detail;
  bool ok = true;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(detail);
    ok = detail.empty();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ok && budget_seconds > 0 && secs > budget_seconds) {
    ok = false;
    detail = "exceeded the runtime budget of " + std::to_string(budget_seconds) + " s";
  }
  report_line(number, what, ok, secs, detail);
}

void expect(std::string& detail, bool cond, const std::string& msg) {
  if (!cond && detail.empty()) detail = msg;
}

}  // namespace

int main() {
  // 1. Reference sl(4,R) orbit reproduced end to end, within 30 s.
  criterion(1, "verify-speh reproduces the reference orbit exactly", 30.0, [](std::string& d) {
    AnalysisConfig c;
    VerifyResult res = verify_speh(c);
    for (const auto& ch : res.checks)
      expect(d, ch.passed, "failed check: " + ch.name + " " + ch.detail);
    expect(d, res.passed, "verify-speh reported failure");
  });

  // 2. Shifted K-type family from the lowest K-type (1,1) up to norm 15.
  criterion(2, "shifted lattice from (1,1) is the odd dominant family up to norm 15", 0,
            [](std::string& d) {
              AnalysisConfig c;
              c.fixture = "speh_sl4R";
              c.bound = 15;
              OrbitReport rep = analyze(c);
              ReportQuery q(rep);
              auto got_list = q.shifted({1, 1}, 15);
              std::set<WeightVec> got(got_list.begin(), got_list.end());
              std::set<WeightVec> expect_set;
              for (long long m = 0; 2 * m + 1 <= 15; ++m)
                for (long long n = 0; n <= m; ++n) expect_set.insert({2 * m + 1, 2 * n + 1});
              expect(d, got == expect_set, "shifted family mismatch");
            });

  // 3. su(6,3) partition 3+3+3: small, certified not spherical, 26 vs 27.
  criterion(3, "su(6,3) 3+3+3 is small, not spherical (certified), borel 26 < orbit 27", 60.0,
            [](std::string& d) {
              AnalysisConfig c;
              c.fixture = "su63_333";
              OrbitReport rep = analyze(c);
              expect(d, rep.small, "expected small");
              expect(d, !rep.spherical, "expected not spherical");
              expect(d, rep.spherical_certainty == "certified", "expected a certified verdict");
              expect(d, rep.dim_borel == 26, "expected borel dimension 26");
              expect(d, rep.dim_orbit == 27, "expected orbit dimension 27");
            });

  // 4. su(2,1) principal: spherical, small, k_C(x;4) != 0, height 4.
  criterion(4, "su(2,1) principal orbit: spherical, small, k(x;4) != 0, height 4", 0,
            [](std::string& d) {
              Pipeline p = run_pipeline("su21_principal");
              expect(d, is_small(p.grading), "expected small");
              auto sph = is_spherical(p.alg, p.rd, p.e, 0, 8);
              expect(d, sph.spherical, "expected spherical");
              expect(d, p.grading.k_dim(4) > 0, "expected k_C(x;4) nonzero");
              expect(d, height(p.grading) == 4, "expected height 4");
            });

  // 5. Self-duality: both sl(6,R) 2^3 labels fail it, the sl(4,R) 2^2 orbit has it.
  criterion(5, "self-duality verdicts for sl(6,R) 2^3 (both labels) and sl(4,R) 2^2", 120.0,
            [](std::string& d) {
              for (const char* name : {"sl6_2cubed_I", "sl6_2cubed_II"}) {
                AnalysisConfig c;
                c.fixture = name;
                OrbitReport rep = analyze(c);
                expect(d, rep.status == "complete", std::string(name) + ": expected invariants");
                expect(d, !rep.self_dual, std::string(name) + ": expected self_dual = false");
              }
              AnalysisConfig c;
              c.fixture = "speh_sl4R";
              OrbitReport rep = analyze(c);
              expect(d, rep.self_dual, "speh_sl4R: expected self_dual = true");
            });

  // 6. Kernel dimensions match generator monomial counts per weight, degrees <= 6.
  criterion(6, "kernel dimensions equal generator monomial counts on small spherical fixtures", 0,
            [](std::string& d) {
              for (const auto& name : kAllFixtures) {
                Pipeline p = run_pipeline(name);
                if (!fixture_small_spherical(p)) continue;
                InvariantContext ctx(p.alg, p.rd, p.grading);
                std::size_t r = orbit_rank(p.alg, p.rd, p.grading, 0, 8);
                GeneratorSet gs = extract_generators(ctx, r, 6, 0);
                for (int n = 1; n <= 6; ++n) {
                  std::map<WeightVec, std::size_t> kernel_dims;
                  for (const auto& poly : nilradical_kernel(ctx, n)) kernel_dims[poly.weight] += 1;
                  if (kernel_dims != generator_monomial_counts(gs, p.rd, n)) {
                    expect(d, false, name + ": mismatch at degree " + std::to_string(n));
                    return;
                  }
                }
              }
            });

  // 7. Exact property suites across the catalog.
  criterion(7, "property suites: triples, grading brackets, form orthogonality, identities", 0,
            [](std::string& d) {
              for (const auto& name : kAllFixtures) {
                Pipeline p = run_pipeline(name);
                const auto& alg = p.alg;

                // triple axioms
                expect(d, alg.bracket(p.triple.x, p.triple.e) == vec_scaled(p.triple.e, Scalar(2)),
                       name + ": [x,e] != 2e");
                expect(d,
                       alg.bracket(p.triple.x, p.triple.f) == vec_scaled(p.triple.f, Scalar(-2)),
                       name + ": [x,f] != -2f");
                expect(d, alg.bracket(p.triple.e, p.triple.f) == p.triple.x,
                       name + ": [e,f] != x");

                // bracket-grading compatibility
                for (const auto& [i, bi] : p.grading.g_piece)
                  for (const auto& [j, bj] : p.grading.g_piece) {
                    auto it = p.grading.g_piece.find(i + j);
                    if (it == p.grading.g_piece.end()) {
                      for (const Vec& a : bi)
                        for (const Vec& b : bj)
                          expect(d, vec_is_zero(alg.bracket(a, b)),
                                 name + ": bracket escapes the grading");
                    } else {
                      SpanSolver span(it->second);
                      for (const Vec& a : bi)
                        for (const Vec& b : bj)
                          expect(d, span.contains(alg.bracket(a, b)),
                                 name + ": bracket escapes its graded piece");
                    }
                  }

                // Hermitian form orthogonality between graded pieces
                std::size_t N = alg.dim();
                Mat taum(N, N);
                for (std::size_t j = 0; j < N; ++j) {
                  Vec b(N);
                  b[j] = Scalar(1);
                  taum.set_col(j, alg.tau(b));
                }
                Mat H = (alg.killing_gram() * taum).scaled(Scalar(-1));
                auto pairing_zero = [&](const std::vector<Vec>& A, const std::vector<Vec>& B) {
                  for (const Vec& za : A)
                    for (const Vec& zb : B) {
                      Scalar s;
                      for (std::size_t i = 0; i < N; ++i) {
                        if (za[i].is_zero()) continue;
                        for (std::size_t j = 0; j < N; ++j)
                          if (!zb[j].is_zero()) s += za[i] * zb[j].conj() * H(i, j);
                      }
                      if (!s.is_zero()) return false;
                    }
                  return true;
                };
                for (const auto& [j, kb] : p.grading.k_piece)
                  for (const auto& [n2, pb] : p.grading.p_piece)
                    expect(d, pairing_zero(kb, pb),
                           name + ": <k(x;j), p(x;n)> != 0 at j=" + std::to_string(j));
                for (const auto& [j, pa] : p.grading.p_piece)
                  for (const auto& [n2, pb] : p.grading.p_piece)
                    if (j != n2)
                      expect(d, pairing_zero(pa, pb),
                             name + ": <p(x;j), p(x;n)> != 0 for j != n");

                bool small_orbit = is_small(p.grading);
                bool spherical_orbit = small_orbit && fixture_small_spherical(p);
                if (small_orbit)
                  expect(d, small_exact_sequence_check(p.grading, p.triple),
                         name + ": exact-sequence dimension identity failed");
                if (spherical_orbit) {
                  if (!vec_is_zero(p.e))
                    expect(d, commutativity_check(p.grading) == (height(p.grading) == 2),
                           name + ": commutativity vs height-2 equivalence failed");
                  expect(d, gy_condition_check(p.grading, p.e),
                         name + ": surjectivity of ad(e) on q cap k failed");
                }
              }
            });

  // 8. Speh cone versus the half-plane description on the integer grid.
  criterion(8, "Speh cone membership matches u >= v >= 0 on the 41x41 grid", 0,
            [](std::string& d) {
              AnalysisConfig c;
              c.fixture = "speh_sl4R";
              OrbitReport rep = analyze(c);
              ReportQuery q(rep);
              for (long long u = -20; u <= 20; ++u)
                for (long long v = -20; v <= 20; ++v) {
                  bool fm = q.cone_member(
                      {mpq_class(static_cast<long>(u)), mpq_class(static_cast<long>(v))});
                  // direct 2x2 solve: c1 (2,0) + c2 (2,2) = (u,v)
                  mpq_class c2 = mpq_class(static_cast<long>(v)) / 2;
                  mpq_class c1 = mpq_class(static_cast<long>(u)) / 2 - c2;
                  bool direct = c1 >= 0 && c2 >= 0;
                  bool closed_form = u >= v && v >= 0;
                  if (fm != direct || fm != closed_form) {
                    expect(d, false,
                           "mismatch at (" + std::to_string(u) + "," + std::to_string(v) + ")");
                    return;
                  }
                }
            });

  if (failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return 1;
}
