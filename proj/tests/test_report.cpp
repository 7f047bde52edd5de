#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "nilorbit/report.hpp"

using namespace nilorbit;

namespace {

const OrbitReport& speh_report() {
  static const OrbitReport rep = [] {
    AnalysisConfig c;
    c.fixture = "speh_sl4R";
    return analyze(c);
  }();
  return rep;
}

}  // namespace

TEST_CASE("config parsing from JSON") {
  auto c = AnalysisConfig::from_json_text(
      R"({"fixture":"speh_sl4R","max_degree":4,"bound":9,"seed":7,"samples":5})");
  CHECK(c.fixture == "speh_sl4R");
  CHECK(c.max_degree == 4);
  CHECK(c.bound == 9);
  CHECK(c.seed == 7);
  CHECK(c.samples == 5);

  auto c2 = AnalysisConfig::from_json_text(
      R"({"algebra":{"family":"su","p":6,"q":3},"orbit":{"signed":"+-+.+-+.+-+"}})");
  CHECK(c2.algebra->family == Family::SU);
  CHECK(c2.orbit->kind == OrbitDescriptor::Kind::Signed);

  CHECK_THROWS_AS(AnalysisConfig::from_json_text(R"({"max_degree":3})"), DescriptorError);
  CHECK_THROWS_AS(AnalysisConfig::from_json_text(
                      R"({"fixture":"speh_sl4R","algebra":{"family":"sl_R","n":4}})"),
                  DescriptorError);
  CHECK_THROWS_AS(AnalysisConfig::from_json_text(R"({"fixture":"x","max_degree":0})"),
                  DescriptorError);
}

TEST_CASE("config parsing from TOML") {
  auto c = AnalysisConfig::from_toml_text(
      "# reference orbit\n"
      "algebra.family = \"sl_R\"  # split form\n"
      "algebra.n = 4\n"
      "orbit.partition = [2, 2]\n"
      "orbit.label = \"I\"\n"
      "max_degree = 5\n"
      "bound = 10\n");
  REQUIRE(c.algebra.has_value());
  CHECK(c.algebra->family == Family::SlR);
  CHECK(c.algebra->n == 4);
  CHECK(c.orbit->partition == std::vector<int>{2, 2});
  CHECK(c.orbit->label == "I");
  CHECK(c.max_degree == 5);
  CHECK(c.bound == 10);

  auto c2 = AnalysisConfig::from_toml_text("fixture = \"su21_principal\"\nseed = 3\n");
  CHECK(c2.fixture == "su21_principal");
  CHECK(c2.seed == 3);

  CHECK_THROWS_AS(AnalysisConfig::from_toml_text("unknown_key = 1\n"), DescriptorError);
  CHECK_THROWS_AS(AnalysisConfig::from_toml_text("[table]\nfixture = \"x\"\n"), DescriptorError);
}

TEST_CASE("fixtures catalog") {
  auto entries = list_fixtures();
  auto has = [&](const std::string& name) {
    for (const auto& e : entries)
      if (e.name == name) return true;
    return false;
  };
  CHECK(has("speh_sl4R"));
  CHECK(has("su21_principal"));
  CHECK(has("sl6_2cubed_I"));
  CHECK(has("sl6_2cubed_II"));
  CHECK(has("su63_333"));
  CHECK(has("zero_sl4R"));
  for (const auto& e : entries) CHECK_NOTHROW(fixture_config(e.name));
  CHECK_THROWS_AS(fixture_config("nope"), DescriptorError);
}

TEST_CASE("analyze produces the reference Speh report") {
  const auto& rep = speh_report();
  CHECK(rep.status == "complete");
  CHECK(rep.height == 2);
  CHECK(rep.small);
  CHECK(rep.spherical);
  CHECK(rep.spherical_certainty == "monte-carlo");
  CHECK(rep.dim_orbit == 4);
  CHECK(rep.dim_borel == 4);
  CHECK(rep.rank == 2);
  CHECK(rep.gy_condition);
  CHECK(rep.self_dual);
  REQUIRE(rep.generators.size() == 2);
  CHECK(rep.generators[0].degree == 1);
  CHECK(rep.generators[0].weight == WeightVec{2, 0});
  CHECK(rep.generators[1].degree == 2);
  CHECK(rep.generators[1].weight == WeightVec{2, 2});
  CHECK(rep.gamma_weights == std::vector<WeightVec>{{2, 0}, {2, 2}});
  CHECK(rep.cone_inequalities == std::vector<std::vector<long long>>{{0, 1}, {1, -1}});
  // lattice sample starts at the trivial K-type
  REQUIRE(!rep.lattice_sample.empty());
  CHECK(rep.lattice_sample[0].first == WeightVec{0, 0});
  CHECK(rep.lattice_sample[0].second == 1);
}

TEST_CASE("analyze skips invariants on non-spherical orbits") {
  AnalysisConfig c;
  c.fixture = "su63_333";
  OrbitReport rep = analyze(c);
  CHECK(rep.small);
  CHECK(!rep.spherical);
  CHECK(rep.spherical_certainty == "certified");
  CHECK(rep.dim_borel == 26);
  CHECK(rep.dim_orbit == 27);
  CHECK(rep.status == "invariants skipped: orbit is not spherical");
  CHECK(rep.generators.empty());
}

TEST_CASE("analyze flags the failing stage") {
  AnalysisConfig c;
  c.algebra = RealFormDescriptor::sl_real(4);
  c.orbit = OrbitDescriptor::from_partition({3, 2});
  try {
    analyze(c);
    FAIL("expected a descriptor error");
  } catch (const DescriptorError& e) {
    CHECK(std::string(e.what()).find("[representative]") != std::string::npos);
  }
}

TEST_CASE("report JSON round trip is lossless") {
  const auto& rep = speh_report();
  std::string text = rep.to_json_text();
  OrbitReport back = OrbitReport::from_json_text(text);
  CHECK(back.to_json_text() == text);

  // partial report too
  AnalysisConfig c;
  c.fixture = "su63_333";
  OrbitReport partial = analyze(c);
  CHECK(OrbitReport::from_json_text(partial.to_json_text()).to_json_text() ==
        partial.to_json_text());
}

TEST_CASE("reports are deterministic given config and seed") {
  AnalysisConfig c;
  c.fixture = "speh_sl4R";
  OrbitReport a = analyze(c);
  OrbitReport b = analyze(c);
  a.timings_ms.clear();
  b.timings_ms.clear();
  CHECK(a.to_json_text() == b.to_json_text());
}

TEST_CASE("content hash keys the cache") {
  AnalysisConfig c;
  c.fixture = "speh_sl4R";
  AnalysisConfig c2 = c;
  CHECK(c.content_hash() == c2.content_hash());
  c2.seed = 99;
  CHECK(c.content_hash() != c2.content_hash());
  // a fixture resolves to the same hash as its explicit spelling
  AnalysisConfig expl;
  expl.algebra = RealFormDescriptor::sl_real(4);
  expl.orbit = OrbitDescriptor::from_partition({2, 2}, "I");
  CHECK(expl.content_hash() == c.content_hash());

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "nilorbit-cache-test";
  fs::remove_all(dir);
  OrbitReport first = analyze_cached(c, dir.string());
  CHECK(fs::exists(dir / (c.content_hash() + ".json")));
  OrbitReport second = analyze_cached(c, dir.string());  // served from disk
  first.timings_ms.clear();
  second.timings_ms.clear();
  CHECK(first.to_json_text() == second.to_json_text());
  fs::remove_all(dir);
}

TEST_CASE("verify_speh passes with defaults and fails at max_degree 1") {
  AnalysisConfig c;
  VerifyResult ok = verify_speh(c);
  CHECK(ok.passed);
  for (const auto& ch : ok.checks) CHECK(ch.passed);

  AnalysisConfig low;
  low.max_degree = 1;
  VerifyResult bad = verify_speh(low);
  CHECK(!bad.passed);
  REQUIRE(!bad.checks.empty());
  CHECK(bad.checks[0].name == "analyze");
  CHECK(bad.checks[0].detail.find("increase degree bound") != std::string::npos);
}

TEST_CASE("verify_speh shifted lattice sample at bound 3") {
  AnalysisConfig c;
  c.bound = 3;
  VerifyResult res = verify_speh(c);
  CHECK(res.passed);  // {(1,1),(3,1),(3,3)} is the expected family at bound 3
}

TEST_CASE("ReportQuery answers from a reloaded report") {
  std::string text = speh_report().to_json_text();
  OrbitReport rep = OrbitReport::from_json_text(text);
  ReportQuery q(rep);
  CHECK(q.multiplicity({4, 2}) == 1);
  CHECK(q.multiplicity({1, 0}) == 0);
  CHECK(q.enumerate(4).size() == 6);
  auto shifted = q.shifted({1, 1}, 3);
  CHECK(shifted.size() == 3);
  CHECK(q.cone_member({mpq_class(3), mpq_class(1)}));
  CHECK(!q.cone_member({mpq_class(0), mpq_class(2)}));
}

TEST_CASE("explicit matrix descriptors run the full pipeline") {
  // the standard 2+2 representative given as a raw matrix
  auto alg = build_real_form(RealFormDescriptor::sl_real(4));
  AnalysisConfig cfix = fixture_config("speh_sl4R");
  Mat E = alg.matrix_of(representative(alg, *cfix.orbit));
  AnalysisConfig c;
  c.algebra = RealFormDescriptor::sl_real(4);
  c.orbit = OrbitDescriptor::from_matrix(E);
  OrbitReport rep = analyze(c);
  CHECK(rep.status == "complete");
  CHECK(rep.height == 2);
  CHECK(rep.gamma_weights == std::vector<WeightVec>{{2, 0}, {2, 2}});

  // rotating the representative off the torus alignment is caught at the
  // root-datum stage with guidance toward the catalog constructions
  Mat R = Mat::identity(4);
  R(1, 1) = Scalar(3, 5);
  R(1, 2) = Scalar(4, 5);
  R(2, 1) = Scalar(-4, 5);
  R(2, 2) = Scalar(3, 5);
  AnalysisConfig rot;
  rot.algebra = RealFormDescriptor::sl_real(4);
  rot.orbit = OrbitDescriptor::from_matrix(R * E * R.transpose());
  try {
    analyze(rot);
    FAIL("expected the rotated representative to be rejected");
  } catch (const DescriptorError& e) {
    std::string msg = e.what();
    CHECK(msg.find("[root_datum]") != std::string::npos);
    CHECK(msg.find("standard Cartan") != std::string::npos);
  }
}

TEST_CASE("odd ambient size: sl(5,R) partition 2+2+1") {
  AnalysisConfig c;
  c.algebra = RealFormDescriptor::sl_real(5);
  c.orbit = OrbitDescriptor::from_partition({2, 2, 1});
  OrbitReport rep = analyze(c);
  CHECK(rep.status == "complete");
  CHECK(rep.height == 2);
  CHECK(rep.small);
  CHECK(rep.spherical);
  CHECK(rep.rank == 2);
  REQUIRE(rep.generators.size() == 2);
  CHECK(rep.generators[0].degree == 1);
  CHECK(rep.generators[0].weight == WeightVec{2, 0});
  CHECK(rep.generators[1].degree == 2);
  CHECK(rep.generators[1].weight == WeightVec{2, 2});
}

TEST_CASE("mirrored su(2,2) orbits carry dual lattices") {
  auto run = [](const std::string& spec) {
    AnalysisConfig c;
    c.algebra = RealFormDescriptor::su(2, 2);
    c.orbit = OrbitDescriptor::from_signed(spec);
    return analyze(c);
  };
  OrbitReport a = run("+-.+-");
  OrbitReport b = run("-+.-+");
  OrbitReport s = run("+-.-+");
  CHECK(!a.self_dual);
  CHECK(!b.self_dual);
  CHECK(s.self_dual);
  // the gamma set of one mirror is exactly the dual-candidate set of the other
  std::multiset<WeightVec> b_gamma(b.gamma_weights.begin(), b.gamma_weights.end());
  std::multiset<WeightVec> a_dual(a.gamma_dual_candidates.begin(),
                                  a.gamma_dual_candidates.end());
  CHECK(b_gamma == a_dual);
  std::multiset<WeightVec> a_gamma(a.gamma_weights.begin(), a.gamma_weights.end());
  std::multiset<WeightVec> b_dual(b.gamma_dual_candidates.begin(),
                                  b.gamma_dual_candidates.end());
  CHECK(a_gamma == b_dual);
}

TEST_CASE("zero orbit analyzes to the trivial lattice") {
  AnalysisConfig c;
  c.fixture = "zero_su21";
  OrbitReport rep = analyze(c);
  CHECK(rep.status == "complete");
  CHECK(rep.height == 0);
  CHECK(rep.small);
  CHECK(rep.spherical);
  CHECK(rep.spherical_certainty == "certified");
  CHECK(rep.rank == 0);
  CHECK(rep.generators.empty());
  REQUIRE(rep.lattice_sample.size() == 1);
  CHECK(rep.lattice_sample[0].second == 1);
}
