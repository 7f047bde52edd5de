#ifndef NILORBIT_REPORT_HPP
#define NILORBIT_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilorbit/invariants.hpp"
#include "nilorbit/ktypes.hpp"
#include "nilorbit/orbits.hpp"

namespace nilorbit {

struct AnalysisConfig {
  std::string fixture;  // either a catalog name ...
  std::optional<RealFormDescriptor> algebra;  // ... or explicit algebra+orbit
  std::optional<OrbitDescriptor> orbit;
  int max_degree = 6;
  long long bound = 12;
  std::uint64_t seed = 0;
  int samples = 8;
  std::string out_path;

  static AnalysisConfig from_json_text(const std::string& text);
  static AnalysisConfig from_toml_text(const std::string& text);
  static AnalysisConfig from_file(const std::string& path);

  /// Stable content hash of the inputs that determine the report.
  std::string content_hash() const;
};

struct GeneratorReport {
  int degree = 0;
  WeightVec weight;
  std::map<std::string, std::string> poly;  // "e1,e2,..." -> coefficient
};

struct OrbitReport {
  RealFormDescriptor algebra;
  OrbitDescriptor orbit;
  int max_degree = 6;
  long long bound = 12;
  std::uint64_t seed = 0;
  int samples = 8;

  Vec x, e, f;
  std::map<int, std::vector<std::size_t>> grading_dims;  // j -> {g,k,p}
  int height = 0;
  bool small = false;
  bool spherical = false;
  std::string spherical_certainty;
  std::size_t dim_orbit = 0, dim_borel = 0, rank = 0;
  bool gy_condition = false;
  std::string status;  // "complete" or the reason invariants were skipped

  bool self_dual = false;
  std::vector<GeneratorReport> generators;
  std::vector<WeightVec> gamma_weights;
  std::vector<WeightVec> gamma_dual_candidates;
  std::vector<std::pair<WeightVec, std::size_t>> lattice_sample;
  std::vector<std::vector<long long>> cone_inequalities;
  std::map<std::string, double> timings_ms;

  std::string to_json_text(int indent = 2) const;
  static OrbitReport from_json_text(const std::string& text);
  std::string table_text() const;
};

/// Full pipeline: realization -> representative -> triple -> root datum ->
/// grading -> flags -> (small and spherical) invariants -> lattice -> cone.
/// Errors carry the failing stage in their message.
OrbitReport analyze(const AnalysisConfig& config);

/// analyze() with a content-addressed JSON cache.
OrbitReport analyze_cached(const AnalysisConfig& config, const std::string& cache_dir);

struct FixtureEntry {
  std::string name;
  std::string algebra;
  std::string orbit;
};
std::vector<FixtureEntry> list_fixtures();
AnalysisConfig fixture_config(const std::string& name);

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};
struct VerifyResult {
  std::vector<VerifyCheck> checks;
  bool passed = false;
};

/// Reproduces the height-2 sl(4,R) reference orbit end to end: generator
/// degrees and weights, the shifted K-type family, the cone, and the flags.
VerifyResult verify_speh(const AnalysisConfig& config);

/// Rebuild lattice/cone machinery from a saved report for follow-up queries.
struct ReportQuery {
  ReportQuery(const OrbitReport& report);
  std::size_t multiplicity(const WeightVec& lambda) const;
  std::vector<std::pair<WeightVec, std::size_t>> enumerate(long long bound) const;
  std::vector<WeightVec> shifted(const WeightVec& mu, long long bound) const;
  bool cone_member(const std::vector<mpq_class>& v) const;
  const Cone& cone() const { return cone_; }

private:
  AlgebraRealization alg_;
  RootDatum rd_;
  KTypeLattice lattice_;
  Cone cone_;
};

}  // namespace nilorbit

#endif
