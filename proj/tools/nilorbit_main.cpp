#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nilorbit/report.hpp"

using namespace nilorbit;

namespace {

WeightVec parse_weight(const std::string& s) {
  WeightVec w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    w.push_back(std::stoll(item));
  }
  if (w.empty()) throw DescriptorError("empty weight: " + s);
  return w;
}

std::vector<mpq_class> parse_point(const std::string& s) {
  std::vector<mpq_class> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    mpq_class q;
    if (q.set_str(item, 10) != 0) throw DescriptorError("bad rational: " + item);
    q.canonicalize();
    v.push_back(q);
  }
  if (v.empty()) throw DescriptorError("empty point: " + s);
  return v;
}

nlohmann::ordered_json weight_json(const WeightVec& w) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (long long c : w) a.push_back(c);
  return a;
}

struct CommonOpts {
  std::string config_path, fixture, out_path, format = "json";
  std::string cache_dir = ".nilorbit-cache";
  bool no_cache = false;
  int max_degree = -1;
  long long bound = -1;
  long long seed = -1;
  int samples = -1;

  void attach(CLI::App* app, bool with_out = true) {
    app->add_option("--config", config_path, "JSON or TOML config file");
    app->add_option("--fixture", fixture, "catalog orbit name (see `fixtures`)");
    app->add_option("--max-degree", max_degree, "generator search degree bound");
    app->add_option("--bound", bound, "lattice enumeration bound (max norm)");
    app->add_option("--seed", seed, "random seed for the exact sampling steps");
    app->add_option("--samples", samples, "sphericality/rank sample count");
    app->add_option("--format", format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    app->add_option("--cache-dir", cache_dir, "report cache directory");
    app->add_flag("--no-cache", no_cache, "bypass the report cache");
    if (with_out) app->add_option("--out", out_path, "write the JSON report here");
  }

  AnalysisConfig resolve() const {
    AnalysisConfig c;
    if (!config_path.empty())
      c = AnalysisConfig::from_file(config_path);
    else if (!fixture.empty())
      c.fixture = fixture;
    else
      throw DescriptorError("pass --fixture or --config");
    if (max_degree >= 0) c.max_degree = max_degree;
    if (bound >= 0) c.bound = bound;
    if (seed >= 0) c.seed = static_cast<std::uint64_t>(seed);
    if (samples >= 0) c.samples = samples;
    if (!out_path.empty()) c.out_path = out_path;
    return c;
  }

  OrbitReport run() const {
    AnalysisConfig c = resolve();
    return no_cache ? analyze(c) : analyze_cached(c, cache_dir);
  }
};

OrbitReport load_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DescriptorError("cannot read report: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return OrbitReport::from_json_text(ss.str());
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConsistencyError*>(&e)) return 3;
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nilpotent K_C-orbit analyzer: normal triples, gradings, invariant-ring "
               "generators, K-type lattices and asymptotic cones"};
  app.require_subcommand(1);

  CommonOpts analyze_opts, verify_opts, ktypes_opts, cone_opts;

  CLI::App* cmd_analyze = app.add_subcommand("analyze", "run the full pipeline on one orbit");
  analyze_opts.attach(cmd_analyze);

  CLI::App* cmd_fixtures = app.add_subcommand("fixtures", "list the built-in orbit catalog");
  std::string fixtures_format = "table";
  cmd_fixtures->add_option("--format", fixtures_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  CLI::App* cmd_verify =
      app.add_subcommand("verify-speh", "check the reference sl(4,R) orbit end to end");
  verify_opts.attach(cmd_verify, false);

  CLI::App* cmd_ktypes = app.add_subcommand("ktypes", "K-type lattice queries against a report");
  std::string report_path, weight_arg, shift_arg;
  long long enum_bound = -1;
  ktypes_opts.attach(cmd_ktypes, false);
  cmd_ktypes->add_option("--report", report_path, "saved JSON report to query");
  cmd_ktypes->add_option("--weight", weight_arg, "comma-separated weight: print multiplicity");
  cmd_ktypes->add_option("--enumerate", enum_bound, "list lattice points up to this norm");
  cmd_ktypes->add_option("--shift", shift_arg, "lowest K-type for the shifted lattice");

  CLI::App* cmd_cone = app.add_subcommand("cone", "asymptotic cone membership queries");
  std::string cone_report_path, point_arg;
  cone_opts.attach(cmd_cone, false);
  cmd_cone->add_option("--report", cone_report_path, "saved JSON report to query");
  cmd_cone->add_option("--point", point_arg, "comma-separated rational vector");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_analyze->parsed()) {
      AnalysisConfig c = analyze_opts.resolve();
      OrbitReport rep = analyze_opts.no_cache ? analyze(c) : analyze_cached(c, analyze_opts.cache_dir);
      std::string text = rep.to_json_text();
      if (!c.out_path.empty()) {
        std::ofstream f(c.out_path);
        if (!f) throw DescriptorError("cannot write " + c.out_path);
        f << text << "\n";
      }
      if (analyze_opts.format == "table")
        std::cout << rep.table_text();
      else
        std::cout << text << "\n";
      return 0;
    }

    if (cmd_fixtures->parsed()) {
      auto entries = list_fixtures();
      if (fixtures_format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& f : entries)
          arr.push_back({{"name", f.name}, {"algebra", f.algebra}, {"orbit", f.orbit}});
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& f : entries)
          std::cout << f.name << "\t" << f.algebra << "\t" << f.orbit << "\n";
      }
      return 0;
    }

    if (cmd_verify->parsed()) {
      AnalysisConfig c;
      c.fixture = "speh_sl4R";
      if (verify_opts.max_degree >= 0) c.max_degree = verify_opts.max_degree;
      if (verify_opts.bound >= 0) c.bound = verify_opts.bound;
      if (verify_opts.seed >= 0) c.seed = static_cast<std::uint64_t>(verify_opts.seed);
      if (verify_opts.samples >= 0) c.samples = verify_opts.samples;
      VerifyResult res = verify_speh(c);
      for (const auto& ch : res.checks) {
        std::cout << (ch.passed ? "PASS" : "FAIL") << "  " << ch.name;
        if (!ch.detail.empty()) std::cout << "  (" << ch.detail << ")";
        std::cout << "\n";
      }
      std::cout << (res.passed ? "verify-speh: all checks passed" : "verify-speh: FAILED")
                << "\n";
      return res.passed ? 0 : 1;
    }

    if (cmd_ktypes->parsed()) {
      OrbitReport rep = report_path.empty() ? ktypes_opts.run() : load_report(report_path);
      if (rep.status != "complete")
        throw DescriptorError("report has no K-type lattice: " + rep.status);
      ReportQuery q(rep);
      nlohmann::ordered_json out;
      nlohmann::ordered_json gammas = nlohmann::ordered_json::array();
      for (const auto& g : rep.gamma_weights) gammas.push_back(weight_json(g));
      out["generators"] = gammas;
      if (!weight_arg.empty()) {
        WeightVec lam = parse_weight(weight_arg);
        out["weight"] = weight_json(lam);
        out["multiplicity"] = q.multiplicity(lam);
      }
      if (enum_bound >= 0) {
        nlohmann::ordered_json pts = nlohmann::ordered_json::array();
        for (const auto& [w, m] : q.enumerate(enum_bound))
          pts.push_back({{"weight", weight_json(w)}, {"multiplicity", m}});
        out["lattice"] = pts;
      }
      if (!shift_arg.empty()) {
        long long b = ktypes_opts.bound >= 0 ? ktypes_opts.bound : rep.bound;
        nlohmann::ordered_json pts = nlohmann::ordered_json::array();
        for (const auto& w : q.shifted(parse_weight(shift_arg), b)) pts.push_back(weight_json(w));
        out["shifted_lattice"] = pts;
      }
      if (ktypes_opts.format == "table") {
        for (const auto& [k, v] : out.items()) std::cout << k << ": " << v.dump() << "\n";
      } else {
        std::cout << out.dump(2) << "\n";
      }
      return 0;
    }

    if (cmd_cone->parsed()) {
      OrbitReport rep = cone_report_path.empty() ? cone_opts.run() : load_report(cone_report_path);
      if (rep.status != "complete")
        throw DescriptorError("report has no cone data: " + rep.status);
      ReportQuery q(rep);
      nlohmann::ordered_json out;
      out["cone_inequalities"] = rep.cone_inequalities;
      if (!point_arg.empty()) {
        auto v = parse_point(point_arg);
        out["point"] = point_arg;
        out["contains"] = q.cone_member(v);
      }
      if (cone_opts.format == "table") {
        for (const auto& [k, val] : out.items()) std::cout << k << ": " << val.dump() << "\n";
      } else {
        std::cout << out.dump(2) << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 0;
}
