#include "nilorbit/report.hpp"

#include <chrono>
#include <filesystem>
#include <set>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nilorbit {

namespace {

using ojson = nlohmann::ordered_json;
using nlohmann::json;

ojson scalar_to_json(const Scalar& s) {
  return ojson{{"re", s.re_str()}, {"im", s.im_str()}};
}

Scalar scalar_from_json(const json& j) {
  return Scalar::from_strings(j.at("re").get<std::string>(), j.at("im").get<std::string>());
}

ojson vec_to_json(const Vec& v) {
  ojson arr = ojson::array();
  for (const Scalar& s : v) arr.push_back(scalar_to_json(s));
  return arr;
}

Vec vec_from_json(const json& j) {
  Vec v;
  for (const auto& s : j) v.push_back(scalar_from_json(s));
  return v;
}

ojson weight_to_json(const WeightVec& w) {
  ojson arr = ojson::array();
  for (long long c : w) arr.push_back(c);
  return arr;
}

WeightVec weight_from_json(const json& j) { return j.get<WeightVec>(); }

ojson algebra_to_json(const RealFormDescriptor& d) {
  if (d.family == Family::SlR) return ojson{{"family", "sl_R"}, {"n", d.n}};
  return ojson{{"family", "su"}, {"p", d.p}, {"q", d.q}};
}

RealFormDescriptor algebra_from_json(const json& j) {
  std::string fam = j.at("family").get<std::string>();
  if (fam == "sl_R") return RealFormDescriptor::sl_real(j.at("n").get<int>());
  if (fam == "su") return RealFormDescriptor::su(j.at("p").get<int>(), j.at("q").get<int>());
  throw DescriptorError("unknown algebra family: " + fam);
}

ojson orbit_to_json(const OrbitDescriptor& d) {
  switch (d.kind) {
    case OrbitDescriptor::Kind::Partition: {
      ojson o{{"partition", d.partition}};
      if (!d.label.empty()) o["label"] = d.label;
      return o;
    }
    case OrbitDescriptor::Kind::Signed:
      return ojson{{"signed", d.signed_spec()}};
    case OrbitDescriptor::Kind::Matrix: {
      ojson rows = ojson::array();
      for (std::size_t i = 0; i < d.matrix.rows(); ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < d.matrix.cols(); ++j)
          row.push_back(scalar_to_json(d.matrix(i, j)));
        rows.push_back(row);
      }
      return ojson{{"matrix", rows}};
    }
  }
  throw DescriptorError("unreachable orbit kind");
}

OrbitDescriptor orbit_from_json(const json& j) { return OrbitDescriptor::from_json_text(j.dump()); }

std::string exponents_key(const std::vector<int>& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s;
}

template <typename F>
auto run_stage(OrbitReport& rep, const std::string& name, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  auto wrap = [&](auto&& action) -> decltype(f()) {
    try {
      return action();
    } catch (const DescriptorError& e) {
      throw DescriptorError("[" + name + "] " + e.what());
    } catch (const DegreeBoundError& e) {
      throw DegreeBoundError("[" + name + "] " + e.what());
    } catch (const ConsistencyError& e) {
      throw ConsistencyError("[" + name + "] " + e.what());
    } catch (const std::exception& e) {
      throw ConsistencyError("[" + name + "] " + e.what());
    }
  };
  if constexpr (std::is_void_v<decltype(f())>) {
    wrap(f);
    rep.timings_ms[name] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  } else {
    auto out = wrap(f);
    rep.timings_ms[name] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
  }
}

// Flat TOML subset: dotted keys, '=' assignments, strings, integers,
// booleans, and integer arrays. Enough for the AnalysisConfig schema.
std::map<std::string, std::string> parse_flat_toml(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    bool in_str = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_str = !in_str;
      if (line[i] == '#' && !in_str) {
        line = line.substr(0, i);
        break;
      }
    }
    auto trim = [](std::string s) {
      std::size_t a = s.find_first_not_of(" \t\r");
      std::size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[')
      throw DescriptorError("TOML table headers are not supported; use dotted keys");
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw DescriptorError("bad TOML line: " + line);
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

long long toml_int(const std::string& v) {
  std::size_t pos = 0;
  long long out = std::stoll(v, &pos);
  if (pos != v.size()) throw DescriptorError("bad TOML integer: " + v);
  return out;
}

std::string toml_string(const std::string& v) {
  if (v.size() < 2 || v.front() != '"' || v.back() != '"')
    throw DescriptorError("TOML strings must be double quoted: " + v);
  return v.substr(1, v.size() - 2);
}

std::vector<int> toml_int_array(const std::string& v) {
  if (v.size() < 2 || v.front() != '[' || v.back() != ']')
    throw DescriptorError("bad TOML array: " + v);
  std::vector<int> out;
  std::string body = v.substr(1, v.size() - 2);
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    out.push_back(static_cast<int>(toml_int(item.substr(a, item.find_last_not_of(" \t") - a + 1))));
  }
  return out;
}

void apply_common_params(AnalysisConfig& c, const json& j) {
  if (j.contains("max_degree")) c.max_degree = j["max_degree"].get<int>();
  if (j.contains("bound")) c.bound = j["bound"].get<long long>();
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("samples")) c.samples = j["samples"].get<int>();
  if (j.contains("out")) c.out_path = j["out"].get<std::string>();
}

void validate_config(const AnalysisConfig& c) {
  if (c.fixture.empty() && (!c.algebra || !c.orbit))
    throw DescriptorError("config needs a fixture name or an algebra and an orbit");
  if (!c.fixture.empty() && (c.algebra || c.orbit))
    throw DescriptorError("config must not mix a fixture name with explicit algebra/orbit");
  if (c.max_degree < 1) throw DescriptorError("max_degree must be positive");
  if (c.bound < 0) throw DescriptorError("bound must be nonnegative");
  if (c.samples < 0) throw DescriptorError("samples must be nonnegative");
}

}  // namespace

AnalysisConfig AnalysisConfig::from_json_text(const std::string& text) {
  json j = json::parse(text);
  AnalysisConfig c;
  if (j.contains("fixture")) c.fixture = j["fixture"].get<std::string>();
  if (j.contains("algebra")) c.algebra = algebra_from_json(j["algebra"]);
  if (j.contains("orbit")) c.orbit = orbit_from_json(j["orbit"]);
  apply_common_params(c, j);
  validate_config(c);
  return c;
}

AnalysisConfig AnalysisConfig::from_toml_text(const std::string& text) {
  auto kv = parse_flat_toml(text);
  AnalysisConfig c;
  json orbit_obj = json::object();
  json algebra_obj = json::object();
  for (const auto& [key, value] : kv) {
    if (key == "fixture")
      c.fixture = toml_string(value);
    else if (key == "out")
      c.out_path = toml_string(value);
    else if (key == "max_degree")
      c.max_degree = static_cast<int>(toml_int(value));
    else if (key == "bound")
      c.bound = toml_int(value);
    else if (key == "seed")
      c.seed = static_cast<std::uint64_t>(toml_int(value));
    else if (key == "samples")
      c.samples = static_cast<int>(toml_int(value));
    else if (key == "algebra.family")
      algebra_obj["family"] = toml_string(value);
    else if (key == "algebra.n")
      algebra_obj["n"] = toml_int(value);
    else if (key == "algebra.p")
      algebra_obj["p"] = toml_int(value);
    else if (key == "algebra.q")
      algebra_obj["q"] = toml_int(value);
    else if (key == "orbit.partition")
      orbit_obj["partition"] = toml_int_array(value);
    else if (key == "orbit.label")
      orbit_obj["label"] = toml_string(value);
    else if (key == "orbit.signed")
      orbit_obj["signed"] = toml_string(value);
    else
      throw DescriptorError("unknown TOML key: " + key);
  }
  if (!algebra_obj.empty()) c.algebra = algebra_from_json(algebra_obj);
  if (!orbit_obj.empty()) c.orbit = orbit_from_json(orbit_obj);
  validate_config(c);
  return c;
}

AnalysisConfig AnalysisConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DescriptorError("cannot read config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return from_json_text(text);
  return from_toml_text(text);
}

std::string AnalysisConfig::content_hash() const {
  AnalysisConfig resolved = *this;
  if (!fixture.empty()) {
    AnalysisConfig fc = fixture_config(fixture);
    resolved.algebra = fc.algebra;
    resolved.orbit = fc.orbit;
  }
  ojson o;
  o["algebra"] = algebra_to_json(*resolved.algebra);
  o["orbit"] = orbit_to_json(*resolved.orbit);
  o["max_degree"] = max_degree;
  o["bound"] = bound;
  o["seed"] = seed;
  o["samples"] = samples;
  std::string s = o.dump();
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<FixtureEntry> list_fixtures() {
  return {
      {"speh_sl4R", "sl(4,R)", "partition 2+2, label I"},
      {"sl4_211", "sl(4,R)", "partition 2+1+1"},
      {"sl6_2cubed_I", "sl(6,R)", "partition 2+2+2, label I"},
      {"sl6_2cubed_II", "sl(6,R)", "partition 2+2+2, label II"},
      {"su63_333", "su(6,3)", "signed rows +-+.+-+.+-+"},
      {"su21_principal", "su(2,1)", "signed row +-+"},
      {"zero_sl4R", "sl(4,R)", "zero orbit"},
      {"zero_sl6R", "sl(6,R)", "zero orbit"},
      {"zero_su63", "su(6,3)", "zero orbit"},
      {"zero_su21", "su(2,1)", "zero orbit"},
  };
}

AnalysisConfig fixture_config(const std::string& name) {
  AnalysisConfig c;
  auto set = [&](RealFormDescriptor a, OrbitDescriptor o) {
    c.algebra = std::move(a);
    c.orbit = std::move(o);
  };
  if (name == "speh_sl4R")
    set(RealFormDescriptor::sl_real(4), OrbitDescriptor::from_partition({2, 2}, "I"));
  else if (name == "sl4_211")
    set(RealFormDescriptor::sl_real(4), OrbitDescriptor::from_partition({2, 1, 1}));
  else if (name == "sl6_2cubed_I")
    set(RealFormDescriptor::sl_real(6), OrbitDescriptor::from_partition({2, 2, 2}, "I"));
  else if (name == "sl6_2cubed_II")
    set(RealFormDescriptor::sl_real(6), OrbitDescriptor::from_partition({2, 2, 2}, "II"));
  else if (name == "su63_333")
    set(RealFormDescriptor::su(6, 3), OrbitDescriptor::from_signed("+-+.+-+.+-+"));
  else if (name == "su21_principal")
    set(RealFormDescriptor::su(2, 1), OrbitDescriptor::from_signed("+-+"));
  else if (name == "zero_sl4R")
    set(RealFormDescriptor::sl_real(4), OrbitDescriptor::from_partition({1, 1, 1, 1}));
  else if (name == "zero_sl6R")
    set(RealFormDescriptor::sl_real(6), OrbitDescriptor::from_partition({1, 1, 1, 1, 1, 1}));
  else if (name == "zero_su63")
    set(RealFormDescriptor::su(6, 3), OrbitDescriptor::from_signed("+.+.+.+.+.+.-.-.-"));
  else if (name == "zero_su21")
    set(RealFormDescriptor::su(2, 1), OrbitDescriptor::from_signed("+.+.-"));
  else
    throw DescriptorError("unknown fixture: " + name);
  return c;
}

OrbitReport analyze(const AnalysisConfig& config) {
  validate_config(config);
  AnalysisConfig c = config;
  if (!c.fixture.empty()) {
    AnalysisConfig fc = fixture_config(c.fixture);
    c.algebra = fc.algebra;
    c.orbit = fc.orbit;
  }

  OrbitReport rep;
  rep.algebra = *c.algebra;
  rep.orbit = *c.orbit;
  rep.max_degree = c.max_degree;
  rep.bound = c.bound;
  rep.seed = c.seed;
  rep.samples = c.samples;

  AlgebraRealization alg =
      run_stage(rep, "build", [&] { return build_real_form(*c.algebra); });
  rep.e = run_stage(rep, "representative", [&] { return representative(alg, *c.orbit); });
  NormalTriple triple =
      run_stage(rep, "triple", [&] { return complete_to_normal_triple(alg, rep.e); });
  rep.x = triple.x;
  rep.f = triple.f;
  RootDatum rd = run_stage(rep, "root_datum", [&] { return build_root_datum(alg, triple.x); });
  AdGrading grading = run_stage(rep, "grading", [&] { return grade(alg, triple.x); });

  SphericalResult sph;
  run_stage(rep, "flags", [&] {
    for (const auto& [j, basis] : grading.g_piece)
      rep.grading_dims[j] = {basis.size(), grading.k_dim(j), grading.p_dim(j)};
    rep.height = height(grading);
    rep.small = is_small(grading);
    sph = is_spherical(alg, rd, rep.e, c.seed, c.samples);
    rep.spherical = sph.spherical;
    rep.spherical_certainty =
        sph.certainty == Certainty::Certified ? "certified" : "monte-carlo";
    rep.dim_orbit = sph.dim_orbit;
    rep.dim_borel = sph.dim_borel;
    rep.rank = orbit_rank(alg, rd, grading, c.seed, c.samples);
    rep.gy_condition = gy_condition_check(grading, rep.e);
  });

  if (rep.small && rep.spherical) {
    GeneratorSet gs = run_stage(rep, "invariants", [&] {
      InvariantContext ctx(alg, rd, grading);
      return extract_generators(ctx, rep.rank, c.max_degree, c.seed);
    });
    run_stage(rep, "lattice", [&] {
      KTypeLattice lattice(rd, gs.mu);
      bool sd = lattice.self_dual_check(c.bound);
      resolve_gamma_weights(gs, rd, sd);
      rep.self_dual = gs.self_dual;
      rep.gamma_weights = gs.gamma;
      rep.gamma_dual_candidates = gs.minus_w0_mu;
      for (const auto& g : gs.gens) {
        GeneratorReport gr;
        gr.degree = g.degree;
        gr.weight = g.weight;
        for (const auto& [e, coeff] : g.poly.coeffs) gr.poly[exponents_key(e)] = coeff.str();
        rep.generators.push_back(std::move(gr));
      }
      KTypeLattice gamma_lattice(rd, gs.gamma);
      rep.lattice_sample = gamma_lattice.enumerate(c.bound);
    });
    run_stage(rep, "cone", [&] {
      Cone cone = cone_from_rays(rd, rep.gamma_weights);
      for (const auto& row : cone.inequalities) {
        std::vector<long long> out;
        for (const auto& z : row) {
          if (!z.fits_slong_p()) throw ConsistencyError("cone inequality overflow");
          out.push_back(z.get_si());
        }
        rep.cone_inequalities.push_back(std::move(out));
      }
    });
    rep.status = "complete";
  } else {
    rep.status = rep.small ? "invariants skipped: orbit is not spherical"
                           : "invariants skipped: orbit is not small";
  }
  return rep;
}

std::string OrbitReport::to_json_text(int indent) const {
  ojson o;
  o["algebra"] = algebra_to_json(algebra);
  o["orbit"] = orbit_to_json(orbit);
  o["parameters"] = ojson{{"max_degree", max_degree},
                          {"bound", bound},
                          {"seed", seed},
                          {"samples", samples}};
  o["triple"] = ojson{{"x", vec_to_json(x)}, {"e", vec_to_json(e)}, {"f", vec_to_json(f)}};
  ojson gr = ojson::array();
  for (const auto& [j, dims] : grading_dims)
    gr.push_back(ojson{{"j", j}, {"g", dims[0]}, {"k", dims[1]}, {"p", dims[2]}});
  o["grading"] = gr;
  o["flags"] = ojson{{"height", height},
                     {"small", small},
                     {"spherical", spherical},
                     {"spherical_certainty", spherical_certainty},
                     {"dim_orbit", dim_orbit},
                     {"dim_borel", dim_borel},
                     {"rank", rank}};
  o["gy_condition"] = gy_condition;
  o["status"] = status;
  if (status == "complete") {
    o["self_dual"] = self_dual;
    ojson gens = ojson::array();
    for (const auto& g : generators) {
      ojson pg;
      for (const auto& [k, v] : g.poly) pg[k] = v;
      gens.push_back(ojson{{"degree", g.degree}, {"weight", weight_to_json(g.weight)},
                           {"poly", pg}});
    }
    o["generators"] = gens;
    ojson gamma = ojson::array();
    for (const auto& w : gamma_weights) gamma.push_back(weight_to_json(w));
    o["gamma_weights"] = gamma;
    ojson dual = ojson::array();
    for (const auto& w : gamma_dual_candidates) dual.push_back(weight_to_json(w));
    o["gamma_dual_candidates"] = dual;
    ojson lat = ojson::array();
    for (const auto& [w, m] : lattice_sample)
      lat.push_back(ojson{{"weight", weight_to_json(w)}, {"multiplicity", m}});
    o["lattice_sample"] = lat;
    o["cone_inequalities"] = cone_inequalities;
  }
  o["timings_ms"] = timings_ms;
  return o.dump(indent);
}

OrbitReport OrbitReport::from_json_text(const std::string& text) {
  json j = json::parse(text);
  OrbitReport r;
  r.algebra = algebra_from_json(j.at("algebra"));
  r.orbit = orbit_from_json(j.at("orbit"));
  const json& params = j.at("parameters");
  r.max_degree = params.at("max_degree").get<int>();
  r.bound = params.at("bound").get<long long>();
  r.seed = params.at("seed").get<std::uint64_t>();
  r.samples = params.at("samples").get<int>();
  r.x = vec_from_json(j.at("triple").at("x"));
  r.e = vec_from_json(j.at("triple").at("e"));
  r.f = vec_from_json(j.at("triple").at("f"));
  for (const auto& g : j.at("grading"))
    r.grading_dims[g.at("j").get<int>()] = {g.at("g").get<std::size_t>(),
                                            g.at("k").get<std::size_t>(),
                                            g.at("p").get<std::size_t>()};
  const json& flags = j.at("flags");
  r.height = flags.at("height").get<int>();
  r.small = flags.at("small").get<bool>();
  r.spherical = flags.at("spherical").get<bool>();
  r.spherical_certainty = flags.at("spherical_certainty").get<std::string>();
  r.dim_orbit = flags.at("dim_orbit").get<std::size_t>();
  r.dim_borel = flags.at("dim_borel").get<std::size_t>();
  r.rank = flags.at("rank").get<std::size_t>();
  r.gy_condition = j.at("gy_condition").get<bool>();
  r.status = j.at("status").get<std::string>();
  if (r.status == "complete") {
    r.self_dual = j.at("self_dual").get<bool>();
    for (const auto& g : j.at("generators")) {
      GeneratorReport gr;
      gr.degree = g.at("degree").get<int>();
      gr.weight = weight_from_json(g.at("weight"));
      for (const auto& [k, v] : g.at("poly").items()) gr.poly[k] = v.get<std::string>();
      r.generators.push_back(std::move(gr));
    }
    for (const auto& w : j.at("gamma_weights")) r.gamma_weights.push_back(weight_from_json(w));
    for (const auto& w : j.at("gamma_dual_candidates"))
      r.gamma_dual_candidates.push_back(weight_from_json(w));
    for (const auto& s : j.at("lattice_sample"))
      r.lattice_sample.push_back(
          {weight_from_json(s.at("weight")), s.at("multiplicity").get<std::size_t>()});
    r.cone_inequalities = j.at("cone_inequalities").get<std::vector<std::vector<long long>>>();
  }
  if (j.contains("timings_ms"))
    r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
  return r;
}

std::string OrbitReport::table_text() const {
  std::ostringstream out;
  auto weight_str = [](const WeightVec& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(w[i]);
    }
    return s + ")";
  };
  out << "algebra           " << algebra.name() << "\n";
  out << "orbit             ";
  if (orbit.kind == OrbitDescriptor::Kind::Partition) {
    out << "partition ";
    for (std::size_t i = 0; i < orbit.partition.size(); ++i)
      out << (i ? "+" : "") << orbit.partition[i];
    if (!orbit.label.empty()) out << " (" << orbit.label << ")";
  } else if (orbit.kind == OrbitDescriptor::Kind::Signed) {
    out << "signed " << orbit.signed_spec();
  } else {
    out << "explicit matrix";
  }
  out << "\n";
  out << "height            " << height << "\n";
  out << "small             " << (small ? "yes" : "no") << "\n";
  out << "spherical         " << (spherical ? "yes" : "no") << " (" << spherical_certainty
      << ")\n";
  out << "dim orbit         " << dim_orbit << "\n";
  out << "dim borel(k)      " << dim_borel << "\n";
  out << "rank              " << rank << "\n";
  out << "gy condition      " << (gy_condition ? "yes" : "no") << "\n";
  out << "grading dims      ";
  bool first = true;
  for (const auto& [j, dims] : grading_dims) {
    if (!first) out << "  ";
    out << "j=" << j << ":g" << dims[0] << ",k" << dims[1] << ",p" << dims[2];
    first = false;
  }
  out << "\n";
  out << "status            " << status << "\n";
  if (status == "complete") {
    out << "self dual         " << (self_dual ? "yes" : "no") << "\n";
    out << "generators        ";
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (i) out << ", ";
      out << "deg " << generators[i].degree << " wt " << weight_str(generators[i].weight);
    }
    out << "\n";
    if (!self_dual) {
      out << "gamma candidates  ";
      for (std::size_t i = 0; i < gamma_dual_candidates.size(); ++i) {
        if (i) out << ", ";
        out << weight_str(gamma_dual_candidates[i]);
      }
      out << " (dual labeling; surfaced, not asserted)\n";
    }
    out << "lattice sample    ";
    for (std::size_t i = 0; i < lattice_sample.size() && i < 12; ++i) {
      if (i) out << ", ";
      out << weight_str(lattice_sample[i].first) << ":" << lattice_sample[i].second;
    }
    if (lattice_sample.size() > 12) out << ", ...";
    out << "\n";
    out << "cone normals      ";
    for (std::size_t i = 0; i < cone_inequalities.size(); ++i) {
      if (i) out << ", ";
      out << "(";
      for (std::size_t k = 0; k < cone_inequalities[i].size(); ++k) {
        if (k) out << ",";
        out << cone_inequalities[i][k];
      }
      out << ")";
    }
    out << "\n";
  }
  return out.str();
}

OrbitReport analyze_cached(const AnalysisConfig& config, const std::string& cache_dir) {
  std::string key = config.content_hash();
  std::filesystem::path path = std::filesystem::path(cache_dir) / (key + ".json");
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return OrbitReport::from_json_text(ss.str());
  }
  OrbitReport rep = analyze(config);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  std::ofstream out(path);
  if (out) out << rep.to_json_text();
  return rep;
}

VerifyResult verify_speh(const AnalysisConfig& config) {
  VerifyResult result;
  AnalysisConfig c = config;
  c.fixture = "speh_sl4R";
  c.algebra.reset();
  c.orbit.reset();

  OrbitReport rep;
  try {
    rep = analyze(c);
  } catch (const std::exception& e) {
    result.checks.push_back({"analyze", false, e.what()});
    result.passed = false;
    return result;
  }

  auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
    result.checks.push_back({name, ok, detail});
  };

  bool gens_ok = rep.generators.size() == 2 && rep.generators[0].degree == 1 &&
                 rep.generators[0].weight == WeightVec{2, 0} && rep.generators[1].degree == 2 &&
                 rep.generators[1].weight == WeightVec{2, 2};
  check("generators degrees {1,2} weights {(2,0),(2,2)}", gens_ok);
  check("height 2", rep.height == 2);
  check("small", rep.small);
  check("spherical", rep.spherical);
  check("gy condition", rep.gy_condition);
  check("self dual", rep.self_dual);

  try {
    ReportQuery q(rep);
    std::set<WeightVec> expect;
    for (long long m = 0; 2 * m + 1 <= c.bound; ++m)
      for (long long n = 0; n <= m; ++n)
        if (2 * n + 1 <= c.bound) expect.insert({2 * m + 1, 2 * n + 1});
    auto got_list = q.shifted({1, 1}, c.bound);
    std::set<WeightVec> got(got_list.begin(), got_list.end());
    check("shifted lattice from (1,1) = odd pairs (2m+1,2n+1), m >= n", got == expect);

    std::vector<std::vector<long long>> half_plane = {{0, 1}, {1, -1}};
    bool cone_ok = rep.cone_inequalities == half_plane;
    for (long long u = -8; u <= 8 && cone_ok; ++u)
      for (long long v = -8; v <= 8; ++v)
        if (q.cone_member({mpq_class(static_cast<long>(u)), mpq_class(static_cast<long>(v))}) !=
            (u >= v && v >= 0)) {
          cone_ok = false;
          break;
        }
    check("cone is the half plane u >= v >= 0", cone_ok);
  } catch (const std::exception& e) {
    check("lattice/cone queries", false, e.what());
  }

  result.passed = true;
  for (const auto& ch : result.checks)
    if (!ch.passed) result.passed = false;
  return result;
}

ReportQuery::ReportQuery(const OrbitReport& report)
    : alg_(build_real_form(report.algebra)),
      rd_(build_root_datum(alg_, report.x)),
      lattice_(rd_, report.gamma_weights),
      cone_(cone_from_rays(rd_, report.gamma_weights)) {}

std::size_t ReportQuery::multiplicity(const WeightVec& lambda) const {
  return lattice_.multiplicity(lambda);
}

std::vector<std::pair<WeightVec, std::size_t>> ReportQuery::enumerate(long long bound) const {
  return lattice_.enumerate(bound);
}

std::vector<WeightVec> ReportQuery::shifted(const WeightVec& mu, long long bound) const {
  return lattice_.shifted_lattice(mu, bound);
}

bool ReportQuery::cone_member(const std::vector<mpq_class>& v) const {
  return cone_contains(cone_, v);
}

}  // namespace nilorbit
