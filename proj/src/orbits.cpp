#include "nilorbit/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "json.hpp"

namespace nilorbit {

namespace {

using nlohmann::json;

bool matrix_is_nilpotent(const Mat& m) {
  Mat acc = m;
  for (std::size_t k = 1; k < m.rows(); ++k) {
    if (acc.is_zero()) return true;
    acc = acc * m;
  }
  return acc.is_zero();
}

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw DescriptorError("matrix entries must be integers or {\"re\":\"a/b\",\"im\":\"c/d\"}");
  return Scalar::from_strings(j["re"].get<std::string>(), j["im"].get<std::string>());
}

/// k x k block data of the standard triple attached to one partition part,
/// conjugated into the symmetric/antisymmetric realization. The change of
/// basis C satisfies C^T C = antidiag(1,...,1), built from the 2x2 pattern
/// [[1, 1/2], [-i, i/2]] on each antidiagonal coordinate pair.
struct BlockTriple {
  Mat x, e, f;
};

BlockTriple symmetric_block_triple(int k) {
  Mat C(k, k);
  Scalar mi = -Scalar::i(), half(1, 2), halfi = Scalar(1, 2) * Scalar::i();
  for (int i = 0; 2 * i + 1 < k; ++i) {
    int j = k - 1 - i;
    C(i, i) = Scalar(1);
    C(j, i) = mi;
    C(i, j) = half;
    C(j, j) = halfi;
  }
  if (k % 2 == 1) C(k / 2, k / 2) = Scalar(1);

  Mat Cinv(k, k);
  // Per-pair inverse of [[1,1/2],[-i,i/2]] is [[1/2, i/2],[1, -i]].
  for (int i = 0; 2 * i + 1 < k; ++i) {
    int j = k - 1 - i;
    Cinv(i, i) = half;
    Cinv(i, j) = halfi;
    Cinv(j, i) = Scalar(1);
    Cinv(j, j) = mi;
  }
  if (k % 2 == 1) Cinv(k / 2, k / 2) = Scalar(1);

  Mat h(k, k), J(k, k), f(k, k);
  for (int r = 0; r < k; ++r) h(r, r) = Scalar(k - 1 - 2 * r);
  for (int r = 0; r + 1 < k; ++r) {
    J(r, r + 1) = Scalar(1);
    f(r + 1, r) = Scalar((r + 1) * (k - 1 - r));
  }
  BlockTriple b;
  b.x = C * h * Cinv;
  b.e = C * J * Cinv;
  b.f = C * f * Cinv;
  return b;
}

Mat permutation_conjugate(const Mat& m, const std::vector<int>& dest) {
  // dest[old] = new index; returns P m P^T.
  std::size_t n = m.rows();
  Mat r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) r(dest[i], dest[j]) = m(i, j);
  return r;
}

Vec sl_real_representative(const AlgebraRealization& alg, const OrbitDescriptor& d) {
  int n = alg.ambient();
  std::vector<int> parts = d.partition;
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  if (parts.empty() || parts.front() <= 0 || std::accumulate(parts.begin(), parts.end(), 0) != n)
    throw DescriptorError("partition must have positive parts summing to n");
  bool all_even = std::all_of(parts.begin(), parts.end(), [](int k) { return k % 2 == 0; });
  if (!d.label.empty() && !all_even)
    throw DescriptorError("orbit labels I/II apply only when every part is even");
  if (!d.label.empty() && d.label != "I" && d.label != "II")
    throw DescriptorError("orbit label must be I or II");

  Mat E(n, n);
  int offset = 0;
  std::vector<std::pair<int, int>> pairs;  // antidiagonal coordinate pairs
  std::vector<int> middles;
  for (int k : parts) {
    BlockTriple b = symmetric_block_triple(k);
    for (int r = 0; r < k; ++r)
      for (int s = 0; s < k; ++s)
        if (!b.e(r, s).is_zero()) E(offset + r, offset + s) = b.e(r, s);
    for (int i = 0; 2 * i + 1 < k; ++i) pairs.push_back({offset + i, offset + k - 1 - i});
    if (k % 2 == 1) middles.push_back(offset + k / 2);
    offset += k;
  }

  // Move antidiagonal pairs onto the standard torus pairs (2t, 2t+1); this is
  // conjugation by a permutation in O(n).
  std::vector<int> dest(n, -1);
  int next = 0;
  for (auto [a, b] : pairs) {
    dest[a] = next++;
    dest[b] = next++;
  }
  for (int mdl : middles) dest[mdl] = next++;
  E = permutation_conjugate(E, dest);

  if (d.label == "II") {
    // Fixed determinant -1 orthogonal conjugation flips the orbit label.
    for (int j = 1; j < n; ++j) {
      E(0, j) = -E(0, j);
      E(j, 0) = -E(j, 0);
    }
  }
  return alg.coords_of(E);
}

Vec su_representative(const AlgebraRealization& alg, const OrbitDescriptor& d) {
  int p = alg.descriptor().p, q = alg.descriptor().q, n = alg.ambient();
  int plus = 0, minus = 0, total = 0;
  for (auto [len, sign] : d.rows) {
    if (len <= 0 || (sign != '+' && sign != '-'))
      throw DescriptorError("signed rows must be positive lengths with sign + or -");
    total += len;
    for (int j = 0; j < len; ++j) {
      char s = ((j % 2 == 0) == (sign == '+')) ? '+' : '-';
      (s == '+' ? plus : minus)++;
    }
  }
  if (total != n || plus != p || minus != q)
    throw DescriptorError("signed rows are inconsistent with the signature (p,q)");

  Mat E(n, n);
  int next_plus = 0, next_minus = p;
  for (auto [len, sign] : d.rows) {
    std::vector<int> idx(len);
    for (int j = 0; j < len; ++j) {
      char s = ((j % 2 == 0) == (sign == '+')) ? '+' : '-';
      idx[j] = (s == '+') ? next_plus++ : next_minus++;
    }
    for (int j = 0; j + 1 < len; ++j) E(idx[j + 1], idx[j]) = Scalar(1);
  }
  return alg.coords_of(E);
}

}  // namespace

OrbitDescriptor OrbitDescriptor::from_partition(std::vector<int> parts, std::string label) {
  OrbitDescriptor d;
  d.kind = Kind::Partition;
  d.partition = std::move(parts);
  d.label = std::move(label);
  return d;
}

OrbitDescriptor OrbitDescriptor::from_signed(const std::string& spec) {
  OrbitDescriptor d;
  d.kind = Kind::Signed;
  std::string row;
  auto flush = [&]() {
    if (row.empty()) return;
    for (std::size_t j = 0; j < row.size(); ++j) {
      char expect = ((j % 2 == 0) == (row[0] == '+')) ? '+' : '-';
      if (row[j] != expect)
        throw DescriptorError("signed row must alternate signs: " + row);
    }
    d.rows.push_back({static_cast<int>(row.size()), row[0]});
    row.clear();
  };
  for (char c : spec) {
    if (c == '+' || c == '-')
      row += c;
    else if (c == '.' || c == '|' || c == ',' || c == '/' || c == ' ')
      flush();
    else
      throw DescriptorError("bad character in signed orbit spec: " + std::string(1, c));
  }
  flush();
  if (d.rows.empty()) throw DescriptorError("empty signed orbit spec");
  return d;
}

OrbitDescriptor OrbitDescriptor::from_matrix(Mat m) {
  OrbitDescriptor d;
  d.kind = Kind::Matrix;
  d.matrix = std::move(m);
  return d;
}

OrbitDescriptor OrbitDescriptor::from_json_text(const std::string& text) {
  json j = json::parse(text);
  if (j.contains("partition")) {
    std::vector<int> parts = j["partition"].get<std::vector<int>>();
    std::string label = j.value("label", std::string());
    return from_partition(std::move(parts), std::move(label));
  }
  if (j.contains("signed")) return from_signed(j["signed"].get<std::string>());
  if (j.contains("matrix")) {
    const json& rows = j["matrix"];
    std::size_t n = rows.size();
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw DescriptorError("orbit matrix must be square");
      for (std::size_t k = 0; k < n; ++k) m(i, k) = scalar_from_json(rows[i][k]);
    }
    return from_matrix(std::move(m));
  }
  throw DescriptorError("orbit descriptor needs partition, signed, or matrix");
}

std::string OrbitDescriptor::signed_spec() const {
  std::string s;
  for (auto [len, sign] : rows) {
    if (!s.empty()) s += '.';
    for (int j = 0; j < len; ++j) s += ((j % 2 == 0) == (sign == '+')) ? '+' : '-';
  }
  return s;
}

Vec representative(const AlgebraRealization& alg, const OrbitDescriptor& d) {
  switch (d.kind) {
    case OrbitDescriptor::Kind::Partition:
      if (alg.descriptor().family != Family::SlR)
        throw DescriptorError("plain partitions name sl(n,R) orbits; su(p,q) needs signed rows");
      return sl_real_representative(alg, d);
    case OrbitDescriptor::Kind::Signed:
      if (alg.descriptor().family != Family::SU)
        throw DescriptorError("signed rows name su(p,q) orbits");
      return su_representative(alg, d);
    case OrbitDescriptor::Kind::Matrix: {
      if (static_cast<int>(d.matrix.rows()) != alg.ambient())
        throw DescriptorError("orbit matrix size does not match the algebra");
      Vec e = alg.coords_of(d.matrix);
      if (!alg.in_p(e)) throw DescriptorError("orbit matrix is not in p_C");
      if (!matrix_is_nilpotent(d.matrix)) throw DescriptorError("orbit matrix is not nilpotent");
      return e;
    }
  }
  throw DescriptorError("unreachable orbit descriptor kind");
}

NormalTriple complete_to_normal_triple(const AlgebraRealization& alg, const Vec& e) {
  std::size_t N = alg.dim(), K = alg.dim_k(), P = alg.dim_p();
  NormalTriple t;
  t.e = e;
  if (vec_is_zero(e)) {
    t.x = vec_zero(N);
    t.f = vec_zero(N);
    return t;
  }
  if (!alg.in_p(e)) throw DescriptorError("triple completion requires e in p_C");
  if (!matrix_is_nilpotent(alg.matrix_of(e)))
    throw DescriptorError("triple completion requires nilpotent e");

  // (ad e)^2 z = -2e over z in p_C, preferring [e,z] in the standard torus.
  std::vector<Vec> ade2_cols(P), ade_cols(P);
  for (std::size_t j = 0; j < P; ++j) {
    Vec bj(N);
    bj[K + j] = Scalar(1);
    ade_cols[j] = alg.bracket(e, bj);
    ade2_cols[j] = alg.bracket(e, ade_cols[j]);
  }
  std::size_t m = alg.torus_dim();
  auto make_system = [&](bool constrain_torus) {
    std::size_t cols = P + (constrain_torus ? m : 0);
    Mat sys(2 * N, cols);
    Vec rhs(2 * N);
    for (std::size_t j = 0; j < P; ++j)
      for (std::size_t i = 0; i < N; ++i) {
        sys(i, j) = ade2_cols[j][i];
        if (constrain_torus) sys(N + i, j) = ade_cols[j][i];
      }
    if (constrain_torus)
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i < N; ++i) sys(N + i, P + r) = -alg.torus_element(r)[i];
    for (std::size_t i = 0; i < N; ++i) rhs[i] = Scalar(-2) * e[i];
    return std::make_pair(sys, rhs);
  };

  auto [sys1, rhs1] = make_system(true);
  auto sol = solve(sys1, rhs1);
  if (!sol) {
    auto [sys0, rhs0] = make_system(false);
    sol = solve(sys0, rhs0);
  }
  if (!sol) throw DescriptorError("no normal triple: e is not a p_C-nilpotent of this form");
  Vec z(N);
  for (std::size_t j = 0; j < P; ++j) z[K + j] = (*sol)[j];
  t.x = alg.bracket(e, z);

  // f in p_C with [e,f] = x and [x,f] = -2f.
  Mat fs(2 * N, P);
  Vec fr(2 * N);
  for (std::size_t j = 0; j < P; ++j) {
    Vec bj(N);
    bj[K + j] = Scalar(1);
    Vec ef = alg.bracket(e, bj);
    Vec xf = alg.bracket(t.x, bj);
    for (std::size_t i = 0; i < N; ++i) {
      fs(i, j) = ef[i];
      fs(N + i, j) = xf[i];
      if (!bj[i].is_zero()) fs(N + i, j) += Scalar(2) * bj[i];
    }
  }
  for (std::size_t i = 0; i < N; ++i) fr[i] = t.x[i];
  auto fsol = solve(fs, fr);
  if (!fsol) throw ConsistencyError("triple completion: no f solves the descent equations");
  t.f = vec_zero(N);
  for (std::size_t j = 0; j < P; ++j) t.f[K + j] = (*fsol)[j];

  // Exact triple axioms.
  if (!(alg.bracket(t.x, t.e) == vec_scaled(t.e, Scalar(2))) ||
      !(alg.bracket(t.x, t.f) == vec_scaled(t.f, Scalar(-2))) ||
      !(alg.bracket(t.e, t.f) == t.x) || !alg.in_k(t.x))
    throw ConsistencyError("triple completion produced an invalid normal triple");
  return t;
}

AdGrading grade(const AlgebraRealization& alg, const Vec& x) {
  AdGrading g;
  g.alg = &alg;
  g.x = x;
  std::size_t N = alg.dim(), K = alg.dim_k();
  Mat ad = alg.ad_matrix(x);

  // Gershgorin-style integer bound on eigenvalues.
  mpq_class bound(0);
  for (std::size_t i = 0; i < N; ++i) {
    mpq_class row(0);
    for (std::size_t j = 0; j < N; ++j) {
      row += abs(ad(i, j).re()) + abs(ad(i, j).im());
    }
    if (row > bound) bound = row;
  }
  mpz_class bz = (bound.get_num() + bound.get_den() - 1) / bound.get_den();
  long B = bz.get_si();

  std::size_t counted = 0;
  for (long j = -B; j <= B; ++j) {
    // restricted blocks: ad(x) preserves k_C and p_C.
    Mat blk_k(K, K), blk_p(N - K, N - K);
    for (std::size_t r = 0; r < K; ++r)
      for (std::size_t c = 0; c < K; ++c) blk_k(r, c) = ad(r, c);
    for (std::size_t r = K; r < N; ++r)
      for (std::size_t c = K; c < N; ++c) blk_p(r - K, c - K) = ad(r, c);
    for (std::size_t r = 0; r < K; ++r) blk_k(r, r) -= Scalar(j);
    for (std::size_t r = K; r < N; ++r) blk_p(r - K, r - K) -= Scalar(j);

    std::vector<Vec> kb, pb, gb;
    for (const Vec& v : nullspace(blk_k)) {
      Vec w(N);
      for (std::size_t i = 0; i < K; ++i) w[i] = v[i];
      kb.push_back(w);
      gb.push_back(std::move(w));
    }
    for (const Vec& v : nullspace(blk_p)) {
      Vec w(N);
      for (std::size_t i = 0; i < N - K; ++i) w[K + i] = v[i];
      pb.push_back(w);
      gb.push_back(std::move(w));
    }
    counted += gb.size();
    if (!kb.empty()) g.k_piece[static_cast<int>(j)] = std::move(kb);
    if (!pb.empty()) g.p_piece[static_cast<int>(j)] = std::move(pb);
    if (!gb.empty()) g.g_piece[static_cast<int>(j)] = std::move(gb);
  }
  if (counted != N)
    throw DescriptorError("ad(x) has non-integer eigenvalues: not a grading element");
  return g;
}

std::size_t AdGrading::g_dim(int j) const {
  auto it = g_piece.find(j);
  return it == g_piece.end() ? 0 : it->second.size();
}
std::size_t AdGrading::k_dim(int j) const {
  auto it = k_piece.find(j);
  return it == k_piece.end() ? 0 : it->second.size();
}
std::size_t AdGrading::p_dim(int j) const {
  auto it = p_piece.find(j);
  return it == p_piece.end() ? 0 : it->second.size();
}

std::vector<Vec> AdGrading::V() const {
  std::vector<Vec> v;
  for (const auto& [j, basis] : g_piece)
    if (j >= 2) v.insert(v.end(), basis.begin(), basis.end());
  return v;
}

std::vector<Vec> AdGrading::Vtilde() const {
  std::vector<Vec> v;
  for (const auto& [j, basis] : p_piece)
    if (j >= 2) v.insert(v.end(), basis.begin(), basis.end());
  return v;
}

std::vector<Vec> AdGrading::q_k() const {
  std::vector<Vec> v;
  for (const auto& [j, basis] : k_piece)
    if (j >= 0) v.insert(v.end(), basis.begin(), basis.end());
  return v;
}

std::vector<Vec> AdGrading::levi() const {
  auto it = g_piece.find(0);
  return it == g_piece.end() ? std::vector<Vec>{} : it->second;
}

std::vector<Vec> AdGrading::u_plus() const {
  std::vector<Vec> v;
  for (const auto& [j, basis] : g_piece)
    if (j > 0) v.insert(v.end(), basis.begin(), basis.end());
  return v;
}

int height(const AdGrading& g) {
  int h = 0;
  for (const auto& [j, basis] : g.g_piece)
    if (!basis.empty() && j > h) h = j;
  return h;
}

bool is_small(const AdGrading& g) {
  for (const auto& [j, basis] : g.p_piece)
    if (j > 2 && !basis.empty()) return false;
  return true;
}

namespace {

std::size_t rank_of_bracket_map(const AlgebraRealization& alg, const std::vector<Vec>& domain,
                                const Vec& target) {
  if (domain.empty()) return 0;
  Mat m(alg.dim(), domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) m.set_col(j, alg.bracket(domain[j], target));
  return rank(m);
}

Vec exp_ad_apply(const AlgebraRealization& alg, const Vec& X, long tnum, const Vec& v) {
  // exp(ad(t X)) v for ad-nilpotent X; the series terminates exactly.
  Vec result = v;
  Vec term = v;
  Scalar t(tnum);
  for (std::size_t k = 1; k <= alg.dim(); ++k) {
    term = vec_scaled(alg.bracket(X, term), t / Scalar(static_cast<long>(k)));
    if (vec_is_zero(term)) break;
    for (std::size_t i = 0; i < result.size(); ++i) result[i] += term[i];
  }
  return result;
}

}  // namespace

std::size_t orbit_dimension(const AlgebraRealization& alg, const Vec& e) {
  std::vector<Vec> kbasis;
  for (std::size_t i = 0; i < alg.dim_k(); ++i) {
    Vec b(alg.dim());
    b[i] = Scalar(1);
    kbasis.push_back(std::move(b));
  }
  return rank_of_bracket_map(alg, kbasis, e);
}

SphericalResult is_spherical(const AlgebraRealization& alg, const RootDatum& rd, const Vec& e,
                             std::uint64_t seed, int samples) {
  SphericalResult res;
  res.dim_borel = rd.borel_dim();
  if (vec_is_zero(e)) {
    res.spherical = true;
    res.certainty = Certainty::Certified;
    res.dim_orbit = 0;
    return res;
  }
  res.dim_orbit = orbit_dimension(alg, e);
  if (res.dim_borel < res.dim_orbit) {
    res.spherical = false;
    res.certainty = Certainty::Certified;
    return res;
  }

  std::vector<Vec> borel;
  for (std::size_t r = 0; r < alg.torus_dim(); ++r) borel.push_back(alg.torus_element(r));
  for (const Vec& v : rd.nilradical()) borel.push_back(v);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> small_t(-3, 3);
  std::size_t best = 0;
  for (int s = 0; s <= samples && best < res.dim_orbit; ++s) {
    Vec point = e;
    if (s > 0) {
      // product of root-group elements over all roots of k_C, exact exp.
      for (const KRoot& r : rd.roots) {
        long tv = small_t(rng);
        if (tv != 0) point = exp_ad_apply(alg, r.vec, tv, point);
      }
    }
    std::size_t dim_b_orbit = rank_of_bracket_map(alg, borel, point);
    best = std::max(best, dim_b_orbit);
  }
  res.spherical = (best == res.dim_orbit);
  res.certainty = Certainty::MonteCarlo;
  return res;
}

bool gy_condition_check(const AdGrading& g, const Vec& e) {
  std::size_t target_dim = g.Vtilde().size();
  if (target_dim == 0) return true;
  return rank_of_bracket_map(*g.alg, g.q_k(), e) == target_dim;
}

bool small_exact_sequence_check(const AdGrading& g, const NormalTriple& t) {
  if (!is_small(g)) throw DescriptorError("exact-sequence check requires a small orbit");
  const AlgebraRealization& alg = *g.alg;
  auto it = g.k_piece.find(0);
  std::vector<Vec> kx = it == g.k_piece.end() ? std::vector<Vec>{} : it->second;
  std::size_t p2 = g.p_dim(2);

  std::size_t r = rank_of_bracket_map(alg, kx, t.e);
  if (r != p2) return false;  // ad(e): k^x -> p_C(x;2) must be onto

  // joint centralizer of the triple inside k_C
  std::size_t N = alg.dim(), K = alg.dim_k();
  Mat sys(3 * N, K);
  for (std::size_t j = 0; j < K; ++j) {
    Vec b(N);
    b[j] = Scalar(1);
    Vec cx = alg.bracket(b, t.x), ce = alg.bracket(b, t.e), cf = alg.bracket(b, t.f);
    for (std::size_t i = 0; i < N; ++i) {
      sys(i, j) = cx[i];
      sys(N + i, j) = ce[i];
      sys(2 * N + i, j) = cf[i];
    }
  }
  std::size_t dim_triple_centralizer = nullspace(sys).size();
  return kx.size() == dim_triple_centralizer + p2;
}

bool commutativity_check(const AdGrading& g) {
  std::vector<Vec> vt = g.Vtilde();
  for (std::size_t i = 0; i < vt.size(); ++i)
    for (std::size_t j = i + 1; j < vt.size(); ++j)
      if (!vec_is_zero(g.alg->bracket(vt[i], vt[j]))) return false;
  return true;
}

std::size_t orbit_rank(const AlgebraRealization& alg, const RootDatum& rd, const AdGrading& g,
                       std::uint64_t seed, int samples) {
  std::vector<Vec> vt = g.Vtilde();
  if (vt.empty()) return 0;
  std::vector<Vec> ulk = rd.levi_nilradical();
  if (ulk.empty()) return vt.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::size_t best = 0;
  for (int s = 0; s < std::max(1, samples); ++s) {
    Vec v(alg.dim());
    for (const Vec& b : vt) vec_axpy(v, Scalar(coeff(rng)), b);
    best = std::max(best, rank_of_bracket_map(alg, ulk, v));
  }
  return vt.size() - best;
}

}  // namespace nilorbit
