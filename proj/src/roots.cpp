#include "nilorbit/roots.hpp"

#include <algorithm>
#include <set>

namespace nilorbit {

namespace {

long long floordiv(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// Ambient column vectors and rank-two antisymmetric matrices a b^T - b a^T.
using AVec = std::vector<Scalar>;

Mat skew_outer(const AVec& a, const AVec& b) {
  std::size_t n = a.size();
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a[i] * b[j] - b[i] * a[j];
  return m;
}

AVec pair_vector(int n, int r, bool bar) {
  // u_r = e_{2r} - i e_{2r+1} (0-based pair r); bar flips the sign of i.
  AVec v(n);
  v[2 * r] = Scalar(1);
  v[2 * r + 1] = bar ? Scalar::i() : -Scalar::i();
  return v;
}

bool lex_positive(const WeightVec& a) {
  for (long long c : a) {
    if (c > 0) return true;
    if (c < 0) return false;
  }
  return false;
}

WeightVec negated(const WeightVec& a) {
  WeightVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

}  // namespace

long long weight_dot(const WeightVec& a, const WeightVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::size_t RootDatum::weight_len() const {
  return alg->descriptor().family == Family::SlR ? rank
                                                 : static_cast<std::size_t>(alg->ambient());
}

mpq_class RootDatum::eval_on_x(const WeightVec& alpha) const {
  mpq_class s(0);
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] != 0) s += mpq_class(static_cast<long>(alpha[i])) * x_eval_[i];
  return s;
}

WeightVec RootDatum::normalize(WeightVec lambda) const {
  if (alg->descriptor().family == Family::SlR) return lambda;
  long long n = static_cast<long long>(lambda.size());
  long long sum = 0;
  for (long long c : lambda) sum += c;
  long long k = floordiv(sum, n);
  if (k != 0)
    for (auto& c : lambda) c -= k;
  return lambda;
}

bool RootDatum::is_dominant(const WeightVec& lambda) const {
  for (std::size_t si : simple_idx)
    if (weight_dot(lambda, roots[si].alpha) < 0) return false;
  return true;
}

WeightVec RootDatum::apply_w0(const WeightVec& lambda) const {
  std::size_t L = weight_len();
  WeightVec r(L, 0);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      const Scalar& c = w0_(i, j);
      if (!c.is_zero()) r[i] += c.re().get_num().get_si() * lambda[j];
    }
  return normalize(r);
}

WeightVec RootDatum::dual_ktype(const WeightVec& lambda) const {
  if (!is_dominant(lambda)) throw DescriptorError("dual_ktype requires a dominant weight");
  return normalize(negated(apply_w0(lambda)));
}

WeightVec RootDatum::weight_of(const Vec& z) const {
  if (vec_is_zero(z)) throw ConsistencyError("weight_of: zero vector has no weight");
  std::size_t N = alg->dim();
  std::size_t lead = 0;
  while (lead < N && z[lead].is_zero()) ++lead;
  std::vector<long long> eig;
  for (std::size_t r = 0; r < alg->torus_dim(); ++r) {
    Vec w = alg->bracket(alg->torus_element(r), z);
    Scalar c = w[lead] / z[lead];
    if (!(w == vec_scaled(z, c)))
      throw ConsistencyError("weight_of: vector is not a simultaneous weight vector");
    if (!c.is_real() || c.re().get_den() != 1)
      throw ConsistencyError("weight_of: non-integer weight");
    eig.push_back(c.re().get_num().get_si());
  }
  if (alg->descriptor().family == Family::SlR) return WeightVec(eig.begin(), eig.end());
  // su(p,q): eigenvalues are lambda_i - lambda_{i+1}; anchor lambda_n = 0.
  std::size_t n = alg->ambient();
  WeightVec lambda(n, 0);
  for (std::size_t i = n - 1; i-- > 0;) lambda[i] = lambda[i + 1] + eig[i];
  return normalize(lambda);
}

WeightVec RootDatum::two_rho() const {
  WeightVec s(weight_len(), 0);
  for (std::size_t pi : positive_idx)
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += roots[pi].alpha[i];
  return s;
}

std::vector<Vec> RootDatum::nilradical() const {
  std::vector<Vec> v;
  for (std::size_t pi : positive_idx) v.push_back(roots[pi].vec);
  return v;
}

std::vector<Vec> RootDatum::nilradical_minus() const {
  std::vector<Vec> v;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (!roots[i].positive) v.push_back(roots[i].vec);
  return v;
}

std::vector<Vec> RootDatum::levi_nilradical() const {
  std::vector<Vec> v;
  for (std::size_t pi : levi_positive_idx) v.push_back(roots[pi].vec);
  return v;
}

std::vector<Vec> RootDatum::levi_nilradical_simple() const {
  std::vector<Vec> v;
  for (std::size_t pi : levi_simple_idx) v.push_back(roots[pi].vec);
  return v;
}

Vec RootDatum::coroot(std::size_t root_index) const {
  const KRoot& r = roots[root_index];
  WeightVec neg = negated(r.alpha);
  for (const KRoot& s : roots)
    if (s.alpha == neg) {
      Vec h = alg->bracket(r.vec, s.vec);
      // alpha(h) read off from [h, X_alpha] = alpha(h) X_alpha.
      Vec hx = alg->bracket(h, r.vec);
      std::size_t lead = 0;
      while (r.vec[lead].is_zero()) ++lead;
      Scalar ah = hx[lead] / r.vec[lead];
      if (ah.is_zero()) throw ConsistencyError("coroot: degenerate root pairing");
      return vec_scaled(h, Scalar(2) / ah);
    }
  throw ConsistencyError("coroot: opposite root missing");
}

WeightVec RootDatum::reflect(const WeightVec& lambda, const WeightVec& alpha) const {
  long long aa = weight_dot(alpha, alpha);
  long long num = 2 * weight_dot(lambda, alpha);
  if (num % aa != 0) throw ConsistencyError("reflection: non-integral Cartan pairing");
  long long c = num / aa;
  WeightVec r = lambda;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * alpha[i];
  return r;
}

void RootDatum::compute_w0() {
  std::size_t L = weight_len();
  w0_ = Mat::identity(L);
  if (simple_idx.empty()) return;
  WeightVec v = two_rho();
  std::size_t guard = roots.size() * roots.size() + 16;
  while (guard--) {
    bool moved = false;
    for (std::size_t si : simple_idx) {
      const WeightVec& a = roots[si].alpha;
      if (weight_dot(v, a) > 0) {
        v = reflect(v, a);
        long long aa = weight_dot(a, a);
        Mat refl = Mat::identity(L);
        for (std::size_t i = 0; i < L; ++i)
          for (std::size_t j = 0; j < L; ++j) refl(i, j) -= Scalar(2 * a[i] * a[j]) / Scalar(aa);
        w0_ = refl * w0_;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  // w0 must send the positive system to its negative.
  std::set<WeightVec> neg;
  for (std::size_t pi : positive_idx) neg.insert(negated(roots[pi].alpha));
  for (std::size_t pi : positive_idx) {
    WeightVec im(L, 0);
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = 0; j < L; ++j)
        if (!w0_(i, j).is_zero()) im[i] += w0_(i, j).re().get_num().get_si() * roots[pi].alpha[j];
    if (!neg.count(im)) throw ConsistencyError("w0 failed to reverse the positive system");
  }
}

RootDatum build_root_datum(const AlgebraRealization& alg, const Vec& x) {
  RootDatum rd;
  rd.alg = &alg;
  rd.x = x;
  rd.rank = alg.torus_dim();
  int n = alg.ambient();

  if (!alg.in_k(x)) throw DescriptorError("grading element must lie in k_C");

  // x must lie in the standard torus with real rational coordinates.
  std::vector<Vec> torus_vecs(alg.torus().begin(), alg.torus().end());
  SpanSolver torus_span(torus_vecs);
  auto xi = torus_span.express(x);
  if (!xi.has_value())
    throw DescriptorError(
        "x is not in the standard Cartan of k_C; use the catalog orbit "
        "constructions, which produce torus-aligned grading elements");
  rd.x_torus.clear();
  for (const Scalar& c : *xi) {
    if (!c.is_real())
      throw DescriptorError("x has non-real torus coordinates: not a grading element");
    rd.x_torus.push_back(c.re());
  }

  // Weight-on-x evaluation data: epsilon-coordinates pair with torus
  // coordinates for sl(n,R); su(p,q) weights pair with diag(x).
  if (alg.descriptor().family == Family::SlR) {
    rd.x_eval_ = rd.x_torus;
  } else {
    Mat X = alg.matrix_of(x);
    rd.x_eval_.clear();
    for (int i = 0; i < n; ++i) rd.x_eval_.push_back(X(i, i).re());
  }

  auto add_root = [&](WeightVec a, Mat m) {
    KRoot r;
    r.alpha = rd.normalize(std::move(a));
    r.vec = alg.coords_of(m);
    rd.roots.push_back(std::move(r));
  };

  if (alg.descriptor().family == Family::SlR) {
    int m = n / 2;
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s) {
        if (r == s) continue;
        WeightVec a(m, 0);
        a[r] = 1;
        a[s] = -1;
        add_root(a, skew_outer(pair_vector(n, r, false), pair_vector(n, s, true)));
      }
    for (int r = 0; r < m; ++r)
      for (int s = r + 1; s < m; ++s) {
        WeightVec a(m, 0);
        a[r] = 1;
        a[s] = 1;
        add_root(a, skew_outer(pair_vector(n, r, false), pair_vector(n, s, false)));
        WeightVec b(m, 0);
        b[r] = -1;
        b[s] = -1;
        add_root(b, skew_outer(pair_vector(n, r, true), pair_vector(n, s, true)));
      }
    if (n % 2 == 1) {
      AVec last(n);
      last[n - 1] = Scalar(1);
      for (int r = 0; r < m; ++r) {
        WeightVec a(m, 0);
        a[r] = 1;
        add_root(a, skew_outer(pair_vector(n, r, false), last));
        WeightVec b(m, 0);
        b[r] = -1;
        add_root(b, skew_outer(pair_vector(n, r, true), last));
      }
    }
  } else {
    int p = alg.descriptor().p;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || (i < p) != (j < p)) continue;
        WeightVec a(n, 0);
        a[i] = 1;
        a[j] = -1;
        Mat m(n, n);
        m(i, j) = Scalar(1);
        add_root(a, m);
      }
  }

  if (rd.rank + rd.roots.size() != alg.dim_k())
    throw ConsistencyError("root space bookkeeping does not fill k_C");

  // Positivity: alpha(x) > 0, ties broken lexicographically (a fixed generic
  // perturbation of x with infinitesimal weight).
  for (auto& r : rd.roots) {
    mpq_class ax = rd.eval_on_x(r.alpha);
    r.positive = ax > 0 || (ax == 0 && lex_positive(r.alpha));
  }
  for (std::size_t i = 0; i < rd.roots.size(); ++i)
    if (rd.roots[i].positive) rd.positive_idx.push_back(i);

  // Simple roots: positive and not a sum of two positives.
  std::set<WeightVec> pos_set;
  for (std::size_t pi : rd.positive_idx) pos_set.insert(rd.roots[pi].alpha);
  auto simple_within = [&](const std::vector<std::size_t>& idxs, const std::set<WeightVec>& set) {
    std::vector<std::size_t> out;
    for (std::size_t pi : idxs) {
      const WeightVec& a = rd.roots[pi].alpha;
      bool decomposable = false;
      for (std::size_t qi : idxs) {
        const WeightVec& b = rd.roots[qi].alpha;
        WeightVec c(a.size());
        for (std::size_t t = 0; t < a.size(); ++t) c[t] = a[t] - b[t];
        if (c != WeightVec(a.size(), 0) && set.count(rd.normalize(c))) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) out.push_back(pi);
    }
    return out;
  };
  rd.simple_idx = simple_within(rd.positive_idx, pos_set);

  // Levi subsystem of roots vanishing on x.
  std::set<WeightVec> levi_set;
  for (std::size_t pi : rd.positive_idx)
    if (rd.eval_on_x(rd.roots[pi].alpha) == 0) {
      rd.levi_positive_idx.push_back(pi);
      levi_set.insert(rd.roots[pi].alpha);
    }
  rd.levi_simple_idx = simple_within(rd.levi_positive_idx, levi_set);

  // Construction invariant: [t, X_alpha] = alpha(t) X_alpha.
  for (const auto& r : rd.roots) {
    WeightVec w = rd.weight_of(r.vec);
    if (w != r.alpha) throw ConsistencyError("root vector has wrong torus weight");
  }

  rd.compute_w0();

  // Ambient Chevalley basis for (g_C, h), h the Cartan extending t_C.
  if (alg.descriptor().family == Family::SU) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        GRoot gr;
        gr.i = i;
        gr.j = j;
        Mat xm(n, n);
        xm(i, j) = Scalar(1);
        gr.x_vec = alg.coords_of(xm);
        Mat hm(n, n);
        hm(i, i) = Scalar(1);
        hm(j, j) = Scalar(-1);
        gr.h_vec = alg.coords_of(hm);
        rd.groots.push_back(std::move(gr));
      }
  } else {
    // U diagonalizes the compact torus: per pair the columns are
    // e_{2r} + i e_{2r+1} and e_{2r} - i e_{2r+1} (0-based), identity tail.
    Mat U(n, n), Uinv(n, n);
    Scalar half(1, 2), halfi = Scalar(1, 2) * Scalar::i();
    for (int r = 0; 2 * r + 1 < n; ++r) {
      U(2 * r, 2 * r) = Scalar(1);
      U(2 * r + 1, 2 * r) = Scalar::i();
      U(2 * r, 2 * r + 1) = Scalar(1);
      U(2 * r + 1, 2 * r + 1) = -Scalar::i();
      Uinv(2 * r, 2 * r) = half;
      Uinv(2 * r, 2 * r + 1) = -halfi;
      Uinv(2 * r + 1, 2 * r) = half;
      Uinv(2 * r + 1, 2 * r + 1) = halfi;
    }
    if (n % 2 == 1) {
      U(n - 1, n - 1) = Scalar(1);
      Uinv(n - 1, n - 1) = Scalar(1);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        GRoot gr;
        gr.i = i;
        gr.j = j;
        Mat xm(n, n);
        xm(i, j) = Scalar(1);
        gr.x_vec = alg.coords_of(U * xm * Uinv);
        Mat hm(n, n);
        hm(i, i) = Scalar(1);
        hm(j, j) = Scalar(-1);
        gr.h_vec = alg.coords_of(U * hm * Uinv);
        rd.groots.push_back(std::move(gr));
      }
  }

  return rd;
}

Mat longest_weyl_element(const RootDatum& rd) { return rd.w0_matrix(); }

WeylInvolution::WeylInvolution(const AlgebraRealization& alg) : alg_(&alg) {}

Mat WeylInvolution::apply_matrix(const Mat& Z) const {
  if (alg_->descriptor().family == Family::SU) return Z.transpose().scaled(Scalar(-1));
  // -A Z^T A with A = diag(1,-1,1,-1,...,[1]): A anti-commutes with the
  // compact torus and fixes the split part of the Cartan.
  int n = alg_->ambient();
  Mat r = Z.transpose().scaled(Scalar(-1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i % 2 + j % 2) % 2 == 1) r(i, j) = -r(i, j);
  return r;
}

Vec WeylInvolution::apply(const Vec& z) const {
  return alg_->coords_of(apply_matrix(alg_->matrix_of(z)));
}

WeylInvolution weyl_involution(const RootDatum& rd) { return WeylInvolution(*rd.alg); }

bool is_dominant(const RootDatum& rd, const WeightVec& lambda) { return rd.is_dominant(lambda); }

WeightVec dual_ktype(const RootDatum& rd, const WeightVec& lambda) { return rd.dual_ktype(lambda); }

}  // namespace nilorbit
