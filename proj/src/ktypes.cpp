#include "nilorbit/ktypes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "nilorbit/errors.hpp"

namespace nilorbit {

namespace {

long long dot_ll(const WeightVec& a, const WeightVec& b) { return weight_dot(a, b); }

WeightVec add_vec(const WeightVec& a, const WeightVec& b) {
  WeightVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

long long maxnorm(const WeightVec& v) {
  long long m = 0;
  for (long long c : v) m = std::max(m, c < 0 ? -c : c);
  return m;
}

}  // namespace

KTypeLattice::KTypeLattice(const RootDatum& rd, std::vector<WeightVec> generators)
    : rd_(&rd), gens_(std::move(generators)) {
  for (auto& g : gens_) {
    g = rd.normalize(g);
    if (g == WeightVec(g.size(), 0))
      throw DescriptorError("degenerate lattice: zero generator weight");
  }
  if (gens_.empty()) return;

  // A strictly positive functional bounds the exponent search. 2*rho works
  // whenever the generators are nonzero dominant classes; fall back to the
  // projected generator sum, then coordinate functionals.
  std::size_t L = rd.weight_len();
  std::vector<WeightVec> candidates;
  candidates.push_back(rd.two_rho());
  {
    WeightVec s(L, 0);
    for (const auto& g : gens_) s = add_vec(s, g);
    if (rd.alg->descriptor().family == Family::SU) {
      long long total = 0;
      for (long long c : s) total += c;
      for (auto& c : s) c = c * static_cast<long long>(L) - total;
    }
    candidates.push_back(s);
  }
  for (std::size_t t = 0; t < L; ++t) {
    WeightVec e(L, 0);
    e[t] = 1;
    candidates.push_back(e);
    e[t] = -1;
    candidates.push_back(e);
  }
  for (const auto& cand : candidates) {
    bool ok = true;
    for (const auto& g : gens_)
      if (dot_ll(cand, g) <= 0) ok = false;
    if (ok) {
      xi_ = cand;
      break;
    }
  }
  if (xi_.empty()) throw DescriptorError("degenerate lattice: no positive grading functional");
}

long long KTypeLattice::xi_of(const WeightVec& w) const { return dot_ll(xi_, w); }

void KTypeLattice::enumerate_budget(long long budget, std::size_t from, WeightVec acc,
                                    const std::function<void(const WeightVec&)>& sink) const {
  if (from == gens_.size()) {
    sink(acc);
    return;
  }
  long long step = xi_of(gens_[from]);
  WeightVec cur = acc;
  for (long long m = 0; m * step <= budget; ++m) {
    if (m > 0) cur = add_vec(cur, gens_[from]);
    enumerate_budget(budget - m * step, from + 1, cur, sink);
  }
}

std::size_t KTypeLattice::multiplicity(const WeightVec& lambda) const {
  WeightVec target = rd_->normalize(lambda);
  if (gens_.empty()) return target == WeightVec(target.size(), 0) ? 1 : 0;
  long long budget = xi_of(target);
  if (budget < 0) return 0;
  std::size_t count = 0;
  std::function<void(long long, std::size_t, const WeightVec&)> rec =
      [&](long long left, std::size_t from, const WeightVec& acc) {
        if (from == gens_.size()) {
          if (left == 0 && rd_->normalize(acc) == target) ++count;
          return;
        }
        long long step = xi_of(gens_[from]);
        WeightVec cur = acc;
        for (long long m = 0; m * step <= left; ++m) {
          if (m > 0) cur = add_vec(cur, gens_[from]);
          rec(left - m * step, from + 1, cur);
        }
      };
  rec(budget, 0, WeightVec(rd_->weight_len(), 0));
  return count;
}

std::vector<std::pair<WeightVec, std::size_t>> KTypeLattice::enumerate(long long bound) const {
  if (bound < 0) throw DescriptorError("enumeration bound must be nonnegative");
  std::map<WeightVec, std::size_t> hits;
  if (gens_.empty()) {
    hits[WeightVec(rd_->weight_len(), 0)] = 1;
  } else {
    long long xi_norm = 0;
    for (long long c : xi_) xi_norm += c < 0 ? -c : c;
    long long budget = bound * xi_norm;
    enumerate_budget(budget, 0, WeightVec(rd_->weight_len(), 0), [&](const WeightVec& w) {
      WeightVec n = rd_->normalize(w);
      if (maxnorm(n) <= bound) hits[n] += 1;
    });
  }
  return {hits.begin(), hits.end()};
}

bool KTypeLattice::self_dual_check(long long bound) const {
  long long needed = bound;
  for (const auto& g : gens_) {
    needed = std::max(needed, maxnorm(g));
    needed = std::max(needed, maxnorm(rd_->dual_ktype(g)));
  }
  for (const auto& [lambda, mult] : enumerate(needed))
    if (multiplicity(rd_->dual_ktype(lambda)) != mult) return false;
  return true;
}

bool KTypeLattice::generator_multiset_self_dual() const {
  std::multiset<WeightVec> a(gens_.begin(), gens_.end()), b;
  for (const auto& g : gens_) b.insert(rd_->dual_ktype(g));
  return a == b;
}

std::vector<WeightVec> KTypeLattice::shifted_lattice(const WeightVec& mu, long long bound) const {
  WeightVec base = rd_->normalize(mu);
  if (!rd_->is_dominant(base))
    throw DescriptorError("shifted lattice requires a dominant lowest K-type");
  std::set<WeightVec> out;
  if (gens_.empty()) {
    if (maxnorm(base) <= bound) out.insert(base);
  } else {
    long long xi_norm = 0;
    for (long long c : xi_) xi_norm += c < 0 ? -c : c;
    long long budget = bound * xi_norm - xi_of(base);
    if (budget >= 0)
      enumerate_budget(budget, 0, base, [&](const WeightVec& w) {
        WeightVec n = rd_->normalize(w);
        if (maxnorm(n) <= bound) out.insert(n);
      });
  }
  return {out.begin(), out.end()};
}

namespace {

using IneqRow = std::vector<mpz_class>;

void gcd_normalize(IneqRow& row) {
  mpz_class g(0);
  for (const auto& c : row) g = gcd(g, c);
  if (g > 1)
    for (auto& c : row) c /= g;
}

bool all_zero(const IneqRow& row) {
  for (const auto& c : row)
    if (c != 0) return false;
  return true;
}

/// Feasibility of {c >= 0 : sum c_i vectors_i = target}: exact phase-one
/// simplex with Bland's rule, so it terminates on every rational input.
bool in_nonneg_span(const std::vector<IneqRow>& vectors, const IneqRow& target) {
  std::size_t m = vectors.size(), L = target.size();
  // tableau rows: [real vars | artificial vars | rhs], artificial basis
  std::vector<std::vector<mpq_class>> T(L, std::vector<mpq_class>(m + L + 1, 0));
  for (std::size_t i = 0; i < L; ++i) {
    bool flip = target[i] < 0;
    for (std::size_t j = 0; j < m; ++j)
      T[i][j] = flip ? mpq_class(-vectors[j][i]) : mpq_class(vectors[j][i]);
    T[i][m + i] = 1;
    T[i][m + L] = flip ? mpq_class(-target[i]) : mpq_class(target[i]);
  }
  std::vector<std::size_t> basis(L);
  for (std::size_t i = 0; i < L; ++i) basis[i] = m + i;
  // objective: minimize the artificial sum; reduced costs d_j = c_j - sum_i T[i][j]
  std::vector<mpq_class> d(m + L + 1, 0);
  for (std::size_t j = 0; j <= m + L; ++j) {
    mpq_class s(0);
    for (std::size_t i = 0; i < L; ++i) s += T[i][j];
    d[j] = (j >= m && j < m + L ? mpq_class(1) : mpq_class(0)) - s;
  }
  while (true) {
    std::size_t enter = m + L;
    for (std::size_t j = 0; j < m + L; ++j)
      if (d[j] < 0) {
        enter = j;
        break;
      }
    if (enter == m + L) break;
    std::size_t leave = L;
    mpq_class best;
    for (std::size_t i = 0; i < L; ++i) {
      if (T[i][enter] <= 0) continue;
      mpq_class ratio = T[i][m + L] / T[i][enter];
      if (leave == L || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == L) break;  // unbounded entering direction
    mpq_class piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (std::size_t i = 0; i < L; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      mpq_class f = T[i][enter];
      for (std::size_t j = 0; j <= m + L; ++j) T[i][j] -= f * T[leave][j];
    }
    if (d[enter] != 0) {
      mpq_class f = d[enter];
      for (std::size_t j = 0; j <= m + L; ++j) d[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  mpq_class infeasibility(0);
  for (std::size_t i = 0; i < L; ++i)
    if (basis[i] >= m && basis[i] < m + L) infeasibility += T[i][m + L];
  return infeasibility == 0;
}

/// Drop inequalities lying in the nonnegative span of the others; what
/// remains are the extreme rays of the dual cone.
std::vector<IneqRow> minimal_inequalities(std::vector<IneqRow> rows) {
  for (std::size_t i = 0; i < rows.size();) {
    std::vector<IneqRow> others;
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != i) others.push_back(rows[j]);
    if (in_nonneg_span(others, rows[i]))
      rows.erase(rows.begin() + i);
    else
      ++i;
  }
  return rows;
}

/// Fourier-Motzkin elimination of the first `drop` variables from the
/// homogeneous system {row . x >= 0}.
std::vector<IneqRow> fourier_motzkin(std::vector<IneqRow> rows, std::size_t drop) {
  for (std::size_t v = 0; v < drop; ++v) {
    std::vector<IneqRow> pos, neg, zero;
    for (auto& r : rows) {
      if (r[0] > 0)
        pos.push_back(std::move(r));
      else if (r[0] < 0)
        neg.push_back(std::move(r));
      else
        zero.push_back(std::move(r));
    }
    std::set<IneqRow> next;
    auto strip = [](IneqRow r) {
      r.erase(r.begin());
      return r;
    };
    for (auto& r : zero) {
      IneqRow s = strip(std::move(r));
      gcd_normalize(s);
      if (!all_zero(s)) next.insert(std::move(s));
    }
    for (const auto& pr : pos)
      for (const auto& nr : neg) {
        IneqRow combo(pr.size());
        for (std::size_t i = 0; i < pr.size(); ++i) combo[i] = -nr[0] * pr[i] + pr[0] * nr[i];
        IneqRow s = strip(std::move(combo));
        gcd_normalize(s);
        if (!all_zero(s)) next.insert(std::move(s));
      }
    rows.assign(next.begin(), next.end());
  }
  return rows;
}

}  // namespace

Cone cone_from_rays(const RootDatum& rd, const std::vector<WeightVec>& rays) {
  Cone cone;
  cone.rays = rays;
  cone.has_lineality = rd.alg->descriptor().family == Family::SU;
  std::size_t r = rays.size();
  std::size_t lin = cone.has_lineality ? 1 : 0;
  std::size_t L = rd.weight_len();
  std::size_t vars = r + lin + L;

  std::vector<IneqRow> rows;
  for (std::size_t i = 0; i < r; ++i) {
    IneqRow row(vars, 0);
    row[i] = 1;
    rows.push_back(std::move(row));
  }
  for (std::size_t t = 0; t < L; ++t) {
    IneqRow eq(vars, 0);
    for (std::size_t i = 0; i < r; ++i) eq[i] = mpz_class(static_cast<long>(rays[i][t]));
    if (lin) eq[r] = 1;
    eq[r + lin + t] = -1;
    IneqRow opp = eq;
    for (auto& c : opp) c = -c;
    rows.push_back(std::move(eq));
    rows.push_back(std::move(opp));
  }
  auto projected = minimal_inequalities(fourier_motzkin(std::move(rows), r + lin));
  std::sort(projected.begin(), projected.end());
  cone.inequalities = std::move(projected);
  return cone;
}

Cone asymptotic_cone(const KTypeLattice& lattice) {
  return cone_from_rays(lattice.rd(), lattice.generators());
}

bool cone_contains(const Cone& cone, const std::vector<mpq_class>& v) {
  if (!cone.inequalities.empty() && cone.inequalities.front().size() != v.size())
    throw DescriptorError("cone membership: dimension mismatch");
  if (cone.inequalities.empty() && !cone.rays.empty())
    return true;  // no constraints survived projection
  if (cone.inequalities.empty()) return true;
  for (const auto& row : cone.inequalities) {
    mpq_class s(0);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (row[i] != 0) s += mpq_class(row[i]) * v[i];
    if (s < 0) return false;
  }
  return true;
}

bool cone_contains(const Cone& cone, const WeightVec& v) {
  std::vector<mpq_class> q;
  q.reserve(v.size());
  for (long long c : v) q.emplace_back(static_cast<long>(c));
  return cone_contains(cone, q);
}

}  // namespace nilorbit
