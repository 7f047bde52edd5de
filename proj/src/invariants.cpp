#include "nilorbit/invariants.hpp"

#include <algorithm>
#include <random>

namespace nilorbit {

namespace {

/// Incremental row reduction for span-membership bookkeeping.
class RowReducer {
public:
  // Reduces the row in place; returns true (and absorbs it) if independent.
  bool add(Vec row) {
    reduce(row);
    std::size_t lead = leading(row);
    if (lead == row.size()) return false;
    Scalar inv = Scalar(1) / row[lead];
    for (auto& c : row) c *= inv;
    rows_.push_back(std::move(row));
    leads_.push_back(lead);
    return true;
  }

  bool contains(Vec row) const {
    reduce(row);
    return leading(row) == row.size();
  }

  std::size_t rank() const { return rows_.size(); }

private:
  static std::size_t leading(const Vec& v) {
    std::size_t i = 0;
    while (i < v.size() && v[i].is_zero()) ++i;
    return i;
  }
  void reduce(Vec& row) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& c = row[leads_[r]];
      if (!c.is_zero()) {
        Scalar f = c;
        for (std::size_t j = leads_[r]; j < row.size(); ++j) row[j] -= f * rows_[r][j];
      }
    }
  }
  std::vector<Vec> rows_;
  std::vector<std::size_t> leads_;
};

std::vector<Vec> weight_refine(const AlgebraRealization& alg, std::vector<Vec> basis) {
  // Refines a torus-stable span into simultaneous integer eigenvectors.
  std::vector<std::vector<Vec>> groups = {std::move(basis)};
  for (std::size_t r = 0; r < alg.torus_dim(); ++r) {
    std::vector<std::vector<Vec>> next;
    for (auto& group : groups) {
      if (group.size() == 1) {
        next.push_back(std::move(group));
        continue;
      }
      SpanSolver span(group);
      std::size_t d = group.size();
      Mat action(d, d);
      for (std::size_t j = 0; j < d; ++j) {
        auto c = span.express(alg.bracket(alg.torus_element(r), group[j]));
        if (!c) throw ConsistencyError("weight refinement: span not torus stable");
        action.set_col(j, *c);
      }
      mpq_class bound(0);
      for (std::size_t i = 0; i < d; ++i) {
        mpq_class row(0);
        for (std::size_t j = 0; j < d; ++j) row += abs(action(i, j).re()) + abs(action(i, j).im());
        if (row > bound) bound = row;
      }
      mpz_class bz = (bound.get_num() + bound.get_den() - 1) / bound.get_den();
      long B = bz.get_si();
      std::size_t found = 0;
      for (long c = -B; c <= B; ++c) {
        Mat shifted = action;
        for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= Scalar(c);
        auto ker = nullspace(shifted);
        if (ker.empty()) continue;
        std::vector<Vec> sub;
        for (const Vec& coeffs : ker) {
          Vec v(alg.dim());
          for (std::size_t j = 0; j < d; ++j) vec_axpy(v, coeffs[j], group[j]);
          sub.push_back(std::move(v));
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != d)
        throw ConsistencyError("weight refinement: non-integral torus eigenvalues");
    }
    groups = std::move(next);
  }
  std::vector<Vec> out;
  for (auto& g : groups)
    for (auto& v : g) out.push_back(std::move(v));
  return out;
}

void enumerate_exponents(int vars, int degree, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
  if (vars == 1) {
    current.push_back(degree);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    current.push_back(e);
    enumerate_exponents(vars - 1, degree - e, current, out);
    current.pop_back();
  }
}

WeightVec add_weights(const RootDatum& rd, const WeightVec& a, const WeightVec& b) {
  WeightVec s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return rd.normalize(s);
}

}  // namespace

void WeightedPolynomial::normalize_leading() {
  if (coeffs.empty()) return;
  Scalar lead = coeffs.begin()->second;
  for (auto& [e, c] : coeffs) c /= lead;
}

WeightedPolynomial poly_mul(const WeightedPolynomial& a, const WeightedPolynomial& b) {
  WeightedPolynomial r;
  r.degree = a.degree + b.degree;
  for (const auto& [ea, ca] : a.coeffs)
    for (const auto& [eb, cb] : b.coeffs) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Scalar& slot = r.coeffs[e];
      slot += ca * cb;
      if (slot.is_zero()) r.coeffs.erase(e);
    }
  return r;
}

InvariantContext::InvariantContext(const AlgebraRealization& alg, const RootDatum& rd,
                                   const AdGrading& g)
    : alg_(&alg), rd_(&rd) {
  if (!is_small(g))
    throw DescriptorError("invariant computation requires a small orbit");
  auto it = g.p_piece.find(2);
  std::vector<Vec> vt = it == g.p_piece.end() ? std::vector<Vec>{} : it->second;
  var_vectors_ = weight_refine(alg, std::move(vt));
  for (const Vec& v : var_vectors_) var_weights_.push_back(rd.weight_of(v));

  // Fixed variable order: weight descending lexicographically, stable.
  std::vector<std::size_t> order(var_vectors_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return var_weights_[a] > var_weights_[b];
  });
  std::vector<Vec> vv;
  std::vector<WeightVec> vw;
  for (std::size_t i : order) {
    vv.push_back(var_vectors_[i]);
    vw.push_back(var_weights_[i]);
  }
  var_vectors_ = std::move(vv);
  var_weights_ = std::move(vw);

  SpanSolver span(var_vectors_);
  auto action_of = [&](const Vec& X) {
    std::size_t d = var_vectors_.size();
    Mat m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      auto c = span.express(alg.bracket(X, var_vectors_[j]));
      if (!c) throw ConsistencyError("u(l_k) does not preserve p_C(x;2)");
      m.set_col(j, *c);
    }
    return m;
  };
  for (const Vec& X : rd.levi_nilradical_simple()) simple_actions_.push_back(action_of(X));
  for (const Vec& X : rd.levi_nilradical()) full_actions_.push_back(action_of(X));
}

WeightVec InvariantContext::monomial_weight(const std::vector<int>& expo) const {
  WeightVec w(rd_->weight_len(), 0);
  for (std::size_t i = 0; i < expo.size(); ++i)
    if (expo[i] != 0)
      for (std::size_t k = 0; k < w.size(); ++k) w[k] += expo[i] * var_weights_[i][k];
  return rd_->normalize(w);
}

std::map<std::vector<int>, Scalar> InvariantContext::derive_monomial(
    const Mat& action, const std::vector<int>& expo) const {
  std::map<std::vector<int>, Scalar> out;
  for (std::size_t i = 0; i < expo.size(); ++i) {
    if (expo[i] == 0) continue;
    for (std::size_t k = 0; k < expo.size(); ++k) {
      const Scalar& a = action(k, i);
      if (a.is_zero()) continue;
      std::vector<int> e = expo;
      e[i] -= 1;
      e[k] += 1;
      Scalar& slot = out[e];
      slot += Scalar(expo[i]) * a;
      if (slot.is_zero()) out.erase(e);
    }
  }
  return out;
}

std::map<std::vector<int>, Scalar> InvariantContext::derive_poly(
    const Mat& action, const WeightedPolynomial& p) const {
  std::map<std::vector<int>, Scalar> out;
  for (const auto& [e, c] : p.coeffs)
    for (const auto& [te, tc] : derive_monomial(action, e)) {
      Scalar& slot = out[te];
      slot += c * tc;
      if (slot.is_zero()) out.erase(te);
    }
  return out;
}

MonomialBasis symmetric_power_basis(const InvariantContext& ctx, int n) {
  if (n < 0) throw DescriptorError("symmetric power degree must be nonnegative");
  MonomialBasis mb;
  mb.degree = n;
  int d = static_cast<int>(ctx.var_count());
  if (d == 0) {
    if (n == 0) {
      mb.monomials.push_back({});
      mb.weights.push_back(WeightVec(ctx.rd().weight_len(), 0));
      mb.by_weight[mb.weights[0]] = {0};
      mb.index[{}] = 0;
    }
    return mb;
  }
  std::vector<int> current;
  enumerate_exponents(d, n, current, mb.monomials);
  std::sort(mb.monomials.begin(), mb.monomials.end());
  for (std::size_t i = 0; i < mb.monomials.size(); ++i) {
    mb.weights.push_back(ctx.monomial_weight(mb.monomials[i]));
    mb.by_weight[mb.weights[i]].push_back(i);
    mb.index[mb.monomials[i]] = i;
  }
  return mb;
}

std::vector<WeightedPolynomial> nilradical_kernel(const InvariantContext& ctx, int n) {
  MonomialBasis mb = symmetric_power_basis(ctx, n);
  std::vector<WeightedPolynomial> out;
  for (const auto& [lambda, block] : mb.by_weight) {
    // Constraint rows: coefficients of every derivation image monomial.
    std::map<std::vector<int>, std::size_t> target_rows;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(block.size());
    std::size_t action_count = ctx.simple_actions().size();
    for (std::size_t bj = 0; bj < block.size(); ++bj) {
      for (std::size_t s = 0; s < action_count; ++s) {
        auto img = ctx.derive_monomial(ctx.simple_actions()[s], mb.monomials[block[bj]]);
        for (const auto& [te, tc] : img) {
          auto key = te;
          key.push_back(static_cast<int>(s));  // rows are per (generator, monomial)
          auto [it, fresh] = target_rows.try_emplace(key, target_rows.size());
          cols[bj].push_back({it->second, tc});
        }
      }
    }
    Mat sys(target_rows.size(), block.size());
    for (std::size_t bj = 0; bj < block.size(); ++bj)
      for (const auto& [row, c] : cols[bj]) sys(row, bj) += c;
    for (const Vec& coeffs : nullspace(sys)) {
      WeightedPolynomial p;
      p.degree = n;
      p.weight = lambda;
      for (std::size_t bj = 0; bj < block.size(); ++bj)
        if (!coeffs[bj].is_zero()) p.coeffs[mb.monomials[block[bj]]] = coeffs[bj];
      p.normalize_leading();
      out.push_back(std::move(p));
    }
  }
  return out;
}

namespace {

void count_products(const GeneratorSet& gs, const RootDatum& rd, int remaining_degree,
                    std::size_t from, WeightVec acc,
                    std::map<WeightVec, std::size_t>& counts) {
  if (remaining_degree == 0) {
    counts[rd.normalize(acc)] += 1;
    return;
  }
  if (from == gs.gens.size()) return;
  int d = gs.gens[from].degree;
  for (int times = 0; times * d <= remaining_degree; ++times) {
    WeightVec next = acc;
    for (std::size_t i = 0; i < next.size(); ++i)
      next[i] += static_cast<long long>(times) * gs.gens[from].weight[i];
    count_products(gs, rd, remaining_degree - times * d, from + 1, next, counts);
  }
}

void expand_products(const InvariantContext& ctx, const std::vector<Generator>& gens,
                     int target_degree, std::size_t from, const WeightedPolynomial& acc,
                     std::vector<WeightedPolynomial>& out) {
  if (acc.degree == target_degree) {
    if (acc.degree > 0) out.push_back(acc);
    return;
  }
  if (from == gens.size()) return;
  // exponent of gens[from] ranges over the degree budget
  WeightedPolynomial cur = acc;
  for (int times = 0;; ++times) {
    if (acc.degree + times * gens[from].degree > target_degree) break;
    if (times > 0) cur = poly_mul(cur, gens[from].poly);
    expand_products(ctx, gens, target_degree, from + 1, cur, out);
  }
}

}  // namespace

GeneratorSet extract_generators(const InvariantContext& ctx, std::size_t rank_r, int max_degree,
                                std::uint64_t seed) {
  if (max_degree < 1) throw DescriptorError("max_degree must be at least 1");
  GeneratorSet gs;
  std::map<int, std::map<WeightVec, std::size_t>> kernel_dims;

  for (int n = 1; n <= max_degree; ++n) {
    MonomialBasis mb = symmetric_power_basis(ctx, n);
    auto kernel = nilradical_kernel(ctx, n);
    for (const auto& p : kernel) kernel_dims[n][p.weight] += 1;

    // span of products of already-extracted generators, per weight block
    std::vector<WeightedPolynomial> products;
    WeightedPolynomial unit;
    unit.degree = 0;
    unit.coeffs[std::vector<int>(ctx.var_count(), 0)] = Scalar(1);
    expand_products(ctx, gs.gens, n, 0, unit, products);

    std::map<WeightVec, RowReducer> spans;
    auto to_row = [&](const WeightedPolynomial& p) {
      const auto& block = mb.by_weight.at(p.weight);
      Vec row(block.size());
      for (std::size_t bj = 0; bj < block.size(); ++bj) {
        auto it = p.coeffs.find(mb.monomials[block[bj]]);
        if (it != p.coeffs.end()) row[bj] = it->second;
      }
      return row;
    };
    for (const auto& p : products) {
      // products of invariants of equal total degree n; weights partition them
      WeightedPolynomial q = p;
      q.weight = ctx.monomial_weight(q.coeffs.begin()->first);
      spans[q.weight].add(to_row(q));
    }

    for (const auto& p : kernel) {
      if (spans[p.weight].add(to_row(p))) {
        Generator gen;
        gen.poly = p;
        gen.degree = n;
        gen.weight = p.weight;
        gs.gens.push_back(std::move(gen));
        gs.mu.push_back(p.weight);
        if (gs.gens.size() > rank_r)
          throw ConsistencyError(
              "more generators than the orbit rank: smallness/sphericality misclassified");
      }
    }
  }

  if (gs.gens.size() < rank_r)
    throw DegreeBoundError("only " + std::to_string(gs.gens.size()) + " of " +
                           std::to_string(rank_r) +
                           " generators found: increase degree bound");

  // Polynomial-algebra identity: per degree and weight, the kernel dimension
  // must match the number of monomials in the generators.
  for (int n = 1; n <= max_degree; ++n) {
    auto counts = generator_monomial_counts(gs, ctx.rd(), n);
    auto have = kernel_dims.find(n) == kernel_dims.end() ? std::map<WeightVec, std::size_t>{}
                                                         : kernel_dims[n];
    if (counts != have)
      throw ConsistencyError(
          "kernel dimensions disagree with generator monomial counts at degree " +
          std::to_string(n));
  }

  // Algebraic independence: Jacobian rank at a random rational point.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::size_t d = ctx.var_count();
  bool independent = gs.gens.empty();
  for (int attempt = 0; attempt < 3 && !independent; ++attempt) {
    std::vector<Scalar> pt(d);
    for (auto& c : pt) c = Scalar(coeff(rng));
    Mat jac(gs.gens.size(), d);
    for (std::size_t gi = 0; gi < gs.gens.size(); ++gi)
      for (std::size_t v = 0; v < d; ++v) {
        Scalar deriv;
        for (const auto& [e, c] : gs.gens[gi].poly.coeffs) {
          if (e[v] == 0) continue;
          Scalar term = c * Scalar(e[v]);
          for (std::size_t w = 0; w < d; ++w) {
            int pow = e[w] - (w == v ? 1 : 0);
            for (int t = 0; t < pow; ++t) term *= pt[w];
          }
          deriv += term;
        }
        jac(gi, v) = deriv;
      }
    independent = (rank(jac) == gs.gens.size());
  }
  if (!independent)
    throw ConsistencyError("extracted generators are not algebraically independent");

  return gs;
}

void resolve_gamma_weights(GeneratorSet& gs, const RootDatum& rd, bool self_dual) {
  gs.self_dual = self_dual;
  gs.minus_w0_mu.clear();
  for (const WeightVec& m : gs.mu) gs.minus_w0_mu.push_back(rd.dual_ktype(m));
  gs.gamma = gs.mu;
}

std::map<WeightVec, std::size_t> generator_monomial_counts(const GeneratorSet& gs,
                                                           const RootDatum& rd, int degree) {
  std::map<WeightVec, std::size_t> counts;
  count_products(gs, rd, degree, 0, WeightVec(rd.weight_len(), 0), counts);
  return counts;
}

}  // namespace nilorbit
