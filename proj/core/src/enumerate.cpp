#include "midx/enumerate.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace midx {

namespace {

// Partitions of `total` into at most `max_parts` parts, each part >= 1,
// parts nonincreasing. total = 0 yields the empty partition.
void partitions_at_most(int total, int max_parts, int max_part, std::vector<int>& current,
                        std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  if (max_parts == 0) return;
  for (int part = std::min(total, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_at_most(total - part, max_parts - 1, part, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> partitions_at_most(int total, int max_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  if (total >= 0) partitions_at_most(total, max_parts, total == 0 ? 1 : total, current, out);
  return out;
}

// Index multisets for `count` variables of one kind with index sum `sum`:
// a partition of `sum` into at most `count` parts gives the positive
// indices, the rest sit at index zero.
std::vector<std::map<int, int>> index_multisets(int count, int sum) {
  std::vector<std::map<int, int>> out;
  for (const auto& partition : partitions_at_most(sum, count)) {
    std::map<int, int> counts;
    counts[0] = count - static_cast<int>(partition.size());
    if (counts[0] == 0) counts.erase(0);
    for (int part : partition) ++counts[part];
    out.push_back(std::move(counts));
  }
  return out;
}

// Quad multisets of total weight w, where a factor of index k weighs
// k + 1: partitions of w with part p mapping to index p - 1.
std::vector<std::map<int, int>> quad_multisets(int weight) {
  std::vector<std::map<int, int>> out;
  for (const auto& partition : partitions_at_most(weight, weight)) {
    std::map<int, int> counts;
    for (int part : partition) ++counts[part - 1];
    out.push_back(std::move(counts));
  }
  return out;
}

// Multisets of Poly variables with total parabolic degree <= cap.
void poly_multisets(const std::vector<Variable>& pool, std::size_t from, int cap,
                    MultiIndex& current, std::vector<MultiIndex>& out) {
  out.push_back(current);
  for (std::size_t i = from; i < pool.size(); ++i) {
    const int w = pool[i].parabolic_degree();
    if (w > cap) continue;
    current.mul(pool[i]);
    poly_multisets(pool, i, cap - w, current, out);
    current.mul(pool[i], -1);
  }
}

std::vector<MultiIndex> poly_multisets(int cap) {
  std::vector<Variable> pool;
  for (int w = 1; w <= cap; ++w)
    for (int n1 = 0; 2 * n1 <= w; ++n1) pool.push_back(Variable::poly(n1, w - 2 * n1));
  std::vector<MultiIndex> out;
  MultiIndex current;
  poly_multisets(pool, 0, cap, current, out);
  return out;
}

MultiIndex assemble(const std::map<int, int>& noise, const std::map<int, int>& quad,
                    const std::map<int, int>& lin, const std::map<int, int>& func,
                    const MultiIndex& poly) {
  MultiIndex beta = poly;
  for (const auto& [k, e] : noise) beta.mul(Variable::noise(k), e);
  for (const auto& [k, e] : quad) beta.mul(Variable::quad(k), e);
  for (const auto& [k, e] : lin) beta.mul(Variable::lin(k), e);
  for (const auto& [k, e] : func) beta.mul(Variable::func(k), e);
  return beta;
}

}  // namespace

std::vector<MultiIndex> enumerate(const EnumerationRequest& request) {
  const auto& alpha = request.alphabet;
  const auto has = [&](VarKind k) { return alpha.count(k) != 0; };
  if (!has(VarKind::Noise)) return {};
  if (!request.negative_only) {
    if (!request.noise_max)
      throw std::invalid_argument("enumerate: unbounded request (no negativity and no noise cap)");
    if (has(VarKind::Lin) || has(VarKind::Func) || has(VarKind::Poly))
      throw std::invalid_argument("enumerate: Lin/Func/Poly need the negativity bound");
  }

  const Rational& delta = request.ctx.delta;
  int noise_cap = request.noise_max.value_or(INT_MAX);
  if (request.negative_only) {
    // extras >= 0 force ((beta)) * delta / 2 <= 2.
    const Rational four_over_delta = make_rational(4) / delta;
    long cap = floor_long(four_over_delta);
    if (!request.ctx.limit_mode && Rational(cap) == four_over_delta) --cap;
    noise_cap = std::min<long>(noise_cap, cap);
  }

  std::vector<MultiIndex> results;
  const auto consider = [&](MultiIndex beta) {
    if (!beta.populated()) return;
    const int n = beta.noise_count();
    if (n < request.noise_min || n > noise_cap) return;
    if (request.even_noise && n % 2 != 0) return;
    if (request.negative_only && !request.ctx.negative(beta.homogeneity(request.ctx), n)) return;
    results.push_back(std::move(beta));
  };

  for (int n = std::max(1, request.noise_min); n <= noise_cap; ++n) {
    if (request.even_noise && n % 2 != 0) continue;

    // Budget for the nonnegative correction terms #Lin + 2#Func + sum of
    // parabolic degrees in the closed form of the homogeneity.
    int extras_cap = 0;
    if (request.negative_only) {
      const Rational budget = make_rational(2) - delta * n / 2;
      if (budget < 0) break;
      extras_cap = static_cast<int>(floor_long(budget));
    }

    const int lin_cap = has(VarKind::Lin) ? extras_cap : 0;
    for (int n_lin = 0; n_lin <= lin_cap; ++n_lin) {
      const int func_cap = has(VarKind::Func) ? (extras_cap - n_lin) / 2 : 0;
      for (int n_func = 0; n_func <= func_cap; ++n_func) {
        std::vector<MultiIndex> polys = {MultiIndex{}};
        if (has(VarKind::Poly)) polys = poly_multisets(extras_cap - n_lin - 2 * n_func);
        for (const MultiIndex& poly : polys) {
          const int n_poly = poly.degree();
          // Fertility balance: S_N + (quad weight) = n - 1 - S_L + n_F - S_F + n_P.
          const int slack = n - 1 + n_func + n_poly;
          for (int s_func = 0; s_func <= (n_func > 0 ? slack : 0); ++s_func) {
            for (const auto& func : index_multisets(n_func, s_func)) {
              for (int s_lin = 0; s_lin <= (n_lin > 0 ? slack - s_func : 0); ++s_lin) {
                for (const auto& lin : index_multisets(n_lin, s_lin)) {
                  const int remaining_base = n - s_lin + n_func - s_func + n_poly;
                  // Fertility of the non-Diff part: one without a Diff
                  // factor, otherwise the Diff index that restores one.
                  const int fert_max = has(VarKind::Diff) ? remaining_base : 1;
                  for (int fert = has(VarKind::Diff) ? 0 : 1; fert <= fert_max; ++fert) {
                    const int remaining = remaining_base - fert;
                    if (remaining < 0) continue;
                    const int quad_max = has(VarKind::Quad) ? remaining : 0;
                    for (int w = 0; w <= quad_max; ++w) {
                      for (const auto& quad : quad_multisets(w)) {
                        for (const auto& noise : index_multisets(n, remaining - w)) {
                          MultiIndex beta = assemble(noise, quad, lin, func, poly);
                          if (has(VarKind::Diff)) {
                            consider(MultiIndex(beta).mul(Variable::diff(fert)));
                            if (fert == 1) consider(std::move(beta));
                          } else {
                            consider(std::move(beta));
                          }
                        }
                      }
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }

  std::sort(results.begin(), results.end());
  results.erase(std::unique(results.begin(), results.end()), results.end());
  return results;
}

std::vector<MultiIndex> enumerate_negative(const GradingContext& ctx) {
  return enumerate({ctx,
                    {VarKind::Noise, VarKind::Quad, VarKind::Lin, VarKind::Func, VarKind::Poly},
                    1,
                    std::nullopt,
                    true,
                    false});
}

std::vector<MultiIndex> enumerate_reduced(const GradingContext& ctx, bool even_only) {
  return enumerate({ctx, {VarKind::Noise, VarKind::Quad}, 2, std::nullopt, true, even_only});
}

std::vector<MultiIndex> enumerate_reduced_level(int N) {
  if (N < 2) throw std::invalid_argument("level sets need at least two noises");
  return enumerate({GradingContext(1, true), {VarKind::Noise, VarKind::Quad}, N, N, false, false});
}

std::vector<MultiIndex> enumerate_extended_level(int N) {
  if (N < 2) throw std::invalid_argument("level sets need at least two noises");
  return enumerate(
      {GradingContext(1, true), {VarKind::Noise, VarKind::Quad, VarKind::Diff}, N, N, false, false});
}

std::vector<MultiIndex> enumerate_pure_noise(int N) {
  if (N < 2) throw std::invalid_argument("pure-noise level sets need at least two noises");
  return enumerate({GradingContext(1, true), {VarKind::Noise}, N, N, false, false});
}

long novikov_dimension(int N) { return static_cast<long>(enumerate_pure_noise(N).size()); }

int n_xi(const GradingContext& ctx) {
  int best = 0;
  for (const MultiIndex& beta : enumerate_reduced(ctx, false))
    best = std::max(best, beta.noise_count());
  return best;
}

std::vector<NablaExpression> generate_nabla_set(int N) {
  if (N < 2) throw std::invalid_argument("nabla sets need at least two leaves");
  std::vector<std::vector<NablaExpression>> levels(N + 1);
  levels[1] = {{"N0", Poly::variable(Variable::noise(0))}};
  for (int m = 2; m <= N; ++m) {
    for (int left = 1; left < m; ++left) {
      for (const auto& l : levels[left]) {
        for (const auto& r : levels[m - left]) {
          levels[m].push_back(
              {"grad(" + l.label + "," + r.label + ")", nabla(l.value, r.value)});
        }
      }
    }
  }
  return levels[N];
}

}  // namespace midx
