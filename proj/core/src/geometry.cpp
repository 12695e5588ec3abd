#include "midx/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "midx/enumerate.hpp"

namespace midx {

namespace {

Poly phi_geo_generator(const Variable& v) {
  const Poly h0 = Poly::variable(Variable::diff(0));
  if (v.kind == VarKind::Noise) {
    return derivation_d(bracket(Poly::variable(Variable::noise(0)), h0), v.a);
  }
  const Poly quad0 = Poly::variable(Variable::quad(0));
  return -derivation_d(quad0 * h0, v.a + 1) -
         make_rational(2) * Poly::variable(Variable::diff(v.a + 2));
}

}  // namespace

Poly phi_geo(const Poly& p) {
  if (!p.within({VarKind::Noise, VarKind::Quad}))
    throw std::domain_error("phi_geo: polynomial outside the Noise/Quad alphabet");
  Poly out;
  for (const auto& [beta, c] : p.terms()) {
    for (const auto& [v, e] : beta.exponents()) {
      MultiIndex rest = beta;
      rest.mul(v, -1);
      out += (c * e) * (Poly::monomial(rest) * phi_geo_generator(v));
    }
  }
  return out;
}

Poly phi_geo_hat(const Poly& p) {
  return phi_geo(p) - bracket(p, Poly::variable(Variable::diff(0)));
}

bool ito_member(const MultiIndex& beta) {
  if (!beta.within({VarKind::Noise, VarKind::Quad}))
    throw std::domain_error("ito_member: multi-index outside the Noise/Quad alphabet");
  return beta.noise_count() % 2 == 0;
}

KernelReport assemble_kernel_matrix(int N) {
  KernelReport report;
  report.noises = N;
  report.columns = enumerate_reduced_level(N);

  std::vector<Poly> images;
  images.reserve(report.columns.size());
  std::set<MultiIndex> row_set;
  for (const MultiIndex& beta : report.columns) {
    images.push_back(phi_geo_hat(Poly::monomial(beta)));
    for (const auto& [mono, c] : images.back().terms()) row_set.insert(mono);
  }
  report.rows.assign(row_set.begin(), row_set.end());

  report.matrix = RationalMatrix(report.rows.size(), report.columns.size());
  for (std::size_t c = 0; c < report.columns.size(); ++c)
    for (const auto& [mono, coeff] : images[c].terms()) {
      const auto it = std::lower_bound(report.rows.begin(), report.rows.end(), mono);
      report.matrix.at(static_cast<std::size_t>(it - report.rows.begin()), c) = coeff;
    }

  for (const std::vector<Rational>& v : nullspace_basis(report.matrix)) {
    Poly vec;
    Rational leading = 0;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (leading == 0 && v[c] != 0) leading = v[c];
    }
    for (std::size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0) vec += Poly::monomial(report.columns[c], v[c] / leading);
    report.kernel_basis.push_back(std::move(vec));
  }
  report.dimension = static_cast<int>(report.kernel_basis.size());
  return report;
}

LinearEquation example_system_row(int k, const MultiIndex& eta, int N) {
  if (k < 0) throw std::invalid_argument("example_system_row: negative derivative index");
  if (!eta.within({VarKind::Noise, VarKind::Quad}))
    throw std::domain_error("example_system_row: remainder outside the Noise/Quad alphabet");

  LinearEquation equation;
  if (eta.noise_count() != N) return equation;

  // Complete the remainder with Q<k> factors until the test monomial
  // H<k+2> * eta is populated.
  const long long deficit = eta.fertility() - (k + 2);
  if (deficit < 0 || deficit % (k + 1) != 0) return equation;
  MultiIndex full = eta;
  full.mul(Variable::quad(k), static_cast<int>(deficit / (k + 1)));

  const auto add = [&](const MultiIndex& beta, const Rational& coefficient) {
    if (coefficient == 0) return;
    equation[beta] += coefficient;
    if (equation[beta] == 0) equation.erase(beta);
  };

  // Quad factor of the same index: -2 per copy.
  {
    MultiIndex beta = full;
    beta.mul(Variable::quad(k));
    add(beta, make_rational(-2) * beta.exponent(Variable::quad(k)));
  }
  // Quad factor of index k+m replacing a Q<m-1> of the remainder.
  for (const auto& [v, e] : full.exponents()) {
    if (v.kind != VarKind::Quad) continue;
    const int m = v.a + 1;
    MultiIndex beta = full;
    beta.mul(v, -1).mul(Variable::quad(k + m));
    const Rational coeff = make_rational(-1) * Rational(binomial(k + m + 1, k + 2)) *
                           beta.exponent(Variable::quad(k + m));
    add(beta, coeff);
  }
  // Noise factor of index k+1 replacing an N0.
  if (full.exponent(Variable::noise(0)) > 0) {
    MultiIndex beta = full;
    beta.mul(Variable::noise(0), -1).mul(Variable::noise(k + 1));
    add(beta, make_rational(beta.exponent(Variable::noise(k + 1))));
  }
  // Noise factor of index k+m replacing an N<m-1>, m >= 2; coefficient
  // (k+m)! (k-m+3) / ((m-1)! (k+2)!).
  for (const auto& [v, e] : full.exponents()) {
    if (v.kind != VarKind::Noise || v.a < 1) continue;
    const int m = v.a + 1;
    MultiIndex beta = full;
    beta.mul(v, -1).mul(Variable::noise(k + m));
    Rational coeff = Rational(factorial(k + m) * (k - m + 3)) /
                     Rational(factorial(m - 1) * factorial(k + 2));
    coeff *= beta.exponent(Variable::noise(k + m));
    add(beta, coeff);
  }
  return equation;
}

GeoBasis geo_basis_xi(const GradingContext& ctx, bool even_only) {
  GeoBasis out;
  const int top = n_xi(ctx);
  for (int level = 2; level <= top; ++level) {
    if (even_only && level % 2 != 0) continue;
    const std::vector<MultiIndex> coords = enumerate_reduced_level(level);
    const auto coordinate = [&](const Poly& p, std::size_t i) { return p.coefficient(coords[i]); };

    std::vector<Poly> picked;
    for (const NablaExpression& expr : generate_nabla_set(level)) {
      // Keep the expression when it enlarges the span.
      RationalMatrix m(picked.size() + 1, coords.size());
      for (std::size_t r = 0; r < picked.size(); ++r)
        for (std::size_t c = 0; c < coords.size(); ++c) m.at(r, c) = coordinate(picked[r], c);
      for (std::size_t c = 0; c < coords.size(); ++c)
        m.at(picked.size(), c) = coordinate(expr.value, c);
      if (rank(m) == picked.size() + 1) {
        if (!phi_geo_hat(expr.value).is_zero())
          throw std::logic_error("geo_basis_xi: iterated derivative escapes the kernel");
        picked.push_back(expr.value);
      }
    }
    if (static_cast<long>(picked.size()) != novikov_dimension(level))
      throw std::logic_error("geo_basis_xi: level rank differs from the pure-noise count");
    out.dimension += static_cast<int>(picked.size());
    for (Poly& p : picked) out.basis.push_back(std::move(p));
  }
  return out;
}

std::vector<CountertermRow> counterterm_report(const GradingContext& ctx, bool gaussian) {
  std::vector<CountertermRow> rows;
  std::map<int, KernelReport> kernels;
  for (const MultiIndex& beta : enumerate_reduced(ctx, gaussian)) {
    CountertermRow row;
    row.beta = beta;
    row.homogeneity = beta.homogeneity(ctx);
    row.noises = beta.noise_count();
    row.fertility = beta.fertility();
    row.sigma = beta.symmetry_factor();
    row.upsilon = upsilon_render(beta);
    row.ito = ito_member(beta);
    auto [it, inserted] = kernels.try_emplace(row.noises, KernelReport{});
    if (inserted) it->second = assemble_kernel_matrix(row.noises);
    row.geometric = false;
    for (const Poly& v : it->second.kernel_basis)
      row.geometric = row.geometric || v.coefficient(beta) != 0;
    row.constant_label = "C[" + beta.str() + "]";
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace midx
