#include "midx/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "midx/geometry.hpp"
#include "midx/tree.hpp"
#include "midx/upsilon.hpp"

namespace midx::selfcheck {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::set<MultiIndex> parse_set(const std::vector<std::string>& texts) {
  std::set<MultiIndex> out;
  for (const std::string& t : texts) out.insert(parse_multi_index(t));
  return out;
}

std::string join(const std::set<MultiIndex>& set) {
  std::string out;
  for (const MultiIndex& beta : set) out += (out.empty() ? "" : ", ") + beta.str();
  return out.empty() ? "(none)" : out;
}

// The negative set at delta = 1 in the limit convention, grouped by
// homogeneity.
const std::map<std::string, std::vector<std::string>> kTable1 = {
    {"-3/2", {"N0"}},
    {"-1", {"N0*N1", "N0^2*Q0"}},
    {"-1/2", {"N0^2*N2", "N0*N1^2", "L0*N0", "N1*X0,1", "N0^2*N1*Q0", "N0^3*Q0^2", "N0^3*Q1"}},
    {"0",
     {"N0*N1^3", "N0^2*N1*N2", "N0^3*N3", "N0^2*N1^2*Q0", "N0^3*N2*Q0", "N0^3*N1*Q1",
      "N0^3*N1*Q0^2", "N0^4*Q2", "N0^4*Q0*Q1", "N0^4*Q0^3", "L0*N0*N1", "L0*N0^2*Q0", "L1*N0^2",
      "N0*N2*X0,1", "N1^2*X0,1", "N0^2*Q1*X0,1", "N0*N1*Q0*X0,1"}},
};

// The reduced negative set at delta = 1, with the tree-fiber size of each
// element.
const std::vector<std::pair<std::string, int>> kTable2Fibers = {
    {"N0*N1", 1},        {"N0^2*Q0", 1},       {"N0^2*N2", 1},      {"N0*N1^2", 1},
    {"N0^2*N1*Q0", 2},   {"N0^3*Q0^2", 1},     {"N0^3*Q1", 1},      {"N0*N1^3", 1},
    {"N0^2*N1*N2", 2},   {"N0^3*N3", 1},       {"N0^2*N1^2*Q0", 4}, {"N0^3*N2*Q0", 2},
    {"N0^3*N1*Q1", 3},   {"N0^3*N1*Q0^2", 4},  {"N0^4*Q2", 1},      {"N0^4*Q0*Q1", 3},
    {"N0^4*Q0^3", 2},
};

struct Example2Case {
  int k;
  const char* eta;
  const char* row;  // the populated test monomial
  std::vector<std::pair<const char*, long>> equation;
};

// The seven level-four conditions, keyed by derivative index and
// remainder, together with the test monomial each one pairs against.
const std::vector<Example2Case> kExample2 = {
    {2, "N0^4", "H4*N0^4", {{"N0^4*Q2", -2}, {"N0^3*N3", 1}}},
    {1, "N0^4*Q0", "H3*N0^4*Q0", {{"N0^4*Q0*Q1", -2}, {"N0^4*Q2", -1}, {"N0^3*N2*Q0", 1}}},
    {1, "N0^3*N1", "H3*N0^3*N1", {{"N0^3*N1*Q1", -2}, {"N0^3*N3", 2}, {"N0^2*N1*N2", 1}}},
    {0, "N0^4", "H2*N0^4*Q0^2", {{"N0^4*Q0^3", -6}, {"N0^4*Q0*Q1", -1}, {"N0^3*N1*Q0^2", 1}}},
    {0, "N0^2*N1^2", "H2*N0^2*N1^2", {{"N0^2*N1^2*Q0", -2}, {"N0*N1^3", 3}, {"N0^2*N1*N2", 1}}},
    {0, "N0^3*N1", "H2*N0^3*N1*Q0",
     {{"N0^3*N1*Q0^2", -4}, {"N0^3*N1*Q1", -1}, {"N0^2*N1^2*Q0", 2}, {"N0^3*N2*Q0", 1}}},
    {0, "N0^4*Q1", "H2*N0^4*Q1", {{"N0^4*Q0*Q1", -2}, {"N0^4*Q2", -3}, {"N0^3*N1*Q1", 1}}},
};

LinearEquation normalize(const LinearEquation& eq) {
  Rational leading = 0;
  for (const auto& [beta, c] : eq) {
    if (c != 0) {
      leading = c;
      break;
    }
  }
  LinearEquation out;
  if (leading == 0) return out;
  for (const auto& [beta, c] : eq) out.emplace(beta, c / leading);
  return out;
}

std::size_t poly_rank(const std::vector<Poly>& vectors, const std::vector<MultiIndex>& coords) {
  RationalMatrix m(vectors.size(), coords.size());
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (std::size_t c = 0; c < coords.size(); ++c) m.at(r, c) = vectors[r].coefficient(coords[c]);
  return rank(m);
}

struct Runner {
  int max_noises;
  Fault fault;
  std::vector<CheckResult> results;

  void record(const std::string& name, bool passed, const std::string& detail) {
    results.push_back({name, passed, detail});
  }

  void check_table1() {
    const auto start = Clock::now();
    const GradingContext ctx(fault == Fault::Grading ? make_rational(9, 10) : make_rational(1),
                             true);
    const auto negatives = enumerate_negative(ctx);
    std::map<std::string, std::set<MultiIndex>> classes;
    for (const MultiIndex& beta : negatives)
      classes[to_string(beta.homogeneity(ctx))].insert(beta);

    std::ostringstream detail;
    bool ok = negatives.size() == 27;
    if (!ok) detail << "expected 27 elements, got " << negatives.size() << "; ";
    for (const auto& [hom, expected] : kTable1) {
      const auto it = classes.find(hom);
      const std::set<MultiIndex> actual = it == classes.end() ? std::set<MultiIndex>{} : it->second;
      if (actual != parse_set(expected)) {
        ok = false;
        detail << "class " << hom << " mismatch: " << join(actual) << "; ";
      }
    }
    if (classes.size() != kTable1.size()) {
      ok = false;
      detail << classes.size() << " homogeneity classes; ";
    }
    const double elapsed = ms_since(start);
    if (elapsed > 1000.0) {
      ok = false;
      detail << "exceeded the 1 s budget; ";
    }
    std::ostringstream summary;
    summary << "27 negatives at delta=1 in classes 1/2/7/17 ("
            << static_cast<long>(elapsed) << " ms)";
    record("table1", ok, ok ? summary.str() : detail.str());
  }

  void check_table2() {
    const GradingContext ctx(1, true);
    const auto reduced = enumerate_reduced(ctx, false);
    const auto even = enumerate_reduced(ctx, true);

    std::set<MultiIndex> expected;
    for (const auto& [text, fibers] : kTable2Fibers) expected.insert(parse_multi_index(text));
    std::map<std::string, int> class_sizes;
    for (const MultiIndex& beta : reduced) ++class_sizes[to_string(beta.homogeneity(ctx))];

    bool ok = std::set<MultiIndex>(reduced.begin(), reduced.end()) == expected;
    ok = ok && class_sizes == std::map<std::string, int>{{"-1", 2}, {"-1/2", 5}, {"0", 10}};
    ok = ok && even.size() == 12;
    for (const MultiIndex& beta : even) ok = ok && beta.noise_count() % 2 == 0;
    record("table2", ok,
           ok ? "17 reduced elements in classes 2/5/10, even filter keeps 12"
              : "reduced set mismatch: " +
                    std::to_string(reduced.size()) + " elements, even " + std::to_string(even.size()));
  }

  void check_fibers() {
    bool ok = true;
    std::ostringstream detail;
    for (const auto& [text, expected] : kTable2Fibers) {
      const auto trees = fiber(parse_multi_index(text));
      if (static_cast<int>(trees.size()) != expected) {
        ok = false;
        detail << text << ": " << trees.size() << " trees, expected " << expected << "; ";
      }
    }
    // The two classical representations of the four-noise cubic monomial.
    const DecoratedTree leaf;
    using L = DecoratedTree::Label;
    const DecoratedTree cherry(L::Abstract, {{EdgeKind::I1, leaf}, {EdgeKind::I1, leaf}});
    const DecoratedTree balanced(L::Abstract, {{EdgeKind::I1, cherry}, {EdgeKind::I1, cherry}});
    const DecoratedTree comb(
        L::Abstract, {{EdgeKind::I1, leaf},
                      {EdgeKind::I1, DecoratedTree(L::Abstract,
                                                   {{EdgeKind::I1, leaf}, {EdgeKind::I1, cherry}})}});
    const MultiIndex target = parse_multi_index("N0^4*Q0^3");
    if (psi_map(balanced) != target || psi_map(comb) != target) {
      ok = false;
      detail << "display trees do not project onto N0^4*Q0^3; ";
    }
    const auto trees = fiber(target);
    if (trees != std::vector<DecoratedTree>{std::min(balanced, comb), std::max(balanced, comb)}) {
      ok = false;
      detail << "fiber of N0^4*Q0^3 is not the display pair; ";
    }
    record("fibers", ok, ok ? "all 17 fiber sizes match, display pair recovered" : detail.str());
  }

  void check_geo_dimensions() {
    const auto start = Clock::now();
    static const int expected[] = {1, 2, 3, 5, 7};
    bool ok = true;
    std::ostringstream detail;
    const int top = std::min(6, max_noises);
    for (int n = 2; n <= top; ++n) {
      const KernelReport report = assemble_kernel_matrix(n);
      if (report.dimension != expected[n - 2]) {
        ok = false;
        detail << "N=" << n << ": dimension " << report.dimension << ", expected "
               << expected[n - 2] << "; ";
      }
      for (const Poly& v : report.kernel_basis)
        if (!phi_geo_hat(v).is_zero()) {
          ok = false;
          detail << "N=" << n << ": basis vector escapes the kernel; ";
        }
    }
    const double elapsed = ms_since(start);
    if (elapsed > 30000.0) {
      ok = false;
      detail << "exceeded the 30 s budget; ";
    }
    std::ostringstream summary;
    summary << "kernel dimensions 1,2,3,5,7 up to N=" << top << " ("
            << static_cast<long>(elapsed) << " ms)";
    record("geo-dimensions", ok, ok ? summary.str() : detail.str());
  }

  void check_novikov() {
    bool ok = true;
    std::ostringstream detail;
    for (int n = 2; n <= 12; ++n) {
      const long lhs = novikov_dimension(n);
      const long rhs = partition_count(n - 1);
      if (lhs != rhs) {
        ok = false;
        detail << "N=" << n << ": " << lhs << " vs p(" << n - 1 << ") = " << rhs << "; ";
      }
    }
    record("novikov-partitions", ok,
           ok ? "pure-noise counts equal partition numbers for N=2..12" : detail.str());
  }

  void check_example1() {
    const Poly n0 = Poly::variable(Variable::noise(0));
    const Poly deep = nabla(n0, nabla(n0, nabla(n0, n0)));
    const Poly right = nabla(nabla(nabla(n0, n0), n0), n0);
    const Poly mixed = nabla(n0, nabla(nabla(n0, n0), n0));

    const auto expect = [](const std::vector<std::pair<const char*, long>>& terms) {
      Poly out;
      for (const auto& [text, c] : terms) out += Poly::monomial(parse_multi_index(text), c);
      return out;
    };
    bool ok = projection_pi(deep) ==
              expect({{"N0^3*N3", 1}, {"N0^2*N1*N2", 4}, {"N0*N1^3", 1}});
    ok = ok && projection_pi(right) == expect({{"N0*N1^3", 1}});
    ok = ok && projection_pi(mixed) == expect({{"N0^2*N1*N2", 2}, {"N0*N1^3", 1}});
    ok = ok && poly_rank({projection_pi(deep), projection_pi(mixed), projection_pi(right)},
                         enumerate_pure_noise(4)) == 3;
    record("example1", ok,
           ok ? "three projected iterates match and span a rank-3 triangular family"
              : "projected iterate mismatch");
  }

  void check_relations() {
    const Poly n0 = Poly::variable(Variable::noise(0));
    const Poly a = nabla(n0, n0);
    const bool first = nabla(a, a) == nabla(nabla(n0, a), n0);
    const bool second = make_rational(2) * nabla(nabla(n0, a), n0) - nabla(n0, nabla(a, n0)) ==
                        nabla(nabla(a, n0), n0);

    const auto set4 = generate_nabla_set(4);
    std::vector<Poly> values;
    for (const auto& e : set4) values.push_back(e.value);
    const bool span = set4.size() == 5 && poly_rank(values, enumerate_reduced_level(4)) == 3;
    record("nabla-relations", first && second && span,
           first && second && span
               ? "both rewriting identities hold; the five level-4 iterates span rank 3"
               : "identity or span failure");
  }

  void check_example2() {
    bool ok = true;
    std::ostringstream detail;
    const KernelReport report = assemble_kernel_matrix(4);
    for (const Example2Case& c : kExample2) {
      LinearEquation expected;
      for (const auto& [text, coeff] : c.equation)
        expected.emplace(parse_multi_index(text), make_rational(coeff));
      const LinearEquation actual = example_system_row(c.k, parse_multi_index(c.eta), 4);
      if (actual != expected) {
        ok = false;
        detail << "k=" << c.k << " eta=" << c.eta << ": wrong closed-form equation; ";
        continue;
      }
      const MultiIndex row = parse_multi_index(c.row);
      const auto it = std::lower_bound(report.rows.begin(), report.rows.end(), row);
      if (it == report.rows.end() || !(*it == row)) {
        ok = false;
        detail << "row " << c.row << " missing from the assembled matrix; ";
        continue;
      }
      LinearEquation assembled;
      const std::size_t r = static_cast<std::size_t>(it - report.rows.begin());
      for (std::size_t col = 0; col < report.columns.size(); ++col)
        if (report.matrix.at(r, col) != 0) assembled.emplace(report.columns[col], report.matrix.at(r, col));
      if (normalize(assembled) != normalize(actual)) {
        ok = false;
        detail << "row " << c.row << " differs from the assembled matrix; ";
      }
    }
    record("example2", ok,
           ok ? "all seven closed-form conditions match the assembled rows up to scale"
              : detail.str());
  }

  void check_closure() {
    bool ok = true;
    std::ostringstream detail;
    std::map<int, KernelReport> kernels;
    const int top = std::min(6, max_noises);
    for (int n = 2; n <= top; ++n) kernels[n] = assemble_kernel_matrix(n);
    for (int n1 = 2; n1 <= top; ++n1) {
      for (int n2 = n1; n1 + n2 <= 6 && n2 <= top; ++n2) {
        for (const Poly& v1 : kernels[n1].kernel_basis) {
          for (const Poly& v2 : kernels[n2].kernel_basis) {
            if (!phi_geo_hat(nabla(v1, v2)).is_zero() || !phi_geo_hat(nabla(v2, v1)).is_zero()) {
              ok = false;
              detail << "covariant derivative escapes the kernel at (" << n1 << "," << n2 << "); ";
            }
          }
        }
      }
    }
    record("nabla-closure", ok,
           ok ? "kernel closed under the covariant derivative for total noise <= 6" : detail.str());
  }

  void check_section() {
    bool ok = true;
    std::ostringstream detail;
    const int top = std::min(5, max_noises);
    for (int n = 2; n <= top; ++n) {
      for (const MultiIndex& beta : enumerate_pure_noise(n)) {
        const Poly lifted = lambda_map(beta);
        if (projection_pi(lifted) != Poly::monomial(beta)) {
          ok = false;
          detail << "projection of the section misses " << beta.str() << "; ";
        }
        if (!phi_geo_hat(lifted).is_zero()) {
          ok = false;
          detail << "section of " << beta.str() << " escapes the kernel; ";
        }
      }
    }
    record("section", ok,
           ok ? "fiber-averaged section splits the projection and lands in the kernel (N <= 5)"
              : detail.str());
  }

  void check_injectivity() {
    bool ok = true;
    std::size_t total = 0;
    std::set<std::vector<long>> vectors;
    const int top = std::min(5, max_noises);
    for (int n = 2; n <= top; ++n) {
      for (const MultiIndex& beta : enumerate_extended_level(n)) {
        vectors.insert(upsilon_exponent_vector(beta));
        ++total;
      }
    }
    ok = vectors.size() == total;
    record("upsilon-injectivity", ok,
           ok ? "exponent vectors pairwise distinct over " + std::to_string(total) +
                    " extended monomials"
              : "exponent vector collision");
  }

  void check_ito() {
    bool ok = true;
    const int top = std::min(6, max_noises);
    for (int n = 2; n <= top; ++n) {
      for (const MultiIndex& beta : enumerate_reduced_level(n)) {
        const bool even = beta.noise_count() % 2 == 0;
        ok = ok && ito_member(beta) == even;
        // Sign of the rendering under t -> -t is the noise-exponent parity.
        long noise_exponents = 0;
        const auto vec = upsilon_exponent_vector(beta);
        for (std::size_t i = 2; i < vec.size(); i += 3) noise_exponents += vec[i];
        ok = ok && (noise_exponents % 2 == 0) == even;
      }
    }
    record("ito", ok,
           ok ? "membership equals even noise count and matches the sign-flip parity (N <= " +
                    std::to_string(top) + ")"
              : "parity mismatch");
  }

  void check_delta_sweep() {
    bool ok = true;
    std::ostringstream detail;
    if (n_xi(GradingContext(1, true)) != 4) {
      ok = false;
      detail << "n_xi(1) != 4; ";
    }
    if (n_xi(GradingContext(make_rational(1, 2), true)) != 8) {
      ok = false;
      detail << "n_xi(1/2) != 8; ";
    }
    const std::vector<std::pair<Rational, bool>> sweeps = {
        {make_rational(1), true},        {make_rational(3, 4), true}, {make_rational(3, 4), false},
        {make_rational(1, 2), true},     {make_rational(1, 2), false},
    };
    for (const auto& [delta, limit] : sweeps) {
      const GradingContext ctx(delta, limit);
      const auto fast = enumerate_negative(ctx);
      const auto slow = brute_force_negative(ctx);
      if (fast != slow) {
        ok = false;
        detail << "enumeration disagrees with the brute force at delta=" << to_string(delta)
               << (limit ? " (limit); " : " (strict); ");
      }
    }
    record("delta-sweep", ok,
           ok ? "n_xi values and brute-force agreement at delta = 1, 3/4, 1/2" : detail.str());
  }
};

}  // namespace

std::vector<CheckResult> run_all(int max_noises, Fault fault) {
  Runner runner{std::max(2, max_noises), fault, {}};
  runner.check_table1();
  runner.check_table2();
  runner.check_fibers();
  runner.check_geo_dimensions();
  runner.check_novikov();
  runner.check_example1();
  runner.check_relations();
  runner.check_example2();
  runner.check_closure();
  runner.check_section();
  runner.check_injectivity();
  runner.check_ito();
  runner.check_delta_sweep();
  return runner.results;
}

long partition_count(int n) {
  if (n < 0) return 0;
  // p(n, k): partitions of n into parts of size at most k.
  std::vector<std::vector<long>> table(n + 1, std::vector<long>(n + 1, 0));
  for (int k = 0; k <= n; ++k) table[0][k] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= n; ++k)
      table[m][k] = table[m][k - 1] + (m >= k ? table[m - k][k] : 0);
  return n == 0 ? 1 : table[n][n];
}

std::vector<MultiIndex> brute_force_negative(const GradingContext& ctx) {
  if (ctx.delta < make_rational(1, 3))
    throw std::invalid_argument("brute_force_negative: pool caps assume delta >= 1/3");

  struct Entry {
    Variable v;
    int cap;
    Rational hom;
    long long fert;
  };
  std::vector<Entry> pool;
  const Rational alpha = ctx.alpha_xi();
  const auto push = [&](const Variable& v, int cap) {
    Rational hom;
    switch (v.kind) {
      case VarKind::Noise: hom = alpha + make_rational(2 * v.a); break;
      case VarKind::Quad: hom = make_rational(2 * v.a + 2); break;
      case VarKind::Lin: hom = make_rational(2 * v.a + 1); break;
      case VarKind::Func: hom = make_rational(2 * v.a); break;
      case VarKind::Diff: hom = 0; break;
      case VarKind::Poly: hom = make_rational(2 * v.a + v.b - 2); break;
    }
    const long long fert = v.kind == VarKind::Poly ? 1 : 1 - v.length();
    pool.push_back({v, cap, hom, fert});
  };
  for (int m = 0; m <= 12; ++m) push(Variable::noise(m), 12);
  for (int k = 0; k <= 11; ++k) push(Variable::quad(k), 12);
  for (int k = 0; k <= 6; ++k) push(Variable::lin(k), 3);
  for (int k = 0; k <= 3; ++k) push(Variable::func(k), 2);
  push(Variable::poly(0, 1), 3);
  push(Variable::poly(1, 0), 2);
  push(Variable::poly(0, 2), 2);
  push(Variable::poly(1, 1), 1);

  const std::size_t n = pool.size();
  std::vector<Rational> min_hom(n + 1, Rational(0));
  std::vector<long long> max_fert(n + 1, 0), min_fert(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    min_hom[i] = min_hom[i + 1] + (pool[i].hom < 0 ? Rational(pool[i].hom * pool[i].cap) : Rational(0));
    max_fert[i] = max_fert[i + 1] + (pool[i].fert > 0 ? pool[i].fert * pool[i].cap : 0);
    min_fert[i] = min_fert[i + 1] + (pool[i].fert < 0 ? pool[i].fert * pool[i].cap : 0);
  }
  const long noise_cap = floor_long(make_rational(4) / ctx.delta);

  std::vector<MultiIndex> out;
  std::vector<int> chosen(n, 0);
  const auto emit = [&](long long fert, const Rational& hom, int noise) {
    if (fert != 1 || noise < 1) return;
    if (!ctx.negative(hom, noise)) return;
    MultiIndex beta;
    int decorations = 0, slots = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (chosen[i] == 0) continue;
      beta.mul(pool[i].v, chosen[i]);
      if (pool[i].v.kind == VarKind::Poly) {
        if (pool[i].v.a + pool[i].v.b != 1) return;  // not attachable to one slot
        decorations += chosen[i];
      } else if (pool[i].v.a >= 1) {
        slots += chosen[i];
      }
    }
    if (decorations > slots) return;
    out.push_back(std::move(beta));
  };

  const auto dfs = [&](auto&& self, std::size_t i, long long fert, Rational hom, int noise) -> void {
    if (noise > noise_cap) return;
    if (fert + max_fert[i] < 1 || fert + min_fert[i] > 1) return;
    if (hom + min_hom[i] > 0) return;
    if (i == n) {
      emit(fert, hom, noise);
      return;
    }
    const Entry& e = pool[i];
    const int extra_noise = e.v.kind == VarKind::Noise ? 1 : 0;
    for (int count = 0; count <= e.cap; ++count) {
      chosen[i] = count;
      self(self, i + 1, fert + e.fert * count, hom + e.hom * count, noise + extra_noise * count);
    }
    chosen[i] = 0;
  };
  dfs(dfs, 0, 0, Rational(0), 0);

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace midx::selfcheck
