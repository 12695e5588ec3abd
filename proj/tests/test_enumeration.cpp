#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "midx/enumerate.hpp"
#include "midx/matrix.hpp"
#include "midx/selfcheck.hpp"

using namespace midx;

namespace {

MultiIndex mi(const std::string& text) { return parse_multi_index(text); }

std::set<MultiIndex> as_set(const std::vector<MultiIndex>& v) { return {v.begin(), v.end()}; }

std::set<MultiIndex> parse_all(const std::vector<std::string>& texts) {
  std::set<MultiIndex> out;
  for (const auto& t : texts) out.insert(mi(t));
  return out;
}

// Independent partition oracle: explicit generation, not a counting
// recurrence.
void partitions_into(int total, int max_part, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(total, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_into(total - part, part, current, out);
    current.pop_back();
  }
}

long generated_partition_count(int n) {
  if (n == 0) return 1;
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  partitions_into(n, n, current, out);
  return static_cast<long>(out.size());
}

}  // namespace

TEST_CASE("negative set at delta = 1") {
  const GradingContext ctx(1, true);
  const auto negatives = enumerate_negative(ctx);
  CHECK(negatives.size() == 27);

  std::map<Rational, std::vector<MultiIndex>> classes;
  for (const MultiIndex& beta : negatives) classes[beta.homogeneity(ctx)].push_back(beta);
  REQUIRE(classes.size() == 4);
  CHECK(classes[make_rational(-3, 2)].size() == 1);
  CHECK(classes[make_rational(-1)].size() == 2);
  CHECK(classes[make_rational(-1, 2)].size() == 7);
  CHECK(classes[make_rational(0)].size() == 17);

  CHECK(as_set(classes[make_rational(-1)]) == parse_all({"N0*N1", "N0^2*Q0"}));
  CHECK(as_set(classes[make_rational(-1, 2)]) ==
        parse_all({"N0^2*N2", "N0*N1^2", "N0*L0", "N1*X0,1", "N0^2*N1*Q0", "N0^3*Q0^2",
                   "N0^3*Q1"}));

  // Every element satisfies its defining predicate.
  for (const MultiIndex& beta : negatives) {
    CHECK(beta.populated());
    CHECK(beta.noise_count() > 0);
    CHECK(ctx.negative(beta.homogeneity(ctx), beta.noise_count()));
    CHECK(beta.count_kind(VarKind::Diff) == 0);
  }
}

TEST_CASE("reduced set at delta = 1") {
  const GradingContext ctx(1, true);
  const auto reduced = enumerate_reduced(ctx, false);
  CHECK(reduced.size() == 17);

  std::map<Rational, int> class_sizes;
  std::map<int, int> noise_sizes;
  for (const MultiIndex& beta : reduced) {
    ++class_sizes[beta.homogeneity(ctx)];
    ++noise_sizes[beta.noise_count()];
    CHECK(beta.within({VarKind::Noise, VarKind::Quad}));
    CHECK(beta.fertility() == 1);
    CHECK(beta.noise_count() >= 2);
  }
  CHECK(class_sizes == std::map<Rational, int>{{make_rational(-1), 2},
                                               {make_rational(-1, 2), 5},
                                               {make_rational(0), 10}});
  CHECK(noise_sizes == std::map<int, int>{{2, 2}, {3, 5}, {4, 10}});

  const auto even = enumerate_reduced(ctx, true);
  CHECK(even.size() == 12);

  // The reduced set is the Noise/Quad slice of the negative set.
  std::vector<MultiIndex> filtered;
  for (const MultiIndex& beta : enumerate_negative(ctx))
    if (beta.within({VarKind::Noise, VarKind::Quad}) && beta.noise_count() >= 2)
      filtered.push_back(beta);
  CHECK(filtered == reduced);
}

TEST_CASE("level sets") {
  CHECK(as_set(enumerate_reduced_level(2)) == parse_all({"N0*N1", "N0^2*Q0"}));
  CHECK(enumerate_reduced_level(3).size() == 5);
  CHECK(enumerate_reduced_level(4).size() == 10);
  CHECK_THROWS_AS(enumerate_reduced_level(1), std::invalid_argument);

  for (const MultiIndex& beta : enumerate_extended_level(3)) {
    CHECK(beta.fertility() == 1);
    CHECK(beta.noise_count() == 3);
    CHECK(beta.count_kind(VarKind::Diff) <= 1);
  }
  // The one-Diff slice strictly extends the plain level.
  CHECK(enumerate_extended_level(3).size() > enumerate_reduced_level(3).size());
}

TEST_CASE("pure-noise sets and the partition identity") {
  CHECK(enumerate_pure_noise(2) == std::vector<MultiIndex>{mi("N0*N1")});
  CHECK(as_set(enumerate_pure_noise(4)) ==
        parse_all({"N0*N1^3", "N0^3*N3", "N0^2*N1*N2"}));
  CHECK(enumerate_pure_noise(6).size() == 7);

  CHECK(novikov_dimension(2) == 1);
  CHECK(novikov_dimension(4) == 3);
  CHECK(novikov_dimension(5) == 5);
  for (int n = 2; n <= 12; ++n) CHECK(novikov_dimension(n) == generated_partition_count(n - 1));
  CHECK_THROWS_AS(enumerate_pure_noise(1), std::invalid_argument);
}

TEST_CASE("iterated covariant derivatives") {
  const auto two = generate_nabla_set(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].value ==
        Poly::monomial(mi("N0*N1")) + Poly::monomial(mi("N0^2*Q0"), make_rational(1, 2)));
  CHECK(two[0].label == "grad(N0,N0)");

  const auto four = generate_nabla_set(4);
  REQUIRE(four.size() == 5);
  std::set<std::string> labels;
  for (const auto& e : four) {
    labels.insert(e.label);
    for (const auto& [mono, c] : e.value.terms()) {
      CHECK(mono.fertility() == 1);
      CHECK(mono.noise_count() == 4);
      CHECK(mono.within({VarKind::Noise, VarKind::Quad}));
    }
  }
  CHECK(labels.size() == 5);

  // The first rewriting identity makes two bracketings collide by value.
  CHECK(four[2].value == four[3].value);
  // The second one ties the remaining ones together.
  CHECK(make_rational(2) * four[3].value - four[1].value == four[4].value);

  const auto coords = enumerate_reduced_level(4);
  RationalMatrix m(four.size(), coords.size());
  for (std::size_t r = 0; r < four.size(); ++r)
    for (std::size_t c = 0; c < coords.size(); ++c)
      m.at(r, c) = four[r].value.coefficient(coords[c]);
  CHECK(rank(m) == 3);

  CHECK_THROWS_AS(generate_nabla_set(1), std::invalid_argument);
}

TEST_CASE("largest reduced noise count") {
  CHECK(n_xi(GradingContext(1, true)) == 4);
  CHECK(n_xi(GradingContext(make_rational(1, 2), true)) == 8);
  CHECK(n_xi(GradingContext(make_rational(1, 2), false)) == 7);

  int even_max = 0;
  for (const MultiIndex& beta : enumerate_reduced(GradingContext(1, true), true))
    even_max = std::max(even_max, beta.noise_count());
  CHECK(even_max == 4);
}

TEST_CASE("enumeration is deterministic and canonically ordered") {
  const GradingContext ctx(make_rational(1, 2), true);
  const auto first = enumerate_negative(ctx);
  const auto second = enumerate_negative(ctx);
  CHECK(first == second);
  CHECK(std::is_sorted(first.begin(), first.end()));
}

TEST_CASE("brute-force oracle agreement at delta = 1/2") {
  const GradingContext ctx(make_rational(1, 2), true);
  CHECK(enumerate_negative(ctx) == selfcheck::brute_force_negative(ctx));
}

TEST_CASE("unbounded requests are rejected") {
  EnumerationRequest request{GradingContext(1, true), {VarKind::Noise, VarKind::Quad}, 2,
                             std::nullopt, false, false};
  CHECK_THROWS_AS(enumerate(request), std::invalid_argument);

  EnumerationRequest lin_level{GradingContext(1, true),
                               {VarKind::Noise, VarKind::Lin},
                               2,
                               4,
                               false,
                               false};
  CHECK_THROWS_AS(enumerate(lin_level), std::invalid_argument);
}
