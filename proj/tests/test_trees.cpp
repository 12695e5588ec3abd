#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "midx/enumerate.hpp"
#include "midx/tree.hpp"

using namespace midx;

namespace {

using Label = DecoratedTree::Label;

MultiIndex mi(const std::string& text) { return parse_multi_index(text); }

const DecoratedTree leaf;

DecoratedTree noise(std::vector<DecoratedTree> children) {
  std::vector<DecoratedTree::Edge> edges;
  for (DecoratedTree& c : children) edges.emplace_back(EdgeKind::I, std::move(c));
  return DecoratedTree(Label::Noise, std::move(edges));
}

DecoratedTree quad(DecoratedTree a, DecoratedTree b, std::vector<DecoratedTree> rest = {}) {
  std::vector<DecoratedTree::Edge> edges = {{EdgeKind::I1, std::move(a)},
                                            {EdgeKind::I1, std::move(b)}};
  for (DecoratedTree& c : rest) edges.emplace_back(EdgeKind::I, std::move(c));
  return DecoratedTree(Label::Abstract, std::move(edges));
}

// Linear-combination helpers for the pre-Lie check.
TreeCombo combo_graft(const TreeCombo& a, const DecoratedTree& c) {
  TreeCombo out;
  for (const auto& [tree, mult] : a)
    for (const auto& [grafted, m] : graft(tree, c)) out[grafted] += mult * m;
  return out;
}

TreeCombo combo_sub(TreeCombo a, const TreeCombo& b) {
  for (const auto& [tree, mult] : b) {
    a[tree] -= mult;
    if (a[tree] == 0) a.erase(tree);
  }
  return a;
}

// Every all-noise tree with the given node count, harvested from the
// pure-noise fibers.
std::vector<DecoratedTree> all_noise_trees(int nodes) {
  if (nodes == 1) return {leaf};
  std::vector<DecoratedTree> out;
  for (const MultiIndex& beta : enumerate_pure_noise(nodes))
    for (const DecoratedTree& t : fiber(beta)) out.push_back(t);
  return out;
}

// Alternate evaluation splitting off the last branch instead of the first;
// used to confirm that the recursion is order independent.
Poly tilde_psi_last(const DecoratedTree& tau) {
  if (tau.children().empty()) return Poly::variable(Variable::noise(0));
  const std::size_t n = tau.children().size();
  const DecoratedTree last = tau.children().back().second;
  std::vector<DecoratedTree::Edge> others(tau.children().begin(), tau.children().end() - 1);
  Poly result = nabla(tilde_psi_last(last), tilde_psi_last(DecoratedTree(Label::Noise, others)));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (const auto& [grafted, mult] : graft(last, others[i].second)) {
      auto replaced = others;
      replaced[i].second = grafted;
      result -= make_rational(mult) * tilde_psi_last(DecoratedTree(Label::Noise, replaced));
    }
  }
  return result;
}

}  // namespace

TEST_CASE("canonical form is order independent and idempotent") {
  const DecoratedTree chain2 = noise({leaf});
  const DecoratedTree a(Label::Noise, {{EdgeKind::I, chain2}, {EdgeKind::I, leaf}});
  const DecoratedTree b(Label::Noise, {{EdgeKind::I, leaf}, {EdgeKind::I, chain2}});
  CHECK(a == b);
  CHECK_FALSE(a < b);
  CHECK_FALSE(b < a);

  const DecoratedTree rebuilt(a.label(), a.children());
  CHECK(rebuilt == a);

  CHECK(leaf.str() == "Xi");
  CHECK(chain2.str() == "Xi(I:Xi)");
  CHECK(quad(leaf, leaf).str() == "Xi0(I1:Xi,I1:Xi)");
  CHECK(quad(leaf, leaf, {chain2}).str() == "Xi0(I1:Xi,I1:Xi,I:Xi(I:Xi))");
}

TEST_CASE("grafting") {
  const DecoratedTree chain2 = noise({leaf});

  const TreeCombo single = graft(leaf, leaf);
  REQUIRE(single.size() == 1);
  CHECK(single.at(chain2) == 1);

  // Two attachment points, two distinct shapes.
  const TreeCombo chains = graft(chain2, chain2);
  REQUIRE(chains.size() == 2);
  CHECK(chains.at(noise({leaf, chain2})) == 1);
  CHECK(chains.at(noise({noise({chain2})})) == 1);

  // Isomorphic attachments merge: the cherry's two leaves coincide.
  const DecoratedTree cherry = noise({leaf, leaf});
  const TreeCombo onto_cherry = graft(leaf, cherry);
  REQUIRE(onto_cherry.size() == 2);
  CHECK(onto_cherry.at(noise({leaf, leaf, leaf})) == 1);
  CHECK(onto_cherry.at(noise({leaf, chain2})) == 2);

  // Total multiplicity equals the number of attachment points.
  for (const DecoratedTree& sigma : {leaf, chain2, cherry}) {
    for (const DecoratedTree& tau : {chain2, cherry, noise({chain2})}) {
      long total = 0;
      for (const auto& [tree, mult] : graft(sigma, tau)) {
        total += mult;
        CHECK(tree.node_count() == sigma.node_count() + tau.node_count());
      }
      CHECK(total == tau.node_count());
    }
  }
}

TEST_CASE("grafting is pre-Lie") {
  // a -> (b -> c) minus (a -> b) -> c is symmetric in a and b.
  std::vector<DecoratedTree> pool = all_noise_trees(1);
  for (const DecoratedTree& t : all_noise_trees(2)) pool.push_back(t);
  for (const DecoratedTree& t : all_noise_trees(3)) pool.push_back(t);
  for (const DecoratedTree& a : pool) {
    for (const DecoratedTree& b : pool) {
      for (const DecoratedTree& c : pool) {
        const TreeCombo left = combo_sub(graft(a, graft(b, c)), combo_graft(graft(a, b), c));
        const TreeCombo right = combo_sub(graft(b, graft(a, c)), combo_graft(graft(b, a), c));
        CHECK(left == right);
      }
    }
  }
}

TEST_CASE("projection onto multi-indices") {
  CHECK(psi_map(leaf) == mi("N0"));
  CHECK(psi_map(noise({leaf, leaf})) == mi("N0^2*N2"));

  const DecoratedTree cherry_q = quad(leaf, leaf);
  const DecoratedTree balanced = quad(cherry_q, cherry_q);
  const DecoratedTree comb = quad(leaf, quad(leaf, cherry_q));
  CHECK(psi_map(balanced) == mi("N0^4*Q0^3"));
  CHECK(psi_map(comb) == mi("N0^4*Q0^3"));

  CHECK_THROWS_AS(psi_map(DecoratedTree(Label::Abstract, {{EdgeKind::I1, leaf}})),
                  std::domain_error);
  CHECK_THROWS_AS(psi_map(DecoratedTree(Label::Noise, {{EdgeKind::I1, leaf}})),
                  std::domain_error);
}

TEST_CASE("fibers") {
  CHECK(fiber(mi("N0*N1")).size() == 1);
  CHECK(fiber(mi("N0^4*Q0^3")).size() == 2);
  CHECK(fiber(mi("N0^2*N1^2*Q0")).size() == 4);

  const auto pair = fiber(mi("N0^4*Q0^3"));
  const DecoratedTree cherry_q = quad(leaf, leaf);
  CHECK(std::count(pair.begin(), pair.end(), quad(cherry_q, cherry_q)) == 1);
  CHECK(std::count(pair.begin(), pair.end(), quad(leaf, quad(leaf, cherry_q))) == 1);

  // Node and edge counts are forced by the multi-index.
  for (int n = 2; n <= 5; ++n) {
    for (const MultiIndex& beta : enumerate_reduced_level(n)) {
      const auto trees = fiber(beta);
      CHECK_FALSE(trees.empty());
      int slots = 0;
      for (const auto& [v, e] : beta.exponents()) slots += v.length() * e;
      for (const DecoratedTree& t : trees) {
        CHECK(t.node_count() == beta.degree());
        CHECK(slots == t.node_count() - 1);
        CHECK(psi_map(t) == beta);
      }
    }
  }

  CHECK_THROWS_AS(fiber(mi("N1*X0,1")), std::domain_error);
  CHECK_THROWS_AS(fiber(mi("N0^4*Q0^3"), 3), std::invalid_argument);
}

TEST_CASE("pre-Lie evaluation of all-noise trees") {
  CHECK(tilde_psi(leaf) == Poly::variable(Variable::noise(0)));

  const Poly n0 = Poly::variable(Variable::noise(0));
  CHECK(tilde_psi(noise({leaf})) == nabla(n0, n0));

  CHECK_THROWS_AS(tilde_psi(quad(leaf, leaf)), std::domain_error);

  // The branch chosen to drive the recursion does not matter.
  for (int nodes = 1; nodes <= 5; ++nodes) {
    for (const DecoratedTree& t : all_noise_trees(nodes)) {
      CHECK(tilde_psi(t) == tilde_psi_last(t));
      // After projection the evaluation reproduces the multi-index.
      CHECK(projection_pi(tilde_psi(t)) == Poly::monomial(psi_map(t)));
    }
  }

  // Evaluation intertwines grafting with the covariant derivative.
  const std::vector<DecoratedTree> small = all_noise_trees(2);
  for (const DecoratedTree& sigma : small) {
    for (const DecoratedTree& tau : all_noise_trees(3)) {
      Poly lhs;
      for (const auto& [tree, mult] : graft(sigma, tau))
        lhs += make_rational(mult) * tilde_psi(tree);
      CHECK(lhs == nabla(tilde_psi(sigma), tilde_psi(tau)));
    }
  }
}

TEST_CASE("section of the projection") {
  const Poly n0 = Poly::variable(Variable::noise(0));
  CHECK(lambda_map(mi("N0*N1")) == nabla(n0, n0));

  for (int n = 2; n <= 5; ++n) {
    for (const MultiIndex& beta : enumerate_pure_noise(n)) {
      CHECK(projection_pi(lambda_map(beta)) == Poly::monomial(beta));
    }
  }

  CHECK_THROWS_AS(lambda_map(mi("N0^2*Q0")), std::domain_error);
  CHECK_THROWS_AS(lambda_map(mi("N0^2")), std::domain_error);
}
