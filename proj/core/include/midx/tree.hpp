#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "midx/multi_index.hpp"
#include "midx/poly.hpp"

namespace midx {

// Edge kinds of decorated trees. I1 edges mark the gradient slots of a
// quadratic node; I edges carry everything else. I1 sorts before I so the
// canonical serialization lists gradient children first.
enum class EdgeKind : std::uint8_t { I1, I };

// Canonical rooted tree with unordered children. Nodes are either noise
// nodes or abstract (nonlinearity) nodes; construction sorts children, so
// isomorphic trees compare equal structurally.
class DecoratedTree {
 public:
  enum class Label : std::uint8_t { Noise, Abstract };
  using Edge = std::pair<EdgeKind, DecoratedTree>;

  DecoratedTree() = default;  // a single noise leaf
  DecoratedTree(Label label, std::vector<Edge> children);

  static DecoratedTree leaf() { return DecoratedTree{}; }

  Label label() const { return label_; }
  const std::vector<Edge>& children() const { return children_; }
  int node_count() const;
  int child_count(EdgeKind kind) const;

  bool operator==(const DecoratedTree& other) const;
  bool operator<(const DecoratedTree& other) const;

  // Nested parenthesized form with children in canonical order, e.g.
  // "Xi0(I1:Xi,I1:Xi,I:Xi)"; a noise leaf is "Xi".
  std::string str() const;

 private:
  Label label_ = Label::Noise;
  std::vector<Edge> children_;
};

// Integer linear combination of canonical trees.
using TreeCombo = std::map<DecoratedTree, long>;

// Grafting product: attach sigma's root via a new I edge at every node of
// tau; isomorphic attachments merge with integer multiplicities.
TreeCombo graft(const DecoratedTree& sigma, const DecoratedTree& tau);
TreeCombo graft(const DecoratedTree& sigma, const TreeCombo& tau);

// The projection onto multi-indices: a noise node with m I-children maps
// to N<m>, an abstract node with two I1-children and k I-children to Q<k>,
// multiplicatively over subtrees. Throws std::domain_error unless the tree
// is saturated (abstract nodes carry exactly two I1-children, noise nodes
// none).
MultiIndex psi_map(const DecoratedTree& tau);

// All canonical saturated trees mapping to beta; beta must lie in the
// Noise/Quad alphabet. The node count is determined by beta, so max_nodes
// is only a safety bound.
std::vector<DecoratedTree> fiber(const MultiIndex& beta, int max_nodes = 64);

// Pre-Lie evaluation of an all-noise tree into the Noise/Quad algebra:
// the single node maps to N0 and grafting maps to the covariant
// derivative.
Poly tilde_psi(const DecoratedTree& tau);

// Section of the projection onto pure-noise multi-indices: the fiber
// average of tilde_psi. beta must be populated over Noise only.
Poly lambda_map(const MultiIndex& beta);

}  // namespace midx
