#include "midx/tree.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace midx {

DecoratedTree::DecoratedTree(Label label, std::vector<Edge> children)
    : label_(label), children_(std::move(children)) {
  std::sort(children_.begin(), children_.end(), [](const Edge& a, const Edge& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
}

int DecoratedTree::node_count() const {
  int total = 1;
  for (const Edge& e : children_) total += e.second.node_count();
  return total;
}

int DecoratedTree::child_count(EdgeKind kind) const {
  int total = 0;
  for (const Edge& e : children_)
    if (e.first == kind) ++total;
  return total;
}

bool DecoratedTree::operator==(const DecoratedTree& other) const {
  return label_ == other.label_ && children_ == other.children_;
}

bool DecoratedTree::operator<(const DecoratedTree& other) const {
  if (label_ != other.label_) return label_ < other.label_;
  return std::lexicographical_compare(
      children_.begin(), children_.end(), other.children_.begin(), other.children_.end(),
      [](const Edge& a, const Edge& b) {
        if (a.first != b.first) return a.first < b.first;
        if (a.second < b.second) return true;
        return false;
      });
}

std::string DecoratedTree::str() const {
  std::ostringstream out;
  out << (label_ == Label::Noise ? "Xi" : "Xi0");
  if (!children_.empty()) {
    out << "(";
    bool first = true;
    for (const Edge& e : children_) {
      if (!first) out << ",";
      first = false;
      out << (e.first == EdgeKind::I1 ? "I1" : "I") << ":" << e.second.str();
    }
    out << ")";
  }
  return out.str();
}

namespace {

std::vector<DecoratedTree> attach_everywhere(const DecoratedTree& sigma, const DecoratedTree& tau) {
  std::vector<DecoratedTree> out;
  {
    auto children = tau.children();
    children.emplace_back(EdgeKind::I, sigma);
    out.emplace_back(tau.label(), std::move(children));
  }
  for (std::size_t i = 0; i < tau.children().size(); ++i) {
    for (const DecoratedTree& grafted : attach_everywhere(sigma, tau.children()[i].second)) {
      auto children = tau.children();
      children[i].second = grafted;
      out.emplace_back(tau.label(), std::move(children));
    }
  }
  return out;
}

}  // namespace

TreeCombo graft(const DecoratedTree& sigma, const DecoratedTree& tau) {
  TreeCombo out;
  for (DecoratedTree& t : attach_everywhere(sigma, tau)) ++out[std::move(t)];
  return out;
}

TreeCombo graft(const DecoratedTree& sigma, const TreeCombo& tau) {
  TreeCombo out;
  for (const auto& [tree, mult] : tau) {
    for (const auto& [grafted, m] : graft(sigma, tree)) {
      out[grafted] += mult * m;
      if (out[grafted] == 0) out.erase(grafted);
    }
  }
  return out;
}

MultiIndex psi_map(const DecoratedTree& tau) {
  const int i1 = tau.child_count(EdgeKind::I1);
  const int i = tau.child_count(EdgeKind::I);
  MultiIndex beta;
  if (tau.label() == DecoratedTree::Label::Noise) {
    if (i1 != 0) throw std::domain_error("psi_map: noise node with gradient children: " + tau.str());
    beta.mul(Variable::noise(i));
  } else {
    if (i1 != 2) throw std::domain_error("psi_map: abstract node without two gradient children: " + tau.str());
    beta.mul(Variable::quad(i));
  }
  for (const auto& [kind, child] : tau.children()) beta = beta.times(psi_map(child));
  return beta;
}

namespace {

// Multiset of node variables, entries sorted with positive counts.
using NodePool = std::vector<std::pair<Variable, int>>;

NodePool remove_one(const NodePool& pool, std::size_t index) {
  NodePool out = pool;
  if (--out[index].second == 0) out.erase(out.begin() + index);
  return out;
}

int pool_size(const NodePool& pool) {
  int total = 0;
  for (const auto& [v, c] : pool) total += c;
  return total;
}

// All nonempty sub-multisets, each paired with its complement.
void submultisets(const NodePool& pool, std::size_t from, NodePool& current,
                  std::vector<std::pair<NodePool, NodePool>>& out) {
  if (from == pool.size()) {
    if (current.empty()) return;
    NodePool rest;
    std::size_t j = 0;
    for (const auto& [v, c] : pool) {
      int taken = 0;
      if (j < current.size() && current[j].first == v) taken = current[j++].second;
      if (c - taken > 0) rest.emplace_back(v, c - taken);
    }
    out.emplace_back(current, std::move(rest));
    return;
  }
  for (int take = 0; take <= pool[from].second; ++take) {
    if (take > 0) current.emplace_back(pool[from].first, take);
    submultisets(pool, from + 1, current, out);
    if (take > 0) current.pop_back();
  }
}

std::vector<std::pair<NodePool, NodePool>> submultisets(const NodePool& pool) {
  std::vector<std::pair<NodePool, NodePool>> out;
  NodePool current;
  submultisets(pool, 0, current, out);
  return out;
}

class FiberBuilder {
 public:
  std::vector<DecoratedTree> build(const NodePool& pool) {
    if (auto it = memo_.find(pool); it != memo_.end()) return it->second;
    std::set<DecoratedTree> results;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const Variable root = pool[i].first;
      const NodePool rest = remove_one(pool, i);
      const bool abstract = root.kind == VarKind::Quad;
      const int i1_slots = abstract ? 2 : 0;
      const int i_slots = root.a;
      if (i1_slots + i_slots == 0) {
        if (rest.empty())
          results.insert(DecoratedTree(
              abstract ? DecoratedTree::Label::Abstract : DecoratedTree::Label::Noise, {}));
        continue;
      }
      std::vector<DecoratedTree::Edge> children;
      assign(rest, i1_slots, i_slots, nullptr, children,
             abstract ? DecoratedTree::Label::Abstract : DecoratedTree::Label::Noise, results);
    }
    auto [it, inserted] = memo_.emplace(pool, std::vector<DecoratedTree>(results.begin(), results.end()));
    return it->second;
  }

 private:
  // Fills the open slots with subtrees built from `rest`. Parts feeding
  // slots of the same kind are taken in nondecreasing order; residual
  // collisions are merged by the canonical-form set.
  void assign(const NodePool& rest, int i1_left, int i_left, const NodePool* min_part,
              std::vector<DecoratedTree::Edge>& children, DecoratedTree::Label label,
              std::set<DecoratedTree>& results) {
    if (i1_left == 0 && i_left == 0) {
      if (rest.empty()) results.insert(DecoratedTree(label, children));
      return;
    }
    const EdgeKind kind = i1_left > 0 ? EdgeKind::I1 : EdgeKind::I;
    const int slots_after = i1_left + i_left - 1;
    for (const auto& [part, complement] : submultisets(rest)) {
      if (min_part && part < *min_part) continue;
      if (pool_size(complement) < slots_after) continue;
      for (const DecoratedTree& subtree : build(part)) {
        children.emplace_back(kind, subtree);
        const bool same_kind_next = (kind == EdgeKind::I1 ? i1_left > 1 : i_left > 1);
        assign(complement, i1_left - (kind == EdgeKind::I1), i_left - (kind == EdgeKind::I),
               same_kind_next ? &part : nullptr, children, label, results);
        children.pop_back();
      }
    }
  }

  std::map<NodePool, std::vector<DecoratedTree>> memo_;
};

}  // namespace

std::vector<DecoratedTree> fiber(const MultiIndex& beta, int max_nodes) {
  if (!beta.within({VarKind::Noise, VarKind::Quad}))
    throw std::domain_error("fiber: multi-index outside the Noise/Quad alphabet");
  if (beta.degree() > max_nodes)
    throw std::invalid_argument("fiber: node count exceeds the safety bound");
  if (beta.empty()) return {};

  NodePool pool(beta.exponents().begin(), beta.exponents().end());
  FiberBuilder builder;
  std::vector<DecoratedTree> trees = builder.build(pool);
  // Final consistency filter on the projection.
  std::vector<DecoratedTree> out;
  for (DecoratedTree& t : trees)
    if (psi_map(t) == beta) out.push_back(std::move(t));
  return out;
}

namespace {

void require_all_noise(const DecoratedTree& tau) {
  if (tau.label() != DecoratedTree::Label::Noise || tau.child_count(EdgeKind::I1) != 0)
    throw std::domain_error("tilde_psi: all-noise tree required: " + tau.str());
  for (const auto& [kind, child] : tau.children()) require_all_noise(child);
}

Poly tilde_psi_impl(const DecoratedTree& tau, std::map<DecoratedTree, Poly>& memo) {
  if (auto it = memo.find(tau); it != memo.end()) return it->second;
  Poly result;
  if (tau.children().empty()) {
    result = Poly::variable(Variable::noise(0));
  } else {
    // Split off the first branch: grafting it back onto the shrunken tree
    // produces the tree itself plus grafts inside the other branches, so
    //   value(tree) = nabla(value(branch), value(rest)) - sum of the rest.
    const DecoratedTree first = tau.children().front().second;
    std::vector<DecoratedTree::Edge> others(tau.children().begin() + 1, tau.children().end());
    const DecoratedTree rest(DecoratedTree::Label::Noise, others);
    result = nabla(tilde_psi_impl(first, memo), tilde_psi_impl(rest, memo));
    for (std::size_t i = 0; i < others.size(); ++i) {
      for (const auto& [grafted, mult] : graft(first, others[i].second)) {
        auto replaced = others;
        replaced[i].second = grafted;
        result -= make_rational(mult) *
                  tilde_psi_impl(DecoratedTree(DecoratedTree::Label::Noise, replaced), memo);
      }
    }
  }
  memo.emplace(tau, result);
  return result;
}

}  // namespace

Poly tilde_psi(const DecoratedTree& tau) {
  require_all_noise(tau);
  std::map<DecoratedTree, Poly> memo;
  return tilde_psi_impl(tau, memo);
}

Poly lambda_map(const MultiIndex& beta) {
  if (!beta.within({VarKind::Noise}))
    throw std::domain_error("lambda_map: multi-index outside the pure-noise alphabet");
  if (!beta.populated()) throw std::domain_error("lambda_map: multi-index is not populated");
  const std::vector<DecoratedTree> trees = fiber(beta);
  if (trees.empty()) throw std::logic_error("lambda_map: empty fiber for " + beta.str());
  Poly sum;
  std::map<DecoratedTree, Poly> memo;
  for (const DecoratedTree& t : trees) sum += tilde_psi_impl(t, memo);
  return make_rational(1, static_cast<long>(trees.size())) * sum;
}

}  // namespace midx
