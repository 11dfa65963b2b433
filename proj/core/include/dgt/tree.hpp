#pragma once

#include <map>
#include <string>
#include <vector>

#include "dgt/unit_ops.hpp"

namespace dgt {

/// Weighted rooted tree backing a Bratteli diagram: levels X_0 = {root},
/// X_1, ..., X_D with positive integer multiplicities on the edges. Deepening
/// past the materialized prefix follows an optional uniform rule (every
/// vertex gets one child per listed weight), which is an eventually periodic
/// generator in the sense needed for exact "for all x" verdicts.
class WeightedTree {
 public:
  struct Vertex {
    std::size_t parent = 0;  // index within the previous level
    Int edge_multiplicity = 1;
  };

  /// Explicit levels: levels[n] lists the vertices of X_{n+1} (the root is
  /// implicit). An empty rule keeps the tree finite.
  WeightedTree(std::vector<std::vector<Vertex>> levels, std::vector<Int> uniform_rule = {});

  /// A tree generated purely by the uniform rule.
  static WeightedTree uniform(std::vector<Int> weights, std::size_t depth);

  std::size_t materialized_depth() const { return levels_.size(); }
  bool has_rule() const { return !rule_.empty(); }
  const std::vector<Int>& rule() const { return rule_; }

  void materialize(std::size_t depth);  // extends via the rule

  std::size_t level_size(std::size_t n) const;  // |X_n|, n <= depth
  const Vertex& vertex(std::size_t level, std::size_t index) const;  // level >= 1

  /// Ordered child edge multiplicities of vertex (level, index).
  std::vector<Int> multiplicity_vector(std::size_t level, std::size_t index) const;

  /// Children indices of (level, index) at level+1.
  std::vector<std::size_t> children(std::size_t level, std::size_t index) const;

 private:
  std::vector<std::vector<Vertex>> levels_;
  std::vector<Int> rule_;
};

/// Integer function on a level: the stage-n piece of the direct limit.
struct TreeElement {
  std::size_t stage = 0;
  std::vector<Int> values;  // one per vertex of X_stage
};

/// Embedding into the next level: the child of x picks up m(edge) * f(x).
TreeElement pushforward(const WeightedTree& tree, const TreeElement& t);

/// Exact order decision: the embeddings are order embeddings, so
/// [f, n] >= 0 iff f >= 0.
bool tree_positive(const TreeElement& t);

/// Path trace f(x_n) / m(0) m(1) ... m(n-1); path[i] is the vertex index at
/// level i (path[0] = 0 is the root).
Rat tree_trace(const WeightedTree& tree, const std::vector<std::size_t>& path,
               const TreeElement& t);

struct TreeCheck {
  bool holds = false;
  bool exact_overall = false;  // rule-backed: holds at every depth
  std::string witness;
};

/// gcd of every vertex's multiplicity vector is 1 (initial-object condition).
TreeCheck tree_initial_check(const WeightedTree& tree, std::size_t depth);

/// Infinitely many levels where no vertex has a weight-1 edge (approximate
/// divisibility condition).
TreeCheck tree_approx_div_check(const WeightedTree& tree, std::size_t depth);

/// Per-vertex order-unit table with the exact identities
/// unit(x) = sum over children y of m(x -> y) unit(y); root gets u.
template <DenseTarget G>
struct TreeHomData {
  G target;
  std::vector<std::vector<typename G::Element>> units;  // per level, per vertex
};

template <DenseTarget G>
TreeHomData<G> build_tree_initial_hom(const WeightedTree& tree, const G& g,
                                      const typename G::Element& u, std::size_t depth) {
  auto check = tree_initial_check(tree, depth);
  if (!check.holds)
    throw std::invalid_argument("build_tree_initial_hom: gcd check fails: " + check.witness);
  if (!g.is_order_unit(u))
    throw std::invalid_argument("build_tree_initial_hom: u is not an order unit");

  TreeHomData<G> h{g, {}};
  h.units.push_back({u});
  for (std::size_t level = 0; level < depth; ++level) {
    std::vector<typename G::Element> next(tree.level_size(level + 1), g.zero());
    for (std::size_t i = 0; i < tree.level_size(level); ++i) {
      auto kids = tree.children(level, i);
      std::vector<Int> weights = tree.multiplicity_vector(level, i);
      auto parts = decompose_gcd(g, h.units[level][i], weights);
      for (std::size_t c = 0; c < kids.size(); ++c) next[kids[c]] = parts[c];
    }
    h.units.push_back(std::move(next));
  }

  // exact identity verification
  for (std::size_t level = 0; level < depth; ++level) {
    for (std::size_t i = 0; i < tree.level_size(level); ++i) {
      auto kids = tree.children(level, i);
      typename G::Element acc = g.zero();
      for (std::size_t c = 0; c < kids.size(); ++c) {
        const auto& child = tree.vertex(level + 1, kids[c]);
        acc = g.add(acc, g.scale(child.edge_multiplicity, h.units[level + 1][kids[c]]));
      }
      if (!g.equal(acc, h.units[level][i]))
        throw std::logic_error("build_tree_initial_hom: identity failed to verify");
    }
  }
  return h;
}

/// Deterministic DOT export with multiplicity edge labels; vertices are named
/// L<level>_<index> in level order.
std::string export_dot(const WeightedTree& tree, std::size_t depth);

}  // namespace dgt
