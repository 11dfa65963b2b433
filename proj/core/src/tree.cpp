#include "dgt/tree.hpp"

#include <sstream>

namespace dgt {

WeightedTree::WeightedTree(std::vector<std::vector<Vertex>> levels, std::vector<Int> rule)
    : levels_(std::move(levels)), rule_(std::move(rule)) {
  for (const auto& w : rule_)
    if (w < 1) throw std::invalid_argument("WeightedTree: rule weights must be positive");
  std::size_t prev = 1;
  for (std::size_t n = 0; n < levels_.size(); ++n) {
    if (levels_[n].empty()) throw std::invalid_argument("WeightedTree: empty level");
    for (const auto& v : levels_[n]) {
      if (v.parent >= prev) throw std::invalid_argument("WeightedTree: dangling parent");
      if (v.edge_multiplicity < 1)
        throw std::invalid_argument("WeightedTree: multiplicities must be positive");
    }
    // children of one parent must be contiguous for deterministic ordering
    prev = levels_[n].size();
  }
}

WeightedTree WeightedTree::uniform(std::vector<Int> weights, std::size_t depth) {
  WeightedTree t({}, std::move(weights));
  t.materialize(depth);
  return t;
}

void WeightedTree::materialize(std::size_t depth) {
  if (levels_.size() >= depth) return;
  if (rule_.empty())
    throw std::out_of_range("WeightedTree: depth beyond materialized data (no rule)");
  while (levels_.size() < depth) {
    std::size_t parents = levels_.empty() ? 1 : levels_.back().size();
    std::vector<Vertex> next;
    next.reserve(parents * rule_.size());
    for (std::size_t p = 0; p < parents; ++p)
      for (const auto& w : rule_) next.push_back(Vertex{p, w});
    levels_.push_back(std::move(next));
  }
}

std::size_t WeightedTree::level_size(std::size_t n) const {
  if (n == 0) return 1;
  if (n > levels_.size()) throw std::out_of_range("WeightedTree: level not materialized");
  return levels_[n - 1].size();
}

const WeightedTree::Vertex& WeightedTree::vertex(std::size_t level, std::size_t index) const {
  if (level == 0 || level > levels_.size())
    throw std::out_of_range("WeightedTree: vertex level out of range");
  return levels_[level - 1].at(index);
}

std::vector<Int> WeightedTree::multiplicity_vector(std::size_t level, std::size_t index) const {
  if (level >= levels_.size())
    throw std::out_of_range("children not materialized at this depth");
  std::vector<Int> out;
  for (const auto& v : levels_[level]) {
    if (v.parent == index) out.push_back(v.edge_multiplicity);
  }
  if (out.empty()) throw std::out_of_range("vertex has no materialized children");
  return out;
}

std::vector<std::size_t> WeightedTree::children(std::size_t level, std::size_t index) const {
  if (level >= levels_.size())
    throw std::out_of_range("children not materialized at this depth");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < levels_[level].size(); ++i)
    if (levels_[level][i].parent == index) out.push_back(i);
  return out;
}

TreeElement pushforward(const WeightedTree& tree, const TreeElement& t) {
  if (t.values.size() != tree.level_size(t.stage))
    throw std::invalid_argument("pushforward: value arity mismatch");
  std::size_t next_size = tree.level_size(t.stage + 1);
  TreeElement out;
  out.stage = t.stage + 1;
  out.values.assign(next_size, 0);
  for (std::size_t i = 0; i < next_size; ++i) {
    const auto& v = tree.vertex(t.stage + 1, i);
    out.values[i] = v.edge_multiplicity * t.values[v.parent];
  }
  return out;
}

bool tree_positive(const TreeElement& t) {
  for (const auto& x : t.values)
    if (x < 0) return false;
  return true;
}

Rat tree_trace(const WeightedTree& tree, const std::vector<std::size_t>& path,
               const TreeElement& t) {
  if (path.size() <= t.stage)
    throw std::invalid_argument("tree_trace: path does not reach the element's stage");
  if (path[0] != 0) throw std::invalid_argument("tree_trace: path must start at the root");
  Int denom = 1;
  for (std::size_t level = 1; level <= t.stage; ++level) {
    const auto& v = tree.vertex(level, path[level]);
    if (level > 1 && v.parent != path[level - 1])
      throw std::invalid_argument("tree_trace: path is not connected");
    if (level == 1 && v.parent != 0)
      throw std::invalid_argument("tree_trace: path is not connected");
    denom *= v.edge_multiplicity;
  }
  return Rat(t.values.at(path[t.stage]), denom);
}

TreeCheck tree_initial_check(const WeightedTree& tree, std::size_t depth) {
  TreeCheck c;
  c.holds = true;
  for (std::size_t level = 0; level + 1 <= depth; ++level) {
    for (std::size_t i = 0; i < tree.level_size(level); ++i) {
      std::vector<Int> v = tree.multiplicity_vector(level, i);
      Int g = 0;
      for (const auto& w : v) g = gcd_int(g, w);
      if (g != 1) {
        c.holds = false;
        c.witness = "vertex L" + std::to_string(level) + "_" + std::to_string(i) +
                    " has gcd " + g.str();
        return c;
      }
    }
  }
  if (tree.has_rule()) {
    Int g = 0;
    for (const auto& w : tree.rule()) g = gcd_int(g, w);
    c.exact_overall = (g == 1);
  }
  return c;
}

TreeCheck tree_approx_div_check(const WeightedTree& tree, std::size_t depth) {
  TreeCheck c;
  c.holds = true;
  for (std::size_t level = 0; level + 1 <= depth; ++level) {
    for (std::size_t i = 0; i < tree.level_size(level); ++i) {
      for (const auto& w : tree.multiplicity_vector(level, i)) {
        if (w == 1) {
          c.holds = false;
          c.witness = "weight-1 edge below vertex L" + std::to_string(level) + "_" +
                      std::to_string(i);
          return c;
        }
      }
    }
  }
  if (tree.has_rule()) {
    bool rule_clean = true;
    for (const auto& w : tree.rule()) rule_clean &= (w != 1);
    c.exact_overall = rule_clean;
  }
  return c;
}

std::string export_dot(const WeightedTree& tree, std::size_t depth) {
  std::ostringstream out;
  out << "digraph bratteli {\n";
  out << "  rankdir=TB;\n";
  out << "  L0_0 [label=\"root\"];\n";
  for (std::size_t level = 1; level <= depth; ++level) {
    for (std::size_t i = 0; i < tree.level_size(level); ++i) {
      out << "  L" << level << "_" << i << " [label=\"" << level << "." << i << "\"];\n";
    }
  }
  for (std::size_t level = 1; level <= depth; ++level) {
    for (std::size_t i = 0; i < tree.level_size(level); ++i) {
      const auto& v = tree.vertex(level, i);
      out << "  L" << level - 1 << "_" << v.parent << " -> L" << level << "_" << i
          << " [label=\"" << v.edge_multiplicity.str() << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace dgt
