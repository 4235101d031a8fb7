#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kdiv/ranking.hpp"

namespace kdiv {

/// Rooted ordered tree whose leaves carry distinct candidates and whose
/// internal nodes have at least two children.
class GSTree {
 public:
  struct Node {
    Candidate leaf = -1;         // >= 0 for leaves
    std::vector<int> children;   // node indices, left to right
    bool is_leaf() const { return leaf >= 0; }
    bool operator==(const Node&) const = default;
  };

  GSTree() = default;
  /// Validates arity and that leaves form a permutation of [0, m).
  GSTree(std::vector<Node> nodes, int root);

  /// Binary tree over `leaves` built by halving (left half gets the extra
  /// leaf); every level but the last is full.
  static GSTree balanced(std::span<const Candidate> leaves);
  /// Binary tree whose internal nodes each have a leaf as their left child;
  /// reading leaves left to right gives `leaves`.
  static GSTree caterpillar(std::span<const Candidate> leaves);

  /// Parses "((0 1) (2 3))" with 0-based labels; `one_based` shifts labels.
  static GSTree parse(std::string_view text, bool one_based = false);

  int candidate_count() const { return leaf_count_; }
  int internal_count() const;
  int root() const { return root_; }
  const std::vector<Node>& nodes() const { return nodes_; }

  /// Leaves read left to right without reversals.
  std::vector<Candidate> frontier() const;

  /// True if `vote` is a frontier reading under some set of child-order
  /// reversals.
  bool is_consistent(const Ranking& vote) const;

  std::string to_string(bool one_based = false) const;

  bool operator==(const GSTree&) const = default;

 private:
  std::vector<Node> nodes_;
  int root_ = -1;
  int leaf_count_ = 0;
};

}  // namespace kdiv
