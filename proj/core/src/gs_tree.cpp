#include "kdiv/gs_tree.hpp"

#include <cctype>
#include <functional>
#include <optional>

#include "kdiv/errors.hpp"

namespace kdiv {

GSTree::GSTree(std::vector<Node> nodes, int root) : nodes_(std::move(nodes)), root_(root) {
  if (root_ < 0 || static_cast<std::size_t>(root_) >= nodes_.size()) throw InputError("GS tree: invalid root");
  std::vector<char> visited(nodes_.size(), 0);
  std::vector<Candidate> leaves;
  std::function<void(int)> walk = [&](int id) {
    if (id < 0 || static_cast<std::size_t>(id) >= nodes_.size()) throw InputError("GS tree: child index out of range");
    if (visited[static_cast<std::size_t>(id)]) throw InputError("GS tree: node reachable twice");
    visited[static_cast<std::size_t>(id)] = 1;
    const auto& node = nodes_[static_cast<std::size_t>(id)];
    if (node.is_leaf()) {
      if (!node.children.empty()) throw InputError("GS tree: leaf with children");
      leaves.push_back(node.leaf);
      return;
    }
    if (node.children.size() < 2) throw InputError("GS tree: internal node with fewer than two children");
    for (int child : node.children) walk(child);
  };
  walk(root_);
  leaf_count_ = static_cast<int>(leaves.size());
  std::vector<char> seen(leaves.size(), 0);
  for (Candidate c : leaves) {
    if (c < 0 || c >= leaf_count_ || seen[static_cast<std::size_t>(c)]) {
      throw InputError("GS tree: leaf labels must be a permutation of [0, m)");
    }
    seen[static_cast<std::size_t>(c)] = 1;
  }
}

namespace {

int build_balanced(std::vector<GSTree::Node>& nodes, std::span<const Candidate> leaves) {
  if (leaves.size() == 1) {
    nodes.push_back({leaves[0], {}});
    return static_cast<int>(nodes.size()) - 1;
  }
  const std::size_t left = (leaves.size() + 1) / 2;
  const int l = build_balanced(nodes, leaves.subspan(0, left));
  const int r = build_balanced(nodes, leaves.subspan(left));
  nodes.push_back({-1, {l, r}});
  return static_cast<int>(nodes.size()) - 1;
}

}  // namespace

GSTree GSTree::balanced(std::span<const Candidate> leaves) {
  if (leaves.empty()) throw InputError("GS tree needs at least one leaf");
  std::vector<Node> nodes;
  const int root = build_balanced(nodes, leaves);
  return GSTree(std::move(nodes), root);
}

GSTree GSTree::caterpillar(std::span<const Candidate> leaves) {
  if (leaves.empty()) throw InputError("GS tree needs at least one leaf");
  std::vector<Node> nodes;
  nodes.push_back({leaves.back(), {}});
  int spine = 0;
  for (std::size_t i = leaves.size() - 1; i-- > 0;) {
    nodes.push_back({leaves[i], {}});
    const int leaf = static_cast<int>(nodes.size()) - 1;
    nodes.push_back({-1, {leaf, spine}});
    spine = static_cast<int>(nodes.size()) - 1;
  }
  return GSTree(std::move(nodes), spine);
}

GSTree GSTree::parse(std::string_view text, bool one_based) {
  std::vector<Node> nodes;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  std::function<int()> parse_node = [&]() -> int {
    skip();
    if (i >= text.size()) throw InputError("GS tree: unexpected end of input");
    if (text[i] == '(') {
      ++i;
      Node node;
      while (true) {
        skip();
        if (i >= text.size()) throw InputError("GS tree: missing ')'");
        if (text[i] == ')') {
          ++i;
          break;
        }
        node.children.push_back(parse_node());
      }
      nodes.push_back(std::move(node));
      return static_cast<int>(nodes.size()) - 1;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InputError("GS tree: unexpected character '" + std::string(1, text[i]) + "'");
    }
    int value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) value = value * 10 + (text[i++] - '0');
    nodes.push_back({one_based ? value - 1 : value, {}});
    return static_cast<int>(nodes.size()) - 1;
  };
  const int root = parse_node();
  skip();
  if (i != text.size()) throw InputError("GS tree: trailing characters");
  return GSTree(std::move(nodes), root);
}

int GSTree::internal_count() const {
  int count = 0;
  for (const auto& n : nodes_) count += n.is_leaf() ? 0 : 1;
  return count;
}

std::vector<Candidate> GSTree::frontier() const {
  std::vector<Candidate> out;
  std::function<void(int)> walk = [&](int id) {
    const auto& node = nodes_[static_cast<std::size_t>(id)];
    if (node.is_leaf()) {
      out.push_back(node.leaf);
      return;
    }
    for (int c : node.children) walk(c);
  };
  if (root_ >= 0) walk(root_);
  return out;
}

bool GSTree::is_consistent(const Ranking& vote) const {
  if (vote.size() != leaf_count_) return false;
  const auto pos = vote.positions();
  // Returns the position interval covered by the subtree, or nothing when
  // the subtree's leaves cannot be read contiguously.
  std::function<std::optional<std::pair<int, int>>(int)> span_of = [&](int id) -> std::optional<std::pair<int, int>> {
    const auto& node = nodes_[static_cast<std::size_t>(id)];
    if (node.is_leaf()) {
      const int p = pos[static_cast<std::size_t>(node.leaf)];
      return std::pair{p, p};
    }
    std::vector<std::pair<int, int>> spans;
    for (int c : node.children) {
      auto s = span_of(c);
      if (!s) return std::nullopt;
      spans.push_back(*s);
    }
    bool forward = true;
    bool backward = true;
    for (std::size_t k = 1; k < spans.size(); ++k) {
      forward = forward && spans[k].first == spans[k - 1].second + 1;
      backward = backward && spans[k - 1].first == spans[k].second + 1;
    }
    if (!forward && !backward) return std::nullopt;
    return forward ? std::pair{spans.front().first, spans.back().second}
                   : std::pair{spans.back().first, spans.front().second};
  };
  return span_of(root_).has_value();
}

std::string GSTree::to_string(bool one_based) const {
  std::string out;
  std::function<void(int)> walk = [&](int id) {
    const auto& node = nodes_[static_cast<std::size_t>(id)];
    if (node.is_leaf()) {
      out += std::to_string(node.leaf + (one_based ? 1 : 0));
      return;
    }
    out += '(';
    for (std::size_t k = 0; k < node.children.size(); ++k) {
      if (k) out += ' ';
      walk(node.children[k]);
    }
    out += ')';
  };
  if (root_ >= 0) walk(root_);
  return out;
}

}  // namespace kdiv
