#include "kdiv/domains.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "kdiv/arrangement.hpp"
#include "kdiv/errors.hpp"

namespace kdiv {

namespace {

Domain finish(int m, std::vector<Ranking> votes, DomainKind kind, std::string label) {
  sort_unique(votes);
  Domain d;
  d.m = m;
  d.votes = std::move(votes);
  d.kind = kind;
  d.label = std::move(label);
  return d;
}

}  // namespace

bool Domain::is_condorcet() const {
  switch (kind) {
    case DomainKind::SP:
    case DomainKind::GS:
    case DomainKind::SPTree:
    case DomainKind::SC:
      return true;
    case DomainKind::Euclid:
      return embedding && embedding->dimension() == 1;
    default:
      return false;
  }
}

Domain enumerate_sp(const Ranking& axis) {
  const int m = axis.size();
  std::vector<Ranking> votes;
  // Fill positions bottom-up, taking either end of the remaining interval.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
    std::vector<Candidate> order(static_cast<std::size_t>(m));
    int lo = 0;
    int hi = m - 1;
    for (int slot = m - 1; slot >= 1; --slot) {
      const bool take_left = (mask >> (slot - 1)) & 1U;
      order[static_cast<std::size_t>(slot)] = take_left ? axis[lo++] : axis[hi--];
    }
    order[0] = axis[lo];
    votes.emplace_back(std::move(order));
  }
  auto d = finish(m, std::move(votes), DomainKind::SP, "SP");
  d.axis = axis;
  return d;
}

Domain enumerate_gs(const GSTree& tree) {
  const auto& nodes = tree.nodes();
  // Each internal node reads its children left to right or right to left.
  std::function<std::vector<std::vector<Candidate>>(int)> readings = [&](int id) {
    const auto& node = nodes[static_cast<std::size_t>(id)];
    if (node.is_leaf()) return std::vector<std::vector<Candidate>>{{node.leaf}};
    std::vector<std::vector<std::vector<Candidate>>> sub;
    for (int child : node.children) sub.push_back(readings(child));
    std::vector<std::vector<Candidate>> out;
    for (int dir = 0; dir < 2; ++dir) {
      std::vector<std::vector<Candidate>> acc{{}};
      for (std::size_t i = 0; i < sub.size(); ++i) {
        const auto& part = sub[dir == 0 ? i : sub.size() - 1 - i];
        std::vector<std::vector<Candidate>> next;
        next.reserve(acc.size() * part.size());
        for (const auto& prefix : acc) {
          for (const auto& s : part) {
            auto joined = prefix;
            joined.insert(joined.end(), s.begin(), s.end());
            next.push_back(std::move(joined));
          }
        }
        acc = std::move(next);
      }
      out.insert(out.end(), acc.begin(), acc.end());
    }
    return out;
  };
  std::vector<Ranking> votes;
  for (auto& r : readings(tree.root())) votes.emplace_back(std::move(r));
  auto d = finish(tree.candidate_count(), std::move(votes), DomainKind::GS, "GS");
  d.tree = tree;
  return d;
}

Ranking cvc_vote(const Ranking& axis, const std::vector<bool>& decisions) {
  const int m = axis.size();
  if (static_cast<int>(decisions.size()) != m - 1) throw InputError("CVC needs m-1 decisions");
  std::vector<Candidate> order(static_cast<std::size_t>(m));
  int top = 0;
  int bottom = m - 1;
  for (int i = 0; i < m - 1; ++i) {
    order[static_cast<std::size_t>(decisions[static_cast<std::size_t>(i)] ? top++ : bottom--)] = axis[i];
  }
  order[static_cast<std::size_t>(top)] = axis[m - 1];
  return Ranking(std::move(order));
}

Domain cvc_enumerate(const Ranking& axis) {
  const int m = axis.size();
  std::vector<Ranking> votes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
    std::vector<bool> decisions(static_cast<std::size_t>(m - 1));
    for (int i = 0; i < m - 1; ++i) decisions[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
    votes.push_back(cvc_vote(axis, decisions));
  }
  auto d = finish(m, std::move(votes), DomainKind::GS, "GS/cat");
  d.axis = axis;
  d.tree = GSTree::caterpillar(axis.order());
  return d;
}

Domain enumerate_spoc(const Ranking& cycle) {
  const int m = cycle.size();
  if (m < 3) throw InputError("SPOC needs at least 3 candidates");
  std::set<Ranking> votes;
  std::vector<Candidate> order;
  // Grow a circular arc [start, start+len) one end at a time.
  std::function<void(int, int)> grow = [&](int start, int len) {
    if (len == m) {
      votes.emplace(order);
      return;
    }
    const int left = (start - 1 + m) % m;
    const int right = (start + len) % m;
    order.push_back(cycle[left]);
    grow(left, len + 1);
    order.pop_back();
    if (right != left) {
      order.push_back(cycle[right]);
      grow(start, len + 1);
      order.pop_back();
    }
  };
  for (int s = 0; s < m; ++s) {
    order.assign(1, cycle[s]);
    grow(s, 1);
  }
  auto d = finish(m, {votes.begin(), votes.end()}, DomainKind::SPOC, "SPOC");
  d.axis = cycle;
  return d;
}

Domain enumerate_sp_tree(const Graph& tree) {
  const int m = static_cast<int>(tree.size());
  if (m < 1) throw InputError("SP tree needs at least one vertex");
  std::size_t edge_ends = 0;
  for (int v = 0; v < m; ++v) {
    for (int w : tree[static_cast<std::size_t>(v)]) {
      if (w < 0 || w >= m || w == v) throw InputError("SP tree: invalid edge");
    }
    edge_ends += tree[static_cast<std::size_t>(v)].size();
  }
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : tree[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != m) throw InputError("SP tree: graph is disconnected");
  if (edge_ends != 2 * static_cast<std::size_t>(m - 1)) throw InputError("SP tree: graph is not a tree");

  std::vector<Ranking> votes;
  std::vector<Candidate> order;
  std::vector<char> chosen(static_cast<std::size_t>(m), 0);
  std::function<void()> extend = [&] {
    if (static_cast<int>(order.size()) == m) {
      votes.emplace_back(order);
      return;
    }
    for (int c = 0; c < m; ++c) {
      if (chosen[static_cast<std::size_t>(c)]) continue;
      const auto& nb = tree[static_cast<std::size_t>(c)];
      const bool frontier = order.empty() || std::any_of(nb.begin(), nb.end(), [&](int w) {
                              return chosen[static_cast<std::size_t>(w)] != 0;
                            });
      if (!frontier) continue;
      chosen[static_cast<std::size_t>(c)] = 1;
      order.push_back(c);
      extend();
      order.pop_back();
      chosen[static_cast<std::size_t>(c)] = 0;
    }
  };
  extend();
  auto d = finish(m, std::move(votes), DomainKind::SPTree, "SP/tree");
  d.graph = tree;
  return d;
}

Graph double_forked_tree(int m) {
  if (m < 5) throw InputError("double-forked tree needs at least 5 candidates");
  Graph g(static_cast<std::size_t>(m));
  auto edge = [&](int a, int b) {
    g[static_cast<std::size_t>(a)].push_back(b);
    g[static_cast<std::size_t>(b)].push_back(a);
  };
  edge(0, 2);
  edge(1, 2);
  for (int c = 2; c < m - 3; ++c) edge(c, c + 1);
  edge(m - 3, m - 2);
  edge(m - 3, m - 1);
  return g;
}

Domain generate_sc_chain(Rng& rng, int m) {
  if (m < 1) throw InputError("SC chain needs at least one candidate");
  std::vector<Candidate> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::vector<Ranking> chain{Ranking(order)};
  std::vector<int> eligible;
  for (std::int64_t step = 0; step < max_swap_distance(m); ++step) {
    eligible.clear();
    for (int i = 0; i + 1 < m; ++i) {
      if (order[static_cast<std::size_t>(i)] < order[static_cast<std::size_t>(i + 1)]) eligible.push_back(i);
    }
    const int i = eligible[rng.below(eligible.size())];
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i + 1)]);
    chain.emplace_back(order);
  }
  auto d = finish(m, chain, DomainKind::SC, "SC");
  std::vector<int> idx;
  for (const auto& r : chain) {
    idx.push_back(static_cast<int>(std::lower_bound(d.votes.begin(), d.votes.end(), r) - d.votes.begin()));
  }
  d.chain = std::move(idx);
  return d;
}

Domain enumerate_full(int m) {
  auto d = finish(m, all_rankings(m), DomainKind::Full, "IC");
  return d;
}

std::uint64_t stirling_first(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n + 1),
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<std::uint64_t>(i - 1) * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
          s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
  }
  return k > n ? 0 : s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::uint64_t domain_size_formula(SizeFormula kind, int m) {
  if (m < 2 || m > 60) throw InputError("domain size formula defined for 2 <= m <= 60");
  const auto mm = static_cast<std::uint64_t>(m);
  switch (kind) {
    case SizeFormula::SP:
    case SizeFormula::GS:
      return std::uint64_t{1} << (m - 1);
    case SizeFormula::SPDF:
      if (m < 5) throw InputError("SP/DF size formula needs m >= 5");
      return 16 * ((std::uint64_t{1} << (m - 3)) - 1);
    case SizeFormula::SPOC:
      return mm * (std::uint64_t{1} << (m - 2));
    case SizeFormula::SC:
    case SizeFormula::Euclid1D:
      return mm * (mm - 1) / 2 + 1;
    case SizeFormula::Euclid2D:
      if (m > 20) throw InputError("2D size formula implemented for m <= 20");
      return stirling_first(m, m) + stirling_first(m, m - 1) + stirling_first(m, m - 2);
  }
  throw InputError("unsupported size formula");
}

std::pair<Domain, double> reverse_extension(const Domain& domain) {
  std::vector<Ranking> votes = domain.votes;
  for (const auto& v : domain.votes) votes.push_back(reverse(v));
  Domain ext = finish(domain.m, std::move(votes), DomainKind::Custom, domain.label + "+rev");
  ext.embedding = domain.embedding;
  const double ratio = static_cast<double>(ext.size()) / static_cast<double>(domain.size());
  return {std::move(ext), ratio};
}

Election to_election(const Domain& domain) {
  Certificate cert;
  if (domain.kind == DomainKind::SP) cert.axis = domain.axis;
  if (domain.tree) cert.tree = domain.tree;
  if (domain.chain) cert.sc_order = domain.chain;
  if (domain.embedding) cert.embedding = domain.embedding;
  return Election::from_rankings(domain.votes, std::move(cert));
}

Domain enumerate_euclidean(const Embedding& embedding, const EuclideanOptions& options) {
  if (!embedding.general_position()) {
    throw DegenerateEmbedding("embedding is not in general position (coincident bisectors); resample the candidates");
  }
  const int m = embedding.candidate_count();
  const int dim = embedding.dimension();
  Domain d;
  if (dim <= 3) {
    d = finish(m, arrangement_rankings(embedding), DomainKind::Euclid, std::to_string(dim) + "D");
  } else {
    Rng rng(options.sample_seed);
    d = finish(m, sampled_rankings(embedding, rng, options.sample_batches, options.sample_batch_size),
               DomainKind::Euclid, std::to_string(dim) + "D");
    d.lower_bound = true;
  }
  d.embedding = embedding;
  if (dim == 1) {
    if (d.size() != domain_size_formula(SizeFormula::Euclid1D, std::max(m, 2)) && m >= 2) {
      throw DegenerateEmbedding("1D embedding has coinciding bisector points; resample the candidates");
    }
    // Sweep order: every bisector crossed adds one inversion relative to
    // the leftmost cell, which ranks candidates by coordinate.
    std::vector<int> order(d.votes.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<Candidate> by_x(static_cast<std::size_t>(m));
    std::iota(by_x.begin(), by_x.end(), 0);
    std::sort(by_x.begin(), by_x.end(), [&](Candidate a, Candidate b) { return embedding.point(a)[0] < embedding.point(b)[0]; });
    const Ranking first(by_x);
    std::vector<std::int64_t> dist(d.votes.size());
    for (std::size_t i = 0; i < d.votes.size(); ++i) dist[i] = swap_distance(first, d.votes[i]);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return dist[static_cast<std::size_t>(a)] < dist[static_cast<std::size_t>(b)]; });
    d.chain = std::move(order);
  } else if (dim == 2 && options.check_closed_form && m >= 2) {
    const auto expected = domain_size_formula(SizeFormula::Euclid2D, m);
    if (d.size() != expected) {
      throw DegenerateEmbedding("2D embedding realizes " + std::to_string(d.size()) + " rankings instead of " +
                                std::to_string(expected) + "; embedding is not generic, resample the candidates");
    }
  }
  return d;
}

const std::vector<std::string>& domain_names() {
  static const std::vector<std::string> names{"1D", "2D", "3D", "SC", "SP", "SP/DF", "SPOC", "GS/bal", "GS/cat", "IC"};
  return names;
}

Domain make_domain(std::string_view name, int m, Rng& rng) {
  const Ranking axis = Ranking::identity(m);
  Domain d;
  if (name == "SP") {
    d = enumerate_sp(axis);
  } else if (name == "SPOC") {
    d = enumerate_spoc(axis);
  } else if (name == "SP/DF") {
    d = enumerate_sp_tree(double_forked_tree(m));
  } else if (name == "GS/bal") {
    d = enumerate_gs(GSTree::balanced(axis.order()));
  } else if (name == "GS/cat") {
    d = cvc_enumerate(axis);
  } else if (name == "SC") {
    d = generate_sc_chain(rng, m);
  } else if (name == "IC") {
    d = enumerate_full(m);
  } else if (name == "1D" || name == "2D" || name == "3D") {
    const int dim = name[0] - '0';
    for (int attempt = 0;; ++attempt) {
      try {
        d = enumerate_euclidean(Embedding::uniform_cube(m, dim, rng));
        break;
      } catch (const DegenerateEmbedding&) {
        if (attempt >= 100) throw;
      }
    }
  } else {
    throw InputError("unknown domain '" + std::string(name) + "'");
  }
  d.label = std::string(name);
  return d;
}

}  // namespace kdiv
