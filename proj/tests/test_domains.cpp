#include <doctest.h>

#include <set>

#include "kdiv/domains.hpp"
#include "kdiv/errors.hpp"
#include "oracles.hpp"

using namespace kdiv;

namespace {

// Prefix of length p occupies a contiguous block of `line` (or of the cycle).
bool prefixes_contiguous(const Ranking& vote, const Ranking& line, bool cyclic) {
  const int m = vote.size();
  const auto pos = line.positions();
  std::vector<char> in(static_cast<std::size_t>(m), 0);
  for (int p = 1; p <= m; ++p) {
    in[static_cast<std::size_t>(pos[static_cast<std::size_t>(vote[p - 1])])] = 1;
    int runs = 0;
    for (int i = 0; i < m; ++i) {
      const bool prev = cyclic ? in[static_cast<std::size_t>((i + m - 1) % m)] : (i > 0 && in[static_cast<std::size_t>(i - 1)]);
      if (in[static_cast<std::size_t>(i)] && !prev) ++runs;
    }
    if (p < m && runs != 1) return false;
  }
  return true;
}

bool prefixes_connected(const Ranking& vote, const Graph& g) {
  std::vector<char> in(g.size(), 0);
  for (int p = 0; p < vote.size(); ++p) {
    const int c = vote[p];
    if (p > 0) {
      bool touches = false;
      for (int nb : g[static_cast<std::size_t>(c)]) touches = touches || in[static_cast<std::size_t>(nb)];
      if (!touches) return false;
    }
    in[static_cast<std::size_t>(c)] = 1;
  }
  return true;
}

// Every internal node's leaves form a contiguous block of the vote.
bool clones_contiguous(const Ranking& vote, const GSTree& t) {
  const auto pos = vote.positions();
  bool ok = true;
  std::function<std::vector<int>(int)> leaves = [&](int id) {
    const auto& node = t.nodes()[static_cast<std::size_t>(id)];
    if (node.is_leaf()) return std::vector<int>{node.leaf};
    std::vector<int> all;
    for (int c : node.children) {
      auto sub = leaves(c);
      all.insert(all.end(), sub.begin(), sub.end());
    }
    int lo = 1 << 30, hi = -1;
    for (int c : all) {
      lo = std::min(lo, pos[static_cast<std::size_t>(c)]);
      hi = std::max(hi, pos[static_cast<std::size_t>(c)]);
    }
    ok = ok && hi - lo + 1 == static_cast<int>(all.size());
    return all;
  };
  leaves(t.root());
  return ok;
}

template <class Pred>
std::set<Ranking> filter_all(int m, Pred pred) {
  std::set<Ranking> out;
  for (const auto& r : all_rankings(m))
    if (pred(r)) out.insert(r);
  return out;
}

std::set<Ranking> as_set(const Domain& d) {
  std::set<Ranking> s(d.votes.begin(), d.votes.end());
  REQUIRE(s.size() == d.votes.size());
  return s;
}

}  // namespace

TEST_CASE("single-peaked domain equals filtered permutations") {
  for (int m = 1; m <= 7; ++m) {
    Rng rng(static_cast<std::uint64_t>(m));
    const auto axis = oracle::random_ranking(m, rng);
    const auto d = enumerate_sp(axis);
    CHECK(as_set(d) == filter_all(m, [&](const Ranking& r) { return prefixes_contiguous(r, axis, false); }));
    CHECK(d.size() == (std::size_t{1} << (m - 1)));
    CHECK(d.is_condorcet());
  }
}

TEST_CASE("SPOC domain equals filtered permutations") {
  for (int m = 3; m <= 7; ++m) {
    const auto cycle = Ranking::identity(m);
    const auto d = enumerate_spoc(cycle);
    CHECK(as_set(d) == filter_all(m, [&](const Ranking& r) { return prefixes_contiguous(r, cycle, true); }));
    CHECK(d.size() == static_cast<std::size_t>(m) << (m - 2));
    CHECK_FALSE(d.is_condorcet());
  }
  CHECK_THROWS_AS(enumerate_spoc(Ranking::identity(2)), InputError);
}

TEST_CASE("group-separable domains equal filtered permutations") {
  for (int m = 2; m <= 7; ++m) {
    const auto ids = Ranking::identity(m);
    for (const auto& t : {GSTree::balanced(ids.order()), GSTree::caterpillar(ids.order())}) {
      const auto d = enumerate_gs(t);
      CHECK(as_set(d) == filter_all(m, [&](const Ranking& r) { return clones_contiguous(r, t); }));
      CHECK(d.size() == (std::size_t{1} << (m - 1)));
    }
    // Non-binary node: three children give two readings, not six.
    CHECK(as_set(cvc_enumerate(ids)) == as_set(enumerate_gs(GSTree::caterpillar(ids.order()))));
  }
  const auto t = GSTree::parse("(0 1 2)");
  CHECK(enumerate_gs(t).size() == 2);
}

TEST_CASE("caterpillar votes from decisions") {
  const auto axis = Ranking::identity(4);
  // Each axis candidate takes the top (true) or bottom (false) free slot.
  CHECK(cvc_vote(axis, {true, true, true}) == Ranking{0, 1, 2, 3});
  CHECK(cvc_vote(axis, {false, false, false}) == Ranking{3, 2, 1, 0});
  CHECK(cvc_vote(axis, {false, true, true}) == Ranking{1, 2, 3, 0});
  CHECK_THROWS_AS(cvc_vote(axis, {true}), InputError);
}

TEST_CASE("single-peaked on a tree") {
  for (int m = 5; m <= 8; ++m) {
    const auto g = double_forked_tree(m);
    const auto d = enumerate_sp_tree(g);
    CHECK(as_set(d) == filter_all(m, [&](const Ranking& r) { return prefixes_connected(r, g); }));
    CHECK(d.size() == domain_size_formula(SizeFormula::SPDF, m));
  }
  // A path is the ordinary single-peaked domain.
  Graph path(5);
  for (int i = 0; i + 1 < 5; ++i) {
    path[static_cast<std::size_t>(i)].push_back(i + 1);
    path[static_cast<std::size_t>(i + 1)].push_back(i);
  }
  CHECK(as_set(enumerate_sp_tree(path)) == as_set(enumerate_sp(Ranking::identity(5))));
  Graph cycle = path;
  cycle[0].push_back(4);
  cycle[4].push_back(0);
  CHECK_THROWS_AS(enumerate_sp_tree(cycle), InputError);
}

TEST_CASE("single-crossing chains") {
  Rng rng(21);
  for (int m = 2; m <= 9; ++m) {
    const auto d = generate_sc_chain(rng, m);
    REQUIRE(d.chain);
    CHECK(d.size() == domain_size_formula(SizeFormula::SC, m));
    const auto& chain = *d.chain;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      CHECK(swap_distance(d.votes[static_cast<std::size_t>(chain[i])], d.votes[static_cast<std::size_t>(chain[i + 1])]) == 1);
    const auto first = d.votes[static_cast<std::size_t>(chain.front())];
    CHECK(d.votes[static_cast<std::size_t>(chain.back())] == reverse(first));
    CHECK_NOTHROW(validate_single_crossing(to_election(d), *to_election(d).certificate().sc_order));
  }
}

TEST_CASE("size formulas") {
  CHECK(stirling_first(4, 2) == 11);
  CHECK(stirling_first(5, 3) == 35);
  CHECK(stirling_first(8, 6) == 322);
  CHECK(domain_size_formula(SizeFormula::Euclid2D, 8) == 351);
  CHECK(domain_size_formula(SizeFormula::Euclid2D, 3) == 6);
  CHECK(domain_size_formula(SizeFormula::Euclid1D, 8) == 29);
  CHECK(domain_size_formula(SizeFormula::SPOC, 8) == 512);
  CHECK(domain_size_formula(SizeFormula::SPDF, 5) == 48);
  CHECK(domain_size_formula(SizeFormula::SP, 16) == 32768);
}

TEST_CASE("euclidean domains") {
  Rng rng(4);
  for (int m = 2; m <= 8; ++m) {
    const auto d1 = make_domain("1D", m, rng);
    CHECK(d1.size() == domain_size_formula(SizeFormula::Euclid1D, m));
    CHECK(d1.is_condorcet());
    const auto d2 = make_domain("2D", m, rng);
    CHECK(d2.size() == domain_size_formula(SizeFormula::Euclid2D, m));
    CHECK_FALSE(d2.is_condorcet());
  }
  // m points in general position in R^(m-1) realize every ranking.
  CHECK(make_domain("3D", 4, rng).size() == 24);
  // Sampled voter points never leave the enumerated 3D domain.
  const auto d3 = make_domain("3D", 7, rng);
  const auto set3 = as_set(d3);
  for (int i = 0; i < 20000; ++i) {
    const std::vector<double> x{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    if (auto r = d3.embedding->rank_point(x)) CHECK(set3.count(*r) == 1);
  }
}

TEST_CASE("reverse extension ratios") {
  Rng rng(9);
  for (int m = 5; m <= 8; ++m) {
    CHECK(reverse_extension(make_domain("GS/bal", m, rng)).second == 1.0);
    CHECK(reverse_extension(make_domain("GS/cat", m, rng)).second == 1.0);
    CHECK(reverse_extension(make_domain("SPOC", m, rng)).second == 1.0);
    CHECK(reverse_extension(make_domain("SP/DF", m, rng)).second == 2.0);
    const auto sp = reverse_extension(make_domain("SP", m, rng));
    CHECK(sp.first.label == "SP+rev");
    CHECK(sp.second == doctest::Approx(2.0 - 2.0 / static_cast<double>(1 << (m - 1))));
  }
}

TEST_CASE("make_domain names") {
  Rng rng(1);
  for (const auto& name : domain_names()) {
    const int m = 6;
    const auto d = make_domain(name, m, rng);
    CHECK(d.m == m);
    CHECK(d.label == name);
    for (const auto& v : d.votes) CHECK(v.size() == m);
  }
  CHECK_THROWS_AS(make_domain("nope", 5, rng), InputError);
}

TEST_CASE("domain to election carries certificates") {
  Rng rng(2);
  const auto sp = to_election(make_domain("SP", 5, rng));
  CHECK(sp.certificate().axis);
  CHECK(sp.voter_count() == 16);
  const auto sc = to_election(make_domain("SC", 5, rng));
  CHECK(sc.certificate().sc_order);
  const auto gs = to_election(make_domain("GS/bal", 5, rng));
  CHECK(gs.certificate().tree);
  const auto e2 = to_election(make_domain("2D", 5, rng));
  CHECK(e2.certificate().embedding);
}
