#include <doctest.h>

#include <set>

#include "kdiv/arrangement.hpp"
#include "kdiv/election.hpp"
#include "kdiv/embedding.hpp"
#include "kdiv/errors.hpp"
#include "kdiv/gs_tree.hpp"
#include "oracles.hpp"

using namespace kdiv;

TEST_CASE("swap distance matches pair counting") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng.below(12));
    const auto u = oracle::random_ranking(m, rng);
    const auto v = oracle::random_ranking(m, rng);
    CHECK(swap_distance(u, v) == oracle::swaps(u, v));
    CHECK(swap_distance(u, v) == swap_distance(v, u));
    CHECK(swap_distance(u, reverse(u)) == max_swap_distance(m));
  }
  CHECK(swap_distance(Ranking{0, 1, 2}, Ranking{2, 1, 0}) == 3);
  CHECK(swap_distance(Ranking{0, 1, 2}, Ranking{1, 0, 2}) == 1);
}

TEST_CASE("ranking validation") {
  CHECK_THROWS_AS(Ranking({0, 0, 1}), InputError);
  CHECK_THROWS_AS(Ranking({1, 2, 3}), InputError);
  CHECK_THROWS_AS(Ranking(std::vector<int>{}), InputError);
  CHECK(to_string(Ranking{2, 0, 1}) == "2>0>1");
  CHECK(all_rankings(4).size() == 24);
  const auto p = Ranking{2, 0, 1}.positions();
  CHECK(p == std::vector<int>{1, 2, 0});
}

TEST_CASE("election merges and counts voters") {
  const Election e(3, {{Ranking{0, 1, 2}, 2}, {Ranking{2, 1, 0}, 1}, {Ranking{0, 1, 2}, 4}});
  CHECK(e.voter_count() == 7);
  const auto merged = e.merged();
  REQUIRE(merged.votes().size() == 2);
  CHECK(merged.votes()[0].multiplicity == 6);
  CHECK_THROWS_AS(Election(3, {{Ranking{0, 1}, 1}}), InputError);
  CHECK_THROWS_AS(Election(2, {{Ranking{0, 1}, 0}}), InputError);
}

TEST_CASE("kemeny score and tournament agree with the definition") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto e = oracle::random_election(5, 7, rng);
    const auto r = oracle::random_ranking(5, rng);
    CHECK(kemeny_score(e, r) == oracle::cost(e, r));
    CHECK(kemeny_score(tournament(e), r) == oracle::cost(e, r));
    CHECK(tournament(e).pairwise_lower_bound() <= oracle::kemeny(e));
  }
}

TEST_CASE("k-kemeny evaluation assigns nearest centers") {
  Rng rng(5);
  const auto e = oracle::random_election(6, 9, rng);
  const std::vector<Ranking> centers{oracle::random_ranking(6, rng), oracle::random_ranking(6, rng)};
  const auto eval = k_kemeny_score(e, centers);
  CHECK(eval.score == oracle::cost(e, centers));
  for (std::size_t i = 0; i < e.votes().size(); ++i) {
    const auto& v = e.votes()[i].ranking;
    const auto mine = swap_distance(v, centers[static_cast<std::size_t>(eval.assignment[i])]);
    CHECK(mine == std::min(swap_distance(v, centers[0]), swap_distance(v, centers[1])));
  }
}

TEST_CASE("condorcet ranking") {
  // abc x2, cba x1: a beats b, b beats c, a beats c.
  const Election e(3, {{Ranking{0, 1, 2}, 2}, {Ranking{2, 1, 0}, 1}});
  const auto c = condorcet_ranking(e);
  REQUIRE(c);
  CHECK(*c == Ranking{0, 1, 2});
  // Cyclic profile has none.
  const Election cyc(3, {{Ranking{0, 1, 2}, 1}, {Ranking{1, 2, 0}, 1}, {Ranking{2, 0, 1}, 1}});
  CHECK_FALSE(condorcet_ranking(cyc));
}

TEST_CASE("single-crossing validation names the violating pair") {
  const auto e = Election::from_rankings(std::vector<Ranking>{{0, 1, 2}, {1, 0, 2}, {0, 1, 2}});
  const std::vector<int> order{0, 1, 2};
  CHECK_THROWS_WITH_AS(validate_single_crossing(e, order), doctest::Contains("candidates 0 and 1"), InputError);
  const auto ok = Election::from_rankings(std::vector<Ranking>{{0, 1, 2}, {1, 0, 2}, {1, 2, 0}, {2, 1, 0}});
  const std::vector<int> chain{0, 1, 2, 3};
  CHECK_NOTHROW(validate_single_crossing(ok, chain));
}

TEST_CASE("single-peaked check on small cases") {
  const auto axis = Ranking::identity(4);
  CHECK(is_single_peaked(Ranking{1, 2, 0, 3}, axis));
  CHECK(is_single_peaked(Ranking{3, 2, 1, 0}, axis));
  CHECK_FALSE(is_single_peaked(Ranking{0, 3, 1, 2}, axis));
  CHECK_FALSE(is_single_peaked(Ranking{1, 3, 2, 0}, axis));
}

TEST_CASE("gs tree parse and print round-trip") {
  const auto t = GSTree::parse("((0 1) (2 (3 4)))");
  CHECK(t.candidate_count() == 5);
  CHECK(t.to_string() == "((0 1) (2 (3 4)))");
  CHECK(GSTree::parse(t.to_string(true), true) == t);
  CHECK(t.frontier() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(GSTree::parse("((0 1) 1)"), InputError);
  CHECK_THROWS_AS(GSTree::parse("((0 1)"), InputError);
  // Each internal node's leaf set is contiguous in the vote.
  CHECK(t.is_consistent(Ranking{2, 3, 4, 0, 1}));
  CHECK(t.is_consistent(Ranking{1, 0, 4, 3, 2}));
  CHECK_FALSE(t.is_consistent(Ranking{0, 2, 1, 3, 4}));
  CHECK_FALSE(t.is_consistent(Ranking{2, 3, 0, 1, 4}));
}

TEST_CASE("embedding ranks by distance") {
  const Embedding emb({{0.0}, {1.0}, {3.0}});
  const std::vector<double> x{0.9};
  const auto r = emb.rank_point(x);
  REQUIRE(r);
  CHECK(*r == Ranking{1, 0, 2});
  const std::vector<double> tie{0.5};
  CHECK_FALSE(emb.rank_point(tie));
  CHECK(emb.general_position());
  // 0|4 and 1|3 share the bisector x = 2.
  CHECK_FALSE(Embedding({{0.0}, {1.0}, {3.0}, {4.0}}).general_position());
}

TEST_CASE("arrangement cells equal a dense grid scan in 2D") {
  Rng rng(8);
  const auto emb = Embedding::uniform_cube(5, 2, rng);
  const auto cells = arrangement_rankings(emb);
  std::set<Ranking> found(cells.begin(), cells.end());
  CHECK(found.size() == cells.size());
  // Every ranking seen on a fine grid must be a cell.
  std::set<Ranking> grid;
  for (int i = -300; i <= 300; ++i) {
    for (int j = -300; j <= 300; ++j) {
      const std::vector<double> x{i / 30.0, j / 30.0};
      if (auto r = emb.rank_point(x)) grid.insert(*r);
    }
  }
  for (const auto& r : grid) CHECK(found.count(r) == 1);
}
