#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kdiv/embedding.hpp"
#include "kdiv/gs_tree.hpp"
#include "kdiv/ranking.hpp"

namespace kdiv {

struct Vote {
  Ranking ranking;
  std::int64_t multiplicity = 1;
  bool operator==(const Vote&) const = default;
};

/// Structural witnesses an election may carry. Any subset may be present.
struct Certificate {
  std::optional<Ranking> axis;                   // single-peaked axis
  std::optional<GSTree> tree;                    // group-separable tree
  std::optional<std::vector<int>> sc_order;      // vote indices in single-crossing order
  std::optional<Embedding> embedding;            // Euclidean candidate points

  bool empty() const { return !axis && !tree && !sc_order && !embedding; }
  bool operator==(const Certificate&) const = default;
};

/// m candidates and a list of (ranking, multiplicity) votes.
class Election {
 public:
  Election() = default;
  /// Throws InputError if a vote has the wrong length, a multiplicity is
  /// below 1, there are no votes, or the certificate does not fit m.
  Election(int m, std::vector<Vote> votes, Certificate certificate = {});

  /// One vote of multiplicity 1 per ranking, in the given order.
  static Election from_rankings(std::span<const Ranking> rankings, Certificate certificate = {});

  int candidate_count() const { return m_; }
  /// Total voter count, i.e. the sum of multiplicities.
  std::int64_t voter_count() const { return n_; }
  const std::vector<Vote>& votes() const { return votes_; }
  const Certificate& certificate() const { return certificate_; }

  Election with_certificate(Certificate certificate) const;

  /// Identical rankings merged; first-occurrence order kept. Drops any
  /// sc_order certificate since vote indices change.
  Election merged() const;

  bool operator==(const Election&) const = default;

 private:
  int m_ = 0;
  std::int64_t n_ = 0;
  std::vector<Vote> votes_;
  Certificate certificate_;
};

/// w(a, b) = number of voters ranking a above b.
class WeightedTournament {
 public:
  explicit WeightedTournament(int m = 0) : m_(m), w_(static_cast<std::size_t>(m) * m, 0) {}

  int candidate_count() const { return m_; }
  std::int64_t operator()(Candidate a, Candidate b) const { return w_[index(a, b)]; }
  std::int64_t& at(Candidate a, Candidate b) { return w_[index(a, b)]; }

  void add(const Ranking& vote, std::int64_t multiplicity);

  /// Lower bound on any Kemeny score: sum over pairs of the minority weight.
  std::int64_t pairwise_lower_bound() const;

 private:
  std::size_t index(Candidate a, Candidate b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(b);
  }
  int m_;
  std::vector<std::int64_t> w_;
};

WeightedTournament tournament(const Election& e);

/// Sum over voters of swap(v, r).
std::int64_t kemeny_score(const Election& e, const Ranking& r);

/// Kemeny score read off a tournament: pairs where r disagrees with voters.
std::int64_t kemeny_score(const WeightedTournament& w, const Ranking& r);

struct KKemenyEvaluation {
  std::int64_t score = 0;
  std::vector<int> assignment;  // per vote entry: index of a nearest center
};

/// Sum over voters of the distance to the nearest center; ties go to the
/// lowest center index. Throws InputError on an empty center set.
KKemenyEvaluation k_kemeny_score(const Election& e, std::span<const Ranking> centers);

/// A ranking r such that r: a > b implies w(a, b) >= w(b, a), if one
/// exists. Found as the index-smallest topological order of the strict
/// majority relation.
std::optional<Ranking> condorcet_ranking(const WeightedTournament& w);
std::optional<Ranking> condorcet_ranking(const Election& e);

/// Validates that `order` lists every vote index once and every candidate
/// pair flips at most once along it; throws InputError naming the
/// violating pair otherwise.
void validate_single_crossing(const Election& e, std::span<const int> order);

/// Membership checks used throughout the library and tests.
bool is_single_peaked(const Ranking& vote, const Ranking& axis);
/// Every prefix is an arc of the cyclic order `cycle`.
bool is_single_peaked_on_circle(const Ranking& vote, const Ranking& cycle);
/// Every prefix induces a connected subgraph of the graph `adjacency`.
bool is_single_peaked_on_graph(const Ranking& vote, const std::vector<std::vector<int>>& adjacency);
/// Caterpillar vote construction along `axis`: each candidate in axis order
/// occupies the highest or lowest free position.
bool is_caterpillar_consistent(const Ranking& vote, const Ranking& axis);

}  // namespace kdiv
