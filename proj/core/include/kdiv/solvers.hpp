#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kdiv/domains.hpp"
#include "kdiv/election.hpp"
#include "kdiv/embedding.hpp"
#include "kdiv/ranking.hpp"

namespace kdiv {

struct KemenyResult {
  std::vector<Ranking> centers;
  std::int64_t score = 0;
  std::vector<int> assignment;  // per vote entry of the election
  std::string method;
  bool exact = false;
};

/// Size limits for the exact solvers. Exceeding one raises BudgetError.
struct Budgets {
  int max_exact_candidates = 20;     // subset DP over candidates
  int max_partition_votes = 15;      // distinct votes in the partition DP
  double max_subset_work = 2.5e10;   // C(|space|, k) * #distinct votes
  /// Return the Condorcet ranking when one exists instead of running the
  /// subset DP. Both give optimal scores; disable to test one against the
  /// other.
  bool condorcet_shortcut = true;
};

/// Optimal single ranking (k = 1).
KemenyResult exact_kemeny(const Election& e, const Budgets& budgets = {});

/// Optimal k-Kemeny via the partition recurrence over distinct votes.
KemenyResult solve_partition_dp(const Election& e, int k, const Budgets& budgets = {});

/// Optimal k-Kemeny for elections with a single-crossing certificate; the
/// centers are votes of the election. Throws InputError without a valid
/// certificate.
KemenyResult solve_single_crossing(const Election& e, int k);

/// Best k-subset of `space` by exhaustive search; exact relative to the
/// space. Throws BudgetError when C(|space|, k) * #distinct votes exceeds
/// the budget.
KemenyResult solve_over_space(const Election& e, int k, std::span<const Ranking> space, const Budgets& budgets = {});

/// Best k-subset of the Euclidean domain of `embedding` (d <= 3).
KemenyResult solve_embeddable(const Election& e, const Embedding& embedding, int k, const Budgets& budgets = {});

struct LocalSearchOptions {
  int restarts = 10;
  std::uint64_t seed = 0;
};

/// Best of `restarts` steepest-descent runs, each starting from k distinct
/// uniform picks of `space` and replacing one center at a time while the
/// score strictly drops. Ties go to the lowest (center slot, space index).
KemenyResult local_search(const Election& e, int k, std::span<const Ranking> space, const LocalSearchOptions& options = {});

/// Candidate centers for local search. A Condorcet domain is used as is.
/// Otherwise: the domain votes (or, without a domain, the election's
/// distinct votes), the election's votes and `extra_ic` uniform rankings,
/// sorted and deduplicated. A single-crossing election without a domain
/// uses its own votes.
std::vector<Ranking> build_search_space(const Election& e, const Domain* domain, int extra_ic = 512, std::uint64_t seed = 0);

}  // namespace kdiv
