#include "kdiv/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "kdiv/arrangement.hpp"
#include "kdiv/distance_matrix.hpp"
#include "kdiv/errors.hpp"

namespace kdiv {

namespace {

KemenyResult finish(const Election& e, std::vector<Ranking> centers, std::string method, bool exact,
                    std::optional<std::int64_t> expected = {}) {
  auto eval = k_kemeny_score(e, centers);
  if (expected && *expected != eval.score) {
    throw std::logic_error(method + ": internal score " + std::to_string(*expected) + " differs from recomputed " +
                           std::to_string(eval.score));
  }
  KemenyResult r;
  r.centers = std::move(centers);
  r.score = eval.score;
  r.assignment = std::move(eval.assignment);
  r.method = std::move(method);
  r.exact = exact;
  return r;
}

// Optimal ranking for a tournament by DP over the set of already placed
// (top) candidates.
std::pair<Ranking, std::int64_t> subset_dp(const WeightedTournament& w, const Budgets& budgets) {
  const int m = w.candidate_count();
  if (m > budgets.max_exact_candidates) {
    throw BudgetError("exact Kemeny needs m <= " + std::to_string(budgets.max_exact_candidates) + " (got m=" +
                      std::to_string(m) + ")");
  }
  const std::size_t full = (std::size_t{1} << m) - 1;
  std::vector<std::int64_t> best(full + 1, std::numeric_limits<std::int64_t>::max());
  std::vector<std::uint8_t> last(full + 1, 0);
  std::vector<std::int64_t> beaten_by(static_cast<std::size_t>(m), 0);  // sum over d of w(d, c)
  for (int c = 0; c < m; ++c) {
    for (int d = 0; d < m; ++d) {
      if (d != c) beaten_by[static_cast<std::size_t>(c)] += w(d, c);
    }
  }
  best[0] = 0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (int c = 0; c < m; ++c) {
      if (!((mask >> c) & 1U)) continue;
      // c goes directly below mask \ {c}; it is ranked above everyone outside.
      std::int64_t against = beaten_by[static_cast<std::size_t>(c)];
      for (int d = 0; d < m; ++d) {
        if (d != c && ((mask >> d) & 1U)) against -= w(d, c);
      }
      const std::int64_t cost = best[mask ^ (std::size_t{1} << c)] + against;
      if (cost < best[mask]) {
        best[mask] = cost;
        last[mask] = static_cast<std::uint8_t>(c);
      }
    }
  }
  std::vector<Candidate> order(static_cast<std::size_t>(m));
  std::size_t mask = full;
  for (int pos = m - 1; pos >= 0; --pos) {
    order[static_cast<std::size_t>(pos)] = last[mask];
    mask ^= std::size_t{1} << last[mask];
  }
  return {Ranking(std::move(order)), best[full]};
}

std::pair<Ranking, std::int64_t> best_single(const WeightedTournament& w, const Budgets& budgets) {
  if (budgets.condorcet_shortcut) {
    if (auto r = condorcet_ranking(w)) return {std::move(*r), w.pairwise_lower_bound()};
  }
  return subset_dp(w, budgets);
}

// Score of the best single ranking; avoids building the ranking when a
// Condorcet ranking exists.
std::int64_t best_single_score(const WeightedTournament& w, const Budgets& budgets) {
  if (budgets.condorcet_shortcut && condorcet_ranking(w)) return w.pairwise_lower_bound();
  return subset_dp(w, budgets).second;
}

double choose(std::size_t n, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return 0;
  double r = 1;
  for (int i = 0; i < k; ++i) r = r * static_cast<double>(n - static_cast<std::size_t>(i)) / (i + 1);
  return r;
}

void check_k(int k) {
  if (k < 1) throw InputError("k must be at least 1");
}

std::vector<Ranking> distinct_rankings(const Election& e) {
  const Election merged = e.merged();
  std::vector<Ranking> out;
  for (const auto& v : merged.votes()) out.push_back(v.ranking);
  return out;
}

}  // namespace

KemenyResult exact_kemeny(const Election& e, const Budgets& budgets) {
  const auto w = tournament(e);
  if (budgets.condorcet_shortcut) {
    if (auto r = condorcet_ranking(w)) return finish(e, {std::move(*r)}, "condorcet", true, w.pairwise_lower_bound());
  }
  auto [r, score] = subset_dp(w, budgets);
  return finish(e, {std::move(r)}, "exact", true, score);
}

KemenyResult solve_partition_dp(const Election& e, int k, const Budgets& budgets) {
  check_k(k);
  const Election merged = e.merged();
  const auto& votes = merged.votes();
  const int p = static_cast<int>(votes.size());
  if (k >= p) return finish(e, distinct_rankings(e), "partition-dp", true, 0);
  if (k == 1) {
    auto r = exact_kemeny(e, budgets);
    return finish(e, std::move(r.centers), "partition-dp", true, r.score);
  }
  if (p > budgets.max_partition_votes) {
    throw BudgetError("partition DP needs at most " + std::to_string(budgets.max_partition_votes) +
                      " distinct votes (got " + std::to_string(p) + ")");
  }
  const int m = e.candidate_count();
  const std::size_t full = (std::size_t{1} << p) - 1;

  // f1[W]: 1-Kemeny score of the votes in W, with a running tournament
  // maintained along a depth-first walk over subsets.
  std::vector<std::int64_t> f1(full + 1, 0);
  WeightedTournament running(m);
  std::vector<std::vector<int>> positions;
  for (const auto& v : votes) positions.push_back(v.ranking.positions());
  auto apply = [&](int i, std::int64_t sign) {
    const auto& pos = positions[static_cast<std::size_t>(i)];
    const std::int64_t mult = sign * votes[static_cast<std::size_t>(i)].multiplicity;
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a != b && pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)]) running.at(a, b) += mult;
      }
    }
  };
  std::function<void(int, std::size_t)> walk = [&](int i, std::size_t mask) {
    if (i == p) {
      if (mask != 0) f1[mask] = best_single_score(running, budgets);
      return;
    }
    walk(i + 1, mask);
    apply(i, 1);
    walk(i + 1, mask | (std::size_t{1} << i));
    apply(i, -1);
  };
  walk(0, 0);

  // f_t(S) = min over W containing the lowest vote of S of f1(W) + f_{t-1}(S \ W).
  std::vector<std::vector<std::uint32_t>> pick(static_cast<std::size_t>(k + 1));
  std::vector<std::int64_t> prev = f1;
  for (int t = 2; t <= k; ++t) {
    std::vector<std::int64_t> cur(full + 1, 0);
    auto& choice = pick[static_cast<std::size_t>(t)];
    choice.assign(full + 1, 0);
    for (std::size_t s = 1; s <= full; ++s) {
      const std::size_t low = s & (~s + 1);
      const std::size_t rest = s ^ low;
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      std::size_t best_w = s;
      for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
        const std::size_t wmask = sub | low;
        const std::int64_t v = f1[wmask] + (wmask == s ? 0 : prev[s ^ wmask]);
        if (v < best) {
          best = v;
          best_w = wmask;
        }
        if (sub == 0) break;
      }
      cur[s] = best;
      choice[s] = static_cast<std::uint32_t>(best_w);
    }
    prev = std::move(cur);
  }

  std::vector<Ranking> centers;
  std::size_t s = full;
  for (int t = k; s != 0; --t) {
    const std::size_t group = t >= 2 ? pick[static_cast<std::size_t>(t)][s] : s;
    WeightedTournament w(m);
    for (int i = 0; i < p; ++i) {
      if ((group >> i) & 1U) w.add(votes[static_cast<std::size_t>(i)].ranking, votes[static_cast<std::size_t>(i)].multiplicity);
    }
    centers.push_back(best_single(w, budgets).first);
    s ^= group;
  }
  return finish(e, std::move(centers), "partition-dp", true, prev[full]);
}

KemenyResult solve_single_crossing(const Election& e, int k) {
  check_k(k);
  const auto& cert = e.certificate().sc_order;
  if (!cert) throw InputError("single-crossing solver needs a single-crossing order certificate");
  validate_single_crossing(e, *cert);
  const auto& votes = e.votes();
  const std::size_t n = cert->size();

  std::vector<std::int64_t> d(n, 0);   // distance from the first vote along the order
  std::vector<std::int64_t> wt(n + 1, 0), wd(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = votes[static_cast<std::size_t>((*cert)[i])];
    if (i > 0) d[i] = d[i - 1] + swap_distance(votes[static_cast<std::size_t>((*cert)[i - 1])].ranking, v.ranking);
    wt[i + 1] = wt[i] + v.multiplicity;
    wd[i + 1] = wd[i] + v.multiplicity * d[i];
  }
  // Weighted median of [a, b] and the cluster cost around it.
  auto median = [&](std::size_t a, std::size_t b) {
    const std::int64_t total = wt[b + 1] - wt[a];
    const auto it = std::lower_bound(wt.begin() + static_cast<std::ptrdiff_t>(a + 1), wt.begin() + static_cast<std::ptrdiff_t>(b + 2),
                                     wt[a] + (total + 1) / 2);
    return static_cast<std::size_t>(it - wt.begin()) - 1;
  };
  auto cost = [&](std::size_t a, std::size_t b) {
    const std::size_t med = median(a, b);
    const std::int64_t left_w = wt[med + 1] - wt[a], left_d = wd[med + 1] - wd[a];
    const std::int64_t right_w = wt[b + 1] - wt[med + 1], right_d = wd[b + 1] - wd[med + 1];
    return d[med] * left_w - left_d + right_d - d[med] * right_w;
  };

  const std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), n);
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  // g[j][i]: best cost of the first i votes in j clusters.
  std::vector<std::vector<std::int64_t>> g(kk + 1, std::vector<std::int64_t>(n + 1, inf));
  std::vector<std::vector<std::size_t>> split(kk + 1, std::vector<std::size_t>(n + 1, 0));
  g[0][0] = 0;
  for (std::size_t j = 1; j <= kk; ++j) {
    for (std::size_t i = j; i <= n; ++i) {
      for (std::size_t s = j - 1; s < i; ++s) {
        if (g[j - 1][s] >= inf) continue;
        const std::int64_t v = g[j - 1][s] + cost(s, i - 1);
        if (v < g[j][i]) {
          g[j][i] = v;
          split[j][i] = s;
        }
      }
    }
  }
  std::size_t best_j = 1;
  for (std::size_t j = 1; j <= kk; ++j) {
    if (g[j][n] < g[best_j][n]) best_j = j;
  }
  std::vector<Ranking> centers;
  for (std::size_t j = best_j, i = n; j > 0; --j) {
    const std::size_t s = split[j][i];
    centers.push_back(votes[static_cast<std::size_t>((*cert)[median(s, i - 1)])].ranking);
    i = s;
  }
  std::reverse(centers.begin(), centers.end());
  return finish(e, std::move(centers), "single-crossing", true, g[best_j][n]);
}

KemenyResult solve_over_space(const Election& e, int k, std::span<const Ranking> space, const Budgets& budgets) {
  check_k(k);
  if (space.empty()) throw InputError("search space is empty");
  if (static_cast<std::size_t>(k) >= space.size()) {
    return finish(e, {space.begin(), space.end()}, "subset-search", true);
  }
  const Election merged = e.merged();
  const auto& votes = merged.votes();
  const double work = choose(space.size(), k) * static_cast<double>(votes.size());
  if (work > budgets.max_subset_work) {
    throw BudgetError("exhaustive search over C(" + std::to_string(space.size()) + ", " + std::to_string(k) +
                      ") center sets x " + std::to_string(votes.size()) + " votes exceeds the work budget");
  }
  std::vector<Ranking> cols;
  std::vector<std::int64_t> mult;
  bool unit = true;
  for (const auto& v : votes) {
    cols.push_back(v.ranking);
    mult.push_back(v.multiplicity);
    unit = unit && v.multiplicity == 1;
  }
  const DistanceMatrix dm(space, cols);
  const std::size_t nv = cols.size();

  std::vector<std::vector<std::uint16_t>> cur(static_cast<std::size_t>(k) + 1, std::vector<std::uint16_t>(nv, 0xffff));
  std::vector<std::size_t> chosen(static_cast<std::size_t>(k)), best_set;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();

  std::function<void(int, std::size_t)> rec = [&](int depth, std::size_t from) {
    const auto& above = cur[static_cast<std::size_t>(depth)];
    const std::size_t last_from = space.size() - static_cast<std::size_t>(k - depth);
    for (std::size_t c = from; c <= last_from; ++c) {
      const auto row = dm.row(c);
      chosen[static_cast<std::size_t>(depth)] = c;
      if (depth + 1 == k) {
        std::int64_t total = 0;
        if (unit) {
          std::uint32_t acc = 0;
          for (std::size_t v = 0; v < nv; ++v) acc += std::min(above[v], row[v]);
          total = acc;
        } else {
          for (std::size_t v = 0; v < nv; ++v) total += mult[v] * std::min(above[v], row[v]);
        }
        if (total < best) {
          best = total;
          best_set = chosen;
        }
      } else {
        auto& below = cur[static_cast<std::size_t>(depth) + 1];
        for (std::size_t v = 0; v < nv; ++v) below[v] = std::min(above[v], row[v]);
        rec(depth + 1, c + 1);
      }
    }
  };
  rec(0, 0);

  std::vector<Ranking> centers;
  for (std::size_t c : best_set) centers.push_back(space[c]);
  return finish(e, std::move(centers), "subset-search", true, best);
}

KemenyResult solve_embeddable(const Election& e, const Embedding& embedding, int k, const Budgets& budgets) {
  if (embedding.candidate_count() != e.candidate_count()) throw InputError("embedding does not match the election's candidates");
  if (embedding.dimension() > 3) throw InputError("embeddable solver supports d <= 3");
  const Domain domain = enumerate_euclidean(embedding);
  auto r = solve_over_space(e, k, domain.votes, budgets);
  r.method = "embeddable";
  return r;
}

}  // namespace kdiv
