#include <algorithm>
#include <limits>
#include <numeric>

#include "kdiv/distance_matrix.hpp"
#include "kdiv/errors.hpp"
#include "kdiv/rng.hpp"
#include "kdiv/solvers.hpp"

namespace kdiv {

namespace {

struct Descent {
  const DistanceMatrix& dm;
  const std::vector<std::int64_t>& mult;
  std::size_t k;

  std::vector<std::size_t> centers;
  std::vector<std::int32_t> best, second;
  std::vector<std::uint32_t> slot;
  std::int64_t score = 0;

  void refresh() {
    const std::size_t nv = dm.cols();
    best.assign(nv, std::numeric_limits<std::int32_t>::max());
    second.assign(nv, std::numeric_limits<std::int32_t>::max());
    slot.assign(nv, 0);
    for (std::size_t j = 0; j < k; ++j) {
      const auto row = dm.row(centers[j]);
      for (std::size_t v = 0; v < nv; ++v) {
        const std::int32_t d = row[v];
        if (d < best[v]) {
          second[v] = best[v];
          best[v] = d;
          slot[v] = static_cast<std::uint32_t>(j);
        } else if (d < second[v]) {
          second[v] = d;
        }
      }
    }
    score = 0;
    for (std::size_t v = 0; v < nv; ++v) score += mult[v] * best[v];
  }

  // Replacing slot j by c costs sum min(base_j, d_c) where base_j is best
  // except for votes served by j, which fall back to second. Split as a
  // common term plus a per-slot correction so one pass serves all slots.
  bool improve() {
    const std::size_t nv = dm.cols();
    std::vector<std::int64_t> corr(k);
    std::int64_t best_score = score;
    std::size_t best_slot = 0, best_c = 0;
    bool found = false;
    for (std::size_t c = 0; c < dm.rows(); ++c) {
      if (std::find(centers.begin(), centers.end(), c) != centers.end()) continue;
      const auto row = dm.row(c);
      std::fill(corr.begin(), corr.end(), 0);
      std::int64_t common = 0;
      for (std::size_t v = 0; v < nv; ++v) {
        const std::int32_t d = row[v];
        const std::int32_t with_best = std::min(best[v], d);
        const std::int32_t with_second = std::min(second[v], d);
        common += mult[v] * with_best;
        corr[slot[v]] += mult[v] * (with_second - with_best);
      }
      for (std::size_t j = 0; j < k; ++j) {
        const std::int64_t s = common + corr[j];
        if (s < best_score || (found && s == best_score && j < best_slot)) {
          best_score = s;
          best_slot = j;
          best_c = c;
          found = true;
        }
      }
    }
    if (!found) return false;
    centers[best_slot] = best_c;
    refresh();
    return true;
  }
};

}  // namespace

KemenyResult local_search(const Election& e, int k, std::span<const Ranking> space, const LocalSearchOptions& options) {
  if (k < 1) throw InputError("k must be at least 1");
  if (space.empty()) throw InputError("search space is empty");
  if (options.restarts < 1) throw InputError("local search needs at least one restart");

  const Election merged = e.merged();
  std::vector<Ranking> cols;
  std::vector<std::int64_t> mult;
  for (const auto& v : merged.votes()) {
    cols.push_back(v.ranking);
    mult.push_back(v.multiplicity);
  }
  const DistanceMatrix dm(space, cols);
  const std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), space.size());

  std::vector<std::size_t> best_centers;
  std::int64_t best_score = std::numeric_limits<std::int64_t>::max();
  std::vector<std::size_t> pool(space.size());
  for (int restart = 0; restart < options.restarts; ++restart) {
    Rng rng = Rng::stream(options.seed, static_cast<std::uint64_t>(restart));
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < kk; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);

    Descent run{dm, mult, kk, {pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(kk)}, {}, {}, {}, 0};
    run.refresh();
    while (run.improve()) {
    }
    if (run.score < best_score) {
      best_score = run.score;
      best_centers = run.centers;
    }
    if (best_score == 0) break;
  }

  std::vector<Ranking> centers;
  for (std::size_t c : best_centers) centers.push_back(space[c]);
  auto eval = k_kemeny_score(e, centers);
  KemenyResult r;
  r.centers = std::move(centers);
  r.score = eval.score;
  r.assignment = std::move(eval.assignment);
  r.method = "local-search";
  r.exact = false;
  return r;
}

std::vector<Ranking> build_search_space(const Election& e, const Domain* domain, int extra_ic, std::uint64_t seed) {
  if (extra_ic < 0) throw InputError("extra_ic must be nonnegative");
  if (domain && domain->m != e.candidate_count()) throw InputError("domain does not match the election's candidates");
  if (domain && domain->is_condorcet()) return domain->votes;

  std::vector<Ranking> space;
  if (domain) space = domain->votes;
  for (const auto& v : e.votes()) space.push_back(v.ranking);
  if (!domain && e.certificate().sc_order) {
    sort_unique(space);
    return space;
  }
  const int m = e.candidate_count();
  Rng rng(seed);
  std::vector<Candidate> order(static_cast<std::size_t>(m));
  for (int i = 0; i < extra_ic; ++i) {
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span<Candidate>(order));
    space.emplace_back(order);
  }
  sort_unique(space);
  return space;
}

}  // namespace kdiv
