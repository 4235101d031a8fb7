#include "kdiv/reductions.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "kdiv/errors.hpp"

namespace kdiv {

void validate(const H2SInstance& inst) {
  if (inst.strings.empty()) throw InputError("H2S instance has no strings");
  const std::size_t len = inst.strings.front().size();
  if (len == 0) throw InputError("H2S strings must be nonempty");
  for (const auto& s : inst.strings) {
    if (s.size() != len) throw InputError("H2S strings must have equal length");
    if (s.find_first_not_of("01") != std::string::npos) throw InputError("H2S strings must be binary");
  }
}

std::int64_t hamming_score(std::span<const std::string> group) {
  if (group.empty()) throw InputError("hamming score of an empty group");
  const std::size_t len = group.front().size();
  std::int64_t total = 0;
  for (std::size_t j = 0; j < len; ++j) {
    std::int64_t ones = 0;
    for (const auto& s : group) {
      if (s.size() != len) throw InputError("H2S strings must have equal length");
      ones += s[j] == '1';
    }
    total += std::min<std::int64_t>(ones, static_cast<std::int64_t>(group.size()) - ones);
  }
  return total;
}

H2SSolution solve_h2s_bruteforce(const H2SInstance& inst) {
  validate(inst);
  const std::size_t n = inst.strings.size();
  if (n > 20) throw BudgetError("H2S brute force supports at most 20 strings");
  H2SSolution best;
  best.score = std::numeric_limits<std::int64_t>::max();
  std::vector<std::string> left, right;
  // The first string stays on side 0, which removes mirrored partitions.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    left.clear();
    right.clear();
    for (std::size_t i = 0; i < n; ++i) {
      const bool side = i > 0 && ((mask >> (i - 1)) & 1U);
      (side ? right : left).push_back(inst.strings[i]);
    }
    const std::int64_t score = hamming_score(left) + (right.empty() ? 0 : hamming_score(right));
    if (score < best.score) {
      best.score = score;
      best.side.assign(n, 0);
      for (std::size_t i = 1; i < n; ++i) best.side[i] = static_cast<int>((mask >> (i - 1)) & 1U);
    }
  }
  best.yes = best.score <= inst.t;
  return best;
}

ReducedInstance reduce_sp_gsbal(const H2SInstance& inst) {
  validate(inst);
  std::size_t len = 1;
  while (len < inst.strings.front().size()) len *= 2;
  const int m = static_cast<int>(2 * len);
  std::vector<Ranking> votes;
  for (auto s : inst.strings) {
    s.resize(len, '0');
    std::vector<Candidate> order;
    for (std::size_t j = 0; j < len; ++j) {
      const int a = static_cast<int>(2 * j), b = a + 1;
      if (s[j] == '1') {
        order.push_back(a);
        order.push_back(b);
      } else {
        order.push_back(b);
        order.push_back(a);
      }
    }
    votes.emplace_back(std::move(order));
  }
  std::vector<Candidate> axis;
  for (std::size_t j = len; j-- > 0;) axis.push_back(static_cast<int>(2 * j));
  for (std::size_t j = 0; j < len; ++j) axis.push_back(static_cast<int>(2 * j + 1));
  std::vector<Candidate> leaves(static_cast<std::size_t>(m));
  std::iota(leaves.begin(), leaves.end(), 0);

  Certificate cert;
  cert.axis = Ranking(std::move(axis));
  cert.tree = GSTree::balanced(leaves);
  ReducedInstance out;
  out.election = Election::from_rankings(votes, std::move(cert));
  out.q = inst.t;
  return out;
}

std::int64_t minimal_sound_dummies(std::size_t n, std::size_t m) {
  return static_cast<std::int64_t>(n * m * m) + 1;
}

ReducedInstance reduce_gscat(const H2SInstance& inst, std::optional<std::int64_t> dummies) {
  validate(inst);
  const std::size_t n = inst.strings.size();
  const std::size_t len = inst.strings.front().size();
  const std::int64_t bound = static_cast<std::int64_t>(n * len * len);
  const std::int64_t M = dummies.value_or(minimal_sound_dummies(n, len));
  if (M <= bound) {
    throw InputError("caterpillar reduction needs more than n*m^2 = " + std::to_string(bound) +
                     " dummy candidates to stay sound (got " + std::to_string(M) + ")");
  }
  if (M > 100000) throw BudgetError("caterpillar reduction: too many dummy candidates");
  const int first_dummy = static_cast<int>(2 * len);
  const int m = first_dummy + static_cast<int>(M);

  std::vector<Ranking> votes;
  for (const auto& s : inst.strings) {
    std::vector<Candidate> order;
    order.reserve(static_cast<std::size_t>(m));
    for (std::size_t j = 0; j < len; ++j) order.push_back(static_cast<int>(2 * j) + (s[j] == '1' ? 0 : 1));
    for (int x = first_dummy; x < m; ++x) order.push_back(x);
    for (std::size_t j = len; j-- > 0;) order.push_back(static_cast<int>(2 * j) + (s[j] == '1' ? 1 : 0));
    votes.emplace_back(std::move(order));
  }
  std::vector<Candidate> axis(static_cast<std::size_t>(m));
  std::iota(axis.begin(), axis.end(), 0);

  Certificate cert;
  cert.tree = GSTree::caterpillar(axis);
  ReducedInstance out;
  out.election = Election::from_rankings(votes, std::move(cert));
  out.q = 2 * M * inst.t + 2 * bound;
  out.dummies = M;
  return out;
}

}  // namespace kdiv
