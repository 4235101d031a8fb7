#include "kdiv/ranking.hpp"

#include <algorithm>
#include <numeric>

#include "kdiv/errors.hpp"

namespace kdiv {

Ranking::Ranking(std::vector<Candidate> order) : order_(std::move(order)) {
  if (order_.empty()) throw InputError("ranking must contain at least one candidate");
  std::vector<char> seen(order_.size(), 0);
  for (Candidate c : order_) {
    if (c < 0 || static_cast<std::size_t>(c) >= order_.size() || seen[static_cast<std::size_t>(c)]) {
      throw InputError("ranking is not a permutation of [0, " + std::to_string(order_.size()) + ")");
    }
    seen[static_cast<std::size_t>(c)] = 1;
  }
}

Ranking Ranking::identity(int m) {
  std::vector<Candidate> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  return Ranking(std::move(order));
}

std::vector<int> Ranking::positions() const {
  std::vector<int> pos(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) pos[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
  return pos;
}

bool Ranking::prefers(Candidate a, Candidate b) const {
  for (Candidate c : order_) {
    if (c == a) return true;
    if (c == b) return false;
  }
  return false;
}

namespace {

std::int64_t count_inversions(std::vector<int>& values, std::vector<int>& scratch, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t inversions = count_inversions(values, scratch, lo, mid) + count_inversions(values, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (values[i] <= values[j]) {
      scratch[k++] = values[i++];
    } else {
      inversions += static_cast<std::int64_t>(mid - i);
      scratch[k++] = values[j++];
    }
  }
  while (i < mid) scratch[k++] = values[i++];
  while (j < hi) scratch[k++] = values[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo), scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            values.begin() + static_cast<std::ptrdiff_t>(lo));
  return inversions;
}

}  // namespace

std::int64_t swap_distance(const Ranking& u, const Ranking& v) {
  if (u.size() != v.size()) {
    throw InputError("swap_distance: rankings have " + std::to_string(u.size()) + " and " +
                     std::to_string(v.size()) + " candidates");
  }
  // Relabel v's order by positions in u, then count inversions.
  const auto pos_u = u.positions();
  std::vector<int> seq(static_cast<std::size_t>(v.size()));
  for (int i = 0; i < v.size(); ++i) seq[static_cast<std::size_t>(i)] = pos_u[static_cast<std::size_t>(v[i])];
  std::vector<int> scratch(seq.size());
  return count_inversions(seq, scratch, 0, seq.size());
}

Ranking reverse(const Ranking& r) {
  std::vector<Candidate> order(r.begin(), r.end());
  std::reverse(order.begin(), order.end());
  return Ranking(std::move(order));
}

std::string to_string(const Ranking& r) {
  std::string out;
  for (int i = 0; i < r.size(); ++i) {
    if (i) out += '>';
    out += std::to_string(r[i]);
  }
  return out;
}

std::vector<Ranking> all_rankings(int m) {
  std::vector<Candidate> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::vector<Ranking> out;
  do {
    out.emplace_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

void sort_unique(std::vector<Ranking>& rankings) {
  std::sort(rankings.begin(), rankings.end());
  rankings.erase(std::unique(rankings.begin(), rankings.end()), rankings.end());
}

std::size_t RankingHash::operator()(const Ranking& r) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Candidate c : r) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace kdiv
