#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace kdiv {

/// Dense candidate index in [0, m).
using Candidate = int;

/// A strict ranking of m candidates; position 0 is the most preferred.
class Ranking {
 public:
  Ranking() = default;

  /// Throws InputError unless `order` is a permutation of [0, m), m >= 1.
  explicit Ranking(std::vector<Candidate> order);
  Ranking(std::initializer_list<Candidate> order)
      : Ranking(std::vector<Candidate>(order)) {}

  static Ranking identity(int m);

  int size() const { return static_cast<int>(order_.size()); }
  Candidate operator[](int position) const { return order_[static_cast<std::size_t>(position)]; }
  std::span<const Candidate> order() const { return order_; }
  auto begin() const { return order_.begin(); }
  auto end() const { return order_.end(); }

  /// positions()[c] is the position of candidate c.
  std::vector<int> positions() const;

  /// True if the ranking places a above b.
  bool prefers(Candidate a, Candidate b) const;

  auto operator<=>(const Ranking&) const = default;
  bool operator==(const Ranking&) const = default;

 private:
  std::vector<Candidate> order_;
};

/// Number of candidate pairs ordered differently by u and v, in O(m log m).
/// Throws InputError on a length mismatch.
std::int64_t swap_distance(const Ranking& u, const Ranking& v);

/// r read bottom-to-top.
Ranking reverse(const Ranking& r);

/// Max swap distance between rankings of m candidates: m(m-1)/2.
constexpr std::int64_t max_swap_distance(int m) {
  return static_cast<std::int64_t>(m) * (m - 1) / 2;
}

/// "0>2>1" style, 0-based.
std::string to_string(const Ranking& r);

/// All m! rankings in lexicographic order.
std::vector<Ranking> all_rankings(int m);

/// Sorts lexicographically and removes duplicates.
void sort_unique(std::vector<Ranking>& rankings);

struct RankingHash {
  std::size_t operator()(const Ranking& r) const noexcept;
};

}  // namespace kdiv
