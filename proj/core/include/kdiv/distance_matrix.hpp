#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kdiv/ranking.hpp"

namespace kdiv {

/// Dense rows x cols table of swap distances, row-major, 16-bit entries.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  /// Throws InputError if the rankings differ in length or m(m-1)/2 does not
  /// fit in 16 bits.
  DistanceMatrix(std::span<const Ranking> rows, std::span<const Ranking> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint16_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const std::uint16_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint16_t> data_;
};

/// Each ranking as a bitset over candidate pairs (a < b), bit set when a is
/// ranked above b. Swap distance is the popcount of the xor.
class PairSignature {
 public:
  explicit PairSignature(const Ranking& r);
  int distance(const PairSignature& other) const;

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace kdiv
