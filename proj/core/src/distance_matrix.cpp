#include "kdiv/distance_matrix.hpp"

#include <bit>
#include <limits>

#include "kdiv/errors.hpp"

namespace kdiv {

PairSignature::PairSignature(const Ranking& r) {
  const int m = r.size();
  const auto pairs = static_cast<std::size_t>(max_swap_distance(m));
  words_.assign((pairs + 63) / 64, 0);
  const auto pos = r.positions();
  std::size_t bit = 0;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b, ++bit) {
      if (pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)]) words_[bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
  }
}

int PairSignature::distance(const PairSignature& other) const {
  int d = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) d += std::popcount(words_[i] ^ other.words_[i]);
  return d;
}

DistanceMatrix::DistanceMatrix(std::span<const Ranking> rows, std::span<const Ranking> cols)
    : rows_(rows.size()), cols_(cols.size()), data_(rows.size() * cols.size()) {
  if (rows.empty() || cols.empty()) return;
  const int m = rows.front().size();
  if (max_swap_distance(m) > std::numeric_limits<std::uint16_t>::max()) {
    throw InputError("distance matrix supports at most 362 candidates");
  }
  std::vector<PairSignature> col_sig;
  col_sig.reserve(cols.size());
  for (const auto& c : cols) {
    if (c.size() != m) throw InputError("distance matrix: ranking length mismatch");
    col_sig.emplace_back(c);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m) throw InputError("distance matrix: ranking length mismatch");
    const PairSignature sig(rows[r]);
    auto* out = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols.size(); ++c) out[c] = static_cast<std::uint16_t>(sig.distance(col_sig[c]));
  }
}

}  // namespace kdiv
