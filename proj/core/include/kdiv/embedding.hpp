#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kdiv/ranking.hpp"
#include "kdiv/rng.hpp"

namespace kdiv {

/// Candidate points in R^d.
class Embedding {
 public:
  Embedding() = default;
  /// points[c] is the location of candidate c; all of length d >= 1.
  explicit Embedding(std::vector<std::vector<double>> points);

  /// m points uniform in [-1, 1]^d.
  static Embedding uniform_cube(int m, int d, Rng& rng);

  int dimension() const { return dimension_; }
  int candidate_count() const { return static_cast<int>(points_.size()); }
  std::span<const double> point(Candidate c) const { return points_[static_cast<std::size_t>(c)]; }
  const std::vector<std::vector<double>>& points() const { return points_; }

  /// Result of the pairwise-distinct-bisector check run at construction.
  bool general_position() const { return general_position_; }

  /// Ranking of a voter at `x` (nearest candidate first); empty when x lies
  /// on a bisector within round-off.
  std::optional<Ranking> rank_point(std::span<const double> x) const;

  /// Largest absolute coordinate over all candidates (at least 1e-12).
  double spread() const;

  bool operator==(const Embedding&) const = default;

 private:
  std::vector<std::vector<double>> points_;
  int dimension_ = 0;
  bool general_position_ = false;
};

}  // namespace kdiv
