#pragma once

#include <optional>
#include <vector>

#include "kdiv/embedding.hpp"
#include "kdiv/ranking.hpp"
#include "kdiv/rng.hpp"

namespace kdiv {

/// Rankings of every cell of the bisector arrangement of `embedding`
/// (d <= 3), found from points just off each face of the arrangement.
/// With `box_radius`, only cells meeting the open box [-r, r]^d count.
/// Result is sorted and deduplicated.
std::vector<Ranking> arrangement_rankings(const Embedding& embedding, std::optional<double> box_radius = {});

/// Distinct rankings hit by random voter points; continues until
/// `stable_batches` consecutive batches add nothing. Lower bound on the
/// domain; used for d >= 4.
std::vector<Ranking> sampled_rankings(const Embedding& embedding, Rng& rng, int stable_batches, int batch_size);

}  // namespace kdiv
