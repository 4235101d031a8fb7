#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kdiv/election.hpp"

namespace kdiv {

/// Hypercube 2-segmentation: binary strings of equal length and a budget.
struct H2SInstance {
  std::vector<std::string> strings;
  std::int64_t t = 0;
};

/// Throws InputError unless all strings are nonempty, equally long and
/// over {0, 1}.
void validate(const H2SInstance& inst);

/// Sum over positions of the minority symbol count. Throws InputError for
/// an empty group.
std::int64_t hamming_score(std::span<const std::string> group);

struct H2SSolution {
  bool yes = false;
  std::int64_t score = 0;      // minimum over bipartitions
  std::vector<int> side;       // 0/1 per string for a minimizing bipartition
};

/// Exhaustive search over bipartitions (one side may be empty); n <= 20.
H2SSolution solve_h2s_bruteforce(const H2SInstance& inst);

struct ReducedInstance {
  Election election;
  int k = 2;
  std::int64_t q = 0;
  std::int64_t dummies = 0;    // |X| for the caterpillar construction
};

/// Aligned-vote construction: candidates a_j = 2j, b_j = 2j+1, strings
/// padded with '0' to a power-of-two length. The election carries the
/// single-peaked axis a_m..a_1 b_1..b_m and the balanced tree over
/// a_1 b_1 a_2 b_2 ...; q = t.
ReducedInstance reduce_sp_gsbal(const H2SInstance& inst);

/// Smallest dummy count for which the caterpillar construction stays
/// sound: every mismatched position costs at least 2M swaps while the
/// slack is 2nm^2, so M > nm^2 keeps ham <= t + nm^2/M < t + 1.
std::int64_t minimal_sound_dummies(std::size_t n, std::size_t m);

/// Caterpillar construction r(z) = c_z(1)..c_z(m) X cbar_z(m)..cbar_z(1)
/// with M dummies (default: minimal_sound_dummies). Candidates a_j = 2j,
/// b_j = 2j+1, x_i = 2m+i; the election carries the caterpillar tree over
/// a_1 b_1 .. a_m b_m x_1 .. x_M; q = 2Mt + 2nm^2. Throws InputError if
/// `dummies` is at most nm^2.
ReducedInstance reduce_gscat(const H2SInstance& inst, std::optional<std::int64_t> dummies = {});

}  // namespace kdiv
