#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "kdiv/election.hpp"

namespace kdiv::cli {

// Text format, candidates 1-based:
//
//   # kdiv election
//   m: 3
//   n: 5
//   axis: 1 2 3            optional single-peaked axis
//   tree: ((1 2) 3)        optional group-separable tree
//   sc-order: 2 1          optional, 1-based vote lines in crossing order
//   embedding: 1           optional dimension, then m "point:" lines
//   point: 0.5
//   votes: 2
//   3: 1 > 2 > 3
//   2: 3 > 2 > 1
//
// Lines starting with '#' after the first are ignored.
Election parse_election(std::string_view text);
std::string serialize_election(const Election& e);

Election read_election(const std::filesystem::path& path);
void write_election(const std::filesystem::path& path, const Election& e);

/// Writes `contents` to `path`, creating parent directories.
void write_text(const std::filesystem::path& path, std::string_view contents);

}  // namespace kdiv::cli
