#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "kdiv/solvers.hpp"

namespace kdiv::cli {

/// Inputs of one experiment run. Defaults mirror the full-scale setup
/// except `reps`, which defaults to a desk-scale count.
struct RunConfig {
  std::string experiment;
  std::uint64_t seed = 1;
  int m = 8;
  int m_min = 2;
  int m_max = 16;
  std::vector<int> ms;              // scalability grid
  std::int64_t n = 512;
  int reps = 20;
  int restarts = 10;
  int extra_ic = 512;
  int k_max = 4;                    // histograms
  std::vector<std::string> domains;
  std::vector<double> radii;        // euclidean-box
  std::vector<int> dimensions;      // euclidean-box
  int gap = 12;                     // sc-gaps
  int sc_gaps_m = 16;
  std::size_t max_domain_votes = 4096;  // larger domains are subsampled
  bool extended = false;            // microscopes of reverse extensions too
  Budgets budgets;
  std::filesystem::path output_dir = "kdiv-out";
};

/// Experiment names accepted by `kdiv experiment`.
const std::vector<std::string>& experiment_names();

/// Defaults for `name`; throws InputError for an unknown experiment.
RunConfig default_config(const std::string& name);

/// Overlays JSON keys on `base`. Unknown keys and wrong types throw
/// InputError.
RunConfig apply_json(RunConfig base, const nlohmann::json& j);

nlohmann::json to_json(const RunConfig& c);

}  // namespace kdiv::cli
