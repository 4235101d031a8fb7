#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace kdiv::cli {

/// Runs the configured experiment into `config.output_dir / experiment`
/// and writes manifest.json there. Returns the manifest path.
std::filesystem::path run_experiment(const RunConfig& config);

/// Lowercase, filesystem-safe form of a domain or culture name.
std::string slug(const std::string& name);

}  // namespace kdiv::cli
