#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kdiv/domains.hpp"
#include "kdiv/ranking.hpp"

namespace kdiv {

struct MdsOptions {
  int max_iterations = 300;
  double tolerance = 1e-6;   // stop when the relative stress drop is below this
  std::uint64_t seed = 0;    // power-iteration start for the classical-scaling initial layout
};

struct MdsResult {
  std::vector<std::array<double, 2>> points;
  double stress = 0;                  // sum of squared residuals / sum of squared dissimilarities
  std::vector<double> stress_history; // one entry per iteration, starting at the initial layout
};

/// SMACOF stress majorization in the plane from a seeded random layout.
/// `dissimilarity` is n x n row-major. Throws InputError unless it is
/// square, symmetric, nonnegative and zero on the diagonal.
MdsResult embed_mds(std::span<const double> dissimilarity, std::size_t n, const MdsOptions& options = {});

struct MicroscopeOptions {
  int k = 4;
  int extra_ic = 512;   // light gray background votes; 0 for none
  int restarts = 10;
  std::uint64_t seed = 0;
  MdsOptions mds;
};

struct MicroscopePlot {
  std::vector<Ranking> rankings;   // one per point
  std::vector<std::array<double, 2>> points;
  std::vector<int> colors;         // nearest center; -1 for background votes
  std::vector<bool> is_center;
  std::vector<bool> is_ic;
  std::vector<Ranking> centers;
  double stress = 0;
  std::vector<double> stress_history;
};

/// Embeds the domain votes, `extra_ic` uniform votes and an approximate
/// k-Kemeny set of the domain, coloring domain votes by nearest center.
MicroscopePlot render_microscope(const Domain& domain, const MicroscopeOptions& options = {});

/// SVG 1.1 scatter plot with the fixed theme below.
std::string microscope_svg(const MicroscopePlot& plot, const std::string& title);

/// Columns: vote_id,x,y,color,is_center,is_ic.
std::string microscope_csv(const MicroscopePlot& plot);

/// Fill colors for center indices 0..; cycles past the end.
std::span<const char* const> microscope_palette();

}  // namespace kdiv
