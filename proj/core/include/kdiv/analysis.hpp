#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kdiv/domains.hpp"
#include "kdiv/election.hpp"
#include "kdiv/solvers.hpp"

namespace kdiv {

enum class SolverKind { Heuristic, Exact, SingleCrossing, Embeddable };

/// Parses "heuristic", "exact", "sc", "embeddable" (and "fpt" as exact).
SolverKind parse_solver(std::string_view name);
std::string solver_name(SolverKind kind);

struct SolverConfig {
  SolverKind solver = SolverKind::Heuristic;
  int restarts = 10;
  std::uint64_t seed = 0;
  int extra_ic = 512;
  /// Domain the election was drawn from; selects the heuristic search space.
  const Domain* domain = nullptr;
  Budgets budgets;
};

/// One k-Kemeny run with the configured solver. Exact means the subset DP
/// for k = 1 and the partition DP otherwise.
KemenyResult solve_k_kemeny(const Election& e, int k, const SolverConfig& config);

struct DiversityVector {
  int m = 0;
  std::vector<double> values;  // values[k-1] = kappa(k) / n
  std::string method;
  int restarts = 0;
  std::uint64_t seed = 0;
};

/// kappa(k)/n for k = 1..m, made nonincreasing by a running minimum.
DiversityVector diversity_vector(const Election& e, const SolverConfig& config);

enum class Dominance { Greater, Less, Equal, Incomparable };
std::string to_string(Dominance d);

/// Coordinatewise comparison; values within `tolerance` count as equal.
Dominance dominance(std::span<const double> a, std::span<const double> b, double tolerance = 1e-9);
Dominance dominance(const DiversityVector& a, const DiversityVector& b, double tolerance = 1e-9);

/// kappa(1)/n - kappa(2)/n.
double polarization(const DiversityVector& v);

/// Voter counts by distance to the assigned center, bins 0..m(m-1)/2.
std::vector<std::int64_t> distance_histogram(const Election& e, const KemenyResult& result);

struct Stat {
  double mean = 0;
  double sd = 0;   // sample standard deviation; 0 for one value
  int count = 0;
};
Stat summarize(std::span<const double> values);

/// Elementwise mean of equally long vectors.
std::vector<double> mean_vector(std::span<const std::vector<double>> rows);

struct NamedVector {
  std::string name;
  std::vector<double> values;
};

/// Diversity order over named vectors. A is above B when A dominates B, or
/// when neither dominates and the coordinate sums differ by more than
/// `tolerance` (the larger sum wins). Pairs left unordered form tie
/// classes (connected components of the unordered graph). `consistent` is
/// false when the class order contradicts some pairwise relation.
struct DomainRanking {
  std::vector<std::vector<std::string>> classes;  // most diverse first
  std::vector<std::pair<std::string, std::string>> above;  // (higher, lower)
  bool consistent = true;
};
DomainRanking domain_ranking(std::span<const NamedVector> vectors, double tolerance = 1e-9);

/// Tolerance for comparing mean vectors of repeated runs: `sigmas` standard
/// errors of the noisiest coordinate over all samples (each sample is a list
/// of per-repetition vectors). Never below 1e-9.
double mean_tolerance(std::span<const std::vector<std::vector<double>>> samples, double sigmas = 5.0);

/// Strict order used by domain_ranking: +1 if a is above b, -1 if below,
/// 0 if unordered.
int diversity_order(std::span<const double> a, std::span<const double> b, double tolerance = 1e-9);

struct BoxCounts {
  double distinct_sampled = 0;  // mean over reps
  double max_in_box = 0;
  double domain_size = 0;
  bool lower_bound = false;     // domain / box counts sampled (d >= 4)
};

/// r-Box vote counting: per repetition draw candidates uniformly in
/// [-1,1]^d, enumerate the domain, count rankings whose cell meets the
/// open box [-r,r]^d, then sample 10 x |domain| voter points from the box
/// and count distinct rankings.
BoxCounts count_distinct_sampled(int dimension, double radius, int m, int reps, std::uint64_t seed);

/// Heuristic-vs-exact evaluation for one table cell.
///
/// `source` is a domain name from make_domain (the election is the domain
/// itself, one vote per ranking) or a sampled row: "IC", "1D/box",
/// "2D/box", "3D/box", "SP/Wal", "SP/Con" (n voters each).
struct HeuristicCell {
  std::string source;
  int m = 0;
  int k = 0;
  Stat ratio;
  std::string reference;  // how the optimum was obtained
};

struct HeuristicOptions {
  int reps = 10;
  std::int64_t voters = 512;
  int restarts = 10;
  int extra_ic = 512;
  std::uint64_t seed = 0;
  /// Work limit (center sets x distinct votes) for exhaustive search over
  /// every ranking.
  double full_search_work = 4e9;
};

HeuristicCell evaluate_heuristic(const std::string& source, int m, int k, const HeuristicOptions& options);

/// The optimum used as the reference in evaluate_heuristic: exhaustive
/// over all rankings when affordable, else the subset DP (k = 1), else the
/// partition DP (few distinct votes), else exhaustive over `space`.
KemenyResult reference_optimum(const Election& e, int k, std::span<const Ranking> space, double full_search_work,
                               const Budgets& budgets = {});

/// Election and search-space domain for a heuristic-evaluation source.
struct EvaluationInstance {
  Election election;
  std::optional<Domain> domain;
};
EvaluationInstance make_evaluation_instance(const std::string& source, int m, std::int64_t voters, Rng& rng);

}  // namespace kdiv
