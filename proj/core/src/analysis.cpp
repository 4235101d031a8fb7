#include "kdiv/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "kdiv/arrangement.hpp"
#include "kdiv/errors.hpp"
#include "kdiv/sampling.hpp"

namespace kdiv {

SolverKind parse_solver(std::string_view name) {
  if (name == "heuristic") return SolverKind::Heuristic;
  if (name == "exact" || name == "fpt") return SolverKind::Exact;
  if (name == "sc") return SolverKind::SingleCrossing;
  if (name == "embeddable") return SolverKind::Embeddable;
  throw InputError("unknown solver '" + std::string(name) + "'");
}

std::string solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::Heuristic: return "heuristic";
    case SolverKind::Exact: return "exact";
    case SolverKind::SingleCrossing: return "sc";
    case SolverKind::Embeddable: return "embeddable";
  }
  return "?";
}

namespace {

KemenyResult run_solver(const Election& e, int k, const SolverConfig& config, std::span<const Ranking> space) {
  switch (config.solver) {
    case SolverKind::Heuristic:
      return local_search(e, k, space, {config.restarts, Rng::stream(config.seed, static_cast<std::uint64_t>(k)).next()});
    case SolverKind::Exact:
      return k == 1 ? exact_kemeny(e, config.budgets) : solve_partition_dp(e, k, config.budgets);
    case SolverKind::SingleCrossing:
      return solve_single_crossing(e, k);
    case SolverKind::Embeddable:
      if (!e.certificate().embedding) throw InputError("embeddable solver needs an embedding certificate");
      return solve_embeddable(e, *e.certificate().embedding, k, config.budgets);
  }
  throw InputError("unsupported solver");
}

std::vector<Ranking> space_for(const Election& e, const SolverConfig& config) {
  if (config.solver != SolverKind::Heuristic) return {};
  return build_search_space(e, config.domain, config.extra_ic, config.seed);
}

std::size_t distinct_count(const Election& e) { return e.merged().votes().size(); }

}  // namespace

KemenyResult solve_k_kemeny(const Election& e, int k, const SolverConfig& config) {
  if (k < 1) throw InputError("k must be at least 1");
  const auto space = space_for(e, config);
  return run_solver(e, k, config, space);
}

DiversityVector diversity_vector(const Election& e, const SolverConfig& config) {
  const int m = e.candidate_count();
  DiversityVector out;
  out.m = m;
  out.method = solver_name(config.solver);
  out.restarts = config.solver == SolverKind::Heuristic ? config.restarts : 0;
  out.seed = config.seed;
  const auto space = space_for(e, config);
  const auto distinct = distinct_count(e);
  const auto n = static_cast<double>(e.voter_count());
  double running = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= m; ++k) {
    double value = 0;
    if (static_cast<std::size_t>(k) < distinct) value = static_cast<double>(run_solver(e, k, config, space).score) / n;
    running = std::min(running, value);
    out.values.push_back(running);
  }
  return out;
}

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::Greater: return "greater";
    case Dominance::Less: return "less";
    case Dominance::Equal: return "equal";
    case Dominance::Incomparable: return "incomparable";
  }
  return "?";
}

Dominance dominance(std::span<const double> a, std::span<const double> b, double tolerance) {
  if (a.size() != b.size()) throw InputError("dominance: vectors differ in length");
  bool a_higher = false;
  bool b_higher = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i] + tolerance) a_higher = true;
    if (b[i] > a[i] + tolerance) b_higher = true;
  }
  if (a_higher && b_higher) return Dominance::Incomparable;
  if (a_higher) return Dominance::Greater;
  if (b_higher) return Dominance::Less;
  return Dominance::Equal;
}

Dominance dominance(const DiversityVector& a, const DiversityVector& b, double tolerance) {
  return dominance(a.values, b.values, tolerance);
}

double polarization(const DiversityVector& v) {
  if (v.values.size() < 2) throw InputError("polarization needs m >= 2");
  return v.values[0] - v.values[1];
}

std::vector<std::int64_t> distance_histogram(const Election& e, const KemenyResult& result) {
  if (result.centers.empty()) throw InputError("histogram needs at least one center");
  const auto eval = k_kemeny_score(e, result.centers);
  std::vector<std::int64_t> bins(static_cast<std::size_t>(max_swap_distance(e.candidate_count()) + 1), 0);
  const auto& votes = e.votes();
  for (std::size_t i = 0; i < votes.size(); ++i) {
    const auto d = swap_distance(votes[i].ranking, result.centers[static_cast<std::size_t>(eval.assignment[i])]);
    bins[static_cast<std::size_t>(d)] += votes[i].multiplicity;
  }
  return bins;
}

Stat summarize(std::span<const double> values) {
  Stat s;
  s.count = static_cast<int>(values.size());
  if (values.empty()) return s;
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return s;
}

std::vector<double> mean_vector(std::span<const std::vector<double>> rows) {
  if (rows.empty()) return {};
  std::vector<double> out(rows.front().size(), 0.0);
  for (const auto& r : rows) {
    if (r.size() != out.size()) throw InputError("mean_vector: rows differ in length");
    for (std::size_t i = 0; i < r.size(); ++i) out[i] += r[i];
  }
  for (auto& v : out) v /= static_cast<double>(rows.size());
  return out;
}

int diversity_order(std::span<const double> a, std::span<const double> b, double tolerance) {
  switch (dominance(a, b, tolerance)) {
    case Dominance::Greater: return 1;
    case Dominance::Less: return -1;
    case Dominance::Equal: return 0;
    case Dominance::Incomparable: break;
  }
  const double sa = std::accumulate(a.begin(), a.end(), 0.0);
  const double sb = std::accumulate(b.begin(), b.end(), 0.0);
  if (sa > sb + tolerance) return 1;
  if (sb > sa + tolerance) return -1;
  return 0;
}

double mean_tolerance(std::span<const std::vector<std::vector<double>>> samples, double sigmas) {
  double tol = 1e-9;
  std::vector<double> column;
  for (const auto& rows : samples) {
    if (rows.empty()) continue;
    for (std::size_t k = 0; k < rows.front().size(); ++k) {
      column.clear();
      for (const auto& r : rows) column.push_back(r.at(k));
      const auto s = summarize(column);
      tol = std::max(tol, sigmas * s.sd / std::sqrt(static_cast<double>(s.count)));
    }
  }
  return tol;
}

DomainRanking domain_ranking(std::span<const NamedVector> vectors, double tolerance) {
  const std::size_t n = vectors.size();
  std::vector<std::vector<int>> rel(n, std::vector<int>(n, 0));
  DomainRanking out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      rel[i][j] = diversity_order(vectors[i].values, vectors[j].values, tolerance);
      rel[j][i] = -rel[i][j];
      if (rel[i][j] > 0) out.above.emplace_back(vectors[i].name, vectors[j].name);
      if (rel[i][j] < 0) out.above.emplace_back(vectors[j].name, vectors[i].name);
    }
  }
  // Tie classes: components of the "unordered" graph.
  std::vector<int> comp(n, -1);
  int classes = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = classes;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && comp[j] < 0 && rel[i][j] == 0) {
          comp[j] = classes;
          stack.push_back(j);
        }
      }
    }
    ++classes;
  }
  // Order classes by how many members they are above, most first.
  std::vector<int> wins(static_cast<std::size_t>(classes), 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j] > 0) ++wins[static_cast<std::size_t>(comp[i])];
    }
  }
  std::vector<int> order(static_cast<std::size_t>(classes));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return wins[static_cast<std::size_t>(a)] > wins[static_cast<std::size_t>(b)];
  });
  std::vector<int> rank(static_cast<std::size_t>(classes));
  for (int r = 0; r < classes; ++r) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;
  out.classes.resize(static_cast<std::size_t>(classes));
  for (std::size_t i = 0; i < n; ++i) {
    out.classes[static_cast<std::size_t>(rank[static_cast<std::size_t>(comp[i])])].push_back(vectors[i].name);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j] > 0 && rank[static_cast<std::size_t>(comp[i])] >= rank[static_cast<std::size_t>(comp[j])]) out.consistent = false;
    }
  }
  return out;
}

namespace {

Embedding generic_embedding(int m, int dimension, Rng& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto emb = Embedding::uniform_cube(m, dimension, rng);
    if (emb.general_position()) return emb;
  }
  throw DegenerateEmbedding("could not draw a generic embedding");
}

}  // namespace

BoxCounts count_distinct_sampled(int dimension, double radius, int m, int reps, std::uint64_t seed) {
  if (dimension < 1) throw InputError("dimension must be at least 1");
  if (!(radius > 0)) throw InputError("box radius must be positive");
  if (reps < 1) throw InputError("reps must be at least 1");
  BoxCounts out;
  out.lower_bound = dimension > 3;
  for (int rep = 0; rep < reps; ++rep) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(rep));
    Domain domain;
    Embedding emb;
    for (int attempt = 0;; ++attempt) {
      emb = generic_embedding(m, dimension, rng);
      try {
        EuclideanOptions opts;
        opts.sample_seed = rng.next();
        domain = enumerate_euclidean(emb, opts);
        break;
      } catch (const DegenerateEmbedding&) {
        if (attempt >= 100) throw;
      }
    }
    const std::size_t samples = 10 * domain.size();
    std::set<Ranking> seen;
    std::vector<double> point(static_cast<std::size_t>(dimension));
    for (std::size_t s = 0; s < samples; ++s) {
      for (auto& x : point) x = rng.uniform(-radius, radius);
      if (auto r = emb.rank_point(point)) seen.insert(std::move(*r));
    }
    std::size_t in_box = 0;
    if (dimension <= 3) {
      in_box = arrangement_rankings(emb, radius).size();
    } else {
      for (std::size_t s = 0; s < 10 * samples; ++s) {
        for (auto& x : point) x = rng.uniform(-radius, radius);
        if (auto r = emb.rank_point(point)) seen.insert(std::move(*r));
      }
      in_box = seen.size();
    }
    out.distinct_sampled += static_cast<double>(std::min(seen.size(), samples));
    out.max_in_box += static_cast<double>(in_box);
    out.domain_size += static_cast<double>(domain.size());
  }
  out.distinct_sampled /= reps;
  out.max_in_box /= reps;
  out.domain_size /= reps;
  return out;
}

KemenyResult reference_optimum(const Election& e, int k, std::span<const Ranking> space, double full_search_work,
                               const Budgets& budgets) {
  const auto distinct = distinct_count(e);
  const int m = e.candidate_count();
  if (static_cast<std::size_t>(k) >= distinct) return solve_partition_dp(e, k, budgets);
  if (m <= 10) {
    double sets = 1;
    double total = 1;
    for (int i = 2; i <= m; ++i) total *= i;
    for (int i = 0; i < k; ++i) sets = sets * (total - i) / (i + 1);
    if (sets * static_cast<double>(distinct) <= full_search_work) {
      const auto all = all_rankings(m);
      Budgets wide = budgets;
      wide.max_subset_work = std::max(wide.max_subset_work, full_search_work);
      auto r = solve_over_space(e, k, all, wide);
      r.method = "all-rankings";
      return r;
    }
  }
  if (k == 1) return exact_kemeny(e, budgets);
  if (static_cast<int>(distinct) <= budgets.max_partition_votes) return solve_partition_dp(e, k, budgets);
  auto r = solve_over_space(e, k, space, budgets);
  r.method = "search-space";
  r.exact = false;
  return r;
}

EvaluationInstance make_evaluation_instance(const std::string& source, int m, std::int64_t voters, Rng& rng) {
  CultureSpec spec;
  spec.seed = rng.next();
  if (source == "IC") {
    spec.kind = Culture::IcFull;
    return {sample_election(spec, m, voters), std::nullopt};
  }
  if (source == "SP/Wal" || source == "SP/Con") {
    spec.kind = source == "SP/Wal" ? Culture::Walsh : Culture::Conitzer;
    return {sample_election(spec, m, voters), enumerate_sp(Ranking::identity(m))};
  }
  if (source == "1D/box" || source == "2D/box" || source == "3D/box") {
    const int dim = source[0] - '0';
    Domain domain = make_domain(source.substr(0, 2), m, rng);
    spec.kind = Culture::RBox;
    spec.dimension = dim;
    spec.radius = 1.0;
    SamplingContext ctx;
    ctx.embedding = &*domain.embedding;
    Election e = sample_election(spec, m, voters, ctx);
    return {std::move(e), std::move(domain)};
  }
  Domain domain = make_domain(source, m, rng);
  Election e = to_election(domain);
  return {std::move(e), std::move(domain)};
}

HeuristicCell evaluate_heuristic(const std::string& source, int m, int k, const HeuristicOptions& options) {
  if (options.reps < 1) throw InputError("reps must be at least 1");
  HeuristicCell cell;
  cell.source = source;
  cell.m = m;
  cell.k = k;
  std::vector<double> ratios;
  std::set<std::string> references;
  for (int rep = 0; rep < options.reps; ++rep) {
    Rng rng = Rng::stream(options.seed, static_cast<std::uint64_t>(rep));
    auto inst = make_evaluation_instance(source, m, options.voters, rng);
    const Domain* domain = inst.domain ? &*inst.domain : nullptr;
    const auto space = build_search_space(inst.election, domain, options.extra_ic, rng.next());
    const auto heuristic = local_search(inst.election, k, space, {options.restarts, rng.next()});
    const auto exact = reference_optimum(inst.election, k, space, options.full_search_work);
    references.insert(exact.method);
    if (heuristic.score < exact.score && exact.exact) {
      throw std::logic_error("heuristic beat the exact optimum in cell " + source);
    }
    ratios.push_back(exact.score == 0 ? (heuristic.score == 0 ? 1.0 : std::numeric_limits<double>::infinity())
                                      : static_cast<double>(heuristic.score) / static_cast<double>(exact.score));
  }
  cell.ratio = summarize(ratios);
  for (const auto& r : references) cell.reference += (cell.reference.empty() ? "" : "+") + r;
  return cell;
}

}  // namespace kdiv
