// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: kdiv_acceptance [criterion numbers...]   (default: all)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kdiv/analysis.hpp"
#include "kdiv/domains.hpp"
#include "kdiv/errors.hpp"
#include "kdiv/reductions.hpp"
#include "kdiv/sampling.hpp"
#include "kdiv/solvers.hpp"
#include "oracles.hpp"

using namespace kdiv;

namespace {

// Pinned tolerances and scales.
constexpr double kSigmas = 5.0;            // reference-mean reproduction window
constexpr int kHeuristicReps = 10;
constexpr int kRankingReps = 20;
constexpr int kBoxReps = 20;
constexpr std::int64_t kVoters = 512;
constexpr int kRestarts = 10;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 12) failures.push_back(what);
    }
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Unsigned Stirling numbers of the first kind by the textbook recurrence,
// kept separate from the library's table.
std::uint64_t stirling(int n, int k) {
  std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          static_cast<std::uint64_t>(i - 1) * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  return k < 0 ? 0 : s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::uint64_t euclid_size(int m, int d) {
  std::uint64_t total = 0;
  for (int i = 0; i <= d && i < m; ++i) total += stirling(m, m - i);
  return total;
}

// ---------------------------------------------------------------- 1
Outcome domain_sizes() {
  Outcome o;
  int checked = 0;
  for (int m = 2; m <= 12; ++m) {
    Rng rng(kSeed + static_cast<std::uint64_t>(m));
    const std::uint64_t pow2 = std::uint64_t{1} << (m - 1);
    auto expect = [&](const std::string& name, std::uint64_t want, int reps) {
      for (int r = 0; r < reps; ++r) {
        const auto got = make_domain(name, m, rng).size();
        o.require(got == want, name + " m=" + std::to_string(m) + ": " + std::to_string(got) + " != " + std::to_string(want));
        ++checked;
      }
    };
    expect("SP", pow2, 1);
    expect("GS/bal", pow2, 1);
    expect("GS/cat", pow2, 1);
    if (m >= 3) expect("SPOC", static_cast<std::uint64_t>(m) << (m - 2), 1);
    if (m >= 5) expect("SP/DF", 16 * ((std::uint64_t{1} << (m - 3)) - 1), 1);
    const std::uint64_t line = static_cast<std::uint64_t>(m) * (m - 1) / 2 + 1;
    expect("SC", line, 3);
    expect("1D", line, 3);
    expect("2D", euclid_size(m, 2), 3);
  }
  o.require(euclid_size(8, 2) == 351, "2D closed form at m=8 is not 351");
  o.detail = std::to_string(checked) + " domains, m=2..12";
  return o;
}

// ---------------------------------------------------------------- 2
Election random_sc(int m, int n, Rng& rng) {
  const auto chain = generate_sc_chain(rng, m);
  CultureSpec spec;
  spec.kind = Culture::IcDomain;
  spec.seed = rng.next();
  SamplingContext ctx;
  ctx.domain = &chain;
  return sample_election(spec, m, n, ctx);
}

Outcome solver_oracles() {
  Outcome o;
  Rng rng(kSeed);
  Budgets dp_only;
  dp_only.condorcet_shortcut = false;
  const int instances = 200;
  for (int i = 0; i < instances; ++i) {
    const int m = 2 + static_cast<int>(rng.below(5));
    const int n = 1 + static_cast<int>(rng.below(8));
    const int k = 1 + static_cast<int>(rng.below(3));
    const std::string tag = " (instance " + std::to_string(i) + ", m=" + std::to_string(m) + " n=" + std::to_string(n) +
                            " k=" + std::to_string(k) + ")";

    const auto e = oracle::random_election(m, n, rng);
    const auto want = oracle::partition_kemeny(e, k);
    o.require(solve_partition_dp(e, k).score == want, "partition DP vs oracle" + tag);
    const auto kem = oracle::kemeny(e);
    o.require(exact_kemeny(e).score == kem, "exact_kemeny vs m!" + tag);
    o.require(exact_kemeny(e, dp_only).score == kem, "subset DP vs m!" + tag);

    const auto sc = random_sc(m, n, rng);
    const auto dp = solve_partition_dp(sc, k).score;
    o.require(solve_single_crossing(sc, k).score == dp, "single-crossing vs partition DP" + tag);
    o.require(dp == oracle::partition_kemeny(sc, k), "partition DP vs oracle on SC" + tag);
  }
  o.detail = std::to_string(instances) + " general + " + std::to_string(instances) + " SC instances";
  return o;
}

// ---------------------------------------------------------------- 3
Outcome condorcet_shortcut() {
  Outcome o;
  Rng rng(kSeed + 3);
  Budgets dp_only;
  dp_only.condorcet_shortcut = false;
  const int instances = 500;
  std::map<std::string, int> per_family;
  for (int i = 0; i < instances; ++i) {
    const int m = 2 + static_cast<int>(rng.below(7));
    const int n = 1 + static_cast<int>(rng.below(40));
    CultureSpec spec;
    spec.seed = rng.next();
    SamplingContext ctx;
    std::optional<Domain> domain;
    std::string family;
    switch (i % 5) {
      case 0: spec.kind = Culture::Walsh; family = "SP/Walsh"; break;
      case 1: spec.kind = Culture::Conitzer; family = "SP/Conitzer"; break;
      case 2: spec.kind = Culture::CvcRandom; family = "GS/cat"; break;
      case 3:
        domain = make_domain("GS/bal", m, rng);
        family = "GS/bal";
        break;
      default:
        domain = make_domain("SC", m, rng);
        family = "SC";
        break;
    }
    if (domain) {
      spec.kind = Culture::IcDomain;
      ctx.domain = &*domain;
    }
    const auto e = sample_election(spec, m, n, ctx);
    const auto c = condorcet_ranking(e);
    const std::string tag = family + " m=" + std::to_string(m) + " n=" + std::to_string(n);
    if (!c) {
      o.require(false, "no Condorcet ranking: " + tag);
      continue;
    }
    o.require(kemeny_score(e, *c) == exact_kemeny(e, dp_only).score, "score mismatch: " + tag);
    ++per_family[family];
  }
  o.detail = std::to_string(instances) + " elections (";
  for (const auto& [f, c] : per_family) o.detail += f + " " + std::to_string(c) + ", ";
  o.detail.resize(o.detail.size() - 2);
  o.detail += ")";
  return o;
}

// ---------------------------------------------------------------- 4
bool prefixes_are_intervals(const Ranking& vote, const Ranking& axis) {
  const auto pos = axis.positions();
  int lo = 1 << 30, hi = -1;
  for (int p = 0; p < vote.size(); ++p) {
    const int x = pos[static_cast<std::size_t>(vote[p])];
    lo = std::min(lo, x);
    hi = std::max(hi, x);
    if (hi - lo != p) return false;
  }
  return true;
}

bool tree_is_balanced(const GSTree& t) {
  std::function<int(int)> leaves = [&](int id) -> int {
    const auto& node = t.nodes()[static_cast<std::size_t>(id)];
    if (node.is_leaf()) return 1;
    if (node.children.size() != 2) return -1;
    const int a = leaves(node.children[0]);
    const int b = leaves(node.children[1]);
    if (a < 0 || b < 0 || a != b) return -1;
    return a + b;
  };
  return leaves(t.root()) > 0;
}

bool tree_is_caterpillar(const GSTree& t) {
  // Every internal node has at most one internal child.
  for (const auto& node : t.nodes()) {
    if (node.is_leaf()) continue;
    int internal = 0;
    for (int c : node.children) internal += !t.nodes()[static_cast<std::size_t>(c)].is_leaf();
    if (internal > 1 || node.children.size() != 2) return false;
  }
  return true;
}

Outcome reductions() {
  Outcome o;
  std::int64_t instances = 0;
  for (int m = 1; m <= 4; ++m) {
    const int alphabet = 1 << m;
    for (int n = 1; n <= 6; ++n) {
      // Multisets of n strings: nondecreasing index tuples.
      std::vector<int> idx(static_cast<std::size_t>(n), 0);
      while (true) {
        H2SInstance inst;
        for (int v : idx) {
          std::string s;
          for (int j = m - 1; j >= 0; --j) s += (v >> j & 1) ? '1' : '0';
          inst.strings.push_back(s);
        }
        const auto h = solve_h2s_bruteforce(inst).score;
        const std::string tag = " n=" + std::to_string(n) + " m=" + std::to_string(m) + " first=" + inst.strings[0];

        const auto a = reduce_sp_gsbal(inst);
        const auto& ca = a.election.certificate();
        bool member = ca.axis && ca.tree && tree_is_balanced(*ca.tree);
        for (const auto& v : a.election.votes())
          member = member && prefixes_are_intervals(v.ranking, *ca.axis) && ca.tree->is_consistent(v.ranking);
        o.require(member, "SP/GS-bal membership" + tag);
        const auto sa = solve_partition_dp(a.election, 2).score;

        const auto b = reduce_gscat(inst);
        const auto& cb = b.election.certificate();
        bool cat = cb.tree && tree_is_caterpillar(*cb.tree);
        for (const auto& v : b.election.votes()) cat = cat && cb.tree->is_consistent(v.ranking);
        o.require(cat, "GS/cat membership" + tag);
        o.require(b.dummies == minimal_sound_dummies(inst.strings.size(), static_cast<std::size_t>(m)), "dummy count" + tag);
        const auto sb = solve_partition_dp(b.election, 2).score;

        // Decisions for every threshold t; q is recomputed by the reductions.
        for (std::int64_t t = 0; t <= static_cast<std::int64_t>(n) * m; ++t) {
          inst.t = t;
          const bool yes = h <= t;
          o.require((sa <= reduce_sp_gsbal(inst).q) == yes, "Thm-1 decision t=" + std::to_string(t) + tag);
          const std::int64_t M = b.dummies;
          const std::int64_t qb = 2 * M * t + 2 * static_cast<std::int64_t>(n) * m * m;
          o.require((sb <= qb) == yes, "caterpillar decision t=" + std::to_string(t) + tag);
        }
        ++instances;

        int p = n - 1;
        while (p >= 0 && idx[static_cast<std::size_t>(p)] == alphabet - 1) --p;
        if (p < 0) break;
        const int next = idx[static_cast<std::size_t>(p)] + 1;
        for (int q = p; q < n; ++q) idx[static_cast<std::size_t>(q)] = next;
      }
    }
  }
  // The caterpillar q formula used above must agree with the library's.
  const H2SInstance probe{{"0110", "1011", "0001"}, 2};
  o.require(reduce_gscat(probe).q == 2 * reduce_gscat(probe).dummies * 2 + 2 * 3 * 16, "caterpillar q formula");
  o.detail = std::to_string(instances) + " instances (all multisets, n<=6, m<=4), every t in 0..nm";
  return o;
}

// ---------------------------------------------------------------- 5
struct ReferenceCell {
  std::string source;
  int m;
  int k;
  double mean;
  double sd;
};

Outcome heuristic_quality() {
  Outcome o;
  HeuristicOptions opts;
  opts.reps = kHeuristicReps;
  opts.voters = kVoters;
  opts.restarts = kRestarts;
  opts.full_search_work = 8e9;
  int cells = 0;
  std::map<std::string, int> references;
  auto run = [&](const std::string& source, int m, int k) {
    opts.seed = kSeed + static_cast<std::uint64_t>(1000 * k + m) + std::hash<std::string>{}(source) % 100000;
    const auto cell = evaluate_heuristic(source, m, k, opts);
    ++cells;
    ++references[cell.reference];
    return cell;
  };
  for (const char* d : {"1D", "GS/cat", "GS/bal", "SP", "SC"}) {
    for (int k = 1; k <= 2; ++k) {
      for (int m = 3; m <= 8; ++m) {
        const auto c = run(d, m, k);
        o.require(c.ratio.mean == 1.0, std::string(d) + " m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                           ": mean ratio " + fmt("%.6f", c.ratio.mean));
      }
    }
  }
  const std::vector<ReferenceCell> expected{
      {"IC", 8, 1, 1.0027, 0.0018},
      {"3D", 6, 2, 1.0008, 0.0015},     {"3D", 7, 2, 1.0019, 0.0027},     {"3D", 8, 2, 1.0013, 0.0020},
      {"3D/box", 5, 2, 1.0002, 0.0005}, {"3D/box", 6, 2, 1.0, 0.0},       {"3D/box", 7, 2, 1.0006, 0.0009},
  };
  std::string ic;
  for (const auto& p : expected) {
    const auto c = run(p.source, p.m, p.k);
    const double window = kSigmas * p.sd;
    const bool ok = std::abs(c.ratio.mean - p.mean) <= window + 1e-12 && c.ratio.mean >= 1.0;
    o.require(ok, p.source + " m=" + std::to_string(p.m) + " k=" + std::to_string(p.k) + ": " + fmt("%.5f", c.ratio.mean) +
                      " outside " + fmt("%.4f", p.mean) + " +/- " + fmt("%.4f", window) + " [" + c.reference + "]");
    if (p.source == "IC") ic = fmt("%.5f", c.ratio.mean);
  }
  o.detail = std::to_string(cells) + " cells, " + std::to_string(kHeuristicReps) + " reps; IC m=8 k=1 mean " + ic + "; references:";
  for (const auto& [r, c] : references) o.detail += " " + r + "=" + std::to_string(c);
  return o;
}

// ---------------------------------------------------------------- 6
std::vector<double> domain_kappa(const std::string& name, int m, int rep) {
  Rng rng = Rng::stream(kSeed + std::hash<std::string>{}(name) % 1000003, static_cast<std::uint64_t>(rep));
  const Domain d = make_domain(name, m, rng);
  const auto e = to_election(d);
  SolverConfig c;
  c.restarts = kRestarts;
  c.seed = rng.next();
  c.domain = &d;
  if (name == "SC" || name == "1D") c.solver = SolverKind::SingleCrossing;
  return diversity_vector(e, c).values;
}

Outcome diversity_ranking() {
  Outcome o;
  const int m = 8;
  const std::vector<std::vector<std::string>> chain{{"GS/cat"}, {"3D"}, {"2D", "SPOC"}, {"SP/DF", "GS/bal"}, {"SP"}, {"SC", "1D"}};
  std::map<std::string, std::vector<std::vector<double>>> runs;
  for (const auto& cls : chain)
    for (const auto& name : cls)
      for (int rep = 0; rep < kRankingReps; ++rep) runs[name].push_back(domain_kappa(name, m, rep));

  // SC and 1D: every repetition solved exactly, vectors identical.
  for (int rep = 0; rep < kRankingReps; ++rep)
    o.require(runs["SC"][static_cast<std::size_t>(rep)] == runs["1D"][static_cast<std::size_t>(rep)],
              "kappa(SC) != kappa(1D) at rep " + std::to_string(rep));

  std::vector<std::vector<std::vector<double>>> samples;
  std::map<std::string, std::vector<double>> means;
  for (const auto& [name, rows] : runs) {
    if (name != "SC" && name != "1D") samples.push_back(rows);
    means[name] = mean_vector(rows);
  }
  const double tol = mean_tolerance(samples, kSigmas);

  int dominated = 0, resolved = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      for (const auto& hi : chain[i]) {
        for (const auto& lo : chain[j]) {
          const auto d = dominance(means[hi], means[lo], tol);
          if (d == Dominance::Greater) ++dominated;
          else if (d == Dominance::Incomparable && diversity_order(means[hi], means[lo], tol) > 0) ++resolved;
          else o.require(false, hi + " vs " + lo + ": " + to_string(d));
        }
      }
    }
  }
  // Informational: relations inside the tie classes.
  std::string ties;
  for (const auto& cls : chain)
    if (cls.size() == 2) ties += " " + cls[0] + "/" + cls[1] + "=" + to_string(dominance(means[cls[0]], means[cls[1]], tol));
  o.detail = std::to_string(kRankingReps) + " reps, tol " + fmt("%.4f", tol) + "; cross-class pairs: " + std::to_string(dominated) +
             " dominated, " + std::to_string(resolved) + " incomparable resolved by total; ties:" + ties;
  return o;
}

// ---------------------------------------------------------------- 7
Outcome histogram_tail() {
  Outcome o;
  Rng rng(kSeed + 7);
  std::string detail;
  for (const char* name : {"GS/cat", "SPOC", "GS/bal"}) {
    const Domain d = make_domain(name, 8, rng);
    const auto e = to_election(d);
    SolverConfig c;
    c.solver = SolverKind::Exact;
    const auto r = solve_k_kemeny(e, 1, c);
    const auto h = distance_histogram(e, r);
    o.require(h.size() == 29 && h[28] > 0, std::string(name) + ": no mass at 28");
    detail += std::string(detail.empty() ? "" : ", ") + name + " bin28=" + std::to_string(h.at(28));
  }
  o.detail = detail;
  return o;
}

// ---------------------------------------------------------------- 8
GSTree random_binary_tree(int m, Rng& rng) {
  // Random splits of a shuffled leaf order.
  std::vector<int> leaves(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) leaves[static_cast<std::size_t>(i)] = i;
  rng.shuffle(std::span<int>(leaves));
  std::vector<GSTree::Node> nodes;
  std::function<int(int, int)> build = [&](int lo, int hi) -> int {
    GSTree::Node node;
    if (hi - lo == 1) {
      node.leaf = leaves[static_cast<std::size_t>(lo)];
    } else {
      const int mid = lo + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo - 1)));
      node.children = {build(lo, mid), build(mid, hi)};
    }
    nodes.push_back(node);
    return static_cast<int>(nodes.size()) - 1;
  };
  const int root = build(0, m);
  return GSTree(nodes, root);
}

Outcome reverse_symmetry() {
  Outcome o;
  Rng rng(kSeed + 8);
  for (int m = 5; m <= 10; ++m) {
    const auto ids = Ranking::identity(m);
    std::vector<GSTree> trees{GSTree::balanced(ids.order()), GSTree::caterpillar(ids.order())};
    for (int i = 0; i < 5; ++i) trees.push_back(random_binary_tree(m, rng));
    for (const auto& t : trees)
      o.require(reverse_extension(enumerate_gs(t)).second == 1.0, "GS tree " + t.to_string() + " ratio != 1");
    o.require(reverse_extension(enumerate_spoc(ids)).second == 1.0, "SPOC m=" + std::to_string(m) + " ratio != 1");
    o.require(reverse_extension(enumerate_sp_tree(double_forked_tree(m))).second == 2.0, "SP/DF m=" + std::to_string(m) + " ratio != 2");
  }
  std::string detail;
  for (const char* name : {"SP", "1D", "2D", "3D"}) {
    const int reps = std::string(name) == "SP" ? 1 : 5;
    double prev = 0;
    std::string series;
    for (int m = 4; m <= 10; ++m) {
      double sum = 0;
      for (int r = 0; r < reps; ++r) {
        const double ratio = reverse_extension(make_domain(name, m, rng)).second;
        o.require(ratio > 1.0 && ratio <= 2.0, std::string(name) + " m=" + std::to_string(m) + ": ratio " + fmt("%.4f", ratio) +
                                                   " not in (1, 2]");
        sum += ratio;
      }
      const double mean = sum / reps;
      o.require(mean >= prev - 1e-12, std::string(name) + " mean ratio decreases at m=" + std::to_string(m));
      prev = mean;
      series += (series.empty() ? "" : " ") + fmt("%.3f", mean);
    }
    detail += std::string(detail.empty() ? "" : "; ") + name + " m=4..10: " + series;
  }
  // Four points in general position in R^3 realize all 24 rankings.
  if (!o.pass) detail += "; note: 3D at m=4 is the full domain, so its ratio is exactly 1";
  o.detail = detail;
  return o;
}

// ---------------------------------------------------------------- 9
Outcome euclidean_box() {
  Outcome o;
  const std::vector<double> radii{0.5, 1.0, 2.0, 4.0};
  std::vector<BoxCounts> counts;
  for (double r : radii) counts.push_back(count_distinct_sampled(2, r, 8, kBoxReps, kSeed + 9));
  std::size_t best = 0;
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i].distinct_sampled > counts[best].distinct_sampled) best = i;
  o.require(radii[best] == 1.0, "distinct-sampled maximum at r=" + fmt("%.2f", radii[best]));
  for (std::size_t i = 1; i < counts.size(); ++i)
    o.require(counts[i].max_in_box >= counts[i - 1].max_in_box, "max-in-box decreases at r=" + fmt("%.2f", radii[i]));
  for (const auto& c : counts) {
    o.require(c.distinct_sampled <= c.max_in_box && c.max_in_box <= c.domain_size, "containment");
    o.require(c.domain_size == 351, "2D domain size");
  }
  std::string detail = std::to_string(kBoxReps) + " reps; r: distinct/max-in-box";
  for (std::size_t i = 0; i < radii.size(); ++i)
    detail += "  " + fmt("%.1f", radii[i]) + ": " + fmt("%.1f", counts[i].distinct_sampled) + "/" + fmt("%.1f", counts[i].max_in_box);
  o.detail = detail;
  return o;
}

// ---------------------------------------------------------------- 10
Outcome desk_scale_properties() {
  Outcome o;
  // Reduced repetition counts stay at or above the floor.
  o.require(kHeuristicReps >= 10 && kRankingReps >= 20 && kBoxReps >= 20, "repetition floor");

  // 3D sizes: enumeration matches the four-term Stirling sum, then the
  // formula locates where SPOC overtakes 3D.
  Rng rng(kSeed + 10);
  for (int m = 4; m <= 9; ++m) {
    const auto got = make_domain("3D", m, rng).size();
    o.require(got == euclid_size(m, 3), "3D m=" + std::to_string(m) + ": " + std::to_string(got) + " != " + std::to_string(euclid_size(m, 3)));
  }
  int overtake = -1;
  for (int m = 8; m <= 20 && overtake < 0; ++m) {
    const auto spoc = static_cast<std::uint64_t>(m) << (m - 2);
    if (euclid_size(m, 3) < spoc) overtake = m;
  }
  o.require(overtake == 16, "SPOC overtakes 3D at m=" + std::to_string(overtake));
  for (int m = 8; m <= 16; ++m)
    o.require(euclid_size(m, 3) > 16 * ((std::uint64_t{1} << (m - 3)) - 1), "3D not above SP/DF at m=" + std::to_string(m));

  // Minimal sound dummy count for the caterpillar construction.
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t m = 1; m <= 4; ++m) {
      const auto M = minimal_sound_dummies(n, m);
      o.require(M == static_cast<std::int64_t>(n * m * m) + 1, "minimal M");
      H2SInstance inst;
      inst.strings.assign(n, std::string(m, '0'));
      bool rejected = false;
      try {
        reduce_gscat(inst, M - 1);
      } catch (const InputError&) {
        rejected = true;
      }
      o.require(rejected, "M = n m^2 accepted");
    }
  }
  o.detail = "3D size formula m=4..9; SPOC overtakes 3D at m=" + std::to_string(overtake) +
             "; 3D > SP/DF through m=16; minimal M = n m^2 + 1 (soundness swept in criterion 4)";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "domain sizes match closed forms", domain_sizes},
      {2, "solver oracle equivalence", solver_oracles},
      {3, "Condorcet shortcut equals exact Kemeny", condorcet_shortcut},
      {4, "hardness reductions preserve decisions", reductions},
      {5, "heuristic quality at reduced scale", heuristic_quality},
      {6, "diversity ranking at m=8", diversity_ranking},
      {7, "histogram tail at distance 28", histogram_tail},
      {8, "reverse-symmetric extension ratios", reverse_symmetry},
      {9, "Euclidean box counts", euclidean_box},
      {10, "desk-scale replacements for full-scale claims", desk_scale_properties},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d  %s  [%.1fs]  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    for (const auto& f : o.failures) std::printf("        - %s\n", f.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
