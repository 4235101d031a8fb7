#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kdiv/election.hpp"
#include "kdiv/embedding.hpp"
#include "kdiv/gs_tree.hpp"
#include "kdiv/ranking.hpp"
#include "kdiv/rng.hpp"

namespace kdiv {

enum class DomainKind { SP, GS, SPOC, SPTree, SC, Euclid, Full, Custom };

/// Undirected graph on candidates as adjacency lists.
using Graph = std::vector<std::vector<int>>;

/// A deduplicated set of rankings together with how it was built.
///
/// `votes` is always sorted lexicographically. Descriptor payloads that
/// carry order (the SC chain) index into `votes`.
struct Domain {
  int m = 0;
  std::vector<Ranking> votes;
  std::optional<std::vector<double>> weights;  // aligned with votes when present
  DomainKind kind = DomainKind::Custom;
  std::string label;

  std::optional<Ranking> axis;           // SP axis, SPOC cycle, caterpillar axis
  std::optional<GSTree> tree;            // GS tree
  std::optional<Graph> graph;            // SP-on-tree graph
  std::optional<std::vector<int>> chain; // SC: vote indices in chain order
  std::optional<Embedding> embedding;    // Euclidean candidate points
  bool lower_bound = false;              // enumeration may have missed votes

  std::size_t size() const { return votes.size(); }
  /// True for the Condorcet domains (SP, GS, SC, SP on a tree, 1D).
  bool is_condorcet() const;
};

Domain enumerate_sp(const Ranking& axis);
Domain enumerate_gs(const GSTree& tree);
/// Caterpillar votes along `axis` from all binary place-high/place-low
/// decision strings.
Domain cvc_enumerate(const Ranking& axis);
/// The vote built from one decision string (true = highest free position);
/// `decisions` has length m-1.
Ranking cvc_vote(const Ranking& axis, const std::vector<bool>& decisions);
/// Throws InputError for m < 3.
Domain enumerate_spoc(const Ranking& cycle);
/// Throws InputError unless `tree` is a connected acyclic graph.
Domain enumerate_sp_tree(const Graph& tree);
/// The double-forked tree: c0,c1 - c2 - ... - c(m-3) - c(m-2),c(m-1); m >= 5.
Graph double_forked_tree(int m);
/// Maximal single-crossing chain from identity to its reverse, swapping a
/// uniformly random adjacent non-inverted pair at each step.
Domain generate_sc_chain(Rng& rng, int m);
Domain enumerate_full(int m);

struct EuclideanOptions {
  /// Check the d=2 count against the closed form and throw
  /// DegenerateEmbedding on mismatch.
  bool check_closed_form = true;
  /// Sampling budget for d >= 4, where enumeration is a lower bound.
  int sample_batches = 50;
  int sample_batch_size = 10000;
  std::uint64_t sample_seed = 0;
};

/// All rankings realizable by a voter point anywhere in R^d.
Domain enumerate_euclidean(const Embedding& embedding, const EuclideanOptions& options = {});

enum class SizeFormula { SP, GS, SPDF, SPOC, SC, Euclid1D, Euclid2D };

/// Unsigned Stirling numbers of the first kind.
std::uint64_t stirling_first(int n, int k);

/// Closed-form maximal domain size; throws InputError outside the formula's
/// range (m < 2, or m < 5 for SP/DF).
std::uint64_t domain_size_formula(SizeFormula kind, int m);

/// The domain plus every missing reversal, and |extension| / |original|.
std::pair<Domain, double> reverse_extension(const Domain& domain);

/// One vote per domain ranking, carrying the domain's certificate.
Election to_election(const Domain& domain);

/// Builds one of the named domains used in the experiments: "1D", "2D",
/// "3D", "SC", "SP", "SP/DF", "SPOC", "GS/bal", "GS/cat", "IC" (full).
/// Random domains (SC, Euclidean) draw from `rng`; degenerate Euclidean
/// embeddings are resampled.
Domain make_domain(std::string_view name, int m, Rng& rng);

/// Names accepted by make_domain.
const std::vector<std::string>& domain_names();

}  // namespace kdiv
