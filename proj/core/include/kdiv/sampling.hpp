#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "kdiv/domains.hpp"
#include "kdiv/election.hpp"
#include "kdiv/embedding.hpp"

namespace kdiv {

enum class Culture {
  IcFull,     // uniform over all rankings
  IcDomain,   // uniform (or weight-proportional) over a given domain
  Walsh,      // uniform single-peaked on the identity axis
  Conitzer,   // random peak, then grow the interval one end at a time
  CvcRandom,  // uniform caterpillar decisions on the identity axis
  RBox,       // voter points uniform in [-r, r]^d around a fixed embedding
  ScGaps,     // SC chain thinned by gaps of t votes, see sc_gaps_domain
};

struct CultureSpec {
  Culture kind = Culture::IcFull;
  int dimension = 2;       // RBox
  double radius = 1.0;     // RBox
  int gap = 0;             // ScGaps
  bool weighted = false;   // IcDomain / ScGaps: sample proportionally to weights
  std::uint64_t seed = 0;
};

/// Parses "ic", "ic-domain", "walsh", "conitzer", "cvc", "rbox", "sc-gaps".
Culture parse_culture(std::string_view name);
std::string culture_name(Culture kind);

/// Extra inputs some cultures need. IcDomain needs `domain`; RBox needs
/// `embedding`; ScGaps uses `domain` when it carries a chain and builds a
/// fresh chain from the seed otherwise.
struct SamplingContext {
  const Domain* domain = nullptr;
  const Embedding* embedding = nullptr;
};

/// n votes; vote i depends only on (spec.seed, i). The election carries the
/// culture's certificate where one applies (axis, tree, embedding, and a
/// single-crossing order for samples from a chain).
Election sample_election(const CultureSpec& spec, int m, std::int64_t n, const SamplingContext& context = {});

/// Sub-domain of the chain in `sc`: take 1 vote, skip t, take 2, skip t,
/// take 4, ... Block b (from 1) has weight 2^(1-b). A block that would run
/// past the end of the chain is dropped. `chain` of the result follows the
/// original chain order.
Domain sc_gaps_domain(const Domain& sc, int t);
Domain sc_gaps_domain(int m, int t, Rng& rng);

}  // namespace kdiv
