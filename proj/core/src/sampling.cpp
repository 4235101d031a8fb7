#include "kdiv/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "kdiv/errors.hpp"

namespace kdiv {

namespace {

Ranking random_ranking(int m, Rng& rng) {
  std::vector<Candidate> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(std::span<Candidate>(order));
  return Ranking(std::move(order));
}

Ranking walsh_vote(int m, Rng& rng) {
  std::vector<Candidate> order(static_cast<std::size_t>(m));
  int lo = 0;
  int hi = m - 1;
  for (int slot = m - 1; slot >= 1; --slot) order[static_cast<std::size_t>(slot)] = rng.coin() ? lo++ : hi--;
  order[0] = lo;
  return Ranking(std::move(order));
}

Ranking conitzer_vote(int m, Rng& rng) {
  std::vector<Candidate> order;
  order.reserve(static_cast<std::size_t>(m));
  int lo = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
  int hi = lo;
  order.push_back(lo);
  while (static_cast<int>(order.size()) < m) {
    const bool can_left = lo > 0;
    const bool can_right = hi < m - 1;
    if (can_left && (!can_right || rng.coin())) {
      order.push_back(--lo);
    } else {
      order.push_back(++hi);
    }
  }
  return Ranking(std::move(order));
}

Ranking cvc_random_vote(const Ranking& axis, Rng& rng) {
  std::vector<bool> decisions(static_cast<std::size_t>(axis.size() - 1));
  for (std::size_t i = 0; i < decisions.size(); ++i) decisions[i] = rng.coin();
  return cvc_vote(axis, decisions);
}

// Index into `weights` drawn proportionally, via a cumulative table.
std::size_t weighted_index(const std::vector<double>& cumulative, Rng& rng) {
  const double u = rng.uniform() * cumulative.back();
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  return std::min(static_cast<std::size_t>(it - cumulative.begin()), cumulative.size() - 1);
}

Election from_domain(const Domain& domain, bool weighted, std::int64_t n, std::uint64_t seed) {
  if (domain.votes.empty()) throw InputError("cannot sample from an empty domain");
  std::vector<double> cumulative;
  if (weighted) {
    if (!domain.weights) throw InputError("weighted sampling needs a weighted domain");
    cumulative.resize(domain.weights->size());
    std::partial_sum(domain.weights->begin(), domain.weights->end(), cumulative.begin());
  }
  std::vector<std::size_t> picks(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
    picks[static_cast<std::size_t>(i)] = weighted ? weighted_index(cumulative, rng) : rng.below(domain.size());
  }
  std::vector<Vote> votes;
  votes.reserve(picks.size());
  for (std::size_t p : picks) votes.push_back({domain.votes[p], 1});

  Certificate cert;
  if (domain.kind == DomainKind::SP) cert.axis = domain.axis;
  if (domain.tree) cert.tree = domain.tree;
  if (domain.embedding) cert.embedding = domain.embedding;
  if (domain.chain) {
    // Order sampled votes by their position along the chain.
    std::vector<int> chain_pos(domain.size(), 0);
    for (std::size_t i = 0; i < domain.chain->size(); ++i) chain_pos[static_cast<std::size_t>((*domain.chain)[i])] = static_cast<int>(i);
    std::vector<int> order(picks.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return chain_pos[picks[static_cast<std::size_t>(a)]] < chain_pos[picks[static_cast<std::size_t>(b)]];
    });
    cert.sc_order = std::move(order);
  }
  return Election(domain.m, std::move(votes), std::move(cert));
}

}  // namespace

Culture parse_culture(std::string_view name) {
  if (name == "ic") return Culture::IcFull;
  if (name == "ic-domain") return Culture::IcDomain;
  if (name == "walsh") return Culture::Walsh;
  if (name == "conitzer") return Culture::Conitzer;
  if (name == "cvc") return Culture::CvcRandom;
  if (name == "rbox") return Culture::RBox;
  if (name == "sc-gaps") return Culture::ScGaps;
  throw InputError("unknown culture '" + std::string(name) + "'");
}

std::string culture_name(Culture kind) {
  switch (kind) {
    case Culture::IcFull: return "ic";
    case Culture::IcDomain: return "ic-domain";
    case Culture::Walsh: return "walsh";
    case Culture::Conitzer: return "conitzer";
    case Culture::CvcRandom: return "cvc";
    case Culture::RBox: return "rbox";
    case Culture::ScGaps: return "sc-gaps";
  }
  return "?";
}

Election sample_election(const CultureSpec& spec, int m, std::int64_t n, const SamplingContext& context) {
  if (m < 1) throw InputError("culture needs at least one candidate");
  if (n < 1) throw InputError("culture needs at least one voter");

  switch (spec.kind) {
    case Culture::IcDomain:
      if (!context.domain) throw InputError("ic-domain culture needs a domain");
      if (context.domain->m != m) throw InputError("domain candidate count does not match m");
      return from_domain(*context.domain, spec.weighted, n, spec.seed);
    case Culture::ScGaps: {
      if (spec.gap < 0) throw InputError("sc-gaps needs t >= 0");
      Domain gaps;
      if (context.domain && context.domain->chain) {
        gaps = sc_gaps_domain(*context.domain, spec.gap);
      } else {
        Rng rng = Rng::stream(spec.seed, ~std::uint64_t{0});
        gaps = sc_gaps_domain(m, spec.gap, rng);
      }
      return from_domain(gaps, spec.weighted, n, spec.seed);
    }
    default:
      break;
  }

  const Ranking axis = Ranking::identity(m);
  Certificate cert;
  if (spec.kind == Culture::Walsh || spec.kind == Culture::Conitzer) cert.axis = axis;
  if (spec.kind == Culture::CvcRandom) cert.tree = GSTree::caterpillar(axis.order());
  if (spec.kind == Culture::RBox) {
    if (!(spec.radius > 0)) throw InputError("rbox needs r > 0");
    if (!context.embedding) throw InputError("rbox culture needs an embedding");
    if (context.embedding->candidate_count() != m) throw InputError("embedding candidate count does not match m");
    if (!context.embedding->general_position()) throw DegenerateEmbedding("rbox embedding is degenerate; resample the candidates");
    cert.embedding = *context.embedding;
  }

  std::vector<Vote> votes;
  votes.reserve(static_cast<std::size_t>(n));
  std::vector<double> point;
  for (std::int64_t i = 0; i < n; ++i) {
    Rng rng = Rng::stream(spec.seed, static_cast<std::uint64_t>(i));
    switch (spec.kind) {
      case Culture::IcFull: votes.push_back({random_ranking(m, rng), 1}); break;
      case Culture::Walsh: votes.push_back({walsh_vote(m, rng), 1}); break;
      case Culture::Conitzer: votes.push_back({conitzer_vote(m, rng), 1}); break;
      case Culture::CvcRandom: votes.push_back({cvc_random_vote(axis, rng), 1}); break;
      case Culture::RBox: {
        const auto& emb = *context.embedding;
        point.resize(static_cast<std::size_t>(emb.dimension()));
        for (int attempt = 0;; ++attempt) {
          for (auto& x : point) x = rng.uniform(-spec.radius, spec.radius);
          if (auto r = emb.rank_point(point)) {
            votes.push_back({std::move(*r), 1});
            break;
          }
          if (attempt > 1000) throw DegenerateEmbedding("rbox voter kept landing on a bisector");
        }
        break;
      }
      default:
        throw InputError("unsupported culture");
    }
  }
  return Election(m, std::move(votes), std::move(cert));
}

Domain sc_gaps_domain(const Domain& sc, int t) {
  if (!sc.chain) throw InputError("sc-gaps needs a domain with a single-crossing chain");
  if (t < 0) throw InputError("sc-gaps needs t >= 0");
  const auto& chain = *sc.chain;
  std::vector<int> picked;
  std::vector<double> picked_weight;
  std::size_t at = 0;
  std::size_t block = 1;
  double weight = 1.0;
  while (at + block <= chain.size()) {
    for (std::size_t i = 0; i < block; ++i) {
      picked.push_back(chain[at + i]);
      picked_weight.push_back(weight);
    }
    at += block + static_cast<std::size_t>(t);
    block *= 2;
    weight /= 2;
  }

  Domain d;
  d.m = sc.m;
  d.kind = DomainKind::SC;
  d.label = "SC/gaps" + std::to_string(t);
  std::vector<int> by_vote(picked.size());
  std::iota(by_vote.begin(), by_vote.end(), 0);
  std::sort(by_vote.begin(), by_vote.end(), [&](int a, int b) {
    return sc.votes[static_cast<std::size_t>(picked[static_cast<std::size_t>(a)])] <
           sc.votes[static_cast<std::size_t>(picked[static_cast<std::size_t>(b)])];
  });
  std::vector<double> weights;
  std::vector<int> new_index(picked.size());
  for (std::size_t i = 0; i < by_vote.size(); ++i) {
    const auto src = static_cast<std::size_t>(by_vote[i]);
    d.votes.push_back(sc.votes[static_cast<std::size_t>(picked[src])]);
    weights.push_back(picked_weight[src]);
    new_index[src] = static_cast<int>(i);
  }
  d.weights = std::move(weights);
  d.chain = std::move(new_index);
  return d;
}

Domain sc_gaps_domain(int m, int t, Rng& rng) { return sc_gaps_domain(generate_sc_chain(rng, m), t); }

}  // namespace kdiv
