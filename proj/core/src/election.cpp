#include "kdiv/election.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "kdiv/errors.hpp"

namespace kdiv {

Election::Election(int m, std::vector<Vote> votes, Certificate certificate)
    : m_(m), votes_(std::move(votes)), certificate_(std::move(certificate)) {
  if (m_ < 1) throw InputError("election needs at least one candidate");
  if (votes_.empty()) throw InputError("election needs at least one vote");
  for (const auto& v : votes_) {
    if (v.ranking.size() != m_) {
      throw InputError("vote " + to_string(v.ranking) + " does not rank exactly " + std::to_string(m_) + " candidates");
    }
    if (v.multiplicity < 1) throw InputError("vote multiplicity must be at least 1");
    n_ += v.multiplicity;
  }
  if (certificate_.axis && certificate_.axis->size() != m_) throw InputError("axis length does not match m");
  if (certificate_.tree && certificate_.tree->candidate_count() != m_) throw InputError("GS tree does not match m");
  if (certificate_.embedding && certificate_.embedding->candidate_count() != m_) {
    throw InputError("embedding does not match m");
  }
  if (certificate_.sc_order) {
    auto sorted = *certificate_.sc_order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != static_cast<int>(i) || sorted.size() != votes_.size()) {
        throw InputError("single-crossing order must list every vote index exactly once");
      }
    }
  }
}

Election Election::from_rankings(std::span<const Ranking> rankings, Certificate certificate) {
  if (rankings.empty()) throw InputError("election needs at least one vote");
  std::vector<Vote> votes;
  votes.reserve(rankings.size());
  for (const auto& r : rankings) votes.push_back({r, 1});
  return Election(rankings.front().size(), std::move(votes), std::move(certificate));
}

Election Election::with_certificate(Certificate certificate) const {
  return Election(m_, votes_, std::move(certificate));
}

Election Election::merged() const {
  std::vector<Vote> out;
  std::map<Ranking, std::size_t> index;
  for (const auto& v : votes_) {
    auto [it, inserted] = index.emplace(v.ranking, out.size());
    if (inserted) {
      out.push_back(v);
    } else {
      out[it->second].multiplicity += v.multiplicity;
    }
  }
  Certificate cert = certificate_;
  cert.sc_order.reset();
  return Election(m_, std::move(out), std::move(cert));
}

void WeightedTournament::add(const Ranking& vote, std::int64_t multiplicity) {
  for (int i = 0; i < vote.size(); ++i) {
    for (int j = i + 1; j < vote.size(); ++j) at(vote[i], vote[j]) += multiplicity;
  }
}

std::int64_t WeightedTournament::pairwise_lower_bound() const {
  std::int64_t total = 0;
  for (int a = 0; a < m_; ++a) {
    for (int b = a + 1; b < m_; ++b) total += std::min((*this)(a, b), (*this)(b, a));
  }
  return total;
}

WeightedTournament tournament(const Election& e) {
  WeightedTournament w(e.candidate_count());
  for (const auto& v : e.votes()) w.add(v.ranking, v.multiplicity);
  return w;
}

std::int64_t kemeny_score(const Election& e, const Ranking& r) {
  std::int64_t total = 0;
  for (const auto& v : e.votes()) total += v.multiplicity * swap_distance(v.ranking, r);
  return total;
}

std::int64_t kemeny_score(const WeightedTournament& w, const Ranking& r) {
  if (r.size() != w.candidate_count()) throw InputError("kemeny_score: ranking length mismatch");
  std::int64_t total = 0;
  for (int i = 0; i < r.size(); ++i) {
    for (int j = i + 1; j < r.size(); ++j) total += w(r[j], r[i]);
  }
  return total;
}

KKemenyEvaluation k_kemeny_score(const Election& e, std::span<const Ranking> centers) {
  if (centers.empty()) throw InputError("k_kemeny_score: center set is empty");
  KKemenyEvaluation out;
  out.assignment.reserve(e.votes().size());
  for (const auto& v : e.votes()) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    int best_index = 0;
    for (std::size_t c = 0; c < centers.size(); ++c) {
      const auto d = swap_distance(v.ranking, centers[c]);
      if (d < best) {
        best = d;
        best_index = static_cast<int>(c);
      }
    }
    out.score += v.multiplicity * best;
    out.assignment.push_back(best_index);
  }
  return out;
}

std::optional<Ranking> condorcet_ranking(const WeightedTournament& w) {
  const int m = w.candidate_count();
  std::vector<int> indegree(static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b && w(a, b) > w(b, a)) ++indegree[static_cast<std::size_t>(b)];
    }
  }
  std::vector<char> placed(static_cast<std::size_t>(m), 0);
  std::vector<Candidate> order;
  order.reserve(static_cast<std::size_t>(m));
  for (int step = 0; step < m; ++step) {
    int next = -1;
    for (int c = 0; c < m; ++c) {
      if (!placed[static_cast<std::size_t>(c)] && indegree[static_cast<std::size_t>(c)] == 0) {
        next = c;
        break;
      }
    }
    if (next < 0) return std::nullopt;  // strict majority cycle
    placed[static_cast<std::size_t>(next)] = 1;
    order.push_back(next);
    for (int b = 0; b < m; ++b) {
      if (b != next && w(next, b) > w(b, next)) --indegree[static_cast<std::size_t>(b)];
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (w(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) <
          w(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(i)])) {
        return std::nullopt;
      }
    }
  }
  return Ranking(std::move(order));
}

std::optional<Ranking> condorcet_ranking(const Election& e) { return condorcet_ranking(tournament(e)); }

void validate_single_crossing(const Election& e, std::span<const int> order) {
  const auto& votes = e.votes();
  if (order.size() != votes.size()) throw InputError("single-crossing order has the wrong length");
  std::vector<char> seen(votes.size(), 0);
  for (int idx : order) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= votes.size() || seen[static_cast<std::size_t>(idx)]) {
      throw InputError("single-crossing order is not a permutation of vote indices");
    }
    seen[static_cast<std::size_t>(idx)] = 1;
  }
  const int m = e.candidate_count();
  std::vector<std::vector<int>> pos;
  pos.reserve(order.size());
  for (int idx : order) pos.push_back(votes[static_cast<std::size_t>(idx)].ranking.positions());
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      int flips = 0;
      for (std::size_t i = 1; i < pos.size(); ++i) {
        const bool before = pos[i - 1][static_cast<std::size_t>(a)] < pos[i - 1][static_cast<std::size_t>(b)];
        const bool now = pos[i][static_cast<std::size_t>(a)] < pos[i][static_cast<std::size_t>(b)];
        if (before != now) ++flips;
      }
      if (flips > 1) {
        throw InputError("not single-crossing: candidates " + std::to_string(a) + " and " + std::to_string(b) +
                         " flip " + std::to_string(flips) + " times along the order");
      }
    }
  }
}

bool is_single_peaked(const Ranking& vote, const Ranking& axis) {
  if (vote.size() != axis.size()) return false;
  const auto axis_pos = axis.positions();
  int lo = axis_pos[static_cast<std::size_t>(vote[0])];
  int hi = lo;
  for (int i = 1; i < vote.size(); ++i) {
    const int p = axis_pos[static_cast<std::size_t>(vote[i])];
    if (p == lo - 1) {
      lo = p;
    } else if (p == hi + 1) {
      hi = p;
    } else {
      return false;
    }
  }
  return true;
}

bool is_single_peaked_on_circle(const Ranking& vote, const Ranking& cycle) {
  const int m = vote.size();
  if (m != cycle.size()) return false;
  const auto cpos = cycle.positions();
  int start = cpos[static_cast<std::size_t>(vote[0])];
  int length = 1;
  for (int i = 1; i < m; ++i) {
    const int p = cpos[static_cast<std::size_t>(vote[i])];
    if (p == (start - 1 + m) % m) {
      start = p;
    } else if (p != (start + length) % m) {
      return false;
    }
    ++length;
  }
  return true;
}

bool is_single_peaked_on_graph(const Ranking& vote, const std::vector<std::vector<int>>& adjacency) {
  const auto m = static_cast<std::size_t>(vote.size());
  if (adjacency.size() != m) return false;
  std::vector<char> chosen(m, 0);
  chosen[static_cast<std::size_t>(vote[0])] = 1;
  for (int i = 1; i < vote.size(); ++i) {
    const auto c = static_cast<std::size_t>(vote[i]);
    const bool touches = std::any_of(adjacency[c].begin(), adjacency[c].end(),
                                     [&](int nb) { return chosen[static_cast<std::size_t>(nb)] != 0; });
    if (!touches) return false;
    chosen[c] = 1;
  }
  return true;
}

bool is_caterpillar_consistent(const Ranking& vote, const Ranking& axis) {
  if (vote.size() != axis.size()) return false;
  const auto pos = vote.positions();
  int top = 0;
  int bottom = vote.size() - 1;
  for (Candidate c : axis) {
    const int p = pos[static_cast<std::size_t>(c)];
    if (p == top) {
      ++top;
    } else if (p == bottom) {
      --bottom;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace kdiv
