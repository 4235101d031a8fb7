#include "kdiv/microscope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

#include "kdiv/distance_matrix.hpp"
#include "kdiv/election.hpp"
#include "kdiv/errors.hpp"
#include "kdiv/rng.hpp"
#include "kdiv/solvers.hpp"

namespace kdiv {

namespace {

// Theme.
constexpr double kCanvas = 600;
constexpr double kMargin = 30;
constexpr double kDotRadius = 3;
constexpr double kStarRadius = 9;
constexpr const char* kBackground = "#ffffff";
constexpr const char* kIcColor = "#d3d3d3";
constexpr const char* kStarStroke = "#000000";
constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

double raw_stress(std::span<const double> delta, const std::vector<std::array<double, 2>>& x) {
  const std::size_t n = x.size();
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::hypot(x[i][0] - x[j][0], x[i][1] - x[j][1]);
      const double r = d - delta[i * n + j];
      s += r * r;
    }
  }
  return s;
}

// Classical scaling: top two eigenpairs of the double-centered squared
// dissimilarities, by power iteration with deflation. Returns false when the
// spectrum has no positive part.
bool torgerson(std::span<const double> delta, std::size_t n, Rng& rng, std::vector<std::array<double, 2>>& out) {
  std::vector<double> b(n * n);
  std::vector<double> row_mean(n, 0.0);
  double grand = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d2 = delta[i * n + j] * delta[i * n + j];
      b[i * n + j] = d2;
      row_mean[i] += d2;
    }
    row_mean[i] /= static_cast<double>(n);
    grand += row_mean[i];
  }
  grand /= static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i * n + j] = -0.5 * (b[i * n + j] - row_mean[i] - row_mean[j] + grand);

  std::vector<double> vecs[2];
  double vals[2] = {0, 0};
  std::vector<double> v(n), w(n);
  for (int axis = 0; axis < 2; ++axis) {
    for (auto& x : v) x = rng.uniform(-1, 1);
    double lambda = 0;
    for (int it = 0; it < 500; ++it) {
      for (std::size_t i = 0; i < n; ++i) {
        double acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += b[i * n + j] * v[j];
        w[i] = acc;
      }
      for (int prev = 0; prev < axis; ++prev) {
        double dot = 0;
        for (std::size_t i = 0; i < n; ++i) dot += vecs[prev][i] * v[i];
        for (std::size_t i = 0; i < n; ++i) w[i] -= vals[prev] * dot * vecs[prev][i];
      }
      double norm = 0;
      for (double x : w) norm += x * x;
      norm = std::sqrt(norm);
      if (norm == 0) break;
      double next = 0;
      for (std::size_t i = 0; i < n; ++i) next += v[i] * w[i];
      for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
      const bool settled = std::abs(next - lambda) <= 1e-12 * std::abs(next);
      lambda = next;
      if (settled) break;
    }
    if (!(lambda > 0)) return false;
    vecs[axis] = v;
    vals[axis] = lambda;
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = {vecs[0][i] * std::sqrt(vals[0]), vecs[1][i] * std::sqrt(vals[1])};
  return true;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::span<const char* const> microscope_palette() { return kPalette; }

MdsResult embed_mds(std::span<const double> delta, std::size_t n, const MdsOptions& options) {
  if (delta.size() != n * n) throw InputError("dissimilarity matrix must be n x n");
  double norm = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (delta[i * n + i] != 0) throw InputError("dissimilarity matrix must have a zero diagonal");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (delta[i * n + j] != delta[j * n + i]) throw InputError("dissimilarity matrix must be symmetric");
      if (delta[i * n + j] < 0) throw InputError("dissimilarities must be nonnegative");
      norm += delta[i * n + j] * delta[i * n + j];
    }
  }
  MdsResult out;
  if (n == 0) return out;
  Rng rng(options.seed);
  const double scale = n > 1 ? std::sqrt(norm / (static_cast<double>(n) * static_cast<double>(n - 1) / 2)) : 1.0;
  out.points.resize(n);
  if (norm == 0 || n < 3 || !torgerson(delta, n, rng, out.points))
    for (auto& p : out.points) p = {rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
  if (norm == 0) {
    for (auto& p : out.points) p = {0, 0};
    out.stress_history.push_back(0);
    return out;
  }

  double stress = raw_stress(delta, out.points);
  out.stress_history.push_back(stress / norm);
  std::vector<std::array<double, 2>> next(n);
  for (int it = 0; it < options.max_iterations; ++it) {
    // Guttman transform with unit weights: X+ = B(X) X / n.
    for (std::size_t i = 0; i < n; ++i) {
      double bx = 0, by = 0, diag = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double d = std::hypot(out.points[i][0] - out.points[j][0], out.points[i][1] - out.points[j][1]);
        if (d <= 0) continue;
        const double b = delta[i * n + j] / d;
        diag += b;
        bx -= b * out.points[j][0];
        by -= b * out.points[j][1];
      }
      next[i] = {(bx + diag * out.points[i][0]) / static_cast<double>(n), (by + diag * out.points[i][1]) / static_cast<double>(n)};
    }
    out.points.swap(next);
    const double updated = raw_stress(delta, out.points);
    out.stress_history.push_back(updated / norm);
    const double drop = stress - updated;
    stress = updated;
    if (stress == 0 || drop / std::max(stress + drop, 1e-300) < options.tolerance) break;
  }
  out.stress = stress / norm;
  return out;
}

MicroscopePlot render_microscope(const Domain& domain, const MicroscopeOptions& options) {
  if (domain.votes.empty()) throw InputError("microscope needs a nonempty domain");
  if (options.k < 1) throw InputError("k must be at least 1");
  const Election e = to_election(domain);
  const auto space = build_search_space(e, &domain, 512, options.seed);
  const auto result = local_search(e, options.k, space, {options.restarts, options.seed});

  MicroscopePlot plot;
  plot.centers = result.centers;
  std::set<Ranking> present(domain.votes.begin(), domain.votes.end());
  for (const auto& v : domain.votes) {
    plot.rankings.push_back(v);
    plot.is_ic.push_back(false);
  }
  Rng rng = Rng::stream(options.seed, 0x1c);
  std::vector<Candidate> order(static_cast<std::size_t>(domain.m));
  for (int i = 0; i < options.extra_ic; ++i) {
    for (int c = 0; c < domain.m; ++c) order[static_cast<std::size_t>(c)] = c;
    rng.shuffle(std::span<Candidate>(order));
    Ranking r(order);
    if (present.insert(r).second) {
      plot.rankings.push_back(std::move(r));
      plot.is_ic.push_back(true);
    }
  }
  for (const auto& c : plot.centers) {
    if (present.insert(c).second) {
      plot.rankings.push_back(c);
      plot.is_ic.push_back(false);
    }
  }

  const std::size_t n = plot.rankings.size();
  const DistanceMatrix dm(plot.rankings, plot.rankings);
  std::vector<double> delta(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) delta[i * n + j] = dm(i, j);
  }
  MdsOptions mds = options.mds;
  mds.seed = options.mds.seed ^ options.seed;
  auto embedded = embed_mds(delta, n, mds);
  plot.points = std::move(embedded.points);
  plot.stress = embedded.stress;
  plot.stress_history = std::move(embedded.stress_history);

  plot.colors.assign(n, -1);
  plot.is_center.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = std::find(plot.centers.begin(), plot.centers.end(), plot.rankings[i]);
    if (it != plot.centers.end()) {
      plot.is_center[i] = true;
      plot.colors[i] = static_cast<int>(it - plot.centers.begin());
      plot.is_ic[i] = false;
      continue;
    }
    if (plot.is_ic[i]) continue;
    std::int64_t best = -1;
    for (std::size_t c = 0; c < plot.centers.size(); ++c) {
      const auto d = swap_distance(plot.rankings[i], plot.centers[c]);
      if (best < 0 || d < best) {
        best = d;
        plot.colors[i] = static_cast<int>(c);
      }
    }
  }
  return plot;
}

std::string microscope_svg(const MicroscopePlot& plot, const std::string& title) {
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (std::size_t i = 0; i < plot.points.size(); ++i) {
    const auto& p = plot.points[i];
    if (i == 0 || p[0] < lo_x) lo_x = p[0];
    if (i == 0 || p[0] > hi_x) hi_x = p[0];
    if (i == 0 || p[1] < lo_y) lo_y = p[1];
    if (i == 0 || p[1] > hi_y) hi_y = p[1];
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double scale = (kCanvas - 2 * kMargin) / span;
  auto px = [&](double x) { return kMargin + (x - lo_x) * scale; };
  auto py = [&](double y) { return kCanvas - kMargin - (y - lo_y) * scale; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(kCanvas) + "\" height=\"" + fmt(kCanvas) +
         "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"" + std::string(kBackground) + "\"/>\n";
  std::string escaped;
  for (char ch : title) {
    if (ch == '<') escaped += "&lt;";
    else if (ch == '>') escaped += "&gt;";
    else if (ch == '&') escaped += "&amp;";
    else escaped += ch;
  }
  out += "<title>" + escaped + "</title>\n";
  // Background votes first so domain votes stay visible.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < plot.points.size(); ++i) {
      if (plot.is_center[i] || plot.is_ic[i] != (pass == 0)) continue;
      const char* fill = plot.is_ic[i] ? kIcColor : kPalette[static_cast<std::size_t>(plot.colors[i]) % std::size(kPalette)];
      out += "<circle cx=\"" + fmt(px(plot.points[i][0])) + "\" cy=\"" + fmt(py(plot.points[i][1])) + "\" r=\"" +
             fmt(kDotRadius) + "\" fill=\"" + fill + "\"/>\n";
    }
  }
  for (std::size_t i = 0; i < plot.points.size(); ++i) {
    if (!plot.is_center[i]) continue;
    const double cx = px(plot.points[i][0]);
    const double cy = py(plot.points[i][1]);
    std::string pts;
    for (int v = 0; v < 10; ++v) {
      const double rad = (v % 2 == 0 ? kStarRadius : kStarRadius * 0.45);
      const double ang = -std::numbers::pi / 2 + v * std::numbers::pi / 5;
      pts += (v ? " " : "") + fmt(cx + rad * std::cos(ang)) + "," + fmt(cy + rad * std::sin(ang));
    }
    out += "<polygon points=\"" + pts + "\" fill=\"" + kPalette[static_cast<std::size_t>(plot.colors[i]) % std::size(kPalette)] +
           "\" stroke=\"" + kStarStroke + "\" stroke-width=\"1\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string microscope_csv(const MicroscopePlot& plot) {
  std::string out = "vote_id,x,y,color,is_center,is_ic\n";
  for (std::size_t i = 0; i < plot.points.size(); ++i) {
    out += std::to_string(i) + "," + fmt(plot.points[i][0]) + "," + fmt(plot.points[i][1]) + "," +
           std::to_string(plot.colors[i]) + "," + (plot.is_center[i] ? "1" : "0") + "," + (plot.is_ic[i] ? "1" : "0") + "\n";
  }
  return out;
}

}  // namespace kdiv
