#include "kdiv/arrangement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>

#include "kdiv/errors.hpp"

namespace kdiv {

namespace {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

// a*x + b*y = c with (a, b) a unit vector.
struct Line {
  double a, b, c;
};

// n . x = c with n a unit vector.
struct Plane {
  Vec3 n;
  double c;
};

bool same_line(const Line& p, const Line& q, double tol) {
  const bool same = std::abs(p.a - q.a) < 1e-9 && std::abs(p.b - q.b) < 1e-9 && std::abs(p.c - q.c) < tol;
  const bool flipped = std::abs(p.a + q.a) < 1e-9 && std::abs(p.b + q.b) < 1e-9 && std::abs(p.c + q.c) < tol;
  return same || flipped;
}

std::vector<Line> dedup_lines(const std::vector<Line>& lines, double tol) {
  std::vector<Line> out;
  for (const auto& l : lines) {
    if (std::none_of(out.begin(), out.end(), [&](const Line& o) { return same_line(l, o, tol); })) out.push_back(l);
  }
  return out;
}

// Points on both sides of every edge of a line arrangement: one sample per
// edge interior, pushed off the line by half the distance to the nearest
// other line. Every face of the arrangement has an edge, so every face
// receives at least one point.
std::vector<Vec2> face_points(const std::vector<Line>& raw, double tol) {
  const auto lines = dedup_lines(raw, tol);
  std::vector<Vec2> out;
  if (lines.empty()) {
    out.push_back({0.0, 0.0});
    return out;
  }
  std::vector<double> ts;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& li = lines[i];
    const Vec2 p0{li.c * li.a, li.c * li.b};
    const Vec2 dir{-li.b, li.a};
    ts.clear();
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (j == i) continue;
      const auto& lj = lines[j];
      const double den = lj.a * dir[0] + lj.b * dir[1];
      if (std::abs(den) < 1e-14) continue;
      ts.push_back((lj.c - (lj.a * p0[0] + lj.b * p0[1])) / den);
    }
    std::sort(ts.begin(), ts.end());
    std::vector<double> unique_ts;
    for (double t : ts) {
      if (unique_ts.empty() || t - unique_ts.back() > tol * std::max(1.0, std::abs(t))) unique_ts.push_back(t);
    }
    std::vector<double> samples;
    if (unique_ts.empty()) {
      samples.push_back(0.0);
    } else {
      const double span = std::max(1.0, unique_ts.back() - unique_ts.front());
      samples.push_back(unique_ts.front() - span);
      for (std::size_t k = 1; k < unique_ts.size(); ++k) samples.push_back(0.5 * (unique_ts[k - 1] + unique_ts[k]));
      samples.push_back(unique_ts.back() + span);
    }
    for (double t : samples) {
      const Vec2 q{p0[0] + t * dir[0], p0[1] + t * dir[1]};
      double delta = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < lines.size(); ++j) {
        if (j == i) continue;
        delta = std::min(delta, std::abs(lines[j].a * q[0] + lines[j].b * q[1] - lines[j].c));
      }
      if (!(delta > 0.0)) continue;
      const double eps = std::isinf(delta) ? 1.0 : 0.5 * delta;
      out.push_back({q[0] + eps * li.a, q[1] + eps * li.b});
      out.push_back({q[0] - eps * li.a, q[1] - eps * li.b});
    }
  }
  return out;
}

Vec3 cross(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

double dot(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

Vec3 normalized(Vec3 v) {
  const double len = std::sqrt(dot(v, v));
  for (auto& x : v) x /= len;
  return v;
}

std::vector<Plane> dedup_planes(const std::vector<Plane>& planes, double tol) {
  std::vector<Plane> out;
  for (const auto& p : planes) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](const Plane& o) {
      const bool same = std::abs(p.n[0] - o.n[0]) < 1e-9 && std::abs(p.n[1] - o.n[1]) < 1e-9 &&
                        std::abs(p.n[2] - o.n[2]) < 1e-9 && std::abs(p.c - o.c) < tol;
      const bool flipped = std::abs(p.n[0] + o.n[0]) < 1e-9 && std::abs(p.n[1] + o.n[1]) < 1e-9 &&
                           std::abs(p.n[2] + o.n[2]) < 1e-9 && std::abs(p.c + o.c) < tol;
      return same || flipped;
    });
    if (!dup) out.push_back(p);
  }
  return out;
}

// Same construction one dimension up: for each plane, find points inside
// every face of the line arrangement the other planes cut into it, then
// push them off the plane on both sides.
std::vector<Vec3> cell_points(const std::vector<Plane>& raw, double tol) {
  const auto planes = dedup_planes(raw, tol);
  std::vector<Vec3> out;
  for (std::size_t i = 0; i < planes.size(); ++i) {
    const auto& p = planes[i];
    const Vec3 helper = std::abs(p.n[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    const Vec3 u = normalized(cross(p.n, helper));
    const Vec3 v = cross(p.n, u);
    const Vec3 origin{p.c * p.n[0], p.c * p.n[1], p.c * p.n[2]};
    std::vector<Line> lines;
    for (std::size_t j = 0; j < planes.size(); ++j) {
      if (j == i) continue;
      const auto& q = planes[j];
      const double a = dot(q.n, u);
      const double b = dot(q.n, v);
      const double len = std::hypot(a, b);
      if (len < 1e-12) continue;
      lines.push_back({a / len, b / len, (q.c - dot(q.n, origin)) / len});
    }
    for (const auto& f : face_points(lines, tol)) {
      const Vec3 x{origin[0] + f[0] * u[0] + f[1] * v[0], origin[1] + f[0] * u[1] + f[1] * v[1],
                   origin[2] + f[0] * u[2] + f[1] * v[2]};
      double delta = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < planes.size(); ++j) {
        if (j == i) continue;
        delta = std::min(delta, std::abs(dot(planes[j].n, x) - planes[j].c));
      }
      if (!(delta > 0.0)) continue;
      const double eps = std::isinf(delta) ? 1.0 : 0.5 * delta;
      out.push_back({x[0] + eps * p.n[0], x[1] + eps * p.n[1], x[2] + eps * p.n[2]});
      out.push_back({x[0] - eps * p.n[0], x[1] - eps * p.n[1], x[2] - eps * p.n[2]});
    }
  }
  if (planes.empty()) out.push_back({0, 0, 0});
  return out;
}

template <std::size_t D>
bool inside_box(const std::array<double, D>& x, std::optional<double> r) {
  if (!r) return true;
  return std::all_of(x.begin(), x.end(), [&](double c) { return c > -*r && c < *r; });
}

}  // namespace

std::vector<Ranking> arrangement_rankings(const Embedding& embedding, std::optional<double> box_radius) {
  const int d = embedding.dimension();
  const int m = embedding.candidate_count();
  if (box_radius && !(*box_radius > 0.0)) throw InputError("box radius must be positive");
  const double tol = 1e-10 * std::max(embedding.spread(), box_radius.value_or(0.0));
  std::vector<Ranking> out;
  auto add = [&](std::span<const double> x) {
    if (auto r = embedding.rank_point(x)) out.push_back(std::move(*r));
  };

  if (d == 1) {
    std::vector<double> cuts;
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) cuts.push_back(0.5 * (embedding.point(a)[0] + embedding.point(b)[0]));
    }
    if (box_radius) {
      cuts.push_back(-*box_radius);
      cuts.push_back(*box_radius);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> samples;
    if (cuts.empty()) samples.push_back(0.0);
    else {
      const double span = std::max(1.0, cuts.back() - cuts.front());
      samples.push_back(cuts.front() - span);
      for (std::size_t k = 1; k < cuts.size(); ++k) {
        if (cuts[k] - cuts[k - 1] > tol) samples.push_back(0.5 * (cuts[k - 1] + cuts[k]));
      }
      samples.push_back(cuts.back() + span);
    }
    for (double x : samples) {
      if (!box_radius || (x > -*box_radius && x < *box_radius)) add(std::span<const double>(&x, 1));
    }
  } else if (d == 2) {
    std::vector<Line> lines;
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        const auto pa = embedding.point(a);
        const auto pb = embedding.point(b);
        const double nx = pb[0] - pa[0];
        const double ny = pb[1] - pa[1];
        const double len = std::hypot(nx, ny);
        const double c = 0.5 * (pb[0] * pb[0] + pb[1] * pb[1] - pa[0] * pa[0] - pa[1] * pa[1]);
        lines.push_back({nx / len, ny / len, c / len});
      }
    }
    if (box_radius) {
      const double r = *box_radius;
      lines.push_back({1, 0, r});
      lines.push_back({1, 0, -r});
      lines.push_back({0, 1, r});
      lines.push_back({0, 1, -r});
    }
    for (const auto& x : face_points(lines, tol)) {
      if (inside_box(x, box_radius)) add(x);
    }
  } else if (d == 3) {
    std::vector<Plane> planes;
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        const auto pa = embedding.point(a);
        const auto pb = embedding.point(b);
        Vec3 n{pb[0] - pa[0], pb[1] - pa[1], pb[2] - pa[2]};
        const double len = std::sqrt(dot(n, n));
        double c = 0.0;
        for (int k = 0; k < 3; ++k) c += pb[static_cast<std::size_t>(k)] * pb[static_cast<std::size_t>(k)] -
                                        pa[static_cast<std::size_t>(k)] * pa[static_cast<std::size_t>(k)];
        planes.push_back({{n[0] / len, n[1] / len, n[2] / len}, 0.5 * c / len});
      }
    }
    if (box_radius) {
      const double r = *box_radius;
      for (int k = 0; k < 3; ++k) {
        Vec3 n{0, 0, 0};
        n[static_cast<std::size_t>(k)] = 1;
        planes.push_back({n, r});
        planes.push_back({n, -r});
      }
    }
    for (const auto& x : cell_points(planes, tol)) {
      if (inside_box(x, box_radius)) add(x);
    }
  } else {
    throw InputError("arrangement enumeration supports d <= 3; use sampled_rankings for higher dimensions");
  }
  sort_unique(out);
  return out;
}

std::vector<Ranking> sampled_rankings(const Embedding& embedding, Rng& rng, int stable_batches, int batch_size) {
  const int d = embedding.dimension();
  const double spread = embedding.spread();
  std::set<Ranking> seen;
  std::vector<double> x(static_cast<std::size_t>(d));
  int stable = 0;
  for (int batch = 0; stable < stable_batches; ++batch) {
    const std::size_t before = seen.size();
    // Cycle through radii so far-away unbounded cells also get hit.
    const double radius = spread * std::pow(4.0, batch % 6);
    for (int s = 0; s < batch_size; ++s) {
      for (auto& c : x) c = rng.uniform(-radius, radius);
      if (auto r = embedding.rank_point(x)) seen.insert(std::move(*r));
    }
    stable = seen.size() == before ? stable + 1 : 0;
  }
  return {seen.begin(), seen.end()};
}

}  // namespace kdiv
