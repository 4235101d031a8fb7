#include "kdiv/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kdiv/errors.hpp"

namespace kdiv {

namespace {

struct Bisector {
  std::vector<double> normal;
  double offset;
};

// Unit-normal bisector of (a, b), sign fixed so the first nonzero
// coordinate of the normal is positive.
Bisector bisector(std::span<const double> a, std::span<const double> b) {
  Bisector h{std::vector<double>(a.size()), 0.0};
  double norm = 0.0;
  double off = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    h.normal[i] = b[i] - a[i];
    norm += h.normal[i] * h.normal[i];
    off += b[i] * b[i] - a[i] * a[i];
  }
  norm = std::sqrt(norm);
  h.offset = off / 2.0 / norm;
  for (auto& x : h.normal) x /= norm;
  for (double x : h.normal) {
    if (std::abs(x) > 1e-12) {
      if (x < 0) {
        for (auto& y : h.normal) y = -y;
        h.offset = -h.offset;
      }
      break;
    }
  }
  return h;
}

}  // namespace

Embedding::Embedding(std::vector<std::vector<double>> points) : points_(std::move(points)) {
  if (points_.empty()) throw InputError("embedding needs at least one candidate");
  dimension_ = static_cast<int>(points_.front().size());
  if (dimension_ < 1) throw InputError("embedding dimension must be at least 1");
  for (const auto& p : points_) {
    if (static_cast<int>(p.size()) != dimension_) throw InputError("embedding points have mixed dimensions");
    for (double x : p) {
      if (!std::isfinite(x)) throw InputError("embedding coordinates must be finite");
    }
  }
  const double tol = 1e-9 * spread();
  general_position_ = true;
  std::vector<Bisector> bisectors;
  const int m = candidate_count();
  for (int a = 0; a < m && general_position_; ++a) {
    for (int b = a + 1; b < m; ++b) {
      double d2 = 0.0;
      for (int i = 0; i < dimension_; ++i) {
        const double diff = points_[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] -
                            points_[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)];
        d2 += diff * diff;
      }
      if (std::sqrt(d2) <= tol) {
        general_position_ = false;
        break;
      }
      bisectors.push_back(bisector(point(a), point(b)));
    }
  }
  for (std::size_t i = 0; i < bisectors.size() && general_position_; ++i) {
    for (std::size_t j = i + 1; j < bisectors.size(); ++j) {
      double dn = 0.0;
      for (int k = 0; k < dimension_; ++k) {
        dn = std::max(dn, std::abs(bisectors[i].normal[static_cast<std::size_t>(k)] -
                                   bisectors[j].normal[static_cast<std::size_t>(k)]));
      }
      if (dn < 1e-9 && std::abs(bisectors[i].offset - bisectors[j].offset) < tol) {
        general_position_ = false;
        break;
      }
    }
  }
}

Embedding Embedding::uniform_cube(int m, int d, Rng& rng) {
  std::vector<std::vector<double>> pts(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(d)));
  for (auto& p : pts) {
    for (auto& x : p) x = rng.uniform(-1.0, 1.0);
  }
  return Embedding(std::move(pts));
}

double Embedding::spread() const {
  double s = 1e-12;
  for (const auto& p : points_) {
    for (double x : p) s = std::max(s, std::abs(x));
  }
  return s;
}

std::optional<Ranking> Embedding::rank_point(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dimension_) throw InputError("rank_point: dimension mismatch");
  const int m = candidate_count();
  // |x - c|^2 - |x|^2 = |c|^2 - 2 x.c avoids cancellation far from the origin.
  std::vector<long double> key(static_cast<std::size_t>(m));
  long double scale = 1.0L;
  for (int c = 0; c < m; ++c) {
    long double k = 0.0L;
    for (int i = 0; i < dimension_; ++i) {
      const long double pc = points_[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
      k += pc * pc - 2.0L * pc * static_cast<long double>(x[static_cast<std::size_t>(i)]);
    }
    key[static_cast<std::size_t>(c)] = k;
    scale = std::max(scale, std::abs(k));
  }
  std::vector<Candidate> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Candidate a, Candidate b) {
    return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)] ||
           (key[static_cast<std::size_t>(a)] == key[static_cast<std::size_t>(b)] && a < b);
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (key[static_cast<std::size_t>(order[i])] - key[static_cast<std::size_t>(order[i - 1])] <= 1e-15L * scale) {
      return std::nullopt;
    }
  }
  return Ranking(std::move(order));
}

}  // namespace kdiv
