#include "flipmatch/generators.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace flipmatch {

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty sampling range");
  const std::uint64_t limit = ~0ULL - ~0ULL % bound;  // reject the biased tail
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty sampling range");
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

PointSet gen_convex(int n, std::uint64_t seed) {
  if (n < 1 || n > 2001) throw std::invalid_argument("convex generator supports 1..2001 points");
  Rng rng(seed);
  std::set<std::int64_t> ts;
  while (static_cast<int>(ts.size()) < n) ts.insert(rng.range(-1000, 1000));
  // Shuffle the abscissas so indices do not follow the hull order.
  std::vector<std::int64_t> t(ts.begin(), ts.end());
  for (size_t i = t.size(); i > 1; --i) {
    std::swap(t[i - 1], t[static_cast<size_t>(rng.below(i))]);
  }
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(n));
  for (std::int64_t v : t) pts.push_back(Point{v, v * v});
  return PointSet(std::move(pts));
}

PointSet gen_random(int n, std::uint64_t seed, Coord bound) {
  if (n < 1) throw std::invalid_argument("point count must be positive");
  if (bound < 1 || bound > kCoordLimit) throw std::invalid_argument("bound out of range");
  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(n));
  int attempts = 0;
  while (static_cast<int>(pts.size()) < n) {
    if (++attempts > 200000) {
      throw std::runtime_error("rejection sampling failed; bound too small for " +
                               std::to_string(n) + " points");
    }
    const Point cand{rng.range(-bound, bound), rng.range(-bound, bound)};
    bool ok = true;
    for (size_t i = 0; ok && i < pts.size(); ++i) {
      if (pts[i] == cand) ok = false;
      for (size_t j = i + 1; ok && j < pts.size(); ++j) {
        if (orient(pts[i], pts[j], cand) == 0) ok = false;
      }
    }
    if (ok) pts.push_back(cand);
  }
  return PointSet(std::move(pts));
}

NestedInstance gen_nested(int layers, std::uint64_t seed) {
  if (layers < 1 || layers > 8) throw std::invalid_argument("layer count must be in 1..8");
  Rng rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Point> pts{{0, 0}};
    std::vector<Segment> walls;
    for (int l = 1; l <= layers; ++l) {
      const Coord radius = 12 * (1LL << (2 * (l - 1)));  // 12 * 4^(l-1)
      const int stagger = l % 2 == 0 ? 60 : 0;           // alternate rings cover each other's gaps
      const Coord jitter = std::max<Coord>(1, radius / 24);
      std::vector<int> ring;
      for (int k = 0; k < 3; ++k) {
        for (const int off : {-55, 55}) {
          const double ang = (120.0 * k + off + stagger) * 3.14159265358979323846 / 180.0;
          const Coord x = std::llround(radius * std::cos(ang)) + rng.range(-jitter, jitter);
          const Coord y = std::llround(radius * std::sin(ang)) + rng.range(-jitter, jitter);
          ring.push_back(static_cast<int>(pts.size()));
          pts.push_back(Point{x, y});
        }
      }
      for (int k = 0; k < 3; ++k) walls.emplace_back(ring[static_cast<size_t>(2 * k)], ring[static_cast<size_t>(2 * k + 1)]);
    }
    const PointSet ps(pts);
    if (!validate_general_position(ps).ok()) continue;
    Matching m{walls, 0};
    normalize(m);
    if (validate_matching(ps, m)) continue;
    return NestedInstance{ps, m, layers};
  }
  throw std::runtime_error("no valid nested instance within the retry budget");
}

WindmillInstance gen_windmill(int scale) {
  if (scale < 1 || scale > 1000) throw std::invalid_argument("scale must be in 1..1000");
  // Exact quarter-turn orbits of one inner and one outer vane tip. Scaling
  // multiplies every orientation determinant by a positive factor, so the
  // instance's combinatorics are scale-invariant.
  const Point center{1, 1};
  Point inner{5, 1};
  Point outer{-5, 9};
  std::vector<Point> pts(9);
  pts[0] = Point{center.x * scale, center.y * scale};
  for (int k = 0; k < 4; ++k) {
    pts[static_cast<size_t>(1 + k)] = Point{inner.x * scale, inner.y * scale};
    pts[static_cast<size_t>(5 + k)] = Point{outer.x * scale, outer.y * scale};
    inner = Point{-inner.y, inner.x};
    outer = Point{-outer.y, outer.x};
  }
  Matching m;
  for (int k = 0; k < 4; ++k) m.edges.emplace_back(1 + k, 5 + k);
  m.unmatched = 0;
  normalize(m);
  WindmillInstance w{PointSet(std::move(pts)), m};
  if (!validate_general_position(w.points).ok() || validate_matching(w.points, w.vanes)) {
    throw std::logic_error("pinwheel construction degenerated");
  }
  return w;
}

std::vector<PointSet> rotation_search_family() {
  std::vector<PointSet> family;
  for (int scale : {1, 2, 3}) family.push_back(gen_windmill(scale).points);
  family.push_back(gen_convex(7, 3));
  family.push_back(gen_nested(1, 1).points);
  return family;
}

}  // namespace flipmatch
