#include "flipmatch/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace flipmatch {

namespace {

void check_coord(Coord c) {
  if (c > kCoordLimit || c < -kCoordLimit) {
    throw std::domain_error("coordinate " + std::to_string(c) +
                            " exceeds exact-arithmetic bound " + std::to_string(kCoordLimit));
  }
}

void check_point(const Point& p) {
  check_coord(p.x);
  check_coord(p.y);
}

int sign64(std::int64_t v) { return (v > 0) - (v < 0); }

// Scalar projection helpers for points known to be collinear with pq:
// t(x) = (x - p) . (q - p). Along the line, t is strictly increasing from
// t(p) = 0 to t(q) = |q-p|^2 > 0. Fits in 64 bits under the coordinate cap.
std::int64_t line_param(const Point& p, const Point& q, const Point& x) {
  return (x.x - p.x) * (q.x - p.x) + (x.y - p.y) * (q.y - p.y);
}

}  // namespace

Segment::Segment(int u, int v) : a(std::min(u, v)), b(std::max(u, v)) {
  if (u == v) throw std::invalid_argument("degenerate segment: both endpoints are " + std::to_string(u));
}

PointSet::PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
  for (const Point& p : pts_) check_point(p);
}

int orient(const Point& p, const Point& q, const Point& r) {
  check_point(p);
  check_point(q);
  check_point(r);
  const std::int64_t det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sign64(det);
}

bool point_on_open_segment(const Point& p, const Point& q, const Point& x) {
  if (orient(p, q, x) != 0) return false;
  const std::int64_t t = line_param(p, q, x);
  return t > 0 && t < line_param(p, q, q);
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (a == c || a == d || b == c || b == d) return false;  // shared endpoint, by definition no crossing
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;  // proper crossing
  // Touching configurations: an endpoint of one segment on the closed other.
  // The endpoints are pairwise distinct here, so any such touch is an
  // intersection point that is not a shared endpoint.
  if (o1 == 0 && line_param(a, b, c) >= 0 && line_param(a, b, c) <= line_param(a, b, b)) return true;
  if (o2 == 0 && line_param(a, b, d) >= 0 && line_param(a, b, d) <= line_param(a, b, b)) return true;
  if (o3 == 0 && line_param(c, d, a) >= 0 && line_param(c, d, a) <= line_param(c, d, d)) return true;
  if (o4 == 0 && line_param(c, d, b) >= 0 && line_param(c, d, b) <= line_param(c, d, d)) return true;
  return false;
}

bool segments_cross(const Segment& s, const Segment& t, const PointSet& ps) {
  if (s.touches(t.a) || s.touches(t.b)) return false;
  return segments_cross(ps[s.a], ps[s.b], ps[t.a], ps[t.b]);
}

bool open_segment_hits(const Point& p, const Point& q, const Point& a, const Point& b) {
  if (a == b) return point_on_open_segment(p, q, a);
  const int o1 = orient(p, q, a);
  const int o2 = orient(p, q, b);
  if (o1 == 0 && o2 == 0) {
    // ab lies on the line through pq; intersect the closed interval [a,b]
    // with the open interval (p,q) along that line.
    const std::int64_t ta = line_param(p, q, a);
    const std::int64_t tb = line_param(p, q, b);
    return std::min(ta, tb) < line_param(p, q, q) && std::max(ta, tb) > 0;
  }
  const int o3 = orient(a, b, p);
  const int o4 = orient(a, b, q);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;  // crossing point interior to both
  // a or b strictly inside the open sightline blocks it. The symmetric cases
  // (p or q on ab) put the intersection at p or q, which does not block.
  if (o1 == 0 && point_on_open_segment(p, q, a)) return true;
  if (o2 == 0 && point_on_open_segment(p, q, b)) return true;
  return false;
}

bool open_segment_blocked(int p, int q, const std::vector<Segment>& segs, const PointSet& ps) {
  for (const Segment& s : segs) {
    if (s.touches(p) && s.touches(q)) continue;  // the sightline itself
    if (open_segment_hits(ps[p], ps[q], ps[s.a], ps[s.b])) return true;
  }
  return false;
}

GeneralPositionReport validate_general_position(const PointSet& ps) {
  const int n = ps.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (ps[i] == ps[j]) return {GeneralPositionReport::Kind::DuplicatePoints, i, j, -1};
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (orient(ps[i], ps[j], ps[k]) == 0) {
          return {GeneralPositionReport::Kind::CollinearTriple, i, j, k};
        }
      }
    }
  }
  return {};
}

std::vector<int> convex_hull(const PointSet& ps) {
  const int n = ps.size();
  if (n < 3) throw std::invalid_argument("convex hull needs at least 3 points, got " + std::to_string(n));
  std::vector<int> idx = sort_left_to_right(ps);
  // Monotone chain. With general position no three hull candidates are
  // collinear, so popping on orient <= 0 keeps exactly the extreme points.
  std::vector<int> hull;
  auto build = [&](auto begin, auto end) {
    const size_t base = hull.size();
    for (auto it = begin; it != end; ++it) {
      while (hull.size() >= base + 2 &&
             orient(ps[hull[hull.size() - 2]], ps[hull[hull.size() - 1]], ps[*it]) <= 0) {
        hull.pop_back();
      }
      hull.push_back(*it);
    }
  };
  build(idx.begin(), idx.end());
  hull.pop_back();  // lex-max is re-added first by the upper chain
  build(idx.rbegin(), idx.rend());
  hull.pop_back();  // lex-min closes the cycle, already at position 0
  return hull;
}

bool is_convex_position(const PointSet& ps) {
  return static_cast<int>(convex_hull(ps).size()) == ps.size();
}

std::vector<int> sort_left_to_right(const PointSet& ps) {
  std::vector<int> idx(static_cast<size_t>(ps.size()));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) { return ps[i] < ps[j]; });
  return idx;
}

}  // namespace flipmatch
