#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace flipmatch {

using Coord = std::int64_t;

// Coordinates are capped so that every 3-point orientation determinant fits
// comfortably in signed 64-bit arithmetic (differences <= 2^21, products
// <= 2^42, determinant <= 2^43).
inline constexpr Coord kCoordLimit = 1 << 20;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;  // (x, then y)
};

/// Undirected edge between two point indices, stored normalized with a < b.
struct Segment {
  int a = -1;
  int b = -1;

  Segment() = default;
  Segment(int u, int v);

  friend bool operator==(const Segment&, const Segment&) = default;
  friend auto operator<=>(const Segment&, const Segment&) = default;

  bool touches(int v) const { return v == a || v == b; }
  int other(int v) const { return v == a ? b : a; }
};

/// Immutable list of points; indices 0..size()-1 are the point labels used
/// everywhere else. Construction enforces the coordinate cap; distinctness
/// and general position are checked separately by validate_general_position.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> pts);  // throws std::domain_error on out-of-range coords

  int size() const { return static_cast<int>(pts_.size()); }
  const Point& operator[](int i) const { return pts_[static_cast<size_t>(i)]; }
  const std::vector<Point>& points() const { return pts_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> pts_;
};

/// Sign of the cross product (q-p) x (r-p): +1 counterclockwise, 0 collinear,
/// -1 clockwise. Exact; throws std::domain_error if a coordinate exceeds
/// kCoordLimit (the bound that guarantees no overflow).
int orient(const Point& p, const Point& q, const Point& r);

/// True iff x lies strictly inside the open segment pq (p != q).
bool point_on_open_segment(const Point& p, const Point& q, const Point& x);

/// True iff the closed segments ab and cd intersect in a point that is not a
/// shared endpoint. Segments sharing an endpoint never cross.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);
bool segments_cross(const Segment& s, const Segment& t, const PointSet& ps);

/// True iff the closed segment ab meets the open segment pq in at least one
/// point other than p and q. Used as the visibility-blocking predicate: a
/// segment touching the sightline only at p or q does not block it.
bool open_segment_hits(const Point& p, const Point& q, const Point& a, const Point& b);

/// True iff any segment in segs blocks the open sightline from point p to
/// point q (point indices into ps).
bool open_segment_blocked(int p, int q, const std::vector<Segment>& segs, const PointSet& ps);

struct GeneralPositionReport {
  enum class Kind { Ok, DuplicatePoints, CollinearTriple };
  Kind kind = Kind::Ok;
  int i = -1;
  int j = -1;
  int k = -1;  // unused for duplicates

  bool ok() const { return kind == Kind::Ok; }
  explicit operator bool() const { return ok(); }
};

/// Checks that all points are pairwise distinct and no three are collinear.
/// Reports the first offending pair/triple instead of throwing.
GeneralPositionReport validate_general_position(const PointSet& ps);

/// Convex hull indices in counterclockwise order, starting from the
/// lexicographically smallest point. Requires size >= 3 and general position.
std::vector<int> convex_hull(const PointSet& ps);

/// True iff every point lies on the convex hull.
bool is_convex_position(const PointSet& ps);

/// Point indices ordered by (x, then y); ties in x are broken by ascending y
/// so that the induced pairing of consecutive points is always plane.
std::vector<int> sort_left_to_right(const PointSet& ps);

}  // namespace flipmatch
