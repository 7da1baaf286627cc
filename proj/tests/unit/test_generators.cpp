#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "flipmatch/flipgraph.hpp"
#include "flipmatch/generators.hpp"

using namespace flipmatch;

namespace {

Point rot90(const Point& p) { return Point{-p.y, p.x}; }

bool unmatched_on_hull(const PointSet& ps, const Matching& m) {
  const std::vector<int> hull = convex_hull(ps);
  return std::find(hull.begin(), hull.end(), m.unmatched) != hull.end();
}

}  // namespace

TEST_CASE("Rng streams are reproducible and in range") {
  Rng a(42), b(42), c(43);
  bool diverged = false;
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t va = a.next();
    CHECK(va == b.next());
    if (va != c.next()) diverged = true;
  }
  CHECK(diverged);

  Rng r(7);
  CHECK(r.below(1) == 0);
  std::set<std::uint64_t> seen_below;
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t v = r.below(5);
    CHECK(v < 5);
    seen_below.insert(v);
  }
  CHECK(seen_below.size() == 5);

  std::set<std::int64_t> seen_range;
  for (int i = 0; i < 300; ++i) {
    const std::int64_t v = r.range(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    seen_range.insert(v);
  }
  CHECK(seen_range.count(-3) == 1);  // both endpoints reachable
  CHECK(seen_range.count(3) == 1);
  CHECK(r.range(5, 5) == 5);
}

TEST_CASE("gen_convex puts points on the parabola in convex position") {
  for (int n : {1, 3, 4, 9, 15}) {
    const PointSet ps = gen_convex(n, 11);
    CHECK(ps.size() == n);
    for (int i = 0; i < n; ++i) CHECK(ps[i].y == ps[i].x * ps[i].x);
    if (n >= 3) {
      CHECK(is_convex_position(ps));
      CHECK(validate_general_position(ps).ok());
    }
  }
  CHECK(gen_convex(9, 11).points() == gen_convex(9, 11).points());
  CHECK(gen_convex(9, 11).points() != gen_convex(9, 12).points());
}

TEST_CASE("gen_random stays in bounds and in general position") {
  for (std::uint64_t seed : {0u, 5u, 19u}) {
    const PointSet ps = gen_random(11, seed, 200);
    CHECK(ps.size() == 11);
    CHECK(validate_general_position(ps).ok());
    for (int i = 0; i < ps.size(); ++i) {
      CHECK(ps[i].x >= -200);
      CHECK(ps[i].x <= 200);
      CHECK(ps[i].y >= -200);
      CHECK(ps[i].y <= 200);
    }
  }
  CHECK(gen_random(9, 4).points() == gen_random(9, 4).points());
}

TEST_CASE("gen_nested builds rings of walls around an unmatched center") {
  for (int layers : {1, 2, 3}) {
    const NestedInstance inst = gen_nested(layers, 1);
    CHECK(inst.layers == layers);
    CHECK(inst.points.size() == 6 * layers + 1);
    CHECK(validate_general_position(inst.points).ok());
    CHECK(validate_matching(inst.points, inst.walls) == std::nullopt);
    CHECK(inst.walls.unmatched == 0);
    CHECK_FALSE(unmatched_on_hull(inst.points, inst.walls));
  }
}

TEST_CASE("one ring of walls costs exactly one flip to escape") {
  const NestedInstance inst = gen_nested(1, 1);
  const int d = lazy_bfs_distance(inst.points, inst.walls, FlipRule::EdgeFlip,
                                  [&](const Matching& m) { return unmatched_on_hull(inst.points, m); },
                                  10);
  CHECK(d == 1);
}

TEST_CASE("gen_windmill pins the exact construction") {
  const WindmillInstance w = gen_windmill(1);
  REQUIRE(w.points.size() == 9);
  const std::vector<Point> expected = {{1, 1},  {5, 1},   {-1, 5}, {-5, -1}, {1, -5},
                                       {-5, 9}, {-9, -5}, {5, -9}, {9, 5}};
  CHECK(w.points.points() == expected);
  CHECK(w.vanes.unmatched == 0);
  CHECK(w.vanes.edges == std::vector<Segment>{Segment(1, 5), Segment(2, 6), Segment(3, 7), Segment(4, 8)});
  CHECK(validate_matching(w.points, w.vanes) == std::nullopt);
  CHECK(validate_general_position(w.points).ok());
  // The vane tips form two exact 90-degree orbits.
  for (int i = 0; i < 4; ++i) {
    CHECK(rot90(w.points[1 + i]) == w.points[1 + (i + 1) % 4]);
    CHECK(rot90(w.points[5 + i]) == w.points[5 + (i + 1) % 4]);
  }
}

TEST_CASE("windmill vanes block rotations but not edge flips") {
  for (int scale : {1, 2, 3}) {
    const WindmillInstance w = gen_windmill(scale);
    CHECK(legal_flips(w.points, w.vanes, FlipRule::EmptyTriangleRotation).empty());
    CHECK_FALSE(legal_flips(w.points, w.vanes, FlipRule::EdgeFlip).empty());
    CHECK(validate_matching(w.points, w.vanes) == std::nullopt);
  }
  // Scaling preserves every orientation sign, hence the whole flip structure.
  const WindmillInstance base = gen_windmill(1);
  const WindmillInstance wide = gen_windmill(3);
  CHECK(legal_flips(base.points, base.vanes, FlipRule::EdgeFlip) ==
        legal_flips(wide.points, wide.vanes, FlipRule::EdgeFlip));
}

TEST_CASE("rotation_search_family leads with the pinwheel") {
  const std::vector<PointSet> family = rotation_search_family();
  REQUIRE(family.size() >= 2);
  CHECK(family[0].points() == gen_windmill(1).points.points());
  for (const PointSet& ps : family) {
    CHECK(ps.size() % 2 == 1);
    CHECK(ps.size() <= 11);
    CHECK(validate_general_position(ps).ok());
  }
}
