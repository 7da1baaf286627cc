#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "flipmatch/generators.hpp"
#include "flipmatch/geometry.hpp"

using namespace flipmatch;

namespace {

PointSet pts(std::initializer_list<Point> l) { return PointSet(std::vector<Point>(l)); }

// Independent crossing formulation for four distinct endpoints in general
// position: both endpoint pairs strictly straddle the other supporting line.
bool strict_straddle(const Point& a, const Point& b, const Point& c, const Point& d) {
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

}  // namespace

TEST_CASE("orient reports the turn direction") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orient({0, 0}, {1, 1}, {2, 2}) == 0);
  CHECK(orient({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("orient rejects coordinates beyond the exact-arithmetic bound") {
  CHECK_THROWS_AS(orient({kCoordLimit + 1, 0}, {1, 0}, {0, 1}), std::domain_error);
  CHECK_THROWS_AS(orient({0, 0}, {0, -kCoordLimit - 5}, {0, 1}), std::domain_error);
  CHECK_NOTHROW(orient({kCoordLimit, kCoordLimit}, {-kCoordLimit, -kCoordLimit}, {0, 1}));
}

TEST_CASE("orient flips sign under argument swaps") {
  Rng rng(11);
  for (int it = 0; it < 500; ++it) {
    const Point p{rng.range(-60, 60), rng.range(-60, 60)};
    const Point q{rng.range(-60, 60), rng.range(-60, 60)};
    const Point r{rng.range(-60, 60), rng.range(-60, 60)};
    const int o = orient(p, q, r);
    CHECK(orient(q, p, r) == -o);
    CHECK(orient(p, r, q) == -o);
    CHECK(orient(r, q, p) == -o);
    CHECK(orient(q, r, p) == o);  // cyclic rotation preserves the sign
  }
}

TEST_CASE("segments_cross on point fixtures") {
  CHECK(segments_cross({0, 0}, {4, 4}, {0, 4}, {4, 0}));
  CHECK_FALSE(segments_cross({0, 0}, {4, 0}, {0, 0}, {0, 4}));  // shared endpoint
  CHECK_FALSE(segments_cross({0, 0}, {1, 1}, {2, 0}, {3, 1}));
}

TEST_CASE("segments_cross detects an endpoint resting on the other segment") {
  // (2,0) lies in the interior of the horizontal segment.
  CHECK(segments_cross({0, 0}, {4, 0}, {2, 0}, {2, 3}));
  // Collinear overlap.
  CHECK(segments_cross({0, 0}, {4, 0}, {2, 0}, {6, 0}));
  // Collinear but disjoint.
  CHECK_FALSE(segments_cross({0, 0}, {2, 0}, {3, 0}, {6, 0}));
}

TEST_CASE("segments_cross is symmetric and matches the strict-straddle formulation") {
  // Independent oracle route: any crossing of two index-disjoint segments in
  // a general-position set must show up as four strict orientation signs.
  for (std::uint64_t seed : {3u, 8u, 21u}) {
    const PointSet ps = gen_random(8, seed, 60);
    const int n = ps.size();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = c + 1; d < n; ++d) {
            const Segment s(a, b), t(c, d);
            CHECK(segments_cross(s, t, ps) == segments_cross(t, s, ps));
            if (a == c || a == d || b == c || b == d) {
              CHECK_FALSE(segments_cross(s, t, ps));
            } else {
              CHECK(segments_cross(s, t, ps) == strict_straddle(ps[a], ps[b], ps[c], ps[d]));
            }
          }
  }
}

TEST_CASE("point_on_open_segment excludes the endpoints") {
  CHECK(point_on_open_segment({0, 0}, {4, 0}, {2, 0}));
  CHECK_FALSE(point_on_open_segment({0, 0}, {4, 0}, {0, 0}));
  CHECK_FALSE(point_on_open_segment({0, 0}, {4, 0}, {4, 0}));
  CHECK_FALSE(point_on_open_segment({0, 0}, {4, 0}, {5, 0}));
  CHECK_FALSE(point_on_open_segment({0, 0}, {4, 0}, {2, 1}));
}

TEST_CASE("open_segment_blocked on sightline fixtures") {
  {
    const PointSet ps = pts({{0, 0}, {4, 0}, {2, -1}, {2, 1}});
    CHECK(open_segment_blocked(0, 1, {Segment(2, 3)}, ps));
  }
  {
    // Blocker touches the sightline only at its endpoint p: does not block.
    const PointSet ps = pts({{0, 0}, {4, 0}, {0, 3}});
    CHECK_FALSE(open_segment_blocked(0, 1, {Segment(0, 2)}, ps));
  }
  {
    // Blocker endpoint sits on the open interior of the sightline.
    const PointSet ps = pts({{0, 0}, {6, 0}, {3, 0}, {3, 5}});
    CHECK(open_segment_blocked(0, 1, {Segment(2, 3)}, ps));
  }
}

TEST_CASE("open_segment_blocked skips the sightline segment itself") {
  const PointSet ps = pts({{0, 0}, {4, 0}, {1, 2}, {3, 2}});
  CHECK_FALSE(open_segment_blocked(0, 1, {Segment(0, 1)}, ps));
  CHECK_FALSE(open_segment_blocked(2, 3, {Segment(0, 1), Segment(2, 3)}, ps));
}

TEST_CASE("validate_general_position reports the first violation") {
  CHECK(validate_general_position(pts({{0, 0}, {4, 0}, {1, 3}})).ok());
  {
    const GeneralPositionReport r = validate_general_position(pts({{0, 0}, {1, 1}, {2, 2}}));
    REQUIRE_FALSE(r.ok());
    CHECK(r.kind == GeneralPositionReport::Kind::CollinearTriple);
    CHECK(r.i == 0);
    CHECK(r.j == 1);
    CHECK(r.k == 2);
  }
  {
    const GeneralPositionReport r = validate_general_position(pts({{0, 0}, {0, 0}, {1, 3}}));
    REQUIRE_FALSE(r.ok());
    CHECK(r.kind == GeneralPositionReport::Kind::DuplicatePoints);
    CHECK(r.i == 0);
    CHECK(r.j == 1);
  }
}

TEST_CASE("convex_hull lists the extreme points counterclockwise from the lex-min") {
  CHECK(convex_hull(pts({{0, 0}, {4, 0}, {1, 3}})) == std::vector<int>{0, 1, 2});
  CHECK(convex_hull(pts({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}})) ==
        std::vector<int>{4, 0, 1, 2, 3});
  // Interior point never appears.
  const std::vector<int> h = convex_hull(pts({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}, {2, 2}}));
  CHECK(h == std::vector<int>{4, 0, 1, 2, 3});
  CHECK_THROWS_AS(convex_hull(pts({{0, 0}, {1, 1}})), std::invalid_argument);
}

TEST_CASE("convex_hull triples all turn counterclockwise") {
  for (std::uint64_t seed : {1u, 5u, 9u, 13u}) {
    const PointSet ps = gen_random(11, seed, 200);
    const std::vector<int> h = convex_hull(ps);
    REQUIRE(h.size() >= 3);
    const int k = static_cast<int>(h.size());
    for (int i = 0; i < k; ++i) {
      CHECK(orient(ps[h[static_cast<size_t>(i)]], ps[h[static_cast<size_t>((i + 1) % k)]],
                   ps[h[static_cast<size_t>((i + 2) % k)]]) == 1);
    }
    // Every point not on the hull is strictly inside each hull edge's left side.
    for (int v = 0; v < ps.size(); ++v) {
      if (std::find(h.begin(), h.end(), v) != h.end()) continue;
      for (int i = 0; i < k; ++i) {
        CHECK(orient(ps[h[static_cast<size_t>(i)]], ps[h[static_cast<size_t>((i + 1) % k)]], ps[v]) == 1);
      }
    }
  }
}

TEST_CASE("is_convex_position distinguishes hull-only sets") {
  CHECK(is_convex_position(pts({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}})));
  CHECK_FALSE(is_convex_position(pts({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}, {2, 2}})));
  CHECK(is_convex_position(gen_convex(9, 4)));
}

TEST_CASE("sort_left_to_right orders by x then y") {
  CHECK(sort_left_to_right(pts({{3, 0}, {1, 5}, {2, 2}})) == std::vector<int>{1, 2, 0});
  // x-tie broken by ascending y.
  CHECK(sort_left_to_right(pts({{1, 5}, {1, 2}, {0, 0}})) == std::vector<int>{2, 1, 0});
  CHECK(sort_left_to_right(pts({{0, 0}, {1, 1}, {2, 0}})) == std::vector<int>{0, 1, 2});
}

TEST_CASE("point set construction enforces the coordinate cap") {
  CHECK_THROWS_AS(PointSet({{kCoordLimit + 1, 0}}), std::domain_error);
  CHECK_NOTHROW(PointSet({{kCoordLimit, -kCoordLimit}}));
}

TEST_CASE("segment normalizes its endpoints and rejects loops") {
  const Segment e(5, 2);
  CHECK(e.a == 2);
  CHECK(e.b == 5);
  CHECK(e.touches(2));
  CHECK(e.other(2) == 5);
  CHECK_THROWS_AS(Segment(3, 3), std::invalid_argument);
}
