#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "flipmatch/flipgraph.hpp"
#include "flipmatch/flipseq.hpp"
#include "flipmatch/generators.hpp"

using namespace flipmatch;

namespace {

PointSet pts(std::initializer_list<Point> l) { return PointSet(std::vector<Point>(l)); }

PointSet triangle() { return pts({{0, 0}, {4, 0}, {1, 3}}); }

Matching make(std::initializer_list<Segment> edges, int unmatched) {
  Matching m{std::vector<Segment>(edges), unmatched};
  normalize(m);
  return m;
}

int edge_budget(const PointSet& ps) { return (ps.size() - 1) / 2; }

}  // namespace

TEST_CASE("route_unmatched moves the gap with one flip on the triangle") {
  const PointSet ps = triangle();
  const Matching m = make({Segment(0, 1)}, 2);
  const FlipSequence seq = route_unmatched(ps, m, 0);
  CHECK(seq.start == m);
  CHECK(seq.flips == std::vector<Flip>{Flip{2, 1, 0}});
  CHECK(end_matching(ps, seq) == make({Segment(1, 2)}, 0));
  CHECK(route_unmatched(ps, m, 2).flips.empty());
}

TEST_CASE("route_unmatched reaches every target within the edge budget") {
  std::vector<PointSet> sets;
  sets.push_back(gen_convex(5, 12));
  sets.push_back(gen_random(5, 31));
  sets.push_back(gen_convex(7, 12));
  sets.push_back(gen_random(7, 31));
  for (const PointSet& ps : sets) {
    const int budget = edge_budget(ps);
    for (const Matching& m : enumerate_matchings(ps)) {
      for (int t = 0; t < ps.size(); ++t) {
        const FlipSequence seq = route_unmatched(ps, m, t);
        CHECK(validate_sequence(ps, seq) == std::nullopt);
        CHECK(static_cast<int>(seq.flips.size()) <= budget);
        CHECK(end_matching(ps, seq).unmatched == t);
      }
    }
  }
}

TEST_CASE("route_unmatched only rewires one alternating path") {
  // All edges untouched by the flips survive, so the end matching differs
  // from the start exactly on the flipped pivots.
  const PointSet ps = gen_random(9, 77);
  const Matching m = canonical_matching(ps);
  for (int t = 0; t < ps.size(); ++t) {
    const FlipSequence seq = route_unmatched(ps, m, t);
    const Matching end = end_matching(ps, seq);
    int shared = 0;
    for (const Segment& e : end.edges) {
      for (const Segment& f : m.edges) {
        if (e == f) ++shared;
      }
    }
    CHECK(shared >= edge_budget(ps) - static_cast<int>(seq.flips.size()));
  }
}

TEST_CASE("to_canonical fixes the pairs left to right") {
  {
    const PointSet ps = triangle();
    CHECK(to_canonical(ps, canonical_matching(ps)).flips.empty());
    for (const Matching& m : enumerate_matchings(ps)) {
      const FlipSequence seq = to_canonical(ps, m);
      CHECK(static_cast<int>(seq.flips.size()) <= 2);
      CHECK(end_matching(ps, seq) == canonical_matching(ps));
    }
  }
  for (const PointSet& ps : {gen_convex(5, 2), gen_random(5, 8), gen_random(7, 15)}) {
    const int m_edges = edge_budget(ps);
    const int bound = m_edges * (m_edges + 3) / 2;
    for (const Matching& m : enumerate_matchings(ps)) {
      const FlipSequence seq = to_canonical(ps, m);
      CHECK(validate_sequence(ps, seq) == std::nullopt);
      CHECK(static_cast<int>(seq.flips.size()) <= bound);
      CHECK(end_matching(ps, seq) == canonical_matching(ps));
    }
  }
}

TEST_CASE("route connects any two matchings") {
  const PointSet ps = triangle();
  const Matching a = make({Segment(0, 1)}, 2);
  const Matching b = make({Segment(1, 2)}, 0);
  CHECK(route(ps, a, a).flips.empty());
  const FlipSequence seq = route(ps, a, b);
  CHECK(seq.start == a);
  CHECK(validate_sequence(ps, seq) == std::nullopt);
  CHECK(end_matching(ps, seq) == b);
}

TEST_CASE("routing between edge-disjoint matchings needs at least m flips") {
  const PointSet ps = gen_convex(5, 4);
  std::vector<Matching> ms = enumerate_matchings(ps);
  int tested = 0;
  for (const Matching& a : ms) {
    for (const Matching& b : ms) {
      bool disjoint = true;
      for (const Segment& e : a.edges) {
        for (const Segment& f : b.edges) {
          if (e == f) disjoint = false;
        }
      }
      if (!disjoint || a == b) continue;
      const FlipSequence seq = route(ps, a, b);
      CHECK(end_matching(ps, seq) == b);
      CHECK(static_cast<int>(seq.flips.size()) >= edge_budget(ps));
      ++tested;
    }
  }
  CHECK(tested > 0);
}

TEST_CASE("route stays within the canonical-leg budget") {
  const PointSet ps = gen_random(7, 99);
  const std::vector<Matching> ms = enumerate_matchings(ps);
  const int m_edges = edge_budget(ps);
  for (size_t i = 0; i < ms.size(); i += 3) {
    for (size_t j = 0; j < ms.size(); j += 5) {
      const FlipSequence seq = route(ps, ms[i], ms[j]);
      CHECK(static_cast<int>(seq.flips.size()) <= m_edges * (m_edges + 3));
      CHECK(end_matching(ps, seq) == ms[j]);
    }
  }
}

TEST_CASE("reverse_sequence runs the flips backward") {
  const PointSet ps = triangle();
  const Matching m = make({Segment(0, 1)}, 2);
  {
    const FlipSequence empty{m, {}};
    const FlipSequence rev = reverse_sequence(ps, empty);
    CHECK(rev.start == m);
    CHECK(rev.flips.empty());
  }
  {
    const FlipSequence seq{m, {Flip{2, 0, 1}}};
    const FlipSequence rev = reverse_sequence(ps, seq);
    CHECK(rev.start == end_matching(ps, seq));
    CHECK(rev.flips == std::vector<Flip>{Flip{1, 0, 2}});
    CHECK(end_matching(ps, rev) == m);
  }
}

TEST_CASE("reversing twice is the identity") {
  Rng rng(512);
  for (int round = 0; round < 50; ++round) {
    const int n = 5 + 2 * static_cast<int>(rng.below(3));
    const PointSet ps = gen_random(n, rng.next());
    const std::vector<Matching> ms = enumerate_matchings(ps);
    const Matching& a = ms[rng.below(ms.size())];
    const Matching& b = ms[rng.below(ms.size())];
    const FlipSequence seq = route(ps, a, b);
    const FlipSequence back = reverse_sequence(ps, seq);
    CHECK(validate_sequence(ps, back) == std::nullopt);
    CHECK(end_matching(ps, back) == a);
    CHECK(reverse_sequence(ps, back) == seq);
  }
}

TEST_CASE("validate_sequence pinpoints the first broken step") {
  const PointSet ps = gen_convex(7, 21);
  const Matching a = canonical_matching(ps);
  const Matching b = convex_hull_matching(ps, 0);
  FlipSequence seq = route(ps, a, b);
  REQUIRE(validate_sequence(ps, seq) == std::nullopt);
  if (!seq.flips.empty()) {
    FlipSequence bad = seq;
    bad.flips.back() = Flip{0, 0, 0};
    CHECK(validate_sequence(ps, bad) == static_cast<int>(bad.flips.size()) - 1);
  }
  FlipSequence broken = seq;
  broken.start.unmatched = broken.start.edges[0].a;
  CHECK(validate_sequence(ps, broken) == -1);
  CHECK_THROWS_AS(end_matching(ps, broken), std::invalid_argument);
}

TEST_CASE("build_dual_tree nests chords laminarly") {
  const DualTree dt = build_dual_tree(6, {Segment(2, 3), Segment(1, 4)});
  REQUIRE(dt.nodes.size() == 3);
  REQUIRE(dt.chords.size() == 2);
  // Chords keep their input positions; nodes are created outermost first.
  CHECK(dt.chords[0] == Segment(2, 3));
  CHECK(dt.chords[1] == Segment(1, 4));
  CHECK(dt.nodes[0].chord == -1);
  CHECK(dt.nodes[0].parent == -1);
  CHECK(dt.nodes[0].children == std::vector<int>{1});
  CHECK(dt.nodes[1].chord == 1);
  CHECK(dt.nodes[1].parent == 0);
  CHECK(dt.nodes[1].children == std::vector<int>{2});
  CHECK(dt.nodes[2].chord == 0);
  CHECK(dt.leaf(2));
  CHECK_FALSE(dt.leaf(0));

  CHECK_THROWS_AS(build_dual_tree(6, {Segment(1, 3), Segment(2, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(build_dual_tree(6, {Segment(1, 3), Segment(3, 5)}), std::invalid_argument);
  CHECK_THROWS_AS(build_dual_tree(6, {Segment(0, 3)}), std::invalid_argument);
}

TEST_CASE("convex_route_to_hull finishes within 2n flips") {
  for (int n : {5, 7}) {
    const PointSet ps = gen_convex(n, 6);
    const std::vector<Matching> ms = enumerate_matchings(ps);
    for (int x = 0; x < n; ++x) {
      const Matching target = convex_hull_matching(ps, x);
      CHECK(convex_route_to_hull(ps, target, target).flips.empty());
      for (const Matching& m : ms) {
        const FlipSequence seq = convex_route_to_hull(ps, m, target);
        CHECK(validate_sequence(ps, seq) == std::nullopt);
        CHECK(static_cast<int>(seq.flips.size()) <= 2 * n);
        CHECK(end_matching(ps, seq) == target);
      }
    }
  }
}

TEST_CASE("convex_route_to_hull length dominates the true flip distance") {
  const PointSet ps = gen_convex(5, 6);
  const FlipGraph fg = build_flip_graph(ps, FlipRule::EdgeFlip);
  const Matching target = convex_hull_matching(ps, 1);
  const auto index_of = [&](const Matching& m) {
    return static_cast<int>(std::find(fg.vertices.begin(), fg.vertices.end(), m) -
                            fg.vertices.begin());
  };
  for (const Matching& m : fg.vertices) {
    const FlipSequence seq = convex_route_to_hull(ps, m, target);
    const int d = bfs_distance(fg, index_of(m), index_of(target));
    CHECK(static_cast<int>(seq.flips.size()) >= d);
  }
}

TEST_CASE("convex_route_to_hull rejects bad inputs") {
  const PointSet bent = pts({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {2, 2}});
  CHECK_THROWS_AS(convex_route_to_hull(bent, canonical_matching(bent), canonical_matching(bent)),
                  std::invalid_argument);
  const PointSet ps = gen_convex(5, 6);
  const std::vector<int> h = convex_hull(ps);
  // Nested chords: plane, but h[1]-h[4] skips two hull positions.
  Matching not_hull = make({{h[1], h[4]}, {h[2], h[3]}}, h[0]);
  REQUIRE(validate_matching(ps, not_hull) == std::nullopt);
  const Matching hull = convex_hull_matching(ps, 0);
  CHECK_THROWS_AS(convex_route_to_hull(ps, hull, not_hull), std::invalid_argument);
}
