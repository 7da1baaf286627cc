#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flipmatch/geometry.hpp"

namespace flipmatch {

enum class FlipRule { EdgeFlip, EmptyTriangleRotation };

const char* to_string(FlipRule rule);
std::optional<FlipRule> parse_flip_rule(const std::string& name);

/// One move: the unmatched point p takes over q, whose former partner r
/// becomes the new unmatched point. Edge qr is removed, pq is added.
struct Flip {
  int p = -1;
  int q = -1;
  int r = -1;

  friend bool operator==(const Flip&, const Flip&) = default;
};

/// Plane almost-perfect matching on an odd point set: (n-1)/2 pairwise
/// noncrossing edges plus one unmatched point. Edges are kept sorted so that
/// equal matchings compare equal.
struct Matching {
  std::vector<Segment> edges;
  int unmatched = -1;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

/// Partner of v in m, or -1 if v is the unmatched point (or absent).
int partner(const Matching& m, int v);

/// Sorts the edge list; call after building a matching by hand.
void normalize(Matching& m);

/// True iff no two edges cross (endpoint-sharing pairs do not count, but
/// matchings never share endpoints anyway).
bool is_plane(const PointSet& ps, const std::vector<Segment>& edges);

/// Full structural + geometric check: odd host, every point covered exactly
/// once (edges plus the unmatched point), indices in range, edges plane.
/// Returns a human-readable reason on failure.
std::optional<std::string> validate_matching(const PointSet& ps, const Matching& m);

/// True iff the closed triangle ijk contains no point of ps other than the
/// three corners.
bool triangle_empty(const PointSet& ps, int i, int j, int k);

/// All legal flips from m under the rule, ordered by pivot q ascending.
/// Under EdgeFlip a pivot q is legal iff the open segment from the unmatched
/// point to q crosses no matching edge; EmptyTriangleRotation additionally
/// requires the triangle p q partner(q) to be empty of other points.
std::vector<Flip> legal_flips(const PointSet& ps, const Matching& m, FlipRule rule);

/// Checks one flip; on failure *reason (if given) names the violated
/// condition.
bool is_legal_flip(const PointSet& ps, const Matching& m, const Flip& f, FlipRule rule,
                   std::string* reason = nullptr);

/// Applies a legal flip and returns the successor matching. Throws
/// std::invalid_argument with the legality reason otherwise. The result is
/// re-validated to be plane.
Matching apply_flip(const PointSet& ps, const Matching& m, const Flip& f,
                    FlipRule rule = FlipRule::EdgeFlip);

/// Canonical matching: sort points left to right, pair them consecutively,
/// leave the rightmost unmatched. Plane because consecutive pairs live in
/// disjoint vertical strips. Requires odd size.
Matching canonical_matching(const PointSet& ps);

/// Hull-edge matching on a point set in convex position: walking the hull
/// counterclockwise from x, pair neighbors (q1 q2), (q3 q4), ... leaving x
/// unmatched. Requires convex position and odd size.
Matching convex_hull_matching(const PointSet& ps, int x);

/// Canonical text key ("u<p>|a-b|c-d|..."), used for hashing matchings.
std::string encode(const Matching& m);

}  // namespace flipmatch
