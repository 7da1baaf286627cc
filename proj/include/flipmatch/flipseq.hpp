#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flipmatch/geometry.hpp"
#include "flipmatch/matching.hpp"

namespace flipmatch {

/// A start matching plus an ordered list of flips. Flips are edge flips; the
/// rotation rule has no routing machinery here.
struct FlipSequence {
  Matching start;
  std::vector<Flip> flips;

  friend bool operator==(const FlipSequence&, const FlipSequence&) = default;
};

/// Replays the sequence, validating every step; returns the final matching.
/// Throws std::invalid_argument on an invalid start or an illegal step.
Matching end_matching(const PointSet& ps, const FlipSequence& seq);

/// Replay check without throwing: nullopt when the whole sequence is legal,
/// otherwise the index of the first illegal flip (-1 when the start matching
/// itself is invalid).
std::optional<int> validate_sequence(const PointSet& ps, const FlipSequence& seq);

/// The step-by-step inverse: starts at the end matching, runs the flips
/// backward with p and r swapped. Every edge flip is reversible this way.
FlipSequence reverse_sequence(const PointSet& ps, const FlipSequence& seq);

/// Moves the unmatched point of m to t with at most (n-1)/2 flips, leaving
/// as few edges changed as possible: the flips walk one alternating path
/// between t and the current unmatched point inside a plane supergraph
/// (spanning polygon plus matching), so the end matching differs from m
/// exactly on that path.
FlipSequence route_unmatched(const PointSet& ps, const Matching& m, int t);

/// Routes m to canonical_matching(ps), fixing the left-to-right pairs one at
/// a time; pair i is produced by rerouting the unmatched point within the
/// still-unfixed suffix and one insertion flip. At most m(m+3)/2 flips for
/// m = (n-1)/2 edges.
FlipSequence to_canonical(const PointSet& ps, const Matching& m);

/// Connects two matchings on the same point set through the canonical
/// matching (with the common tail of both halves trimmed). At most m(m+3)
/// flips.
FlipSequence route(const PointSet& ps, const Matching& from, const Matching& to);

/// Dual tree of a plane matching on points in convex position, relative to
/// an origin hull position: the matching chords cut the polygon into faces,
/// nodes are faces, edges join faces separated by one chord. The root is the
/// face touching the origin position. Chords are stored as hull-position
/// pairs (s, t) with s < t, positions counted from the origin; vertex
/// disjointness makes the bracket structure strictly laminar.
struct DualTree {
  struct Node {
    int chord = -1;  // index into chords; -1 for the root
    int parent = -1;
    std::vector<int> children;
  };
  std::vector<Node> nodes;  // nodes[0] is the root
  std::vector<Segment> chords;

  bool leaf(int node) const { return nodes[static_cast<size_t>(node)].children.empty(); }
};

DualTree build_dual_tree(int hull_size, const std::vector<Segment>& position_chords);

/// Convex-position routing to the hull-edge matching with unmatched point
/// target.unmatched, using at most 2m flips (m = number of edges): while the
/// unmatched point is not the target's, one flip moves it onto the target
/// hull edge it blocks; when it is, one flip into a non-leaf root chord of
/// the dual tree frees it again while strictly growing the set of finished
/// hull edges. Requires convex position and target == convex_hull_matching.
FlipSequence convex_route_to_hull(const PointSet& ps, const Matching& m, const Matching& target);

}  // namespace flipmatch
