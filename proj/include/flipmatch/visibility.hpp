#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flipmatch/geometry.hpp"
#include "flipmatch/matching.hpp"

namespace flipmatch {

/// A set of pairwise noncrossing segments over a point set, optionally with
/// one designated point duplicated. The duplicate (companion) is a purely
/// combinatorial vertex with id ps.size() sharing the coordinates of
/// duplicate_of; the zero-length segment between the two is implicit.
struct SegmentSet {
  std::vector<Segment> segments;
  int duplicate_of = -1;  // -1: no duplication

  bool has_companion() const { return duplicate_of >= 0; }
};

/// The companion vertex id used by SegmentSets with duplication.
int companion_id(const PointSet& ps);

/// Coordinates of a SegmentSet vertex (handles the companion id).
const Point& vertex_point(const PointSet& ps, const SegmentSet& ss, int v);

std::optional<std::string> validate_segment_set(const PointSet& ps, const SegmentSet& ss);

/// Visibility over the segment endpoints: u sees v iff uv is a segment or no
/// segment meets the open sightline uv at a point other than u and v. The
/// companion p' sees p plus exactly what p sees.
class VisibilityGraph {
 public:
  VisibilityGraph() = default;
  VisibilityGraph(std::vector<int> vertices, int max_id);

  const std::vector<int>& vertices() const { return vertices_; }
  bool connected(int u, int v) const { return adj_[static_cast<size_t>(u)][static_cast<size_t>(v)] != 0; }
  void set_edge(int u, int v);

 private:
  std::vector<int> vertices_;
  std::vector<std::vector<char>> adj_;
};

/// Builds the visibility graph over all segment endpoints (plus companion).
/// Throws std::invalid_argument if the segment set is invalid.
VisibilityGraph build_visibility_graph(const PointSet& ps, const SegmentSet& ss);

/// Turns an almost-perfect matching into a SegmentSet whose unmatched point
/// is duplicated, so every vertex (including the companion) is a segment
/// endpoint. Rejects inputs that are not valid almost-perfect matchings.
SegmentSet duplicate_unmatched(const PointSet& ps, const Matching& m);

/// Simple polygon through every endpoint of a SegmentSet that uses only
/// visibility edges; in particular every input segment can appear and no
/// cycle edge crosses an input segment.
struct HamiltonianPolygon {
  std::vector<int> cycle;  // vertex ids in cyclic order
};

struct PolygonViolation {
  enum class Kind { NotHamiltonian, NotVisibilityEdge, EdgesCross };
  Kind kind = Kind::NotHamiltonian;
  int a = -1, b = -1, c = -1, d = -1;  // offending edge(s)
};

/// Checks a polygon against the three invariants: visits each vertex exactly
/// once, consecutive vertices are visibility-connected, and no two cycle
/// edges cross (edges at the duplicate pair meet only at the shared
/// geometric point, which does not count as a crossing).
std::optional<PolygonViolation> validate_polygon(const PointSet& ps, const SegmentSet& ss,
                                                 const HamiltonianPolygon& hp);

/// Finds a plane Hamiltonian polygon in the visibility graph by backtracking:
/// candidates extending the partial cycle are tried hull vertices first, and
/// any extension crossing a chosen edge is pruned. Deterministic. Throws
/// std::logic_error with the instance appended if the search is exhausted
/// (for the segment sets produced here a polygon always exists).
HamiltonianPolygon plane_hamiltonian_polygon(const PointSet& ps, const SegmentSet& ss,
                                             const VisibilityGraph& vg);

}  // namespace flipmatch
