#include "flipmatch/visibility.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace flipmatch {

namespace {

// Geometric identity of a vertex: the companion collapses onto its original.
int geom_id(const SegmentSet& ss, int n, int v) { return v == n ? ss.duplicate_of : v; }

std::string instance_dump(const PointSet& ps, const SegmentSet& ss) {
  std::string s = "points:";
  for (const Point& p : ps.points()) {
    s += " (" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
  }
  s += " segments:";
  for (const Segment& e : ss.segments) {
    s += " " + std::to_string(e.a) + "-" + std::to_string(e.b);
  }
  if (ss.has_companion()) s += " duplicate_of: " + std::to_string(ss.duplicate_of);
  return s;
}

// Crossing test between two polygon edges given by vertex ids. Edges that
// share a geometric endpoint (including through the duplicate pair) meet
// only at that point, unless they run on top of each other beyond it, which
// the duplicate makes possible (e.g. u-p and u-p' are the same segment
// twice) and which is never a simple polygon.
bool polygon_edges_cross(const PointSet& ps, const SegmentSet& ss, int u1, int v1, int u2, int v2) {
  const int n = ps.size();
  const int a = geom_id(ss, n, u1), b = geom_id(ss, n, v1);
  const int c = geom_id(ss, n, u2), d = geom_id(ss, n, v2);
  if (a == c || a == d || b == c || b == d) {
    const int p = (a == c || a == d) ? a : b;
    const int q = (p == a) ? b : a;
    const int r = (p == c) ? d : c;
    const Coord dot = (ps[q].x - ps[p].x) * (ps[r].x - ps[p].x) +
                      (ps[q].y - ps[p].y) * (ps[r].y - ps[p].y);
    return orient(ps[p], ps[q], ps[r]) == 0 && dot > 0;
  }
  if (a == b) return point_on_open_segment(ps[c], ps[d], ps[a]);  // zero-length duplicate edge
  if (c == d) return point_on_open_segment(ps[a], ps[b], ps[c]);
  return segments_cross(ps[a], ps[b], ps[c], ps[d]);
}

}  // namespace

int companion_id(const PointSet& ps) { return ps.size(); }

const Point& vertex_point(const PointSet& ps, const SegmentSet& ss, int v) {
  return ps[geom_id(ss, ps.size(), v)];
}

std::optional<std::string> validate_segment_set(const PointSet& ps, const SegmentSet& ss) {
  const int n = ps.size();
  for (const Segment& e : ss.segments) {
    if (e.a < 0 || e.b >= n) return "segment endpoint out of range";
  }
  for (size_t i = 0; i < ss.segments.size(); ++i) {
    for (size_t j = i + 1; j < ss.segments.size(); ++j) {
      if (segments_cross(ss.segments[i], ss.segments[j], ps)) {
        return "segments cross";
      }
    }
  }
  if (ss.duplicate_of != -1) {
    if (ss.duplicate_of < 0 || ss.duplicate_of >= n) return "duplicated point out of range";
    for (const Segment& e : ss.segments) {
      if (e.touches(ss.duplicate_of)) return "duplicated point is a segment endpoint";
    }
  }
  return std::nullopt;
}

VisibilityGraph::VisibilityGraph(std::vector<int> vertices, int max_id)
    : vertices_(std::move(vertices)),
      adj_(static_cast<size_t>(max_id + 1), std::vector<char>(static_cast<size_t>(max_id + 1), 0)) {}

void VisibilityGraph::set_edge(int u, int v) {
  adj_[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
  adj_[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
}

VisibilityGraph build_visibility_graph(const PointSet& ps, const SegmentSet& ss) {
  if (auto bad = validate_segment_set(ps, ss)) {
    throw std::invalid_argument("invalid segment set: " + *bad);
  }
  std::set<int> vert_set;
  for (const Segment& e : ss.segments) {
    vert_set.insert(e.a);
    vert_set.insert(e.b);
  }
  if (ss.has_companion()) {
    vert_set.insert(ss.duplicate_of);
    vert_set.insert(companion_id(ps));
  }
  std::vector<int> verts(vert_set.begin(), vert_set.end());
  VisibilityGraph vg(verts, verts.empty() ? 0 : verts.back());

  std::vector<int> real;
  for (int v : verts) {
    if (v != companion_id(ps) || !ss.has_companion()) real.push_back(v);
  }
  std::set<Segment> seg_set(ss.segments.begin(), ss.segments.end());
  for (size_t i = 0; i < real.size(); ++i) {
    for (size_t j = i + 1; j < real.size(); ++j) {
      const int u = real[i], v = real[j];
      if (seg_set.count(Segment(u, v)) || !open_segment_blocked(u, v, ss.segments, ps)) {
        vg.set_edge(u, v);
      }
    }
  }
  if (ss.has_companion()) {
    // The companion sees its original plus exactly what the original sees.
    const int p = ss.duplicate_of;
    const int pc = companion_id(ps);
    for (int w : real) {
      if (w != p && vg.connected(p, w)) vg.set_edge(pc, w);
    }
    vg.set_edge(p, pc);
  }
  return vg;
}

SegmentSet duplicate_unmatched(const PointSet& ps, const Matching& m) {
  if (auto bad = validate_matching(ps, m)) {
    throw std::invalid_argument("cannot duplicate unmatched point: " + *bad);
  }
  return SegmentSet{m.edges, m.unmatched};
}

std::optional<PolygonViolation> validate_polygon(const PointSet& ps, const SegmentSet& ss,
                                                 const HamiltonianPolygon& hp) {
  const VisibilityGraph vg = build_visibility_graph(ps, ss);
  const std::vector<int>& verts = vg.vertices();
  std::vector<int> sorted_cycle = hp.cycle;
  std::sort(sorted_cycle.begin(), sorted_cycle.end());
  if (sorted_cycle != verts) {
    return PolygonViolation{PolygonViolation::Kind::NotHamiltonian, -1, -1, -1, -1};
  }
  const int k = static_cast<int>(hp.cycle.size());
  for (int i = 0; i < k; ++i) {
    const int u = hp.cycle[static_cast<size_t>(i)];
    const int v = hp.cycle[static_cast<size_t>((i + 1) % k)];
    if (!vg.connected(u, v)) {
      return PolygonViolation{PolygonViolation::Kind::NotVisibilityEdge, u, v, -1, -1};
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const int u1 = hp.cycle[static_cast<size_t>(i)], v1 = hp.cycle[static_cast<size_t>((i + 1) % k)];
      const int u2 = hp.cycle[static_cast<size_t>(j)], v2 = hp.cycle[static_cast<size_t>((j + 1) % k)];
      if (polygon_edges_cross(ps, ss, u1, v1, u2, v2)) {
        return PolygonViolation{PolygonViolation::Kind::EdgesCross, u1, v1, u2, v2};
      }
    }
  }
  return std::nullopt;
}

HamiltonianPolygon plane_hamiltonian_polygon(const PointSet& ps, const SegmentSet& ss,
                                             const VisibilityGraph& vg) {
  const std::vector<int>& verts = vg.vertices();
  const int k = static_cast<int>(verts.size());
  if (k < 3) throw std::invalid_argument("polygon needs at least 3 vertices");

  // Candidate ordering: hull vertices of the endpoint coordinates first,
  // then by id. Extending along the hull early keeps the partial cycle
  // uncrossable for long stretches and shrinks the search.
  std::vector<Point> uniq;
  for (int v : verts) {
    const Point& p = vertex_point(ps, ss, v);
    if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
  }
  const PointSet coord_set(uniq);
  std::vector<Point> hull_pts;
  for (int h : convex_hull(coord_set)) hull_pts.push_back(coord_set[h]);
  std::vector<int> order = verts;
  auto on_hull = [&](int v) {
    return std::find(hull_pts.begin(), hull_pts.end(), vertex_point(ps, ss, v)) != hull_pts.end();
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int u, int v) { return on_hull(u) > on_hull(v); });

  std::vector<int> path = {verts.front()};
  std::set<int> used = {verts.front()};

  // Edges meeting only at a shared geometric endpoint do not count as
  // crossing, so edges adjacent along the path need no special casing here.
  auto crosses_chosen = [&](int u, int v) -> bool {
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      if (polygon_edges_cross(ps, ss, u, v, path[i], path[i + 1])) return true;
    }
    return false;
  };

  auto dfs = [&](auto&& self) -> bool {
    if (static_cast<int>(path.size()) == k) {
      return vg.connected(path.back(), path.front()) &&
             !crosses_chosen(path.back(), path.front());
    }
    const int cur = path.back();
    for (int w : order) {
      if (used.count(w) || !vg.connected(cur, w)) continue;
      if (crosses_chosen(cur, w)) continue;
      path.push_back(w);
      used.insert(w);
      if (self(self)) return true;
      used.erase(w);
      path.pop_back();
    }
    return false;
  };

  if (!dfs(dfs)) {
    throw std::logic_error("no plane spanning polygon found; " + instance_dump(ps, ss));
  }
  return HamiltonianPolygon{path};
}

}  // namespace flipmatch
