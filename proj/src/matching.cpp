#include "flipmatch/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace flipmatch {

const char* to_string(FlipRule rule) {
  return rule == FlipRule::EdgeFlip ? "flip" : "rotation";
}

std::optional<FlipRule> parse_flip_rule(const std::string& name) {
  if (name == "flip") return FlipRule::EdgeFlip;
  if (name == "rotation") return FlipRule::EmptyTriangleRotation;
  return std::nullopt;
}

int partner(const Matching& m, int v) {
  for (const Segment& e : m.edges) {
    if (e.touches(v)) return e.other(v);
  }
  return -1;
}

void normalize(Matching& m) { std::sort(m.edges.begin(), m.edges.end()); }

bool is_plane(const PointSet& ps, const std::vector<Segment>& edges) {
  for (size_t i = 0; i < edges.size(); ++i) {
    for (size_t j = i + 1; j < edges.size(); ++j) {
      if (segments_cross(edges[i], edges[j], ps)) return false;
    }
  }
  return true;
}

std::optional<std::string> validate_matching(const PointSet& ps, const Matching& m) {
  const int n = ps.size();
  if (n % 2 == 0) return "point set has even size " + std::to_string(n);
  std::vector<int> cover(static_cast<size_t>(n), 0);
  auto touch = [&](int v) -> std::optional<std::string> {
    if (v < 0 || v >= n) return "index " + std::to_string(v) + " out of range";
    if (++cover[static_cast<size_t>(v)] > 1) return "point " + std::to_string(v) + " covered twice";
    return std::nullopt;
  };
  for (const Segment& e : m.edges) {
    if (auto r = touch(e.a)) return r;
    if (auto r = touch(e.b)) return r;
  }
  if (auto r = touch(m.unmatched)) {
    return m.unmatched < 0 || m.unmatched >= n
               ? "unmatched index " + std::to_string(m.unmatched) + " out of range"
               : "unmatched point " + std::to_string(m.unmatched) + " is covered by an edge";
  }
  if (static_cast<int>(m.edges.size()) != (n - 1) / 2) {
    return "expected " + std::to_string((n - 1) / 2) + " edges, got " + std::to_string(m.edges.size());
  }
  if (!is_plane(ps, m.edges)) return "edges cross";
  return std::nullopt;
}

bool triangle_empty(const PointSet& ps, int i, int j, int k) {
  const Point& a = ps[i];
  const Point& b = ps[j];
  const Point& c = ps[k];
  for (int v = 0; v < ps.size(); ++v) {
    if (v == i || v == j || v == k) continue;
    const Point& p = ps[v];
    const int o1 = orient(a, b, p);
    const int o2 = orient(b, c, p);
    const int o3 = orient(c, a, p);
    // Inside or on the closed triangle: no orientation disagrees with another.
    if ((o1 >= 0 && o2 >= 0 && o3 >= 0) || (o1 <= 0 && o2 <= 0 && o3 <= 0)) return false;
  }
  return true;
}

bool is_legal_flip(const PointSet& ps, const Matching& m, const Flip& f, FlipRule rule,
                   std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  if (f.p != m.unmatched) return fail("p is not the unmatched point");
  if (f.q < 0 || f.q >= ps.size() || f.q == f.p) return fail("q is not a matched point");
  const int r = partner(m, f.q);
  if (r == -1) return fail("q is not a matched point");
  if (r != f.r) return fail("r is not the partner of q");
  const Segment pq(f.p, f.q);
  for (const Segment& e : m.edges) {
    if (segments_cross(pq, e, ps)) return fail("segment pq crosses a matching edge");
  }
  if (rule == FlipRule::EmptyTriangleRotation && !triangle_empty(ps, f.p, f.q, f.r)) {
    return fail("triangle pqr contains another point");
  }
  return true;
}

std::vector<Flip> legal_flips(const PointSet& ps, const Matching& m, FlipRule rule) {
  std::vector<Flip> out;
  for (int q = 0; q < ps.size(); ++q) {
    if (q == m.unmatched) continue;
    Flip f{m.unmatched, q, partner(m, q)};
    if (is_legal_flip(ps, m, f, rule)) out.push_back(f);
  }
  return out;
}

Matching apply_flip(const PointSet& ps, const Matching& m, const Flip& f, FlipRule rule) {
  std::string reason;
  if (!is_legal_flip(ps, m, f, rule, &reason)) {
    throw std::invalid_argument("illegal flip (" + std::to_string(f.p) + "," + std::to_string(f.q) +
                                "," + std::to_string(f.r) + "): " + reason);
  }
  Matching next;
  next.unmatched = f.r;
  next.edges.reserve(m.edges.size());
  const Segment removed(f.q, f.r);
  for (const Segment& e : m.edges) {
    if (e != removed) next.edges.push_back(e);
  }
  next.edges.emplace_back(f.p, f.q);
  normalize(next);
  if (!is_plane(ps, next.edges)) throw std::logic_error("flip produced a crossing matching");
  return next;
}

Matching canonical_matching(const PointSet& ps) {
  const int n = ps.size();
  if (n % 2 == 0) throw std::invalid_argument("canonical matching needs an odd point count");
  const std::vector<int> order = sort_left_to_right(ps);
  Matching m;
  for (int i = 0; i + 1 < n; i += 2) m.edges.emplace_back(order[static_cast<size_t>(i)], order[static_cast<size_t>(i + 1)]);
  m.unmatched = n == 0 ? -1 : order.back();
  normalize(m);
  return m;
}

Matching convex_hull_matching(const PointSet& ps, int x) {
  const int n = ps.size();
  if (n % 2 == 0) throw std::invalid_argument("hull-edge matching needs an odd point count");
  if (x < 0 || x >= n) throw std::invalid_argument("unmatched index out of range");
  if (n == 1) return Matching{{}, x};
  const std::vector<int> hull = convex_hull(ps);
  if (static_cast<int>(hull.size()) != n) throw std::invalid_argument("points are not in convex position");
  const auto it = std::find(hull.begin(), hull.end(), x);
  const int start = static_cast<int>(it - hull.begin());
  Matching m;
  for (int i = 1; i + 1 < n; i += 2) {
    m.edges.emplace_back(hull[static_cast<size_t>((start + i) % n)], hull[static_cast<size_t>((start + i + 1) % n)]);
  }
  m.unmatched = x;
  normalize(m);
  return m;
}

std::string encode(const Matching& m) {
  std::string s = "u" + std::to_string(m.unmatched);
  for (const Segment& e : m.edges) {
    s += "|" + std::to_string(e.a) + "-" + std::to_string(e.b);
  }
  return s;
}

}  // namespace flipmatch
