#include "flipmatch/flipseq.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "flipmatch/altpath.hpp"
#include "flipmatch/visibility.hpp"

namespace flipmatch {

Matching end_matching(const PointSet& ps, const FlipSequence& seq) {
  if (auto bad = validate_matching(ps, seq.start)) {
    throw std::invalid_argument("invalid start matching: " + *bad);
  }
  Matching cur = seq.start;
  for (const Flip& f : seq.flips) cur = apply_flip(ps, cur, f);
  return cur;
}

std::optional<int> validate_sequence(const PointSet& ps, const FlipSequence& seq) {
  if (validate_matching(ps, seq.start)) return -1;
  Matching cur = seq.start;
  for (size_t i = 0; i < seq.flips.size(); ++i) {
    if (!is_legal_flip(ps, cur, seq.flips[i], FlipRule::EdgeFlip)) return static_cast<int>(i);
    cur = apply_flip(ps, cur, seq.flips[i]);
  }
  return std::nullopt;
}

FlipSequence reverse_sequence(const PointSet& ps, const FlipSequence& seq) {
  FlipSequence rev;
  rev.start = end_matching(ps, seq);
  rev.flips.reserve(seq.flips.size());
  for (auto it = seq.flips.rbegin(); it != seq.flips.rend(); ++it) {
    rev.flips.push_back(Flip{it->r, it->q, it->p});
  }
  return rev;
}

FlipSequence route_unmatched(const PointSet& ps, const Matching& m, int t) {
  if (auto bad = validate_matching(ps, m)) throw std::invalid_argument("invalid matching: " + *bad);
  if (t < 0 || t >= ps.size()) throw std::invalid_argument("target index out of range");
  FlipSequence seq;
  seq.start = m;
  if (t == m.unmatched) return seq;

  const SegmentSet ss = duplicate_unmatched(ps, m);
  const VisibilityGraph vg = build_visibility_graph(ps, ss);
  const HamiltonianPolygon hp = plane_hamiltonian_polygon(ps, ss, vg);
  if (auto bad = validate_polygon(ps, ss, hp)) {
    throw std::logic_error("spanning polygon failed validation");
  }

  // Polygon + matching form a plane cycle-plus-perfect-matching graph once
  // the unmatched point is paired with its companion.
  AltGraph g;
  g.cycle_order = hp.cycle;
  for (const Segment& e : m.edges) g.matching_pairs.emplace_back(e.a, e.b);
  const int comp = companion_id(ps);
  g.matching_pairs.emplace_back(m.unmatched, comp);

  AltPath path = find_alternating_path(g, {t, partner(m, t)}, m.unmatched);

  // Contract the companion out. It can only sit directly before the final
  // vertex (entered by a cycle edge, left by the zero-length matching edge);
  // the two edges collapse to one cycle edge at the shared coordinates.
  const size_t len = path.vertices.size();
  if (len >= 2 && path.vertices[len - 2] == comp) {
    path.vertices.erase(path.vertices.end() - 2);
    path.labels.pop_back();
    path.labels.back() = EdgeLabel::Cycle;
  }
  for (int v : path.vertices) {
    if (v == comp) throw std::logic_error("companion vertex inside the alternating path");
  }

  // Walk the path from the unmatched end backward, one flip per
  // (cycle edge, matching edge) pair; the result is m with the path edges
  // exchanged, and the former start of the path is left unmatched.
  Matching cur = m;
  const std::vector<int>& y = path.vertices;
  for (size_t j = y.size() - 1; j >= 2; j -= 2) {
    const Flip f{cur.unmatched, y[j - 1], y[j - 2]};
    cur = apply_flip(ps, cur, f);
    seq.flips.push_back(f);
  }
  if (cur.unmatched != t) throw std::logic_error("routing left the wrong point unmatched");
  return seq;
}

FlipSequence to_canonical(const PointSet& ps, const Matching& m) {
  if (auto bad = validate_matching(ps, m)) throw std::invalid_argument("invalid matching: " + *bad);
  const int n = ps.size();
  const std::vector<int> order = sort_left_to_right(ps);
  FlipSequence seq;
  seq.start = m;
  Matching cur = m;
  for (int i = 0; i + 1 < n; i += 2) {
    const int ia = order[static_cast<size_t>(i)];
    const int ib = order[static_cast<size_t>(i + 1)];
    const Segment want(ia, ib);
    if (std::find(cur.edges.begin(), cur.edges.end(), want) != cur.edges.end()) continue;

    // Fixed prefix pairs occupy their own vertical strips left of the
    // remaining points, so no flip among the suffix can disturb them; work
    // in the suffix point set only.
    std::vector<Point> sub_pts;
    std::vector<int> to_global;
    std::map<int, int> to_local;
    for (int j = i; j < n; ++j) {
      const int v = order[static_cast<size_t>(j)];
      to_local[v] = static_cast<int>(sub_pts.size());
      to_global.push_back(v);
      sub_pts.push_back(ps[v]);
    }
    const PointSet sub(std::move(sub_pts));
    Matching subm;
    for (const Segment& e : cur.edges) {
      const bool ina = to_local.count(e.a) > 0;
      const bool inb = to_local.count(e.b) > 0;
      if (ina != inb) throw std::logic_error("matching edge straddles the fixed prefix");
      if (ina) subm.edges.emplace_back(to_local[e.a], to_local[e.b]);
    }
    subm.unmatched = to_local.at(cur.unmatched);
    normalize(subm);

    const FlipSequence subseq = route_unmatched(sub, subm, to_local.at(ia));
    for (const Flip& f : subseq.flips) {
      const Flip lifted{to_global[static_cast<size_t>(f.p)], to_global[static_cast<size_t>(f.q)],
                        to_global[static_cast<size_t>(f.r)]};
      cur = apply_flip(ps, cur, lifted);
      seq.flips.push_back(lifted);
    }
    // One flip inserts the pair: its two points are the lexicographic minima
    // of the suffix, so nothing can cross the new edge.
    const Flip insert{ia, ib, partner(cur, ib)};
    cur = apply_flip(ps, cur, insert);
    seq.flips.push_back(insert);
  }
  if (cur != canonical_matching(ps)) throw std::logic_error("canonicalization did not converge");
  return seq;
}

FlipSequence route(const PointSet& ps, const Matching& from, const Matching& to) {
  FlipSequence s1 = to_canonical(ps, from);
  FlipSequence s2 = to_canonical(ps, to);
  // A flip determines its predecessor matching uniquely, so equal trailing
  // flips mean both halves pass through the same intermediate matching;
  // meet there instead of at the canonical matching.
  while (!s1.flips.empty() && !s2.flips.empty() && s1.flips.back() == s2.flips.back()) {
    s1.flips.pop_back();
    s2.flips.pop_back();
  }
  FlipSequence out;
  out.start = from;
  out.flips = std::move(s1.flips);
  for (auto it = s2.flips.rbegin(); it != s2.flips.rend(); ++it) {
    out.flips.push_back(Flip{it->r, it->q, it->p});
  }
  if (end_matching(ps, out) != to) throw std::logic_error("routing replay mismatch");
  return out;
}

DualTree build_dual_tree(int hull_size, const std::vector<Segment>& position_chords) {
  std::vector<char> used(static_cast<size_t>(hull_size), 0);
  for (const Segment& ch : position_chords) {
    if (ch.a < 1 || ch.b > hull_size - 1) {
      throw std::invalid_argument("chord position outside 1.." + std::to_string(hull_size - 1));
    }
    if (used[static_cast<size_t>(ch.a)]++ || used[static_cast<size_t>(ch.b)]++) {
      throw std::invalid_argument("chords share a hull position");
    }
  }
  for (size_t i = 0; i < position_chords.size(); ++i) {
    for (size_t j = i + 1; j < position_chords.size(); ++j) {
      const Segment& c1 = position_chords[i];
      const Segment& c2 = position_chords[j];
      const bool a_inside = c1.a < c2.a && c2.a < c1.b;
      const bool b_inside = c1.a < c2.b && c2.b < c1.b;
      if (a_inside != b_inside) throw std::invalid_argument("chords cross");
    }
  }

  DualTree tree;
  tree.chords = position_chords;
  tree.nodes.push_back({-1, -1, {}});
  std::vector<int> idx(position_chords.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int i, int j) { return position_chords[static_cast<size_t>(i)].a < position_chords[static_cast<size_t>(j)].a; });
  // Chords ordered by left endpoint nest like brackets: a chord opens a new
  // face inside the innermost still-open chord that spans it.
  std::vector<int> open;
  for (int ci : idx) {
    const Segment& ch = tree.chords[static_cast<size_t>(ci)];
    while (!open.empty() &&
           tree.chords[static_cast<size_t>(tree.nodes[static_cast<size_t>(open.back())].chord)].b < ch.a) {
      open.pop_back();
    }
    const int parent = open.empty() ? 0 : open.back();
    tree.nodes.push_back({ci, parent, {}});
    const int id = static_cast<int>(tree.nodes.size()) - 1;
    tree.nodes[static_cast<size_t>(parent)].children.push_back(id);
    open.push_back(id);
  }
  return tree;
}

FlipSequence convex_route_to_hull(const PointSet& ps, const Matching& m, const Matching& target) {
  if (auto bad = validate_matching(ps, m)) throw std::invalid_argument("invalid matching: " + *bad);
  if (target.unmatched < 0 || target.unmatched >= ps.size()) {
    throw std::invalid_argument("target unmatched index out of range");
  }
  if (target != convex_hull_matching(ps, target.unmatched)) {
    throw std::invalid_argument("target is not the hull-edge matching of its unmatched point");
  }
  FlipSequence seq;
  seq.start = m;
  if (m == target) return seq;

  const int n = ps.size();
  const std::vector<int> hull = convex_hull(ps);
  if (static_cast<int>(hull.size()) != n) {
    throw std::invalid_argument("points are not in convex position");
  }
  // Hull positions counted counterclockwise from the target's unmatched
  // point x: position 2i-1 and 2i form target hull edge e_i.
  const int x = target.unmatched;
  const int xh = static_cast<int>(std::find(hull.begin(), hull.end(), x) - hull.begin());
  std::vector<int> q(static_cast<size_t>(n));
  std::vector<int> pos_of(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    q[static_cast<size_t>(i)] = hull[static_cast<size_t>((xh + i) % n)];
    pos_of[static_cast<size_t>(q[static_cast<size_t>(i)])] = i;
  }

  Matching cur = m;
  while (cur != target) {
    if (static_cast<int>(seq.flips.size()) > 2 * n) {
      throw std::logic_error("hull routing exceeded its flip budget");
    }
    const int p = cur.unmatched;
    const int k = pos_of[static_cast<size_t>(p)];
    Flip f;
    if (k != 0) {
      // p blocks target hull edge e_i; both of its endpoints are hull
      // neighbors of p, so flipping p onto the other endpoint is always
      // legal and finishes e_i.
      const int i = (k + 1) / 2;
      const int u = q[static_cast<size_t>(2 * i - 1)];
      const int pivot = p == u ? q[static_cast<size_t>(2 * i)] : u;
      f = Flip{p, pivot, partner(cur, pivot)};
    } else {
      // x itself is unmatched but the matching is unfinished. The matching
      // edges, read as position chords, tile 1..n-1 into intervals, so every
      // top-level chord runs from an odd to an even position; a non-leaf one
      // (a chord with chords nested inside) exists, and flipping x onto its
      // odd endpoint frees a point strictly inside. The sightline from
      // position 0 to an odd top-level endpoint crosses no chord.
      std::vector<Segment> chords;
      chords.reserve(cur.edges.size());
      for (const Segment& e : cur.edges) {
        chords.emplace_back(pos_of[static_cast<size_t>(e.a)], pos_of[static_cast<size_t>(e.b)]);
      }
      const DualTree tree = build_dual_tree(n, chords);
      int best = -1;
      for (int child : tree.nodes[0].children) {
        if (tree.leaf(child)) continue;
        const Segment& ch = tree.chords[static_cast<size_t>(tree.nodes[static_cast<size_t>(child)].chord)];
        if (best == -1 || ch.a < tree.chords[static_cast<size_t>(tree.nodes[static_cast<size_t>(best)].chord)].a) {
          best = child;
        }
      }
      if (best == -1) {
        throw std::logic_error("all top-level chords are hull edges but the matching is unfinished");
      }
      const Segment& ch = tree.chords[static_cast<size_t>(tree.nodes[static_cast<size_t>(best)].chord)];
      if (ch.a % 2 != 1 || ch.b % 2 != 0) {
        throw std::logic_error("top-level chord does not run from an odd to an even position");
      }
      f = Flip{p, q[static_cast<size_t>(ch.a)], q[static_cast<size_t>(ch.b)]};
    }
    cur = apply_flip(ps, cur, f);
    seq.flips.push_back(f);
  }
  return seq;
}

}  // namespace flipmatch
