#include "flipmatch/flipgraph.hpp"

#include <algorithm>
#include <deque>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace flipmatch {

namespace {

void enumerate_rec(const PointSet& ps, std::vector<char>& used, int unmatched,
                   std::vector<Segment>& edges, std::vector<Matching>& out) {
  const int n = ps.size();
  int i = 0;
  while (i < n && used[static_cast<size_t>(i)]) ++i;
  if (i == n) {
    out.push_back(Matching{edges, unmatched});  // edges already sorted by construction
    return;
  }
  used[static_cast<size_t>(i)] = 1;
  if (unmatched == -1) enumerate_rec(ps, used, i, edges, out);
  for (int j = i + 1; j < n; ++j) {
    if (used[static_cast<size_t>(j)]) continue;
    const Segment e(i, j);
    bool ok = true;
    for (const Segment& f : edges) {
      if (segments_cross(e, f, ps)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    used[static_cast<size_t>(j)] = 1;
    edges.push_back(e);
    enumerate_rec(ps, used, unmatched, edges, out);
    edges.pop_back();
    used[static_cast<size_t>(j)] = 0;
  }
  used[static_cast<size_t>(i)] = 0;
}

}  // namespace

std::vector<Matching> enumerate_matchings(const PointSet& ps, int cap) {
  const int n = ps.size();
  if (n % 2 == 0) throw std::invalid_argument("enumeration needs an odd point count");
  if (n > cap) throw CapExceeded(n, cap);
  std::vector<Matching> out;
  std::vector<char> used(static_cast<size_t>(n), 0);
  std::vector<Segment> edges;
  enumerate_rec(ps, used, -1, edges, out);
  std::sort(out.begin(), out.end());
  return out;
}

FlipGraph build_flip_graph(const PointSet& ps, FlipRule rule, int cap) {
  FlipGraph g;
  g.rule = rule;
  g.vertices = enumerate_matchings(ps, cap);
  std::unordered_map<std::string, int> index;
  index.reserve(g.vertices.size());
  for (size_t i = 0; i < g.vertices.size(); ++i) index[encode(g.vertices[i])] = static_cast<int>(i);
  g.adj.resize(g.vertices.size());
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    for (const Flip& f : legal_flips(ps, g.vertices[i], rule)) {
      const Matching next = apply_flip(ps, g.vertices[i], f, rule);
      g.adj[i].push_back(index.at(encode(next)));
    }
    std::sort(g.adj[i].begin(), g.adj[i].end());
    g.adj[i].erase(std::unique(g.adj[i].begin(), g.adj[i].end()), g.adj[i].end());
    g.edge_count += g.adj[i].size();
  }
  g.edge_count /= 2;
  return g;
}

Components connected_components(const FlipGraph& g) {
  Components c;
  c.label.assign(g.vertices.size(), -1);
  for (size_t s = 0; s < g.vertices.size(); ++s) {
    if (c.label[s] != -1) continue;
    const int id = c.count();
    c.sizes.push_back(0);
    std::deque<int> queue{static_cast<int>(s)};
    c.label[s] = id;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      ++c.sizes[static_cast<size_t>(id)];
      for (int w : g.adj[static_cast<size_t>(v)]) {
        if (c.label[static_cast<size_t>(w)] == -1) {
          c.label[static_cast<size_t>(w)] = id;
          queue.push_back(w);
        }
      }
    }
  }
  return c;
}

namespace {

// Single-source BFS; returns the farthest distance and the smallest vertex
// index attaining it. dist is reused scratch space.
std::pair<int, int> bfs_eccentricity(const FlipGraph& g, int source, std::vector<int>& dist) {
  std::fill(dist.begin(), dist.end(), -1);
  std::deque<int> queue{source};
  dist[static_cast<size_t>(source)] = 0;
  int best = 0, arg = source;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.adj[static_cast<size_t>(v)]) {
      if (dist[static_cast<size_t>(w)] != -1) continue;
      dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
      if (dist[static_cast<size_t>(w)] > best) {
        best = dist[static_cast<size_t>(w)];
        arg = w;
      }
      queue.push_back(w);
    }
  }
  return {best, arg};
}

}  // namespace

DiameterResult graph_diameter(const FlipGraph& g, int threads) {
  const int n = static_cast<int>(g.vertices.size());
  if (n == 0) throw std::invalid_argument("diameter of an empty graph");
  const Components comps = connected_components(g);
  if (comps.count() > 1) {
    throw std::invalid_argument("graph is disconnected (" + std::to_string(comps.count()) +
                                " components); diameter undefined");
  }
  threads = std::max(1, std::min(threads, n));
  std::vector<DiameterResult> partial(static_cast<size_t>(threads));
  auto work = [&](int tid) {
    std::vector<int> dist(static_cast<size_t>(n));
    DiameterResult best{-1, -1, -1};
    for (int s = tid; s < n; s += threads) {
      const auto [ecc, arg] = bfs_eccentricity(g, s, dist);
      if (ecc > best.diameter) best = {ecc, s, arg};
    }
    partial[static_cast<size_t>(tid)] = best;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  // Deterministic combine: maximum diameter, then smallest (from, to). Each
  // source is scanned by exactly one thread and per-source results do not
  // depend on scheduling, so the merged answer is stable.
  DiameterResult out{-1, -1, -1};
  for (const DiameterResult& p : partial) {
    if (p.from == -1) continue;
    if (p.diameter > out.diameter ||
        (p.diameter == out.diameter && std::pair(p.from, p.to) < std::pair(out.from, out.to))) {
      out = p;
    }
  }
  return out;
}

int bfs_distance(const FlipGraph& g, int from, int to) {
  std::vector<int> dist(g.vertices.size(), -1);
  std::deque<int> queue{from};
  dist[static_cast<size_t>(from)] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == to) return dist[static_cast<size_t>(v)];
    for (int w : g.adj[static_cast<size_t>(v)]) {
      if (dist[static_cast<size_t>(w)] == -1) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return -1;
}

std::vector<int> bfs_path(const FlipGraph& g, int from, int to) {
  std::vector<int> parent(g.vertices.size(), -2);
  std::deque<int> queue{from};
  parent[static_cast<size_t>(from)] = -1;
  while (!queue.empty() && parent[static_cast<size_t>(to)] == -2) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.adj[static_cast<size_t>(v)]) {
      if (parent[static_cast<size_t>(w)] == -2) {
        parent[static_cast<size_t>(w)] = v;
        queue.push_back(w);
      }
    }
  }
  if (parent[static_cast<size_t>(to)] == -2) return {};
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[static_cast<size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

int lazy_bfs_distance(const PointSet& ps, const Matching& start, FlipRule rule,
                      const std::function<bool(const Matching&)>& goal, int max_depth,
                      std::size_t max_states) {
  if (auto bad = validate_matching(ps, start)) {
    throw std::invalid_argument("invalid start matching: " + *bad);
  }
  if (goal(start)) return 0;
  std::unordered_set<std::string> seen{encode(start)};
  std::deque<std::pair<Matching, int>> queue{{start, 0}};
  while (!queue.empty()) {
    const auto [cur, depth] = queue.front();
    queue.pop_front();
    if (depth == max_depth) continue;
    for (const Flip& f : legal_flips(ps, cur, rule)) {
      Matching next = apply_flip(ps, cur, f, rule);
      if (!seen.insert(encode(next)).second) continue;
      if (seen.size() > max_states) throw std::runtime_error("state budget exhausted");
      if (goal(next)) return depth + 1;
      queue.emplace_back(std::move(next), depth + 1);
    }
  }
  return -1;
}

std::optional<DisconnectednessWitness> search_disconnected(const std::vector<PointSet>& family,
                                                           FlipRule rule, int cap) {
  for (size_t i = 0; i < family.size(); ++i) {
    const FlipGraph g = build_flip_graph(family[i], rule, cap);
    const Components comps = connected_components(g);
    if (comps.count() <= 1) continue;
    DisconnectednessWitness w;
    w.instance = i;
    w.components = comps;
    for (size_t v = 0; v < g.vertices.size(); ++v) {
      if (g.adj[v].empty()) {
        w.isolated = g.vertices[v];
        break;
      }
    }
    return w;
  }
  return std::nullopt;
}

}  // namespace flipmatch
