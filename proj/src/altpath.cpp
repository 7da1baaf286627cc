#include "flipmatch/altpath.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace flipmatch {

namespace {

std::pair<int, int> norm_pair(std::pair<int, int> e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  return e;
}

bool has_matching_pair(const AltGraph& g, std::pair<int, int> e) {
  const auto en = norm_pair(e);
  for (const auto& p : g.matching_pairs) {
    if (norm_pair(p) == en) return true;
  }
  return false;
}

bool on_cycle(const AltGraph& g, int v) {
  return std::find(g.cycle_order.begin(), g.cycle_order.end(), v) != g.cycle_order.end();
}

}  // namespace

std::optional<std::string> validate_alt_graph(const AltGraph& g) {
  const int n = g.vertex_count();
  if (n < 2 || n % 2 != 0) return "vertex count must be even and at least 2";
  std::set<int> verts;
  for (int v : g.cycle_order) {
    if (v < 0) return "negative vertex id " + std::to_string(v);
    if (!verts.insert(v).second) return "vertex " + std::to_string(v) + " repeated on the cycle";
  }
  if (static_cast<int>(g.matching_pairs.size()) * 2 != n) {
    return "matching has " + std::to_string(g.matching_pairs.size()) + " pairs for " +
           std::to_string(n) + " vertices";
  }
  std::set<int> covered;
  for (const auto& [u, v] : g.matching_pairs) {
    if (u == v) return "matching pair with equal endpoints " + std::to_string(u);
    if (!verts.count(u) || !verts.count(v)) return "matching endpoint not on the cycle";
    if (!covered.insert(u).second) return "vertex " + std::to_string(u) + " matched twice";
    if (!covered.insert(v).second) return "vertex " + std::to_string(v) + " matched twice";
  }
  return std::nullopt;
}

std::optional<std::string> validate_alt_path(const AltGraph& g, const AltPath& p) {
  if (p.vertices.size() != p.labels.size() + 1) return "vertex/label count mismatch";
  if (p.vertices.size() < 2) return "path must contain at least one edge";
  std::set<int> seen;
  for (int v : p.vertices) {
    if (!on_cycle(g, v)) return "vertex " + std::to_string(v) + " not in the host graph";
    if (!seen.insert(v).second) return "vertex " + std::to_string(v) + " repeated";
  }
  const int n = g.vertex_count();
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[g.cycle_order[static_cast<size_t>(i)]] = i;
  for (size_t i = 0; i < p.labels.size(); ++i) {
    const EdgeLabel want = i % 2 == 0 ? EdgeLabel::Matching : EdgeLabel::Cycle;
    if (p.labels[i] != want) return "labels do not alternate starting from a matching edge";
    const int u = p.vertices[i];
    const int v = p.vertices[i + 1];
    if (p.labels[i] == EdgeLabel::Matching) {
      if (!has_matching_pair(g, {u, v})) {
        return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is not a matching edge";
      }
    } else {
      const int d = std::abs(pos.at(u) - pos.at(v));
      if (d != 1 && d != n - 1) {
        return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is not a cycle edge";
      }
    }
  }
  return std::nullopt;
}

Contraction contract_reduce(const AltGraph& g, std::pair<int, int> e, int c) {
  if (auto bad = validate_alt_graph(g)) throw std::invalid_argument("invalid host graph: " + *bad);
  if (!has_matching_pair(g, e)) throw std::invalid_argument("e is not a matching edge");
  if (!on_cycle(g, c)) throw std::invalid_argument("c is not a vertex of the graph");
  std::map<int, int> mate;
  for (const auto& [u, v] : g.matching_pairs) {
    mate[u] = v;
    mate[v] = u;
  }
  const auto en = norm_pair(e);
  const auto fc = norm_pair({c, mate.at(c)});  // keeps c and its partner alive

  Contraction out;
  out.graph = g;
  bool changed = true;
  while (changed) {
    changed = false;
    auto& cyc = out.graph.cycle_order;
    const int nn = static_cast<int>(cyc.size());
    if (nn <= 2) break;
    for (int i = 0; i < nn; ++i) {
      const int u1 = cyc[static_cast<size_t>(i)];
      const int u2 = cyc[static_cast<size_t>((i + 1) % nn)];
      const auto pair = norm_pair({u1, u2});
      if (pair == en || pair == fc) continue;
      if (!has_matching_pair(out.graph, pair)) continue;
      const int u0 = cyc[static_cast<size_t>((i - 1 + nn) % nn)];
      const int u3 = cyc[static_cast<size_t>((i + 2) % nn)];
      out.steps.push_back({u0, u1, u2, u3});
      std::vector<int> next_cycle;
      next_cycle.reserve(static_cast<size_t>(nn - 2));
      for (int j = 0; j < nn; ++j) {
        if (j == i || j == (i + 1) % nn) continue;
        next_cycle.push_back(cyc[static_cast<size_t>(j)]);
      }
      cyc = std::move(next_cycle);
      auto& pairs = out.graph.matching_pairs;
      pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                                 [&](const std::pair<int, int>& q) { return norm_pair(q) == pair; }),
                  pairs.end());
      changed = true;
      break;
    }
  }
  return out;
}

std::optional<int> check_stage_invariants(const StageGraph& gk, int k, int a, int b) {
  if (static_cast<int>(gk.vertices.size()) != k) return 1;
  std::set<int> verts(gk.vertices.begin(), gk.vertices.end());
  if (static_cast<int>(verts.size()) != k) return 1;
  std::map<int, int> deg_m, deg_c;
  for (const auto& ed : gk.edges) {
    if (!verts.count(ed.u) || !verts.count(ed.v)) return 1;
    auto& deg = ed.label == EdgeLabel::Matching ? deg_m : deg_c;
    ++deg[ed.u];
    ++deg[ed.v];
  }
  std::set<int> degree_one;
  for (int v : gk.vertices) {
    const int dm = deg_m.count(v) ? deg_m[v] : 0;
    const int dc = deg_c.count(v) ? deg_c[v] : 0;
    if (dm + dc == 1) {
      degree_one.insert(v);
    } else if (dm != 1 || dc != 1) {
      return 3;  // interior vertices carry exactly one edge of each label
    }
  }
  if (degree_one != std::set<int>{gk.vertices.front(), gk.vertices.back()} ||
      gk.vertices.front() == gk.vertices.back()) {
    return 2;
  }
  if (k < 2 || gk.vertices[0] != a || gk.vertices[1] != b) return 4;
  return std::nullopt;
}

AltPath find_alternating_path(const AltGraph& g, std::pair<int, int> e, int c) {
  if (auto bad = validate_alt_graph(g)) throw std::invalid_argument("invalid host graph: " + *bad);
  if (!has_matching_pair(g, e)) throw std::invalid_argument("e is not a matching edge");
  if (!on_cycle(g, c)) throw std::invalid_argument("c is not a vertex of the graph");
  const int a = e.first;
  const int b = e.second;
  if (c == a) throw std::invalid_argument("target c equals the starting endpoint of e");
  if (c == b) return AltPath{{a, b}, {EdgeLabel::Matching}};

  const Contraction red = contract_reduce(g, e, c);
  const AltGraph& h = red.graph;
  const int n = h.vertex_count();
  std::map<int, int> pos, mate;
  for (int i = 0; i < n; ++i) pos[h.cycle_order[static_cast<size_t>(i)]] = i;
  for (const auto& [u, v] : h.matching_pairs) {
    mate[u] = v;
    mate[v] = u;
  }

  StageGraph gk;
  gk.vertices = {a, b};
  gk.edges.push_back({a, b, EdgeLabel::Matching});
  std::set<int> in_gk = {a, b};
  int vk = b;

  // Toggle of a cycle edge during the subpath rerouting step: remove it if
  // the stage graph holds it, add it otherwise. A matching-labeled edge on
  // the same vertex pair is a distinct edge and is never touched.
  auto toggle_cycle_edge = [&](int u, int v) {
    for (size_t i = 0; i < gk.edges.size(); ++i) {
      const auto& ed = gk.edges[i];
      if (ed.label == EdgeLabel::Cycle &&
          ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u))) {
        gk.edges.erase(gk.edges.begin() + static_cast<long>(i));
        return;
      }
    }
    gk.edges.push_back({u, v, EdgeLabel::Cycle});
  };

  for (int iter = 0;; ++iter) {
    if (auto bad = check_stage_invariants(gk, static_cast<int>(gk.vertices.size()), a, b)) {
      throw std::logic_error("stage invariant (" + std::to_string(*bad) + ") violated");
    }
    if (vk == c) break;
    if (iter > n) throw std::logic_error("construction did not reach the target vertex");

    const StageGraph::Edge* at_vk = nullptr;
    for (const auto& ed : gk.edges) {
      if (ed.u == vk || ed.v == vk) {
        at_vk = &ed;
        break;  // vk has degree 1, so this edge is unique
      }
    }
    if (at_vk == nullptr) throw std::logic_error("last inserted vertex has no incident edge");
    if (at_vk->label == EdgeLabel::Cycle) {
      // The free slot at vk is its matching edge; its partner is new.
      const int w = mate.at(vk);
      if (in_gk.count(w)) throw std::logic_error("matched partner already present in the stage graph");
      gk.edges.push_back({vk, w, EdgeLabel::Matching});
      gk.vertices.push_back(w);
      in_gk.insert(w);
      vk = w;
    } else {
      // Walk the cycle arc from vk toward c that avoids a, toggling cycle
      // edges, until the walk first leaves the stage graph.
      const int dc = ((pos.at(c) - pos.at(vk)) % n + n) % n;
      const int da = ((pos.at(a) - pos.at(vk)) % n + n) % n;
      const int step = dc < da ? 1 : n - 1;
      int cur = vk;
      int w = -1;
      for (int s = 0; s < n; ++s) {
        const int nxt = h.cycle_order[static_cast<size_t>((pos.at(cur) + step) % n)];
        toggle_cycle_edge(cur, nxt);
        if (!in_gk.count(nxt)) {
          w = nxt;
          break;
        }
        cur = nxt;
      }
      if (w == -1) throw std::logic_error("cycle walk never left the stage graph");
      gk.vertices.push_back(w);
      in_gk.insert(w);
      vk = w;
    }
  }

  // The component of a in the finished stage graph is a path from a to c;
  // walk it by always leaving through the edge not used to arrive.
  AltPath path;
  path.vertices.push_back(a);
  int cur = a;
  int arrived_by = -1;
  for (size_t guard = 0; guard <= gk.edges.size(); ++guard) {
    int next_edge = -1;
    for (int i = 0; i < static_cast<int>(gk.edges.size()); ++i) {
      if (i == arrived_by) continue;
      if (gk.edges[static_cast<size_t>(i)].u == cur || gk.edges[static_cast<size_t>(i)].v == cur) {
        next_edge = i;
        break;
      }
    }
    if (next_edge == -1) break;
    const auto& ed = gk.edges[static_cast<size_t>(next_edge)];
    cur = ed.u == cur ? ed.v : ed.u;
    path.vertices.push_back(cur);
    path.labels.push_back(ed.label);
    arrived_by = next_edge;
  }
  if (path.vertices.back() != c) throw std::logic_error("extracted path does not end at the target");

  // Undo the contractions, newest first. A cycle edge u0u3 of the current
  // path that matches a recorded step expands to u0-u1-u2-u3 with labels
  // Cycle, Matching, Cycle. Each replacement edge occurs at most once.
  for (auto it = red.steps.rbegin(); it != red.steps.rend(); ++it) {
    for (size_t i = 0; i < path.labels.size(); ++i) {
      if (path.labels[i] != EdgeLabel::Cycle) continue;
      const int x = path.vertices[i];
      const int y = path.vertices[i + 1];
      const bool forward = x == it->u0 && y == it->u3;
      const bool backward = x == it->u3 && y == it->u0;
      if (!forward && !backward) continue;
      const int first = forward ? it->u1 : it->u2;
      const int second = forward ? it->u2 : it->u1;
      path.vertices.insert(path.vertices.begin() + static_cast<long>(i + 1), {first, second});
      path.labels.insert(path.labels.begin() + static_cast<long>(i + 1),
                         {EdgeLabel::Matching, EdgeLabel::Cycle});
      break;
    }
  }

  if (auto bad = validate_alt_path(g, path)) {
    throw std::logic_error("constructed path fails validation: " + *bad);
  }
  return path;
}

std::optional<AltPath> brute_force_alt_path(const AltGraph& g, std::pair<int, int> e, int c) {
  if (auto bad = validate_alt_graph(g)) throw std::invalid_argument("invalid host graph: " + *bad);
  if (g.vertex_count() > 16) throw std::invalid_argument("exhaustive path search is limited to 16 vertices");
  if (!has_matching_pair(g, e)) throw std::invalid_argument("e is not a matching edge");
  if (!on_cycle(g, c)) throw std::invalid_argument("c is not a vertex of the graph");
  if (c == e.first) throw std::invalid_argument("target c equals the starting endpoint of e");

  const int n = g.vertex_count();
  std::map<int, int> mate;
  for (const auto& [u, v] : g.matching_pairs) {
    mate[u] = v;
    mate[v] = u;
  }
  std::map<int, std::vector<int>> cyc_nb;
  for (int i = 0; i < n; ++i) {
    const int v = g.cycle_order[static_cast<size_t>(i)];
    const int l = g.cycle_order[static_cast<size_t>((i - 1 + n) % n)];
    const int r = g.cycle_order[static_cast<size_t>((i + 1) % n)];
    cyc_nb[v].push_back(l);
    if (r != l) cyc_nb[v].push_back(r);
    std::sort(cyc_nb[v].begin(), cyc_nb[v].end());
  }

  AltPath path;
  path.vertices = {e.first, e.second};
  path.labels = {EdgeLabel::Matching};
  std::set<int> used = {e.first, e.second};

  auto dfs = [&](auto&& self, int cur, EdgeLabel need) -> bool {
    if (cur == c) return true;
    if (need == EdgeLabel::Matching) {
      const int w = mate.at(cur);
      if (used.count(w)) return false;
      path.vertices.push_back(w);
      path.labels.push_back(EdgeLabel::Matching);
      used.insert(w);
      if (self(self, w, EdgeLabel::Cycle)) return true;
      used.erase(w);
      path.vertices.pop_back();
      path.labels.pop_back();
      return false;
    }
    for (int w : cyc_nb.at(cur)) {
      if (used.count(w)) continue;
      path.vertices.push_back(w);
      path.labels.push_back(EdgeLabel::Cycle);
      used.insert(w);
      if (self(self, w, EdgeLabel::Matching)) return true;
      used.erase(w);
      path.vertices.pop_back();
      path.labels.pop_back();
    }
    return false;
  };

  if (dfs(dfs, e.second, EdgeLabel::Cycle)) return path;
  return std::nullopt;
}

}  // namespace flipmatch
