#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flipmatch/geometry.hpp"
#include "flipmatch/matching.hpp"

namespace flipmatch {

/// Thrown when an enumeration-backed operation is asked for a point set
/// beyond its configured cap (the matching count grows exponentially).
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(int n, int cap)
      : std::runtime_error("point set size " + std::to_string(n) +
                           " exceeds the enumeration cap " + std::to_string(cap)) {}
};

inline constexpr int kDefaultEnumerationCap = 11;

/// All plane almost-perfect matchings of ps, sorted by their canonical
/// encoding. Backtracks over the lowest uncovered index, so each matching is
/// produced exactly once. Requires odd size; throws CapExceeded above cap.
std::vector<Matching> enumerate_matchings(const PointSet& ps, int cap = kDefaultEnumerationCap);

/// The graph on all matchings of ps where two matchings are adjacent iff one
/// legal move under the rule transforms one into the other. Moves are
/// reversible, so adjacency is symmetric.
struct FlipGraph {
  FlipRule rule = FlipRule::EdgeFlip;
  std::vector<Matching> vertices;      // in canonical encoding order
  std::vector<std::vector<int>> adj;   // sorted neighbor lists
  std::size_t edge_count = 0;
};

FlipGraph build_flip_graph(const PointSet& ps, FlipRule rule, int cap = kDefaultEnumerationCap);

struct Components {
  std::vector<int> label;  // per vertex, component id in discovery order
  std::vector<int> sizes;  // per component id

  int count() const { return static_cast<int>(sizes.size()); }
};

Components connected_components(const FlipGraph& g);

struct DiameterResult {
  int diameter = 0;
  int from = -1;  // lexicographically smallest witness pair
  int to = -1;
};

/// Exact diameter by BFS from every vertex; the witness pair is the smallest
/// (from, to) among all eccentricity maxima, independent of thread count.
/// Throws std::invalid_argument on disconnected graphs.
DiameterResult graph_diameter(const FlipGraph& g, int threads = 1);

/// BFS distance between two vertex indices, -1 if unreachable.
int bfs_distance(const FlipGraph& g, int from, int to);

/// Shortest flip path between two vertex indices as a matching sequence
/// (both endpoints included). Empty if unreachable.
std::vector<int> bfs_path(const FlipGraph& g, int from, int to);

/// Breadth-first distance from start to the nearest matching satisfying
/// goal, expanding successors on demand; the full graph is never built, so
/// this works beyond the enumeration cap. Returns -1 when the ball of radius
/// max_depth contains no goal; throws std::runtime_error if more than
/// max_states distinct matchings are generated first.
int lazy_bfs_distance(const PointSet& ps, const Matching& start, FlipRule rule,
                      const std::function<bool(const Matching&)>& goal, int max_depth,
                      std::size_t max_states = 5'000'000);

struct DisconnectednessWitness {
  std::size_t instance = 0;  // index into the searched family
  Components components;
  std::optional<Matching> isolated;  // a matching with no legal moves, when present
};

/// Scans a family of point sets for one whose move graph under the rule is
/// disconnected; reports the first hit with its component structure.
std::optional<DisconnectednessWitness> search_disconnected(const std::vector<PointSet>& family,
                                                           FlipRule rule,
                                                           int cap = kDefaultEnumerationCap);

}  // namespace flipmatch
