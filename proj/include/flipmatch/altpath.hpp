#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flipmatch/geometry.hpp"

namespace flipmatch {

enum class EdgeLabel { Matching, Cycle };

/// Union of a Hamiltonian cycle C and a perfect matching M on the same even
/// vertex set. Vertices carry arbitrary non-negative ids; cycle_order lists
/// them in circular order and matching_pairs pairs each exactly once. M may
/// share edges with C.
struct AltGraph {
  std::vector<int> cycle_order;
  std::vector<std::pair<int, int>> matching_pairs;

  int vertex_count() const { return static_cast<int>(cycle_order.size()); }
};

std::optional<std::string> validate_alt_graph(const AltGraph& g);

/// Path whose edges alternate Matching, Cycle, Matching, ... starting with a
/// Matching edge. vertices has one more entry than labels.
struct AltPath {
  std::vector<int> vertices;
  std::vector<EdgeLabel> labels;
};

/// Checks an AltPath against its host: no repeated vertices, labels strictly
/// alternating from Matching, every edge present in g with the stated label.
std::optional<std::string> validate_alt_path(const AltGraph& g, const AltPath& p);

/// One contraction: matching edge u1u2 lay on the cycle between u0 and u3;
/// u1, u2 were removed and replaced by the cycle edge u0u3.
struct ContractionStep {
  int u0 = -1, u1 = -1, u2 = -1, u3 = -1;
};

struct Contraction {
  AltGraph graph;
  std::vector<ContractionStep> steps;  // in application order
};

/// Contracts every matching edge that lies on the cycle, except e and the
/// matching edge at c (so the target vertex c and its partner always
/// survive). Scans the cycle from position 0 and restarts after each
/// contraction; the result is independent of ordering but this fixes it.
/// Contracted graphs may have as few as 2 cycle vertices (parallel edges).
Contraction contract_reduce(const AltGraph& g, std::pair<int, int> e, int c);

/// Intermediate state of the iterative construction: vertices in insertion
/// order v_1..v_k plus the labeled edges added so far.
struct StageGraph {
  struct Edge {
    int u = -1, v = -1;
    EdgeLabel label = EdgeLabel::Matching;
  };
  std::vector<int> vertices;
  std::vector<Edge> edges;
};

/// Verifies the four invariants every stage graph must satisfy:
///   (1) exactly k distinct vertices,
///   (2) exactly two vertices of degree 1, the first and last inserted,
///   (3) every other vertex has degree 2, one Matching and one Cycle edge,
///   (4) the first two vertices are a and b (the endpoints of e).
/// Returns the number of the first violated invariant, or nullopt.
std::optional<int> check_stage_invariants(const StageGraph& gk, int k, int a, int b);

/// Finds an alternating path from a = e.first to c whose first edge is e.
/// Requires e in M and c distinct from a. The construction maintains the
/// stage invariants at every step and is checked against them; violations
/// throw std::logic_error.
AltPath find_alternating_path(const AltGraph& g, std::pair<int, int> e, int c);

/// Exhaustive reference search (depth-first over all alternating paths).
/// Guard: throws std::invalid_argument on graphs with more than 16 vertices.
std::optional<AltPath> brute_force_alt_path(const AltGraph& g, std::pair<int, int> e, int c);

}  // namespace flipmatch
