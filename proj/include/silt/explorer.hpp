#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "silt/io.hpp"

namespace silt {

struct GraphEdge {
  int from = 0;
  int to = 0;
  int summand = 0;  // index of the mutated summand of the source node
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Silting objects reached from `top` by irreducible left mutation.
/// Node 0 is the top; nodes are kept in discovery order.
struct SiltingQuiverGraph {
  AlgebraPtr alg;
  ProjComplex top;
  std::optional<ProjComplex> bottom;
  std::vector<SiltingRecord> nodes;
  std::vector<GraphEdge> edges;
  bool complete = false;

  /// Index of the node isomorphic to x, or -1.
  int find(const ProjComplex& x) const;
};

/// Left-mutation BFS from top keeping the nodes >= bottom.
/// Stops with complete = false once more than `cap` nodes are found.
SiltingQuiverGraph enumerate_interval(const SiltingRecord& top, const ProjComplex& bottom, int cap = 2000);
/// Left-mutation BFS from top without a lower bound, `depth` mutations deep.
SiltingQuiverGraph explore_left(const SiltingRecord& top, int depth, int cap = 2000);

/// All basic silting T with A >= T >= A[1], from the interval enumeration.
std::vector<SiltingRecord> two_term_silting(AlgebraPtr a, int cap = 2000);
/// The same list by direct search over compatible two-term presilting indecomposables
/// (minimal presentations of modules and shifted projectives).
std::vector<SiltingRecord> two_term_by_presentations(AlgebraPtr a, int cap = 200);

/// Pairs (i, j) with node i > node j and nothing strictly between them.
std::vector<std::pair<int, int>> covering_pairs(const SiltingQuiverGraph& g);
/// Edge set equals the covering relation.
bool edges_are_covering(const SiltingQuiverGraph& g);
/// Every edge goes strictly down in the order.
bool edges_descend(const SiltingQuiverGraph& g);
/// Every node is reachable from the top along edges and its provenance replays to it.
bool left_connected(const SiltingQuiverGraph& g);

/// Shift identification: for each node the earliest node it is a shift of, and the shift.
std::vector<std::pair<int, int>> shift_classes(const SiltingQuiverGraph& g);

std::string export_dot(const SiltingQuiverGraph& g, bool shift_identify = false);
io::json export_json(const SiltingQuiverGraph& g, bool shift_identify = false);
/// Inverse of export_json without shift identification.
SiltingQuiverGraph graph_from_json(AlgebraPtr a, const io::json& j);
bool same_graph(const SiltingQuiverGraph& x, const SiltingQuiverGraph& y);

}  // namespace silt
