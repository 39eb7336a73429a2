#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "embed3/ids.hpp"

namespace embed3 {

// Finite multigraph with labelled vertices and edges.  Loops and parallel
// edges are allowed; an edge is an unordered pair (the stored endpoint order
// carries no meaning here, unlike complex edges).
struct Graph {
  struct Edge {
    Id id;
    Id u, v;
    bool is_loop() const { return u == v; }
  };
  std::vector<Id> vertices;
  std::vector<Edge> edges;

  bool has_vertex(const Id& v) const;
  std::size_t vertex_index(const Id& v) const;  // throws if absent
  std::size_t edge_index(const Id& e) const;    // throws if absent
  const Edge& edge(const Id& e) const { return edges[edge_index(e)]; }

  // Checks label uniqueness and endpoint existence; throws Error.
  void check() const;
};

Graph sort_graph(Graph g);  // vertices and edges sorted by id

// --- connectivity -----------------------------------------------------------

// Vertex partition into connected components, each sorted, listed in order of
// smallest member.  Isolated vertices form their own components.
std::vector<std::vector<Id>> components(const Graph& g);

bool is_connected(const Graph& g);

struct TwoConnectivityOptions {
  // When set, a graph on exactly two vertices counts as 2-connected if at
  // least two parallel edges join them.  Off by default: the standard notion
  // used for link graphs assumes at least three vertices.
  bool allow_two_vertex = false;
};

struct TwoConnectivityReport {
  bool two_connected = false;
  std::string reason;            // empty when two_connected
  std::optional<Id> cut_vertex;  // set when a cut vertex witnesses failure
};

TwoConnectivityReport two_connectivity(const Graph& g,
                                       const TwoConnectivityOptions& opt = {});

// --- spanning forest and cycle space ----------------------------------------

struct SpanningForest {
  std::vector<Id> tree_edges;   // ids, one forest over all components
  std::vector<Id> chord_edges;  // the non-tree edges, in edge order
};

SpanningForest spanning_forest(const Graph& g);

// Edge ids of the unique cycle in tree + chord.  The chord must not be a
// forest edge; a loop chord yields just itself.
std::vector<Id> fundamental_cycle(const Graph& g, const SpanningForest& f,
                                  const Id& chord);

// dim of the cycle space: |E| - |V| + #components.
std::size_t cycle_space_dim(const Graph& g);

// True when the edge subset is the edge set of a single cycle: nonempty,
// connected, and every touched vertex has degree exactly 2.  A single loop
// counts as a cycle of length one.
bool edge_set_is_cycle(const Graph& g, const std::set<Id>& edge_ids);

// All simple cycles (as sorted edge-id sets), exhaustively.  Intended for
// small graphs; throws ScaleExceeded past the node budget.
std::vector<std::set<Id>> all_cycles(const Graph& g,
                                     std::size_t budget = 1u << 22);

// --- misc -------------------------------------------------------------------

Graph subgraph_by_edges(const Graph& g, const std::set<Id>& keep_edges,
                        bool drop_isolated);

// Star of a vertex as a multiset of edge ids (loops appear twice).
std::map<Id, int> vertex_star(const Graph& g, const Id& v);

// Isomorphism of graphs that share their edge label set, where the bijection
// is required to fix edge labels (only vertices are renamed).  For connected
// pieces this reduces to comparing the multisets of vertex stars.
bool edge_labelled_isomorphic(const Graph& a, const Graph& b);

}  // namespace embed3
