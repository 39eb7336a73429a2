#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "embed3/errors.hpp"
#include "embed3/graph.hpp"

namespace embed3::planar {

// One end of an edge: end 0 sits at the stored u, end 1 at v.  A loop owns
// both of its ends, so every rotator lists exactly deg(v) darts.
struct Dart {
  Id edge;
  int end = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

// Cyclic order of the incident darts around each vertex.
struct RotationSystem {
  std::map<Id, std::vector<Dart>> rotators;
};

// Convenience constructor for loopless graphs, where a rotator is just an
// edge-id sequence.  Throws Error on loops or on lists that do not match the
// incident edges exactly.
RotationSystem rotation_from_edge_lists(
    const Graph& g, const std::map<Id, std::vector<Id>>& lists);

// Directed boundary walk of one traced face; forward means u -> v.
struct TracedFace {
  std::vector<std::pair<Id, bool>> walk;
  std::vector<Id> edge_ids() const;  // sorted, with multiplicity
};

struct PlaneEmbedding {
  Graph g;
  RotationSystem rotation;
  std::vector<TracedFace> faces;  // deterministic order (smallest first arc)
  long long genus = 0;
  // Optional face names (dual-graph vertices), parallel to faces.
  std::vector<std::optional<Id>> face_labels;

  const std::vector<Dart>& rotator(const Id& vertex) const;
  // The rotator as an edge-id sequence (loops appear twice).
  std::vector<Id> rotator_edges(const Id& vertex) const;
};

// Face tracing for a rotation system: after arriving at a vertex through a
// dart, the walk leaves through the dart's successor in the rotator there.
// Genus comes from |V| - |E| + |faces| = 2 #components - 2 genus.  Isolated
// vertices are rejected (they have no darts to trace).
PlaneEmbedding trace_faces(const Graph& g, const RotationSystem& r);

struct PrescribedDualError : Error {
  enum class Kind {
    not_two_connected,
    face_set_not_cycle,
    not_planar_assembly,
    dual_matroid_mismatch,
  };
  Kind kind;
  std::optional<Id> where;  // offending dual vertex, when one exists
  PrescribedDualError(Kind kind, const std::string& msg,
                      std::optional<Id> where = std::nullopt)
      : Error(msg), kind(kind), where(std::move(where)) {}
};

struct PrescribedDualOptions {
  // Hard pre-check that the cycle matroid of the dual graph equals the bond
  // matroid of the link graph (identity bijection on edge ids).
  bool verify_matroid = true;
};

// Plane embedding of l whose traced faces are exactly the vertex stars of
// gv: the star of each gv-vertex b must be a cycle S_b of l, the faces get
// labelled by their gv-vertices, and each l-edge lies on the two faces named
// by its gv-endpoints.  Edge ids of l and gv must coincide (the bijection is
// the identity).  Throws PrescribedDualError.
PlaneEmbedding embedding_with_prescribed_dual(
    const Graph& l, const Graph& gv, const PrescribedDualOptions& opt = {});

struct NotPlanar : Error {
  explicit NotPlanar(const std::string& msg) : Error(msg) {}
};

struct DualResult {
  Graph dual;
  std::map<Id, Id> edge_map;  // primal edge id -> dual edge id (identity)
};

// One dual vertex per traced face (named by its label when every face is
// labelled, else F0, F1, ...); one dual edge per primal edge joining the
// faces on its two sides.  Requires genus 0.
DualResult dual_graph_of_embedding(const PlaneEmbedding& pe);

struct NotIncident : Error {
  explicit NotIncident(const std::string& msg) : Error(msg) {}
};

struct RotatorNeighbors {
  Id before, after;
  bool degenerate = false;  // rotator length <= 2, so before == after
};

// Cyclic predecessor and successor of the pivot edge in the rotator at a
// vertex.  Loopless vertices only (the pivot appears once).
RotatorNeighbors rotator_neighbors(const PlaneEmbedding& pe,
                                   const Id& at_vertex, const Id& pivot_edge);

// Reverse every rotator (the reflected embedding); faces keep their edge
// sets and the genus is unchanged.  Labels are carried over by matching
// face edge multisets, smallest label first.
PlaneEmbedding reflected(const PlaneEmbedding& pe);

// Cyclic-sequence comparison helpers (exposed for the colouring rules).
bool cyclic_equal(const std::vector<Id>& a, const std::vector<Id>& b);
bool cyclic_reverse(const std::vector<Id>& a, const std::vector<Id>& b);

}  // namespace embed3::planar
