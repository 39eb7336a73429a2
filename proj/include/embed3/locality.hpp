#pragma once

#include <optional>
#include <string>
#include <vector>

#include "embed3/complex.hpp"
#include "embed3/graph.hpp"
#include "embed3/matroid.hpp"

namespace embed3::locality {

// Restriction of the dual graph to the faces at v: g minus every edge whose
// face does not contain v.  Isolated vertices are dropped unless kept by
// flag.  Edge ids of g must be exactly the face ids of c.
Graph g_v(const Graph& g, const cx::DirectedComplex& c, const Id& v,
          bool keep_isolated = false);

struct VertexLocality {
  Id vertex;
  std::vector<Id> faces_at_vertex;
  std::size_t link_matroid_rank = 0;  // bond matroid of the link graph
  std::size_t restriction_rank = 0;   // dual matroid restricted to the faces
  bool equal = false;
  // A circuit present in one matroid only, when unequal.
  std::optional<std::vector<Id>> witness;
  std::string witness_side;  // "link-bond" or "dual-restriction"
};

struct LocalityReport {
  bool k_local = false;
  std::vector<VertexLocality> vertices;  // vertex-id order
  std::optional<Id> first_failing_vertex;
};

// At every vertex, compare the bond matroid of the link graph with the
// restriction of the dual matroid to the faces at that vertex (link edges
// are identified with faces by their shared ids).  Per-vertex work fans out
// across threads; the serial variant is the independent reference.
LocalityReport is_k_local(const cx::DirectedComplex& c,
                          const algebra::FieldTag& k,
                          const matroid::ScaleLimits& lim = {});
LocalityReport is_k_local_serial(const cx::DirectedComplex& c,
                                 const algebra::FieldTag& k,
                                 const matroid::ScaleLimits& lim = {});

struct VertexTwoConnectivity {
  Id vertex;
  bool two_connected = false;
  std::string reason;            // empty when two_connected
  std::optional<Id> cut_vertex;  // a link-graph vertex, i.e. an edge of c
};

struct LocalTwoConnectivityReport {
  bool locally_2connected = false;
  std::vector<VertexTwoConnectivity> vertices;  // vertex-id order
  std::optional<Id> first_failing_vertex;
};

// True at v iff the link graph of v is 2-connected (at least 3 vertices,
// connected, no cut vertex; parallel edges permitted).
LocalTwoConnectivityReport is_locally_2connected(
    const cx::DirectedComplex& c, const TwoConnectivityOptions& opt = {});

}  // namespace embed3::locality
