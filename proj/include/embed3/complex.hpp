#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "embed3/graph.hpp"
#include "embed3/ids.hpp"
#include "embed3/matrix.hpp"

namespace embed3::cx {

// Directed edge: tail u, head v.
struct EdgeRec {
  Id id;
  Id u, v;
};

// Oriented face: the stored triple is a cyclic order (rotations of it denote
// the same oriented face, the reversal denotes the opposite orientation).
// copy_index separates parallel faces carrying the same vertex set; it is
// derived during validation, 0 for the first face on a triple in id order.
struct FaceRec {
  Id id;
  std::array<Id, 3> verts;
  int copy_index = 0;
};

struct RawFace {
  Id id;
  std::array<Id, 3> verts;
  int copies = 1;  // expands to `copies` parallel faces (id, id~1, id~2, ...)
};

struct RawComplex {
  std::vector<Id> vertices;
  std::vector<EdgeRec> edges;
  std::vector<RawFace> faces;
};

// Validated 2-dimensional generalised simplicial complex with directed edges
// and oriented (possibly parallel) faces.  Every edge is incident with at
// least one face.  All vectors are sorted by id; the index tables below are
// derived and kept consistent by validate().
struct DirectedComplex {
  std::vector<Id> vertices;
  std::vector<EdgeRec> edges;
  std::vector<FaceRec> faces;

  std::map<Id, std::size_t> vertex_idx, edge_idx, face_idx;
  std::map<std::pair<Id, Id>, std::size_t> edge_by_pair;  // key (min,max)
  std::vector<std::array<std::size_t, 3>> face_edges;     // sides ab, bc, ca
  std::vector<std::array<int, 3>> face_edge_signs;        // +1 with direction
  std::vector<std::vector<std::size_t>> faces_at_edge;
  std::vector<std::vector<std::size_t>> edges_at_vertex, faces_at_vertex;

  const EdgeRec& edge(const Id& e) const { return edges[edge_idx.at(e)]; }
  const FaceRec& face(const Id& f) const { return faces[face_idx.at(f)]; }
  bool has_vertex(const Id& v) const { return vertex_idx.count(v) > 0; }

  std::vector<Id> face_ids_at_edge(const Id& e) const;
  std::vector<Id> face_ids_at_vertex(const Id& v) const;
  std::vector<Id> edge_ids_at_vertex(const Id& v) const;
};

// Checks the complex invariants and builds the index tables.
// Throws ValidationError.
DirectedComplex validate(const RawComplex& raw);

// Inverse of validate up to copy expansion (every face comes back with
// copies = 1 under its expanded id).
RawComplex to_raw(const DirectedComplex& c);

// Convenience builder used by tests and corpus generators: edges and faces
// given as vertex tuples; ids are synthesized as "u-v" and "a-b-c".
DirectedComplex make_complex(
    const std::vector<Id>& vertices,
    const std::vector<std::array<Id, 3>>& faces);

// --- file format -------------------------------------------------------------

// Input document: {"vertices": [id...], "edges": [[id,u,v]...],
// "faces": [[id,a,b,c]... or [id,a,b,c,copies]...]}, UTF-8 JSON, ids are
// strings or integers.  Edge order is the direction; face order is the
// cyclic orientation.
RawComplex parse_complex_text(const std::string& text);
DirectedComplex read_complex(const std::string& text);
std::string serialize_complex(const DirectedComplex& c);

// --- local structure ----------------------------------------------------------

struct LinkGraph {
  Id host;      // the vertex v
  Graph graph;  // vertices: edge ids at v; edges: face ids at v
};

LinkGraph link_graph(const DirectedComplex& c, const Id& v);

std::size_t face_degree(const DirectedComplex& c, const Id& e);
std::size_t min_face_degree(const DirectedComplex& c);

Graph one_skeleton(const DirectedComplex& c);

// Edge/face incidence matrix over the given field: rows are edges, columns
// faces; the entry is +1 when the directed edge appears in the face's cyclic
// order, -1 when its reversal does, 0 otherwise.
algebra::ExactMatrix incidence_matrix(const DirectedComplex& c,
                                      const algebra::FieldTag& k);

// --- simple connectivity surrogates -------------------------------------------

struct H1Report {
  bool trivial = false;
  std::size_t boundary_rank = 0;  // rank over GF(2) of the face boundaries
  std::size_t cycle_dim = 0;      // dim of the skeleton's cycle space
};

// First homology over GF(2) is zero iff the face boundaries span the cycle
// space of the 1-skeleton.  A sound refuter for simple connectivity: if this
// fails (or the skeleton is disconnected) the complex is not simply
// connected; if it holds the question stays open.
H1Report h1_f2_trivial(const DirectedComplex& c);

struct GroupReport {
  enum class Status { certified_trivial, unknown };
  Status status = Status::unknown;
  std::size_t generators_left = 0;
  std::size_t relators_left = 0;
  std::size_t steps = 0;
  std::string note;
};

// Bounded simplification of the edge-path group presentation (spanning tree
// generators, face relators).  Every move preserves the group, so
// certified_trivial is sound; unknown only means the budget ran out or the
// presentation would not collapse.  Requires a connected 1-skeleton.
GroupReport fundamental_group_report(const DirectedComplex& c,
                                     std::size_t budget = 10000);

// --- reorientation helpers (used by invariance tests) -------------------------

DirectedComplex with_edge_reversed(const DirectedComplex& c, const Id& e);
DirectedComplex with_face_reversed(const DirectedComplex& c, const Id& f);

}  // namespace embed3::cx
