#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "embed3/complex.hpp"
#include "embed3/field.hpp"
#include "embed3/graph.hpp"
#include "embed3/matroid.hpp"

namespace embed3::maclane {

// A labelled family of vectors in k^coords.  Sparse means: in every
// coordinate either no vector is nonzero or exactly two are, with values
// +1 and -1 (over GF(2) both are 1).
struct SparseFamily {
  algebra::FieldTag field = algebra::FieldTag::gf(2);
  std::vector<Id> coords;  // ascending coordinate labels
  std::vector<std::pair<Id, std::vector<algebra::Rat>>> vectors;

  // Rows = vectors, columns = coords.
  algebra::ExactMatrix matrix() const;
};

struct SparseCheck {
  bool sparse = false;
  std::optional<Id> coordinate;  // first violating coordinate
  std::string note;
};

SparseCheck is_sparse_family(const SparseFamily& fam);

// Signed vertex stars of a graph: the vector of vertex b carries +1 at every
// edge with tail b and -1 at every edge with head b; loops contribute 0.
// Coordinates are the edge ids.  This family is always sparse.
SparseFamily sparse_set_from_graph(const Graph& g, const algebra::FieldTag& k);

struct NotSparse : Error {
  explicit NotSparse(const std::string& msg) : Error(msg) {}
};

// Inverse construction: every 2-nonzero coordinate becomes an edge from the
// +1 vector's label to the -1 vector's label (over GF(2), where the signs
// coincide, the tail is the smaller label); every all-zero coordinate
// becomes a loop at the smallest vector label (or at a fresh vertex "sink"
// when the family has no vectors).  Edge ids are the coordinate labels.
// Throws NotSparse when the family is not sparse.
Graph graph_from_sparse_set(const SparseFamily& fam);

struct MaclaneVerdict {
  // True exactly when the dual matroid is the cycle matroid of some graph.
  bool sparse_generating_set_exists = false;
  SparseFamily family;  // stars of the realizing graph, when one exists
  std::optional<matroid::Realization> realization;
  // Whether the family's row space equals the null space of the edge/face
  // incidence matrix.  Guaranteed over GF(2); over larger fields the two
  // spaces can differ by a rescaling of coordinates.
  bool family_spans_cycle_space = false;
  std::string note;
};

// Decides whether the space of 2-cycles of c over k admits a sparse
// generating set, by attempting a graph realization of the dual matroid and
// reading off the vertex stars of the realizing graph.
MaclaneVerdict maclane_check(const cx::DirectedComplex& c,
                             const algebra::FieldTag& k,
                             const matroid::ScaleLimits& lim = {});

}  // namespace embed3::maclane
