#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "embed3/complex.hpp"
#include "embed3/graph.hpp"
#include "embed3/matrix.hpp"

namespace embed3::matroid {

// Desk-scale guards for the exponential enumerations in this module.
struct ScaleLimits {
  std::size_t max_ground = 24;
  std::size_t node_budget = 1u << 22;
};

struct GroundMismatch : Error {
  explicit GroundMismatch(const std::string& msg)
      : Error("ground mismatch: " + msg) {}
};

// Column matroid of an exact matrix: ground elements are the column labels.
struct VectorMatroid {
  algebra::ExactMatrix rep;
  const std::vector<Id>& ground() const { return rep.col_labels; }
};

struct GraphMatroid {
  enum class Mode { cycle, bond };
  Graph g;
  Mode mode = Mode::cycle;
};

// Uniform view: sorted ground plus an independence oracle over index masks.
struct Matroid {
  std::vector<Id> ground;  // ascending
  std::function<bool(std::uint32_t)> indep;
  bool independent(std::uint32_t mask) const { return indep(mask); }
};

Matroid matroid_of(const VectorMatroid& m);
Matroid matroid_of(const GraphMatroid& m);

std::size_t rank_of_mask(const Matroid& m, std::uint32_t mask);
std::size_t rank(const Matroid& m);
bool is_loop(const Matroid& m, const Id& e);
std::vector<Id> loops(const Matroid& m);

// The k-dual matroid of a complex: the vector matroid on the face set whose
// circuit space is the row space of the edge/face incidence matrix.  It is
// realized as the column matroid of a null-space basis of that matrix, so by
// double orthogonal complement the null space of the representation is
// exactly the incidence row space.  Rank = |F| - rank(incidence).
VectorMatroid dual_matroid(const cx::DirectedComplex& c,
                           const algebra::FieldTag& k);

// Restriction to a subset of the ground set (columns), sorted ascending.
VectorMatroid restriction(const VectorMatroid& m, const std::vector<Id>& subset);

// All circuits (minimal dependent sets), each sorted ascending, the family
// sorted lexicographically.  Optional cap prunes the search to circuits of
// bounded size.  Throws ScaleExceeded past the limits.
std::vector<std::vector<Id>> circuits(
    const Matroid& m, const ScaleLimits& lim = {},
    std::optional<std::size_t> size_cap = std::nullopt);

struct EqualityReport {
  bool equal = false;
  // On inequality: a circuit of one side that the other side lacks.
  std::optional<std::vector<Id>> witness;
  std::string witness_side;  // "left" or "right"
};

// Circuit-family comparison in both directions.  Grounds must coincide.
EqualityReport matroids_equal(const Matroid& a, const Matroid& b,
                              const ScaleLimits& lim = {});

// GF(2) standard-form candidate: take the RREF of the representation over
// its own field, keep the support pattern as a GF(2) matrix (rows labelled
// by the pivot elements), and accept it only if it presents the same
// matroid.  A matroid is binary exactly when this candidate works.
std::optional<VectorMatroid> binary_candidate(const VectorMatroid& m,
                                              const ScaleLimits& lim = {});

struct Realization {
  Graph g;                      // edge ids are the ground element ids
  std::map<Id, Id> element_edge;  // identity bijection, kept explicit
};

// Graph whose cycle matroid equals m, or nullopt when none exists.  Staged:
// loops are split off, parallel classes collapsed, the binary-candidate gate
// rejects most non-graphic inputs cheaply, the rest decomposes into
// circuit-connected components, and each component runs a backtracking
// search over spanning-tree shapes with forced chord placement.  The
// assembled graph is verified against m by matroids_equal before return.
std::optional<Realization> graph_realization(const VectorMatroid& m,
                                             const ScaleLimits& lim = {});

// Ground bijection carrying the circuit family of a onto that of b.
std::optional<std::map<Id, Id>> matroid_isomorphic(const Matroid& a,
                                                   const Matroid& b,
                                                   const ScaleLimits& lim = {});

}  // namespace embed3::matroid
