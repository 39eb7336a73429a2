#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "embed3/complex.hpp"
#include "embed3/field.hpp"
#include "embed3/graph.hpp"
#include "embed3/planar.hpp"

namespace embed3::rot {

enum class EdgeColour { green, red, degenerate_green };

std::string colour_name(EdgeColour c);

// A system of plane link embeddings, one per vertex of the host complex,
// whose faces are labelled by the vertices of one dual graph g (edge ids of
// g are the face ids of the host).  At every host edge e = vw the rotators
// at link-vertex e in the two embeddings agree or are reverse; the derived
// colour is green for reverse, red for agree, and degenerate-green when the
// face-degree of e is at most 2 (a rotator of length <= 2 is self-reverse).
struct RotationFramework {
  cx::DirectedComplex host;
  Graph g;
  std::map<Id, planar::PlaneEmbedding> embeddings;  // keyed by host vertex
  std::map<Id, bool> flipped;                       // orientation flags

  // The rotator at host-edge e inside the link embedding at host-vertex v,
  // as a cyclic face-id sequence.
  std::vector<Id> rotator_at(const Id& v, const Id& e) const;
};

struct FrameworkError : Error {
  enum class Kind {
    faces_at_edge_not_cycle,
    prescribed_dual_failure,
    compatibility_violation,
  };
  Kind kind;
  std::optional<Id> where;  // the offending edge or vertex
  FrameworkError(Kind kind, const std::string& msg,
                 std::optional<Id> where = std::nullopt)
      : Error(msg), kind(kind), where(std::move(where)) {}
};

// Builds the per-vertex plane embeddings with prescribed duals g_v and
// verifies at every host edge that the incident faces form a cycle of g and
// that the two rotators agree or are reverse.  Edge ids of g must be the
// face ids of c.
RotationFramework construct_rotation_framework(const cx::DirectedComplex& c,
                                               const Graph& g);

// Derived per-edge colours; throws FrameworkError(compatibility_violation)
// when some edge pair of rotators neither agrees nor reverses.
std::map<Id, EdgeColour> colour_edges(const RotationFramework& s);

// Reverses every rotator of the embedding at v and toggles its orientation
// flag.  Colours of incident face-degree >= 3 edges toggle.
RotationFramework flip(const RotationFramework& s, const Id& v);

struct SparsityViolation {
  Id g_vertex;
  Id c_edge;
  std::size_t count;  // (g_vertex, c_edge)-incident faces; must be 0 or 2
};

struct SparsityReport {
  bool sparse = false;
  std::vector<SparsityViolation> violations;
};

// For every pair (vertex b of g, edge e of c), the number of faces at e
// whose g-edge is incident with b must be exactly 0 or 2.
SparsityReport sparsity_check(const cx::DirectedComplex& c, const Graph& g);

struct DegenerateDegrees : Error {
  explicit DegenerateDegrees(const std::string& msg) : Error(msg) {}
};

struct FaceParity {
  std::size_t red_count = 0;
  bool even = true;
};

// Red count over the three edges of face f.  Every edge of f must have
// face-degree >= 3 (throws DegenerateDegrees otherwise).
FaceParity face_parity_check(const RotationFramework& s, const Id& f);

struct HypothesisFailure : Error {
  explicit HypothesisFailure(const std::string& msg) : Error(msg) {}
};

struct JunkifyResult {
  cx::DirectedComplex complex;             // host extended by parallel copies
  Graph g;                                 // subdivision of the input g
  RotationFramework framework;             // extended framework, induces input
  std::vector<std::pair<Id, Id>> ledger;   // (copied face, new copy), in order
};

// Raises every face-degree to at least 3: repeatedly picks the smallest
// face-degree-2 edge, copies the smaller incident face x as a parallel face
// x', inserts x' beside x in the three link embeddings so that {x, x'}
// bounds a bigon on the side of the smaller g-endpoint of x, and subdivides
// the g-edge x (new vertex <x>*; x' keeps the smaller endpoint).  Requires
// every face-degree >= 2 (throws HypothesisFailure).
JunkifyResult junkify(const cx::DirectedComplex& c, const Graph& g,
                      const RotationFramework& s);

// Deterministic replay of a junkify ledger on the dual graph alone.
Graph replay_ledger(const Graph& g,
                    const std::vector<std::pair<Id, Id>>& ledger);

// Structural test that fine is a subdivision of coarse: the added vertices
// all have degree 2, and smoothing them recovers coarse up to edge renaming.
bool is_subdivision_of(const Graph& fine, const Graph& coarse);

struct EvennessReport {
  bool even = false;
  std::optional<std::vector<Id>> witness_cycle;  // odd cycle, when uneven
};

// Every cycle of the skeleton has an even red count; degenerate-green counts
// as green.  Checked on fundamental cycles of a spanning forest (the parity
// functional is linear over the cycle space).
EvennessReport is_even(const RotationFramework& s);

// The same parity checks on a bare graph + red edge set: the fundamental
// cycle method and the exhaustive all-cycles method (for small graphs).
EvennessReport evenness_of_colouring(const Graph& skeleton,
                                     const std::set<Id>& red);
EvennessReport evenness_exhaustive(const Graph& skeleton,
                                   const std::set<Id>& red,
                                   std::size_t budget = 1u << 22);

struct HostMismatch : Error {
  explicit HostMismatch(const std::string& msg) : Error(msg) {}
};

// True iff deleting from s_prime the faces absent from s turns every rotator
// of s_prime into the corresponding rotator of s (cyclic equality).  The
// host of s_prime must extend the host of s by parallel faces only.
bool induces_check(const RotationFramework& s_prime,
                   const RotationFramework& s);

// --- certificates --------------------------------------------------------------

struct Certificate {
  long long version = 1;
  std::string field;                      // coefficient field name
  Graph dual;                             // realized dual graph of the input
  Graph junk_dual;                        // its subdivision after junkify
  std::vector<std::pair<Id, Id>> ledger;  // junkify ledger
  // Per host vertex, per host edge at it: the rotator as a cyclic face-id
  // sequence, stored in canonical rotation (smallest face id first).
  std::map<Id, std::map<Id, std::vector<Id>>> rotators;
  std::map<Id, std::string> colours;      // host edge -> colour name
};

Certificate make_certificate(const algebra::FieldTag& k, const Graph& dual,
                             const JunkifyResult& junk);

// Canonical text form; serialize(parse(serialize(c))) == serialize(c).
std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(const std::string& text);

struct CertificateCheck {
  bool ok = false;
  std::string note;  // failure reason; empty when ok
};

// Independent re-verification against the original complex: replays the
// ledger, rebuilds the embeddings from the stored rotators, and re-runs the
// colouring, parity, evenness, inducing, and dual-graph round-trip checks.
CertificateCheck verify_certificate(const cx::DirectedComplex& c,
                                    const Certificate& cert);

}  // namespace embed3::rot
