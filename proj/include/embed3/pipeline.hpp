#pragma once

#include <optional>
#include <string>
#include <vector>

#include "embed3/complex.hpp"
#include "embed3/field.hpp"
#include "embed3/graph.hpp"
#include "embed3/locality.hpp"
#include "embed3/matroid.hpp"
#include "embed3/rotation.hpp"

namespace embed3::pipe {

enum class Status {
  embeddable_certified = 0,
  not_embeddable_dual_not_graphic = 1,
  hypothesis_failed = 2,
  inconclusive = 3,
};

std::string status_name(Status s);  // "EMBEDDABLE_CERTIFIED", ...
int exit_code(Status s);            // 0, 1, 2, 3

struct StageLog {
  std::string stage;
  bool ok = false;
  std::string detail;
};

struct Options {
  algebra::FieldTag field = algebra::FieldTag::gf(2);
  matroid::ScaleLimits limits;
  std::size_t group_budget = 10000;  // bounded presentation simplification
};

struct DualSummary {
  std::size_t elements = 0;
  std::size_t rank = 0;
  std::size_t loops = 0;
};

// Full decision record.  Certification requires: both hypotheses pass, the
// dual matroid realizes as a graph, the rotation framework exists, junkify
// succeeds, every face parity is even, the homology surrogate holds, and
// the framework is even; the certificate then re-verifies independently.
struct Verdict {
  Status status = Status::inconclusive;
  algebra::FieldTag field = algebra::FieldTag::gf(2);
  std::vector<StageLog> stages;

  // "certified-trivial" | "homology-surrogate-only" | "refuted-by-homology"
  std::string simple_connectivity;
  cx::H1Report h1;

  locality::LocalTwoConnectivityReport two_connectivity;
  locality::LocalityReport locality_report;
  DualSummary dual;
  std::optional<Graph> dual_graph;            // realization, when found
  std::optional<std::vector<Id>> odd_cycle;   // evenness witness (diagnostic)
  std::optional<rot::Certificate> certificate;
  std::string summary;
};

// Stage order: validate, locally-2-connected, k-local, dual-matroid,
// graph-realization, sparsity, rotation-framework, junkify, face-parity,
// h1-gate, evenness, certificate.  A refuted homology surrogate makes the
// verdict INCONCLUSIVE (later stages run best-effort as diagnostics); a
// hypothesis failure makes it HYPOTHESIS_FAILED (a non-graphic dual is then
// only noted, since non-embeddability would not follow); with hypotheses
// and homology in place a realization failure is NOT_EMBEDDABLE_DUAL_NOT_
// GRAPHIC and any later mechanical failure is an internal error.
Verdict decide(const cx::DirectedComplex& c, const Options& opt = {});

struct UnknownCorpusName : Error {
  explicit UnknownCorpusName(const std::string& msg) : Error(msg) {}
};

// Built-in instances: triangle, tetrahedron, octahedron, icosahedron,
// suspension-of-cycle(n), cone(K4|K5|Cn), book(n), torus7,
// parallel-triangles(n), two-tetrahedra-glued,
// two-triangles-sharing-a-vertex.
cx::DirectedComplex corpus(const std::string& name);
std::vector<std::string> corpus_names();  // concrete default instances

std::string report_text(const Verdict& v);
std::string report_structured(const Verdict& v);  // versioned JSON document

}  // namespace embed3::pipe
