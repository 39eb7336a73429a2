// Acceptance suite: one line per criterion, [PASS]/[FAIL] with timing, and a
// nonzero exit when anything fails.  Each criterion throws on its first
// violated expectation.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "embed3/algebra.hpp"
#include "embed3/locality.hpp"
#include "embed3/maclane.hpp"
#include "embed3/matroid.hpp"
#include "embed3/pipeline.hpp"
#include "embed3/rotation.hpp"
#include "oracles.hpp"

using namespace embed3;
using algebra::ExactMatrix;
using algebra::FieldTag;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define EXPECT(cond)                                                       \
  do {                                                                     \
    if (!(cond))                                                           \
      throw Failure(std::string("expectation failed at ") + __FILE__ +     \
                    ":" + std::to_string(__LINE__) + ": " #cond);          \
  } while (0)

Id sid(const char* s) { return Id::of_string(s); }

std::vector<std::string> full_corpus() {
  return pipe::corpus_names();
}

Graph realized_dual(const cx::DirectedComplex& c) {
  std::optional<matroid::Realization> r =
      matroid::graph_realization(matroid::dual_matroid(c, FieldTag::gf(2)));
  EXPECT(r.has_value());
  return r->g;
}

bool hypotheses_hold(const cx::DirectedComplex& c) {
  return locality::is_locally_2connected(c).locally_2connected &&
         locality::is_k_local(c, FieldTag::gf(2)).k_local;
}

// Instances whose duals realize and whose frameworks construct, i.e. where
// the rotation/junkify machinery applies.
std::vector<std::string> framework_corpus() {
  return {"tetrahedron",          "octahedron",
          "icosahedron",          "suspension-of-cycle(5)",
          "two-tetrahedra-glued", "torus7"};
}

// --- structured graph families for the oracle criteria ------------------------

Graph graph_cycle(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.vertices.push_back(Id::of_int(i));
  for (int i = 0; i < n; ++i)
    g.edges.push_back({Id::of_string("e" + std::to_string(i)), Id::of_int(i),
                       Id::of_int((i + 1) % n)});
  g.check();
  return g;
}

Graph graph_path(int n) {
  Graph g;
  for (int i = 0; i <= n; ++i) g.vertices.push_back(Id::of_int(i));
  for (int i = 0; i < n; ++i)
    g.edges.push_back({Id::of_string("e" + std::to_string(i)), Id::of_int(i),
                       Id::of_int(i + 1)});
  g.check();
  return g;
}

Graph graph_banana(int n) {
  Graph g;
  g.vertices = {Id::of_int(0), Id::of_int(1)};
  for (int i = 0; i < n; ++i)
    g.edges.push_back({Id::of_string("e" + std::to_string(i)), Id::of_int(0),
                       Id::of_int(1)});
  g.check();
  return g;
}

Graph graph_bouquet(int n) {
  Graph g;
  g.vertices = {Id::of_int(0)};
  for (int i = 0; i < n; ++i)
    g.edges.push_back({Id::of_string("e" + std::to_string(i)), Id::of_int(0),
                       Id::of_int(0)});
  g.check();
  return g;
}

Graph graph_k4() {
  Graph g;
  for (int i = 0; i < 4; ++i) g.vertices.push_back(Id::of_int(i));
  int id = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      g.edges.push_back({Id::of_string("e" + std::to_string(id++)),
                         Id::of_int(i), Id::of_int(j)});
  g.check();
  return g;
}

Graph random_multigraph(std::mt19937& rng, int max_vertices, int max_edges) {
  std::uniform_int_distribution<int> nv(2, max_vertices);
  int n = nv(rng);
  std::uniform_int_distribution<int> ne(1, max_edges);
  int m = ne(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  Graph g;
  for (int i = 0; i < n; ++i) g.vertices.push_back(Id::of_int(i));
  for (int i = 0; i < m; ++i)
    g.edges.push_back({Id::of_string("e" + std::to_string(i)),
                       Id::of_int(pick(rng)), Id::of_int(pick(rng))});
  g.check();
  return g;
}

std::vector<Graph> small_graph_family(std::size_t max_edges, unsigned seed,
                                      int random_count) {
  std::vector<Graph> out = {graph_path(1),   graph_path(3),   graph_cycle(3),
                            graph_cycle(4),  graph_cycle(6),  graph_banana(2),
                            graph_banana(4), graph_bouquet(1), graph_bouquet(3),
                            graph_k4()};
  // A triangle with a pendant loop and a disconnected pair.
  Graph tl = graph_cycle(3);
  tl.edges.push_back({sid("loop"), Id::of_int(0), Id::of_int(0)});
  tl.check();
  out.push_back(tl);
  Graph disc = graph_cycle(3);
  disc.vertices.push_back(Id::of_int(10));
  disc.vertices.push_back(Id::of_int(11));
  disc.edges.push_back({sid("far"), Id::of_int(10), Id::of_int(11)});
  disc.check();
  out.push_back(disc);

  std::mt19937 rng(seed);
  for (int i = 0; i < random_count; ++i)
    out.push_back(random_multigraph(rng, 4, static_cast<int>(max_edges)));

  std::vector<Graph> capped;
  for (Graph& g : out)
    if (g.edges.size() <= max_edges) capped.push_back(std::move(g));
  return capped;
}

// GF(2) vertex/edge incidence matrix; its column matroid is the cycle
// matroid (loops become zero columns).
ExactMatrix cycle_representation(const Graph& g) {
  std::vector<Id> eids;
  for (const Graph::Edge& e : g.edges) eids.push_back(e.id);
  ExactMatrix inc(FieldTag::gf(2), g.vertices, eids);
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    if (g.edges[j].is_loop()) continue;
    inc.set(g.vertex_index(g.edges[j].u), j, algebra::Rat(1));
    inc.set(g.vertex_index(g.edges[j].v), j, algebra::Rat(1));
  }
  return inc;
}

void check_realization_matches_oracle(const matroid::VectorMatroid& vm) {
  matroid::Matroid m = matroid::matroid_of(vm);
  std::optional<matroid::Realization> lib = matroid::graph_realization(vm);
  std::optional<Graph> oracle = test_oracles::brute_realization(m);
  EXPECT(lib.has_value() == oracle.has_value());
  if (lib.has_value()) {
    matroid::Matroid got = matroid::matroid_of(
        matroid::GraphMatroid{lib->g, matroid::GraphMatroid::Mode::cycle});
    EXPECT(matroid::matroids_equal(m, got).equal);
    matroid::Matroid got_oracle = matroid::matroid_of(
        matroid::GraphMatroid{*oracle, matroid::GraphMatroid::Mode::cycle});
    EXPECT(matroid::matroids_equal(m, got_oracle).equal);
  }
}

// --- criterion registry --------------------------------------------------------

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string error;
  try {
    body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (error.empty()) {
    std::printf("[PASS] %2d. %s (%lld ms)\n", number, title.c_str(),
                static_cast<long long>(ms));
  } else {
    ++failures;
    std::printf("[FAIL] %2d. %s (%lld ms)\n       %s\n", number, title.c_str(),
                static_cast<long long>(ms), error.c_str());
  }
  std::fflush(stdout);
}

std::string g_cli;  // path to the command-line binary, from argv[1]

int run_cli(const std::string& args) {
  std::string cmd = g_cli + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status < 0) throw Failure("failed to launch: " + cmd);
  return WEXITSTATUS(status);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];

  criterion(1, "cone over K5: all-loop dual, hypothesis failure at the apex", [] {
    auto start = std::chrono::steady_clock::now();
    pipe::Verdict v = pipe::decide(pipe::corpus("cone(K5)"));
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    EXPECT(ms < 1000);
    EXPECT(v.status == pipe::Status::hypothesis_failed);
    bool logged = false;
    for (const pipe::StageLog& s : v.stages)
      if (s.stage == "dual-matroid" &&
          s.detail.find("10 loops") != std::string::npos)
        logged = true;
    EXPECT(logged);
    EXPECT(v.dual.loops == 10);
    EXPECT(v.dual.rank == 0);
    EXPECT(!v.locality_report.k_local);
    EXPECT(v.locality_report.first_failing_vertex == sid("a"));
    bool witnessed = false;
    for (const locality::VertexLocality& loc : v.locality_report.vertices)
      if (loc.vertex == sid("a")) {
        EXPECT(!loc.equal);
        EXPECT(loc.witness.has_value());
        witnessed = true;
      }
    EXPECT(witnessed);
  });

  criterion(2, "sphere triangulations certify with two-vertex parallel duals", [] {
    std::vector<std::string> names = {"tetrahedron", "octahedron",
                                      "icosahedron"};
    for (int n = 3; n <= 8; ++n)
      names.push_back("suspension-of-cycle(" + std::to_string(n) + ")");
    for (const std::string& name : names) {
      auto start = std::chrono::steady_clock::now();
      cx::DirectedComplex c = pipe::corpus(name);
      pipe::Verdict v = pipe::decide(c);
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      EXPECT(ms < 5000);
      EXPECT(v.status == pipe::Status::embeddable_certified);
      EXPECT(v.dual_graph.has_value());
      EXPECT(v.dual_graph->vertices.size() == 2);
      EXPECT(v.dual_graph->edges.size() == c.faces.size());
      for (const Graph::Edge& e : v.dual_graph->edges) EXPECT(!e.is_loop());
      EXPECT(v.certificate.has_value());
      rot::CertificateCheck chk = rot::verify_certificate(c, *v.certificate);
      EXPECT(chk.ok);
    }
  });

  criterion(3, "sparsity holds under the hypotheses; planted excess is caught", [] {
    for (const std::string& name : full_corpus()) {
      cx::DirectedComplex c = pipe::corpus(name);
      if (!hypotheses_hold(c)) continue;
      std::optional<matroid::Realization> r =
          matroid::graph_realization(matroid::dual_matroid(c, FieldTag::gf(2)));
      if (!r.has_value()) continue;
      rot::SparsityReport rep = rot::sparsity_check(c, r->g);
      EXPECT(rep.sparse);
      EXPECT(rep.violations.empty());
    }

    // Mutation: an extra parallel copy of one tetrahedron face makes three
    // faces meet a dual vertex along one edge.
    cx::RawComplex raw = cx::to_raw(pipe::corpus("tetrahedron"));
    for (cx::RawFace& f : raw.faces)
      if (f.id == sid("a-b-c")) f.copies = 2;
    cx::DirectedComplex mutated = cx::validate(raw);
    Graph dual;
    dual.vertices = {sid("in"), sid("out")};
    for (const cx::FaceRec& f : mutated.faces)
      dual.edges.push_back({f.id, sid("in"), sid("out")});
    dual.check();
    rot::SparsityReport bad = rot::sparsity_check(mutated, dual);
    EXPECT(!bad.sparse);
    bool found = false;
    for (const rot::SparsityViolation& viol : bad.violations)
      if (viol.count == 3) found = true;
    EXPECT(found);
  });

  criterion(4, "face parities are even after junkify, under flips and reorientations", [] {
    std::mt19937 rng(41);
    int randomized_rounds = 0;
    for (const std::string& name : framework_corpus()) {
      cx::DirectedComplex c = pipe::corpus(name);
      Graph dual = realized_dual(c);
      rot::RotationFramework s = rot::construct_rotation_framework(c, dual);
      rot::JunkifyResult j = rot::junkify(c, dual, s);
      for (const cx::FaceRec& f : j.complex.faces)
        EXPECT(rot::face_parity_check(j.framework, f.id).even);

      // Random flip storms.
      rot::RotationFramework cur = j.framework;
      for (int round = 0; round < 25; ++round) {
        const Id& v = j.complex.vertices[rng() % j.complex.vertices.size()];
        cur = rot::flip(cur, v);
        ++randomized_rounds;
        for (const cx::FaceRec& f : j.complex.faces)
          EXPECT(rot::face_parity_check(cur, f.id).even);
      }
    }

    // Random re-orientations of the host complex: reverse edges and faces,
    // rebuild, junkify, re-check.
    for (const std::string& name : {std::string("tetrahedron"),
                                    std::string("two-tetrahedra-glued")}) {
      for (int round = 0; round < 25; ++round) {
        cx::DirectedComplex c = pipe::corpus(name);
        for (int k = 0; k < 3; ++k) {
          const cx::EdgeRec& e = c.edges[rng() % c.edges.size()];
          c = cx::with_edge_reversed(c, e.id);
          const cx::FaceRec& f = c.faces[rng() % c.faces.size()];
          c = cx::with_face_reversed(c, f.id);
        }
        Graph dual = realized_dual(c);
        rot::RotationFramework s = rot::construct_rotation_framework(c, dual);
        rot::JunkifyResult j = rot::junkify(c, dual, s);
        ++randomized_rounds;
        for (const cx::FaceRec& f : j.complex.faces)
          EXPECT(rot::face_parity_check(j.framework, f.id).even);
      }
    }
    EXPECT(randomized_rounds >= 200);
  });

  criterion(5, "junkify: degrees raised to 3, dual subdivided, framework induced", [] {
    for (const std::string& name : framework_corpus()) {
      cx::DirectedComplex c = pipe::corpus(name);
      Graph dual = realized_dual(c);
      rot::RotationFramework s = rot::construct_rotation_framework(c, dual);
      rot::JunkifyResult j = rot::junkify(c, dual, s);
      EXPECT(cx::min_face_degree(j.complex) >= 3);
      EXPECT(rot::is_subdivision_of(j.g, dual));
      EXPECT(rot::induces_check(j.framework, s));
      Graph replayed = rot::replay_ledger(dual, j.ledger);
      EXPECT(replayed.vertices == j.g.vertices);
      EXPECT(replayed.edges.size() == j.g.edges.size());
    }
  });

  criterion(6, "evenness by fundamental cycles equals exhaustion; flips preserve it", [] {
    // Skeleton-level agreement on every corpus skeleton with <= 12 edges.
    std::mt19937 rng(17);
    int skeletons = 0;
    for (const std::string& name : full_corpus()) {
      cx::DirectedComplex c = pipe::corpus(name);
      Graph skel = cx::one_skeleton(c);
      if (skel.edges.size() > 12) continue;
      ++skeletons;
      for (int trial = 0; trial < 24; ++trial) {
        std::set<Id> red;
        for (const Graph::Edge& e : skel.edges)
          if (rng() % 2 == 0) red.insert(e.id);
        rot::EvennessReport fast = rot::evenness_of_colouring(skel, red);
        rot::EvennessReport slow = rot::evenness_exhaustive(skel, red);
        std::optional<std::set<Id>> oracle =
            test_oracles::odd_cycle_space_member(skel, red);
        EXPECT(fast.even == slow.even);
        EXPECT(fast.even == !oracle.has_value());
      }
    }
    EXPECT(skeletons >= 5);

    // Flip invariance: 1000 random flips never change the evenness verdict.
    int flips = 0;
    for (const std::string& name : framework_corpus()) {
      cx::DirectedComplex c = pipe::corpus(name);
      Graph dual = realized_dual(c);
      rot::RotationFramework s = rot::construct_rotation_framework(c, dual);
      rot::JunkifyResult j = rot::junkify(c, dual, s);
      bool even0 = rot::is_even(j.framework).even;
      rot::RotationFramework cur = j.framework;
      for (int round = 0; round < 170; ++round) {
        const Id& v = j.complex.vertices[rng() % j.complex.vertices.size()];
        cur = rot::flip(cur, v);
        ++flips;
        EXPECT(rot::is_even(cur).even == even0);
      }
    }
    EXPECT(flips >= 1000);
  });

  criterion(7, "graph realization agrees with the exhaustive search oracle", [] {
    auto start = std::chrono::steady_clock::now();

    for (const Graph& g : small_graph_family(6, 2026, 30)) {
      ExactMatrix rep = cycle_representation(g);
      matroid::VectorMatroid cycle_vm{rep};
      check_realization_matches_oracle(cycle_vm);
      matroid::VectorMatroid bond_vm{algebra::null_space_basis(rep)};
      check_realization_matches_oracle(bond_vm);
    }

    // U(2,4) rejected by both searches.
    ExactMatrix u24 = ExactMatrix::from_rows(
        FieldTag::gf(3), {sid("r0"), sid("r1")},
        {sid("x0"), sid("x1"), sid("x2"), sid("x3")},
        {{1, 0, 1, 1}, {0, 1, 1, 2}});
    EXPECT(!matroid::graph_realization({u24}).has_value());
    EXPECT(!test_oracles::brute_realization(
                matroid::matroid_of(matroid::VectorMatroid{u24}))
                .has_value());

    // Ten loops realize as a bouquet.
    std::vector<Id> loop_labels;
    for (int i = 0; i < 10; ++i)
      loop_labels.push_back(Id::of_string("f" + std::to_string(i)));
    ExactMatrix zeros(FieldTag::gf(2), {}, loop_labels);
    std::optional<matroid::Realization> bouquet =
        matroid::graph_realization({zeros});
    EXPECT(bouquet.has_value());
    EXPECT(bouquet->g.vertices.size() == 1);
    for (const Graph::Edge& e : bouquet->g.edges) EXPECT(e.is_loop());

    // Rank-1 parallel classes up to size 8.
    for (int n = 2; n <= 8; ++n) {
      std::vector<Id> labels;
      for (int i = 0; i < n; ++i)
        labels.push_back(Id::of_string("p" + std::to_string(i)));
      ExactMatrix ones(FieldTag::gf(2), {sid("r")}, labels);
      for (int i = 0; i < n; ++i) ones.set(0, i, algebra::Rat(1));
      matroid::VectorMatroid vm{ones};
      std::optional<matroid::Realization> r = matroid::graph_realization(vm);
      EXPECT(r.has_value());
      EXPECT(r->g.vertices.size() == 2);
      EXPECT(test_oracles::brute_realization(matroid::matroid_of(vm)).has_value());
    }

    // The bond matroid of K5 is rejected.
    Graph k5;
    for (int i = 0; i < 5; ++i) k5.vertices.push_back(Id::of_int(i));
    int id = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        k5.edges.push_back({Id::of_string("e" + std::to_string(id++)),
                            Id::of_int(i), Id::of_int(j)});
    k5.check();
    matroid::VectorMatroid k5bond{
        algebra::null_space_basis(cycle_representation(k5))};
    EXPECT(!matroid::graph_realization(k5bond).has_value());

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    EXPECT(ms < 60000);
  });

  criterion(8, "dual matroids coincide across GF(2), GF(3), GF(5), and Q", [] {
    const FieldTag fields[] = {FieldTag::gf(2), FieldTag::gf(3),
                               FieldTag::gf(5), FieldTag::rationals()};
    for (const std::string& name : full_corpus()) {
      cx::DirectedComplex c = pipe::corpus(name);
      pipe::Verdict v = pipe::decide(c);
      if (v.status != pipe::Status::embeddable_certified) continue;
      std::vector<matroid::Matroid> ms;
      for (const FieldTag& k : fields)
        ms.push_back(matroid::matroid_of(matroid::dual_matroid(c, k)));
      for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
          EXPECT(matroid::matroids_equal(ms[i], ms[j]).equal);
          std::optional<std::map<Id, Id>> iso =
              matroid::matroid_isomorphic(ms[i], ms[j]);
          EXPECT(iso.has_value());
        }
    }
  });

  criterion(9, "incidence row space and dual representation are complements", [] {
    const FieldTag fields[] = {FieldTag::gf(2), FieldTag::gf(3),
                               FieldTag::gf(5), FieldTag::rationals()};
    for (const std::string& name : full_corpus()) {
      cx::DirectedComplex c = pipe::corpus(name);
      for (const FieldTag& k : fields) {
        ExactMatrix a = cx::incidence_matrix(c, k);
        ExactMatrix n = matroid::dual_matroid(c, k).rep;
        EXPECT(n.rows + algebra::rank_of(a) == c.faces.size());
        for (std::size_t i = 0; i < a.rows; ++i)
          for (std::size_t j = 0; j < n.rows; ++j) {
            algebra::Rat dot(0);
            for (std::size_t col = 0; col < a.cols; ++col)
              dot = algebra::f_add(
                  k, dot, algebra::f_mul(k, a.at(i, col), n.at(j, col)));
            EXPECT(algebra::f_is_zero(dot));
          }
        EXPECT(algebra::row_spaces_equal(algebra::orthogonal_complement(n), a));
      }
    }
  });

  criterion(10, "sparse generating sets track realization; star round trips hold", [] {
    for (const std::string& name : full_corpus()) {
      cx::DirectedComplex c = pipe::corpus(name);
      pipe::Verdict v = pipe::decide(c);
      bool realized = false;
      for (const pipe::StageLog& s : v.stages)
        if (s.stage == "graph-realization") realized = s.ok;
      maclane::MaclaneVerdict m = maclane::maclane_check(c, FieldTag::gf(2));
      EXPECT(m.sparse_generating_set_exists == realized);
    }

    const FieldTag fields[] = {FieldTag::gf(2), FieldTag::gf(3),
                               FieldTag::rationals()};
    for (const Graph& g : small_graph_family(8, 77, 25)) {
      for (const FieldTag& k : fields) {
        maclane::SparseFamily fam = maclane::sparse_set_from_graph(g, k);
        EXPECT(maclane::is_sparse_family(fam).sparse);
        Graph back = maclane::graph_from_sparse_set(fam);
        matroid::Matroid want = matroid::matroid_of(
            matroid::GraphMatroid{g, matroid::GraphMatroid::Mode::cycle});
        matroid::Matroid got = matroid::matroid_of(
            matroid::GraphMatroid{back, matroid::GraphMatroid::Mode::cycle});
        EXPECT(matroid::matroids_equal(want, got).equal);
      }
    }
  });

  criterion(11, "negative coverage: torus inconclusive, wedge fails hypotheses", [] {
    pipe::Verdict t = pipe::decide(pipe::corpus("torus7"));
    EXPECT(t.status == pipe::Status::inconclusive);
    EXPECT(t.simple_connectivity == "refuted-by-homology");
    EXPECT(!t.h1.trivial);
    EXPECT(t.h1.boundary_rank < t.h1.cycle_dim);
    EXPECT(!t.certificate.has_value());

    pipe::Verdict w = pipe::decide(pipe::corpus("two-triangles-sharing-a-vertex"));
    EXPECT(w.status == pipe::Status::hypothesis_failed);
    EXPECT(!w.two_connectivity.locally_2connected);
    bool witnessed = false;
    for (const locality::VertexTwoConnectivity& r : w.two_connectivity.vertices)
      if (r.vertex == sid("x")) {
        EXPECT(!r.two_connected);
        EXPECT(!r.reason.empty());
        witnessed = true;
      }
    EXPECT(witnessed);
  });

  if (!g_cli.empty()) {
    criterion(12, "command-line round trip and exit codes", [] {
      namespace fs = std::filesystem;
      fs::path dir = fs::temp_directory_path() / "embed3-acceptance";
      fs::create_directories(dir);
      fs::path sphere = dir / "sphere.json";
      fs::path cone = dir / "cone.json";
      fs::path junk = dir / "junk.json";
      fs::path cert = dir / "cert.json";

      EXPECT(run_cli("corpus tetrahedron --out " + sphere.string()) == 0);
      EXPECT(run_cli("corpus 'cone(K5)' --out " + cone.string()) == 0);
      {
        std::ofstream bad(junk);
        bad << "this is not a complex\n";
      }
      EXPECT(run_cli("check " + sphere.string() + " --certificate " +
                     cert.string()) == 0);
      EXPECT(fs::exists(cert));
      EXPECT(run_cli("check " + cone.string()) == 2);
      EXPECT(run_cli("check " + junk.string()) == 10);
      EXPECT(run_cli("corpus no-such-thing") == 10);
      EXPECT(run_cli("check " + sphere.string() + " --format structured") == 0);
      EXPECT(run_cli("maclane " + sphere.string()) == 0);
      EXPECT(run_cli("matroid " + sphere.string() + " --realize") == 0);

      fs::path u24 = dir / "u24.json";
      {
        std::ofstream doc(u24);
        doc << "{\"format\": \"embed3-matrix\", \"field\": \"gf3\",\n"
               " \"row_labels\": [\"r0\", \"r1\"],\n"
               " \"col_labels\": [\"x0\", \"x1\", \"x2\", \"x3\"],\n"
               " \"entries\": [[1, 0, 1, 1], [0, 1, 1, 2]]}\n";
      }
      EXPECT(run_cli("matroid " + u24.string()) == 0);
      EXPECT(run_cli("matroid " + u24.string() + " --realize") == 1);
    });
  }

  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return 1;
}
