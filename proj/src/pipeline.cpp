#include "embed3/pipeline.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "embed3/algebra.hpp"
#include "embed3/detail/jsonio.hpp"
#include "embed3/maclane.hpp"

namespace embed3::pipe {

std::string status_name(Status s) {
  switch (s) {
    case Status::embeddable_certified: return "EMBEDDABLE_CERTIFIED";
    case Status::not_embeddable_dual_not_graphic:
      return "NOT_EMBEDDABLE_DUAL_NOT_GRAPHIC";
    case Status::hypothesis_failed: return "HYPOTHESIS_FAILED";
    case Status::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

int exit_code(Status s) { return static_cast<int>(s); }

namespace {

std::string count_of(std::size_t n, const std::string& singular,
                     const std::string& plural = "") {
  if (n == 1) return "1 " + singular;
  return std::to_string(n) + " " +
         (plural.empty() ? singular + "s" : plural);
}

}  // namespace

Verdict decide(const cx::DirectedComplex& c, const Options& opt) {
  Verdict v;
  v.field = opt.field;
  auto log = [&](const std::string& stage, bool ok, const std::string& d) {
    v.stages.push_back({stage, ok, d});
  };

  log("validate", true,
      count_of(c.vertices.size(), "vertex", "vertices") + ", " +
          count_of(c.edges.size(), "edge") + ", " +
          count_of(c.faces.size(), "face") + " over " + opt.field.name());

  // Simple-connectivity surrogate, plus the bounded group heuristic that can
  // upgrade the provenance to certified.
  v.h1 = cx::h1_f2_trivial(c);
  bool connected = c.vertices.empty() || is_connected(cx::one_skeleton(c));
  bool h1_ok = v.h1.trivial && connected;
  cx::GroupReport group;
  if (h1_ok && !c.vertices.empty())
    group = cx::fundamental_group_report(c, opt.group_budget);
  if (!h1_ok)
    v.simple_connectivity = "refuted-by-homology";
  else if (group.status == cx::GroupReport::Status::certified_trivial)
    v.simple_connectivity = "certified-trivial";
  else
    v.simple_connectivity = "homology-surrogate-only";

  // Both hypotheses are always evaluated so that every witness is reported.
  v.two_connectivity = locality::is_locally_2connected(c);
  if (v.two_connectivity.locally_2connected) {
    log("locally-2-connected", true,
        "all " + count_of(c.vertices.size(), "link") + " 2-connected");
  } else {
    const Id& w = *v.two_connectivity.first_failing_vertex;
    std::string reason;
    for (const auto& row : v.two_connectivity.vertices)
      if (row.vertex == w) reason = row.reason;
    log("locally-2-connected", false,
        "link at vertex " + w.to_string() + " is not 2-connected: " + reason);
  }

  v.locality_report = locality::is_k_local(c, opt.field, opt.limits);
  if (v.locality_report.k_local) {
    log("k-local", true,
        "link bond matroid = restricted dual matroid at every vertex");
  } else {
    const Id& w = *v.locality_report.first_failing_vertex;
    std::string detail;
    for (const auto& row : v.locality_report.vertices)
      if (row.vertex == w) {
        detail = "at vertex " + w.to_string() + ": link bond rank " +
                 std::to_string(row.link_matroid_rank) +
                 ", dual restriction rank " +
                 std::to_string(row.restriction_rank);
        if (row.witness)
          detail += "; circuit {" + join_ids(*row.witness) + "} only in the " +
                    row.witness_side + " matroid";
      }
    log("k-local", false, detail);
  }

  matroid::VectorMatroid dual = matroid::dual_matroid(c, opt.field);
  v.dual.elements = dual.ground().size();
  v.dual.rank = algebra::rank_of(dual.rep);
  for (std::size_t j = 0; j < dual.rep.cols; ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < dual.rep.rows && zero; ++i)
      if (!algebra::f_is_zero(dual.rep.at(i, j))) zero = false;
    if (zero) ++v.dual.loops;
  }
  log("dual-matroid", true,
      count_of(v.dual.elements, "element") + ", rank " +
          std::to_string(v.dual.rank) + ", " +
          count_of(v.dual.loops, "loop"));

  bool hypotheses =
      v.two_connectivity.locally_2connected && v.locality_report.k_local;

  std::optional<matroid::Realization> real;
  std::string real_detail;
  try {
    real = matroid::graph_realization(dual, opt.limits);
    if (real)
      real_detail = "dual graph with " +
                    count_of(real->g.vertices.size(), "vertex", "vertices") +
                    " and " + count_of(real->g.edges.size(), "edge");
    else
      real_detail = "the dual matroid is the cycle matroid of no graph";
  } catch (const ScaleExceeded& e) {
    if (hypotheses && h1_ok) throw;
    real_detail = std::string("skipped: ") + e.what();
  }
  if (!real && !hypotheses)
    real_detail += " (no embeddability conclusion: hypotheses unmet)";
  log("graph-realization", real.has_value(), real_detail);
  if (real) v.dual_graph = real->g;

  if (!h1_ok) {
    std::string why = !connected
                          ? "the 1-skeleton is disconnected"
                          : "face boundaries span only " +
                                std::to_string(v.h1.boundary_rank) + " of " +
                                std::to_string(v.h1.cycle_dim) +
                                " cycle-space dimensions over F2";
    log("h1-gate", false, why);
    v.status = Status::inconclusive;
    v.summary = "inconclusive: the simple-connectivity surrogate is refuted (" +
                why + ")";
    // Best-effort diagnostics: an odd cycle, when one exists, explains the
    // obstruction even though no verdict follows from it here.
    if (hypotheses && real) {
      try {
        rot::RotationFramework s =
            rot::construct_rotation_framework(c, real->g);
        rot::JunkifyResult junk = rot::junkify(c, real->g, s);
        rot::EvennessReport even = rot::is_even(junk.framework);
        if (!even.even) {
          v.odd_cycle = even.witness_cycle;
          log("evenness", false,
              "odd cycle {" + join_ids(*even.witness_cycle) + "}");
        } else {
          log("evenness", true,
              "framework even, but nothing follows without the homology gate");
        }
      } catch (const Error& e) {
        log("rotation-framework", false, e.what());
      }
    }
    return v;
  }

  if (!hypotheses) {
    v.status = Status::hypothesis_failed;
    std::vector<std::string> unmet;
    if (!v.two_connectivity.locally_2connected)
      unmet.push_back(
          "local 2-connectivity (vertex " +
          v.two_connectivity.first_failing_vertex->to_string() + ")");
    if (!v.locality_report.k_local)
      unmet.push_back("k-locality (vertex " +
                      v.locality_report.first_failing_vertex->to_string() +
                      ")");
    std::string list;
    for (const std::string& u : unmet)
      list += (list.empty() ? "" : ", ") + u;
    v.summary = "hypotheses unmet: " + list;
    return v;
  }

  if (!real) {
    v.status = Status::not_embeddable_dual_not_graphic;
    v.summary =
        "not embeddable: the dual matroid is the cycle matroid of no graph";
    return v;
  }

  // From here on the hypotheses are verified, so every mechanical failure is
  // an internal error rather than a verdict.
  rot::SparsityReport sp = rot::sparsity_check(c, real->g);
  if (!sp.sparse) {
    const rot::SparsityViolation& bad = sp.violations.front();
    throw InternalCheckFailure(
        "sparsity violated under verified hypotheses: dual vertex " +
        bad.g_vertex.to_string() + ", edge " + bad.c_edge.to_string() +
        " carry " + std::to_string(bad.count) + " faces");
  }
  log("sparsity", true,
      "every (dual vertex, edge) pair carries 0 or 2 faces");

  rot::RotationFramework s;
  try {
    s = rot::construct_rotation_framework(c, real->g);
  } catch (const Error& e) {
    throw InternalCheckFailure(
        std::string("framework construction failed under verified "
                    "hypotheses: ") +
        e.what());
  }
  log("rotation-framework", true,
      "compatible plane link embeddings at " +
          count_of(c.vertices.size(), "vertex", "vertices"));

  rot::JunkifyResult junk;
  try {
    junk = rot::junkify(c, real->g, s);
  } catch (const Error& e) {
    throw InternalCheckFailure(
        std::string("junkify failed under verified hypotheses: ") + e.what());
  }
  log("junkify", true,
      count_of(junk.ledger.size(), "parallel copy", "parallel copies") +
          " added; every face-degree is now at least 3");

  for (const cx::FaceRec& f : junk.complex.faces)
    if (!rot::face_parity_check(junk.framework, f.id).even)
      throw InternalCheckFailure("face " + f.id.to_string() +
                                 " has an odd red count under verified "
                                 "hypotheses");
  log("face-parity", true,
      "all " + count_of(junk.complex.faces.size(), "face") +
          " carry an even red count");

  log("h1-gate", true,
      "face boundaries generate the cycle space over F2, so face parities "
      "propagate to all cycles");

  rot::EvennessReport even = rot::is_even(junk.framework);
  if (!even.even) {
    v.odd_cycle = even.witness_cycle;
    throw InternalCheckFailure(
        "odd cycle under verified hypotheses and trivial homology: {" +
        join_ids(*even.witness_cycle) + "}");
  }
  log("evenness", true, "every skeleton cycle carries an even red count");

  rot::Certificate cert = rot::make_certificate(opt.field, real->g, junk);
  std::string text = rot::serialize_certificate(cert);
  rot::Certificate back = rot::parse_certificate(text);
  if (rot::serialize_certificate(back) != text)
    throw InternalCheckFailure("certificate serialization is not canonical");
  rot::CertificateCheck chk = rot::verify_certificate(c, back);
  if (!chk.ok)
    throw InternalCheckFailure("certificate failed re-verification: " +
                               chk.note);
  v.certificate = cert;
  log("certificate", true,
      "serialized, parsed back, and independently re-verified");

  v.status = Status::embeddable_certified;
  v.summary = "embeddable: even rotation framework certified over " +
              opt.field.name() + " (simple connectivity: " +
              v.simple_connectivity + ")";
  return v;
}

// --- corpus -------------------------------------------------------------------

namespace {

Id sid(const std::string& s) { return Id::of_string(s); }

cx::DirectedComplex suspension_of_cycle(int n) {
  std::vector<Id> vs = {sid("p"), sid("q")};
  std::vector<Id> ring;
  for (int i = 0; i < n; ++i) ring.push_back(sid("c" + std::to_string(i)));
  vs.insert(vs.end(), ring.begin(), ring.end());
  std::vector<std::array<Id, 3>> faces;
  for (int i = 0; i < n; ++i) {
    const Id &a = ring[i], &b = ring[(i + 1) % n];
    faces.push_back({sid("p"), a, b});
    faces.push_back({sid("q"), b, a});
  }
  return cx::make_complex(vs, faces);
}

cx::DirectedComplex cone_complete(int m) {
  std::vector<Id> vs = {sid("a")};
  std::vector<Id> base;
  for (int i = 1; i <= m; ++i) base.push_back(sid("b" + std::to_string(i)));
  vs.insert(vs.end(), base.begin(), base.end());
  std::vector<std::array<Id, 3>> faces;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      faces.push_back({sid("a"), base[i], base[j]});
  return cx::make_complex(vs, faces);
}

cx::DirectedComplex cone_cycle(int n) {
  std::vector<Id> vs = {sid("a")};
  std::vector<Id> ring;
  for (int i = 0; i < n; ++i) ring.push_back(sid("c" + std::to_string(i)));
  vs.insert(vs.end(), ring.begin(), ring.end());
  std::vector<std::array<Id, 3>> faces;
  for (int i = 0; i < n; ++i)
    faces.push_back({sid("a"), ring[i], ring[(i + 1) % n]});
  return cx::make_complex(vs, faces);
}

cx::DirectedComplex book(int n) {
  std::vector<Id> vs = {sid("u"), sid("v")};
  std::vector<std::array<Id, 3>> faces;
  for (int i = 1; i <= n; ++i) {
    Id p = sid("p" + std::to_string(i));
    vs.push_back(p);
    faces.push_back({sid("u"), sid("v"), p});
  }
  return cx::make_complex(vs, faces);
}

cx::DirectedComplex octahedron() {
  std::vector<Id> vs = {sid("n"), sid("s"), sid("p1"), sid("p2"), sid("p3"),
                        sid("p4")};
  std::vector<Id> ring = {sid("p1"), sid("p2"), sid("p3"), sid("p4")};
  std::vector<std::array<Id, 3>> faces;
  for (int i = 0; i < 4; ++i) {
    const Id &a = ring[i], &b = ring[(i + 1) % 4];
    faces.push_back({sid("n"), a, b});
    faces.push_back({sid("s"), b, a});
  }
  return cx::make_complex(vs, faces);
}

cx::DirectedComplex icosahedron() {
  std::vector<Id> vs = {sid("t"), sid("b")};
  std::vector<Id> up, lo;
  for (int i = 0; i < 5; ++i) {
    up.push_back(sid("u" + std::to_string(i)));
    lo.push_back(sid("l" + std::to_string(i)));
  }
  vs.insert(vs.end(), up.begin(), up.end());
  vs.insert(vs.end(), lo.begin(), lo.end());
  std::vector<std::array<Id, 3>> faces;
  for (int i = 0; i < 5; ++i) {
    int j = (i + 1) % 5;
    faces.push_back({sid("t"), up[i], up[j]});
    faces.push_back({up[i], lo[i], up[j]});
    faces.push_back({lo[i], up[j], lo[j]});
    faces.push_back({sid("b"), lo[j], lo[i]});
  }
  return cx::make_complex(vs, faces);
}

cx::DirectedComplex torus7() {
  std::vector<Id> vs;
  for (int i = 0; i < 7; ++i) vs.push_back(Id::of_int(i));
  std::vector<std::array<Id, 3>> faces;
  for (int i = 0; i < 7; ++i) {
    faces.push_back(
        {Id::of_int(i), Id::of_int((i + 1) % 7), Id::of_int((i + 3) % 7)});
    faces.push_back(
        {Id::of_int(i), Id::of_int((i + 2) % 7), Id::of_int((i + 3) % 7)});
  }
  return cx::make_complex(vs, faces);
}

cx::DirectedComplex parallel_triangles(int n) {
  cx::RawComplex raw;
  raw.vertices = {sid("a"), sid("b"), sid("c")};
  raw.edges.push_back({sid("a-b"), sid("a"), sid("b")});
  raw.edges.push_back({sid("a-c"), sid("a"), sid("c")});
  raw.edges.push_back({sid("b-c"), sid("b"), sid("c")});
  raw.faces.push_back({sid("a-b-c"), {sid("a"), sid("b"), sid("c")}, n});
  return cx::validate(raw);
}

int parse_arg(const std::string& name, const std::string& arg, int lo,
              int hi) {
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(arg, &used);
  } catch (const std::exception&) {
    throw UnknownCorpusName("bad argument \"" + arg + "\" in " + name);
  }
  if (used != arg.size())
    throw UnknownCorpusName("bad argument \"" + arg + "\" in " + name);
  if (n < lo || n > hi)
    throw UnknownCorpusName(name + " takes an argument in [" +
                            std::to_string(lo) + ", " + std::to_string(hi) +
                            "], got " + arg);
  return n;
}

}  // namespace

cx::DirectedComplex corpus(const std::string& name) {
  std::string base = name, arg;
  std::size_t open = name.find('(');
  if (open != std::string::npos) {
    if (name.back() != ')')
      throw UnknownCorpusName("unbalanced parentheses in \"" + name + "\"");
    base = name.substr(0, open);
    arg = name.substr(open + 1, name.size() - open - 2);
  }

  if (base == "triangle" && arg.empty())
    return cx::make_complex({sid("a"), sid("b"), sid("c")},
                            {{sid("a"), sid("b"), sid("c")}});
  if (base == "tetrahedron" && arg.empty())
    return cx::make_complex({sid("a"), sid("b"), sid("c"), sid("d")},
                            {{sid("a"), sid("b"), sid("c")},
                             {sid("a"), sid("b"), sid("d")},
                             {sid("a"), sid("c"), sid("d")},
                             {sid("b"), sid("c"), sid("d")}});
  if (base == "octahedron" && arg.empty()) return octahedron();
  if (base == "icosahedron" && arg.empty()) return icosahedron();
  if (base == "suspension-of-cycle" && !arg.empty())
    return suspension_of_cycle(parse_arg(base, arg, 3, 64));
  if (base == "cone" && !arg.empty()) {
    if (arg == "K4") return cone_complete(4);
    if (arg == "K5") return cone_complete(5);
    if (arg.size() > 1 && arg[0] == 'C')
      return cone_cycle(parse_arg(base, arg.substr(1), 3, 64));
    throw UnknownCorpusName("cone takes K4, K5, or Cn, got \"" + arg + "\"");
  }
  if (base == "book" && !arg.empty())
    return book(parse_arg(base, arg, 1, 64));
  if (base == "torus7" && arg.empty()) return torus7();
  if (base == "parallel-triangles" && !arg.empty())
    return parallel_triangles(parse_arg(base, arg, 1, 64));
  if (base == "two-tetrahedra-glued" && arg.empty())
    return cx::make_complex({sid("a"), sid("b"), sid("c"), sid("d"), sid("e")},
                            {{sid("a"), sid("b"), sid("c")},
                             {sid("a"), sid("b"), sid("d")},
                             {sid("a"), sid("c"), sid("d")},
                             {sid("b"), sid("c"), sid("d")},
                             {sid("a"), sid("b"), sid("e")},
                             {sid("a"), sid("c"), sid("e")},
                             {sid("b"), sid("c"), sid("e")}});
  if (base == "two-triangles-sharing-a-vertex" && arg.empty())
    return cx::make_complex(
        {sid("x"), sid("a"), sid("b"), sid("c"), sid("d")},
        {{sid("x"), sid("a"), sid("b")}, {sid("x"), sid("c"), sid("d")}});

  std::string known;
  for (const std::string& n : corpus_names())
    known += (known.empty() ? "" : ", ") + n;
  throw UnknownCorpusName("unknown corpus name \"" + name + "\" (known: " +
                          known + ")");
}

std::vector<std::string> corpus_names() {
  return {"triangle",
          "tetrahedron",
          "octahedron",
          "icosahedron",
          "suspension-of-cycle(4)",
          "cone(K4)",
          "cone(K5)",
          "cone(C5)",
          "book(3)",
          "torus7",
          "parallel-triangles(3)",
          "two-tetrahedra-glued",
          "two-triangles-sharing-a-vertex"};
}

// --- reports ------------------------------------------------------------------

namespace {

using detail::Json;

Json graph_json(const Graph& g) {
  Json j = Json::object();
  j["vertices"] = Json::array();
  for (const Id& v : g.vertices) j["vertices"].push_back(detail::id_to_json(v));
  j["edges"] = Json::array();
  for (const Graph::Edge& e : g.edges)
    j["edges"].push_back(Json::array({detail::id_to_json(e.id),
                                      detail::id_to_json(e.u),
                                      detail::id_to_json(e.v)}));
  return j;
}

Json id_array(const std::vector<Id>& ids) {
  Json a = Json::array();
  for (const Id& x : ids) a.push_back(detail::id_to_json(x));
  return a;
}

}  // namespace

std::string report_text(const Verdict& v) {
  std::string out;
  out += "status: " + status_name(v.status) + " (exit " +
         std::to_string(exit_code(v.status)) + ")\n";
  out += "field: " + v.field.name() + "\n";
  out += "simple connectivity: " + v.simple_connectivity + "\n";
  out += "stages:\n";
  for (const StageLog& s : v.stages)
    out += std::string("  [") + (s.ok ? " ok " : "FAIL") + "] " + s.stage +
           ": " + s.detail + "\n";
  if (v.dual_graph)
    out += "dual graph: " +
           count_of(v.dual_graph->vertices.size(), "vertex", "vertices") +
           ", " + count_of(v.dual_graph->edges.size(), "edge") + "\n";
  if (v.odd_cycle) out += "odd cycle: {" + join_ids(*v.odd_cycle) + "}\n";
  if (v.certificate)
    out += "certificate: " +
           count_of(v.certificate->ledger.size(), "ledger entry",
                    "ledger entries") +
           ", " + count_of(v.certificate->colours.size(), "coloured edge") +
           "\n";
  out += "summary: " + v.summary + "\n";
  return out;
}

std::string report_structured(const Verdict& v) {
  Json j = Json::object();
  j["format"] = "embed3-report";
  j["version"] = 1;
  j["status"] = status_name(v.status);
  j["exit_code"] = exit_code(v.status);
  j["field"] = v.field.name();
  j["simple_connectivity"] = v.simple_connectivity;
  j["summary"] = v.summary;

  j["stages"] = Json::array();
  for (const StageLog& s : v.stages) {
    Json e = Json::object();
    e["stage"] = s.stage;
    e["ok"] = s.ok;
    e["detail"] = s.detail;
    j["stages"].push_back(e);
  }

  {
    Json t = Json::object();
    t["ok"] = v.two_connectivity.locally_2connected;
    t["failing"] = Json::array();
    for (const auto& row : v.two_connectivity.vertices)
      if (!row.two_connected) {
        Json e = Json::object();
        e["vertex"] = detail::id_to_json(row.vertex);
        e["reason"] = row.reason;
        if (row.cut_vertex)
          e["cut_vertex"] = detail::id_to_json(*row.cut_vertex);
        t["failing"].push_back(e);
      }
    j["two_connectivity"] = t;
  }
  {
    Json t = Json::object();
    t["ok"] = v.locality_report.k_local;
    t["failing"] = Json::array();
    for (const auto& row : v.locality_report.vertices)
      if (!row.equal) {
        Json e = Json::object();
        e["vertex"] = detail::id_to_json(row.vertex);
        e["link_bond_rank"] = row.link_matroid_rank;
        e["dual_restriction_rank"] = row.restriction_rank;
        if (row.witness) {
          e["witness_circuit"] = id_array(*row.witness);
          e["witness_side"] = row.witness_side;
        }
        t["failing"].push_back(e);
      }
    j["locality"] = t;
  }
  {
    Json d = Json::object();
    d["elements"] = v.dual.elements;
    d["rank"] = v.dual.rank;
    d["loops"] = v.dual.loops;
    j["dual_matroid"] = d;
  }
  j["dual_graph"] = v.dual_graph ? graph_json(*v.dual_graph) : Json(nullptr);
  j["odd_cycle"] = v.odd_cycle ? id_array(*v.odd_cycle) : Json(nullptr);
  j["certificate"] =
      v.certificate ? Json::parse(rot::serialize_certificate(*v.certificate))
                    : Json(nullptr);
  return detail::render_document(j);
}

}  // namespace embed3::pipe
