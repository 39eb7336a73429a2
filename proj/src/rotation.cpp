#include "embed3/rotation.hpp"

#include <algorithm>
#include <set>

#include "embed3/detail/jsonio.hpp"
#include "embed3/field.hpp"
#include "embed3/locality.hpp"

namespace embed3::rot {

std::string colour_name(EdgeColour c) {
  switch (c) {
    case EdgeColour::green: return "green";
    case EdgeColour::red: return "red";
    case EdgeColour::degenerate_green: return "degenerate-green";
  }
  return "?";
}

std::vector<Id> RotationFramework::rotator_at(const Id& v, const Id& e) const {
  auto it = embeddings.find(v);
  if (it == embeddings.end())
    throw Error("no embedding at vertex " + v.to_string());
  return it->second.rotator_edges(e);
}

namespace {

// Greedy label assignment: every traced face must pick up exactly one of the
// wanted (label, edge multiset) pairs, smallest label first.
void assign_labels(planar::PlaneEmbedding& pe,
                   std::vector<std::pair<Id, std::vector<Id>>> want) {
  std::sort(want.begin(), want.end());
  if (want.size() != pe.faces.size())
    throw InternalCheckFailure("face labelling: " + std::to_string(want.size()) +
                               " labels for " + std::to_string(pe.faces.size()) +
                               " faces");
  std::vector<std::vector<Id>> sets;
  for (const planar::TracedFace& f : pe.faces) sets.push_back(f.edge_ids());
  pe.face_labels.assign(pe.faces.size(), std::nullopt);
  for (const auto& [label, multiset] : want) {
    bool placed = false;
    for (std::size_t i = 0; i < pe.faces.size() && !placed; ++i)
      if (!pe.face_labels[i] && sets[i] == multiset) {
        pe.face_labels[i] = label;
        placed = true;
      }
    if (!placed)
      throw InternalCheckFailure("face labelling: no traced face matches " +
                                 label.to_string());
  }
}

std::vector<std::pair<Id, std::vector<Id>>> star_multisets(const Graph& gv) {
  std::map<Id, std::vector<Id>> stars;
  for (const Id& b : gv.vertices) stars[b] = {};
  for (const Graph::Edge& e : gv.edges) {
    stars[e.u].push_back(e.id);
    if (!(e.u == e.v)) stars[e.v].push_back(e.id);
  }
  std::vector<std::pair<Id, std::vector<Id>>> out;
  for (auto& [b, star] : stars) {
    std::sort(star.begin(), star.end());
    out.push_back({b, star});
  }
  return out;
}

std::vector<Id> canonical_rotation(std::vector<Id> cycle) {
  if (cycle.empty()) return cycle;
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

bool graphs_identical(const Graph& a, const Graph& b) {
  Graph sa = sort_graph(a), sb = sort_graph(b);
  if (sa.vertices != sb.vertices || sa.edges.size() != sb.edges.size())
    return false;
  for (std::size_t i = 0; i < sa.edges.size(); ++i) {
    const Graph::Edge &x = sa.edges[i], &y = sb.edges[i];
    if (!(x.id == y.id)) return false;
    if (!((x.u == y.u && x.v == y.v) || (x.u == y.v && x.v == y.u)))
      return false;
  }
  return true;
}

}  // namespace

RotationFramework construct_rotation_framework(const cx::DirectedComplex& c,
                                               const Graph& g) {
  g.check();
  {
    std::vector<Id> ge, cf;
    for (const Graph::Edge& e : g.edges) ge.push_back(e.id);
    for (const cx::FaceRec& f : c.faces) cf.push_back(f.id);
    std::sort(ge.begin(), ge.end());
    std::sort(cf.begin(), cf.end());
    if (ge != cf)
      throw Error("dual graph edges are not the faces of the complex");
  }

  // The faces at every edge must form a cycle of the dual graph.
  for (const cx::EdgeRec& e : c.edges) {
    std::vector<Id> ids = c.face_ids_at_edge(e.id);
    std::set<Id> s(ids.begin(), ids.end());
    if (!edge_set_is_cycle(g, s))
      throw FrameworkError(FrameworkError::Kind::faces_at_edge_not_cycle,
                           "the faces at edge " + e.id.to_string() +
                               " do not form a cycle of the dual graph",
                           e.id);
  }

  RotationFramework s;
  s.host = c;
  s.g = sort_graph(g);
  for (const Id& v : c.vertices) {
    cx::LinkGraph link = cx::link_graph(c, v);
    Graph gv = locality::g_v(s.g, c, v, false);
    try {
      s.embeddings[v] = planar::embedding_with_prescribed_dual(link.graph, gv);
    } catch (const planar::PrescribedDualError& err) {
      throw FrameworkError(FrameworkError::Kind::prescribed_dual_failure,
                           "no embedding with the prescribed dual at vertex " +
                               v.to_string() + ": " + err.what(),
                           v);
    }
    s.flipped[v] = false;
  }
  colour_edges(s);  // asserts reverse-or-agree at every edge
  return s;
}

std::map<Id, EdgeColour> colour_edges(const RotationFramework& s) {
  std::map<Id, EdgeColour> out;
  for (const cx::EdgeRec& e : s.host.edges) {
    if (cx::face_degree(s.host, e.id) <= 2) {
      out[e.id] = EdgeColour::degenerate_green;
      continue;
    }
    std::vector<Id> a = s.rotator_at(e.u, e.id);
    std::vector<Id> b = s.rotator_at(e.v, e.id);
    if (planar::cyclic_reverse(a, b))
      out[e.id] = EdgeColour::green;
    else if (planar::cyclic_equal(a, b))
      out[e.id] = EdgeColour::red;
    else
      throw FrameworkError(FrameworkError::Kind::compatibility_violation,
                           "rotators at edge " + e.id.to_string() +
                               " neither agree nor reverse",
                           e.id);
  }
  return out;
}

RotationFramework flip(const RotationFramework& s, const Id& v) {
  if (!s.host.has_vertex(v))
    throw Error("unknown vertex " + v.to_string());
  RotationFramework out = s;
  out.embeddings[v] = planar::reflected(s.embeddings.at(v));
  out.flipped[v] = !s.flipped.at(v);
  return out;
}

SparsityReport sparsity_check(const cx::DirectedComplex& c, const Graph& g) {
  for (const cx::FaceRec& f : c.faces)
    g.edge_index(f.id);  // throws when the bijection is broken
  SparsityReport rep;
  rep.sparse = true;
  for (const Id& b : g.vertices) {
    for (const cx::EdgeRec& e : c.edges) {
      std::size_t count = 0;
      for (const Id& f : c.face_ids_at_edge(e.id)) {
        const Graph::Edge& ge = g.edge(f);
        if (ge.u == b || ge.v == b) ++count;
      }
      if (count != 0 && count != 2) {
        rep.sparse = false;
        rep.violations.push_back({b, e.id, count});
      }
    }
  }
  return rep;
}

FaceParity face_parity_check(const RotationFramework& s, const Id& f) {
  if (!s.host.face_idx.count(f))
    throw Error("unknown face " + f.to_string());
  std::size_t fi = s.host.face_idx.at(f);
  std::map<Id, EdgeColour> colours = colour_edges(s);
  FaceParity out;
  for (std::size_t side = 0; side < 3; ++side) {
    const Id& e = s.host.edges[s.host.face_edges[fi][side]].id;
    if (cx::face_degree(s.host, e) < 3)
      throw DegenerateDegrees("edge " + e.to_string() + " of face " +
                              f.to_string() + " has face-degree below 3");
    if (colours.at(e) == EdgeColour::red) ++out.red_count;
  }
  out.even = out.red_count % 2 == 0;
  return out;
}

// --- junkify ---------------------------------------------------------------------

namespace {

struct Subdivision {
  Id b_side, b_other, middle;
};

Subdivision subdivide_dual_edge(Graph& g, const Id& x, const Id& x_copy) {
  const Graph::Edge e = g.edge(x);
  if (e.is_loop())
    throw InternalCheckFailure("dual edge " + x.to_string() +
                               " is a loop; it cannot be subdivided");
  Subdivision sub;
  sub.b_side = std::min(e.u, e.v);
  sub.b_other = std::max(e.u, e.v);
  std::string base = x.to_string() + "*";
  while (g.has_vertex(Id::of_string(base))) base += "*";
  sub.middle = Id::of_string(base);

  Graph next;
  next.vertices = g.vertices;
  next.vertices.push_back(sub.middle);
  for (const Graph::Edge& ge : g.edges) {
    if (ge.id == x)
      next.edges.push_back({x, sub.middle, sub.b_other});
    else
      next.edges.push_back(ge);
  }
  next.edges.push_back({x_copy, sub.b_side, sub.middle});
  g = sort_graph(next);
  return sub;
}

// Insert the parallel copy beside x in one link embedding so that {x, copy}
// bounds a bigon cut out of the face labelled b_side.  Tries the four
// before/after placements (after/after first) and keeps the one whose
// re-trace shows exactly the expected faces.
planar::PlaneEmbedding insert_parallel_edge(
    const planar::PlaneEmbedding& old_emb, const Graph& new_link, const Id& x,
    const Id& x_copy, const Id& p, const Id& q, const Id& b_side,
    const Id& middle) {
  // Expected face multisets after the insertion.
  std::vector<std::pair<Id, std::vector<Id>>> want;
  bool side_found = false;
  for (std::size_t i = 0; i < old_emb.faces.size(); ++i) {
    if (!old_emb.face_labels[i])
      throw InternalCheckFailure("junkify needs fully labelled embeddings");
    Id label = *old_emb.face_labels[i];
    std::vector<Id> multiset = old_emb.faces[i].edge_ids();
    if (label == b_side) {
      auto it = std::find(multiset.begin(), multiset.end(), x);
      if (it == multiset.end())
        throw InternalCheckFailure("face labelled " + b_side.to_string() +
                                   " does not contain " + x.to_string());
      *it = x_copy;
      std::sort(multiset.begin(), multiset.end());
      side_found = true;
    }
    want.push_back({label, multiset});
  }
  if (!side_found)
    throw InternalCheckFailure("no face labelled " + b_side.to_string() +
                               " in the link embedding");
  {
    std::vector<Id> bigon = {x, x_copy};
    std::sort(bigon.begin(), bigon.end());
    want.push_back({middle, bigon});
  }
  std::vector<std::vector<Id>> want_sets;
  for (const auto& [label, multiset] : want) want_sets.push_back(multiset);
  std::sort(want_sets.begin(), want_sets.end());

  for (bool p_after : {true, false}) {
    for (bool q_after : {true, false}) {
      std::map<Id, std::vector<Id>> lists;
      for (const Id& u : new_link.vertices) {
        std::vector<Id> rot = old_emb.rotator_edges(u);
        if (u == p || u == q) {
          bool after = u == p ? p_after : q_after;
          auto it = std::find(rot.begin(), rot.end(), x);
          if (it == rot.end())
            throw InternalCheckFailure("rotator at " + u.to_string() +
                                       " lost edge " + x.to_string());
          rot.insert(after ? it + 1 : it, x_copy);
        }
        lists[u] = rot;
      }
      planar::PlaneEmbedding cand;
      try {
        cand = planar::trace_faces(
            new_link, planar::rotation_from_edge_lists(new_link, lists));
      } catch (const Error&) {
        continue;
      }
      if (cand.genus != 0) continue;
      std::vector<std::vector<Id>> have_sets;
      for (const planar::TracedFace& f : cand.faces)
        have_sets.push_back(f.edge_ids());
      std::sort(have_sets.begin(), have_sets.end());
      if (have_sets != want_sets) continue;
      assign_labels(cand, want);
      return cand;
    }
  }
  throw InternalCheckFailure("no insertion of " + x_copy.to_string() +
                             " beside " + x.to_string() +
                             " produces the required bigon");
}

}  // namespace

JunkifyResult junkify(const cx::DirectedComplex& c, const Graph& g,
                      const RotationFramework& s) {
  {
    std::vector<Id> a, b;
    for (const cx::FaceRec& f : c.faces) a.push_back(f.id);
    for (const cx::FaceRec& f : s.host.faces) b.push_back(f.id);
    if (a != b || c.vertices != s.host.vertices)
      throw Error("junkify: framework host differs from the given complex");
  }
  if (cx::min_face_degree(c) < 2)
    throw HypothesisFailure(
        "junkify requires every edge on at least two faces");

  JunkifyResult out;
  out.complex = c;
  out.g = sort_graph(g);
  out.framework = s;
  out.framework.g = out.g;

  for (;;) {
    std::optional<Id> pick;
    for (const cx::EdgeRec& e : out.complex.edges)
      if (cx::face_degree(out.complex, e.id) == 2) {
        pick = e.id;
        break;
      }
    if (!pick) break;

    std::vector<Id> at = out.complex.face_ids_at_edge(*pick);
    Id x = *std::min_element(at.begin(), at.end());
    const cx::FaceRec face_x = out.complex.face(x);

    std::string base = x.to_string() + "~";
    int k = 1;
    while (out.complex.face_idx.count(
        Id::of_string(base + std::to_string(k))))
      ++k;
    Id x_copy = Id::of_string(base + std::to_string(k));

    cx::RawComplex raw = cx::to_raw(out.complex);
    raw.faces.push_back({x_copy, face_x.verts, 1});
    cx::DirectedComplex next_c = cx::validate(raw);

    Subdivision sub = subdivide_dual_edge(out.g, x, x_copy);

    for (const Id& vi : face_x.verts) {
      // The two edges of face x meeting vi are the link vertices to touch.
      std::size_t fi = out.complex.face_idx.at(x);
      std::vector<Id> pq;
      for (std::size_t side = 0; side < 3; ++side) {
        const cx::EdgeRec& e =
            out.complex.edges[out.complex.face_edges[fi][side]];
        if (e.u == vi || e.v == vi) pq.push_back(e.id);
      }
      if (pq.size() != 2)
        throw InternalCheckFailure("face " + x.to_string() +
                                   " does not meet vertex " + vi.to_string() +
                                   " in exactly two edges");
      Graph new_link = cx::link_graph(next_c, vi).graph;
      out.framework.embeddings[vi] = insert_parallel_edge(
          out.framework.embeddings.at(vi), new_link, x, x_copy, pq[0], pq[1],
          sub.b_side, sub.middle);
    }

    out.complex = next_c;
    out.ledger.push_back({x, x_copy});
  }

  out.framework.host = out.complex;
  out.framework.g = out.g;

  if (cx::min_face_degree(out.complex) < 3 && !out.complex.edges.empty())
    throw InternalCheckFailure("junkify left a face-degree-2 edge behind");
  if (!graphs_identical(replay_ledger(g, out.ledger), out.g))
    throw InternalCheckFailure("ledger replay does not reproduce the "
                               "subdivided dual graph");
  colour_edges(out.framework);  // compatibility must survive
  if (!induces_check(out.framework, s))
    throw InternalCheckFailure("junkified framework does not induce its input");
  return out;
}

Graph replay_ledger(const Graph& g,
                    const std::vector<std::pair<Id, Id>>& ledger) {
  Graph cur = sort_graph(g);
  for (const auto& [x, x_copy] : ledger) subdivide_dual_edge(cur, x, x_copy);
  return cur;
}

bool is_subdivision_of(const Graph& fine, const Graph& coarse) {
  std::set<Id> coarse_vertices(coarse.vertices.begin(), coarse.vertices.end());
  for (const Id& v : coarse.vertices)
    if (!fine.has_vertex(v)) return false;

  Graph work = sort_graph(fine);
  for (;;) {
    std::optional<Id> smooth;
    for (const Id& v : work.vertices)
      if (!coarse_vertices.count(v)) {
        smooth = v;
        break;
      }
    if (!smooth) break;
    std::vector<std::size_t> incident;
    for (std::size_t i = 0; i < work.edges.size(); ++i) {
      const Graph::Edge& e = work.edges[i];
      if (e.is_loop() && e.u == *smooth) return false;
      if (e.u == *smooth || e.v == *smooth) incident.push_back(i);
    }
    if (incident.size() != 2) return false;
    const Graph::Edge& e1 = work.edges[incident[0]];
    const Graph::Edge& e2 = work.edges[incident[1]];
    Id a = e1.u == *smooth ? e1.v : e1.u;
    Id b = e2.u == *smooth ? e2.v : e2.u;
    Graph next;
    for (const Id& v : work.vertices)
      if (!(v == *smooth)) next.vertices.push_back(v);
    for (std::size_t i = 0; i < work.edges.size(); ++i)
      if (i != incident[0] && i != incident[1])
        next.edges.push_back(work.edges[i]);
    // Synthetic id for the smoothed edge; ids are not compared below.
    std::string base = e1.id.to_string() + "+";
    while (true) {
      bool taken = false;
      for (const Graph::Edge& e : next.edges)
        if (e.id == Id::of_string(base)) taken = true;
      if (!taken) break;
      base += "+";
    }
    next.edges.push_back({Id::of_string(base), a, b});
    work = sort_graph(next);
  }

  // Same vertex set and the same multiset of unordered endpoint pairs.
  std::vector<Id> wv = work.vertices, cv = coarse.vertices;
  std::sort(wv.begin(), wv.end());
  std::sort(cv.begin(), cv.end());
  if (wv != cv) return false;
  auto pairs = [](const Graph& g) {
    std::vector<std::pair<Id, Id>> out;
    for (const Graph::Edge& e : g.edges)
      out.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    std::sort(out.begin(), out.end());
    return out;
  };
  return pairs(work) == pairs(coarse);
}

// --- evenness ------------------------------------------------------------------

EvennessReport evenness_of_colouring(const Graph& skeleton,
                                     const std::set<Id>& red) {
  SpanningForest forest = spanning_forest(skeleton);
  for (const Id& chord : forest.chord_edges) {
    std::vector<Id> cycle = fundamental_cycle(skeleton, forest, chord);
    std::size_t count = 0;
    for (const Id& e : cycle) count += red.count(e);
    if (count % 2 != 0) return {false, cycle};
  }
  return {true, std::nullopt};
}

EvennessReport evenness_exhaustive(const Graph& skeleton,
                                   const std::set<Id>& red,
                                   std::size_t budget) {
  for (const std::set<Id>& cycle : all_cycles(skeleton, budget)) {
    std::size_t count = 0;
    for (const Id& e : cycle) count += red.count(e);
    if (count % 2 != 0)
      return {false, std::vector<Id>(cycle.begin(), cycle.end())};
  }
  return {true, std::nullopt};
}

EvennessReport is_even(const RotationFramework& s) {
  std::map<Id, EdgeColour> colours = colour_edges(s);
  std::set<Id> red;
  for (const auto& [e, colour] : colours)
    if (colour == EdgeColour::red) red.insert(e);
  return evenness_of_colouring(cx::one_skeleton(s.host), red);
}

bool induces_check(const RotationFramework& s_prime,
                   const RotationFramework& s) {
  if (s_prime.host.vertices != s.host.vertices)
    throw HostMismatch("vertex sets differ");
  if (s_prime.host.edges.size() != s.host.edges.size())
    throw HostMismatch("edge sets differ");
  for (std::size_t i = 0; i < s.host.edges.size(); ++i) {
    const cx::EdgeRec &a = s_prime.host.edges[i], &b = s.host.edges[i];
    if (!(a.id == b.id && a.u == b.u && a.v == b.v))
      throw HostMismatch("edge sets differ");
  }
  std::set<Id> base_faces;
  for (const cx::FaceRec& f : s.host.faces) {
    base_faces.insert(f.id);
    if (!s_prime.host.face_idx.count(f.id))
      throw HostMismatch("face " + f.id.to_string() +
                         " is missing from the extension");
    if (s_prime.host.face(f.id).verts != f.verts)
      throw HostMismatch("face " + f.id.to_string() +
                         " changed its vertex triple");
  }

  for (const Id& v : s.host.vertices) {
    for (const Id& e : s.host.edge_ids_at_vertex(v)) {
      std::vector<Id> big = s_prime.rotator_at(v, e);
      std::vector<Id> trimmed;
      for (const Id& f : big)
        if (base_faces.count(f)) trimmed.push_back(f);
      if (!planar::cyclic_equal(trimmed, s.rotator_at(v, e))) return false;
    }
  }
  return true;
}

// --- certificates ----------------------------------------------------------------

Certificate make_certificate(const algebra::FieldTag& k, const Graph& dual,
                             const JunkifyResult& junk) {
  Certificate cert;
  cert.field = k.name();
  cert.dual = sort_graph(dual);
  cert.junk_dual = sort_graph(junk.g);
  cert.ledger = junk.ledger;
  const RotationFramework& s = junk.framework;
  for (const Id& v : s.host.vertices)
    for (const Id& e : s.host.edge_ids_at_vertex(v))
      cert.rotators[v][e] = canonical_rotation(s.rotator_at(v, e));
  for (const auto& [e, colour] : colour_edges(s))
    cert.colours[e] = colour_name(colour);
  return cert;
}

namespace {

using detail::Json;

Json json_of_graph(const Graph& g) {
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

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw ParseError("graph document needs vertices and edges");
  Graph g;
  for (const Json& v : j.at("vertices"))
    g.vertices.push_back(detail::id_from_json(v));
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3)
      throw ParseError("graph edge entries are [id, u, v]");
    g.edges.push_back({detail::id_from_json(e[0]), detail::id_from_json(e[1]),
                       detail::id_from_json(e[2])});
  }
  g.check();
  return g;
}

}  // namespace

std::string serialize_certificate(const Certificate& cert) {
  Json j = Json::object();
  j["format"] = "embed3-certificate";
  j["version"] = cert.version;
  j["field"] = cert.field;
  j["dual"] = json_of_graph(cert.dual);
  j["junk_dual"] = json_of_graph(cert.junk_dual);
  j["ledger"] = Json::array();
  for (const auto& [x, x_copy] : cert.ledger)
    j["ledger"].push_back(
        Json::array({detail::id_to_json(x), detail::id_to_json(x_copy)}));
  j["rotators"] = Json::array();
  for (const auto& [v, by_edge] : cert.rotators) {
    Json entry = Json::array();
    entry.push_back(detail::id_to_json(v));
    Json edges = Json::array();
    for (const auto& [e, cycle] : by_edge) {
      Json faces = Json::array();
      for (const Id& f : canonical_rotation(cycle))
        faces.push_back(detail::id_to_json(f));
      edges.push_back(Json::array({detail::id_to_json(e), faces}));
    }
    entry.push_back(edges);
    j["rotators"].push_back(entry);
  }
  j["colours"] = Json::array();
  for (const auto& [e, name] : cert.colours)
    j["colours"].push_back(Json::array({detail::id_to_json(e), name}));
  return detail::render_document(j);
}

Certificate parse_certificate(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& err) {
    throw ParseError(std::string("certificate is not valid JSON: ") +
                     err.what());
  }
  if (!j.is_object() || j.value("format", "") != "embed3-certificate")
    throw ParseError("not an embed3-certificate document");
  Certificate cert;
  cert.version = j.value("version", 0);
  if (cert.version != 1) throw ParseError("unsupported certificate version");
  if (!j.contains("field") || !j.at("field").is_string())
    throw ParseError("certificate needs a field name");
  cert.field = j.at("field").get<std::string>();
  cert.dual = graph_from_json(j.at("dual"));
  cert.junk_dual = graph_from_json(j.at("junk_dual"));
  for (const Json& entry : j.at("ledger")) {
    if (!entry.is_array() || entry.size() != 2)
      throw ParseError("ledger entries are [face, copy]");
    cert.ledger.push_back(
        {detail::id_from_json(entry[0]), detail::id_from_json(entry[1])});
  }
  for (const Json& entry : j.at("rotators")) {
    if (!entry.is_array() || entry.size() != 2)
      throw ParseError("rotator entries are [vertex, [[edge, faces]...]]");
    Id v = detail::id_from_json(entry[0]);
    for (const Json& per_edge : entry[1]) {
      if (!per_edge.is_array() || per_edge.size() != 2)
        throw ParseError("rotator entries are [edge, faces]");
      Id e = detail::id_from_json(per_edge[0]);
      std::vector<Id> faces;
      for (const Json& f : per_edge[1])
        faces.push_back(detail::id_from_json(f));
      cert.rotators[v][e] = faces;
    }
  }
  for (const Json& entry : j.at("colours")) {
    if (!entry.is_array() || entry.size() != 2 || !entry[1].is_string())
      throw ParseError("colour entries are [edge, name]");
    cert.colours[detail::id_from_json(entry[0])] =
        entry[1].get<std::string>();
  }
  return cert;
}

namespace {

// Rebuild a framework over the given complex from stored rotators, labelling
// faces by the stars of g_v.  Throws on any inconsistency.
RotationFramework framework_from_rotators(
    const cx::DirectedComplex& c, const Graph& dual,
    const std::map<Id, std::map<Id, std::vector<Id>>>& rotators,
    const std::set<Id>* keep_faces) {
  RotationFramework s;
  s.host = c;
  s.g = sort_graph(dual);
  for (const Id& v : c.vertices) {
    auto it = rotators.find(v);
    if (it == rotators.end())
      throw Error("certificate has no rotators at vertex " + v.to_string());
    cx::LinkGraph link = cx::link_graph(c, v);
    std::map<Id, std::vector<Id>> lists;
    for (const Id& e : c.edge_ids_at_vertex(v)) {
      auto jt = it->second.find(e);
      if (jt == it->second.end())
        throw Error("certificate has no rotator at vertex " + v.to_string() +
                    ", edge " + e.to_string());
      std::vector<Id> faces;
      for (const Id& f : jt->second)
        if (!keep_faces || keep_faces->count(f)) faces.push_back(f);
      lists[e] = faces;
    }
    planar::PlaneEmbedding pe = planar::trace_faces(
        link.graph, planar::rotation_from_edge_lists(link.graph, lists));
    if (pe.genus != 0)
      throw Error("stored rotators at vertex " + v.to_string() +
                  " have genus " + std::to_string(pe.genus));
    assign_labels(pe, star_multisets(locality::g_v(s.g, c, v, false)));
    s.embeddings[v] = pe;
    s.flipped[v] = false;
  }
  return s;
}

}  // namespace

CertificateCheck verify_certificate(const cx::DirectedComplex& c,
                                    const Certificate& cert) {
  try {
    algebra::parse_field(cert.field);

    // Replay the ledger on the complex.
    cx::DirectedComplex big = c;
    for (const auto& [x, x_copy] : cert.ledger) {
      if (!big.face_idx.count(x))
        return {false, "ledger copies unknown face " + x.to_string()};
      cx::RawComplex raw = cx::to_raw(big);
      raw.faces.push_back({x_copy, big.face(x).verts, 1});
      big = cx::validate(raw);
    }

    if (!graphs_identical(replay_ledger(cert.dual, cert.ledger),
                          cert.junk_dual))
      return {false, "junk_dual is not the ledger replay of dual"};
    {
      std::vector<Id> ge, cf;
      for (const Graph::Edge& e : cert.junk_dual.edges) ge.push_back(e.id);
      for (const cx::FaceRec& f : big.faces) cf.push_back(f.id);
      std::sort(ge.begin(), ge.end());
      std::sort(cf.begin(), cf.end());
      if (ge != cf)
        return {false, "junk_dual edges differ from the extended face set"};
    }

    RotationFramework big_s =
        framework_from_rotators(big, cert.junk_dual, cert.rotators, nullptr);

    std::map<Id, EdgeColour> colours = colour_edges(big_s);
    if (colours.size() != cert.colours.size())
      return {false, "stored colours do not cover the edges"};
    for (const auto& [e, colour] : colours) {
      auto it = cert.colours.find(e);
      if (it == cert.colours.end() || it->second != colour_name(colour))
        return {false, "stored colour at edge " + e.to_string() +
                           " disagrees with the recomputed one"};
    }

    for (const cx::FaceRec& f : big.faces)
      if (!face_parity_check(big_s, f.id).even)
        return {false, "face " + f.id.to_string() + " has odd red count"};

    EvennessReport even = is_even(big_s);
    if (!even.even)
      return {false,
              "an odd cycle survives: " + join_ids(*even.witness_cycle)};

    std::set<Id> base_faces;
    for (const cx::FaceRec& f : c.faces) base_faces.insert(f.id);
    RotationFramework small_s =
        framework_from_rotators(c, cert.dual, cert.rotators, &base_faces);
    colour_edges(small_s);
    if (!induces_check(big_s, small_s))
      return {false, "extended framework does not induce the base one"};

    for (const Id& v : big.vertices) {
      planar::DualResult dr =
          planar::dual_graph_of_embedding(big_s.embeddings.at(v));
      if (!graphs_identical(dr.dual, locality::g_v(cert.junk_dual, big, v,
                                                   false)))
        return {false, "dual of the embedding at " + v.to_string() +
                           " is not the restricted dual graph"};
    }
    for (const Id& v : c.vertices) {
      planar::DualResult dr =
          planar::dual_graph_of_embedding(small_s.embeddings.at(v));
      if (!graphs_identical(dr.dual, locality::g_v(cert.dual, c, v, false)))
        return {false, "dual of the induced embedding at " + v.to_string() +
                           " is not the restricted dual graph"};
    }
    return {true, ""};
  } catch (const Error& err) {
    return {false, err.what()};
  }
}

}  // namespace embed3::rot
