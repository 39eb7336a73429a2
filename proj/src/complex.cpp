#include "embed3/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include "embed3/algebra.hpp"
#include "embed3/detail/jsonio.hpp"
#include "embed3/errors.hpp"

namespace embed3::cx {

using detail::Json;
using VK = ValidationError::Kind;

namespace {

std::pair<Id, Id> unordered_pair(const Id& a, const Id& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

std::vector<Id> DirectedComplex::face_ids_at_edge(const Id& e) const {
  std::vector<Id> out;
  for (std::size_t f : faces_at_edge[edge_idx.at(e)]) out.push_back(faces[f].id);
  return out;
}

std::vector<Id> DirectedComplex::face_ids_at_vertex(const Id& v) const {
  std::vector<Id> out;
  for (std::size_t f : faces_at_vertex[vertex_idx.at(v)])
    out.push_back(faces[f].id);
  return out;
}

std::vector<Id> DirectedComplex::edge_ids_at_vertex(const Id& v) const {
  std::vector<Id> out;
  for (std::size_t e : edges_at_vertex[vertex_idx.at(v)])
    out.push_back(edges[e].id);
  return out;
}

DirectedComplex validate(const RawComplex& raw) {
  DirectedComplex c;
  c.vertices = raw.vertices;
  std::sort(c.vertices.begin(), c.vertices.end());
  for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i)
    if (c.vertices[i] == c.vertices[i + 1])
      throw ValidationError(VK::duplicate_id, "duplicate vertex id " +
                                                  c.vertices[i].to_string());
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    c.vertex_idx[c.vertices[i]] = i;

  c.edges = raw.edges;
  std::sort(c.edges.begin(), c.edges.end(),
            [](const EdgeRec& a, const EdgeRec& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const EdgeRec& e = c.edges[i];
    if (i > 0 && c.edges[i - 1].id == e.id)
      throw ValidationError(VK::duplicate_id,
                            "duplicate edge id " + e.id.to_string());
    if (e.u == e.v)
      throw ValidationError(VK::degenerate_face,
                            "edge " + e.id.to_string() + " has equal endpoints");
    if (!c.vertex_idx.count(e.u) || !c.vertex_idx.count(e.v))
      throw ValidationError(VK::dangling_reference,
                            "edge " + e.id.to_string() +
                                " references an unknown vertex");
    auto key = unordered_pair(e.u, e.v);
    if (c.edge_by_pair.count(key))
      throw ValidationError(VK::duplicate_id,
                            "two edges join " + key.first.to_string() + " and " +
                                key.second.to_string());
    c.edge_by_pair[key] = i;
    c.edge_idx[e.id] = i;
  }

  // Expand copy counts into individual parallel faces.
  for (const RawFace& rf : raw.faces) {
    if (rf.copies < 1)
      throw ValidationError(VK::degenerate_face,
                            "face " + rf.id.to_string() +
                                " has a non-positive copy count");
    for (int k = 0; k < rf.copies; ++k) {
      FaceRec fr;
      fr.id = k == 0 ? rf.id : rf.id.derived("~" + std::to_string(k));
      fr.verts = rf.verts;
      c.faces.push_back(fr);
    }
  }
  std::sort(c.faces.begin(), c.faces.end(),
            [](const FaceRec& a, const FaceRec& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < c.faces.size(); ++i) {
    FaceRec& f = c.faces[i];
    if (i > 0 && c.faces[i - 1].id == f.id)
      throw ValidationError(VK::duplicate_id,
                            "duplicate face id " + f.id.to_string());
    if (f.verts[0] == f.verts[1] || f.verts[1] == f.verts[2] ||
        f.verts[2] == f.verts[0])
      throw ValidationError(VK::degenerate_face,
                            "face " + f.id.to_string() + " repeats a vertex");
    for (const Id& v : f.verts)
      if (!c.vertex_idx.count(v))
        throw ValidationError(VK::dangling_reference,
                              "face " + f.id.to_string() +
                                  " references unknown vertex " + v.to_string());
    c.face_idx[f.id] = i;
  }

  // Parallel faces share an unordered vertex triple; number them in id order.
  {
    std::map<std::array<Id, 3>, int> seen;
    for (FaceRec& f : c.faces) {
      std::array<Id, 3> key = f.verts;
      std::sort(key.begin(), key.end());
      f.copy_index = seen[key]++;
    }
  }

  c.face_edges.resize(c.faces.size());
  c.face_edge_signs.resize(c.faces.size());
  c.faces_at_edge.assign(c.edges.size(), {});
  c.edges_at_vertex.assign(c.vertices.size(), {});
  c.faces_at_vertex.assign(c.vertices.size(), {});
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    c.edges_at_vertex[c.vertex_idx.at(c.edges[i].u)].push_back(i);
    c.edges_at_vertex[c.vertex_idx.at(c.edges[i].v)].push_back(i);
  }
  for (std::size_t i = 0; i < c.faces.size(); ++i) {
    const FaceRec& f = c.faces[i];
    for (int s = 0; s < 3; ++s) {
      Id x = f.verts[s], y = f.verts[(s + 1) % 3];
      auto it = c.edge_by_pair.find(unordered_pair(x, y));
      if (it == c.edge_by_pair.end())
        throw ValidationError(VK::dangling_reference,
                              "face " + f.id.to_string() + " needs an edge on " +
                                  x.to_string() + "," + y.to_string());
      c.face_edges[i][s] = it->second;
      const EdgeRec& e = c.edges[it->second];
      c.face_edge_signs[i][s] = (e.u == x && e.v == y) ? 1 : -1;
      c.faces_at_edge[it->second].push_back(i);
    }
    for (const Id& v : f.verts)
      c.faces_at_vertex[c.vertex_idx.at(v)].push_back(i);
  }
  for (std::size_t i = 0; i < c.edges.size(); ++i)
    if (c.faces_at_edge[i].empty())
      throw ValidationError(VK::missing_face,
                            "edge " + c.edges[i].id.to_string() +
                                " is incident with no face");
  return c;
}

DirectedComplex make_complex(const std::vector<Id>& vertices,
                             const std::vector<std::array<Id, 3>>& faces) {
  RawComplex raw;
  raw.vertices = vertices;
  std::set<std::pair<Id, Id>> pairs;
  for (const auto& tri : faces)
    for (int s = 0; s < 3; ++s)
      pairs.insert(unordered_pair(tri[s], tri[(s + 1) % 3]));
  for (const auto& [u, v] : pairs) {
    EdgeRec e;
    e.id = Id::of_string(u.to_string() + "-" + v.to_string());
    e.u = u;
    e.v = v;
    raw.edges.push_back(e);
  }
  for (const auto& tri : faces) {
    RawFace f;
    f.id = Id::of_string(tri[0].to_string() + "-" + tri[1].to_string() + "-" +
                         tri[2].to_string());
    f.verts = tri;
    raw.faces.push_back(f);
  }
  return validate(raw);
}

// --- file format --------------------------------------------------------------

RawComplex parse_complex_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const std::exception& ex) {
    throw ParseError(std::string("complex document is not valid JSON: ") +
                     ex.what());
  }
  if (!doc.is_object()) throw ParseError("complex document must be an object");
  for (const auto& [key, value] : doc.items())
    if (key != "vertices" && key != "edges" && key != "faces")
      throw ParseError("unknown key \"" + key + "\" in complex document");
  if (!doc.contains("vertices") || !doc.contains("edges") ||
      !doc.contains("faces"))
    throw ParseError("complex document needs vertices, edges, and faces");

  RawComplex raw;
  if (!doc["vertices"].is_array()) throw ParseError("vertices must be an array");
  for (const Json& j : doc["vertices"])
    raw.vertices.push_back(detail::id_from_json(j));
  if (!doc["edges"].is_array()) throw ParseError("edges must be an array");
  for (const Json& j : doc["edges"]) {
    if (!j.is_array() || j.size() != 3)
      throw ParseError("each edge must be [id, tail, head]");
    EdgeRec e;
    e.id = detail::id_from_json(j[0]);
    e.u = detail::id_from_json(j[1]);
    e.v = detail::id_from_json(j[2]);
    raw.edges.push_back(e);
  }
  if (!doc["faces"].is_array()) throw ParseError("faces must be an array");
  for (const Json& j : doc["faces"]) {
    if (!j.is_array() || (j.size() != 4 && j.size() != 5))
      throw ParseError("each face must be [id, a, b, c] or [id, a, b, c, copies]");
    RawFace f;
    f.id = detail::id_from_json(j[0]);
    for (int s = 0; s < 3; ++s) f.verts[s] = detail::id_from_json(j[1 + s]);
    if (j.size() == 5) {
      if (!j[4].is_number_integer())
        throw ParseError("face copy count must be an integer");
      long long copies = j[4].get<long long>();
      if (copies < 1 || copies > 1 << 16)
        throw ParseError("face copy count out of range");
      f.copies = static_cast<int>(copies);
    }
    raw.faces.push_back(f);
  }
  return raw;
}

DirectedComplex read_complex(const std::string& text) {
  return validate(parse_complex_text(text));
}

Json complex_to_json(const DirectedComplex& c) {
  Json doc = Json::object();
  doc["vertices"] = Json::array();
  for (const Id& v : c.vertices) doc["vertices"].push_back(detail::id_to_json(v));
  doc["edges"] = Json::array();
  for (const EdgeRec& e : c.edges)
    doc["edges"].push_back(Json::array(
        {detail::id_to_json(e.id), detail::id_to_json(e.u), detail::id_to_json(e.v)}));
  doc["faces"] = Json::array();
  for (const FaceRec& f : c.faces)
    doc["faces"].push_back(
        Json::array({detail::id_to_json(f.id), detail::id_to_json(f.verts[0]),
                     detail::id_to_json(f.verts[1]), detail::id_to_json(f.verts[2])}));
  return doc;
}

std::string serialize_complex(const DirectedComplex& c) {
  return detail::render_document(complex_to_json(c));
}

// --- local structure ----------------------------------------------------------

LinkGraph link_graph(const DirectedComplex& c, const Id& v) {
  LinkGraph link;
  link.host = v;
  std::size_t vi = c.vertex_idx.at(v);
  for (std::size_t e : c.edges_at_vertex[vi])
    link.graph.vertices.push_back(c.edges[e].id);
  for (std::size_t fi : c.faces_at_vertex[vi]) {
    const FaceRec& f = c.faces[fi];
    // The two sides of f meeting v become the link edge's endpoints.
    std::vector<Id> ends;
    for (int s = 0; s < 3; ++s) {
      const EdgeRec& e = c.edges[c.face_edges[fi][s]];
      if (e.u == v || e.v == v) ends.push_back(e.id);
    }
    Graph::Edge le;
    le.id = f.id;
    le.u = ends[0];
    le.v = ends[1];
    link.graph.edges.push_back(le);
  }
  return link;
}

std::size_t face_degree(const DirectedComplex& c, const Id& e) {
  return c.faces_at_edge[c.edge_idx.at(e)].size();
}

std::size_t min_face_degree(const DirectedComplex& c) {
  std::size_t best = static_cast<std::size_t>(-1);
  for (const auto& list : c.faces_at_edge) best = std::min(best, list.size());
  return c.edges.empty() ? 0 : best;
}

Graph one_skeleton(const DirectedComplex& c) {
  Graph g;
  g.vertices = c.vertices;
  for (const EdgeRec& e : c.edges) g.edges.push_back({e.id, e.u, e.v});
  return g;
}

algebra::ExactMatrix incidence_matrix(const DirectedComplex& c,
                                      const algebra::FieldTag& k) {
  std::vector<Id> rlab, clab;
  for (const EdgeRec& e : c.edges) rlab.push_back(e.id);
  for (const FaceRec& f : c.faces) clab.push_back(f.id);
  algebra::ExactMatrix m(k, rlab, clab);
  for (std::size_t fi = 0; fi < c.faces.size(); ++fi)
    for (int s = 0; s < 3; ++s)
      m.at(c.face_edges[fi][s], fi) =
          f_norm(k, algebra::Rat(c.face_edge_signs[fi][s]));
  return m;
}

// --- simple connectivity surrogates -------------------------------------------

H1Report h1_f2_trivial(const DirectedComplex& c) {
  H1Report rep;
  rep.boundary_rank =
      algebra::rank_of(incidence_matrix(c, algebra::FieldTag::gf(2)));
  rep.cycle_dim = cycle_space_dim(one_skeleton(c));
  rep.trivial = rep.boundary_rank == rep.cycle_dim;
  return rep;
}

namespace {

using Letter = std::pair<Id, int>;  // generator id, exponent sign
using Word = std::vector<Letter>;

void free_cyclic_reduce(Word& w) {
  bool changed = true;
  while (changed) {
    changed = false;
    Word out;
    for (const Letter& l : w) {
      if (!out.empty() && out.back().first == l.first &&
          out.back().second == -l.second) {
        out.pop_back();
        changed = true;
      } else {
        out.push_back(l);
      }
    }
    while (out.size() >= 2 && out.front().first == out.back().first &&
           out.front().second == -out.back().second) {
      out.erase(out.begin());
      out.pop_back();
      changed = true;
    }
    w = std::move(out);
  }
}

}  // namespace

GroupReport fundamental_group_report(const DirectedComplex& c,
                                     std::size_t budget) {
  Graph skeleton = one_skeleton(c);
  if (components(skeleton).size() > 1)
    throw Error("fundamental_group_report requires a connected 1-skeleton");

  SpanningForest forest = spanning_forest(skeleton);
  std::set<Id> tree(forest.tree_edges.begin(), forest.tree_edges.end());
  std::set<Id> generators(forest.chord_edges.begin(), forest.chord_edges.end());

  std::vector<Word> relators;
  for (std::size_t fi = 0; fi < c.faces.size(); ++fi) {
    Word w;
    for (int s = 0; s < 3; ++s) {
      const EdgeRec& e = c.edges[c.face_edges[fi][s]];
      if (tree.count(e.id)) continue;
      w.push_back({e.id, c.face_edge_signs[fi][s]});
    }
    relators.push_back(std::move(w));
  }

  GroupReport rep;
  bool progress = true;
  while (progress && rep.steps < budget) {
    progress = false;
    for (Word& w : relators) free_cyclic_reduce(w);
    relators.erase(std::remove_if(relators.begin(), relators.end(),
                                  [](const Word& w) { return w.empty(); }),
                   relators.end());
    // A length-1 relator kills its generator outright; a length-2 relator on
    // two distinct generators expresses one through the other.
    for (std::size_t i = 0; i < relators.size() && !progress; ++i) {
      const Word& w = relators[i];
      if (w.size() == 1) {
        Id g = w[0].first;
        for (Word& other : relators)
          other.erase(std::remove_if(other.begin(), other.end(),
                                     [&](const Letter& l) { return l.first == g; }),
                      other.end());
        generators.erase(g);
        ++rep.steps;
        progress = true;
      } else if (w.size() == 2 && !(w[0].first == w[1].first)) {
        Id g = w[0].first, h = w[1].first;
        int rel = -w[0].second * w[1].second;  // g = h^rel
        for (Word& other : relators) {
          Word out;
          for (const Letter& l : other) {
            if (l.first == g)
              out.push_back({h, l.second * rel});
            else
              out.push_back(l);
          }
          other = std::move(out);
        }
        generators.erase(g);
        ++rep.steps;
        progress = true;
      }
    }
  }
  rep.generators_left = generators.size();
  rep.relators_left = relators.size();
  if (generators.empty()) {
    rep.status = GroupReport::Status::certified_trivial;
    rep.note = "presentation collapsed to the trivial group";
  } else {
    rep.status = GroupReport::Status::unknown;
    rep.note = rep.steps >= budget ? "simplification budget exhausted"
                                   : "presentation did not collapse";
  }
  return rep;
}

// --- reorientation helpers ------------------------------------------------------

RawComplex to_raw(const DirectedComplex& c) {
  RawComplex raw;
  raw.vertices = c.vertices;
  raw.edges = c.edges;
  for (const FaceRec& f : c.faces) raw.faces.push_back({f.id, f.verts, 1});
  return raw;
}

DirectedComplex with_edge_reversed(const DirectedComplex& c, const Id& e) {
  RawComplex raw = to_raw(c);
  for (EdgeRec& rec : raw.edges)
    if (rec.id == e) std::swap(rec.u, rec.v);
  return validate(raw);
}

DirectedComplex with_face_reversed(const DirectedComplex& c, const Id& f) {
  RawComplex raw = to_raw(c);
  for (RawFace& rec : raw.faces)
    if (rec.id == f) std::swap(rec.verts[1], rec.verts[2]);
  return validate(raw);
}

}  // namespace embed3::cx
