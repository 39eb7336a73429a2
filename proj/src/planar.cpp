#include "embed3/planar.hpp"

#include <algorithm>
#include <set>

#include "embed3/matroid.hpp"

namespace embed3::planar {

namespace {

using Arc = std::pair<Id, bool>;  // (edge, forward); forward = u -> v

Dart arrival_dart(const Arc& a) { return {a.first, a.second ? 1 : 0}; }
Dart tail_dart(const Arc& a) { return {a.first, a.second ? 0 : 1}; }

Id dart_vertex(const Graph& g, const Dart& d) {
  const Graph::Edge& e = g.edge(d.edge);
  return d.end == 0 ? e.u : e.v;
}

std::map<Id, std::vector<Dart>> incident_darts(const Graph& g) {
  std::map<Id, std::vector<Dart>> out;
  for (const Id& v : g.vertices) out[v] = {};
  for (const Graph::Edge& e : g.edges) {
    out[e.u].push_back({e.id, 0});
    out[e.v].push_back({e.id, 1});
  }
  return out;
}

}  // namespace

RotationSystem rotation_from_edge_lists(
    const Graph& g, const std::map<Id, std::vector<Id>>& lists) {
  for (const Graph::Edge& e : g.edges)
    if (e.is_loop())
      throw Error("rotation_from_edge_lists cannot place loop " +
                  e.id.to_string());
  RotationSystem r;
  for (const auto& [v, edge_ids] : lists) {
    std::vector<Dart>& rot = r.rotators[v];
    for (const Id& eid : edge_ids) {
      const Graph::Edge& e = g.edge(eid);
      if (e.u == v)
        rot.push_back({eid, 0});
      else if (e.v == v)
        rot.push_back({eid, 1});
      else
        throw Error("edge " + eid.to_string() + " is not incident with " +
                    v.to_string());
    }
  }
  // Exactness is validated by trace_faces; validate here too so a bad list
  // fails fast at construction.
  std::map<Id, std::vector<Dart>> want = incident_darts(g);
  for (auto& [v, darts] : want) {
    std::vector<Dart> have = r.rotators.count(v) ? r.rotators[v]
                                                 : std::vector<Dart>{};
    std::sort(darts.begin(), darts.end());
    std::sort(have.begin(), have.end());
    if (darts != have)
      throw Error("rotator at " + v.to_string() +
                  " does not list the incident edges exactly");
  }
  return r;
}

std::vector<Id> TracedFace::edge_ids() const {
  std::vector<Id> out;
  for (const auto& [e, fwd] : walk) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Dart>& PlaneEmbedding::rotator(const Id& vertex) const {
  auto it = rotation.rotators.find(vertex);
  if (it == rotation.rotators.end())
    throw Error("no rotator at " + vertex.to_string());
  return it->second;
}

std::vector<Id> PlaneEmbedding::rotator_edges(const Id& vertex) const {
  std::vector<Id> out;
  for (const Dart& d : rotator(vertex)) out.push_back(d.edge);
  return out;
}

PlaneEmbedding trace_faces(const Graph& g, const RotationSystem& r) {
  g.check();
  std::map<Id, std::vector<Dart>> want = incident_darts(g);
  for (const auto& [v, darts] : want) {
    if (darts.empty())
      throw Error("trace_faces: isolated vertex " + v.to_string());
    auto it = r.rotators.find(v);
    std::vector<Dart> have =
        it == r.rotators.end() ? std::vector<Dart>{} : it->second;
    std::vector<Dart> sorted_want = darts;
    std::sort(sorted_want.begin(), sorted_want.end());
    std::sort(have.begin(), have.end());
    if (sorted_want != have)
      throw Error("trace_faces: rotator at " + v.to_string() +
                  " does not match the incident darts");
  }

  std::map<Dart, Dart> successor;
  for (const auto& [v, rot] : r.rotators)
    for (std::size_t i = 0; i < rot.size(); ++i)
      successor[rot[i]] = rot[(i + 1) % rot.size()];

  std::vector<Arc> arcs;
  std::vector<Id> edge_ids;
  for (const Graph::Edge& e : g.edges) edge_ids.push_back(e.id);
  std::sort(edge_ids.begin(), edge_ids.end());
  for (const Id& e : edge_ids) {
    arcs.push_back({e, true});
    arcs.push_back({e, false});
  }

  PlaneEmbedding pe;
  pe.g = g;
  pe.rotation = r;
  std::set<Arc> used;
  for (const Arc& start : arcs) {
    if (used.count(start)) continue;
    TracedFace face;
    Arc cur = start;
    do {
      used.insert(cur);
      face.walk.push_back(cur);
      Dart dep = successor.at(arrival_dart(cur));
      cur = {dep.edge, dep.end == 0};
    } while (!(cur == start));
    pe.faces.push_back(std::move(face));
  }
  pe.face_labels.assign(pe.faces.size(), std::nullopt);

  long long v = static_cast<long long>(g.vertices.size());
  long long e = static_cast<long long>(g.edges.size());
  long long f = static_cast<long long>(pe.faces.size());
  long long c = static_cast<long long>(components(g).size());
  long long deficiency = 2 * c - (v - e + f);
  if (deficiency < 0 || deficiency % 2 != 0)
    throw InternalCheckFailure("face tracing violated the Euler relation");
  pe.genus = deficiency / 2;
  return pe;
}

namespace {

// Closed walk around a cycle edge set, starting at its smallest vertex and
// leaving through its smallest incident cycle edge.
std::vector<Arc> cycle_walk(const Graph& g, const std::set<Id>& edge_ids) {
  std::map<Id, std::vector<Id>> at;  // vertex -> incident cycle edges
  for (const Id& eid : edge_ids) {
    const Graph::Edge& e = g.edge(eid);
    at[e.u].push_back(eid);
    if (!e.is_loop()) at[e.v].push_back(eid);
  }
  for (auto& [v, list] : at) std::sort(list.begin(), list.end());
  Id start = at.begin()->first;
  std::vector<Arc> walk;
  std::set<Id> remaining = edge_ids;
  Id cur = start;
  while (!remaining.empty()) {
    std::optional<Id> next;
    for (const Id& eid : at[cur])
      if (remaining.count(eid)) {
        next = eid;
        break;
      }
    if (!next)
      throw InternalCheckFailure("cycle walk stuck at " + cur.to_string());
    const Graph::Edge& e = g.edge(*next);
    bool forward = e.u == cur;
    walk.push_back({*next, forward});
    cur = forward ? e.v : e.u;
    remaining.erase(*next);
  }
  if (!(cur == start))
    throw InternalCheckFailure("cycle walk did not close up");
  return walk;
}

std::vector<Arc> reversed_walk(const std::vector<Arc>& walk) {
  std::vector<Arc> out;
  for (auto it = walk.rbegin(); it != walk.rend(); ++it)
    out.push_back({it->first, !it->second});
  return out;
}

std::vector<Id> walk_edge_multiset(const std::vector<Arc>& walk) {
  std::vector<Id> out;
  for (const Arc& a : walk) out.push_back(a.first);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PlaneEmbedding embedding_with_prescribed_dual(const Graph& l, const Graph& gv,
                                              const PrescribedDualOptions& opt) {
  l.check();
  gv.check();
  {
    std::vector<Id> le, ge;
    for (const Graph::Edge& e : l.edges) le.push_back(e.id);
    for (const Graph::Edge& e : gv.edges) ge.push_back(e.id);
    std::sort(le.begin(), le.end());
    std::sort(ge.begin(), ge.end());
    if (le != ge)
      throw Error("prescribed dual: edge label sets of the two graphs differ");
  }

  TwoConnectivityOptions tc;
  tc.allow_two_vertex = true;
  TwoConnectivityReport conn = two_connectivity(l, tc);
  if (!conn.two_connected)
    throw PrescribedDualError(PrescribedDualError::Kind::not_two_connected,
                              "link graph is not 2-connected: " + conn.reason,
                              conn.cut_vertex);

  if (opt.verify_matroid) {
    matroid::EqualityReport eq = matroid::matroids_equal(
        matroid::matroid_of(matroid::GraphMatroid{gv, matroid::GraphMatroid::Mode::cycle}),
        matroid::matroid_of(matroid::GraphMatroid{l, matroid::GraphMatroid::Mode::bond}));
    if (!eq.equal)
      throw PrescribedDualError(
          PrescribedDualError::Kind::dual_matroid_mismatch,
          "cycle matroid of the dual graph differs from the bond matroid of "
          "the link graph at circuit " +
              join_ids(*eq.witness));
  }

  // Vertex stars of gv are the prescribed face boundaries.
  std::vector<Id> dual_vertices = gv.vertices;
  std::sort(dual_vertices.begin(), dual_vertices.end());
  std::map<Id, std::set<Id>> star;
  for (const Id& b : dual_vertices) star[b] = {};
  for (const Graph::Edge& e : gv.edges) {
    if (e.is_loop())
      throw PrescribedDualError(
          PrescribedDualError::Kind::face_set_not_cycle,
          "dual vertex " + e.u.to_string() + " carries loop " +
              e.id.to_string() + ", so its star cannot bound a face",
          e.u);
    star[e.u].insert(e.id);
    star[e.v].insert(e.id);
  }
  for (const Id& b : dual_vertices) {
    if (star[b].empty())
      throw PrescribedDualError(PrescribedDualError::Kind::face_set_not_cycle,
                                "dual vertex " + b.to_string() +
                                    " has an empty star",
                                b);
    if (!edge_set_is_cycle(l, star[b]))
      throw PrescribedDualError(PrescribedDualError::Kind::face_set_not_cycle,
                                "the star of dual vertex " + b.to_string() +
                                    " is not a cycle of the link graph",
                                b);
  }

  // Orient the prescribed faces so every edge is traversed once per
  // direction: breadth-first over shared edges, smallest dual vertex first.
  std::map<Id, std::vector<Id>> faces_of_edge;  // l-edge -> the 2 dual vertices
  for (const Id& b : dual_vertices)
    for (const Id& e : star[b]) faces_of_edge[e].push_back(b);

  std::map<Id, std::vector<Arc>> oriented;
  for (const Id& root : dual_vertices) {
    if (oriented.count(root)) continue;
    oriented[root] = cycle_walk(l, star[root]);
    std::vector<Id> queue = {root};
    while (!queue.empty()) {
      Id b = queue.front();
      queue.erase(queue.begin());
      std::map<Id, bool> direction;  // edge -> forward flag used by b
      for (const Arc& a : oriented[b]) direction[a.first] = a.second;
      for (const Id& e : star[b]) {
        for (const Id& nb : faces_of_edge[e]) {
          if (nb == b || oriented.count(nb)) continue;
          std::vector<Arc> walk = cycle_walk(l, star[nb]);
          bool nb_forward = false;
          for (const Arc& a : walk)
            if (a.first == e) nb_forward = a.second;
          if (nb_forward == direction[e]) walk = reversed_walk(walk);
          oriented[nb] = walk;
          queue.push_back(nb);
        }
      }
    }
  }

  // Consistency across every shared edge (the propagation only forced a
  // spanning tree of the face adjacency).
  for (const auto& [e, bs] : faces_of_edge) {
    if (bs.size() != 2)
      throw PrescribedDualError(
          PrescribedDualError::Kind::not_planar_assembly,
          "edge " + e.to_string() + " lies in " + std::to_string(bs.size()) +
              " prescribed faces instead of 2");
    bool d0 = false, d1 = false;
    for (const Arc& a : oriented[bs[0]])
      if (a.first == e) d0 = a.second;
    for (const Arc& a : oriented[bs[1]])
      if (a.first == e) d1 = a.second;
    if (d0 == d1)
      throw PrescribedDualError(
          PrescribedDualError::Kind::not_planar_assembly,
          "prescribed faces traverse edge " + e.to_string() +
              " in the same direction; no orientation assembles them");
  }

  // Recover the rotation system: arriving through a dart, the face walk
  // dictates the departing dart; the map must close into a single cycle at
  // every vertex.
  std::map<Id, std::map<Dart, Dart>> transitions;
  for (const Id& b : dual_vertices) {
    const std::vector<Arc>& walk = oriented[b];
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const Arc& in = walk[i];
      const Arc& out = walk[(i + 1) % walk.size()];
      Dart d_in = arrival_dart(in);
      transitions[dart_vertex(l, d_in)][d_in] = tail_dart(out);
    }
  }
  RotationSystem rot;
  for (const Id& v : l.vertices) {
    std::map<Dart, Dart>& tr = transitions[v];
    std::size_t degree = 0;
    for (const Graph::Edge& e : l.edges)
      degree += (e.u == v) + (e.v == v);
    if (tr.size() != degree)
      throw PrescribedDualError(
          PrescribedDualError::Kind::not_planar_assembly,
          "face transitions at " + v.to_string() +
              " do not cover the incident darts");
    Dart start = tr.begin()->first;
    std::vector<Dart> cycle;
    Dart cur = start;
    do {
      cycle.push_back(cur);
      auto it = tr.find(cur);
      if (it == tr.end())
        throw PrescribedDualError(
            PrescribedDualError::Kind::not_planar_assembly,
            "face transitions at " + v.to_string() + " do not close up");
      cur = it->second;
    } while (!(cur == start) && cycle.size() <= tr.size());
    if (cycle.size() != tr.size())
      throw PrescribedDualError(
          PrescribedDualError::Kind::not_planar_assembly,
          "face transitions at " + v.to_string() +
              " split into several rotator cycles");
    rot.rotators[v] = cycle;
  }

  PlaneEmbedding pe = trace_faces(l, rot);
  if (pe.genus != 0)
    throw PrescribedDualError(PrescribedDualError::Kind::not_planar_assembly,
                              "assembled rotation system has genus " +
                                  std::to_string(pe.genus));

  // The traced faces must be exactly the prescribed stars.
  std::vector<std::vector<Id>> traced_sets;
  for (const TracedFace& f : pe.faces) traced_sets.push_back(f.edge_ids());
  {
    std::vector<std::vector<Id>> want, have = traced_sets;
    for (const Id& b : dual_vertices)
      want.push_back(std::vector<Id>(star[b].begin(), star[b].end()));
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (want != have)
      throw PrescribedDualError(
          PrescribedDualError::Kind::not_planar_assembly,
          "traced faces differ from the prescribed stars");
  }

  // Label faces by dual vertices, smallest label first among equal stars.
  for (const Id& b : dual_vertices) {
    std::vector<Id> want(star[b].begin(), star[b].end());
    bool placed = false;
    for (std::size_t i = 0; i < pe.faces.size() && !placed; ++i)
      if (!pe.face_labels[i] && traced_sets[i] == want) {
        pe.face_labels[i] = b;
        placed = true;
      }
    if (!placed)
      throw InternalCheckFailure("could not label the face of dual vertex " +
                                 b.to_string());
  }
  return pe;
}

DualResult dual_graph_of_embedding(const PlaneEmbedding& pe) {
  if (pe.genus != 0)
    throw NotPlanar("embedding has genus " + std::to_string(pe.genus));
  bool all_labelled = !pe.faces.empty();
  for (const auto& lbl : pe.face_labels)
    if (!lbl) all_labelled = false;

  std::vector<Id> names(pe.faces.size());
  for (std::size_t i = 0; i < pe.faces.size(); ++i)
    names[i] = all_labelled ? *pe.face_labels[i]
                            : Id::of_string("F" + std::to_string(i));

  std::map<Arc, std::size_t> face_of_arc;
  for (std::size_t i = 0; i < pe.faces.size(); ++i)
    for (const Arc& a : pe.faces[i].walk) face_of_arc[a] = i;

  DualResult out;
  out.dual.vertices = names;
  for (const Graph::Edge& e : pe.g.edges) {
    std::size_t left = face_of_arc.at({e.id, true});
    std::size_t right = face_of_arc.at({e.id, false});
    out.dual.edges.push_back({e.id, names[left], names[right]});
    out.edge_map[e.id] = e.id;
  }
  out.dual = sort_graph(out.dual);
  return out;
}

RotatorNeighbors rotator_neighbors(const PlaneEmbedding& pe,
                                   const Id& at_vertex, const Id& pivot_edge) {
  std::vector<Id> rot = pe.rotator_edges(at_vertex);
  std::size_t hits = 0, pos = 0;
  for (std::size_t i = 0; i < rot.size(); ++i)
    if (rot[i] == pivot_edge) {
      ++hits;
      pos = i;
    }
  if (hits == 0)
    throw NotIncident("edge " + pivot_edge.to_string() +
                      " is not incident with " + at_vertex.to_string());
  if (hits > 1)
    throw Error("pivot " + pivot_edge.to_string() +
                " is a loop here; neighbors are ambiguous");
  RotatorNeighbors out;
  out.before = rot[(pos + rot.size() - 1) % rot.size()];
  out.after = rot[(pos + 1) % rot.size()];
  out.degenerate = rot.size() <= 2;
  return out;
}

PlaneEmbedding reflected(const PlaneEmbedding& pe) {
  RotationSystem rev;
  for (const auto& [v, rot] : pe.rotation.rotators)
    rev.rotators[v] = std::vector<Dart>(rot.rbegin(), rot.rend());
  PlaneEmbedding out = trace_faces(pe.g, rev);

  // Carry labels over by matching face edge multisets, smallest label first.
  std::vector<std::pair<Id, std::vector<Id>>> labelled;
  for (std::size_t i = 0; i < pe.faces.size(); ++i)
    if (pe.face_labels[i])
      labelled.push_back({*pe.face_labels[i], pe.faces[i].edge_ids()});
  std::sort(labelled.begin(), labelled.end());
  std::vector<std::vector<Id>> out_sets;
  for (const TracedFace& f : out.faces) out_sets.push_back(f.edge_ids());
  for (const auto& [label, want] : labelled) {
    bool placed = false;
    for (std::size_t i = 0; i < out.faces.size() && !placed; ++i)
      if (!out.face_labels[i] && out_sets[i] == want) {
        out.face_labels[i] = label;
        placed = true;
      }
    if (!placed)
      throw InternalCheckFailure(
          "reflection changed the face multiset; label " + label.to_string() +
          " lost its face");
  }
  return out;
}

bool cyclic_equal(const std::vector<Id>& a, const std::vector<Id>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t shift = 0; shift < a.size(); ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      ok = a[(shift + i) % a.size()] == b[i];
    if (ok) return true;
  }
  return false;
}

bool cyclic_reverse(const std::vector<Id>& a, const std::vector<Id>& b) {
  std::vector<Id> rb(b.rbegin(), b.rend());
  return cyclic_equal(a, rb);
}

}  // namespace embed3::planar
