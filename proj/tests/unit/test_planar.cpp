#include <algorithm>

#include "doctest.h"
#include "embed3/planar.hpp"

using namespace embed3;

namespace {

Id sid(const char* s) { return Id::of_string(s); }

Graph cycle_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.vertices.push_back(Id::of_int(i));
  for (int i = 0; i < n; ++i)
    g.edges.push_back({Id::of_string("e" + std::to_string(i)), Id::of_int(i),
                       Id::of_int((i + 1) % n)});
  g.check();
  return g;
}

Graph k5() {
  Graph g;
  for (int i = 0; i < 5; ++i) g.vertices.push_back(Id::of_int(i));
  int id = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      g.edges.push_back({Id::of_string("e" + std::to_string(id++)),
                         Id::of_int(i), Id::of_int(j)});
  g.check();
  return g;
}

Graph banana(int n) {  // two vertices joined by n parallel edges
  Graph g;
  g.vertices = {sid("x"), sid("y")};
  for (int i = 0; i < n; ++i)
    g.edges.push_back({Id::of_int(i), sid("x"), sid("y")});
  g.check();
  return g;
}

planar::RotationSystem natural_rotation(const Graph& g) {
  planar::RotationSystem r;
  for (const Graph::Edge& e : g.edges) {
    r.rotators[e.u].push_back({e.id, 0});
    r.rotators[e.v].push_back({e.id, 1});
  }
  return r;
}

}  // namespace

TEST_CASE("tracing a cycle yields two faces and genus zero") {
  Graph g = cycle_graph(3);
  planar::PlaneEmbedding pe = planar::trace_faces(g, natural_rotation(g));
  CHECK(pe.faces.size() == 2);
  CHECK(pe.genus == 0);
  for (const planar::TracedFace& f : pe.faces) {
    CHECK(f.walk.size() == 3);
    CHECK(f.edge_ids() ==
          std::vector<Id>{sid("e0"), sid("e1"), sid("e2")});
  }
  // <-> the two faces traverse the cycle in opposite senses.
  CHECK(pe.faces[0].walk.size() == pe.faces[1].walk.size());
}

TEST_CASE("rotation systems are validated") {
  Graph g = cycle_graph(3);
  std::map<Id, std::vector<Id>> lists;
  lists[Id::of_int(0)] = {sid("e0"), sid("e2")};
  lists[Id::of_int(1)] = {sid("e0"), sid("e1")};
  lists[Id::of_int(2)] = {sid("e1"), sid("e2")};
  planar::RotationSystem r = planar::rotation_from_edge_lists(g, lists);
  CHECK(planar::trace_faces(g, r).genus == 0);

  lists[Id::of_int(2)] = {sid("e1")};  // missing an incident edge
  CHECK_THROWS_AS(planar::rotation_from_edge_lists(g, lists), Error);
  lists[Id::of_int(2)] = {sid("e1"), sid("e0")};  // e0 does not touch vertex 2
  CHECK_THROWS_AS(planar::rotation_from_edge_lists(g, lists), Error);

  Graph looped = cycle_graph(3);
  looped.edges.push_back({sid("l"), Id::of_int(0), Id::of_int(0)});
  CHECK_THROWS_AS(planar::rotation_from_edge_lists(looped, {}), Error);
}

TEST_CASE("loops trace with two darts") {
  Graph g;
  g.vertices = {sid("v")};
  g.edges = {{sid("l"), sid("v"), sid("v")}};
  planar::RotationSystem r;
  r.rotators[sid("v")] = {{sid("l"), 0}, {sid("l"), 1}};
  planar::PlaneEmbedding pe = planar::trace_faces(g, r);
  CHECK(pe.faces.size() == 2);
  CHECK(pe.genus == 0);
}

TEST_CASE("genus detects nonplanar rotation systems") {
  Graph g = k5();
  planar::PlaneEmbedding pe = planar::trace_faces(g, natural_rotation(g));
  CHECK(pe.genus >= 1);  // no rotation of K5 reaches genus 0
  CHECK_THROWS_AS(planar::dual_graph_of_embedding(pe), planar::NotPlanar);

  // The banana admits a planar rotation; a twisted one costs genus.
  Graph b = banana(4);
  planar::RotationSystem flat;
  flat.rotators[sid("x")] = {{Id::of_int(0), 0}, {Id::of_int(1), 0},
                             {Id::of_int(2), 0}, {Id::of_int(3), 0}};
  flat.rotators[sid("y")] = {{Id::of_int(3), 1}, {Id::of_int(2), 1},
                             {Id::of_int(1), 1}, {Id::of_int(0), 1}};
  planar::PlaneEmbedding fe = planar::trace_faces(b, flat);
  CHECK(fe.genus == 0);
  CHECK(fe.faces.size() == 4);

  planar::RotationSystem twisted = flat;
  twisted.rotators[sid("y")] = {{Id::of_int(2), 1}, {Id::of_int(3), 1},
                                {Id::of_int(1), 1}, {Id::of_int(0), 1}};
  CHECK(planar::trace_faces(b, twisted).genus > 0);
}

TEST_CASE("dual graphs of plane embeddings") {
  Graph g = cycle_graph(4);
  planar::PlaneEmbedding pe = planar::trace_faces(g, natural_rotation(g));
  planar::DualResult d = planar::dual_graph_of_embedding(pe);
  CHECK(d.dual.vertices.size() == 2);
  CHECK(d.dual.edges.size() == 4);
  for (const Graph::Edge& e : d.dual.edges) CHECK(!e.is_loop());
  for (const auto& [primal, dual] : d.edge_map) CHECK(primal == dual);

  // A tree's embedding has a single face; every dual edge is a loop.
  Graph path;
  path.vertices = {sid("a"), sid("b"), sid("c")};
  path.edges = {{sid("ab"), sid("a"), sid("b")}, {sid("bc"), sid("b"), sid("c")}};
  planar::PlaneEmbedding tp = planar::trace_faces(path, natural_rotation(path));
  CHECK(tp.faces.size() == 1);
  planar::DualResult td = planar::dual_graph_of_embedding(tp);
  CHECK(td.dual.vertices.size() == 1);
  for (const Graph::Edge& e : td.dual.edges) CHECK(e.is_loop());
}

TEST_CASE("embedding with a prescribed dual: cycles against bananas") {
  // The link of a vertex in a sphere-like complex: a 4-cycle whose
  // prescribed dual has two vertices with all four faces parallel.
  Graph link = cycle_graph(4);
  Graph dual;
  dual.vertices = {sid("in"), sid("out")};
  for (int i = 0; i < 4; ++i)
    dual.edges.push_back({Id::of_string("e" + std::to_string(i)), sid("in"),
                          sid("out")});
  dual.check();

  planar::PlaneEmbedding pe = planar::embedding_with_prescribed_dual(link, dual);
  CHECK(pe.genus == 0);
  CHECK(pe.faces.size() == 2);
  REQUIRE(pe.face_labels.size() == 2);
  std::vector<Id> labels;
  for (const std::optional<Id>& l : pe.face_labels) {
    REQUIRE(l.has_value());
    labels.push_back(*l);
  }
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<Id>{sid("in"), sid("out")});
  // Round trip: the dual of the embedding is the prescribed dual.
  planar::DualResult back = planar::dual_graph_of_embedding(pe);
  CHECK(edge_labelled_isomorphic(back.dual, dual));

  // Banana link against a cycle dual (the reverse pairing).
  Graph blink = banana(4);
  Graph bdual;
  for (int i = 0; i < 4; ++i)
    bdual.vertices.push_back(Id::of_string("f" + std::to_string(i)));
  bdual.edges = {{Id::of_int(0), sid("f0"), sid("f1")},
                 {Id::of_int(1), sid("f1"), sid("f2")},
                 {Id::of_int(2), sid("f2"), sid("f3")},
                 {Id::of_int(3), sid("f3"), sid("f0")}};
  bdual.check();
  planar::PlaneEmbedding bpe = planar::embedding_with_prescribed_dual(blink, bdual);
  CHECK(bpe.genus == 0);
  CHECK(bpe.faces.size() == 4);
  planar::DualResult bback = planar::dual_graph_of_embedding(bpe);
  CHECK(edge_labelled_isomorphic(bback.dual, bdual));
}

TEST_CASE("prescribed-dual failures carry their reason") {
  Graph link = cycle_graph(4);

  // A path dual: its stars are not cycles of the link.
  Graph path_dual;
  path_dual.vertices = {sid("p"), sid("q"), sid("r")};
  path_dual.edges = {{sid("e0"), sid("p"), sid("q")},
                     {sid("e1"), sid("q"), sid("r")},
                     {sid("e2"), sid("p"), sid("q")},
                     {sid("e3"), sid("q"), sid("r")}};
  path_dual.check();
  try {
    planar::embedding_with_prescribed_dual(link, path_dual);
    CHECK(false);
  } catch (const planar::PrescribedDualError& e) {
    CHECK((e.kind == planar::PrescribedDualError::Kind::face_set_not_cycle ||
           e.kind == planar::PrescribedDualError::Kind::dual_matroid_mismatch));
  }

  // Disconnected-link style failure: a dual on the wrong edge id set.
  Graph wrong;
  wrong.vertices = {sid("in"), sid("out")};
  wrong.edges = {{sid("zz"), sid("in"), sid("out")}};
  CHECK_THROWS_AS(planar::embedding_with_prescribed_dual(link, wrong), Error);
}

TEST_CASE("reflection reverses rotators but keeps faces and genus") {
  Graph g = cycle_graph(4);
  planar::PlaneEmbedding pe = planar::trace_faces(g, natural_rotation(g));
  planar::PlaneEmbedding re = planar::reflected(pe);
  CHECK(re.genus == pe.genus);
  CHECK(re.faces.size() == pe.faces.size());
  for (const Id& v : g.vertices) {
    std::vector<planar::Dart> fwd = pe.rotation.rotators.at(v);
    std::vector<planar::Dart> bwd = re.rotation.rotators.at(v);
    std::reverse(bwd.begin(), bwd.end());
    // Equal as cyclic sequences.
    bool same = false;
    for (std::size_t s = 0; s < fwd.size(); ++s) {
      std::rotate(bwd.begin(), bwd.begin() + 1, bwd.end());
      if (bwd == fwd) same = true;
    }
    CHECK(same);
  }
  // Face edge multisets survive reflection.
  std::vector<std::vector<Id>> before, after;
  for (const planar::TracedFace& f : pe.faces) before.push_back(f.edge_ids());
  for (const planar::TracedFace& f : re.faces) after.push_back(f.edge_ids());
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  CHECK(before == after);
}

TEST_CASE("rotator neighbors walk the cyclic order") {
  Graph g;
  g.vertices = {sid("c"), sid("a"), sid("b"), sid("d")};
  g.edges = {{sid("ca"), sid("c"), sid("a")},
             {sid("cb"), sid("c"), sid("b")},
             {sid("cd"), sid("c"), sid("d")},
             {sid("ab"), sid("a"), sid("b")},
             {sid("bd"), sid("b"), sid("d")},
             {sid("da"), sid("d"), sid("a")}};
  g.check();
  std::map<Id, std::vector<Id>> lists;
  lists[sid("c")] = {sid("ca"), sid("cb"), sid("cd")};
  lists[sid("a")] = {sid("ca"), sid("da"), sid("ab")};
  lists[sid("b")] = {sid("cb"), sid("ab"), sid("bd")};
  lists[sid("d")] = {sid("cd"), sid("bd"), sid("da")};
  planar::RotationSystem r = planar::rotation_from_edge_lists(g, lists);
  planar::PlaneEmbedding pe = planar::trace_faces(g, r);

  planar::RotatorNeighbors nb = planar::rotator_neighbors(pe, sid("c"), sid("cb"));
  CHECK(nb.before == sid("ca"));
  CHECK(nb.after == sid("cd"));
  CHECK(!nb.degenerate);

  planar::RotatorNeighbors wrap = planar::rotator_neighbors(pe, sid("c"), sid("ca"));
  CHECK(wrap.before == sid("cd"));
  CHECK(wrap.after == sid("cb"));

  CHECK_THROWS_AS(planar::rotator_neighbors(pe, sid("c"), sid("ab")),
                  planar::NotIncident);

  Graph two = cycle_graph(2);
  planar::PlaneEmbedding tp = planar::trace_faces(two, natural_rotation(two));
  planar::RotatorNeighbors deg =
      planar::rotator_neighbors(tp, Id::of_int(0), sid("e0"));
  CHECK(deg.degenerate);
  CHECK(deg.before == deg.after);
  CHECK(deg.before == sid("e1"));
}

TEST_CASE("cyclic comparison helpers") {
  std::vector<Id> a = {sid("1"), sid("2"), sid("3")};
  std::vector<Id> rot = {sid("3"), sid("1"), sid("2")};
  std::vector<Id> rev = {sid("2"), sid("1"), sid("3")};
  std::vector<Id> other = {sid("1"), sid("3"), sid("2")};
  CHECK(planar::cyclic_equal(a, a));
  CHECK(planar::cyclic_equal(a, rot));
  CHECK(!planar::cyclic_equal(a, rev));
  CHECK(planar::cyclic_reverse(a, rev));
  CHECK(planar::cyclic_reverse(a, other));
  CHECK(!planar::cyclic_reverse(a, rot));
  CHECK(!planar::cyclic_equal(a, {sid("1"), sid("2")}));

  // Short sequences are cyclically equal to their reversals.
  std::vector<Id> two = {sid("1"), sid("2")};
  CHECK(planar::cyclic_equal(two, {sid("2"), sid("1")}));
  CHECK(planar::cyclic_reverse(two, two));
}
