#include <algorithm>

#include "doctest.h"
#include "embed3/errors.hpp"
#include "embed3/graph.hpp"

using namespace embed3;

namespace {

Id sid(const char* s) { return Id::of_string(s); }

Graph from_pairs(const std::vector<std::pair<const char*, const char*>>& pairs) {
  Graph g;
  std::vector<Id> vs;
  int i = 0;
  for (const auto& [u, v] : pairs) {
    vs.push_back(sid(u));
    vs.push_back(sid(v));
    g.edges.push_back({Id::of_int(i++), sid(u), sid(v)});
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  g.vertices = vs;
  g.check();
  return g;
}

Graph k4() {
  return from_pairs(
      {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
}

}  // namespace

TEST_CASE("graph label checks") {
  Graph g;
  g.vertices = {sid("a"), sid("b")};
  g.edges = {{sid("e"), sid("a"), sid("b")}, {sid("e"), sid("b"), sid("a")}};
  CHECK_THROWS_AS(g.check(), Error);
  g.edges = {{sid("e"), sid("a"), sid("z")}};
  CHECK_THROWS_AS(g.check(), Error);
  g.edges = {{sid("e"), sid("a"), sid("a")}};
  g.check();
  CHECK(g.edge(sid("e")).is_loop());
}

TEST_CASE("components and connectivity") {
  Graph g = from_pairs({{"a", "b"}, {"c", "d"}});
  g.vertices.push_back(sid("z"));
  std::vector<std::vector<Id>> comp = components(g);
  CHECK(comp.size() == 3);
  CHECK(comp[0] == std::vector<Id>{sid("a"), sid("b")});
  CHECK(comp[2] == std::vector<Id>{sid("z")});
  CHECK(!is_connected(g));
  CHECK(is_connected(k4()));
}

TEST_CASE("two-connectivity of standard shapes") {
  CHECK(two_connectivity(k4()).two_connected);

  Graph path = from_pairs({{"a", "b"}, {"b", "c"}});
  TwoConnectivityReport r = two_connectivity(path);
  CHECK(!r.two_connected);

  Graph wedge = from_pairs({{"a", "b"}, {"b", "c"}, {"a", "b2"}, {"b2", "c"},
                            {"c", "d"}, {"d", "e"}, {"c", "d2"}, {"d2", "e"}});
  TwoConnectivityReport w = two_connectivity(wedge);
  CHECK(!w.two_connected);
  CHECK(w.cut_vertex == sid("c"));

  Graph two_parallel;
  two_parallel.vertices = {sid("x"), sid("y")};
  two_parallel.edges = {{Id::of_int(0), sid("x"), sid("y")},
                        {Id::of_int(1), sid("x"), sid("y")}};
  CHECK(!two_connectivity(two_parallel).two_connected);
  TwoConnectivityOptions opt;
  opt.allow_two_vertex = true;
  CHECK(two_connectivity(two_parallel, opt).two_connected);

  Graph single_edge;
  single_edge.vertices = {sid("x"), sid("y")};
  single_edge.edges = {{Id::of_int(0), sid("x"), sid("y")}};
  CHECK(!two_connectivity(single_edge, opt).two_connected);

  Graph disconnected = from_pairs({{"a", "b"}, {"b", "c"}, {"a", "c"},
                                   {"x", "y"}, {"y", "z"}, {"x", "z"}});
  CHECK(!two_connectivity(disconnected).two_connected);
}

TEST_CASE("spanning forest, fundamental cycles, cycle space dimension") {
  Graph g = k4();
  SpanningForest f = spanning_forest(g);
  CHECK(f.tree_edges.size() == 3);
  CHECK(f.chord_edges.size() == 3);
  CHECK(cycle_space_dim(g) == 3);

  for (const Id& chord : f.chord_edges) {
    std::vector<Id> cyc = fundamental_cycle(g, f, chord);
    CHECK(std::find(cyc.begin(), cyc.end(), chord) != cyc.end());
    std::set<Id> as_set(cyc.begin(), cyc.end());
    CHECK(as_set.size() == cyc.size());
    CHECK(edge_set_is_cycle(g, as_set));
    for (const Id& e : cyc)
      if (!(e == chord))
        CHECK(std::find(f.tree_edges.begin(), f.tree_edges.end(), e) !=
              f.tree_edges.end());
  }

  Graph with_loop = k4();
  with_loop.edges.push_back({sid("loop"), sid("a"), sid("a")});
  SpanningForest f2 = spanning_forest(with_loop);
  CHECK(f2.tree_edges.size() == 3);
  CHECK(fundamental_cycle(with_loop, f2, sid("loop")) ==
        std::vector<Id>{sid("loop")});
  CHECK(cycle_space_dim(with_loop) == 4);

  Graph forest = from_pairs({{"a", "b"}, {"c", "d"}});
  CHECK(cycle_space_dim(forest) == 0);
  CHECK(spanning_forest(forest).chord_edges.empty());
}

TEST_CASE("cycle recognition on edge subsets") {
  Graph g = k4();
  CHECK(edge_set_is_cycle(g, {Id::of_int(0), Id::of_int(1), Id::of_int(3)}));
  CHECK(!edge_set_is_cycle(g, {Id::of_int(0)}));
  CHECK(!edge_set_is_cycle(g, {}));
  // Two vertex-disjoint triangles are not a single cycle.
  Graph two = from_pairs({{"a", "b"}, {"b", "c"}, {"a", "c"},
                          {"x", "y"}, {"y", "z"}, {"x", "z"}});
  std::set<Id> all;
  for (const Graph::Edge& e : two.edges) all.insert(e.id);
  CHECK(!edge_set_is_cycle(two, all));
  std::set<Id> tri = {Id::of_int(0), Id::of_int(1), Id::of_int(2)};
  CHECK(edge_set_is_cycle(two, tri));

  Graph looped;
  looped.vertices = {sid("a")};
  looped.edges = {{sid("l"), sid("a"), sid("a")}};
  CHECK(edge_set_is_cycle(looped, {sid("l")}));
}

TEST_CASE("exhaustive cycle listing") {
  CHECK(all_cycles(k4()).size() == 7);  // 4 triangles + 3 squares

  Graph theta;
  theta.vertices = {sid("x"), sid("y")};
  theta.edges = {{Id::of_int(0), sid("x"), sid("y")},
                 {Id::of_int(1), sid("x"), sid("y")},
                 {Id::of_int(2), sid("x"), sid("y")}};
  CHECK(all_cycles(theta).size() == 3);

  Graph bouquet;
  bouquet.vertices = {sid("v")};
  bouquet.edges = {{Id::of_int(0), sid("v"), sid("v")},
                   {Id::of_int(1), sid("v"), sid("v")}};
  std::vector<std::set<Id>> cycles = all_cycles(bouquet);
  CHECK(cycles.size() == 2);
  for (const std::set<Id>& c : cycles) CHECK(c.size() == 1);
}

TEST_CASE("subgraph extraction and stars") {
  Graph g = k4();
  Graph sub = subgraph_by_edges(g, {Id::of_int(0), Id::of_int(1)}, true);
  CHECK(sub.edges.size() == 2);
  CHECK(sub.vertices == std::vector<Id>{sid("a"), sid("b"), sid("c")});
  Graph kept = subgraph_by_edges(g, {Id::of_int(0)}, false);
  CHECK(kept.vertices.size() == 4);

  Graph looped = k4();
  looped.edges.push_back({sid("l"), sid("a"), sid("a")});
  std::map<Id, int> star = vertex_star(looped, sid("a"));
  CHECK(star.size() == 4);
  CHECK(star.at(sid("l")) == 2);
  CHECK(star.at(Id::of_int(0)) == 1);
}

TEST_CASE("edge-labelled isomorphism renames vertices only") {
  Graph a = from_pairs({{"u", "v"}, {"v", "w"}, {"u", "w"}});
  Graph b = from_pairs({{"x", "y"}, {"y", "z"}, {"x", "z"}});
  // Same edge ids 0,1,2; b's edge 0 joins x,y just as a's joins u,v.
  CHECK(edge_labelled_isomorphic(a, b));

  Graph c = from_pairs({{"x", "y"}, {"x", "y"}, {"x", "z"}});
  CHECK(!edge_labelled_isomorphic(a, c));

  // Different edge label sets can never match.
  Graph d = a;
  d.edges[0].id = sid("renamed");
  CHECK(!edge_labelled_isomorphic(a, d));

  // Loops versus parallels with matching labels.
  Graph loop1;
  loop1.vertices = {sid("p")};
  loop1.edges = {{Id::of_int(0), sid("p"), sid("p")}};
  Graph edge1;
  edge1.vertices = {sid("p"), sid("q")};
  edge1.edges = {{Id::of_int(0), sid("p"), sid("q")}};
  CHECK(!edge_labelled_isomorphic(loop1, edge1));
}

TEST_CASE("sort_graph orders vertices and edges by id") {
  Graph g;
  g.vertices = {sid("b"), sid("a")};
  g.edges = {{Id::of_int(2), sid("a"), sid("b")},
             {Id::of_int(1), sid("b"), sid("a")}};
  Graph s = sort_graph(g);
  CHECK(s.vertices == std::vector<Id>{sid("a"), sid("b")});
  CHECK(s.edges[0].id == Id::of_int(1));
  CHECK(s.edges[1].id == Id::of_int(2));
}
