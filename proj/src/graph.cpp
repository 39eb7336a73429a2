#include "embed3/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "embed3/errors.hpp"

namespace embed3 {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

std::map<Id, std::size_t> index_of(const std::vector<Id>& ids) {
  std::map<Id, std::size_t> m;
  for (std::size_t i = 0; i < ids.size(); ++i) m[ids[i]] = i;
  return m;
}

}  // namespace

bool Graph::has_vertex(const Id& v) const {
  for (const Id& x : vertices)
    if (x == v) return true;
  return false;
}

std::size_t Graph::vertex_index(const Id& v) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) return i;
  throw Error("graph has no vertex " + v.to_string());
}

std::size_t Graph::edge_index(const Id& e) const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].id == e) return i;
  throw Error("graph has no edge " + e.to_string());
}

void Graph::check() const {
  std::set<Id> vs(vertices.begin(), vertices.end());
  if (vs.size() != vertices.size()) throw Error("duplicate graph vertex id");
  std::set<Id> es;
  for (const Edge& e : edges) {
    if (!es.insert(e.id).second)
      throw Error("duplicate graph edge id " + e.id.to_string());
    if (!vs.count(e.u) || !vs.count(e.v))
      throw Error("edge " + e.id.to_string() + " references unknown vertex");
  }
}

Graph sort_graph(Graph g) {
  std::sort(g.vertices.begin(), g.vertices.end());
  std::sort(g.edges.begin(), g.edges.end(),
            [](const Graph::Edge& a, const Graph::Edge& b) { return a.id < b.id; });
  return g;
}

std::vector<std::vector<Id>> components(const Graph& g) {
  auto vidx = index_of(g.vertices);
  UnionFind uf(g.vertices.size());
  for (const Graph::Edge& e : g.edges) uf.unite(vidx.at(e.u), vidx.at(e.v));
  std::map<std::size_t, std::vector<Id>> buckets;
  std::vector<Id> sorted = g.vertices;
  std::sort(sorted.begin(), sorted.end());
  for (const Id& v : sorted) buckets[uf.find(vidx.at(v))].push_back(v);
  std::vector<std::vector<Id>> out;
  for (auto& [root, vs] : buckets) out.push_back(std::move(vs));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

TwoConnectivityReport two_connectivity(const Graph& g,
                                       const TwoConnectivityOptions& opt) {
  TwoConnectivityReport rep;
  const std::size_t n = g.vertices.size();
  if (n < 2) {
    rep.reason = n == 0 ? "empty graph" : "single vertex";
    return rep;
  }
  if (n == 2) {
    std::size_t links = 0;
    for (const Graph::Edge& e : g.edges)
      if (!e.is_loop()) ++links;
    if (opt.allow_two_vertex && links >= 2) {
      rep.two_connected = true;
      return rep;
    }
    rep.reason = opt.allow_two_vertex
                     ? "two vertices joined by fewer than two edges"
                     : "only two vertices";
    return rep;
  }
  if (!is_connected(g)) {
    rep.reason = "disconnected";
    return rep;
  }
  for (const Id& v : g.vertices) {
    Graph h;
    for (const Id& w : g.vertices)
      if (!(w == v)) h.vertices.push_back(w);
    for (const Graph::Edge& e : g.edges)
      if (!(e.u == v) && !(e.v == v)) h.edges.push_back(e);
    if (!is_connected(h)) {
      rep.reason = "cut vertex " + v.to_string();
      rep.cut_vertex = v;
      return rep;
    }
  }
  rep.two_connected = true;
  return rep;
}

SpanningForest spanning_forest(const Graph& g) {
  auto vidx = index_of(g.vertices);
  UnionFind uf(g.vertices.size());
  SpanningForest f;
  std::vector<const Graph::Edge*> sorted;
  for (const Graph::Edge& e : g.edges) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(),
            [](const Graph::Edge* a, const Graph::Edge* b) { return a->id < b->id; });
  for (const Graph::Edge* e : sorted) {
    if (!e->is_loop() && uf.unite(vidx.at(e->u), vidx.at(e->v)))
      f.tree_edges.push_back(e->id);
    else
      f.chord_edges.push_back(e->id);
  }
  return f;
}

std::vector<Id> fundamental_cycle(const Graph& g, const SpanningForest& f,
                                  const Id& chord) {
  const Graph::Edge& ce = g.edge(chord);
  for (const Id& t : f.tree_edges)
    if (t == chord) throw Error("fundamental_cycle: chord is a tree edge");
  if (ce.is_loop()) return {chord};
  // BFS in the forest from ce.u to ce.v.
  std::set<Id> tree(f.tree_edges.begin(), f.tree_edges.end());
  std::map<Id, std::vector<std::pair<Id, Id>>> adj;  // v -> (edge id, other)
  for (const Graph::Edge& e : g.edges)
    if (tree.count(e.id)) {
      adj[e.u].push_back({e.id, e.v});
      adj[e.v].push_back({e.id, e.u});
    }
  std::map<Id, std::pair<Id, Id>> from;  // vertex -> (edge used, previous)
  std::deque<Id> queue{ce.u};
  std::set<Id> seen{ce.u};
  while (!queue.empty()) {
    Id cur = queue.front();
    queue.pop_front();
    if (cur == ce.v) break;
    for (const auto& [eid, other] : adj[cur])
      if (seen.insert(other).second) {
        from[other] = {eid, cur};
        queue.push_back(other);
      }
  }
  if (!seen.count(ce.v))
    throw Error("fundamental_cycle: chord endpoints lie in different trees");
  std::vector<Id> cycle{chord};
  Id cur = ce.v;
  while (!(cur == ce.u)) {
    auto [eid, prev] = from.at(cur);
    cycle.push_back(eid);
    cur = prev;
  }
  return cycle;
}

std::size_t cycle_space_dim(const Graph& g) {
  return g.edges.size() + components(g).size() - g.vertices.size();
}

bool edge_set_is_cycle(const Graph& g, const std::set<Id>& edge_ids) {
  if (edge_ids.empty()) return false;
  std::map<Id, int> degree;
  std::vector<Graph::Edge> picked;
  for (const Id& eid : edge_ids) {
    const Graph::Edge& e = g.edge(eid);
    picked.push_back(e);
    degree[e.u] += 1;
    degree[e.v] += 1;  // loops contribute 2 to their vertex
  }
  for (const auto& [v, d] : degree)
    if (d != 2) return false;
  Graph sub;
  for (const auto& [v, d] : degree) sub.vertices.push_back(v);
  sub.edges = picked;
  return is_connected(sub);
}

std::vector<std::set<Id>> all_cycles(const Graph& g, std::size_t budget) {
  std::set<std::set<Id>> found;
  auto sorted_vertices = g.vertices;
  std::sort(sorted_vertices.begin(), sorted_vertices.end());
  std::map<Id, std::vector<const Graph::Edge*>> adj;
  for (const Graph::Edge& e : g.edges) {
    adj[e.u].push_back(&e);
    if (!e.is_loop()) adj[e.v].push_back(&e);
  }
  for (auto& [v, list] : adj)
    std::sort(list.begin(), list.end(),
              [](const Graph::Edge* a, const Graph::Edge* b) { return a->id < b->id; });
  std::size_t nodes = 0;
  for (const Id& s : sorted_vertices) {
    for (const Graph::Edge* e : adj[s])
      if (e->is_loop()) found.insert({e->id});
    std::set<Id> path_vertices{s};
    std::set<Id> path_edges;
    std::function<void(const Id&)> dfs = [&](const Id& cur) {
      if (++nodes > budget) throw ScaleExceeded("cycle enumeration budget");
      for (const Graph::Edge* e : adj[cur]) {
        if (e->is_loop() || path_edges.count(e->id)) continue;
        Id next = e->u == cur ? e->v : e->u;
        if (next == s) {
          if (path_edges.size() >= 1) {
            auto cyc = path_edges;
            cyc.insert(e->id);
            found.insert(cyc);
          }
          continue;
        }
        if (next < s || path_vertices.count(next)) continue;
        path_vertices.insert(next);
        path_edges.insert(e->id);
        dfs(next);
        path_vertices.erase(next);
        path_edges.erase(e->id);
      }
    };
    dfs(s);
  }
  return std::vector<std::set<Id>>(found.begin(), found.end());
}

Graph subgraph_by_edges(const Graph& g, const std::set<Id>& keep_edges,
                        bool drop_isolated) {
  Graph out;
  std::set<Id> touched;
  for (const Graph::Edge& e : g.edges)
    if (keep_edges.count(e.id)) {
      out.edges.push_back(e);
      touched.insert(e.u);
      touched.insert(e.v);
    }
  for (const Id& v : g.vertices)
    if (!drop_isolated || touched.count(v)) out.vertices.push_back(v);
  return out;
}

std::map<Id, int> vertex_star(const Graph& g, const Id& v) {
  std::map<Id, int> star;
  for (const Graph::Edge& e : g.edges) {
    if (e.u == v) star[e.id] += 1;
    if (e.v == v) star[e.id] += 1;
  }
  return star;
}

bool edge_labelled_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertices.size() != b.vertices.size()) return false;
  std::set<Id> ea, eb;
  for (const auto& e : a.edges) ea.insert(e.id);
  for (const auto& e : b.edges) eb.insert(e.id);
  if (ea != eb) return false;
  std::vector<std::map<Id, int>> stars_a, stars_b;
  for (const Id& v : a.vertices) stars_a.push_back(vertex_star(a, v));
  for (const Id& v : b.vertices) stars_b.push_back(vertex_star(b, v));
  std::sort(stars_a.begin(), stars_a.end());
  std::sort(stars_b.begin(), stars_b.end());
  return stars_a == stars_b;
}

}  // namespace embed3
