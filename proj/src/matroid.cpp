#include "embed3/matroid.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <memory>
#include <set>

#include "embed3/algebra.hpp"
#include "embed3/errors.hpp"

namespace embed3::matroid {

namespace {

int popcount(std::uint32_t x) { return std::popcount(x); }

std::vector<Id> ids_of_mask(const std::vector<Id>& ground, std::uint32_t mask) {
  std::vector<Id> out;
  for (std::size_t i = 0; i < ground.size(); ++i)
    if (mask & (1u << i)) out.push_back(ground[i]);
  return out;
}

}  // namespace

Matroid matroid_of(const VectorMatroid& m) {
  Matroid out;
  out.ground = m.ground();
  std::sort(out.ground.begin(), out.ground.end());
  // Columns of the representation, aligned with the sorted ground.
  auto rep = std::make_shared<algebra::ExactMatrix>(m.rep.columns(out.ground));
  out.indep = [rep](std::uint32_t mask) {
    std::vector<Id> labels;
    for (std::size_t i = 0; i < rep->cols; ++i)
      if (mask & (1u << i)) labels.push_back(rep->col_labels[i]);
    if (labels.empty()) return true;
    algebra::ExactMatrix sub = rep->columns(labels);
    return algebra::rank_of(sub) == labels.size();
  };
  return out;
}

Matroid matroid_of(const GraphMatroid& m) {
  Matroid out;
  for (const Graph::Edge& e : m.g.edges) out.ground.push_back(e.id);
  std::sort(out.ground.begin(), out.ground.end());
  auto g = std::make_shared<Graph>(m.g);
  auto ground = std::make_shared<std::vector<Id>>(out.ground);

  auto graph_rank = [g](const std::set<Id>& edge_ids) {
    std::map<Id, std::size_t> vidx;
    for (std::size_t i = 0; i < g->vertices.size(); ++i)
      vidx[g->vertices[i]] = i;
    std::vector<std::size_t> parent(g->vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t r = 0;
    for (const Graph::Edge& e : g->edges)
      if (edge_ids.count(e.id)) {
        std::size_t a = find(vidx.at(e.u)), b = find(vidx.at(e.v));
        if (a != b) {
          parent[b] = a;
          ++r;
        }
      }
    return r;
  };

  if (m.mode == GraphMatroid::Mode::cycle) {
    out.indep = [g, ground, graph_rank](std::uint32_t mask) {
      std::set<Id> sel;
      for (std::size_t i = 0; i < ground->size(); ++i)
        if (mask & (1u << i)) sel.insert((*ground)[i]);
      return graph_rank(sel) == sel.size();
    };
  } else {
    std::set<Id> all(out.ground.begin(), out.ground.end());
    std::size_t full_rank = graph_rank(all);
    out.indep = [g, ground, graph_rank, all, full_rank](std::uint32_t mask) {
      std::set<Id> rest = all;
      for (std::size_t i = 0; i < ground->size(); ++i)
        if (mask & (1u << i)) rest.erase((*ground)[i]);
      return graph_rank(rest) == full_rank;
    };
  }
  return out;
}

std::size_t rank_of_mask(const Matroid& m, std::uint32_t mask) {
  std::uint32_t cur = 0;
  for (std::size_t i = 0; i < m.ground.size(); ++i) {
    std::uint32_t bit = 1u << i;
    if ((mask & bit) && m.independent(cur | bit)) cur |= bit;
  }
  return static_cast<std::size_t>(popcount(cur));
}

std::size_t rank(const Matroid& m) {
  if (m.ground.size() >= 32) throw ScaleExceeded("ground too large for rank");
  return rank_of_mask(m, (1u << m.ground.size()) - 1);
}

bool is_loop(const Matroid& m, const Id& e) {
  for (std::size_t i = 0; i < m.ground.size(); ++i)
    if (m.ground[i] == e) return !m.independent(1u << i);
  throw GroundMismatch("element " + e.to_string() + " not in ground set");
}

std::vector<Id> loops(const Matroid& m) {
  std::vector<Id> out;
  for (std::size_t i = 0; i < m.ground.size(); ++i)
    if (!m.independent(1u << i)) out.push_back(m.ground[i]);
  return out;
}

VectorMatroid dual_matroid(const cx::DirectedComplex& c,
                           const algebra::FieldTag& k) {
  return VectorMatroid{
      algebra::null_space_basis(cx::incidence_matrix(c, k))};
}

VectorMatroid restriction(const VectorMatroid& m, const std::vector<Id>& subset) {
  std::set<Id> ground(m.ground().begin(), m.ground().end());
  std::vector<Id> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] == sorted[i + 1])
      throw GroundMismatch("restriction subset repeats " + sorted[i].to_string());
  for (const Id& e : sorted)
    if (!ground.count(e))
      throw GroundMismatch("restriction to element " + e.to_string() +
                           " outside the ground set");
  return VectorMatroid{m.rep.columns(sorted)};
}

std::vector<std::vector<Id>> circuits(const Matroid& m, const ScaleLimits& lim,
                                      std::optional<std::size_t> size_cap) {
  const std::size_t n = m.ground.size();
  if (n > lim.max_ground || n > 31)
    throw ScaleExceeded("ground of size " + std::to_string(n) +
                        " exceeds the circuit enumeration limit of " +
                        std::to_string(std::min<std::size_t>(lim.max_ground, 31)));
  std::vector<std::vector<Id>> out;
  std::size_t nodes = 0;
  // DFS over independent sets in lexicographic order.  A circuit is found
  // exactly once: as S + e where S is the circuit minus its largest element.
  std::function<void(std::uint32_t, std::size_t)> rec = [&](std::uint32_t set,
                                                            std::size_t start) {
    if (size_cap && static_cast<std::size_t>(popcount(set)) + 1 > *size_cap)
      return;
    for (std::size_t e = start; e < n; ++e) {
      if (++nodes > lim.node_budget)
        throw ScaleExceeded("circuit enumeration node budget");
      std::uint32_t ext = set | (1u << e);
      if (m.independent(ext)) {
        rec(ext, e + 1);
      } else {
        bool minimal = true;
        for (std::size_t x = 0; x < n && minimal; ++x)
          if (x != e && (ext & (1u << x)) && !m.independent(ext & ~(1u << x)))
            minimal = false;
        if (minimal) out.push_back(ids_of_mask(m.ground, ext));
      }
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

EqualityReport matroids_equal(const Matroid& a, const Matroid& b,
                              const ScaleLimits& lim) {
  if (a.ground != b.ground)
    throw GroundMismatch("matroids_equal needs identical ground labels (" +
                         join_ids(a.ground) + " vs " + join_ids(b.ground) + ")");
  std::vector<std::vector<Id>> ca = circuits(a, lim), cb = circuits(b, lim);
  EqualityReport rep;
  std::vector<std::vector<Id>> only_a, only_b;
  std::set_difference(ca.begin(), ca.end(), cb.begin(), cb.end(),
                      std::back_inserter(only_a));
  std::set_difference(cb.begin(), cb.end(), ca.begin(), ca.end(),
                      std::back_inserter(only_b));
  if (only_a.empty() && only_b.empty()) {
    rep.equal = true;
    return rep;
  }
  // Report the smallest mismatch circuit; ties go to the left family.
  bool from_a = !only_a.empty() &&
                (only_b.empty() ||
                 only_a.front().size() <= only_b.front().size());
  if (from_a) {
    rep.witness = only_a.front();
    rep.witness_side = "left";
  } else {
    rep.witness = only_b.front();
    rep.witness_side = "right";
  }
  return rep;
}

std::optional<VectorMatroid> binary_candidate(const VectorMatroid& m,
                                              const ScaleLimits& lim) {
  algebra::RrefResult rr = algebra::rank_and_rref(m.rep);
  algebra::ExactMatrix cand(algebra::FieldTag::gf(2), rr.pivot_cols,
                            m.rep.col_labels);
  for (std::size_t r = 0; r < rr.rank; ++r)
    for (std::size_t c = 0; c < m.rep.cols; ++c)
      cand.at(r, c) = algebra::Rat(algebra::f_is_zero(rr.rref.at(r, c)) ? 0 : 1);
  VectorMatroid vc{cand};
  if (matroids_equal(matroid_of(m), matroid_of(vc), lim).equal) return vc;
  return std::nullopt;
}

// --- graph realization ----------------------------------------------------------

namespace {

struct TreeSearch {
  std::size_t r = 0;  // basis size; vertices are 0..r
  std::vector<std::vector<std::size_t>> chord_paths;  // per chord: basis positions
  std::vector<std::pair<int, int>> tree;              // endpoint pair per basis edge
  std::size_t used = 0;
  std::size_t nodes = 0;
  std::size_t budget = 0;

  // Chords whose fundamental path lies within the first d basis edges.
  std::vector<std::vector<std::size_t>> chords_ready_at;

  bool creates_cycle(int a, int b) const {
    // union-find over the placed forest, rebuilt per query (desk scale)
    std::vector<int> parent(used + 2);
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [p, q] : tree) {
      int rp = find(p), rq = find(q);
      if (rp != rq) parent[rq] = rp;
    }
    return find(a) == find(b);
  }

  // The chord's path edges must form a path in the placed forest; returns its
  // endpoints or nullopt.
  std::optional<std::pair<int, int>> path_ends(
      const std::vector<std::size_t>& positions) const {
    std::map<int, int> degree;
    for (std::size_t p : positions) {
      degree[tree[p].first] += 1;
      degree[tree[p].second] += 1;
    }
    std::vector<int> odd;
    for (const auto& [v, d] : degree) {
      if (d > 2) return std::nullopt;
      if (d == 1) odd.push_back(v);
    }
    if (odd.size() != 2) return std::nullopt;
    // Connectivity: positions form a forest (subset of a forest); a forest
    // whose degree sequence has exactly two 1s and the rest 2s is a path
    // exactly when it is connected, i.e. #vertices = #edges + 1.
    if (degree.size() != positions.size() + 1) return std::nullopt;
    return std::make_pair(odd[0], odd[1]);
  }

  bool place(std::size_t depth);
};

bool TreeSearch::place(std::size_t depth) {
  if (depth == r) return used == r + 1;
  if (++nodes > budget) throw ScaleExceeded("realization search node budget");
  auto try_edge = [&](int a, int b, std::size_t new_vertices) {
    if (creates_cycle(a, b)) return false;
    tree.push_back({a, b});
    used += new_vertices;
    bool ok = true;
    for (std::size_t ci : chords_ready_at[depth + 1])
      if (!path_ends(chord_paths[ci])) {
        ok = false;
        break;
      }
    if (ok && place(depth + 1)) return true;
    tree.pop_back();
    used -= new_vertices;
    return false;
  };
  const int u = static_cast<int>(used);
  for (int a = 0; a < u; ++a)
    for (int b = a + 1; b < u; ++b)
      if (try_edge(a, b, 0)) return true;
  if (used + 1 <= r + 1)
    for (int a = 0; a < u; ++a)
      if (try_edge(a, u, 1)) return true;
  if (used + 2 <= r + 1 && try_edge(u, u + 1, 2)) return true;
  return false;
}

}  // namespace

std::optional<Realization> graph_realization(const VectorMatroid& vm,
                                             const ScaleLimits& lim) {
  Matroid m = matroid_of(vm);
  const std::size_t n = m.ground.size();
  if (n > lim.max_ground || n > 31)
    throw ScaleExceeded("realization ground too large");

  std::vector<Id> loop_elems = loops(m);
  std::set<Id> loop_set(loop_elems.begin(), loop_elems.end());
  std::vector<Id> nonloops;
  for (const Id& e : m.ground)
    if (!loop_set.count(e)) nonloops.push_back(e);

  // Parallel classes among the non-loops (2-element circuits).
  std::map<Id, Id> class_rep;  // element -> representative (smallest)
  std::map<Id, std::vector<Id>> class_members;
  for (const Id& e : nonloops) {
    Id rep = e;
    for (const Id& f : nonloops) {
      if (!(f < e)) break;
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (m.ground[i] == e || m.ground[i] == f) mask |= 1u << i;
      if (!m.independent(mask)) {
        rep = class_rep.at(f);
        break;
      }
    }
    class_rep[e] = rep;
    class_members[rep].push_back(e);
  }
  std::vector<Id> reps;
  for (const auto& [rep, members] : class_members) reps.push_back(rep);

  if (!binary_candidate(vm, lim)) return std::nullopt;

  VectorMatroid vr = restriction(vm, reps);
  Matroid mr = matroid_of(vr);
  std::vector<std::vector<Id>> simple_circuits = circuits(mr, lim);

  // Circuit-connected components of the simplified matroid.
  std::map<Id, Id> comp_rep;
  for (const Id& e : reps) comp_rep[e] = e;
  std::function<Id(const Id&)> find_comp = [&](const Id& e) {
    Id cur = e;
    while (!(comp_rep.at(cur) == cur)) cur = comp_rep.at(cur);
    return cur;
  };
  for (const auto& circ : simple_circuits)
    for (std::size_t i = 1; i < circ.size(); ++i) {
      Id a = find_comp(circ[0]), b = find_comp(circ[i]);
      if (!(a == b)) comp_rep[a < b ? b : a] = a < b ? a : b;
    }
  std::map<Id, std::vector<Id>> comps;
  for (const Id& e : reps) comps[find_comp(e)].push_back(e);

  Graph g;
  std::size_t vertex_counter = 0;
  auto fresh_vertex = [&]() {
    Id v = Id::of_string("v" + std::to_string(vertex_counter++));
    g.vertices.push_back(v);
    return v;
  };

  for (const auto& [comp_root, comp] : comps) {
    // Basis of the component by greedy ascent in id order.
    std::uint32_t basis_mask = 0;
    std::vector<Id> basis;
    std::vector<std::size_t> basis_pos;  // indices into mr.ground
    std::vector<std::size_t> comp_pos;
    for (std::size_t i = 0; i < mr.ground.size(); ++i)
      if (std::binary_search(comp.begin(), comp.end(), mr.ground[i]))
        comp_pos.push_back(i);
    for (std::size_t i : comp_pos) {
      std::uint32_t bit = 1u << i;
      if (mr.independent(basis_mask | bit)) {
        basis_mask |= bit;
        basis.push_back(mr.ground[i]);
        basis_pos.push_back(i);
      }
    }
    std::vector<Id> chords;
    for (std::size_t i : comp_pos)
      if (!(basis_mask & (1u << i))) chords.push_back(mr.ground[i]);

    const std::size_t r = basis.size();
    std::map<Id, std::size_t> basis_index;
    for (std::size_t i = 0; i < r; ++i) basis_index[basis[i]] = i;

    // Fundamental circuit of each chord inside basis + chord.
    std::vector<std::vector<std::size_t>> chord_paths;
    for (const Id& e : chords) {
      std::optional<std::vector<std::size_t>> path;
      for (const auto& circ : simple_circuits) {
        if (!std::binary_search(circ.begin(), circ.end(), e)) continue;
        bool inside = true;
        std::vector<std::size_t> positions;
        for (const Id& x : circ) {
          if (x == e) continue;
          auto it = basis_index.find(x);
          if (it == basis_index.end()) {
            inside = false;
            break;
          }
          positions.push_back(it->second);
        }
        if (inside) {
          path = positions;
          break;
        }
      }
      if (!path)
        throw InternalCheckFailure("chord " + e.to_string() +
                                   " has no fundamental circuit");
      chord_paths.push_back(*path);
    }

    TreeSearch search;
    search.r = r;
    search.chord_paths = chord_paths;
    search.budget = lim.node_budget;
    search.chords_ready_at.assign(r + 1, {});
    for (std::size_t ci = 0; ci < chord_paths.size(); ++ci) {
      std::size_t ready = 0;
      for (std::size_t p : chord_paths[ci]) ready = std::max(ready, p + 1);
      search.chords_ready_at[ready].push_back(ci);
    }
    if (!search.place(0)) return std::nullopt;

    // Map local tree vertices to fresh graph vertices.
    std::vector<Id> local(r + 1);
    for (std::size_t i = 0; i <= r; ++i) local[i] = fresh_vertex();
    std::map<Id, std::pair<Id, Id>> endpoint_of;
    for (std::size_t i = 0; i < r; ++i)
      endpoint_of[basis[i]] = {local[search.tree[i].first],
                               local[search.tree[i].second]};
    for (std::size_t ci = 0; ci < chords.size(); ++ci) {
      auto ends = search.path_ends(chord_paths[ci]);
      if (!ends) throw InternalCheckFailure("accepted tree lost a chord path");
      endpoint_of[chords[ci]] = {local[ends->first], local[ends->second]};
    }
    for (const Id& e : comp) {
      auto [u, v] = endpoint_of.at(e);
      for (const Id& member : class_members.at(e))
        g.edges.push_back({member, u, v});
    }
  }

  if (!loop_elems.empty()) {
    if (g.vertices.empty()) fresh_vertex();
    for (const Id& e : loop_elems)
      g.edges.push_back({e, g.vertices.front(), g.vertices.front()});
  }

  // Full verification against the input matroid.
  EqualityReport check =
      matroids_equal(matroid_of(GraphMatroid{g, GraphMatroid::Mode::cycle}), m,
                     lim);
  if (!check.equal)
    throw InternalCheckFailure("realization failed final matroid verification");

  Realization out;
  out.g = sort_graph(g);
  for (const Id& e : m.ground) out.element_edge[e] = e;
  return out;
}

std::optional<std::map<Id, Id>> matroid_isomorphic(const Matroid& a,
                                                   const Matroid& b,
                                                   const ScaleLimits& lim) {
  if (a.ground.size() != b.ground.size()) return std::nullopt;
  std::vector<std::vector<Id>> ca = circuits(a, lim), cb = circuits(b, lim);
  if (ca.size() != cb.size()) return std::nullopt;

  auto signature = [](const std::vector<Id>& ground,
                      const std::vector<std::vector<Id>>& circs) {
    std::map<Id, std::vector<std::size_t>> sig;
    for (const Id& e : ground) sig[e] = {};
    for (const auto& c : circs)
      for (const Id& e : c) sig[e].push_back(c.size());
    for (auto& [e, s] : sig) std::sort(s.begin(), s.end());
    return sig;
  };
  auto sig_a = signature(a.ground, ca), sig_b = signature(b.ground, cb);

  std::set<std::vector<Id>> circ_b_set(cb.begin(), cb.end());
  std::map<Id, Id> mapping;
  std::set<Id> used;
  std::size_t nodes = 0;

  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (++nodes > lim.node_budget)
      throw ScaleExceeded("isomorphism search node budget");
    if (i == a.ground.size()) return true;
    const Id& e = a.ground[i];
    for (const Id& f : b.ground) {
      if (used.count(f) || sig_a.at(e) != sig_b.at(f)) continue;
      mapping[e] = f;
      used.insert(f);
      bool consistent = true;
      for (const auto& c : ca) {
        bool complete = true;
        std::vector<Id> image;
        for (const Id& x : c) {
          auto it = mapping.find(x);
          if (it == mapping.end()) {
            complete = false;
            break;
          }
          image.push_back(it->second);
        }
        if (complete) {
          std::sort(image.begin(), image.end());
          if (!circ_b_set.count(image)) {
            consistent = false;
            break;
          }
        }
      }
      if (consistent && assign(i + 1)) return true;
      mapping.erase(e);
      used.erase(f);
    }
    return false;
  };
  if (assign(0)) return mapping;
  return std::nullopt;
}

}  // namespace embed3::matroid
