#include "embed3/locality.hpp"

#include <algorithm>
#include <exception>
#include <set>

namespace embed3::locality {

Graph g_v(const Graph& g, const cx::DirectedComplex& c, const Id& v,
          bool keep_isolated) {
  if (!c.vertex_idx.count(v))
    throw Error("unknown vertex " + v.to_string());
  for (const Graph::Edge& e : g.edges)
    if (!c.face_idx.count(e.id))
      throw Error("dual edge " + e.id.to_string() +
                  " is not a face of the complex");
  std::set<Id> keep;
  for (const Id& f : c.face_ids_at_vertex(v)) keep.insert(f);
  return subgraph_by_edges(g, keep, !keep_isolated);
}

namespace {

VertexLocality locality_at(const cx::DirectedComplex& c,
                           const matroid::VectorMatroid& dual, const Id& v,
                           const matroid::ScaleLimits& lim) {
  VertexLocality out;
  out.vertex = v;
  out.faces_at_vertex = c.face_ids_at_vertex(v);
  std::sort(out.faces_at_vertex.begin(), out.faces_at_vertex.end());

  cx::LinkGraph link = cx::link_graph(c, v);
  matroid::Matroid bond = matroid::matroid_of(
      matroid::GraphMatroid{link.graph, matroid::GraphMatroid::Mode::bond});
  matroid::Matroid restr =
      matroid::matroid_of(matroid::restriction(dual, out.faces_at_vertex));

  out.link_matroid_rank = matroid::rank(bond);
  out.restriction_rank = matroid::rank(restr);

  matroid::EqualityReport eq = matroid::matroids_equal(bond, restr, lim);
  out.equal = eq.equal;
  if (!eq.equal) {
    out.witness = eq.witness;
    out.witness_side = eq.witness_side == "left" ? "link-bond"
                                                 : "dual-restriction";
  }
  return out;
}

LocalityReport run_k_local(const cx::DirectedComplex& c,
                           const algebra::FieldTag& k,
                           const matroid::ScaleLimits& lim, bool parallel) {
  matroid::VectorMatroid dual = matroid::dual_matroid(c, k);
  const std::size_t n = c.vertices.size();
  std::vector<VertexLocality> rows(n);
  std::vector<std::exception_ptr> errors(n);

#ifdef EMBED3_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel && n >= 4)
#endif
  for (std::size_t i = 0; i < n; ++i) {
    try {
      rows[i] = locality_at(c, dual, c.vertices[i], lim);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  (void)parallel;
  for (std::size_t i = 0; i < n; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);

  LocalityReport rep;
  rep.k_local = true;
  for (VertexLocality& row : rows) {
    if (!row.equal && !rep.first_failing_vertex)
      rep.first_failing_vertex = row.vertex;
    rep.k_local = rep.k_local && row.equal;
    rep.vertices.push_back(std::move(row));
  }
  return rep;
}

}  // namespace

LocalityReport is_k_local(const cx::DirectedComplex& c,
                          const algebra::FieldTag& k,
                          const matroid::ScaleLimits& lim) {
  return run_k_local(c, k, lim, true);
}

LocalityReport is_k_local_serial(const cx::DirectedComplex& c,
                                 const algebra::FieldTag& k,
                                 const matroid::ScaleLimits& lim) {
  return run_k_local(c, k, lim, false);
}

LocalTwoConnectivityReport is_locally_2connected(
    const cx::DirectedComplex& c, const TwoConnectivityOptions& opt) {
  LocalTwoConnectivityReport rep;
  rep.locally_2connected = true;
  for (const Id& v : c.vertices) {
    cx::LinkGraph link = cx::link_graph(c, v);
    TwoConnectivityReport r = two_connectivity(link.graph, opt);
    VertexTwoConnectivity row;
    row.vertex = v;
    row.two_connected = r.two_connected;
    row.reason = r.reason;
    row.cut_vertex = r.cut_vertex;
    if (!r.two_connected && !rep.first_failing_vertex)
      rep.first_failing_vertex = v;
    rep.locally_2connected = rep.locally_2connected && r.two_connected;
    rep.vertices.push_back(std::move(row));
  }
  return rep;
}

}  // namespace embed3::locality
