#include "embed3/maclane.hpp"

#include <algorithm>

#include "embed3/algebra.hpp"

namespace embed3::maclane {

using algebra::Rat;

algebra::ExactMatrix SparseFamily::matrix() const {
  std::vector<Id> rlab;
  for (const auto& [label, row] : vectors) rlab.push_back(label);
  algebra::ExactMatrix m(field, rlab, coords);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].second.size() != coords.size())
      throw Error("vector " + vectors[i].first.to_string() + " has " +
                  std::to_string(vectors[i].second.size()) + " entries for " +
                  std::to_string(coords.size()) + " coordinates");
    for (std::size_t j = 0; j < coords.size(); ++j)
      m.set(i, j, vectors[i].second[j]);
  }
  return m;
}

SparseCheck is_sparse_family(const SparseFamily& fam) {
  algebra::ExactMatrix m = fam.matrix();  // validates shape and labels
  const Rat one = algebra::f_norm(fam.field, 1);
  const Rat minus_one = algebra::f_neg(fam.field, one);
  for (std::size_t j = 0; j < m.cols; ++j) {
    std::vector<Rat> nz;
    for (std::size_t i = 0; i < m.rows; ++i)
      if (!algebra::f_is_zero(m.at(i, j))) nz.push_back(m.at(i, j));
    if (nz.empty()) continue;
    if (nz.size() != 2)
      return {false, fam.coords[j],
              "coordinate " + fam.coords[j].to_string() + " has " +
                  std::to_string(nz.size()) + " nonzero entries"};
    bool plus_minus = (nz[0] == one && nz[1] == minus_one) ||
                      (nz[0] == minus_one && nz[1] == one);
    if (!plus_minus)
      return {false, fam.coords[j],
              "coordinate " + fam.coords[j].to_string() +
                  " does not carry values +1 and -1"};
  }
  return {true, std::nullopt, "sparse"};
}

SparseFamily sparse_set_from_graph(const Graph& g, const algebra::FieldTag& k) {
  Graph s = sort_graph(g);
  SparseFamily fam;
  fam.field = k;
  for (const Graph::Edge& e : s.edges) fam.coords.push_back(e.id);
  std::sort(fam.coords.begin(), fam.coords.end());
  const Rat one = algebra::f_norm(k, 1);
  const Rat minus_one = algebra::f_neg(k, one);
  for (const Id& b : s.vertices) {
    std::vector<Rat> row(fam.coords.size(), Rat(0));
    for (const Graph::Edge& e : s.edges) {
      if (e.is_loop()) continue;
      std::size_t j = std::lower_bound(fam.coords.begin(), fam.coords.end(),
                                       e.id) -
                      fam.coords.begin();
      if (e.u == b) row[j] = one;
      if (e.v == b) row[j] = minus_one;
    }
    fam.vectors.push_back({b, row});
  }
  return fam;
}

Graph graph_from_sparse_set(const SparseFamily& fam) {
  SparseCheck check = is_sparse_family(fam);
  if (!check.sparse) throw NotSparse(check.note);
  const Rat one = algebra::f_norm(fam.field, 1);

  Graph g;
  for (const auto& [label, row] : fam.vectors) g.vertices.push_back(label);
  std::sort(g.vertices.begin(), g.vertices.end());

  std::optional<Id> loop_host;
  if (!g.vertices.empty()) loop_host = g.vertices.front();

  for (std::size_t j = 0; j < fam.coords.size(); ++j) {
    std::vector<std::pair<Id, Rat>> nz;
    for (const auto& [label, row] : fam.vectors)
      if (!algebra::f_is_zero(row[j])) nz.push_back({label, row[j]});
    if (nz.empty()) {
      if (!loop_host) {
        loop_host = Id::of_string("sink");
        g.vertices.push_back(*loop_host);
      }
      g.edges.push_back({fam.coords[j], *loop_host, *loop_host});
      continue;
    }
    Id tail, head;
    if (fam.field.is_prime_field() && fam.field.p == 2) {
      tail = std::min(nz[0].first, nz[1].first);
      head = std::max(nz[0].first, nz[1].first);
    } else {
      tail = nz[0].second == one ? nz[0].first : nz[1].first;
      head = nz[0].second == one ? nz[1].first : nz[0].first;
    }
    g.edges.push_back({fam.coords[j], tail, head});
  }
  g = sort_graph(g);
  g.check();
  return g;
}

MaclaneVerdict maclane_check(const cx::DirectedComplex& c,
                             const algebra::FieldTag& k,
                             const matroid::ScaleLimits& lim) {
  MaclaneVerdict out;
  matroid::VectorMatroid dual = matroid::dual_matroid(c, k);
  out.realization = matroid::graph_realization(dual, lim);
  if (!out.realization) {
    out.note = "the dual matroid is the cycle matroid of no graph, so no "
               "sparse generating set exists";
    return out;
  }
  out.sparse_generating_set_exists = true;
  out.family = sparse_set_from_graph(out.realization->g, k);
  algebra::ExactMatrix cycles =
      algebra::null_space_basis(cx::incidence_matrix(c, k));
  out.family_spans_cycle_space =
      algebra::row_spaces_equal(out.family.matrix(), cycles);
  out.note = out.family_spans_cycle_space
                 ? "vertex stars of the realizing graph generate the space "
                   "of 2-cycles"
                 : "vertex stars of the realizing graph generate the space "
                   "of 2-cycles only after rescaling coordinates";
  return out;
}

}  // namespace embed3::maclane
