// Benchmark of the OpenMP kernels against their serial reference
// implementations: RREF row elimination and per-vertex locality.  Results
// are asserted equal before any timing is reported.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "embed3/algebra.hpp"
#include "embed3/complex.hpp"
#include "embed3/locality.hpp"

using namespace embed3;

namespace {

double run_ms(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

algebra::ExactMatrix random_gf3(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<Id> rlab, clab;
  for (std::size_t i = 0; i < n; ++i) {
    rlab.push_back(Id::of_string("r" + std::to_string(i)));
    clab.push_back(Id::of_string("c" + std::to_string(i)));
  }
  algebra::ExactMatrix m(algebra::FieldTag::gf(3), rlab, clab);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.set(i, j, algebra::Rat(coin(rng)));
  return m;
}

cx::DirectedComplex disjoint_tetrahedra(int m) {
  std::vector<Id> vs;
  std::vector<std::array<Id, 3>> faces;
  for (int i = 0; i < m; ++i) {
    Id a = Id::of_string("a" + std::to_string(i));
    Id b = Id::of_string("b" + std::to_string(i));
    Id c = Id::of_string("c" + std::to_string(i));
    Id d = Id::of_string("d" + std::to_string(i));
    vs.insert(vs.end(), {a, b, c, d});
    faces.push_back({a, b, c});
    faces.push_back({a, b, d});
    faces.push_back({a, c, d});
    faces.push_back({b, c, d});
  }
  return cx::make_complex(vs, faces);
}

bool reports_equal(const locality::LocalityReport& a,
                   const locality::LocalityReport& b) {
  if (a.k_local != b.k_local || a.vertices.size() != b.vertices.size())
    return false;
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    if (!(a.vertices[i].vertex == b.vertices[i].vertex)) return false;
    if (a.vertices[i].equal != b.vertices[i].equal) return false;
    if (a.vertices[i].link_matroid_rank != b.vertices[i].link_matroid_rank)
      return false;
    if (a.vertices[i].restriction_rank != b.vertices[i].restriction_rank)
      return false;
  }
  return true;
}

}  // namespace

int main() {
  std::printf("%-22s %10s %13s %11s %9s %6s\n", "kernel", "size",
              "reference(ms)", "kernel(ms)", "speedup", "equal");

  for (std::size_t n : {48u, 96u, 160u}) {
    algebra::ExactMatrix m = random_gf3(n, 1234u + n);
    algebra::RrefResult serial, parallel;
    double ts = run_ms([&] { serial = algebra::rank_and_rref_serial(m); });
    double tp = run_ms([&] { parallel = algebra::rank_and_rref(m); });
    bool equal = serial.rank == parallel.rank &&
                 serial.rref == parallel.rref &&
                 serial.pivot_cols == parallel.pivot_cols;
    std::printf("%-22s %10s %13.2f %11.2f %8.2fx %6s\n", "rref gf3",
                (std::to_string(n) + "x" + std::to_string(n)).c_str(), ts, tp,
                ts / tp, equal ? "yes" : "NO");
    if (!equal) return 1;
  }

  for (int m : {8, 32, 96}) {
    cx::DirectedComplex c = disjoint_tetrahedra(m);
    locality::LocalityReport serial, parallel;
    double ts = run_ms(
        [&] { serial = locality::is_k_local_serial(c, algebra::FieldTag::gf(2)); });
    double tp =
        run_ms([&] { parallel = locality::is_k_local(c, algebra::FieldTag::gf(2)); });
    bool equal = reports_equal(serial, parallel);
    std::printf("%-22s %10s %13.2f %11.2f %8.2fx %6s\n", "locality tetrahedra",
                (std::to_string(m) + " comps").c_str(), ts, tp, ts / tp,
                equal ? "yes" : "NO");
    if (!equal) return 1;
  }

  return 0;
}
