#include <doctest.h>

#include "gamma/errors.hpp"
#include "gamma/zpfamily.hpp"

using namespace gam;

TEST_CASE("prime admissibility") {
  CHECK_THROWS_AS(build_sigma_p(5), BadPrime);
  CHECK_THROWS_AS(build_sigma_p(11), BadPrime);
  CHECK_THROWS_AS(build_sigma_p(9), BadPrime);  // not prime
  CHECK_NOTHROW(build_sigma_p(7));
  CHECK(zp_order3_element(7) == 2);   // 2^3 = 8 = 1 mod 7
  CHECK(zp_order3_element(13) == 3);  // 3^3 = 27 = 1 mod 13
}

TEST_CASE("sigma_7 shape") {
  const Graph g = build_sigma_p(7);
  CHECK(g.num_vertices() == 98);
  CHECK(g.num_edges() == 147);
  int halves[2] = {0, 0};
  for (auto p : g.part) ++halves[p];
  CHECK(halves[0] == 49);
  CHECK(halves[1] == 49);
  // neighbors of (0,0,0): (1,1,1), (2,4,1), (4,2,1)
  const auto id = [&](int x, int y, int e) {
    return std::uint32_t((x * 7 + y) * 2 + e);
  };
  const auto& nb = g.adj[id(0, 0, 0)];
  CHECK(nb[0] == id(1, 1, 1));
  CHECK(nb[1] == id(2, 4, 1));
  CHECK(nb[2] == id(4, 2, 1));
}

TEST_CASE("transitivity report") {
  const ZpReport r = zp_arc_check(7);
  CHECK(r.a == 2);
  CHECK(r.girth >= 6);
  CHECK(r.g_arc1.transitive);
  CHECK_FALSE(r.g_arc2.transitive);
  CHECK(r.a_arc2.transitive);
  CHECK(r.row_orbits_per_half[0] == 7);
  CHECK(r.row_orbits_per_half[1] == 7);
  CHECK(r.tau_cycles_neighbors);
  CHECK(r.aut_order == 12 * 49);
  CHECK(r.stabilizer_order == 6);
  CHECK(r.same_graph_other_root);
  CHECK(r.pass());
}
