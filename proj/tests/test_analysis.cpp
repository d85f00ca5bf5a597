#include <doctest.h>

#include <algorithm>

#include "gamma/analysis.hpp"
#include "gamma/errors.hpp"

using namespace gam;

namespace {
const Field F2 = Field::with_default_modulus(2);
const Graph& desargues_component() {
  static const Graph g = build_component(F2, 0b10);
  return g;
}
}  // namespace

TEST_CASE("reference graphs") {
  const Graph k33 = reference_graph("K33");
  CHECK(k33.num_vertices() == 6);
  CHECK(k33.num_edges() == 9);
  const Graph pet = reference_graph("Petersen");
  CHECK(pet.num_vertices() == 10);
  CHECK(pet.num_edges() == 15);
  CHECK(girth(pet) == 5);
  const Graph des = reference_graph("Desargues");
  CHECK(des.num_vertices() == 20);
  CHECK(des.num_edges() == 30);
  CHECK(girth(des) == 6);
  CHECK(diameter(des) == 5);
  CHECK_THROWS_AS(reference_graph("heawood"), UnknownName);
}

TEST_CASE("small_iso") {
  CHECK(small_iso(reference_graph("K33"), reference_graph("K33")));
  CHECK_FALSE(small_iso(reference_graph("K33"), reference_graph("Petersen")));
  CHECK_FALSE(
      small_iso(reference_graph("Petersen"), reference_graph("Desargues")));
  CHECK(small_iso(desargues_component(), reference_graph("Desargues")));
  CHECK(small_iso(build_component(Field::with_default_modulus(1), 0),
                  reference_graph("K33")));
}

TEST_CASE("vertex maps") {
  const Graph& g = desargues_component();
  const VertexMap id = action_map(g, big_identity(F2));
  CHECK(id.is_identity());
  const BigElem aa = big_elem(elem_a(F2), elem_a(F2), 0);
  const VertexMap ma = action_map(g, aa);
  CHECK(ma[0] == 0);  // L(a,a) = L
  CHECK(ma.preserves_parts(g));
  const VertexMap mg = action_map(g, g_alpha(F2, 0b10));
  CHECK_FALSE(mg.preserves_parts(g));
  CHECK(g.part[mg[0]] == 1);

  std::vector<std::uint32_t> bad(g.num_vertices());
  for (std::uint32_t i = 0; i < bad.size(); ++i) bad[i] = (i + 1) % bad.size();
  CHECK_THROWS_AS(VertexMap::automorphism(g, bad), NotAutomorphism);
}

TEST_CASE("sigma") {
  const Graph& g = desargues_component();
  const VertexMap s = sigma_map(g);
  CHECK_FALSE(s.is_identity());
  CHECK_FALSE(s.preserves_parts(g));
  CHECK(s.after(s).is_identity());
  for (const BigElem& e :
       {big_elem(elem_a(F2), elem_a(F2), 0), big_elem(elem_b(F2), elem_b(F2), 0),
        g_alpha(F2, 0b10)}) {
    const VertexMap m = action_map(g, e);
    CHECK(s.after(m).perm() == m.after(s).perm());
  }
}

TEST_CASE("tau_bar on the f=2 component is a self-isomorphism") {
  const Graph& g = desargues_component();
  CHECK_NOTHROW(tau_bar_map(g, g));
}

TEST_CASE("bfs, girth, diameter") {
  const Graph k33 = reference_graph("K33");
  const auto d = bfs_distances(k33, 0);
  CHECK(*std::max_element(d.begin(), d.end()) == 2);
  CHECK(girth(k33) == 4);
  CHECK(diameter(k33) == 2);
  CHECK(girth(desargues_component()) == 6);
  CHECK(diameter(desargues_component()) == 5);
}

TEST_CASE("arc orbits on the f=2 component") {
  const Graph& g = desargues_component();
  const auto gens = automorphism_gens(g, "G");
  const auto a0 = arc_orbits(g, gens, 0);
  CHECK(a0.total == 20);
  CHECK(a0.transitive);
  const auto a1 = arc_orbits(g, gens, 1);
  CHECK(a1.total == 60);
  CHECK(a1.transitive);
  const auto a2 = arc_orbits(g, gens, 2, sigma_group_order(F2, 0b10));
  CHECK(a2.total == 120);
  CHECK(a2.transitive);
  CHECK(a2.regular);  // |<L, g_i>| = 120 = #2-arcs
  CHECK_THROWS_AS(arc_orbits(g, gens, 3), GirthTooSmall);  // girth 6 <= 2*3
  CHECK(vertex_transitive_cert(g));
}

TEST_CASE("local arc orbits require part-preserving generators") {
  const Graph& g = desargues_component();
  CHECK_THROWS_AS(local_arc_orbits(g, automorphism_gens(g, "G"), 1),
                  NotAutomorphism);
  const auto rep = local_arc_orbits(g, automorphism_gens(g, "Gplus"), 2);
  CHECK(rep[0].total == 60);
  CHECK(rep[0].transitive);
  CHECK(rep[1].transitive);
}

TEST_CASE("antipodality") {
  CHECK(antipodal_check(desargues_component()));
}

TEST_CASE("iso classes") {
  const auto c3 = iso_classes(Field::with_default_modulus(3));
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].size() == 6);
  const auto c4 = iso_classes(Field::with_default_modulus(4));
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].size() == 8);
  const auto c5 = iso_classes(Field::with_default_modulus(5));
  CHECK(c5.size() == 3);
  for (const auto& c : c5) CHECK(c.size() == 10);
  CHECK_THROWS_AS(iso_classes(F2), DegreeOutOfRange);
}

TEST_CASE("equal edge sets iff beta in {alpha, alpha+1}") {
  CHECK(graphs_equal_iff(F2, 0b10, 0b11));
  CHECK(graphs_equal_iff(F2, 0, 1));
  CHECK_FALSE(graphs_equal_iff(F2, 0, 0b10));
  const Field F3 = Field::with_default_modulus(3);
  CHECK(graphs_equal_iff(F3, 0b010, 0b011));
  CHECK_FALSE(graphs_equal_iff(F3, 0b010, 0b100));
}

TEST_CASE("orbit partition") {
  const Graph k33 = reference_graph("K33");
  std::vector<std::uint32_t> p(6);
  for (std::uint32_t i = 0; i < 6; ++i) p[i] = i < 3 ? (i + 1) % 3 : i;
  const auto roots =
      orbit_partition(6, {VertexMap::automorphism(k33, p)});
  CHECK(roots[0] == roots[1]);
  CHECK(roots[1] == roots[2]);
  CHECK(roots[3] != roots[4]);
}
