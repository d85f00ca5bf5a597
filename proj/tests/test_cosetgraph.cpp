#include <doctest.h>

#include <sstream>

#include "gamma/cosetgraph.hpp"
#include "gamma/errors.hpp"

using namespace gam;

namespace {
const Field F1 = Field::with_default_modulus(1);
const Field F2 = Field::with_default_modulus(2);
const Field F3 = Field::with_default_modulus(3);
}  // namespace

TEST_CASE("vertex keys are coset invariants") {
  const LGroup L(F3);
  const BigElem aa = big_elem(elem_a(F3), elem_a(F3), 0);
  CHECK(vertex_key(L, big_identity(F3)) == vertex_key(L, aa));
  const BigElem g = g_alpha(F3, 0b010);
  const BigElem bb = big_elem(elem_b(F3), elem_b(F3), 0);
  CHECK(vertex_key(L, g) == vertex_key(L, big_mul(bb, g)));
  CHECK(vertex_key(L, big_identity(F3)) != vertex_key(L, g));

  const std::string k = vertex_key(L, big_mul(g, aa));
  const BigElem rep = key_to_elem(F3, k);
  CHECK(vertex_key(L, rep) == k);
  CHECK_THROWS_AS(key_to_elem(F3, "short"), ParseError);
}

TEST_CASE("neighbors") {
  const LGroup L(F3);
  const BigElem ga = g_alpha(F3, 0b010);
  const auto nbrs = neighbor_keys(L, ga, big_identity(F3));
  CHECK(nbrs[0] < nbrs[1]);
  CHECK(nbrs[1] < nbrs[2]);
  const std::string base = vertex_key(L, big_identity(F3));
  for (const std::string& n : nbrs) {
    const auto back = neighbor_keys(L, ga, key_to_elem(F3, n));
    CHECK((back[0] == base || back[1] == base || back[2] == base));
  }
}

TEST_CASE("component construction") {
  const Graph k33 = build_component(F1, 0);
  CHECK(k33.num_vertices() == 6);
  CHECK(k33.num_edges() == 9);
  int parts[2] = {0, 0};
  for (auto p : k33.part) ++parts[p];
  CHECK(parts[0] == 3);
  CHECK(parts[1] == 3);

  CHECK(build_component(F2, 0b10).num_vertices() == 20);
  CHECK(build_component(F2, 0).num_vertices() == 6);
  CHECK_THROWS_AS(build_component(F3, 0b010, 1000), CapExceeded);
}

TEST_CASE("vertex counts and components") {
  CHECK(total_vertices(F1) == 12);
  CHECK(total_vertices(F3) == 84672);
  CHECK(total_vertices(Field::with_default_modulus(4)) == 5548800);
  CHECK(component_count(F1, 0) == 2);
  CHECK(component_count(F2, 0) == 200);
  CHECK(component_count(F2, 0b10) == 60);
}

TEST_CASE("edge export format") {
  const Graph g = build_component(F1, 0);
  std::ostringstream os;
  export_edges(g, os);
  std::istringstream is(os.str());
  std::string header;
  std::getline(is, header);
  CHECK(header == "# gamma f=1 alpha=0x0 poly=0x2 vertices=6 edges=9");
  int lines = 0;
  unsigned prev_u = 0, prev_v = 0;
  unsigned u, v;
  while (is >> u >> v) {
    CHECK(u < v);
    CHECK(std::make_pair(prev_u, prev_v) < std::make_pair(u, v));
    prev_u = u;
    prev_v = v;
    ++lines;
  }
  CHECK(lines == 9);
}

TEST_CASE("id lookup") {
  const Graph g = build_component(F1, 0);
  CHECK(g.id_of(g.keys[3]) == 3);
  CHECK_THROWS_AS(g.id_of("not a key"), VertexEscapesComponent);
}
