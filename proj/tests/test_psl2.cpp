#include <doctest.h>

#include "gamma/errors.hpp"
#include "gamma/psl2.hpp"

using namespace gam;

namespace {
const Field F2 = Field::with_default_modulus(2);
const Field F3 = Field::with_default_modulus(3);
}  // namespace

TEST_CASE("canonicalization") {
  const Fel i = 0b10;
  CHECK(GroupElem2(F2, i, 0, 0, i) == GroupElem2::identity(F2));
  const Fel j = 0b010;
  const GroupElem2 g(F3, j, 0, 0, 1);  // det j; scale by sqrt(j^-1) = j^3
  CHECK(g.a() == F3.pow(j, 4));
  CHECK(g.d() == F3.pow(j, 3));
  CHECK_THROWS_AS(GroupElem2(F2, 1, 1, 1, 1), SingularMatrix);
  // projective invariance under any nonzero scalar
  for (Fel l = 1; l < F2.order(); ++l)
    CHECK(GroupElem2(F2, l, l, F2.mul(l, i), 0) == GroupElem2(F2, 1, 1, i, 0));
}

TEST_CASE("named elements and their relations") {
  CHECK(order(elem_a(F3)) == 3);
  CHECK(order(elem_b(F3)) == 2);
  CHECK(u_elem(F3, 0) == GroupElem2::identity(F3));
  CHECK(u_elem(F3, 1) == elem_b(F3));
  for (Fel al = 0; al < F3.order(); ++al) {
    CHECK(conj(elem_a(F3), u_elem(F3, al)) == c_elem(F3, al));
    const GroupElem2 c = c_elem(F3, al);
    CHECK(c.a() == F3.add(al, 1));
    CHECK(c.b() == F3.add(F3.mul(al, F3.add(al, 1)), 1));
    CHECK(c.c() == 1);
    CHECK(c.d() == al);
    for (Fel be = 0; be < F3.order(); ++be)
      CHECK(mul(u_elem(F3, al), u_elem(F3, be)) ==
            u_elem(F3, F3.add(al, be)));
    if (al != 0) {
      CHECK(conj(elem_b(F3), z_elem(F3, al)) == u_elem(F3, al));
      CHECK(std::uint64_t(order(z_elem(F3, al))) == F3.mult_order(al));
    }
  }
  CHECK_THROWS_AS(z_elem(F3, 0), ZeroElement);
}

TEST_CASE("moebius action") {
  const GroupElem2 b = elem_b(F3);
  CHECK(apply(b, ProjPoint::of(0b101)) == ProjPoint::of(0b100));
  CHECK(apply(b, ProjPoint::inf()) == ProjPoint::inf());
  CHECK(apply(elem_a(F3), ProjPoint::of(0)) == ProjPoint::inf());
  CHECK(apply(GroupElem2::identity(F3), ProjPoint::of(3)) == ProjPoint::of(3));
}

TEST_CASE("matrix product matches right-action composition") {
  const auto T = SubgroupSet::generate({elem_a(F2), elem_b(F2), u_elem(F2, 2)});
  REQUIRE(T.size() == 60);
  std::vector<ProjPoint> pts{ProjPoint::inf()};
  for (Fel x = 0; x < F2.order(); ++x) pts.push_back(ProjPoint::of(x));
  for (std::size_t i = 0; i < T.size(); i += 7)
    for (std::size_t k = 0; k < T.size(); k += 11) {
      const GroupElem2 &g = T.elements()[i], &h = T.elements()[k];
      for (const ProjPoint& x : pts)
        CHECK(apply(mul(g, h), x) == apply(h, apply(g, x)));
    }
}

TEST_CASE("frobenius automorphism") {
  CHECK(frob_aut(elem_b(F2), 1) == elem_b(F2));
  const GroupElem2 c = c_elem(F2, 0b10);
  CHECK(frob_aut(c, 1) == inv(c));  // i^2 = i + 1
  const GroupElem2 c8 = c_elem(F3, 0b010);
  CHECK_FALSE(frob_aut(c8, 1) == inv(c8));
}

TEST_CASE("subgroup generation") {
  CHECK(SubgroupSet::generate({elem_a(F3), elem_b(F3)}).size() == 6);
  CHECK(SubgroupSet::generate({elem_a(F3), elem_b(F3), u_elem(F3, 0b010)})
            .size() == 504);
  const Field F4 = Field::with_default_modulus(4);
  CHECK(SubgroupSet::generate(
            {elem_a(F4), elem_b(F4), u_elem(F4, F4.pow(2, 5))})
            .size() == 60);
  const auto H = SubgroupSet::generate({elem_a(F3), elem_b(F3)});
  CHECK(H.verify_closed());
  CHECK(H.contains(mul(elem_a(F3), elem_b(F3))));
}

TEST_CASE("centralizer and normalizer") {
  const auto T = SubgroupSet::generate({elem_a(F2), elem_b(F2), u_elem(F2, 2)});
  const auto C = centralizer(T, elem_b(F2));
  CHECK(C.size() == 4);
  for (const auto& g : C.elements()) {
    CHECK(g.a() == 1);
    CHECK(g.c() == 0);
  }
  const auto H = SubgroupSet::generate({elem_a(F2), elem_b(F2)});
  const auto N = normalizer(T, H);
  CHECK(N.size() == 6);
  CHECK(centralizer(H, elem_b(F2)).size() == 2);
}

TEST_CASE("keys are canonical and invertible in spirit") {
  const GroupElem2 g(F3, 1, 0b011, 0, 1);
  CHECK(g.key().size() == 4);
  CHECK(g.key() != GroupElem2::identity(F3).key());
  CHECK(g.str() == "t[1,3,0,1]");
}
