#include <doctest.h>

#include "gamma/bigroup.hpp"
#include "gamma/errors.hpp"

using namespace gam;

namespace {
const Field F3 = Field::with_default_modulus(3);
}

TEST_CASE("semidirect product law") {
  const GroupElem2 x = elem_a(F3), y = u_elem(F3, 0b010);
  const BigElem g = big_elem(x, y, 1);
  CHECK(big_mul(g, g) == big_elem(mul(x, y), mul(y, x), 0));
  CHECK(big_mul(g, big_inv(g)) == big_identity(F3));
  CHECK(big_mul(big_inv(g), g) == big_identity(F3));
  CHECK(big_mul(big_pi(F3), big_pi(F3)) == big_identity(F3));
  // pi conjugation swaps the coordinates
  const BigElem t = big_elem(x, y, 0);
  CHECK(big_mul(big_mul(big_pi(F3), t), big_pi(F3)) == big_elem(y, x, 0));
}

TEST_CASE("g_alpha") {
  for (Fel al = 0; al < F3.order(); ++al) {
    const BigElem g = g_alpha(F3, al);
    CHECK(g.eps == 1);
    CHECK(g.x == u_elem(F3, al));
    CHECK(g.y == u_elem(F3, F3.add(al, 1)));  // u_alpha b = u_{alpha+1}
    CHECK(big_inv(g) == big_mul(g, big_elem(elem_b(F3), elem_b(F3), 0)));
    CHECK(big_mul(big_mul(g, g), big_elem(elem_b(F3), elem_b(F3), 0))
              .is_identity());
    CHECK(double_coset_symmetric(F3, al));
  }
}

TEST_CASE("L is the diagonal S3") {
  const LGroup L(F3);
  CHECK(L.elements().size() == 6);
  for (const BigElem& l : L.elements()) {
    CHECK(l.eps == 0);
    CHECK(l.x == l.y);
    // centralized by pi
    CHECK(big_mul(big_mul(big_inv(big_pi(F3)), l), big_pi(F3)) == l);
  }
}

TEST_CASE("group orders") {
  CHECK(psl2_order_formula(1) == 6);
  CHECK(psl2_order_formula(2) == 60);
  CHECK(psl2_order_formula(3) == 504);
  CHECK(psl2_order_formula(4) == 4080);
  CHECK(big_group_order_formula(1) == 72);
  CHECK(big_group_order_formula(3) == 508032);
  CHECK_THROWS_AS(big_group_order_formula(11), CapExceeded);

  const Field F1 = Field::with_default_modulus(1);
  CHECK(big_group_order_by_closure(F1) == 72);
  CHECK(sigma_group_order(F1, 0) == 36);
  const Field F2 = Field::with_default_modulus(2);
  CHECK(sigma_group_order(F2, 0b10) == 120);
}

TEST_CASE("key layout") {
  const BigElem g = g_alpha(F3, 0b010);
  CHECK(g.key().size() == 9);
  CHECK(g.key().back() == char(1));
  CHECK_THROWS_AS(
      big_elem(elem_a(F3), elem_a(Field::with_default_modulus(2)), 0),
      FieldMismatch);
}
