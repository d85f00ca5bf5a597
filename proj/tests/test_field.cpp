#include <doctest.h>

#include "gamma/errors.hpp"
#include "gamma/field.hpp"

using namespace gam;

TEST_CASE("field construction and defaults") {
  CHECK(Field::with_default_modulus(1).modulus() == 0b10);
  CHECK(Field::with_default_modulus(2).modulus() == 0b111);
  CHECK(Field::with_default_modulus(3).modulus() == 0b1011);
  CHECK(Field::with_default_modulus(4).modulus() == 0b10011);
  CHECK_THROWS_AS(Field(0, 0b10), DegreeOutOfRange);
  CHECK_THROWS_AS(Field(25, 0b10), DegreeOutOfRange);
  CHECK_THROWS_AS(Field(2, 0b110), NonIrreducible);   // x^2 + x = x(x+1)
  CHECK_THROWS_AS(Field(2, 0b101), NonIrreducible);   // x^2 + 1 = (x+1)^2
  CHECK_NOTHROW(Field(2, 0b111));
}

TEST_CASE("field parse") {
  CHECK(Field::parse("f=3").modulus() == 0b1011);
  CHECK(Field::parse("f=3,poly=0xb").modulus() == 0xb);
  CHECK(Field::parse("f=4,poly=0x13").degree() == 4);
  CHECK_THROWS_AS(Field::parse("f="), ParseError);
  CHECK_THROWS_AS(Field::parse("nope"), ParseError);
}

TEST_CASE("arithmetic in GF(4)") {
  const Field F = Field::with_default_modulus(2);
  const Fel i = 0b10;
  CHECK(F.mul(i, i) == F.add(i, 1));  // i^2 = i + 1
  CHECK(F.sqrt(F.add(i, 1)) == i);
  CHECK(F.frob(i, 1) == F.add(i, 1));
  CHECK(F.inv(i) == F.add(i, 1));
  CHECK_THROWS_AS(F.inv(0), DivisionByZero);
}

TEST_CASE("inverse and sqrt are total on nonzero elements") {
  const Field F = Field::with_default_modulus(6);
  for (Fel a = 1; a < F.order(); ++a) {
    CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.sqrt(F.mul(a, a)) == a);
  }
}

TEST_CASE("multiplicative orders") {
  const Field F8 = Field::with_default_modulus(3);
  CHECK(F8.mult_order(0b010) == 7);
  CHECK(F8.mult_order(1) == 1);
  CHECK_THROWS_AS(F8.mult_order(0), ZeroElement);

  const Field F16 = Field::with_default_modulus(4);
  const Fel k = 0b10;
  const Fel k5 = F16.pow(k, 5);
  CHECK(k5 == 0b110);
  CHECK(F16.mult_order(k5) == 3);

  // brute-force oracle
  const Field F10 = Field::with_default_modulus(10);
  for (Fel a : {Fel(2), Fel(37), Fel(1000)}) {
    std::uint64_t n = 1;
    Fel x = a;
    while (x != 1) {
      x = F10.mul(x, a);
      ++n;
    }
    CHECK(F10.mult_order(a) == n);
  }
}

TEST_CASE("subfield structure") {
  const Field F16 = Field::with_default_modulus(4);
  const Fel k = 0b10;
  CHECK(F16.subfield_degree(0) == 1);
  CHECK(F16.subfield_degree(1) == 1);
  CHECK(F16.subfield_degree(F16.pow(k, 5)) == 2);
  CHECK(F16.subfield_degree(k) == 4);
  CHECK_FALSE(F16.is_generator(F16.pow(k, 5)));
  CHECK(F16.is_generator(F16.pow(k, 3)));

  const Field F8 = Field::with_default_modulus(3);
  int gens = 0;
  for (Fel a = 0; a < F8.order(); ++a) gens += F8.is_generator(a);
  CHECK(gens == 6);
}

TEST_CASE("half Frobenius") {
  const Field F4 = Field::with_default_modulus(2);
  CHECK(F4.half_frob_fixed(0b10));
  const Field F16 = Field::with_default_modulus(4);
  CHECK(F16.half_frob_fixed(0b10));            // k^4 = k + 1
  CHECK_FALSE(F16.half_frob_fixed(0b1000));    // k^3 stays connected
  CHECK_THROWS_AS(Field::with_default_modulus(3).half_frob_fixed(2),
                  OddDegree);
}

TEST_CASE("connected alphas") {
  CHECK(Field::with_default_modulus(3).connected_alphas().size() == 6);
  CHECK(Field::with_default_modulus(4).connected_alphas().size() == 8);
  CHECK(Field::with_default_modulus(5).connected_alphas().size() == 30);
  CHECK_THROWS_AS(Field::with_default_modulus(1).connected_alphas(),
                  DegreeOutOfRange);
}

TEST_CASE("serialization helpers") {
  const Field F = Field::with_default_modulus(12);
  CHECK(F.fel_bytes() == 2);
  std::string s;
  F.serialize(0xabc, s);
  CHECK(s.size() == 2);
  CHECK(std::uint8_t(s[0]) == 0xbc);
  CHECK(std::uint8_t(s[1]) == 0x0a);
  CHECK(F.to_hex(0xabc) == "abc");
  // default modulus is the integer-smallest monic irreducible of degree 12
  CHECK(Field::irreducible(F.modulus(), 12));
  for (std::uint32_t p = 1 << 12; p < F.modulus(); ++p)
    CHECK_FALSE(Field::irreducible(p, 12));
  CHECK(F.spec_string() == "f=12,poly=0x" + F.to_hex(Fel(F.modulus())));
}

TEST_CASE("factorize") {
  const auto f = factorize(4095);  // 3^2 * 5 * 7 * 13
  REQUIRE(f.size() == 4);
  CHECK(f[0] == std::pair<std::uint64_t, int>{3, 2});
  CHECK(f[1] == std::pair<std::uint64_t, int>{5, 1});
  CHECK(f[2] == std::pair<std::uint64_t, int>{7, 1});
  CHECK(f[3] == std::pair<std::uint64_t, int>{13, 1});
  // 2^23 - 1 = 47 * 178481, cofactor above the trial-division bound
  const auto g = factorize((1u << 23) - 1);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == std::pair<std::uint64_t, int>{47, 1});
  CHECK(g[1] == std::pair<std::uint64_t, int>{178481, 1});
}
