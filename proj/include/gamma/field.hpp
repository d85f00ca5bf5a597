#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gam {

/// Element of GF(2^f) as an f-bit mask: bit i = coefficient of x^i in the
/// polynomial-basis representative.
using Fel = std::uint32_t;

/// A concrete field GF(2^f), 1 <= f <= 24, fixed by its degree and a monic
/// irreducible modulus polynomial over GF(2).
///
/// Immutable value type; all operations are pure.
class Field {
 public:
  /// Validates degree range, monicity and irreducibility of the modulus.
  Field(int degree, std::uint32_t modulus);

  /// Default modulus: x^2+x+1, x^3+x+1, x^4+x+1 for f = 2, 3, 4 and the
  /// integer-smallest monic irreducible of degree f otherwise.
  static Field with_default_modulus(int degree);

  /// Parses "f=<int>" or "f=<int>,poly=0x<hex>".
  static Field parse(const std::string& spec);

  int degree() const { return f_; }
  std::uint32_t modulus() const { return mod_; }
  std::uint64_t order() const { return std::uint64_t(1) << f_; }
  std::size_t fel_bytes() const { return std::size_t(f_ + 7) / 8; }

  Fel add(Fel a, Fel b) const { return a ^ b; }
  Fel mul(Fel a, Fel b) const;
  Fel inv(Fel a) const;  // throws DivisionByZero for 0
  Fel pow(Fel a, std::uint64_t n) const;
  /// The unique square root, a^(2^(f-1)).
  Fel sqrt(Fel a) const { return frob(a, f_ - 1); }
  /// a^(2^i) by i-fold squaring.
  Fel frob(Fel a, int i) const;

  /// Least n >= 1 with a^n = 1, via the factorization of 2^f - 1.
  std::uint64_t mult_order(Fel a) const;  // throws ZeroElement
  /// Least divisor e of f with mult_order(a) | 2^e - 1; 1 for a in {0,1}.
  int subfield_degree(Fel a) const;
  bool is_generator(Fel a) const { return subfield_degree(a) == f_; }
  /// Whether a^(2^(f/2)) = a + 1. Requires f even.
  bool half_frob_fixed(Fel a) const;
  /// All alpha yielding a connected graph: generators, and for even f those
  /// with half_frob_fixed false. Ascending bitmask order. Requires f >= 2.
  std::vector<Fel> connected_alphas() const;

  std::string to_hex(Fel a) const;  // lowercase, msb nibble first
  void serialize(Fel a, std::string& out) const;  // fel_bytes() little-endian
  std::string spec_string() const;  // "f=<f>,poly=0x<hex>"

  bool operator==(const Field& o) const = default;

  static bool irreducible(std::uint32_t poly, int degree);

 private:
  int f_;
  std::uint32_t mod_;
};

/// Complete prime factorization, valid for n < 2^24 (trial division to 2^12
/// leaves a cofactor that is automatically prime at this size).
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

}  // namespace gam
