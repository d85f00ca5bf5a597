#include "gamma/field.hpp"

#include <algorithm>
#include <cstdio>

#include "gamma/errors.hpp"

namespace gam {

namespace {

int poly_degree(std::uint64_t p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

// Remainder of a modulo m in GF(2)[x].
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = poly_degree(m);
  for (int d = poly_degree(a); d >= dm; --d)
    if (a >> d & 1) a ^= m << (d - dm);
  return a;
}

}  // namespace

bool Field::irreducible(std::uint32_t poly, int degree) {
  if (poly_degree(poly) != degree) return false;
  if (degree == 1) return true;
  for (int d = 1; d <= degree / 2; ++d)
    for (std::uint64_t div = std::uint64_t(1) << d;
         div < (std::uint64_t(2) << d); ++div)
      if (poly_mod(poly, div) == 0) return false;
  return true;
}

Field::Field(int degree, std::uint32_t modulus) : f_(degree), mod_(modulus) {
  if (degree < 1 || degree > 24)
    throw DegreeOutOfRange("f must be in [1,24], got " + std::to_string(degree));
  if (poly_degree(modulus) != degree)
    throw NonIrreducible("modulus is not monic of degree " +
                         std::to_string(degree));
  if (!irreducible(modulus, degree))
    throw NonIrreducible("modulus 0x" + to_hex(Fel(modulus)) + " factors");
}

Field Field::with_default_modulus(int degree) {
  switch (degree) {
    case 2:
      return Field(2, 0b111);     // x^2+x+1
    case 3:
      return Field(3, 0b1011);    // x^3+x+1
    case 4:
      return Field(4, 0b10011);   // x^4+x+1
    default:
      break;
  }
  if (degree < 1 || degree > 24)
    throw DegreeOutOfRange("f must be in [1,24], got " + std::to_string(degree));
  for (std::uint32_t m = std::uint32_t(1) << degree;; ++m)
    if (irreducible(m, degree)) return Field(degree, m);
}

Field Field::parse(const std::string& spec) {
  int f = 0;
  unsigned long poly = 0;
  if (std::sscanf(spec.c_str(), "f=%d,poly=0x%lx", &f, &poly) == 2)
    return Field(f, std::uint32_t(poly));
  if (std::sscanf(spec.c_str(), "f=%d", &f) == 1 &&
      spec.find(',') == std::string::npos)
    return with_default_modulus(f);
  throw ParseError("bad field spec '" + spec + "', want f=<int>[,poly=0x<hex>]");
}

Fel Field::mul(Fel a, Fel b) const {
  std::uint64_t acc = 0;
  std::uint64_t x = a;
  for (std::uint64_t y = b; y; y >>= 1, x <<= 1)
    if (y & 1) acc ^= x;
  for (int d = 2 * f_ - 2; d >= f_; --d)
    if (acc >> d & 1) acc ^= std::uint64_t(mod_) << (d - f_);
  return Fel(acc);
}

Fel Field::pow(Fel a, std::uint64_t n) const {
  Fel r = 1;
  Fel base = a;
  while (n) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

Fel Field::inv(Fel a) const {
  if (a == 0) throw DivisionByZero("inv(0)");
  return pow(a, order() - 2);
}

Fel Field::frob(Fel a, int i) const {
  for (; i > 0; --i) a = mul(a, a);
  return a;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> fs;
  for (std::uint64_t p = 2; p <= 4096 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) fs.emplace_back(p, e);
  }
  if (n > 1) fs.emplace_back(n, 1);
  return fs;
}

std::uint64_t Field::mult_order(Fel a) const {
  if (a == 0) throw ZeroElement("mult_order(0)");
  std::uint64_t n = order() - 1;
  for (const auto& [p, e] : factorize(n))
    for (int i = 0; i < e && pow(a, n / p) == 1; ++i) n /= p;
  return n;
}

int Field::subfield_degree(Fel a) const {
  if (a <= 1) return 1;
  const std::uint64_t ord = mult_order(a);
  for (int e = 1; e <= f_; ++e)
    if (f_ % e == 0 && ((std::uint64_t(1) << e) - 1) % ord == 0) return e;
  return f_;  // unreachable
}

bool Field::half_frob_fixed(Fel a) const {
  if (f_ % 2) throw OddDegree("half_frob_fixed needs even f");
  return frob(a, f_ / 2) == add(a, 1);
}

std::vector<Fel> Field::connected_alphas() const {
  if (f_ < 2) throw DegreeOutOfRange("connected_alphas needs f >= 2");
  std::vector<Fel> out;
  for (Fel a = 0; a < order(); ++a)
    if (is_generator(a) && (f_ % 2 == 1 || !half_frob_fixed(a)))
      out.push_back(a);
  return out;
}

std::string Field::to_hex(Fel a) const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%x", unsigned(a));
  return buf;
}

void Field::serialize(Fel a, std::string& out) const {
  for (std::size_t i = 0; i < fel_bytes(); ++i)
    out.push_back(char((a >> (8 * i)) & 0xff));
}

std::string Field::spec_string() const {
  return "f=" + std::to_string(f_) + ",poly=0x" + to_hex(Fel(mod_));
}

}  // namespace gam
