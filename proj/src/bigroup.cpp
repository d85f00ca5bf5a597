#include "gamma/bigroup.hpp"

#include <algorithm>
#include <unordered_set>

#include "gamma/errors.hpp"

namespace gam {

void BigElem::append_key(std::string& out) const {
  x.append_key(out);
  y.append_key(out);
  out.push_back(char(eps));
}

std::string BigElem::key() const {
  std::string k;
  k.reserve(8 * x.field().fel_bytes() + 1);
  append_key(k);
  return k;
}

std::string BigElem::str() const {
  return "(" + x.str() + ", " + y.str() + "; pi^" + std::to_string(int(eps)) +
         ")";
}

BigElem big_elem(const GroupElem2& x, const GroupElem2& y, int eps) {
  if (x.field() != y.field()) throw FieldMismatch();
  return {x, y, std::uint8_t(eps & 1)};
}

BigElem big_identity(const Field& F) {
  return {GroupElem2::identity(F), GroupElem2::identity(F), 0};
}

BigElem big_pi(const Field& F) {
  return {GroupElem2::identity(F), GroupElem2::identity(F), 1};
}

BigElem big_mul(const BigElem& g, const BigElem& h) {
  if (g.x.field() != h.x.field()) throw FieldMismatch();
  const GroupElem2& hx = g.eps ? h.y : h.x;
  const GroupElem2& hy = g.eps ? h.x : h.y;
  return {mul(g.x, hx), mul(g.y, hy), std::uint8_t(g.eps ^ h.eps)};
}

BigElem big_inv(const BigElem& g) {
  if (g.eps == 0) return {inv(g.x), inv(g.y), 0};
  return {inv(g.y), inv(g.x), 1};
}

BigElem g_alpha(const Field& F, Fel alpha) {
  const GroupElem2 u = u_elem(F, alpha);
  return {u, mul(u, elem_b(F)), 1};
}

LGroup::LGroup(const Field& F) {
  const BigElem aa = big_elem(elem_a(F), elem_a(F), 0);
  const BigElem bb = big_elem(elem_b(F), elem_b(F), 0);
  std::unordered_set<std::string> seen;
  elems_.push_back(big_identity(F));
  seen.insert(elems_[0].key());
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const BigElem e = elems_[i];
    for (const BigElem* g : {&aa, &bb}) {
      BigElem p = big_mul(e, *g);
      if (seen.insert(p.key()).second) elems_.push_back(p);
    }
  }
  if (elems_.size() != 6) throw StructureViolation("|L| != 6");
  int n2 = 0, n3 = 0;
  for (const auto& e : elems_) {
    const int o = e.is_identity() ? 1 : order(e.x);
    n2 += o == 2;
    n3 += o == 3;
  }
  if (n2 != 3 || n3 != 2) throw StructureViolation("L is not S3");
  std::sort(elems_.begin(), elems_.end(),
            [](const BigElem& a, const BigElem& b) { return a.key() < b.key(); });
}

bool double_coset_symmetric(const Field& F, Fel alpha) {
  const LGroup L(F);
  const BigElem ga = g_alpha(F, alpha);
  const BigElem gi = big_inv(ga);
  for (const auto& l1 : L.elements())
    for (const auto& l2 : L.elements())
      if (big_mul(big_mul(l1, ga), l2) == gi) return true;
  return false;
}

std::uint64_t big_closure_size(const std::vector<BigElem>& gens,
                               std::size_t cap) {
  if (gens.empty()) return 0;
  std::vector<BigElem> elems{big_identity(gens[0].x.field())};
  std::unordered_set<std::string> seen{elems[0].key()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const BigElem e = elems[i];
    for (const BigElem& g : gens) {
      BigElem p = big_mul(e, g);
      if (seen.insert(p.key()).second) {
        elems.push_back(p);
        if (elems.size() > cap) throw CapExceeded("big closure");
      }
    }
  }
  return elems.size();
}

std::uint64_t sigma_group_order(const Field& F, Fel alpha) {
  if (F.degree() > 3) throw CapExceeded("sigma_group_order needs f <= 3");
  const LGroup L(F);
  std::vector<BigElem> gens = L.elements();
  gens.push_back(g_alpha(F, alpha));
  return big_closure_size(gens);
}

std::uint64_t big_group_order_by_closure(const Field& F) {
  if (F.degree() > 3) throw CapExceeded("group order closure needs f <= 3");
  const GroupElem2 id = GroupElem2::identity(F);
  std::vector<BigElem> gens{big_elem(elem_a(F), id, 0),
                            big_elem(elem_b(F), id, 0), big_pi(F)};
  if (F.degree() >= 2) {
    // u_alpha for a field generator makes the first factor all of T.
    for (Fel a = 2; a < F.order(); ++a)
      if (F.is_generator(a)) {
        gens.push_back(big_elem(u_elem(F, a), id, 0));
        break;
      }
  }
  return big_closure_size(gens);
}

std::uint64_t big_group_order_formula(int f) {
  if (f < 1 || f > 10) throw CapExceeded("|G| exceeds 64 bits past f=10");
  const std::uint64_t q2 = (std::uint64_t(1) << (2 * f)) - 1;
  return (std::uint64_t(1) << (2 * f + 1)) * q2 * q2;
}

std::uint64_t psl2_order_formula(int e) {
  return (std::uint64_t(1) << e) * ((std::uint64_t(1) << (2 * e)) - 1);
}

}  // namespace gam
