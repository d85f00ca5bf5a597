#include "gamma/psl2.hpp"

#include "gamma/errors.hpp"

namespace gam {

GroupElem2::GroupElem2(const Field& F, Fel a, Fel b, Fel c, Fel d)
    : F_(F), a_(a), b_(b), c_(c), d_(d) {
  const Fel det = F_.add(F_.mul(a_, d_), F_.mul(b_, c_));
  if (det == 0) throw SingularMatrix(str());
  if (det != 1) {
    const Fel s = F_.sqrt(F_.inv(det));
    a_ = F_.mul(a_, s);
    b_ = F_.mul(b_, s);
    c_ = F_.mul(c_, s);
    d_ = F_.mul(d_, s);
  }
}

void GroupElem2::append_key(std::string& out) const {
  F_.serialize(a_, out);
  F_.serialize(b_, out);
  F_.serialize(c_, out);
  F_.serialize(d_, out);
}

std::string GroupElem2::key() const {
  std::string k;
  k.reserve(4 * F_.fel_bytes());
  append_key(k);
  return k;
}

std::string GroupElem2::str() const {
  return "t[" + F_.to_hex(a_) + "," + F_.to_hex(b_) + "," + F_.to_hex(c_) +
         "," + F_.to_hex(d_) + "]";
}

namespace {

void check_fields(const GroupElem2& g, const GroupElem2& h) {
  if (g.field() != h.field()) throw FieldMismatch();
}

}  // namespace

// x^(gh) = (x^g)^h, so the matrix of gh is M_h * M_g.
GroupElem2 mul(const GroupElem2& g, const GroupElem2& h) {
  check_fields(g, h);
  const Field& F = g.field();
  return {F,
          F.add(F.mul(h.a(), g.a()), F.mul(h.b(), g.c())),
          F.add(F.mul(h.a(), g.b()), F.mul(h.b(), g.d())),
          F.add(F.mul(h.c(), g.a()), F.mul(h.d(), g.c())),
          F.add(F.mul(h.c(), g.b()), F.mul(h.d(), g.d()))};
}

GroupElem2 inv(const GroupElem2& g) {
  return {g.field(), g.d(), g.b(), g.c(), g.a()};
}

GroupElem2 conj(const GroupElem2& g, const GroupElem2& h) {
  // h^-1 g h, read in the matrix (left-action) sense in which the named
  // elements t_{a,b,c,d} are written; mul composes the other way round.
  return mul(mul(h, g), inv(h));
}

int order(const GroupElem2& g) {
  GroupElem2 p = g;
  int n = 1;
  while (!p.is_identity()) {
    p = mul(p, g);
    if (++n > (1 << 26)) throw CapExceeded("order()");
  }
  return n;
}

GroupElem2 elem_a(const Field& F) { return {F, 1, 1, 1, 0}; }

GroupElem2 elem_b(const Field& F) { return {F, 1, 1, 0, 1}; }

GroupElem2 u_elem(const Field& F, Fel alpha) { return {F, 1, alpha, 0, 1}; }

GroupElem2 c_elem(const Field& F, Fel alpha) {
  const Fel a1 = F.add(alpha, 1);
  return {F, a1, F.add(F.mul(alpha, a1), 1), 1, alpha};
}

GroupElem2 z_elem(const Field& F, Fel alpha) {
  if (alpha == 0) throw ZeroElement("z_elem(0)");
  return {F, F.inv(alpha), 0, 0, 1};
}

GroupElem2 frob_aut(const GroupElem2& g, int i) {
  const Field& F = g.field();
  return {F, F.frob(g.a(), i), F.frob(g.b(), i), F.frob(g.c(), i),
          F.frob(g.d(), i)};
}

ProjPoint apply(const GroupElem2& g, ProjPoint x) {
  const Field& F = g.field();
  if (x.infinite) {
    if (g.c() == 0) return ProjPoint::inf();
    return ProjPoint::of(F.mul(g.a(), F.inv(g.c())));
  }
  const Fel den = F.add(F.mul(g.c(), x.value), g.d());
  if (den == 0) return ProjPoint::inf();
  const Fel num = F.add(F.mul(g.a(), x.value), g.b());
  return ProjPoint::of(F.mul(num, F.inv(den)));
}

void SubgroupSet::insert(const GroupElem2& g) {
  if (keys_.insert(g.key()).second) elems_.push_back(g);
}

SubgroupSet SubgroupSet::generate(const std::vector<GroupElem2>& gens,
                                  std::size_t cap) {
  SubgroupSet s;
  if (gens.empty()) return s;
  s.insert(GroupElem2::identity(gens[0].field()));
  for (std::size_t i = 0; i < s.elems_.size(); ++i) {
    const GroupElem2 e = s.elems_[i];
    for (const GroupElem2& g : gens) {
      s.insert(mul(e, g));
      if (s.size() > cap) throw CapExceeded("subgroup closure");
    }
  }
  return s;
}

bool SubgroupSet::verify_closed() const {
  if (elems_.empty() || !contains(GroupElem2::identity(elems_[0].field())))
    return false;
  for (const auto& g : elems_) {
    if (!contains(inv(g))) return false;
    for (const auto& h : elems_)
      if (!contains(mul(g, h))) return false;
  }
  return true;
}

SubgroupSet centralizer(const SubgroupSet& S, const GroupElem2& g) {
  if (S.size() > 1000000) throw CapExceeded("centralizer");
  SubgroupSet out;
  for (const auto& s : S.elements())
    if (mul(s, g) == mul(g, s)) out.insert(s);
  return out;
}

SubgroupSet normalizer(const SubgroupSet& S, const SubgroupSet& H) {
  if (S.size() > 1000000) throw CapExceeded("normalizer");
  SubgroupSet out;
  for (const auto& s : S.elements()) {
    bool norm = true;
    for (const auto& h : H.elements())
      if (!H.contains(conj(h, s))) {
        norm = false;
        break;
      }
    if (norm) out.insert(s);
  }
  return out;
}

}  // namespace gam
