#pragma once

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "gamma/field.hpp"

namespace gam {

/// Point of the projective line GF(2^f) u {oo} acted on by PSL(2,2^f).
struct ProjPoint {
  bool infinite = false;
  Fel value = 0;

  static ProjPoint inf() { return {true, 0}; }
  static ProjPoint of(Fel v) { return {false, v}; }
  bool operator==(const ProjPoint&) const = default;
};

/// Element of T = PSL(2,2^f) as the canonical determinant-1 representative
/// of its projective matrix class. In characteristic 2 squaring is bijective
/// and the center is trivial, so this representative is unique.
///
/// Group composition convention: elements act on the right, x^(gh) = (x^g)^h.
class GroupElem2 {
 public:
  /// Canonicalizes by scaling all entries with sqrt(inv(det)).
  GroupElem2(const Field& F, Fel a, Fel b, Fel c, Fel d);
  static GroupElem2 identity(const Field& F) { return {F, 1, 0, 0, 1}; }

  const Field& field() const { return F_; }
  Fel a() const { return a_; }
  Fel b() const { return b_; }
  Fel c() const { return c_; }
  Fel d() const { return d_; }

  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

  /// 4*ceil(f/8) bytes, entries a,b,c,d little-endian each.
  std::string key() const;
  void append_key(std::string& out) const;
  std::string str() const;  // "t[a,b,c,d]" in hex

  bool operator==(const GroupElem2& o) const {
    return F_ == o.F_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  }

 private:
  Field F_;
  Fel a_, b_, c_, d_;
};

GroupElem2 mul(const GroupElem2& g, const GroupElem2& h);
GroupElem2 inv(const GroupElem2& g);
/// g^h = h^-1 g h.
GroupElem2 conj(const GroupElem2& g, const GroupElem2& h);
int order(const GroupElem2& g);

/// a = t_{1,1,1,0} (order 3) and b = t_{1,1,0,1} (order 2), generating
/// H = PSL(2,2) = S3.
GroupElem2 elem_a(const Field& F);
GroupElem2 elem_b(const Field& F);
/// u_alpha = t_{1,alpha,0,1}: x -> x + alpha.
GroupElem2 u_elem(const Field& F, Fel alpha);
/// c_alpha = a^{u_alpha} = t_{alpha+1, alpha^2+alpha+1, 1, alpha}.
GroupElem2 c_elem(const Field& F, Fel alpha);
/// z_alpha = t_{alpha^-1,0,0,1}, alpha != 0.
GroupElem2 z_elem(const Field& F, Fel alpha);

/// Entrywise a -> a^(2^i); the Frobenius automorphism of T.
GroupElem2 frob_aut(const GroupElem2& g, int i);

/// Moebius action with oo -> a/c and division by zero -> oo.
ProjPoint apply(const GroupElem2& g, ProjPoint x);

/// A finite subset of T closed under multiplication and inverse, in
/// deterministic (breadth-first discovery) order.
class SubgroupSet {
 public:
  /// Closure of gens under right multiplication, BFS from the identity.
  static SubgroupSet generate(const std::vector<GroupElem2>& gens,
                              std::size_t cap = 20000000);

  std::size_t size() const { return elems_.size(); }
  const std::vector<GroupElem2>& elements() const { return elems_; }
  bool contains(const GroupElem2& g) const { return keys_.count(g.key()) > 0; }
  bool verify_closed() const;

 private:
  SubgroupSet() = default;
  void insert(const GroupElem2& g);

  std::vector<GroupElem2> elems_;
  std::unordered_set<std::string> keys_;

  friend SubgroupSet centralizer(const SubgroupSet&, const GroupElem2&);
  friend SubgroupSet normalizer(const SubgroupSet&, const SubgroupSet&);
};

/// {s in S : sg = gs}. Brute force, |S| <= 10^6.
SubgroupSet centralizer(const SubgroupSet& S, const GroupElem2& g);
/// {s in S : s^-1 H s = H}. Brute force, |S| <= 10^6.
SubgroupSet normalizer(const SubgroupSet& S, const SubgroupSet& H);

}  // namespace gam
