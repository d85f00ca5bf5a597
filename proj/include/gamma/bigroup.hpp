#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gamma/psl2.hpp"

namespace gam {

/// Element (x, y, eps) of G = T^2 x| <pi>, where pi swaps the two factors.
/// Multiplication: (x1,y1,e1)(x2,y2,e2) = (x1*x2', y1*y2', e1^e2) with
/// (x2',y2') swapped when e1 = 1.
struct BigElem {
  GroupElem2 x, y;
  std::uint8_t eps = 0;

  /// key(x) || key(y) || eps byte; total order is lexicographic on this.
  std::string key() const;
  void append_key(std::string& out) const;
  std::string str() const;  // "(t[..], t[..]; pi^eps)"
  bool is_identity() const {
    return eps == 0 && x.is_identity() && y.is_identity();
  }
  bool operator==(const BigElem& o) const {
    return eps == o.eps && x == o.x && y == o.y;
  }
};

BigElem big_elem(const GroupElem2& x, const GroupElem2& y, int eps);
BigElem big_identity(const Field& F);
BigElem big_pi(const Field& F);
BigElem big_mul(const BigElem& g, const BigElem& h);
BigElem big_inv(const BigElem& g);

/// g_alpha = (u_alpha, u_alpha * b) pi.
BigElem g_alpha(const Field& F, Fel alpha);

/// L = <(a,a),(b,b)>, the six diagonal S3 elements, sorted by key.
/// Size and S3 structure are verified at construction.
class LGroup {
 public:
  explicit LGroup(const Field& F);
  const std::vector<BigElem>& elements() const { return elems_; }

 private:
  std::vector<BigElem> elems_;
};

/// Whether big_inv(g_alpha) lies in L g_alpha L (36 products). Always true.
bool double_coset_symmetric(const Field& F, Fel alpha);

/// Size of the closure of gens under right multiplication.
std::uint64_t big_closure_size(const std::vector<BigElem>& gens,
                               std::size_t cap = 30000000);

/// |<L, g_alpha>| by closure enumeration. Requires f <= 3.
std::uint64_t sigma_group_order(const Field& F, Fel alpha);

/// |G| by closure over a generating set of G. Requires f <= 3.
std::uint64_t big_group_order_by_closure(const Field& F);

/// |G| = 2^(2f+1) (2^(2f)-1)^2.
std::uint64_t big_group_order_formula(int f);
/// |PSL(2,2^e)| = 2^e (2^(2e)-1).
std::uint64_t psl2_order_formula(int e);

}  // namespace gam
