#include "gamma/suites.hpp"

#include <chrono>
#include <cstdio>

#include "gamma/analysis.hpp"
#include "gamma/errors.hpp"
#include "gamma/zpfamily.hpp"

namespace gam {

namespace {

std::string str(bool b) { return b ? "true" : "false"; }
std::string str(std::uint64_t n) { return std::to_string(n); }
std::string str(int n) { return std::to_string(n); }

class Rec {
 public:
  explicit Rec(SuiteResult& r) : r_(r) {}

  template <class F>
  void claim(const std::string& id, const std::string& anchor,
             const std::string& tag, const std::string& expected, F&& f) {
    Claim c;
    c.id = id;
    c.anchor = anchor;
    c.tag = tag;
    c.expected = expected;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.measured = f();
    } catch (const Error& e) {
      c.measured = std::string("exception: ") + e.what();
    }
    c.ms = std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
               .count();
    c.pass = c.measured == c.expected;
    r_.claims.push_back(std::move(c));
  }

  /// Informational: recorded, never failing.
  template <class F>
  void report(const std::string& id, const std::string& anchor, F&& f) {
    claim(id, anchor, "reported", "", std::forward<F>(f));
    r_.claims.back().expected = r_.claims.back().measured;
    r_.claims.back().pass = true;
  }

 private:
  SuiteResult& r_;
};

std::vector<int> prime_divisors(int f) {
  std::vector<int> ps;
  for (int p = 2, n = f; n > 1; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  return ps;
}

/// Generator test by Frobenius fixed points: a generates GF(2^f) iff
/// a^(2^(f/p)) != a for every prime p | f. When `connected` is non-null
/// (even f), also counts generators with a^(2^(f/2)) != a + 1.
std::uint64_t count_generators(const Field& F, std::uint64_t* connected) {
  const int f = F.degree();
  const auto ps = prime_divisors(f);
  std::uint64_t gens = 0, conn = 0;
  for (Fel a = 0; a < F.order(); ++a) {
    bool gen = true;
    Fel fr_half = 0;
    for (int p : ps) {
      const Fel fr = F.frob(a, f / p);
      if (p == 2) fr_half = fr;
      if (fr == a) {
        gen = false;
        break;
      }
    }
    if (!gen) continue;
    ++gens;
    if (f % 2 == 0 && fr_half != F.add(a, 1)) ++conn;
  }
  if (connected) *connected = conn;
  return gens;
}

Fel smallest_generator(const Field& F) {
  for (Fel a = 2; a < F.order(); ++a)
    if (F.is_generator(a)) return a;
  throw ZeroElement("field has no generator outside GF(2)");
}

SuiteResult field_suite(const SuiteOptions&) {
  SuiteResult r{"field"};
  Rec rec(r);

  rec.claim("gen-equiv",
            "mult_order(a) | 2^e-1 iff subfield_degree(a) divides e, "
            "exhaustive for f <= 8 and all divisors e of f",
            "derived", "0 violations", [&] {
              std::uint64_t v = 0;
              for (int f = 1; f <= 8; ++f) {
                const Field F = Field::with_default_modulus(f);
                for (Fel a = 1; a < F.order(); ++a) {
                  const std::uint64_t n = F.mult_order(a);
                  for (int e = 1; e <= f; ++e) {
                    if (f % e) continue;
                    const bool divides =
                        (((std::uint64_t(1) << e) - 1) % n) == 0;
                    v += divides != (e % F.subfield_degree(a) == 0);
                  }
                }
              }
              return str(v) + " violations";
            });

  rec.claim("frob-displacement",
            "for a generator alpha and 0 < i < f: alpha^(2^i) != alpha, and "
            "alpha^(2^i) = alpha+1 only for even f at i = f/2 (f <= 8)",
            "derived", "0 violations", [&] {
              std::uint64_t v = 0;
              for (int f = 2; f <= 8; ++f) {
                const Field F = Field::with_default_modulus(f);
                for (Fel a = 0; a < F.order(); ++a) {
                  if (!F.is_generator(a)) continue;
                  for (int i = 1; i < f; ++i) {
                    const Fel fr = F.frob(a, i);
                    if (fr == a) ++v;
                    if (fr == F.add(a, 1) && !(f % 2 == 0 && i == f / 2)) ++v;
                  }
                }
              }
              return str(v) + " violations";
            });

  rec.claim("gf8-generators", "GF(8) has exactly 6 generators", "frozen", "6",
            [&] {
              const Field F = Field::with_default_modulus(3);
              std::uint64_t n = 0;
              for (Fel a = 0; a < F.order(); ++a) n += F.is_generator(a);
              return str(n);
            });

  rec.claim("gen-count-crosscheck",
            "Frobenius-fixed-point generator count matches the "
            "subfield_degree count for f <= 12",
            "derived", "match", [&] {
              for (int f = 2; f <= 12; ++f) {
                const Field F = Field::with_default_modulus(f);
                std::uint64_t direct = 0;
                for (Fel a = 0; a < F.order(); ++a)
                  direct += F.is_generator(a);
                if (direct != count_generators(F, nullptr))
                  return std::string("mismatch at f=") + str(f);
              }
              return std::string("match");
            });

  rec.claim("generator-count-bound",
            "number of generators of GF(2^f) exceeds 2^(f-1) for 3 <= f <= 20",
            "derived", "all satisfied", [&] {
              for (int f = 3; f <= 20; ++f) {
                const Field F = Field::with_default_modulus(f);
                if (count_generators(F, nullptr) <= (std::uint64_t(1) << (f - 1)))
                  return std::string("fails at f=") + str(f);
              }
              return std::string("all satisfied");
            });

  rec.claim("connected-count-bound",
            "for even f = 2l, generators with a^(2^l) != a+1 exceed "
            "2^l(2^(l-1)-1), 4 <= f <= 20",
            "derived", "all satisfied", [&] {
              for (int f = 4; f <= 20; f += 2) {
                const Field F = Field::with_default_modulus(f);
                const int l = f / 2;
                std::uint64_t conn = 0;
                count_generators(F, &conn);
                const std::uint64_t bound = (std::uint64_t(1) << l) *
                                            ((std::uint64_t(1) << (l - 1)) - 1);
                if (conn <= bound) return std::string("fails at f=") + str(f);
              }
              return std::string("all satisfied");
            });

  return r;
}

SuiteResult group_suite(const SuiteOptions&) {
  SuiteResult r{"group"};
  Rec rec(r);

  rec.claim("named-orders", "order(a) = 3, order(b) = 2, |<a,b>| = 6",
            "frozen", "3,2,6", [&] {
              const Field F = Field::with_default_modulus(2);
              const auto H =
                  SubgroupSet::generate({elem_a(F), elem_b(F)});
              return str(order(elem_a(F))) + "," + str(order(elem_b(F))) +
                     "," + str(std::uint64_t(H.size()));
            });

  rec.claim("centralizer-of-b",
            "the centralizer of b in PSL(2,2^f) is {u_alpha}, of size 2^f "
            "(f <= 3)",
            "derived", "ok", [&] {
              for (int f = 1; f <= 3; ++f) {
                const Field F = Field::with_default_modulus(f);
                std::vector<GroupElem2> gens{elem_a(F), elem_b(F)};
                if (f >= 2) gens.push_back(u_elem(F, smallest_generator(F)));
                const auto T = SubgroupSet::generate(gens);
                if (T.size() != psl2_order_formula(f))
                  return std::string("|T| wrong at f=") + str(f);
                const auto C = centralizer(T, elem_b(F));
                if (C.size() != F.order())
                  return std::string("|C| wrong at f=") + str(f);
                for (const auto& g : C.elements())
                  if (!(g.a() == 1 && g.c() == 0 && g.d() == 1))
                    return std::string("non-translation at f=") + str(f);
              }
              return std::string("ok");
            });

  rec.claim("normalizer-of-H",
            "the normalizer of H = <a,b> in PSL(2,2^f) is H itself (f <= 3)",
            "derived", "ok", [&] {
              for (int f = 1; f <= 3; ++f) {
                const Field F = Field::with_default_modulus(f);
                std::vector<GroupElem2> gens{elem_a(F), elem_b(F)};
                if (f >= 2) gens.push_back(u_elem(F, smallest_generator(F)));
                const auto T = SubgroupSet::generate(gens);
                const auto H = SubgroupSet::generate({elem_a(F), elem_b(F)});
                const auto N = normalizer(T, H);
                if (N.size() != 6) return std::string("|N| != 6 at f=") + str(f);
                for (const auto& h : H.elements())
                  if (!N.contains(h)) return std::string("H not in N");
              }
              return std::string("ok");
            });

  rec.claim("z-element",
            "u_alpha = b^(z_alpha) and order(z_alpha) = mult_order(alpha), "
            "all alpha != 0, f <= 4",
            "derived", "ok", [&] {
              for (int f = 1; f <= 4; ++f) {
                const Field F = Field::with_default_modulus(f);
                for (Fel a = 1; a < F.order(); ++a) {
                  if (!(conj(elem_b(F), z_elem(F, a)) == u_elem(F, a)))
                    return std::string("conjugation fails at f=") + str(f);
                  if (std::uint64_t(order(z_elem(F, a))) != F.mult_order(a))
                    return std::string("order fails at f=") + str(f);
                }
              }
              return std::string("ok");
            });

  rec.claim("c-inversion",
            "c_alpha^(tau^i) = c_alpha^-1 iff alpha^(2^i) = alpha+1, "
            "exhaustive f <= 6, 0 <= i < f",
            "derived", "0 violations", [&] {
              std::uint64_t v = 0;
              for (int f = 1; f <= 6; ++f) {
                const Field F = Field::with_default_modulus(f);
                for (Fel a = 0; a < F.order(); ++a) {
                  const GroupElem2 c = c_elem(F, a);
                  const GroupElem2 ci = inv(c);
                  for (int i = 0; i < f; ++i)
                    v += (frob_aut(c, i) == ci) != (F.frob(a, i) == F.add(a, 1));
                }
              }
              return str(v) + " violations";
            });

  rec.claim("subgroup-order",
            "|<H, u_alpha>| = 2^e(2^(2e)-1) with e = subfield_degree(alpha), "
            "all alpha, f <= 4",
            "derived", "ok", [&] {
              for (int f = 1; f <= 4; ++f) {
                const Field F = Field::with_default_modulus(f);
                for (Fel a = 0; a < F.order(); ++a) {
                  const auto S = SubgroupSet::generate(
                      {elem_a(F), elem_b(F), u_elem(F, a)});
                  if (S.size() != psl2_order_formula(F.subfield_degree(a)))
                    return std::string("fails at f=") + str(f) + " alpha=0x" +
                           F.to_hex(a);
                }
              }
              return std::string("ok");
            });

  return r;
}

SuiteResult construction_suite(const SuiteOptions& opt) {
  SuiteResult r{"construction"};
  Rec rec(r);

  rec.claim("group-order-closure",
            "|G| = 2^(2f+1)(2^(2f)-1)^2 by closure enumeration, f <= 3",
            "derived", "ok", [&] {
              for (int f = 1; f <= 3; ++f) {
                const Field F = Field::with_default_modulus(f);
                if (big_group_order_by_closure(F) !=
                    big_group_order_formula(f))
                  return std::string("fails at f=") + str(f);
              }
              return std::string("ok");
            });

  rec.claim("group-order-formula",
            "2^(2f+1)(2^(2f)-1)^2 = 2|PSL(2,2^f)|^2 for f <= 10", "trivial",
            "ok", [&] {
              for (int f = 1; f <= 10; ++f) {
                const std::uint64_t t = psl2_order_formula(f);
                if (big_group_order_formula(f) != 2 * t * t)
                  return std::string("fails at f=") + str(f);
              }
              return std::string("ok");
            });

  rec.claim("g-alpha-identities",
            "g^-1 = g(b,b); (a,a)^g = (c^-1,c); (b,b)^g = (b,b); "
            "g^2(b,b) = 1; L g^-1 L = L g L -- all alpha, f <= 3",
            "derived", "ok", [&] {
              for (int f = 1; f <= 3; ++f) {
                const Field F = Field::with_default_modulus(f);
                const GroupElem2 a = elem_a(F), b = elem_b(F);
                const BigElem aa = big_elem(a, a, 0), bb = big_elem(b, b, 0);
                for (Fel al = 0; al < F.order(); ++al) {
                  const BigElem g = g_alpha(F, al);
                  const GroupElem2 c = c_elem(F, al);
                  const auto cnj = [&](const BigElem& x) {
                    return big_mul(big_mul(big_inv(g), x), g);
                  };
                  if (!(big_inv(g) == big_mul(g, bb)))
                    return std::string("inverse identity fails");
                  if (!(cnj(aa) == big_elem(inv(c), c, 0)))
                    return std::string("(a,a) conjugate fails");
                  if (!(cnj(bb) == bb))
                    return std::string("(b,b) conjugate fails");
                  if (!big_mul(big_mul(g, g), bb).is_identity())
                    return std::string("g^2 (b,b) != 1");
                  if (!double_coset_symmetric(F, al))
                    return std::string("double coset not symmetric");
                }
              }
              return std::string("ok");
            });

  rec.claim("sigma-group-orders",
            "|<L, g_alpha>|: 36 at f=1; 120 at (f=2, alpha=i); |G| = 508032 "
            "at (f=3, alpha=j)",
            "frozen", "36,120,508032", [&] {
              const std::uint64_t a =
                  sigma_group_order(Field::with_default_modulus(1), 0);
              const std::uint64_t b =
                  sigma_group_order(Field::with_default_modulus(2), 2);
              const std::uint64_t c =
                  sigma_group_order(Field::with_default_modulus(3), 2);
              return str(a) + "," + str(b) + "," + str(c);
            });

  rec.claim("component-sizes",
            "base components: f=1 alpha=0 -> 6; f=2 alpha=0 -> 6, alpha=i -> "
            "20; f=3 alpha=0 -> 6, alpha=j -> 84672 (valency 3 and "
            "bipartiteness checked during construction)",
            "frozen", "6,6,20,6,84672", [&] {
              const Field F1 = Field::with_default_modulus(1);
              const Field F2 = Field::with_default_modulus(2);
              const Field F3 = Field::with_default_modulus(3);
              std::string out;
              for (const auto& [F, a] :
                   std::vector<std::pair<Field, Fel>>{
                       {F1, 0}, {F2, 0}, {F2, 2}, {F3, 0}, {F3, 2}}) {
                if (!out.empty()) out += ",";
                out += str(std::uint64_t(build_component(F, a).num_vertices()));
              }
              return out;
            });

  rec.claim("same-graph-iff",
            "Gamma(f,alpha) and Gamma(f,beta) have equal edge sets iff "
            "beta in {alpha, alpha+1}: sampled over 1000 cosets, f <= 3",
            "derived", "ok", [&] {
              const Field F2 = Field::with_default_modulus(2);
              const Field F3 = Field::with_default_modulus(3);
              const struct {
                const Field& F;
                Fel a, b;
                bool want;
              } cases[] = {{F2, 2, 3, true},  {F2, 0, 1, true},
                           {F2, 0, 2, false}, {F3, 2, 3, true},
                           {F3, 2, 4, false}, {F3, 0, 1, true}};
              for (const auto& c : cases)
                if (graphs_equal_iff(c.F, c.a, c.b, 1000, opt.seed) != c.want)
                  return std::string("fails for alpha=0x") + c.F.to_hex(c.a) +
                         " beta=0x" + c.F.to_hex(c.b);
              return std::string("ok");
            });

  rec.claim("same-graph-full",
            "full component equality of Gamma(f,alpha) and Gamma(f,alpha+1) "
            "for f <= 2",
            "derived", "ok", [&] {
              for (const auto& [f, a] :
                   std::vector<std::pair<int, Fel>>{{1, 0}, {2, 0}, {2, 2}}) {
                const Field F = Field::with_default_modulus(f);
                const Graph g1 = build_component(F, a);
                const Graph g2 = build_component(F, F.add(a, 1));
                if (g1.keys != g2.keys || g1.adj != g2.adj)
                  return std::string("differs at f=") + str(f);
              }
              return std::string("ok");
            });

  return r;
}

SuiteResult f1_suite(const SuiteOptions& opt) {
  SuiteResult r{"f1"};
  Rec rec(r);
  const Field F = Field::with_default_modulus(1);

  rec.claim("component-is-k33", "the base component of Gamma(1,0) is K_3,3",
            "frozen", "true", [&] {
              return str(small_iso(build_component(F, 0),
                                   reference_graph("K33")));
            });
  rec.claim("component-count", "Gamma(1,0) has 2 connected components",
            "frozen", "2", [&] { return str(component_count(F, 0)); });
  rec.claim("alpha-irrelevant", "Gamma(1,0) = Gamma(1,1) as edge sets",
            "derived", "true",
            [&] { return str(graphs_equal_iff(F, 0, 1, 100, opt.seed)); });
  return r;
}

SuiteResult f2_suite(const SuiteOptions& opt) {
  SuiteResult r{"f2"};
  Rec rec(r);
  const Field F = Field::with_default_modulus(2);
  const Fel i = 2;

  rec.claim("alpha0-k33",
            "Gamma(2,0) has 200 components, each K_3,3", "frozen",
            "200 x K33", [&] {
              const Graph g = build_component(F, 0);
              if (!small_iso(g, reference_graph("K33")))
                return std::string("component not K33");
              return str(component_count(F, 0, &g)) + " x K33";
            });

  const Graph g = build_component(F, i);
  rec.claim("alpha-i-components",
            "Gamma(2,i) has 60 components of 20 vertices", "frozen", "60 x 20",
            [&] {
              return str(component_count(F, i, &g)) + " x " +
                     str(std::uint64_t(g.num_vertices()));
            });
  rec.claim("alpha-i-desargues",
            "the Gamma(2,i) component is the Desargues graph", "frozen",
            "true", [&] { return str(small_iso(g, reference_graph("Desargues"))); });
  rec.claim("alpha-i-girth", "girth of the Gamma(2,i) component is 6",
            "frozen", "6", [&] { return str(girth(g, 8, opt.seed)); });
  rec.claim("alpha-i-diameter", "diameter of the Gamma(2,i) component is 5",
            "frozen", "5", [&] { return str(diameter(g)); });
  rec.claim("alpha-i-antipodal",
            "L pi is the unique vertex at maximal distance from L", "derived",
            "true", [&] { return str(antipodal_check(g)); });
  rec.claim("tau-bar-self",
            "tau-bar maps the Gamma(2,i) component onto itself (i^2 = i+1 "
            "gives the same graph)",
            "derived", "true", [&] {
              tau_bar_map(g, g);  // throws NotIsomorphism on failure
              return str(true);
            });
  return r;
}

SuiteResult f3_suite(const SuiteOptions& opt) {
  SuiteResult r{"f3"};
  Rec rec(r);
  const Field F = Field::with_default_modulus(3);
  const Fel j = 2;

  rec.claim("alpha0-k33", "Gamma(3,0) has 14112 components, each K_3,3",
            "frozen", "14112 x K33", [&] {
              const Graph g0 = build_component(F, 0);
              if (!small_iso(g0, reference_graph("K33")))
                return std::string("component not K33");
              return str(component_count(F, 0, &g0)) + " x K33";
            });

  const Graph g = build_component(F, j);
  rec.claim("connected", "Gamma(3,j) is connected with 84672 vertices",
            "frozen", "84672,1", [&] {
              return str(std::uint64_t(g.num_vertices())) + "," +
                     str(component_count(F, j, &g));
            });
  rec.claim("vertex-transitive",
            "the orbit of the base vertex under <L, g_j> is everything",
            "derived", "true", [&] { return str(vertex_transitive_cert(g)); });
  rec.claim("girth",
            "girth of Gamma(3,j); an earlier reported value is 16 but direct "
            "computation (BFS from 9 roots, cross-checked by per-vertex "
            "edge-deletion shortest paths, exact under vertex-transitivity) "
            "gives 18; the measured value is asserted and the discrepancy "
            "flagged",
            "derived", "18", [&] { return str(girth(g, 8, opt.seed)); });
  rec.report("girth-vs-reported",
             "reported girth 16 vs measured; girth > 10 either way, which is "
             "all any downstream argument uses",
             [&] { return "reported 16, measured " + str(girth(g, 8, opt.seed)); });
  rec.claim("diameter", "diameter of Gamma(3,j) is 21 (and >= 6f-3 = 15)",
            "frozen", "21", [&] { return str(diameter(g)); });

  rec.claim("tau-bar-isomorphisms",
            "tau-bar: Gamma(3,j) ~ Gamma(3,j^2) ~ Gamma(3,j^4), and the "
            "threefold composite is the identity",
            "derived", "true", [&] {
              const Graph g2 = build_component(F, F.frob(j, 1));
              const Graph g4 = build_component(F, F.frob(j, 2));
              const VertexMap m1 = tau_bar_map(g, g2);
              const VertexMap m2 = tau_bar_map(g2, g4);
              const VertexMap m3 = tau_bar_map(g4, g);
              return str(m3.after(m2.after(m1)).is_identity());
            });

  const auto gens_G = automorphism_gens(g, "G");
  const auto gens_A = automorphism_gens(g, "A");
  const auto gens_M = automorphism_gens(g, "M");
  const auto gens_Gp = automorphism_gens(g, "Gplus");
  const auto gens_Ap = automorphism_gens(g, "Aplus");
  const std::uint64_t order_G = big_group_order_formula(3);

  rec.claim("arc-G", "G is 2-arc transitive but not 3-arc transitive",
            "frozen", "true,false", [&] {
              return str(arc_orbits(g, gens_G, 2).transitive) + "," +
                     str(arc_orbits(g, gens_G, 3).transitive);
            });
  rec.claim("arc-A",
            "A is 3-arc regular (orbit = total = |A| = 1016064) but not "
            "4-arc transitive",
            "frozen", "1016064,true,false", [&] {
              const auto a3 = arc_orbits(g, gens_A, 3, 2 * order_G);
              const auto a4 = arc_orbits(g, gens_A, 4);
              return str(a3.orbit_size) + "," + str(a3.regular) + "," +
                     str(a4.transitive);
            });
  rec.claim("arc-M", "M is 2-arc transitive but not 3-arc transitive",
            "frozen", "true,false", [&] {
              return str(arc_orbits(g, gens_M, 2).transitive) + "," +
                     str(arc_orbits(g, gens_M, 3).transitive);
            });
  rec.claim("arc-Gplus-local",
            "G+ is locally 2-arc transitive but not locally 3-arc transitive",
            "frozen", "true,true,false,false", [&] {
              const auto a2 = local_arc_orbits(g, gens_Gp, 2);
              const auto a3 = local_arc_orbits(g, gens_Gp, 3);
              return str(a2[0].transitive) + "," + str(a2[1].transitive) +
                     "," + str(a3[0].transitive) + "," + str(a3[1].transitive);
            });
  rec.claim("arc-Aplus-local",
            "A+ is locally 3-arc transitive but not locally 4-arc transitive",
            "frozen", "true,true,false,false", [&] {
              const auto a3 = local_arc_orbits(g, gens_Ap, 3);
              const auto a4 = local_arc_orbits(g, gens_Ap, 4);
              return str(a3[0].transitive) + "," + str(a3[1].transitive) +
                     "," + str(a4[0].transitive) + "," + str(a4[1].transitive);
            });

  rec.claim("stabilizer-order", "|A| / |V| = 2|G|/|V| = 12", "frozen", "12",
            [&] { return str(2 * order_G / g.num_vertices()); });

  rec.claim("sigma-properties",
            "sigma is an involution swapping the parts and commuting with "
            "the right action of G",
            "derived", "true", [&] {
              const VertexMap s = sigma_map(g);
              if (s.preserves_parts(g) || s.is_identity()) return str(false);
              for (const auto& m : gens_G)
                if (!(s.after(m).perm() == m.after(s).perm()))
                  return str(false);
              return str(true);
            });

  rec.claim("quotient",
            "the quotient by 1 x T has 168 vertices in halves of 84, is "
            "cubic, and is covered by Gamma(3,j)",
            "frozen", "168,84,84,true,true", [&] {
              const auto q = quotient_by_second_factor(g);
              return str(std::uint64_t(q.vertices)) + "," +
                     str(std::uint64_t(q.part_size[0])) + "," +
                     str(std::uint64_t(q.part_size[1])) + "," + str(q.cubic) +
                     "," + str(q.cover_ok);
            });

  rec.claim("antipodal",
            "L pi is the unique vertex at maximal distance from L", "frozen",
            "true", [&] { return str(antipodal_check(g)); });

  rec.claim("iso-classes", "f=3 has one isomorphism class of size 6",
            "frozen", "1 x 6", [&] {
              const auto cls = iso_classes(F);
              return str(std::uint64_t(cls.size())) + " x " +
                     str(std::uint64_t(cls.at(0).size()));
            });

  rec.claim("structure-orbits",
            "T^2-orbits are the two parts; 1 x T and T x 1 are intransitive "
            "on each part and their orbit partitions are swapped by g_j",
            "derived", "true", [&] {
              return str(structure_checks_c_i(F, j, &g).pass());
            });

  return r;
}

SuiteResult f4_suite(const SuiteOptions& opt) {
  SuiteResult r{"f4"};
  Rec rec(r);
  const Field F = Field::with_default_modulus(4);
  const Fel k = 2;
  const Fel k3 = F.pow(k, 3);
  const Fel k5 = F.pow(k, 5);

  rec.claim("alpha0-k33", "Gamma(4,0) has 924800 components, each K_3,3",
            "frozen", "924800 x K33", [&] {
              const Graph g = build_component(F, 0);
              if (!small_iso(g, reference_graph("K33")))
                return std::string("component not K33");
              return str(component_count(F, 0, &g)) + " x K33";
            });
  rec.claim("k5-desargues",
            "Gamma(4,k^5) has 277440 components, each the Desargues graph",
            "frozen", "277440 x Desargues", [&] {
              const Graph g = build_component(F, k5);
              if (!small_iso(g, reference_graph("Desargues")))
                return std::string("component not Desargues");
              return str(component_count(F, k5, &g)) + " x Desargues";
            });
  rec.claim("k-components",
            "Gamma(4,k) has 4080 components of |PSL(2,16)|/3 = 1360 vertices",
            "frozen", "4080 x 1360", [&] {
              const Graph g = build_component(F, k);
              return str(component_count(F, k, &g)) + " x " +
                     str(std::uint64_t(g.num_vertices()));
            });
  rec.claim("iso-classes", "f=4 has one isomorphism class of size 8",
            "frozen", "1 x 8", [&] {
              const auto cls = iso_classes(F);
              return str(std::uint64_t(cls.size())) + " x " +
                     str(std::uint64_t(cls.at(0).size()));
            });

  if (!opt.deep) {
    rec.report("deep-skipped", "connected-graph checks skipped; rerun with "
                               "--deep for girth/diameter at 5548800 vertices",
               [] { return std::string("skipped"); });
    return r;
  }

  const Graph g = build_component(F, k3);
  rec.claim("connected", "Gamma(4,k^3) is connected with 5548800 vertices",
            "frozen", "5548800,1", [&] {
              return str(std::uint64_t(g.num_vertices())) + "," +
                     str(component_count(F, k3, &g));
            });
  rec.claim("vertex-transitive",
            "the orbit of the base vertex under <L, g_(k^3)> is everything",
            "derived", "true", [&] { return str(vertex_transitive_cert(g)); });
  rec.claim("girth",
            "girth of the unique connected f=4 graph Gamma(4,k^3) is 30",
            "frozen", "30", [&] { return str(girth(g, 8, opt.seed)); });
  rec.claim("diameter-bound", "diameter of Gamma(4,k^3) is >= 6*4-3 = 21",
            "derived", "true", [&] { return str(diameter(g) >= 21); });
  rec.report("diameter", "eccentricity of the base vertex",
             [&] { return str(diameter(g)); });
  rec.report("antipodal", "whether L pi is the unique farthest vertex "
                          "(open question; recorded, not asserted)",
             [&] { return str(antipodal_check(g)); });
  return r;
}

SuiteResult f5_suite(const SuiteOptions&) {
  SuiteResult r{"f5-classes"};
  Rec rec(r);
  const Field F = Field::with_default_modulus(5);
  rec.claim("generator-count", "GF(32) has 30 generators, all connected",
            "frozen", "30", [&] {
              return str(std::uint64_t(F.connected_alphas().size()));
            });
  rec.claim("classes", "f=5 has 3 isomorphism classes of size 10", "frozen",
            "3 x 10", [&] {
              const auto cls = iso_classes(F);
              for (const auto& c : cls)
                if (c.size() != 10) return std::string("bad class size");
              return str(std::uint64_t(cls.size())) + " x 10";
            });
  return r;
}

SuiteResult zp_suite(const SuiteOptions&) {
  SuiteResult r{"zp"};
  Rec rec(r);

  rec.claim("bad-prime", "p = 5 is rejected (5 != 1 mod 3)", "trivial",
            "BadPrime", [&] {
              try {
                build_sigma_p(5);
              } catch (const BadPrime&) {
                return std::string("BadPrime");
              }
              return std::string("accepted");
            });

  for (int p : {7, 13}) {
    rec.claim("p" + str(p),
              "Sigma_" + str(p) + ": cubic bipartite on 2p^2 vertices, "
              "girth >= 6, G 1-arc but not 2-arc transitive, A 2-arc "
              "transitive with vertex stabilizer of order 6, row subgroup "
              "intransitive on each half",
              "frozen", "ok", [&] {
                const ZpReport z = zp_arc_check(p);
                if (z.vertices != std::size_t(2 * p * p) ||
                    z.edges != std::size_t(3 * p * p) ||
                    z.half_size[0] != std::size_t(p * p) ||
                    z.half_size[1] != std::size_t(p * p))
                  return std::string("wrong sizes");
                if (!z.pass()) return std::string("transitivity facts fail");
                if (z.row_orbits_per_half[0] != std::size_t(p))
                  return std::string("unexpected row orbit count");
                return std::string("ok");
              });
  }
  return r;
}

SuiteResult determinism_suite(const SuiteOptions& opt) {
  SuiteResult r{"determinism"};
  Rec rec(r);
  for (const char* name : {"f1", "f2", "f3"}) {
    rec.claim(std::string("replay-") + name,
              std::string("suite ") + name + " produces byte-identical JSON "
              "(timings stripped) with --threads 1 and --threads 8",
              "derived", "byte-identical,pass", [&] {
                SuiteOptions o = opt;
                o.threads = 1;
                const SuiteResult a = run_suite(name, o);
                o.threads = 8;
                const SuiteResult b = run_suite(name, o);
                const bool same =
                    a.to_json(false).dump() == b.to_json(false).dump();
                return std::string(same ? "byte-identical" : "differs") + "," +
                       (a.all_pass() && b.all_pass() ? "pass" : "fail");
              });
  }
  return r;
}

}  // namespace

bool SuiteResult::all_pass() const {
  for (const Claim& c : claims)
    if (!c.pass) return false;
  return true;
}

nlohmann::json SuiteResult::to_json(bool with_timing) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["pass"] = all_pass();
  j["claims"] = nlohmann::json::array();
  for (const Claim& c : claims) {
    nlohmann::json cj{{"id", c.id},       {"anchor", c.anchor},
                      {"pass", c.pass},   {"measured", c.measured},
                      {"expected", c.expected}, {"tag", c.tag}};
    if (with_timing) cj["ms"] = c.ms;
    j["claims"].push_back(std::move(cj));
  }
  return j;
}

void SuiteResult::print(std::ostream& os) const {
  os << "suite " << suite << (all_pass() ? ": PASS" : ": FAIL") << "\n";
  for (const Claim& c : claims) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", c.ms);
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << " (" << c.tag
       << ", " << buf << " ms): " << c.anchor << "\n";
    if (!c.pass)
      os << "         measured: " << c.measured
         << "\n         expected: " << c.expected << "\n";
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "field", "group", "construction", "f1",          "f2",
      "f3",    "f4",    "f5-classes",   "zp",          "determinism"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "field") return field_suite(opt);
  if (name == "group") return group_suite(opt);
  if (name == "construction") return construction_suite(opt);
  if (name == "f1") return f1_suite(opt);
  if (name == "f2") return f2_suite(opt);
  if (name == "f3") return f3_suite(opt);
  if (name == "f4") return f4_suite(opt);
  if (name == "f5-classes") return f5_suite(opt);
  if (name == "zp") return zp_suite(opt);
  if (name == "determinism") return determinism_suite(opt);
  throw UnknownSuite(name);
}

}  // namespace gam
