#include "gamma/zpfamily.hpp"

#include <algorithm>
#include <unordered_set>

#include "gamma/errors.hpp"

namespace gam {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t vid(int p, int x, int y, int eps) {
  return std::uint32_t((x * p + y) * 2 + eps);
}

Graph sigma_with_root(int p, int a) {
  const int a2 = (a * a) % p;
  const int ox[3] = {1, a, a2};
  const int oy[3] = {1, a2, a};
  Graph g;
  g.adj.resize(std::size_t(2) * p * p);
  g.part.resize(g.adj.size());
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) {
      g.part[vid(p, x, y, 1)] = 1;
      for (int k = 0; k < 3; ++k) {
        const std::uint32_t u = vid(p, x, y, 0);
        const std::uint32_t v = vid(p, (x + ox[k]) % p, (y + oy[k]) % p, 1);
        g.adj[u][k] = v;
        g.adj[v][k] = u;
      }
    }
  for (auto& nb : g.adj) {
    std::sort(nb.begin(), nb.end());
    if (nb[0] == nb[1] || nb[1] == nb[2])
      throw DegenerateValency("repeated Sigma_p neighbor");
  }
  return g;
}

// Vertex permutation from a pointwise map on (x, y, eps).
template <class Fn>
std::vector<std::uint32_t> zp_perm(int p, Fn&& fn) {
  std::vector<std::uint32_t> perm(std::size_t(2) * p * p);
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y)
      for (int e = 0; e < 2; ++e) {
        auto [nx, ny, ne] = fn(x, y, e);
        perm[vid(p, x, y, e)] = vid(p, nx, ny, ne);
      }
  return perm;
}

struct Trip {
  int x, y, e;
};

std::uint64_t perm_closure_order(const std::vector<VertexMap>& gens,
                                 std::size_t cap) {
  const std::size_t n = gens.at(0).size();
  const auto key_of = [n](const std::vector<std::uint32_t>& p) {
    return std::string(reinterpret_cast<const char*>(p.data()),
                       n * sizeof(std::uint32_t));
  };
  std::vector<std::uint32_t> id(n);
  for (std::uint32_t i = 0; i < n; ++i) id[i] = i;
  std::vector<std::vector<std::uint32_t>> elems{id};
  std::unordered_set<std::string> seen{key_of(id)};
  std::vector<std::uint32_t> prod(n);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const VertexMap& g : gens) {
      for (std::uint32_t v = 0; v < n; ++v) prod[v] = g[elems[i][v]];
      if (seen.insert(key_of(prod)).second) {
        elems.push_back(prod);
        if (elems.size() > cap) throw CapExceeded("automorphism closure");
      }
    }
  }
  return elems.size();
}

}  // namespace

int zp_order3_element(int p) {
  for (int a = 2; a < p; ++a)
    if ((std::int64_t(a) * a * a) % p == 1) return a;
  throw BadPrime("no element of order 3 mod " + std::to_string(p));
}

Graph build_sigma_p(int p) {
  if (!is_prime(p) || p % 3 != 1)
    throw BadPrime(std::to_string(p) + " is not a prime = 1 mod 3");
  return sigma_with_root(p, zp_order3_element(p));
}

ZpReport zp_arc_check(int p) {
  if (p > 31) throw CapExceeded("zp_arc_check needs p <= 31");
  ZpReport r;
  r.p = p;
  const Graph g = build_sigma_p(p);
  const int a = zp_order3_element(p);
  const int a2 = (a * a) % p;
  r.a = a;
  r.vertices = g.num_vertices();
  r.edges = g.num_edges();
  for (std::uint8_t e : g.part) ++r.half_size[e];

  r.same_graph_other_root = sigma_with_root(p, a2).adj == g.adj;

  const auto mod = [p](int v) { return ((v % p) + p) % p; };
  const VertexMap t10 = VertexMap::automorphism(
      g, zp_perm(p, [&](int x, int y, int e) { return Trip{mod(x + 1), y, e}; }));
  const VertexMap t01 = VertexMap::automorphism(
      g, zp_perm(p, [&](int x, int y, int e) { return Trip{x, mod(y + 1), e}; }));
  const VertexMap tau = VertexMap::automorphism(
      g, zp_perm(p, [&](int x, int y, int e) {
        return Trip{mod(a * x), mod(a2 * y), e};
      }));
  const VertexMap sig = VertexMap::automorphism(
      g, zp_perm(p, [&](int x, int y, int e) { return Trip{y, x, e}; }));
  const VertexMap nu = VertexMap::automorphism(
      g, zp_perm(p, [&](int x, int y, int e) {
        return Trip{mod(-x), mod(-y), 1 - e};
      }));

  const std::vector<VertexMap> gens_g{t10, t01, tau, nu.after(sig)};
  const std::vector<VertexMap> gens_a{t10, t01, tau, sig, nu};

  r.girth = girth(g);
  r.g_arc1 = arc_orbits(g, gens_g, 1);
  r.g_arc2 = arc_orbits(g, gens_g, 2);
  r.a_arc2 = arc_orbits(g, gens_a, 2);

  const auto rows = orbit_partition(g.num_vertices(), {t10});
  std::unordered_set<std::uint32_t> per_half[2];
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
    per_half[g.part[v]].insert(rows[v]);
  r.row_orbits_per_half[0] = per_half[0].size();
  r.row_orbits_per_half[1] = per_half[1].size();
  r.row_intransitive =
      r.row_orbits_per_half[0] > 2 && r.row_orbits_per_half[1] > 2;

  // tau fixes (0,0,0) and 3-cycles its neighbors (1,1,1)->(a,a^2,1)->(a^2,a,1).
  const std::uint32_t n1 = vid(p, 1, 1, 1);
  const std::uint32_t n2 = vid(p, a, a2, 1);
  const std::uint32_t n3 = vid(p, a2, a, 1);
  r.tau_cycles_neighbors = tau[vid(p, 0, 0, 0)] == vid(p, 0, 0, 0) &&
                           tau[n1] == n2 && tau[n2] == n3 && tau[n3] == n1;

  r.aut_order = perm_closure_order(gens_a, 200000);
  r.stabilizer_order = r.aut_order / r.vertices;
  return r;
}

}  // namespace gam
