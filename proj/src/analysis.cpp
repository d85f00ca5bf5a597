#include "gamma/analysis.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "gamma/errors.hpp"

namespace gam {

namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

bool adjacent(const Graph& g, std::uint32_t u, std::uint32_t v) {
  const auto& a = g.adj[u];
  return a[0] == v || a[1] == v || a[2] == v;
}

bool is_permutation(const std::vector<std::uint32_t>& p) {
  std::vector<bool> hit(p.size(), false);
  for (std::uint32_t v : p) {
    if (v >= p.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

struct U128Hash {
  std::size_t operator()(unsigned __int128 v) const {
    const std::uint64_t lo = std::uint64_t(v);
    const std::uint64_t hi = std::uint64_t(v >> 64);
    return std::hash<std::uint64_t>()(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

VertexMap VertexMap::bijection(std::vector<std::uint32_t> p) {
  if (!is_permutation(p)) throw NotAutomorphism("not a bijection");
  return VertexMap(std::move(p));
}

VertexMap VertexMap::automorphism(const Graph& g, std::vector<std::uint32_t> p) {
  VertexMap m = bijection(std::move(p));
  if (m.size() != g.num_vertices()) throw NotAutomorphism("size mismatch");
  for (std::uint32_t u = 0; u < g.num_vertices(); ++u)
    for (std::uint32_t v : g.adj[u])
      if (!adjacent(g, m[u], m[v])) throw NotAutomorphism("edge not preserved");
  return m;
}

bool VertexMap::is_identity() const {
  for (std::uint32_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != i) return false;
  return true;
}

bool VertexMap::preserves_parts(const Graph& g) const {
  for (std::uint32_t i = 0; i < perm_.size(); ++i)
    if (g.part[i] != g.part[perm_[i]]) return false;
  return true;
}

VertexMap VertexMap::after(const VertexMap& m) const {
  std::vector<std::uint32_t> p(perm_.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) p[i] = perm_[m[i]];
  return VertexMap(std::move(p));
}

namespace {

// Vertex permutation induced by id -> key-level transform of the coset rep.
template <class Fn>
std::vector<std::uint32_t> induced_perm(const Graph& g, Fn&& image_key) {
  const Field& F = *g.field;
  std::vector<std::uint32_t> p(g.num_vertices());
  for (std::uint32_t i = 0; i < g.num_vertices(); ++i)
    p[i] = g.id_of(image_key(key_to_elem(F, g.keys[i])));
  return p;
}

}  // namespace

VertexMap action_map(const Graph& g, const BigElem& e) {
  const LGroup L(*g.field);
  return VertexMap::automorphism(
      g, induced_perm(g, [&](const BigElem& rep) {
        return vertex_key(L, big_mul(rep, e));
      }));
}

VertexMap sigma_map(const Graph& g) {
  const LGroup L(*g.field);
  const BigElem pi = big_pi(*g.field);
  VertexMap m = VertexMap::automorphism(
      g, induced_perm(g, [&](const BigElem& rep) {
        return vertex_key(L, big_mul(pi, rep));
      }));
  for (std::uint32_t i = 0; i < m.size(); ++i)
    if (m[m[i]] != i) throw NotAutomorphism("sigma is not an involution");
  return m;
}

VertexMap tau_bar_map(const Graph& src, const Graph& dst) {
  if (!src.field || !dst.field || *src.field != *dst.field)
    throw FieldMismatch("tau_bar needs graphs over one field");
  const Field& F = *src.field;
  const LGroup L(F);
  if (src.num_vertices() != dst.num_vertices())
    throw NotIsomorphism("vertex counts differ");
  std::vector<std::uint32_t> p(src.num_vertices());
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    const BigElem rep = key_to_elem(F, src.keys[i]);
    const BigElem img =
        big_elem(frob_aut(rep.x, 1), frob_aut(rep.y, 1), rep.eps);
    auto it = dst.index.find(vertex_key(L, img));
    if (it == dst.index.end()) throw NotIsomorphism("image vertex missing");
    p[i] = it->second;
  }
  VertexMap m = VertexMap::bijection(std::move(p));
  for (std::uint32_t u = 0; u < src.num_vertices(); ++u)
    for (std::uint32_t v : src.adj[u])
      if (!adjacent(dst, m[u], m[v])) throw NotIsomorphism("edge dropped");
  return m;
}

std::vector<VertexMap> automorphism_gens(const Graph& g,
                                         const std::string& group) {
  const Field& F = *g.field;
  const BigElem aa = big_elem(elem_a(F), elem_a(F), 0);
  const BigElem bb = big_elem(elem_b(F), elem_b(F), 0);
  const BigElem ga = g_alpha(F, g.alpha);

  std::vector<VertexMap> out;
  const auto push_plus_gens = [&] {
    // Part-preserving generators of T^2 inside <L, g_alpha>: L together
    // with g_alpha * l * g_alpha over l in L (l = 1 gives g_alpha^2).
    out.push_back(action_map(g, aa));
    out.push_back(action_map(g, bb));
    const LGroup L(F);
    for (const BigElem& l : L.elements())
      out.push_back(action_map(g, big_mul(big_mul(ga, l), ga)));
  };

  if (group == "G" || group == "A") {
    out.push_back(action_map(g, aa));
    out.push_back(action_map(g, bb));
    out.push_back(action_map(g, ga));
    if (group == "A") out.push_back(sigma_map(g));
  } else if (group == "Gplus") {
    push_plus_gens();
  } else if (group == "M") {
    push_plus_gens();
    out.push_back(sigma_map(g));
  } else if (group == "Aplus") {
    push_plus_gens();
    out.push_back(sigma_map(g).after(action_map(g, ga)));
  } else {
    throw UnknownName("group '" + group + "'");
  }
  return out;
}

bool vertex_transitive_cert(const Graph& g) {
  const Field& F = *g.field;
  const LGroup L(F);
  const std::vector<BigElem> gens{big_elem(elem_a(F), elem_a(F), 0),
                                  big_elem(elem_b(F), elem_b(F), 0),
                                  g_alpha(F, g.alpha)};
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::uint32_t u = stack.back();
    stack.pop_back();
    const BigElem rep = key_to_elem(F, g.keys[u]);
    for (const BigElem& e : gens) {
      const std::uint32_t v = g.id_of(vertex_key(L, big_mul(rep, e)));
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == g.num_vertices();
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, std::uint32_t from) {
  std::vector<std::uint32_t> dist(g.num_vertices(), kUnseen);
  std::vector<std::uint32_t> q{from};
  dist[from] = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const std::uint32_t u = q[i];
    for (std::uint32_t v : g.adj[u])
      if (dist[v] == kUnseen) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  return dist;
}

namespace {

// Shortest cycle through (or near) `from`: min over non-tree edges of
// dist(u) + dist(v) + 1. Exact girth under vertex-transitivity.
int girth_from(const Graph& g, std::uint32_t from) {
  std::vector<std::uint32_t> dist(g.num_vertices(), kUnseen);
  std::vector<std::uint32_t> parent(g.num_vertices(), kUnseen);
  std::vector<std::uint32_t> q{from};
  dist[from] = 0;
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < q.size(); ++i) {
    const std::uint32_t u = q[i];
    if (int(2 * dist[u]) >= best) break;
    for (std::uint32_t v : g.adj[u]) {
      if (dist[v] == kUnseen) {
        dist[v] = dist[u] + 1;
        parent[v] = u;
        q.push_back(v);
      } else if (v != parent[u]) {
        best = std::min(best, int(dist[u] + dist[v] + 1));
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) throw Acyclic();
  return best;
}

}  // namespace

int girth(const Graph& g, int sample, std::uint64_t seed) {
  if (g.num_vertices() <= 5000) {
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
      best = std::min(best, girth_from(g, v));
    return best;
  }
  const int base = girth_from(g, 0);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(
      0, std::uint32_t(g.num_vertices() - 1));
  for (int i = 0; i < sample; ++i) {
    const int other = girth_from(g, pick(rng));
    if (other != base)
      throw StructureViolation("girth cross-check disagrees: " +
                               std::to_string(base) + " vs " +
                               std::to_string(other));
  }
  return base;
}

int diameter(const Graph& g) {
  if (g.num_vertices() <= 5000) {
    std::uint32_t best = 0;
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
      const auto dist = bfs_distances(g, v);
      best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    return int(best);
  }
  const auto dist = bfs_distances(g, 0);
  return int(*std::max_element(dist.begin(), dist.end()));
}

namespace {

using ArcCode = unsigned __int128;

ArcCode encode_arc(const std::vector<std::uint32_t>& arc) {
  ArcCode code = 0;
  for (std::uint32_t v : arc) code = (code << 25) | v;
  return code;
}

// Lexicographically least s-arc starting at `root` (sorted adjacency).
std::vector<std::uint32_t> least_arc(const Graph& g, int s,
                                     std::uint32_t root) {
  std::vector<std::uint32_t> arc{root};
  for (int i = 0; i < s; ++i) {
    const std::uint32_t u = arc.back();
    std::uint32_t next = kUnseen;
    for (std::uint32_t v : g.adj[u]) {
      if (arc.size() >= 2 && v == arc[arc.size() - 2]) continue;
      next = v;
      break;
    }
    if (next == kUnseen) throw Acyclic("no s-arc extension");
    arc.push_back(next);
  }
  return arc;
}

std::uint64_t arc_orbit_size(const std::vector<std::uint32_t>& seed_arc,
                             const std::vector<VertexMap>& gens) {
  std::unordered_set<ArcCode, U128Hash> seen;
  std::vector<std::vector<std::uint32_t>> queue{seed_arc};
  seen.insert(encode_arc(seed_arc));
  std::vector<std::uint32_t> img(seed_arc.size());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto arc = queue[i];
    for (const VertexMap& m : gens) {
      for (std::size_t k = 0; k < arc.size(); ++k) img[k] = m[arc[k]];
      if (seen.insert(encode_arc(img)).second) queue.push_back(img);
    }
  }
  return seen.size();
}

void check_arc_preconditions(const Graph& g,
                             const std::vector<VertexMap>& gens, int s) {
  if (s < 0 || s > 4) throw DegreeOutOfRange("s must be in [0,4]");
  if (g.num_vertices() >= (1u << 25)) throw CapExceeded("arc orbit id space");
  for (const auto& m : gens)
    if (m.size() != g.num_vertices()) throw NotAutomorphism("gen size");
  if (s >= 1) {
    const int gi = girth(g, 0, 0);
    if (gi <= 2 * s)
      throw GirthTooSmall("girth " + std::to_string(gi) + " <= 2s");
  }
}

}  // namespace

ArcOrbitReport arc_orbits(const Graph& g, const std::vector<VertexMap>& gens,
                          int s, std::optional<std::uint64_t> group_order) {
  check_arc_preconditions(g, gens, s);
  ArcOrbitReport r;
  r.s = s;
  r.total = s == 0 ? g.num_vertices()
                   : std::uint64_t(g.num_vertices()) * 3 * (1ull << (s - 1));
  r.orbit_size = arc_orbit_size(least_arc(g, s, 0), gens);
  r.transitive = r.orbit_size == r.total;
  r.regular = group_order && *group_order == r.total && r.transitive;
  return r;
}

std::array<ArcOrbitReport, 2> local_arc_orbits(
    const Graph& g, const std::vector<VertexMap>& gens, int s) {
  check_arc_preconditions(g, gens, s);
  for (const auto& m : gens)
    if (!m.preserves_parts(g))
      throw NotAutomorphism("local arc orbits need part-preserving gens");
  std::array<ArcOrbitReport, 2> out;
  for (int p = 0; p < 2; ++p) {
    std::uint32_t root = kUnseen;
    for (std::uint32_t v = 0; v < g.num_vertices() && root == kUnseen; ++v)
      if (g.part[v] == p) root = v;
    ArcOrbitReport& r = out[p];
    r.s = s;
    r.total = (s == 0 ? g.num_vertices()
                      : std::uint64_t(g.num_vertices()) * 3 * (1ull << (s - 1)))
              / 2;
    r.orbit_size = arc_orbit_size(least_arc(g, s, root), gens);
    r.transitive = r.orbit_size == r.total;
  }
  return out;
}

std::vector<std::uint32_t> orbit_partition(std::size_t n,
                                           const std::vector<VertexMap>& gens) {
  UnionFind uf(n);
  for (const auto& m : gens)
    for (std::uint32_t v = 0; v < n; ++v) uf.unite(v, m[v]);
  std::vector<std::uint32_t> root(n);
  for (std::uint32_t v = 0; v < n; ++v) root[v] = uf.find(v);
  return root;
}

QuotientResult quotient_by_second_factor(const Graph& g) {
  const Field& F = *g.field;
  const GroupElem2 id = GroupElem2::identity(F);
  const std::vector<VertexMap> gens{
      action_map(g, big_elem(id, elem_a(F), 0)),
      action_map(g, big_elem(id, elem_b(F), 0)),
      action_map(g, big_elem(id, u_elem(F, g.alpha), 0))};
  const auto root = orbit_partition(g.num_vertices(), gens);

  std::unordered_map<std::uint32_t, std::uint32_t> dense;
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
    dense.emplace(root[v], std::uint32_t(dense.size()));

  QuotientResult q;
  q.vertices = dense.size();
  std::vector<std::unordered_set<std::uint32_t>> qadj(q.vertices);
  std::vector<int> part_of(q.vertices, -1);
  q.cover_ok = true;
  for (std::uint32_t u = 0; u < g.num_vertices(); ++u) {
    const std::uint32_t qu = dense[root[u]];
    if (part_of[qu] == -1) {
      part_of[qu] = g.part[u];
      ++q.part_size[g.part[u]];
    } else if (part_of[qu] != g.part[u]) {
      q.cover_ok = false;
    }
    std::unordered_set<std::uint32_t> nb;
    for (std::uint32_t v : g.adj[u]) {
      const std::uint32_t qv = dense[root[v]];
      nb.insert(qv);
      qadj[qu].insert(qv);
    }
    if (nb.size() != 3) q.cover_ok = false;  // not a local bijection
  }
  q.cubic = true;
  std::size_t degsum = 0;
  for (const auto& nb : qadj) {
    degsum += nb.size();
    if (nb.size() != 3) q.cubic = false;
  }
  q.edges = degsum / 2;
  if (!q.cubic) q.cover_ok = false;
  return q;
}

bool antipodal_check(const Graph& g) {
  const Field& F = *g.field;
  const LGroup L(F);
  const std::uint32_t anti =
      g.id_of(vertex_key(L, big_pi(F)));  // sigma(base) = L pi
  const auto dist = bfs_distances(g, 0);
  const std::uint32_t ecc = *std::max_element(dist.begin(), dist.end());
  std::size_t count = 0;
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) count += dist[v] == ecc;
  return count == 1 && dist[anti] == ecc;
}

std::vector<std::vector<Fel>> iso_classes(const Field& F) {
  if (F.degree() < 3) throw DegreeOutOfRange("iso_classes needs f >= 3");
  const auto alphas = F.connected_alphas();
  std::unordered_set<Fel> pool(alphas.begin(), alphas.end());
  std::vector<std::vector<Fel>> classes;
  for (Fel a : alphas) {
    if (!pool.count(a)) continue;
    std::vector<Fel> cls{a};
    pool.erase(a);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (Fel img : {F.frob(cls[i], 1), F.add(cls[i], 1)}) {
        if (pool.count(img)) {
          pool.erase(img);
          cls.push_back(img);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    if (cls.size() != std::size_t(2 * F.degree()))
      throw BadClassSize("class size " + std::to_string(cls.size()));
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool graphs_equal_iff(const Field& F, Fel alpha, Fel beta, int samples,
                      std::uint64_t seed) {
  const LGroup L(F);
  const BigElem ga = g_alpha(F, alpha);
  const BigElem gb = g_alpha(F, beta);
  std::mt19937_64 rng(seed);
  const auto random_psl2 = [&] {
    for (;;) {
      const Fel a = Fel(rng() & (F.order() - 1));
      const Fel b = Fel(rng() & (F.order() - 1));
      const Fel c = Fel(rng() & (F.order() - 1));
      const Fel d = Fel(rng() & (F.order() - 1));
      if (F.add(F.mul(a, d), F.mul(b, c)) != 0) return GroupElem2(F, a, b, c, d);
    }
  };
  for (int i = 0; i < samples; ++i) {
    const BigElem g = big_elem(random_psl2(), random_psl2(), int(rng() & 1));
    if (neighbor_keys(L, ga, g) != neighbor_keys(L, gb, g)) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<std::uint32_t>> distance_signatures(const Graph& g) {
  std::vector<std::vector<std::uint32_t>> sig(g.num_vertices());
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
    sig[v] = bfs_distances(g, v);
    std::sort(sig[v].begin(), sig[v].end());
  }
  return sig;
}

bool extend_iso(const Graph& g1, const Graph& g2,
                const std::vector<std::vector<std::uint32_t>>& sig1,
                const std::vector<std::vector<std::uint32_t>>& sig2,
                std::vector<std::uint32_t>& map, std::vector<bool>& used,
                std::uint32_t next) {
  const std::uint32_t n = std::uint32_t(g1.num_vertices());
  if (next == n) return true;
  for (std::uint32_t cand = 0; cand < n; ++cand) {
    if (used[cand] || sig1[next] != sig2[cand]) continue;
    bool ok = true;
    for (std::uint32_t prev = 0; prev < next && ok; ++prev)
      ok = adjacent(g1, next, prev) == adjacent(g2, cand, map[prev]);
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (extend_iso(g1, g2, sig1, sig2, map, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool small_iso(const Graph& g1, const Graph& g2) {
  if (g1.num_vertices() > 64 || g2.num_vertices() > 64)
    throw CapExceeded("small_iso is limited to 64 vertices");
  if (g1.num_vertices() != g2.num_vertices()) return false;
  const auto sig1 = distance_signatures(g1);
  const auto sig2 = distance_signatures(g2);
  {
    auto s1 = sig1;
    auto s2 = sig2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }
  std::vector<std::uint32_t> map(g1.num_vertices());
  std::vector<bool> used(g1.num_vertices(), false);
  return extend_iso(g1, g2, sig1, sig2, map, used, 0);
}

namespace {

Graph from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges,
                 std::vector<std::uint8_t> part) {
  Graph g;
  g.part = std::move(part);
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(std::uint32_t(v));
    adj[v].push_back(std::uint32_t(u));
  }
  g.adj.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].size() != 3) throw StructureViolation("reference not cubic");
    std::sort(adj[v].begin(), adj[v].end());
    std::copy(adj[v].begin(), adj[v].end(), g.adj[v].begin());
  }
  return g;
}

}  // namespace

Graph reference_graph(const std::string& name) {
  if (name == "K33") {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 3; ++u)
      for (int v = 3; v < 6; ++v) edges.emplace_back(u, v);
    return from_edges(6, edges, {0, 0, 0, 1, 1, 1});
  }
  if (name == "Petersen" || name == "Desargues") {
    // Kneser(5,2): vertices are 2-subsets of {0..4}, edges join disjoint ones.
    std::vector<int> sets;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) sets.push_back((1 << i) | (1 << j));
    std::vector<std::pair<int, int>> pedges;
    for (std::size_t u = 0; u < sets.size(); ++u)
      for (std::size_t v = u + 1; v < sets.size(); ++v)
        if ((sets[u] & sets[v]) == 0) pedges.emplace_back(int(u), int(v));
    if (name == "Petersen")
      return from_edges(10, pedges, std::vector<std::uint8_t>(10, 0));
    // Bipartite double cover: (v,b) with {(u,0),(v,1)} per Petersen edge.
    std::vector<std::pair<int, int>> dedges;
    std::vector<std::uint8_t> part(20);
    for (int v = 0; v < 10; ++v) part[2 * v + 1] = 1;
    for (auto [u, v] : pedges) {
      dedges.emplace_back(2 * u, 2 * v + 1);
      dedges.emplace_back(2 * v, 2 * u + 1);
    }
    return from_edges(20, dedges, std::move(part));
  }
  throw UnknownName("reference graph '" + name + "'");
}

StructureReport structure_checks_c_i(const Field& F, Fel alpha,
                                     const Graph* prebuilt) {
  if (F.degree() > 3) throw CapExceeded("structure checks need f <= 3");
  Graph local;
  const Graph* gp = prebuilt;
  if (!gp) {
    local = build_component(F, alpha);
    gp = &local;
  }
  const Graph& g = *gp;
  const GroupElem2 id = GroupElem2::identity(F);

  StructureReport rep;

  // T^2-orbits must be exactly the two parts.
  const auto gplus = automorphism_gens(g, "Gplus");
  const auto proot = orbit_partition(g.num_vertices(), gplus);
  bool parts_ok = true;
  std::uint32_t root_of_part[2] = {kUnseen, kUnseen};
  for (std::uint32_t v = 0; v < g.num_vertices() && parts_ok; ++v) {
    std::uint32_t& r = root_of_part[g.part[v]];
    if (r == kUnseen)
      r = proot[v];
    else
      parts_ok = r == proot[v];
  }
  rep.parts_are_gplus_orbits =
      parts_ok && root_of_part[0] != root_of_part[1];

  const auto factor_orbits = [&](bool second_factor) {
    std::vector<VertexMap> gens;
    for (const GroupElem2& t : {elem_a(F), elem_b(F), u_elem(F, alpha)})
      gens.push_back(action_map(
          g, second_factor ? big_elem(id, t, 0) : big_elem(t, id, 0)));
    return orbit_partition(g.num_vertices(), gens);
  };
  const auto rroot = factor_orbits(true);   // R = 1 x T
  const auto sroot = factor_orbits(false);  // S = T x 1

  const auto count_per_part = [&](const std::vector<std::uint32_t>& root,
                                  std::size_t out[2]) {
    std::unordered_set<std::uint32_t> seen[2];
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
      seen[g.part[v]].insert(root[v]);
    out[0] = seen[0].size();
    out[1] = seen[1].size();
  };
  count_per_part(rroot, rep.r_orbits_per_part);
  count_per_part(sroot, rep.s_orbits_per_part);
  rep.r_intransitive =
      rep.r_orbits_per_part[0] > 2 && rep.r_orbits_per_part[1] > 2;
  rep.s_intransitive =
      rep.s_orbits_per_part[0] > 2 && rep.s_orbits_per_part[1] > 2;

  // Conjugation by g_alpha must carry the R-orbit partition to the S one.
  const VertexMap gmap = action_map(g, g_alpha(F, alpha));
  std::unordered_map<std::uint32_t, std::uint32_t> image;
  std::unordered_set<std::uint32_t> hit;
  rep.swap_ok = true;
  for (std::uint32_t v = 0; v < g.num_vertices() && rep.swap_ok; ++v) {
    const auto [it, fresh] = image.emplace(rroot[v], sroot[gmap[v]]);
    if (fresh)
      rep.swap_ok = hit.insert(sroot[gmap[v]]).second;  // injective
    else
      rep.swap_ok = it->second == sroot[gmap[v]];  // well defined
  }
  return rep;
}

}  // namespace gam
