#include "gamma/cosetgraph.hpp"

#include <algorithm>

#include "gamma/errors.hpp"

namespace gam {

std::uint32_t Graph::id_of(const std::string& key) const {
  auto it = index.find(key);
  if (it == index.end()) throw VertexEscapesComponent();
  return it->second;
}

std::string vertex_key(const LGroup& L, const BigElem& g) {
  std::string best;
  std::string cur;
  for (const BigElem& l : L.elements()) {
    cur.clear();
    big_mul(l, g).append_key(cur);
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

BigElem key_to_elem(const Field& F, const std::string& key) {
  const std::size_t nb = F.fel_bytes();
  if (key.size() != 8 * nb + 1) throw ParseError("bad vertex key length");
  Fel e[8];
  for (int i = 0; i < 8; ++i) {
    Fel v = 0;
    for (std::size_t j = 0; j < nb; ++j)
      v |= Fel(std::uint8_t(key[i * nb + j])) << (8 * j);
    e[i] = v;
  }
  return big_elem(GroupElem2(F, e[0], e[1], e[2], e[3]),
                  GroupElem2(F, e[4], e[5], e[6], e[7]), key.back());
}

std::array<std::string, 3> neighbor_keys(const LGroup& L, const BigElem& ga,
                                         const BigElem& g) {
  std::array<std::string, 3> out;
  std::size_t n = 0;
  for (const BigElem& l : L.elements()) {
    std::string k = vertex_key(L, big_mul(big_mul(ga, l), g));
    bool fresh = true;
    for (std::size_t i = 0; i < n; ++i)
      if (out[i] == k) {
        fresh = false;
        break;
      }
    if (!fresh) continue;
    if (n == 3) throw DegenerateValency("more than 3 neighbor cosets");
    out[n++] = std::move(k);
  }
  if (n != 3) throw DegenerateValency("got " + std::to_string(n));
  std::sort(out.begin(), out.end());
  return out;
}

Graph build_component(const Field& F, Fel alpha, std::size_t cap) {
  const LGroup L(F);
  const BigElem ga = g_alpha(F, alpha);

  Graph g;
  g.field = F;
  g.alpha = alpha;

  const std::string base = vertex_key(L, big_identity(F));
  g.keys.push_back(base);
  g.index.emplace(base, 0);
  g.part.push_back(0);
  g.adj.emplace_back();

  for (std::uint32_t u = 0; u < g.keys.size(); ++u) {
    const BigElem rep = key_to_elem(F, g.keys[u]);
    const auto nbrs = neighbor_keys(L, ga, rep);
    for (int s = 0; s < 3; ++s) {
      auto it = g.index.find(nbrs[s]);
      std::uint32_t v;
      if (it == g.index.end()) {
        v = std::uint32_t(g.keys.size());
        if (v >= cap) throw CapExceeded("component exceeds vertex cap");
        g.index.emplace(nbrs[s], v);
        g.keys.push_back(nbrs[s]);
        g.part.push_back(std::uint8_t(nbrs[s].back()));
        g.adj.emplace_back();
      } else {
        v = it->second;
      }
      if (g.part[u] == g.part[v])
        throw StructureViolation("edge inside a bipartition part");
      g.adj[u][s] = v;
    }
    std::sort(g.adj[u].begin(), g.adj[u].end());
  }
  return g;
}

std::uint64_t total_vertices(const Field& F) {
  const int f = F.degree();
  if (f > 10) throw CapExceeded("vertex count exceeds 64 bits past f=10");
  const std::uint64_t q2 = (std::uint64_t(1) << (2 * f)) - 1;
  return (std::uint64_t(1) << (2 * f)) * q2 * q2 / 3;
}

std::uint64_t component_count(const Field& F, Fel alpha,
                              const Graph* prebuilt) {
  Graph local;
  const Graph* g = prebuilt;
  if (!g) {
    local = build_component(F, alpha);
    g = &local;
  }
  const std::uint64_t total = total_vertices(F);
  if (g->num_vertices() == 0 || total % g->num_vertices() != 0)
    throw NonIntegralComponents();
  return total / g->num_vertices();
}

void export_edges(const Graph& g, std::ostream& os) {
  if (!g.field) throw IoError("export requires a coset graph");
  os << "# gamma f=" << g.field->degree() << " alpha=0x"
     << g.field->to_hex(g.alpha) << " poly=0x"
     << g.field->to_hex(Fel(g.field->modulus())) << " vertices="
     << g.num_vertices() << " edges=" << g.num_edges() << "\n";
  for (std::uint32_t u = 0; u < g.num_vertices(); ++u)
    for (std::uint32_t v : g.adj[u])
      if (u < v) os << u << " " << v << "\n";
  if (!os) throw IoError("write failed");
}

}  // namespace gam
