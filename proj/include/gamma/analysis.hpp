#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamma/cosetgraph.hpp"

namespace gam {

/// A permutation of the vertex ids of a Graph, densely stored.
class VertexMap {
 public:
  /// Verifies bijectivity and that every edge maps to an edge.
  static VertexMap automorphism(const Graph& g, std::vector<std::uint32_t> p);
  /// Verifies bijectivity only (used for cross-graph maps).
  static VertexMap bijection(std::vector<std::uint32_t> p);

  std::uint32_t operator[](std::uint32_t i) const { return perm_[i]; }
  std::size_t size() const { return perm_.size(); }
  const std::vector<std::uint32_t>& perm() const { return perm_; }
  bool is_identity() const;
  bool preserves_parts(const Graph& g) const;

  /// apply m first, then this.
  VertexMap after(const VertexMap& m) const;

 private:
  explicit VertexMap(std::vector<std::uint32_t> p) : perm_(std::move(p)) {}
  std::vector<std::uint32_t> perm_;
};

/// Right multiplication Lx -> Lxg. g must keep the component closed.
VertexMap action_map(const Graph& g, const BigElem& e);
/// Lx -> L pi x; an order-2 automorphism swapping the parts.
VertexMap sigma_map(const Graph& g);
/// L(c,d)pi^e -> L(c^tau,d^tau)pi^e, an isomorphism onto the graph of
/// alpha^2. Throws NotIsomorphism if an edge fails to carry over.
VertexMap tau_bar_map(const Graph& src, const Graph& dst);

/// Named generator bundles: "G", "Gplus", "M", "A", "Aplus".
std::vector<VertexMap> automorphism_gens(const Graph& g,
                                         const std::string& group);

/// Certifies that the orbit of the base vertex under right multiplication by
/// L u {g_alpha} together with sigma... (G and sigma act transitively iff the
/// orbit is everything). Works without materializing vertex maps.
bool vertex_transitive_cert(const Graph& g);

/// Shortest cycle length via BFS from the base plus `sample` random starts
/// (all must agree; valid under vertex-transitivity).
int girth(const Graph& g, int sample = 8, std::uint64_t seed = 0);

/// Eccentricity of the base vertex (diameter under vertex-transitivity);
/// exact all-pairs diameter when |V| <= 5000.
int diameter(const Graph& g);

std::vector<std::uint32_t> bfs_distances(const Graph& g, std::uint32_t from);

struct ArcOrbitReport {
  int s = 0;
  std::uint64_t total = 0;
  std::uint64_t orbit_size = 0;
  bool transitive = false;
  bool regular = false;
};

/// Orbit of the lexicographically least s-arc under gens, against the count
/// |V| * 3 * 2^(s-1) (|V| for s = 0). Requires girth > 2s for s >= 1.
ArcOrbitReport arc_orbits(const Graph& g, const std::vector<VertexMap>& gens,
                          int s,
                          std::optional<std::uint64_t> group_order = {});

/// Per-part variant for part-preserving gens: orbit of the least s-arc
/// rooted in each part against |V|/2 * 3 * 2^(s-1).
std::array<ArcOrbitReport, 2> local_arc_orbits(
    const Graph& g, const std::vector<VertexMap>& gens, int s);

struct QuotientResult {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t part_size[2] = {0, 0};
  bool cubic = false;
  bool cover_ok = false;
};

/// Quotient of a connected Gamma(f,alpha) by the orbits of N = 1 x T.
QuotientResult quotient_by_second_factor(const Graph& g);

/// True iff the vertices at maximal distance from the base are exactly
/// {sigma(base)} = {L pi}.
bool antipodal_check(const Graph& g);

/// Partition of connected_alphas under alpha -> alpha^2 and alpha -> alpha+1.
/// Each class must have size 2f (throws BadClassSize). Requires f >= 3.
std::vector<std::vector<Fel>> iso_classes(const Field& F);

/// Samples cosets Lg for random g in G and compares their neighbor sets in
/// Gamma(f,alpha) and Gamma(f,beta). Equal edge sets iff beta in
/// {alpha, alpha+1}.
bool graphs_equal_iff(const Field& F, Fel alpha, Fel beta, int samples = 1000,
                      std::uint64_t seed = 0);

/// Backtracking isomorphism test with distance-signature pruning, |V| <= 64.
bool small_iso(const Graph& g1, const Graph& g2);

/// "K33", "Petersen" (Kneser(5,2)), or "Desargues" (bipartite double cover
/// of Petersen).
Graph reference_graph(const std::string& name);

struct StructureReport {
  bool parts_are_gplus_orbits = false;  // T^2-orbits = the two parts
  std::size_t r_orbits_per_part[2] = {0, 0};
  std::size_t s_orbits_per_part[2] = {0, 0};
  bool r_intransitive = false;
  bool s_intransitive = false;
  bool swap_ok = false;  // g_alpha carries the R-orbit partition to the S one
  bool pass() const {
    return parts_are_gplus_orbits && r_intransitive && s_intransitive &&
           swap_ok;
  }
};

/// Orbit checks identifying the biquasiprimitive type on a built graph:
/// R = 1 x T and S = T x 1 intransitive on each part, swapped by g_alpha,
/// with T^2 transitive on each part. Requires f <= 3.
StructureReport structure_checks_c_i(const Field& F, Fel alpha,
                                     const Graph* prebuilt = nullptr);

/// Union-find orbit partition of the vertices under a set of vertex maps.
std::vector<std::uint32_t> orbit_partition(std::size_t n,
                                           const std::vector<VertexMap>& gens);

}  // namespace gam
