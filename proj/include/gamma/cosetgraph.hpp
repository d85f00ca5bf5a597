#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "gamma/bigroup.hpp"

namespace gam {

/// A cubic graph. For coset graphs Gamma(f,alpha), vertex i carries the
/// canonical key of its coset (the byte key of the minimal element of Lg),
/// ids are BFS discovery order from the base coset L (id 0), and part is the
/// pi-exponent of any representative. Synthetic graphs (references, the Z_p
/// family, quotients) leave keys empty.
struct Graph {
  std::optional<Field> field;
  Fel alpha = 0;
  std::vector<std::string> keys;
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<std::array<std::uint32_t, 3>> adj;  // sorted per vertex
  std::vector<std::uint8_t> part;

  std::size_t num_vertices() const { return adj.size(); }
  std::size_t num_edges() const { return adj.size() * 3 / 2; }
  bool has_keys() const { return !keys.empty(); }
  std::uint32_t id_of(const std::string& key) const;  // VertexEscapesComponent
};

/// Canonical key of the right coset Lg: min over the 6 byte keys of l*g.
std::string vertex_key(const LGroup& L, const BigElem& g);

/// Recovers the minimal coset representative from a vertex key.
BigElem key_to_elem(const Field& F, const std::string& key);

/// The 3 distinct keys {L g_alpha l g : l in L}. Throws DegenerateValency.
std::array<std::string, 3> neighbor_keys(const LGroup& L, const BigElem& ga,
                                         const BigElem& g);

/// BFS from the base coset L; deterministic ids (within a level, children in
/// parent-id then sorted-neighbor-key order). Verifies valency 3 and
/// bipartiteness of every edge.
Graph build_component(const Field& F, Fel alpha, std::size_t cap = 10000000);

/// |V Gamma(f,alpha)| = |G|/6 = 2^(2f) (2^(2f)-1)^2 / 3.
std::uint64_t total_vertices(const Field& F);

/// total_vertices / |component|; throws NonIntegralComponents.
std::uint64_t component_count(const Field& F, Fel alpha,
                              const Graph* prebuilt = nullptr);

/// Header line then "u v" pairs, 0-based, u < v, ascending.
void export_edges(const Graph& g, std::ostream& os);

}  // namespace gam
