#pragma once

#include <cstdint>

#include "gamma/analysis.hpp"

namespace gam {

/// The graph Sigma on Z_p x Z_p x Z_2, p = 1 mod 3: (x,y,0) is joined to
/// (x+1,y+1,1), (x+a,y+a^2,1) and (x+a^2,y+a,1) for the smallest residue a
/// of multiplicative order 3. Vertex ids are (x*p + y)*2 + eps.
/// Throws BadPrime when p is not a prime congruent to 1 mod 3.
Graph build_sigma_p(int p);

/// Smallest residue of order 3 mod p.
int zp_order3_element(int p);

struct ZpReport {
  int p = 0;
  int a = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t half_size[2] = {0, 0};
  bool same_graph_other_root = false;  // a and a^2 give equal edge sets
  int girth = 0;
  ArcOrbitReport g_arc1, g_arc2, a_arc2;
  std::size_t row_orbits_per_half[2] = {0, 0};
  bool row_intransitive = false;  // {t_{u,0}} has > 2 orbits on each half
  bool tau_cycles_neighbors = false;
  std::uint64_t aut_order = 0;        // |<t_{1,0}, t_{0,1}, tau, sigma, nu>|
  std::uint64_t stabilizer_order = 0; // aut_order / vertices, expected 6
  bool pass() const {
    return g_arc1.transitive && !g_arc2.transitive && a_arc2.transitive &&
           row_intransitive && tau_cycles_neighbors && girth >= 6 &&
           stabilizer_order == 6 && same_graph_other_root;
  }
};

/// Transitivity facts for Sigma with G = <translations, tau, sigma*nu> and
/// A = <translations, tau, sigma, nu>. Requires p <= 31.
ZpReport zp_arc_check(int p);

}  // namespace gam
