// K_-1 of reduced projective curves from combinatorial data.
#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "ksod/abelian.hpp"

namespace ksod {

// Dual graph of a nodal curve: vertices are irreducible components, edges
// are nodes, loops are self-nodes. Empty flag vectors mean "all rational"
// and "smooth P^1 wherever rational without a loop".
struct DualGraph {
  unsigned vertex_count = 0;
  std::vector<std::pair<unsigned, unsigned>> edges;
  std::vector<bool> rational;
  std::vector<bool> smooth_p1;

  // Throws InvalidInput on out-of-range endpoints, flag vectors of the wrong
  // length, or a smooth P^1 flag on a non-rational or looped component.
  void validate() const;

  bool is_rational(unsigned v) const;
  bool has_loop(unsigned v) const;
  bool is_smooth_p1(unsigned v) const;

  static DualGraph chain(unsigned n);
  static DualGraph cycle(unsigned n);
  static DualGraph star(unsigned leaves);
};

// Connected components as sorted vertex lists, ordered by least vertex.
std::vector<std::vector<unsigned>> connected_components(const DualGraph& g);

// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
DualGraph induced_subgraph(const DualGraph& g, const std::vector<unsigned>& vertices);

// |E| - |V| + #components.
unsigned betti1(const DualGraph& g);

// Connected, loop-free, acyclic and every component a smooth P^1.
bool is_tree_of_lines(const DualGraph& g);

// One connected component of a general reduced curve: its number of
// irreducible components and the branch number of each singular point.
struct CurvePiece {
  unsigned components = 1;
  std::vector<unsigned> branches;
};

struct CurveSpec {
  std::variant<DualGraph, std::vector<CurvePiece>> data;
};

// br - |Sing| - N + 1 for one connected piece. Throws NegativeRank.
unsigned curve_piece_rank(const CurvePiece& piece);

// Per-component branch data of a nodal curve (each node has two branches).
std::vector<CurvePiece> curve_pieces(const DualGraph& g);

FinAbGroup curve_k_minus_one(const CurveSpec& spec);

}  // namespace ksod
