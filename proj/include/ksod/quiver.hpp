// Burban's algebra of a tree of projective lines: the doubled quiver of the
// tree with every back-and-forth composition set to zero.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ksod/curve.hpp"

namespace ksod {

struct Arrow {
  unsigned source = 0;
  unsigned target = 0;
  std::string name;
};

struct QuiverWithRelations {
  unsigned vertices = 0;
  std::vector<Arrow> arrows;
  // (i, j): the composition "arrow i then arrow j" is zero.
  std::vector<std::pair<std::size_t, std::size_t>> relations;

  // Throws InvalidInput if a relation is not composable.
  void validate() const;

  // Plain-text listing, vertices numbered from 1:
  //   vertices: 2
  //   arrow a: 1 -> 2
  //   relation: a a* = 0
  std::string to_string() const;
};

// A path in traversal order; an empty arrow list is the idempotent at `start`.
struct Path {
  unsigned start = 0;
  std::vector<std::size_t> arrows;
};

struct AlgebraBasis {
  std::vector<Path> paths;
  std::size_t dimension() const { return paths.size(); }
};

// Names paths "e1", "a", "a a*".
std::string path_name(const QuiverWithRelations& q, const Path& p);

// Doubles every edge without checking the graph; loops are rejected.
QuiverWithRelations doubled_quiver(const DualGraph& g);

// Throws NotATree unless is_tree_of_lines(tree).
QuiverWithRelations burban_quiver(const DualGraph& tree);

// All nonzero paths up to length_bound - 1. A surviving path of length
// length_bound raises InfiniteDimensionalSuspected. Bound 0 means
// q.vertices.
AlgebraBasis algebra_basis(const QuiverWithRelations& q, std::size_t length_bound = 0);

}  // namespace ksod
