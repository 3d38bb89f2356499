// Plane curve germs g(z, w) at the origin: order, isolatedness, Newton
// polygon and the number of analytic branches over the algebraic closure.
#pragma once

#include <span>
#include <vector>

#include "ksod/poly.hpp"

namespace ksod {

// A compact edge of the Newton polygon. Walking from `start` to `end` the
// z-exponent grows by step_z and the w-exponent drops by step_w per lattice
// step; gcd(step_z, step_w) = 1. The edge polynomial has coefficient k equal
// to the coefficient of the k-th lattice point from `start`, so its degree
// is lattice_length and its constant term is nonzero.
struct NewtonEdge {
  Exponent start;
  Exponent end;
  unsigned step_z = 0;
  unsigned step_w = 0;
  unsigned lattice_length = 0;
  UniPoly edge_polynomial;
};

struct BranchReport {
  unsigned order = 0;
  unsigned cAn_index = 0;  // order - 1
  unsigned branch_count = 0;
  bool isolated = false;
};

// min(a + b) over the support. Throws ZeroPolynomial.
unsigned order_at_origin(const BiPoly& g);

// g(0,0) = 0, g nonconstant and squarefree.
bool is_isolated(const BiPoly& g);

// Compact edges of the lower-left Newton boundary after dividing out the
// largest monomial z^a w^b dividing g, ordered from the w-axis to the
// z-axis. Throws MonomialGerm when that quotient is a unit at the origin.
std::vector<NewtonEdge> newton_polygon(const BiPoly& g);

// Branch number br_0 of the germ g = 0. Throws NotIsolated,
// ExtensionUnsupported (with a hint to use --factors) or RecursionLimit.
BranchReport branch_count(const BiPoly& g);

// Branch number of a product of pairwise coprime isolated germs. Throws
// CommonFactor if two inputs share a factor.
BranchReport branch_count_factored(std::span<const BiPoly> factors);

}  // namespace ksod
