// Factorization of small univariate rational polynomials into irreducibles
// over Q. Used to decide which field extension a multiple root lives in.
#pragma once

#include <vector>

#include "ksod/poly.hpp"

namespace ksod {

// Rational roots of p (nonzero), each listed once, ascending.
std::vector<Rational> rational_roots(const UniPoly& p);

// Monic irreducible factors of a squarefree nonzero p, sorted by degree then
// coefficients. Irreducibility is certified by the rational root test up to
// degree 3 and by exhaustive Kronecker search up to degree 6; larger
// factors without rational roots raise ExtensionUnsupported.
std::vector<UniPoly> irreducible_factors(const UniPoly& p);

}  // namespace ksod
