// Defect, L and K_-1 of threefolds with isolated cA_n singularities; the
// surface rank formula; the del Pezzo threefold table.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ksod/abelian.hpp"
#include "ksod/local.hpp"
#include "ksod/matrix.hpp"

namespace ksod {

enum class EnoughWeil { Yes, No, RankZeroUnverified };

std::string to_string(EnoughWeil e);

struct VarietySpec {
  unsigned dimension = 3;
  std::vector<LocalSingularity> singularities;
  unsigned pic_rank = 1;
  unsigned cl_rank = 1;
  // Cl(X) -> sum of local class groups on free generators: one row per
  // local generator (sum of cl_rank), one column per class modulo Pic.
  std::optional<IntMatrix> restriction_matrix;
  std::string label;
  bool fano = false;  // Fano of Picard rank one; used only for notes
};

struct GlobalReport {
  unsigned L = 0;
  unsigned delta = 0;
  FinAbGroup k_minus_one;
  EnoughWeil enough_weil = EnoughWeil::Yes;
  bool nodal = false;  // every singular point is an ordinary double point

  // Maximal nonfactoriality is the nodal name for enough Weil divisors.
  bool maximally_nonfactorial() const { return nodal && enough_weil == EnoughWeil::Yes; }
};

// Throws InvalidInput, DefectExceedsL, MatrixShapeMismatch, RankDeficient.
GlobalReport threefold_invariants(const VarietySpec& spec);

struct SmallResolution {
  unsigned rank = 0;   // r - mu + rho_X - rho_Y
  unsigned delta = 0;  // mu + rho_Y - rho_X
};

// X with r nodes and a small resolution that is the blow-up of mu points on
// a smooth Y. Throws NegativeResult.
SmallResolution small_resolution_rank(unsigned r, unsigned mu, unsigned rho_X, unsigned rho_Y);

// n_exceptional - (rho_resolution - rho_X). Throws NegativeResult.
unsigned surface_rank(unsigned rho_X, unsigned rho_resolution, unsigned n_exceptional);

enum class Decision { No, Yes, Unknown };

std::string to_string(Decision d);

struct DelPezzoRow {
  unsigned d = 0;
  unsigned nodes = 0;
  unsigned pic_rank = 0;
  unsigned cl_rank = 0;
  unsigned k_rank = 0;
  Decision verdict = Decision::Unknown;
};

// Degree d in 1..6 nodal del Pezzo threefold of maximal class group rank,
// built from the blow-up of 8 - d points on P^3. Throws OutOfRange.
DelPezzoRow del_pezzo_case(unsigned d);

// The matching threefold specification (nodes as A1 points).
VarietySpec del_pezzo_spec(unsigned d);

}  // namespace ksod
