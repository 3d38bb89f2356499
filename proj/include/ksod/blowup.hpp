// K-theory and singularities of blow-ups of a smooth projective threefold
// along points and lci curves.
#pragma once

#include <span>
#include <vector>

#include "ksod/abelian.hpp"
#include "ksod/curve.hpp"
#include "ksod/local.hpp"
#include "ksod/verdict.hpp"

namespace ksod {

// base + center^(codim - 1). Throws InvalidInput if codim < 2.
FinAbGroup blowup_k_theory(const FinAbGroup& base, const FinAbGroup& center, unsigned codim);

// One threefold germ xy + f per plane germ f of the center; smooth germs
// (order 1) produce no singular point.
std::vector<LocalSingularity> blowup_singularities(std::span<const BiPoly> center_germs);

// Blow-up of a smooth threefold along a nodal curve with rational
// components: Yes iff every connected component is a tree of smooth P^1.
Verdict blowup_curve_verdict(const DualGraph& curve);

struct BlowupCenter {
  enum class Kind { Point, NodalCurve, Curve };
  Kind kind = Kind::Point;
  DualGraph graph;          // NodalCurve
  unsigned components = 1;  // Curve: one connected curve with this many components
  std::vector<BiPoly> germs;  // Curve: plane germs of its singular points
};

// Successive blow-ups of a smooth projective threefold. Centers are
// assumed to avoid the singular points created by earlier steps.
struct BlowupPipeline {
  std::vector<BlowupCenter> steps;
};

struct BlowupReport {
  FinAbGroup k_minus_one;
  std::vector<LocalSingularity> singularities;
  Verdict verdict;
};

BlowupReport run_pipeline(const BlowupPipeline& pipeline);
Verdict decide(const BlowupPipeline& pipeline);

}  // namespace ksod
