// Three-valued decision on the existence of a Kawamata type semiorthogonal
// decomposition, with an obstruction group or a replayable certificate.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ksod/abelian.hpp"
#include "ksod/curve.hpp"
#include "ksod/global.hpp"
#include "ksod/quiver.hpp"

namespace ksod {

enum class CertificateKind {
  SmoothTrivial,
  BurbanTree,
  KawamataQuadric,
  KawamataP2P2Section,
  ToricSurface,
  BlowupOfYesPair,
};

std::string to_string(CertificateKind k);

struct Certificate {
  CertificateKind kind = CertificateKind::SmoothTrivial;
  std::vector<QuiverWithRelations> quivers;    // one finite-dimensional algebra per block
  std::vector<std::size_t> algebra_dimensions;
  std::vector<unsigned> algebra_orders;        // toric blocks k[z]/(z^n)
  std::vector<Certificate> parts;              // blow-up: base first, then centers
};

struct Verdict {
  Decision decision = Decision::Unknown;
  std::optional<FinAbGroup> obstruction;
  std::optional<Certificate> certificate;
  std::optional<FinAbGroup> k_minus_one;  // whatever was computed, for every decision
  std::vector<std::string> notes;
};

// Re-derives every algebra of the certificate and checks it is finite
// dimensional with the recorded dimension. Throws on mismatch.
void verify_certificate(const Certificate& c);

Verdict decide(const CurveSpec& curve);
Verdict decide(const VarietySpec& threefold);

// Rational surface with rational singularities given by resolution data.
// The optional matrix is the restriction Pic(resolution) -> Pic(E) = Z^N
// (n_exceptional rows, rho_resolution columns).
struct SurfaceSpec {
  unsigned rho_X = 1;
  unsigned rho_resolution = 1;
  unsigned n_exceptional = 0;
  std::optional<IntMatrix> restriction_matrix;
  bool toric = false;                   // projective Gorenstein toric surface
  std::vector<unsigned> cyclic_orders;  // orders of its cyclic quotient points
  std::string label;
};

struct SurfaceReport {
  unsigned rank = 0;
  FinAbGroup k_minus_one;
  bool exact = false;  // computed from a matrix, torsion included
};

SurfaceReport surface_invariants(const SurfaceSpec& spec);
Verdict decide(const SurfaceSpec& surface);

// Stored specs of the two Kawamata threefolds.
VarietySpec nodal_quadric_spec();
VarietySpec kawamata_p2p2_spec();

// Stored spec for a catalog label, if any.
std::optional<VarietySpec> catalog_threefold(const std::string& label);

}  // namespace ksod
