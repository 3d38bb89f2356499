#include "ksod/verdict.hpp"

#include <algorithm>
#include <numeric>

#include "ksod/error.hpp"

namespace ksod {

namespace {

const char* const kCheltsovNote = "Cheltsov conjecture lists the quadric, V5 and V22";

Verdict obstructed(const FinAbGroup& k) {
  Verdict v;
  v.decision = Decision::No;
  v.obstruction = k;
  v.k_minus_one = k;
  return v;
}

Verdict certified(Certificate c, const FinAbGroup& k) {
  Verdict v;
  v.decision = Decision::Yes;
  v.certificate = std::move(c);
  v.k_minus_one = k;
  return v;
}

void attach_quiver(Certificate& c, QuiverWithRelations q) {
  c.algebra_dimensions.push_back(algebra_basis(q).dimension());
  c.quivers.push_back(std::move(q));
}

// The algebra of two lines meeting in a node, shared by both Kawamata
// threefolds.
QuiverWithRelations node_algebra() { return burban_quiver(DualGraph::chain(2)); }

struct CatalogEntry {
  const char* label;
  CertificateKind kind;
  VarietySpec (*spec)();
};

const CatalogEntry kCatalog[] = {
    {"nodal-quadric", CertificateKind::KawamataQuadric, nodal_quadric_spec},
    {"kawamata-p2p2-section", CertificateKind::KawamataP2P2Section, kawamata_p2p2_spec},
};

bool same_invariants(const VarietySpec& a, const VarietySpec& b) {
  if (a.pic_rank != b.pic_rank || a.cl_rank != b.cl_rank || a.singularities.size() != b.singularities.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.singularities.size(); ++i) {
    if (a.singularities[i].node != b.singularities[i].node || a.singularities[i].br != b.singularities[i].br) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::SmoothTrivial: return "SmoothTrivial";
    case CertificateKind::BurbanTree: return "BurbanTree";
    case CertificateKind::KawamataQuadric: return "KawamataQuadric";
    case CertificateKind::KawamataP2P2Section: return "KawamataP2P2Section";
    case CertificateKind::ToricSurface: return "ToricSurface";
    case CertificateKind::BlowupOfYesPair: return "BlowupOfYesPair";
  }
  return {};
}

VarietySpec nodal_quadric_spec() {
  VarietySpec s;
  s.dimension = 3;
  s.singularities = {classify_cAn(BiPoly::z() * BiPoly::w())};
  s.pic_rank = 1;
  s.cl_rank = 2;
  // Cl(X) = Z H + Z D1 with D1 a plane through the node; D1 restricts to a
  // generator of the local class group.
  s.restriction_matrix = IntMatrix::from_rows({{1}});
  s.label = "nodal-quadric";
  s.fano = true;
  return s;
}

VarietySpec kawamata_p2p2_spec() {
  VarietySpec s;
  s.dimension = 3;
  s.singularities = {classify_cAn(BiPoly::z() * BiPoly::w())};
  s.pic_rank = 2;
  s.cl_rank = 3;
  s.restriction_matrix = IntMatrix::from_rows({{1}});
  s.label = "kawamata-p2p2-section";
  return s;
}

std::optional<VarietySpec> catalog_threefold(const std::string& label) {
  for (const auto& entry : kCatalog) {
    if (label == entry.label) return entry.spec();
  }
  return std::nullopt;
}

void verify_certificate(const Certificate& c) {
  if (c.quivers.size() != c.algebra_dimensions.size()) {
    throw Error(ErrorKind::InvalidInput, "certificate lists " + std::to_string(c.quivers.size()) + " quivers but " +
                                             std::to_string(c.algebra_dimensions.size()) + " dimensions");
  }
  for (std::size_t i = 0; i < c.quivers.size(); ++i) {
    const std::size_t dim = algebra_basis(c.quivers[i]).dimension();
    if (dim != c.algebra_dimensions[i]) {
      throw Error(ErrorKind::InvalidInput, "certificate algebra " + std::to_string(i + 1) + " has dimension " +
                                               std::to_string(dim) + ", recorded " +
                                               std::to_string(c.algebra_dimensions[i]));
    }
  }
  for (unsigned n : c.algebra_orders) {
    if (n == 0) throw Error(ErrorKind::InvalidInput, "toric block k[z]/(z^0) is zero");
  }
  for (const auto& part : c.parts) verify_certificate(part);
}

Verdict decide(const CurveSpec& curve) {
  const FinAbGroup k = curve_k_minus_one(curve);
  if (!k.is_trivial()) return obstructed(k);

  if (const auto* g = std::get_if<DualGraph>(&curve.data)) {
    if (g->edges.empty()) return certified({CertificateKind::SmoothTrivial, {}, {}, {}, {}}, k);
    Certificate c{CertificateKind::BurbanTree, {}, {}, {}, {}};
    for (const auto& comp : connected_components(*g)) {
      const DualGraph sub = induced_subgraph(*g, comp);
      if (!is_tree_of_lines(sub)) {
        Verdict v;
        v.k_minus_one = k;
        v.notes.push_back("K_-1 vanishes but a component is not a tree of smooth rational curves");
        return v;
      }
      attach_quiver(c, burban_quiver(sub));
    }
    return certified(std::move(c), k);
  }

  const auto& pieces = std::get<std::vector<CurvePiece>>(curve.data);
  const bool smooth = std::all_of(pieces.begin(), pieces.end(), [](const CurvePiece& p) { return p.branches.empty(); });
  if (smooth) return certified({CertificateKind::SmoothTrivial, {}, {}, {}, {}}, k);
  Verdict v;
  v.k_minus_one = k;
  v.notes.push_back("K_-1 vanishes; a certificate needs a nodal tree of projective lines");
  return v;
}

Verdict decide(const VarietySpec& threefold) {
  VarietySpec spec = threefold;
  std::optional<CertificateKind> catalog_kind;
  std::vector<std::string> notes;
  if (!spec.label.empty()) {
    for (const auto& entry : kCatalog) {
      if (spec.label != entry.label) continue;
      const VarietySpec stored = entry.spec();
      if (!same_invariants(spec, stored)) {
        throw Error(ErrorKind::InvalidInput, "spec labelled '" + spec.label + "' does not match the stored invariants");
      }
      if (!spec.restriction_matrix) {
        spec.restriction_matrix = stored.restriction_matrix;
        notes.push_back("restriction matrix taken from the catalog entry '" + spec.label + "'");
      }
      catalog_kind = entry.kind;
    }
  }

  const GlobalReport r = threefold_invariants(spec);
  if (!r.k_minus_one.is_trivial()) {
    Verdict v = obstructed(r.k_minus_one);
    v.notes = notes;
    return v;
  }
  if (spec.singularities.empty()) {
    Verdict v = certified({CertificateKind::SmoothTrivial, {}, {}, {}, {}}, r.k_minus_one);
    v.notes = notes;
    return v;
  }
  if (catalog_kind && r.enough_weil == EnoughWeil::Yes) {
    Certificate c{*catalog_kind, {}, {}, {}, {}};
    attach_quiver(c, node_algebra());
    Verdict v = certified(std::move(c), r.k_minus_one);
    v.notes = notes;
    return v;
  }

  Verdict v;
  v.k_minus_one = r.k_minus_one;
  v.notes = notes;
  if (r.enough_weil == EnoughWeil::RankZeroUnverified) {
    v.notes.push_back("rk K_-1 = 0 but integral vanishing is unverified without a restriction matrix");
  }
  if (spec.fano && spec.pic_rank == 1) v.notes.push_back(kCheltsovNote);
  return v;
}

SurfaceReport surface_invariants(const SurfaceSpec& spec) {
  SurfaceReport r;
  r.rank = surface_rank(spec.rho_X, spec.rho_resolution, spec.n_exceptional);
  if (spec.toric) {
    unsigned expected = 0;
    for (unsigned n : spec.cyclic_orders) {
      if (n < 2) throw Error(ErrorKind::InvalidInput, "cyclic quotient orders must be at least 2");
      expected += n - 1;
    }
    if (expected != spec.n_exceptional) {
      throw Error(ErrorKind::InvalidInput, "Gorenstein cyclic quotient points of orders n_i need sum(n_i - 1) = " +
                                               std::to_string(expected) + " exceptional curves, got " +
                                               std::to_string(spec.n_exceptional));
    }
  }
  if (spec.restriction_matrix) {
    const IntMatrix& m = *spec.restriction_matrix;
    if (m.rows() != spec.n_exceptional || m.cols() != spec.rho_resolution) {
      throw Error(ErrorKind::MatrixShapeMismatch, "surface restriction matrix must be " +
                                                      std::to_string(spec.n_exceptional) + "x" +
                                                      std::to_string(spec.rho_resolution));
    }
    if (m.rank() != spec.rho_resolution - spec.rho_X) {
      throw Error(ErrorKind::RankDeficient, "restriction matrix rank must be rho_resolution - rho_X = " +
                                                std::to_string(spec.rho_resolution - spec.rho_X));
    }
    r.k_minus_one = cokernel(m);
    r.exact = true;
  } else {
    r.k_minus_one = FinAbGroup::free(r.rank);
  }
  return r;
}

Verdict decide(const SurfaceSpec& surface) {
  const SurfaceReport r = surface_invariants(surface);
  if (!r.k_minus_one.is_trivial()) return obstructed(r.k_minus_one);
  if (surface.n_exceptional == 0 && surface.cyclic_orders.empty()) {
    return certified({CertificateKind::SmoothTrivial, {}, {}, {}, {}}, r.k_minus_one);
  }
  if (surface.toric && r.exact) {
    Certificate c{CertificateKind::ToricSurface, {}, {}, surface.cyclic_orders, {}};
    std::sort(c.algebra_orders.begin(), c.algebra_orders.end());
    return certified(std::move(c), r.k_minus_one);
  }
  Verdict v;
  v.k_minus_one = r.k_minus_one;
  if (!r.exact) v.notes.push_back("rk K_-1 = 0 but torsion is unverified without a restriction matrix");
  if (!surface.toric) v.notes.push_back("no certified construction for non-toric surfaces");
  return v;
}

}  // namespace ksod
