#include "ksod/global.hpp"

#include <algorithm>

#include "ksod/error.hpp"

namespace ksod {

namespace {

unsigned binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return static_cast<unsigned>(b.get_ui());
}

}  // namespace

std::string to_string(EnoughWeil e) {
  switch (e) {
    case EnoughWeil::Yes: return "yes";
    case EnoughWeil::No: return "no";
    case EnoughWeil::RankZeroUnverified: return "rank-zero-unverified";
  }
  return {};
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::No: return "No";
    case Decision::Yes: return "Yes";
    case Decision::Unknown: return "Unknown";
  }
  return {};
}

GlobalReport threefold_invariants(const VarietySpec& spec) {
  if (spec.dimension != 3) throw Error(ErrorKind::InvalidInput, "threefold invariants need dimension 3");
  if (spec.cl_rank < spec.pic_rank) {
    throw Error(ErrorKind::InvalidInput, "class group rank " + std::to_string(spec.cl_rank) +
                                             " is smaller than Picard rank " + std::to_string(spec.pic_rank));
  }
  GlobalReport r;
  for (const auto& s : spec.singularities) {
    if (s.br == 0) throw Error(ErrorKind::InvalidInput, "singular point with zero branches");
    r.L += s.br - 1;
  }
  r.delta = spec.cl_rank - spec.pic_rank;
  r.nodal = !spec.singularities.empty() &&
            std::all_of(spec.singularities.begin(), spec.singularities.end(),
                        [](const LocalSingularity& s) { return s.node; });
  if (r.delta > r.L) {
    throw Error(ErrorKind::DefectExceedsL, "defect " + std::to_string(r.delta) + " exceeds L = " +
                                               std::to_string(r.L) + "; Z^delta cannot inject into Z^L");
  }

  if (spec.restriction_matrix) {
    const IntMatrix& m = *spec.restriction_matrix;
    if (m.rows() != r.L || m.cols() != r.delta) {
      throw Error(ErrorKind::MatrixShapeMismatch, "restriction matrix is " + std::to_string(m.rows()) + "x" +
                                                      std::to_string(m.cols()) + ", expected " +
                                                      std::to_string(r.L) + "x" + std::to_string(r.delta));
    }
    if (m.rank() != r.delta) {
      throw Error(ErrorKind::RankDeficient, "restriction matrix must have full column rank " +
                                                std::to_string(r.delta));
    }
    r.k_minus_one = cokernel(m);
    r.enough_weil = r.k_minus_one.is_trivial() ? EnoughWeil::Yes : EnoughWeil::No;
    return r;
  }

  r.k_minus_one = FinAbGroup::free(r.L - r.delta);
  if (r.L > r.delta) {
    r.enough_weil = EnoughWeil::No;
  } else {
    r.enough_weil = r.L == 0 ? EnoughWeil::Yes : EnoughWeil::RankZeroUnverified;
  }
  return r;
}

SmallResolution small_resolution_rank(unsigned r, unsigned mu, unsigned rho_X, unsigned rho_Y) {
  const long rank = static_cast<long>(r) - mu + rho_X - static_cast<long>(rho_Y);
  const long delta = static_cast<long>(mu) + rho_Y - static_cast<long>(rho_X);
  if (rank < 0 || delta < 0) {
    throw Error(ErrorKind::NegativeResult, "small resolution data gives rank " + std::to_string(rank) +
                                               " and defect " + std::to_string(delta));
  }
  return {static_cast<unsigned>(rank), static_cast<unsigned>(delta)};
}

unsigned surface_rank(unsigned rho_X, unsigned rho_resolution, unsigned n_exceptional) {
  const long rank = static_cast<long>(n_exceptional) - (static_cast<long>(rho_resolution) - rho_X);
  if (rank < 0 || rho_resolution < rho_X) {
    throw Error(ErrorKind::NegativeResult, "surface resolution data gives rank " + std::to_string(rank));
  }
  return static_cast<unsigned>(rank);
}

DelPezzoRow del_pezzo_case(unsigned d) {
  if (d < 1 || d > 6) throw Error(ErrorKind::OutOfRange, "del Pezzo degree must be in 1..6");
  constexpr unsigned rho_Y = 1;
  const unsigned mu = 8 - d;
  // Nodes come from lines through two of the points and twisted cubics
  // through six of them.
  const unsigned nodes = binomial(mu, 2) + binomial(mu, 6);
  // Degree 6 is the Picard rank two contraction of the blow-up of two points.
  const unsigned rho_X = d == 6 ? 2 : 1;
  const SmallResolution sr = small_resolution_rank(nodes, mu, rho_X, rho_Y);

  DelPezzoRow row;
  row.d = d;
  row.nodes = nodes;
  row.pic_rank = rho_X;
  row.cl_rank = rho_X + sr.delta;
  row.k_rank = sr.rank;
  if (row.k_rank > 0) {
    row.verdict = Decision::No;
  } else {
    row.verdict = d == 6 ? Decision::Yes : Decision::Unknown;
  }
  return row;
}

VarietySpec del_pezzo_spec(unsigned d) {
  const DelPezzoRow row = del_pezzo_case(d);
  VarietySpec spec;
  spec.dimension = 3;
  spec.singularities.assign(row.nodes, ade_lookup(AdeFamily::A, 1));
  spec.pic_rank = row.pic_rank;
  spec.cl_rank = row.cl_rank;
  spec.fano = row.pic_rank == 1;
  spec.label = d == 6 ? "kawamata-p2p2-section" : "del-pezzo-" + std::to_string(d);
  if (d == 6) spec.restriction_matrix = IntMatrix::from_rows({{1}});
  return spec;
}

}  // namespace ksod
