#include <gtest/gtest.h>

#include "generators.hpp"
#include "ksod/error.hpp"
#include "ksod/global.hpp"

using namespace ksod;

namespace {

VarietySpec nodal(unsigned nodes, unsigned pic, unsigned cl) {
  VarietySpec s;
  s.singularities.assign(nodes, ade_lookup(AdeFamily::A, 1));
  s.pic_rank = pic;
  s.cl_rank = cl;
  return s;
}

ErrorKind kind_of(const VarietySpec& s) {
  try {
    threefold_invariants(s);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::InvalidInput;
}

unsigned binom(unsigned n, unsigned k) {
  if (k > n) return 0;
  unsigned long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<unsigned>(r);
}

}  // namespace

TEST(Threefold, NodalQuadricRanks) {
  const auto r = threefold_invariants(nodal(1, 1, 2));
  EXPECT_EQ(r.L, 1u);
  EXPECT_EQ(r.delta, 1u);
  EXPECT_EQ(r.k_minus_one.free_rank(), 0u);
  EXPECT_EQ(r.enough_weil, EnoughWeil::RankZeroUnverified);
  EXPECT_TRUE(r.nodal);
  EXPECT_FALSE(r.maximally_nonfactorial());
}

TEST(Threefold, NodalQuadricWithMatrix) {
  VarietySpec s = nodal(1, 1, 2);
  s.restriction_matrix = IntMatrix::from_rows({{1}});
  const auto r = threefold_invariants(s);
  EXPECT_TRUE(r.k_minus_one.is_trivial());
  EXPECT_EQ(r.enough_weil, EnoughWeil::Yes);
  EXPECT_TRUE(r.maximally_nonfactorial());
}

TEST(Threefold, FactorialOneNode) {
  const auto r = threefold_invariants(nodal(1, 2, 2));
  EXPECT_EQ(r.k_minus_one, FinAbGroup::free(1));
  EXPECT_EQ(r.enough_weil, EnoughWeil::No);
}

TEST(Threefold, HypersurfaceWithSmallDefect) {
  for (unsigned r = 1; r <= 6; ++r) {
    for (unsigned d = 0; d < r; ++d) {
      EXPECT_EQ(threefold_invariants(nodal(r, 1, 1 + d)).k_minus_one.free_rank(), r - d);
    }
  }
}

TEST(Threefold, TorsionFromMatrix) {
  VarietySpec s = nodal(1, 1, 2);
  s.restriction_matrix = IntMatrix::from_rows({{2}});
  const auto r = threefold_invariants(s);
  EXPECT_EQ(r.k_minus_one, FinAbGroup::from_cyclic_orders({Integer(2)}));
  EXPECT_EQ(r.enough_weil, EnoughWeil::No);
}

TEST(Threefold, MixedSingularitiesCountBranches) {
  VarietySpec s;
  s.singularities = {ade_lookup(AdeFamily::D, 4), ade_lookup(AdeFamily::A, 2), from_branches(4)};
  s.pic_rank = 1;
  s.cl_rank = 3;
  const auto r = threefold_invariants(s);
  EXPECT_EQ(r.L, 2u + 0u + 3u);
  EXPECT_EQ(r.k_minus_one.free_rank(), 3u);
  EXPECT_FALSE(r.nodal);
}

TEST(Threefold, Errors) {
  EXPECT_EQ(kind_of(nodal(1, 1, 3)), ErrorKind::DefectExceedsL);
  VarietySpec wrong_shape = nodal(2, 1, 2);
  wrong_shape.restriction_matrix = IntMatrix::from_rows({{1}});
  EXPECT_EQ(kind_of(wrong_shape), ErrorKind::MatrixShapeMismatch);
  VarietySpec deficient = nodal(2, 1, 3);
  deficient.restriction_matrix = IntMatrix::from_rows({{1, 1}, {1, 1}});
  EXPECT_EQ(kind_of(deficient), ErrorKind::RankDeficient);
  VarietySpec surface = nodal(1, 1, 1);
  surface.dimension = 2;
  EXPECT_EQ(kind_of(surface), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(nodal(1, 2, 1)), ErrorKind::InvalidInput);
}

TEST(Threefold, DefectNeverExceedsLAndRankIsDifference) {
  ksod::testing::Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto nodes = static_cast<unsigned>(ksod::testing::uniform(rng, 0, 6));
    const auto pic = static_cast<unsigned>(ksod::testing::uniform(rng, 1, 3));
    const auto delta = static_cast<unsigned>(ksod::testing::uniform(rng, 0, 7));
    VarietySpec s = nodal(nodes, pic, pic + delta);
    if (delta > nodes) {
      EXPECT_EQ(kind_of(s), ErrorKind::DefectExceedsL);
      continue;
    }
    const auto r = threefold_invariants(s);
    EXPECT_LE(r.delta, r.L);
    EXPECT_EQ(r.k_minus_one.free_rank(), r.L - r.delta);
    // A full-rank matrix refines the answer but never lowers the rank.
    if (delta > 0) {
      s.restriction_matrix = ksod::testing::random_matrix(rng, nodes, delta, 3);
      try {
        const auto exact = threefold_invariants(s);
        EXPECT_EQ(exact.k_minus_one.free_rank(), r.L - r.delta);
        EXPECT_EQ(exact.enough_weil == EnoughWeil::Yes, exact.k_minus_one.is_trivial());
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::RankDeficient);
      }
    }
  }
}

TEST(SmallResolution, Examples) {
  EXPECT_EQ(small_resolution_rank(6, 4, 1, 1).rank, 2u);
  EXPECT_EQ(small_resolution_rank(28, 7, 1, 1).rank, 21u);
  EXPECT_EQ(small_resolution_rank(5, 5, 2, 2).rank, 0u);
  EXPECT_EQ(small_resolution_rank(6, 4, 1, 1).delta, 4u);
  EXPECT_THROW(small_resolution_rank(1, 4, 1, 1), Error);
}

TEST(SurfaceRank, Examples) {
  EXPECT_EQ(surface_rank(3, 3, 0), 0u);
  EXPECT_EQ(surface_rank(1, 2, 1), 0u);
  EXPECT_EQ(surface_rank(1, 3, 3), 1u);
  EXPECT_THROW(surface_rank(1, 4, 1), Error);
}

TEST(DelPezzo, TableRows) {
  const unsigned expected[6][5] = {
      {28, 1, 8, 21, 0}, {16, 1, 7, 10, 0}, {10, 1, 6, 5, 0}, {6, 1, 5, 2, 0}, {3, 1, 4, 0, 0}, {1, 2, 3, 0, 0}};
  for (unsigned d = 1; d <= 6; ++d) {
    const auto row = del_pezzo_case(d);
    EXPECT_EQ(row.nodes, expected[d - 1][0]) << d;
    EXPECT_EQ(row.pic_rank, expected[d - 1][1]) << d;
    EXPECT_EQ(row.cl_rank, expected[d - 1][2]) << d;
    EXPECT_EQ(row.k_rank, expected[d - 1][3]) << d;
  }
  EXPECT_EQ(del_pezzo_case(3).verdict, Decision::No);
  EXPECT_EQ(del_pezzo_case(5).verdict, Decision::Unknown);
  EXPECT_EQ(del_pezzo_case(6).verdict, Decision::Yes);
  EXPECT_THROW(del_pezzo_case(0), Error);
  EXPECT_THROW(del_pezzo_case(7), Error);
}

TEST(DelPezzo, RankMatchesClosedForm) {
  for (unsigned d = 3; d <= 5; ++d) {
    EXPECT_EQ(del_pezzo_case(d).nodes, binom(8 - d, 2));
    EXPECT_EQ(del_pezzo_case(d).k_rank, (8 - d) * (5 - d) / 2);
  }
}

TEST(DelPezzo, SpecAgreesWithThreefoldInvariants) {
  for (unsigned d = 1; d <= 6; ++d) {
    const auto row = del_pezzo_case(d);
    const auto r = threefold_invariants(del_pezzo_spec(d));
    EXPECT_EQ(r.L, row.nodes);
    EXPECT_EQ(r.k_minus_one.free_rank(), row.k_rank);
  }
}
