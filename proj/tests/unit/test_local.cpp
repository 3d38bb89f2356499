#include <gtest/gtest.h>

#include "ksod/error.hpp"
#include "ksod/germ.hpp"
#include "ksod/local.hpp"

using namespace ksod;

namespace {
const BiPoly Z = BiPoly::z();
const BiPoly W = BiPoly::w();
}  // namespace

TEST(Classify, NodeA1) {
  const auto s = classify_cAn(Z * Z + W * W);
  EXPECT_EQ(s.n, 1u);
  EXPECT_EQ(s.br, 2u);
  EXPECT_EQ(s.cl_rank, 1u);
  EXPECT_TRUE(s.node);
}

TEST(Classify, D4) {
  const auto s = classify_cAn(Z * Z * W + W.pow(3));
  EXPECT_EQ(s.n, 2u);
  EXPECT_EQ(s.br, 3u);
  EXPECT_EQ(s.cl_rank, 2u);
  EXPECT_FALSE(s.node);
}

TEST(Classify, ProductFormNode) {
  const auto s = classify_cAn(Z * W);
  EXPECT_EQ(s.n, 1u);
  EXPECT_EQ(s.br, 2u);
  EXPECT_EQ(s.cl_rank, 1u);
  EXPECT_TRUE(s.node);
}

TEST(Classify, TacnodeIsNotANode) {
  const auto s = classify_cAn(Z * Z + W.pow(4));
  EXPECT_EQ(s.br, 2u);
  EXPECT_FALSE(s.node);
}

TEST(Classify, PropagatesNotIsolated) {
  try {
    classify_cAn(Z * Z);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIsolated);
  }
}

TEST(AdeLookup, Examples) {
  const auto a4 = ade_lookup(AdeFamily::A, 4);
  EXPECT_EQ(a4.br, 1u);
  EXPECT_EQ(a4.cl_rank, 0u);
  const auto d5 = ade_lookup(AdeFamily::D, 5);
  EXPECT_EQ(d5.br, 2u);
  EXPECT_EQ(d5.cl_rank, 1u);
  const auto e8 = ade_lookup(AdeFamily::E, 8);
  EXPECT_EQ(e8.br, 1u);
  EXPECT_EQ(e8.cl_rank, 0u);
  EXPECT_TRUE(ade_lookup(AdeFamily::A, 1).node);
}

TEST(AdeLookup, UnknownLabels) {
  for (auto [f, i] : std::vector<std::pair<AdeFamily, unsigned>>{
           {AdeFamily::A, 0}, {AdeFamily::D, 3}, {AdeFamily::E, 5}, {AdeFamily::E, 9}}) {
    try {
      ade_lookup(f, i);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::UnknownLabel);
    }
  }
  EXPECT_THROW(parse_ade_family("F"), Error);
  EXPECT_EQ(parse_ade_family("d"), AdeFamily::D);
}

TEST(AdeCatalog, RowsForKOneToThree) {
  const auto rows = ade_catalog_rows(1, 3);
  // A_{2k}: 3, A_{2k-1}: 3, D_{2k}: k=2,3, D_{2k-1}: k=3, E: 3
  EXPECT_EQ(rows.size(), 12u);
  EXPECT_EQ(rows.front().label.to_string(), "A2");
  EXPECT_EQ(rows.back().label.to_string(), "E8");
}

TEST(AdeCatalog, ClassifyReproducesLookup) {
  for (const auto& row : ade_catalog_rows(1, 5)) {
    const auto computed = classify_cAn(row.germ);
    const auto stored = ade_lookup(row.label.family, row.label.index);
    EXPECT_EQ(computed.br, stored.br) << row.label.to_string();
    EXPECT_EQ(computed.cl_rank, stored.cl_rank) << row.label.to_string();
    EXPECT_EQ(computed.n, stored.n) << row.label.to_string();
    EXPECT_EQ(computed.node, stored.node) << row.label.to_string();
  }
}

TEST(AdeCatalog, KnoerrerConsistency) {
  for (const auto& row : ade_catalog_rows(1, 3)) {
    EXPECT_EQ(classify_cAn(row.germ).cl_rank + 1, branch_count(row.germ).branch_count) << row.label.to_string();
  }
}

TEST(AdeCatalog, TableColumns) {
  for (const auto& row : ade_catalog_rows(1, 3)) {
    const std::pair<unsigned, unsigned> expected = [&]() -> std::pair<unsigned, unsigned> {
      if (row.type == "A_{2k}") return {1, 0};
      if (row.type == "A_{2k-1}") return {2, 1};
      if (row.type == "D_{2k}") return {3, 2};
      if (row.type == "D_{2k-1}") return {2, 1};
      if (row.type == "E_7") return {2, 1};
      return {1, 0};
    }();
    EXPECT_EQ(std::make_pair(row.br, row.cl_rank), expected) << row.type;
  }
}

TEST(FromBranches, Validates) {
  EXPECT_EQ(from_branches(3).cl_rank, 2u);
  EXPECT_THROW(from_branches(0), Error);
}

TEST(AdeLabels, Parse) {
  EXPECT_EQ(parse_ade_label("A1"), (AdeLabel{AdeFamily::A, 1}));
  EXPECT_EQ(parse_ade_label(" d_5 "), (AdeLabel{AdeFamily::D, 5}));
  EXPECT_EQ(parse_ade_label("E8"), (AdeLabel{AdeFamily::E, 8}));
  EXPECT_FALSE(parse_ade_label("X2"));
  EXPECT_FALSE(parse_ade_label("z^2+w^3"));
}
