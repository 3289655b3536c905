#include <gtest/gtest.h>

#include "liebound/symmetric_spaces.hpp"

using namespace liebound;
using K = SpaceTag::Kind;

namespace {

std::vector<SimpleType> types_up_to(int max_rank) {
  std::vector<SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int r = 1; r <= max_rank; ++r)
      if (valid_rank(f, r)) out.push_back({f, r});
  return out;
}

std::size_t expected_pair_count(SimpleType t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return (n + 1) / 2;
    case Family::B: return n;
    case Family::C: return n / 2 + 1;
    case Family::D: return n == 4 ? 2 : n / 2 + 1;
    case Family::E: return n == 6 ? 2 : n == 7 ? 3 : 2;
    case Family::F: return 2;
    case Family::G: return 1;
  }
  return 0;
}

}  // namespace

TEST(SpanningNumber, Values) {
  EXPECT_EQ(ell_symmetric_space(SpaceTag::sphere(2)), 3);
  EXPECT_EQ(ell_symmetric_space(SpaceTag::sphere(7)), 8);
  EXPECT_EQ(ell_symmetric_space(SpaceTag::grassmannian(K::RealGrassmannian, 7, 2)), 4);
  EXPECT_EQ(ell_symmetric_space(SpaceTag::grassmannian(K::RealGrassmannian, 7, 5)), 4);
  EXPECT_EQ(ell_symmetric_space(SpaceTag::grassmannian(K::ComplexGrassmannian, 9, 1)), 9);
  EXPECT_EQ(ell_symmetric_space(SpaceTag::grassmannian(K::ComplexGrassmannian, 8, 4)), 3);
  EXPECT_EQ(ell_symmetric_space(SpaceTag::grassmannian(K::QuatGrassmannian, 3, 1)), 4);
  EXPECT_EQ(ell_symmetric_space(SpaceTag::grassmannian(K::QuatGrassmannian, 5, 2)), 3);
  EXPECT_EQ(ell_symmetric_space(SpaceTag::hermitian(K::HermitianC, 4)), 3);
  EXPECT_EQ(ell_symmetric_space(SpaceTag::hermitian(K::HermitianD, 6)), 3);
  EXPECT_EQ(ell_symmetric_space(SpaceTag::exceptional("F4/Spin9")), 4);
  EXPECT_EQ(ell_symmetric_space(SpaceTag::exceptional("E8/SO16")), 3);
  EXPECT_THROW(ell_symmetric_space(SpaceTag::exceptional("E9/X")), std::invalid_argument);
  EXPECT_THROW(ell_symmetric_space(SpaceTag::grassmannian(K::RealGrassmannian, 4, 4)), std::invalid_argument);
}

TEST(SpanningNumber, LowRankCoincidences) {
  // HGr(2,1) = S^4, so ell is 5 rather than the Grassmannian value 3
  EXPECT_EQ(canonicalize(SpaceTag::grassmannian(K::QuatGrassmannian, 2, 1)), SpaceTag::sphere(4));
  EXPECT_EQ(ell_symmetric_space(SpaceTag::grassmannian(K::QuatGrassmannian, 2, 1)), 5);
  EXPECT_EQ(ell_symmetric_space(SpaceTag::grassmannian(K::ComplexGrassmannian, 2, 1)), 3);
  EXPECT_EQ(ell_symmetric_space(SpaceTag::hermitian(K::HermitianC, 1)), 3);
  EXPECT_EQ(canonicalize(SpaceTag::hermitian(K::HermitianD, 3)), SpaceTag::grassmannian(K::ComplexGrassmannian, 4, 1));
  EXPECT_EQ(canonicalize(SpaceTag::hermitian(K::HermitianD, 4)), SpaceTag::grassmannian(K::RealGrassmannian, 8, 2));
  EXPECT_EQ(ell_symmetric_space(SpaceTag::hermitian(K::HermitianD, 3)), 4);
  EXPECT_EQ(ell_symmetric_space(SpaceTag::grassmannian(K::RealGrassmannian, 5, 1)), 5);
  EXPECT_EQ(canonicalize(SpaceTag::grassmannian(K::RealGrassmannian, 4, 2)).kind, K::Product);
  EXPECT_EQ(ell_symmetric_space(SpaceTag::grassmannian(K::RealGrassmannian, 4, 2)), 3);
  EXPECT_THROW(canonicalize(SpaceTag::hermitian(K::HermitianD, 2)), std::invalid_argument);
}

TEST(SymmetricPairs, CountsUpToRank8) {
  for (SimpleType t : types_up_to(8)) EXPECT_EQ(enumerate_inner_symmetric_pairs(t).size(), expected_pair_count(t)) << t.name();
}

TEST(SymmetricPairs, Invariants) {
  for (SimpleType t : types_up_to(8)) {
    const RootDatum rd = build_root_datum(t);
    for (const auto& p : enumerate_inner_symmetric_pairs(rd)) {
      EXPECT_TRUE(p.mark == 1 || p.mark == 2) << t.name();
      EXPECT_EQ(p.k_torus_dim, p.mark == 1 ? 1 : 0) << t.name();
      long ss_rank = 0, ss_dim = 0;
      for (const auto& k : p.k_semisimple) {
        ss_rank += k.rank;
        ss_dim += group_dimension(build_root_datum(k));
      }
      EXPECT_EQ(ss_rank + p.k_torus_dim, t.rank) << "maximal rank in " << t.name();
      EXPECT_EQ(ss_dim + p.k_torus_dim, p.dim_k) << t.name();
      EXPECT_EQ(p.dim_k + p.dim_gk, group_dimension(rd)) << t.name();
      EXPECT_GT(p.dim_gk, 0);
      EXPECT_EQ(p.ell, ell_symmetric_space(p.space_tag)) << t.name();
      EXPECT_GE(p.ell, 3);
    }
  }
}

TEST(SymmetricPairs, Exceptional) {
  auto names = [](const char* t) {
    std::set<std::string> s;
    for (const auto& p : enumerate_inner_symmetric_pairs(parse_type(t))) s.insert(to_string(p.space_tag));
    return s;
  };
  EXPECT_EQ(names("G2"), (std::set<std::string>{"G2/SO4"}));
  EXPECT_EQ(names("F4"), (std::set<std::string>{"F4/Sp3Sp1", "F4/Spin9"}));
  EXPECT_EQ(names("E6"), (std::set<std::string>{"E6/Spin10U1", "E6/SU6SU2"}));
  EXPECT_EQ(names("E7"), (std::set<std::string>{"E7/E6U1", "E7/SU8", "E7/Spin12SU2"}));
  EXPECT_EQ(names("E8"), (std::set<std::string>{"E8/SO16", "E8/E7SU2"}));
}

TEST(SymmetricPairs, G2Dimensions) {
  const auto pairs = enumerate_inner_symmetric_pairs(parse_type("G2"));
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].dim_k, 6);
  EXPECT_EQ(pairs[0].dim_gk, 8);
  EXPECT_EQ(pairs[0].ell, 3);
}

TEST(EllGroup, TabulatedValues) {
  auto ell = [](Family f, int r) { return ell_group({f, r}).computed; };
  EXPECT_EQ(ell(Family::A, 1), 18);
  for (int n = 3; n <= 9; ++n) EXPECT_EQ(ell(Family::A, n - 1), 2 * n * n + 2 * n) << "SU(" << n << ")";
  for (int n = 3; n <= 13; n += 2)
    EXPECT_EQ(n == 3 ? ell(Family::A, 1) : ell(Family::B, (n - 1) / 2), n * n + 3 * n) << "SO(" << n << ")";
  EXPECT_EQ(ell(Family::C, 3), 48);
  EXPECT_EQ(ell(Family::C, 4), 72);
  EXPECT_EQ(ell(Family::C, 5), 102);
  for (int n = 6; n <= 8; ++n) EXPECT_EQ(ell(Family::C, n), 4 * n * n);
  EXPECT_EQ(ell(Family::G, 2), 36);
  EXPECT_EQ(ell(Family::E, 6), 132);
  EXPECT_EQ(ell(Family::E, 7), 222);
  EXPECT_EQ(ell(Family::E, 8), 396);
}

TEST(EllGroup, KnownDisagreements) {
  // F4: max(4*(4+16), 3*(4+28)) over its two pairs
  const auto f4 = ell_group(parse_type("F4"), 84);
  EXPECT_EQ(f4.computed, 96);
  EXPECT_FALSE(f4.agrees);
  EXPECT_EQ(to_string(f4.argmax_pair.space_tag), "F4/Sp3Sp1");
  // SO(6) through SU(4): 2*16 + 8
  EXPECT_EQ(ell_group(parse_type("D3")).computed, 40);
  EXPECT_EQ(ell_group(parse_type("D3")).computed, ell_group(parse_type("A3")).computed);
  for (int n : {6, 8, 10, 12}) EXPECT_LT(ell_group({Family::D, n / 2}).computed, n * n + 3 * n) << n;
}

TEST(EllGroup, AgreementFlag) {
  const auto g2 = ell_group(parse_type("G2"), 36);
  EXPECT_TRUE(g2.agrees);
  EXPECT_EQ(g2.argmax_pair.ambient, parse_type("G2"));
  EXPECT_FALSE(ell_group(parse_type("G2")).agrees);
}
