#include <gtest/gtest.h>

#include <random>

#include "liebound/boundary.hpp"
#include "liebound/representations.hpp"
#include "oracles.hpp"

using namespace liebound;

namespace {

RootDatum rd_of(const char* name) { return build_root_datum(parse_type(name)); }

std::vector<SimpleType> types_up_to(int max_rank) {
  std::vector<SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int r = 1; r <= max_rank; ++r)
      if (valid_rank(f, r)) out.push_back({f, r});
  return out;
}

Weight fundamental(int rank, int node) {
  Weight w(rank, 0);
  w[node - 1] = 1;
  return w;
}

oracle::Character to_character(const WeightSystem& ws) {
  oracle::Character c;
  for (const auto& [mu, m] : ws.entries) c[mu] = m;
  return c;
}

}  // namespace

TEST(WeylDimension, Examples) {
  EXPECT_EQ(weyl_dimension(rd_of("A1"), {2}), 3);
  EXPECT_EQ(weyl_dimension(rd_of("A2"), {1, 1}), 8);
  EXPECT_EQ(weyl_dimension(rd_of("G2"), {1, 0}), 7);
  EXPECT_EQ(weyl_dimension(rd_of("G2"), {0, 1}), 14);
  EXPECT_EQ(weyl_dimension(rd_of("G2"), {2, 0}), 27);
  EXPECT_EQ(weyl_dimension(rd_of("B4"), {0, 0, 0, 1}), 16);
  EXPECT_EQ(weyl_dimension(rd_of("A7"), {0, 0, 0, 1, 0, 0, 0}), 70);
  EXPECT_EQ(weyl_dimension(rd_of("D8"), {0, 0, 0, 0, 0, 0, 0, 1}), 128);
  EXPECT_EQ(weyl_dimension(rd_of("E6"), {1, 0, 0, 0, 0, 0}), 27);
  EXPECT_EQ(weyl_dimension(rd_of("E7"), {0, 0, 0, 0, 0, 0, 1}), 56);
  EXPECT_EQ(weyl_dimension(rd_of("E8"), {0, 0, 0, 0, 0, 0, 0, 1}), 248);
  EXPECT_EQ(weyl_dimension(rd_of("F4"), {0, 0, 0, 1}), 26);
  EXPECT_THROW(weyl_dimension(rd_of("A2"), {1, -1}), std::invalid_argument);
  EXPECT_THROW(weyl_dimension(rd_of("A2"), {1}), std::invalid_argument);
}

TEST(WeylDimension, LargeValuesStayExact) {
  const BigInt d = weyl_dimension(rd_of("E8"), {5, 5, 5, 5, 5, 5, 5, 5});
  EXPECT_GT(d, BigInt(std::numeric_limits<long long>::max()));
  // hw = rho gives prod over positive roots of 2<rho,a^vee>/<rho,a^vee> = 2^120
  EXPECT_EQ(weyl_dimension(rd_of("E8"), {1, 1, 1, 1, 1, 1, 1, 1}), BigInt(1) << 120);
}

TEST(WeylDimension, AdjointIsGroupDimension) {
  for (SimpleType t : types_up_to(8)) {
    const RootDatum rd = build_root_datum(t);
    EXPECT_EQ(weyl_dimension(rd, rd.root_to_labels(rd.highest_root_marks)), group_dimension(rd)) << t.name();
  }
}

TEST(WeightSystem, G2TwoZero) {
  const WeightSystem ws = weight_system(rd_of("G2"), {2, 0});
  EXPECT_EQ(ws.total(), 27);
  int ones = 0, twos = 0;
  for (const auto& [mu, m] : ws.entries) {
    if (mu == Weight{0, 0}) {
      EXPECT_EQ(m, 3);
      continue;
    }
    if (m == 1) ++ones;
    if (m == 2) ++twos;
  }
  EXPECT_EQ(ones, 12);
  EXPECT_EQ(twos, 6);
  EXPECT_EQ(ws.entries.size(), 19u);
}

TEST(WeightSystem, A2Adjoint) {
  const WeightSystem ws = weight_system(rd_of("A2"), {1, 1});
  EXPECT_EQ(ws.total(), 8);
  EXPECT_EQ(ws.multiplicity({0, 0}), 2);
  EXPECT_EQ(ws.multiplicity({1, 1}), 1);
  EXPECT_EQ(ws.multiplicity({-1, 2}), 1);
  EXPECT_EQ(ws.multiplicity({3, 3}), 0);
}

// Property: total equals Weyl dimension and the system is Weyl-invariant, for
// every module of dimension <= 500 over all types of rank <= 4.
TEST(WeightSystem, TotalsAndWeylSymmetryRank4) {
  for (SimpleType t : types_up_to(4)) {
    const RootDatum rd = build_root_datum(t);
    const auto reps = enumerate_irreps_below(rd, 1000);
    int checked = 0;
    for (const auto& rep : reps) {
      if (rep.dim_c > 500) continue;
      const WeightSystem ws = weight_system(rd, rep.highest);
      ASSERT_EQ(BigInt(ws.total()), rep.dim_c) << t.name() << " " << ::testing::PrintToString(rep.highest);
      for (const auto& [mu, m] : ws.entries)
        for (int i = 0; i < rd.rank(); ++i)
          ASSERT_EQ(ws.multiplicity(simple_reflection(rd, mu, i)), m) << t.name();
      ++checked;
    }
    EXPECT_GT(checked, 0) << t.name();
  }
}

// Oracle: Kostant's partition-function formula.
TEST(WeightSystem, MatchesKostant) {
  for (const char* name : {"A1", "A2", "B2", "G2"}) {
    const RootDatum rd = rd_of(name);
    oracle::Kostant k(rd.cartan);
    for (const auto& rep : enumerate_irreps_below(rd, 128)) {
      if (rep.dim_c > 64) continue;
      const WeightSystem ws = weight_system(rd, rep.highest);
      for (const auto& [mu, m] : ws.entries)
        if (is_dominant(mu)) {
          EXPECT_EQ(k.multiplicity(rep.highest, mu), m) << name;
        }
    }
  }
}

// Oracle: characters built from tensor products with fundamental modules.
TEST(WeightSystem, MatchesTensorOracle) {
  struct Case {
    const char* type;
    std::vector<long> zero_weights;  // zero-weight multiplicity of each fundamental
  };
  for (const Case& c : {Case{"A1", {0}}, Case{"A2", {0, 0}}, Case{"B2", {1, 0}}, Case{"G2", {1, 2}}}) {
    const RootDatum rd = rd_of(c.type);
    std::vector<oracle::Character> fund;
    for (int i = 1; i <= rd.rank(); ++i)
      fund.push_back(oracle::orbit_character(rd.cartan, fundamental(rd.rank(), i), c.zero_weights[i - 1]));
    oracle::TensorOracle t(rd.cartan, fund);
    int checked = 0;
    for (const auto& rep : enumerate_irreps_below(rd, 128)) {
      if (rep.dim_c > 64) continue;
      EXPECT_EQ(to_character(weight_system(rd, rep.highest)), t.character(rep.highest))
          << c.type << " " << ::testing::PrintToString(rep.highest);
      ++checked;
    }
    EXPECT_GT(checked, 3) << c.type;
  }
}

TEST(WeightSystem, A2TensorSquareOfAdjoint) {
  // 8 x 8 = 27 + 10 + 10* + 8 + 8 + 1
  const RootDatum rd = rd_of("A2");
  auto ch = [&](Weight w) { return to_character(weight_system(rd, w)); };
  oracle::Character lhs = oracle::multiply(ch({1, 1}), ch({1, 1}));
  oracle::Character rhs;
  for (Weight w : {Weight{2, 2}, Weight{3, 0}, Weight{0, 3}, Weight{1, 1}, Weight{1, 1}, Weight{0, 0}})
    for (const auto& [mu, m] : ch(w)) rhs[mu] += m;
  EXPECT_EQ(lhs, rhs);
}

TEST(FsIndicator, ClassicalFamilies) {
  EXPECT_EQ(fs_indicator(rd_of("A1"), {1}), FsType::quaternionic);
  EXPECT_EQ(fs_indicator(rd_of("A1"), {2}), FsType::real);
  for (int n = 2; n <= 8; ++n) {
    const RootDatum a = build_root_datum({Family::A, n});
    EXPECT_EQ(fs_indicator(a, fundamental(n, 1)), FsType::complex) << n;
    EXPECT_EQ(fs_indicator(a, a.root_to_labels(a.highest_root_marks)), FsType::real) << n;
    if ((n + 1) % 2 == 0) {
      const int k = (n + 1) / 2;
      EXPECT_EQ(fs_indicator(a, fundamental(n, k)), k % 2 == 0 ? FsType::real : FsType::quaternionic) << n;
    }
  }
  for (int n = 2; n <= 8; ++n) {
    const RootDatum b = build_root_datum({Family::B, n});
    EXPECT_EQ(fs_indicator(b, fundamental(n, 1)), FsType::real);
    EXPECT_EQ(fs_indicator(b, fundamental(n, n)), n % 4 == 0 || n % 4 == 3 ? FsType::real : FsType::quaternionic)
        << "spin B" << n;
    const RootDatum c = build_root_datum({Family::C, n});
    EXPECT_EQ(fs_indicator(c, fundamental(n, 1)), FsType::quaternionic);
    EXPECT_EQ(fs_indicator(c, fundamental(n, 2)), FsType::real);
  }
  for (int n = 3; n <= 8; ++n) {
    const RootDatum d = build_root_datum({Family::D, n});
    EXPECT_EQ(fs_indicator(d, fundamental(n, 1)), FsType::real);
    const FsType half = n % 2 == 1 ? FsType::complex : n % 4 == 0 ? FsType::real : FsType::quaternionic;
    EXPECT_EQ(fs_indicator(d, fundamental(n, n)), half) << "half-spin D" << n;
  }
  EXPECT_EQ(fs_indicator(rd_of("E6"), fundamental(6, 1)), FsType::complex);
  EXPECT_EQ(fs_indicator(rd_of("E7"), fundamental(7, 7)), FsType::quaternionic);
  EXPECT_EQ(fs_indicator(rd_of("G2"), {1, 0}), FsType::real);
  EXPECT_EQ(fs_indicator(rd_of("F4"), {0, 0, 0, 1}), FsType::real);
}

TEST(IrrepInfo, RealDimension) {
  const auto c2 = irrep_info(rd_of("A1"), {1});
  EXPECT_EQ(c2.dim_r, 4);
  const auto l4 = irrep_info(rd_of("A7"), fundamental(7, 4));
  EXPECT_EQ(l4.dim_c, 70);
  EXPECT_EQ(l4.fs_type, FsType::real);
  EXPECT_EQ(l4.dim_r, 70);
  const auto e6 = irrep_info(rd_of("E6"), fundamental(6, 1));
  EXPECT_EQ(e6.dim_r, 54);
}

TEST(Enumerate, SortedAndBounded) {
  const RootDatum rd = rd_of("A1");
  const auto reps = enumerate_irreps_below(rd, 18);
  std::vector<Weight> got;
  for (const auto& r : reps) got.push_back(r.highest);
  // dim_r: [2]=3, [1]=4, [4]=5, [3]=8, ...
  EXPECT_EQ(got.front(), Weight{2});
  for (std::size_t k = 1; k < reps.size(); ++k) {
    EXPECT_LE(reps[k - 1].dim_r, reps[k].dim_r);
    EXPECT_LE(reps[k].dim_r, 18);
  }
  EXPECT_NE(std::find(got.begin(), got.end(), Weight{3}), got.end());
  EXPECT_TRUE(enumerate_irreps_below(rd, 0).empty());
}

TEST(Enumerate, MonotoneInBound) {
  for (SimpleType t : types_up_to(4)) {
    const RootDatum rd = build_root_datum(t);
    std::set<Weight> prev;
    for (long b : {10L, 40L, 120L, 300L}) {
      std::set<Weight> cur;
      for (const auto& r : enumerate_irreps_below(rd, b)) cur.insert(r.highest);
      EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) << t.name();
      prev = cur;
    }
  }
}

TEST(Enumerate, CompleteAgainstBox) {
  // every dominant weight with labels <= 6 and dim_r <= 200 is listed
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    const RootDatum rd = rd_of(name);
    std::set<Weight> listed;
    for (const auto& r : enumerate_irreps_below(rd, 200)) listed.insert(r.highest);
    const int n = rd.rank();
    Weight w(n, 0);
    std::function<void(int)> walk = [&](int i) {
      if (i == n) {
        if (std::all_of(w.begin(), w.end(), [](long x) { return x == 0; })) return;
        EXPECT_EQ(irrep_info(rd, w).dim_r <= 200, listed.count(w) == 1) << name;
        return;
      }
      for (long v = 0; v <= 6; ++v) {
        w[i] = v;
        walk(i + 1);
      }
    };
    walk(0);
  }
}

TEST(CentralKernel, Examples) {
  EXPECT_EQ(to_string(central_kernel(rd_of("A7"), fundamental(7, 4))), "Z4");
  EXPECT_EQ(to_string(central_kernel(rd_of("D8"), fundamental(8, 8))), "Z2");
  EXPECT_EQ(to_string(central_kernel(rd_of("A1"), {1})), "trivial");
  EXPECT_EQ(to_string(central_kernel(rd_of("A1"), {2})), "Z2");
  EXPECT_EQ(to_string(central_kernel(rd_of("A5"), fundamental(5, 3))), "Z3");
  EXPECT_EQ(to_string(central_kernel(rd_of("D4"), {0, 1, 0, 0})), "Z2xZ2");
  EXPECT_EQ(central_kernel(rd_of("E8"), fundamental(8, 8)).order, 1);
  EXPECT_EQ(to_string(central_kernel(rd_of("E7"), fundamental(7, 1))), "Z2");
}

TEST(CentralKernel, AdjointKernelIsWholeCenter) {
  for (SimpleType t : types_up_to(8)) {
    const RootDatum rd = build_root_datum(t);
    const KernelDescriptor k = central_kernel(rd, rd.root_to_labels(rd.highest_root_marks));
    EXPECT_EQ(static_cast<std::size_t>(k.order), center_group(rd).elements.size()) << t.name();
    EXPECT_EQ(BigInt(k.order), BigInt(std::abs(center_group(rd).det))) << t.name();
  }
}

// Property: on 100 random module/pair cases, real lifts split each weight
// space into +1 and -1 parts, and the parity changes along a simple root
// exactly when that root is the removed node.
TEST(Involution, ParityAdditivityAndPartition) {
  std::mt19937 rng(20240611);
  const auto types = types_up_to(4);
  int cases = 0;
  while (cases < 100) {
    const SimpleType t = types[rng() % types.size()];
    const RootDatum rd = build_root_datum(t);
    const auto pairs = enumerate_inner_symmetric_pairs(rd);
    if (pairs.empty()) continue;
    const auto reps = enumerate_irreps_below(rd, 300);
    const IrrepInfo& rep = reps[rng() % reps.size()];
    const SymmetricPair& p = pairs[rng() % pairs.size()];
    const WeightSystem ws = weight_system(rd, rep.highest);
    const auto acts = real_lifts(rd, p, rep.highest);
    if (acts.empty()) continue;
    for (const auto& act : acts) {
      EXPECT_EQ(fixed_subspace_dim(ws, act) + odd_subspace_dim(ws, act), ws.total()) << t.name();
      for (const auto& [mu, m] : ws.entries) {
        ASSERT_TRUE(act.parity_of(mu).has_value());
        for (int i = 0; i < rd.rank(); ++i) {
          Weight lower = mu;
          for (int j = 0; j < rd.rank(); ++j) lower[j] -= rd.cartan[j][i];
          if (!ws.multiplicity(lower)) continue;
          const int flip = (*act.parity_of(mu) + *act.parity_of(lower)) % 2;
          EXPECT_EQ(flip, i + 1 == p.node ? 1 : 0) << t.name();
        }
      }
    }
    ++cases;
  }
}

TEST(Involution, A1Adjoint) {
  const RootDatum rd = rd_of("A1");
  const auto pairs = enumerate_inner_symmetric_pairs(rd);
  ASSERT_EQ(pairs.size(), 1u);
  const WeightSystem ws = weight_system(rd, {2});
  const auto acts = real_lifts(rd, pairs[0], {2});
  ASSERT_EQ(acts.size(), 1u);
  EXPECT_EQ(fixed_subspace_dim(ws, acts[0]), 1);
  EXPECT_EQ(odd_subspace_dim(ws, acts[0]), 2);
}

TEST(Involution, NonRealLiftFixesNothing) {
  // on C^2 the lift of diag(i,-i) has eigenvalues +-i
  const RootDatum rd = rd_of("A1");
  const auto pairs = enumerate_inner_symmetric_pairs(rd);
  const WeightSystem ws = weight_system(rd, {1});
  const auto all = lifts(rd, pairs[0], {1});
  ASSERT_FALSE(all.empty());
  for (const auto& a : all) {
    EXPECT_FALSE(a.parity_of({1}).has_value());
    EXPECT_EQ(fixed_subspace_dim(ws, a), 0);
  }
  EXPECT_TRUE(real_lifts(rd, pairs[0], {1}).empty());
}
