#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "itensor/error.hpp"
#include "itensor/point.hpp"
#include "itensor/tensor.hpp"
#include "support.hpp"

using namespace itensor;
using support::t32;

TEST(Tensor, StoresEntriesExactly) {
  const std::vector<double> e{4, 0, 0, 1, 0, 1, 1, 4};
  const Tensor a(3, 2, e);
  EXPECT_EQ(std::vector<double>(a.entries().begin(), a.entries().end()), e);
  EXPECT_EQ(a.size(), 8u);
  EXPECT_EQ(a.row_size(), 4u);
  const Tensor one(2, 1, {7});
  EXPECT_EQ(one.diag(0), 7);
}

TEST(Tensor, RejectsWrongLength) { EXPECT_THROW(Tensor(3, 2, {1, 0, 0}), InputError); }

TEST(Tensor, RejectsNonFiniteWithPosition) {
  try {
    Tensor(3, 2, {0, 0, std::nan(""), 0, 0, 0, 0, 0});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("(1,2,1)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(Tensor(2, 2, {0, std::numeric_limits<double>::infinity(), 0, 0}), InputError);
}

TEST(Tensor, RejectsBadShape) {
  EXPECT_THROW(Tensor(1, 2, {0, 0}), InputError);
  EXPECT_THROW(Tensor(2, 0, {}), InputError);
}

TEST(Tensor, IndexingIsRowMajor) {
  const Tensor a = t32({0, 1, 2, 3, 4, 5, 6, 7});
  const std::vector<Index> idx{1, 0, 1};
  EXPECT_EQ(a.at(idx), 5);
  EXPECT_EQ(a.shape().ravel(idx), 5u);
  EXPECT_EQ(a.shape().unravel(6), (MultiIndex{1, 1, 0}));
  EXPECT_EQ(a.shape().diag_tail(0), 0u);
  EXPECT_EQ(a.shape().diag_tail(1), 3u);
  EXPECT_EQ(a.row(1)[2], 6);
  EXPECT_EQ(format_index(a.shape().unravel(3)), "(1,2,2)");
}

TEST(Tensor, RowSums) {
  const auto box = support::boundary_example();
  EXPECT_EQ(row_sum(box.lower(), 0), 5);
  EXPECT_EQ(row_sum(Tensor::zeros(3, 2), 1), 0);
  EXPECT_EQ(row_sum(support::double_b_example().lower(), 0), 6);
  EXPECT_THROW(row_sum(box.lower(), 2), InputError);
}

TEST(Tensor, GammaPlus) {
  EXPECT_EQ(gamma_plus(support::double_b_example().upper(), 0), 1);
  EXPECT_EQ(gamma_plus(t32({3, -1, -2, -1, 0, 0, 0, 0}), 0), 0);
  EXPECT_EQ(gamma_plus(support::boundary_example().lower(), 0), 1);
  EXPECT_EQ(gamma_plus(Tensor(2, 1, {-3}), 0), 0);
}

TEST(Tensor, ApplyMatchesDefinition) {
  // Diagonal ones: component i is x_i^{m-1}.
  const Tensor d = Tensor::diagonal(4, 3, 1.0);
  const std::vector<double> x{2, -1, 0.5};
  const auto y = tensor_apply(d, x);
  EXPECT_DOUBLE_EQ(y[0], 8);
  EXPECT_DOUBLE_EQ(y[1], -1);
  EXPECT_DOUBLE_EQ(y[2], 0.125);

  const auto zero = tensor_apply(support::boundary_example().lower(), std::vector<double>{0, 0});
  EXPECT_EQ(zero, (std::vector<double>{0, 0}));
  const auto sums = tensor_apply(support::boundary_example().lower(), std::vector<double>{1, 1});
  EXPECT_EQ(sums, (std::vector<double>{5, 6}));
  EXPECT_THROW(tensor_apply(d, std::vector<double>{1, 2}), InputError);
}

TEST(Tensor, ApplyAgreesWithMultiIndexSum) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int m : {2, 3, 4}) {
    for (Index n : {1u, 2u, 3u}) {
      Shape s{m, n};
      std::vector<double> e(s.size());
      for (auto& v : e) v = u(rng);
      const Tensor a(s, e);
      std::vector<double> x(n);
      for (auto& v : x) v = u(rng);
      std::vector<double> ref(n, 0.0);
      support::for_each_index(m, n, [&](const std::vector<Index>& idx) {
        double term = a.at(idx);
        for (std::size_t k = 1; k < idx.size(); ++k) term *= x[idx[k]];
        ref[idx[0]] += term;
      });
      const auto got = tensor_apply(a, x);
      for (Index i = 0; i < n; ++i) EXPECT_NEAR(got[i], ref[i], 1e-12);
    }
  }
}

TEST(Tensor, SignTransform) {
  const Tensor c = t32({1, 2, 3, 4, 5, 6, 7, 8});
  const Tensor r = Tensor::filled(3, 2, 0.5);
  const std::vector<int> plus{1, 1};
  EXPECT_EQ(sign_transform(c, r, plus), t32({0.5, 1.5, 2.5, 3.5, 4.5, 5.5, 6.5, 7.5}));
  EXPECT_EQ(sign_transform(c, Tensor::zeros(3, 2), std::vector<int>{1, -1}), c);

  const Tensor ones = Tensor::filled(3, 2, 1.0);
  const Tensor az = sign_transform(Tensor::zeros(3, 2), ones, std::vector<int>{1, -1});
  EXPECT_EQ(az.at(std::vector<Index>{0, 1, 1}), -1);
  EXPECT_EQ(az.at(std::vector<Index>{0, 0, 1}), 1);

  EXPECT_THROW(sign_transform(c, Tensor::filled(3, 2, -1.0), plus), InputError);
  EXPECT_THROW(sign_transform(c, r, std::vector<int>{1, 0}), InputError);
  EXPECT_THROW(sign_transform(c, Tensor::zeros(2, 2), plus), InputError);
}

TEST(Tensor, SignTransformEvenOrderIgnoresGlobalSign) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  Shape s{4, 3};
  std::vector<double> ce(s.size()), re(s.size());
  for (Index p = 0; p < s.size(); ++p) {
    ce[p] = u(rng);
    re[p] = u(rng);
  }
  const Tensor c(s, ce), r(s, re);
  const std::vector<int> z{1, -1, -1}, neg{-1, 1, 1};
  EXPECT_EQ(sign_transform(c, r, z), sign_transform(c, r, neg));
}

TEST(Tensor, Symmetry) {
  EXPECT_TRUE(is_symmetric(Tensor::diagonal(3, 3, 2.0)));
  EXPECT_TRUE(is_symmetric(support::double_b_example().lower()));
  EXPECT_FALSE(is_symmetric(t32({0, 1, 0, 0, 0, 0, 0, 0})));
}

TEST(Tensor, Circulant) {
  EXPECT_TRUE(is_circulant(Tensor::filled(3, 3, 2.5)));
  const std::vector<double> row{4, 0, 0, 1};
  const Tensor c = circulant_from_first_row(row, 3, 2);
  EXPECT_TRUE(is_circulant(c));
  EXPECT_EQ(c, t32({4, 0, 0, 1, 1, 0, 0, 4}));
  EXPECT_EQ(circulant_from_first_row(std::vector<double>(4, 0.0), 3, 2), Tensor::zeros(3, 2));
  // The worked boundary example's lower bound is not invariant under the
  // cyclic shift: entry (1,1,2) is 0 but (2,2,1) is 1.
  EXPECT_FALSE(is_circulant(support::boundary_example().lower()));
  EXPECT_THROW(circulant_from_first_row(row, 3, 3), InputError);
}

TEST(Tensor, CirculantRoundTripFromFirstRow) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> u(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> row(9);
    for (auto& v : row) v = u(rng);
    const Tensor c = circulant_from_first_row(row, 3, 3);
    const auto first = c.row(0);
    EXPECT_EQ(circulant_from_first_row(std::vector<double>(first.begin(), first.end()), 3, 3), c);
    // Brute-force shift check.
    support::for_each_index(3, 3, [&](const std::vector<Index>& idx) {
      std::vector<Index> shifted(idx);
      for (auto& k : shifted) k = (k + 1) % 3;
      EXPECT_EQ(c.at(idx), c.at(shifted));
    });
  }
}

TEST(Tensor, RowMixIdentity) {
  const Tensor a = t32({1, 2, 3, 4, 5, 6, 7, 8});
  const std::vector<Tensor> parents{a};
  const std::vector<RowSource> rows{{0, {0, 1, 2}}, {0, {0, 1, 2}}};
  EXPECT_EQ(row_mix(parents, rows), a);
}

TEST(Tensor, RowMixPlacement) {
  const Tensor a = t32({1, 2, 3, 4, 5, 6, 7, 8});
  const Tensor b = t32({10, 20, 30, 40, 50, 60, 70, 80});
  const std::vector<Tensor> parents{a, b};
  // Row 1 from b with off-diagonals rotated; row 2 from a unchanged.
  const std::vector<RowSource> rows{{1, {1, 2, 0}}, {0, {0, 1, 2}}};
  EXPECT_EQ(row_mix(parents, rows), t32({10, 40, 20, 30, 5, 6, 7, 8}));
}

TEST(Tensor, RowMixRejectsBadAssignments) {
  const Tensor a = t32({1, 2, 3, 4, 5, 6, 7, 8});
  const std::vector<Tensor> parents{a};
  EXPECT_THROW(row_mix(parents, std::vector<RowSource>{{0, {0, 1, 2}}}), InputError);
  EXPECT_THROW(row_mix(parents, std::vector<RowSource>{{0, {0, 0, 2}}, {0, {0, 1, 2}}}), InputError);
  EXPECT_THROW(row_mix(parents, std::vector<RowSource>{{1, {0, 1, 2}}, {0, {0, 1, 2}}}), InputError);
}

TEST(Tensor, RowMixOfBTensorsIsB) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> off(-3, 2);
  std::uniform_int_distribution<int> diag(8, 14);
  int mixed = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Tensor> parents;
    while (parents.size() < 2) {
      std::vector<double> e(27);
      for (Index p = 0; p < 27; ++p) e[p] = off(rng);
      for (Index i = 0; i < 3; ++i) e[i * 13] = diag(rng);
      Tensor t(3, 3, e);
      if (support::ref_is_b(t)) parents.push_back(std::move(t));
    }
    std::vector<RowSource> rows(3);
    for (auto& r : rows) {
      r.parent = rng() % 2;
      r.permutation.resize(8);
      for (Index k = 0; k < 8; ++k) r.permutation[k] = k;
      std::shuffle(r.permutation.begin(), r.permutation.end(), rng);
    }
    EXPECT_TRUE(support::ref_is_b(row_mix(parents, rows)));
    ++mixed;
  }
  EXPECT_EQ(mixed, 200);
}

TEST(Tensor, SwappingOffDiagonalsKeepsB) {
  const Tensor a = t32({6, 1, 0, -1, 0, 0, 1, 5});
  ASSERT_TRUE(support::ref_is_b(a));
  const std::vector<Tensor> parents{a};
  const std::vector<RowSource> rows{{0, {1, 0, 2}}, {0, {0, 1, 2}}};
  EXPECT_TRUE(check_b(row_mix(parents, rows)).holds());
}
