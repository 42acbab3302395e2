#include <gtest/gtest.h>

#include <set>

#include "itensor/error.hpp"
#include "itensor/interval.hpp"
#include "support.hpp"

using namespace itensor;
using support::t32;

TEST(Interval, RejectsInvertedBoundsAndShapeMismatch) {
  try {
    make_interval(t32({4, 0, 0, 1, 0, 1, 1, 4}), t32({5, 1, 1, 0, 1, 2, 2, 5}));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("(1,2,2)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(make_interval(Tensor::zeros(3, 2), Tensor::zeros(2, 2)), InputError);
  EXPECT_NO_THROW(make_interval(Tensor::zeros(3, 2), Tensor::zeros(3, 2)));
}

TEST(Interval, MidpointRadius) {
  const auto [mid, rad] = midpoint_radius(support::double_b_example());
  EXPECT_EQ(mid, t32({6.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 6.5}));
  EXPECT_EQ(rad, Tensor::filled(3, 2, 0.5));
}

TEST(Interval, ContainsAndSubset) {
  const auto box = support::boundary_example();
  EXPECT_TRUE(contains(box, box.lower()));
  EXPECT_TRUE(contains(box, box.upper()));
  EXPECT_TRUE(contains(box, midpoint_radius(box).first));
  EXPECT_FALSE(contains(box, Tensor::zeros(3, 2)));
  EXPECT_TRUE(interval_subset(box, box));
  const IntervalTensor inner(box.lower(), box.lower());
  EXPECT_TRUE(interval_subset(inner, box));
  EXPECT_FALSE(interval_subset(box, inner));
}

TEST(Interval, SignVertexMatchesSignTransform) {
  const auto box = support::double_b_example();
  const auto [mid, rad] = midpoint_radius(box);
  for (const std::vector<int>& z : {std::vector<int>{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
    const Tensor v = sign_vertex(box, z);
    EXPECT_EQ(v, sign_transform(mid, rad, z));
    EXPECT_TRUE(contains(box, v));
  }
  EXPECT_EQ(sign_vertex(box, std::vector<int>{1, 1}), box.lower());
}

TEST(Interval, Symmetry) {
  EXPECT_TRUE(is_symmetric_interval(support::double_b_example()));
  // Entries of each index orbit agree in both bounds.
  EXPECT_TRUE(is_symmetric_interval(support::boundary_example()));
  const IntervalTensor skew(Tensor::zeros(3, 2), t32({0, 1, 0, 0, 0, 0, 0, 0}));
  EXPECT_FALSE(is_symmetric_interval(skew));
}

TEST(Interval, ZDetection) {
  EXPECT_FALSE(is_interval_z(support::double_b_example()));
  const IntervalTensor z(t32({5, -1, -1, -1, -1, -1, -1, 5}), t32({6, -0.5, -0.5, -0.5, -0.5, -0.5, -0.5, 6}));
  EXPECT_TRUE(is_interval_z(z));
  // Only off-diagonal upper entries matter.
  const IntervalTensor neg_diag(t32({-5, -1, -1, -1, -1, -1, -1, -5}), t32({-4, 0, 0, 0, 0, 0, 0, -4}));
  EXPECT_TRUE(is_interval_z(neg_diag));
}

TEST(Extremes, Prime) {
  EXPECT_EQ(extreme_prime(support::double_b_example()), t32({6, 1, 1, 1, 1, 1, 1, 6}));
}

TEST(Extremes, SingleRaise) {
  const auto box = support::boundary_example();
  EXPECT_EQ(extreme_single_raise(box, 0, 3), t32({4, 0, 0, 2, 0, 1, 1, 4}));
  EXPECT_THROW(extreme_single_raise(box, 0, 0), InputError);
  EXPECT_THROW(extreme_single_raise(box, 1, 3), InputError);
}

TEST(Extremes, DoubleRaise) {
  const auto box = support::double_b_example();
  EXPECT_EQ(extreme_double_raise(box, 0, 1, 1, 2), t32({6, 1, 0, 0, 0, 0, 1, 6}));
  EXPECT_THROW(extreme_double_raise(box, 0, 1, 0, 2), InputError);
}

TEST(Extremes, RowMaxExcept) {
  const auto box = support::double_b_example();
  EXPECT_EQ(argmax_upper_tail(box, 0), Index{1});
  EXPECT_EQ(argmax_upper_tail(box, 1), Index{0});
  EXPECT_EQ(extreme_row_max_except(box, 0), t32({6, 0, 0, 0, 1, 0, 0, 6}));
  EXPECT_EQ(extreme_row_max_except(box, 1), t32({6, 1, 0, 0, 0, 0, 0, 6}));
  const std::vector<Index> tails{2, 1};
  EXPECT_EQ(extreme_row_max_except(box, 0, tails), t32({6, 0, 0, 0, 0, 1, 0, 6}));
  EXPECT_EQ(argmax_upper_tail(support::boundary_example(), 0), Index{3});

  const IntervalTensor scalar(Tensor(2, 1, {1}), Tensor(2, 1, {2}));
  EXPECT_FALSE(argmax_upper_tail(scalar, 0).has_value());
}

TEST(Extremes, HatMayLeaveTheBox) {
  EXPECT_EQ(extreme_hat(support::double_b_example()), t32({6, 1, 0, 0, 1, 0, 0, 6}));
  // Lower at the argmax tail is 0, so the other positions are pushed to
  // min(lower, 0) < lower.
  const IntervalTensor box(t32({5, 1, 1, 0, 0, 0, 0, 5}), t32({6, 2, 2, 3, 1, 1, 1, 6}));
  const Tensor hat = extreme_hat(box);
  EXPECT_EQ(hat, t32({5, 0, 0, 3, 1, 0, 0, 5}));
  EXPECT_FALSE(contains(box, hat));
}

TEST(KReduction, EmptyForDisjointRanges) {
  const auto box = support::double_b_example();
  const auto k = reduce_via_K(box);
  EXPECT_TRUE(k.positions.empty());
  EXPECT_EQ(k.reduced, box);
}

TEST(KReduction, CollapsesDominatedPositions) {
  const auto box = support::boundary_example();
  const auto k = reduce_via_K(box);
  EXPECT_EQ(k.positions, (std::vector<Index>{1, 2, 4}));
  EXPECT_EQ(k.reduced.upper(), t32({5, 0, 0, 2, 0, 2, 2, 5}));
  EXPECT_EQ(k.reduced.lower(), box.lower());
  const auto again = reduce_via_K(k.reduced);
  EXPECT_EQ(again.reduced, k.reduced);
  EXPECT_EQ(again.positions, k.positions);

  // upper_j = 0 against lower_k = 1 in the same row.
  const IntervalTensor small(t32({3, 0, 1, 0, 0, 0, 0, 3}), t32({4, 0, 1, 2, 1, 1, 1, 4}));
  const auto ks = reduce_via_K(small);
  EXPECT_EQ(std::set<Index>(ks.positions.begin(), ks.positions.end()).count(1), 1u);

  const IntervalTensor degenerate(box.lower(), box.lower());
  EXPECT_EQ(reduce_via_K(degenerate).reduced, degenerate);
}

TEST(Vertices, CountOrderAndEnds) {
  const auto box = support::boundary_example();
  VertexStream vs(box);
  EXPECT_EQ(vs.count(), 256u);
  Tensor v = box.lower();
  std::uint64_t sel = 0;
  ASSERT_TRUE(vs.next(v, &sel));
  EXPECT_EQ(sel, 0u);
  EXPECT_EQ(v, box.lower());
  std::uint64_t seen = 1;
  std::set<std::vector<double>> distinct{{v.entries().begin(), v.entries().end()}};
  while (vs.next(v, &sel)) {
    ++seen;
    EXPECT_EQ(v, vertex_at(box, sel));
    distinct.insert({v.entries().begin(), v.entries().end()});
  }
  EXPECT_EQ(seen, 256u);
  EXPECT_EQ(distinct.size(), 256u);
  EXPECT_EQ(v, box.upper());
  vs.restart();
  EXPECT_TRUE(vs.next(v));
  EXPECT_EQ(v, box.lower());
}

TEST(Vertices, DegenerateEntriesCollapse) {
  const auto box = support::boundary_example();
  const IntervalTensor point(box.lower(), box.lower());
  VertexStream single(point);
  EXPECT_EQ(single.count(), 1u);

  Tensor upper = box.lower();
  upper.set(3, 2);
  upper.set(5, 2);
  const IntervalTensor two(box.lower(), upper);
  VertexStream vs(two);
  EXPECT_EQ(vs.count(), 4u);
  Tensor v = two.lower();
  std::vector<Tensor> got;
  while (vs.next(v)) got.push_back(v);
  ASSERT_EQ(got.size(), 4u);
  EXPECT_EQ(got[1], t32({4, 0, 0, 2, 0, 1, 1, 4}));
  EXPECT_EQ(got[2], t32({4, 0, 0, 1, 0, 2, 1, 4}));
  EXPECT_EQ(got[3], upper);
}

TEST(Vertices, Budget) {
  const auto box = support::boundary_example();
  EXPECT_THROW(VertexStream(box, 255), BudgetExceeded);
  EXPECT_NO_THROW(VertexStream(box, 256));
  EXPECT_THROW(require_vertex_budget(box, 100), BudgetExceeded);
  const IntervalTensor big(Tensor::zeros(4, 3), Tensor::filled(4, 3, 1.0));
  EXPECT_THROW(VertexStream{big}, BudgetExceeded);
}
