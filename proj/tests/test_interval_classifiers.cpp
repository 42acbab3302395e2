#include <gtest/gtest.h>

#include <random>

#include "itensor/error.hpp"
#include "itensor/interval_classifiers.hpp"
#include "support.hpp"

using namespace itensor;
using support::t32;

namespace {

const IntervalBMethod kMethods[] = {IntervalBMethod::Theorem, IntervalBMethod::Compact, IntervalBMethod::Slack,
                                    IntervalBMethod::Pairwise};

const ConditionRecord* first_record(const Verdict& v, const std::string& id) {
  for (const auto& c : v.conditions) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

// Quarter-grid box; entries in [lo, hi] / 4, diagonal shifted up by `lift`.
IntervalTensor random_box(std::mt19937_64& rng, int m, Index n, int lo, int hi, int lift) {
  Shape s{m, n};
  std::uniform_int_distribution<int> u(lo, hi), w(0, 3);
  std::vector<double> l(s.size()), h(s.size());
  for (Index p = 0; p < s.size(); ++p) {
    l[p] = u(rng) / 4.0;
    h[p] = l[p] + w(rng) / 4.0;
  }
  for (Index i = 0; i < n; ++i) {
    const Index p = s.flat(i, s.diag_tail(i));
    l[p] += lift / 4.0;
    h[p] += lift / 4.0;
  }
  return IntervalTensor(Tensor(s, l), Tensor(s, h));
}

IntervalTensor z_box(double diag, double off_lo, double off_hi) {
  return IntervalTensor(t32({diag, off_lo, off_lo, off_lo, off_lo, off_lo, off_lo, diag}),
                        t32({diag + 1, off_hi, off_hi, off_hi, off_hi, off_hi, off_hi, diag + 1}));
}

// Double B example with row 1 moved to pairwise slack equality.
IntervalTensor critical_box() {
  return IntervalTensor(t32({3, 0, 0, 0, 0, 0, 0, 6}), t32({7, 1, 1, 1, 1, 1, 1, 7}));
}

}  // namespace

TEST(IntervalB, BoundaryExampleWitness) {
  const auto v = check_interval_b(support::boundary_example());
  ASSERT_TRUE(v.fails());
  EXPECT_EQ(v.witness->condition, "b");
  EXPECT_EQ(v.witness->row, 0u);
  EXPECT_EQ(v.witness->tail, Index{3});
  EXPECT_EQ(v.witness->lhs, 4);
  EXPECT_EQ(v.witness->rhs, 6);
  for (auto m : kMethods) EXPECT_TRUE(check_interval_b(support::boundary_example(), m).fails());
}

TEST(IntervalB, ClampedBoundaryExampleHolds) {
  const IntervalTensor clamped(support::boundary_example().lower(), t32({5, 1, 1, 1, 1, 1, 1, 5}));
  const auto v = check_interval_b(clamped, IntervalBMethod::Theorem, {Tolerance{}, true});
  EXPECT_TRUE(v.holds());
  // Row 1 at tail (2,2): 5 - 1 against 3 * 1.
  bool seen = false;
  for (const auto& c : v.conditions) {
    if (c.id == "b" && c.rows == std::vector<Index>{0} && c.tails == std::vector<Index>{3}) {
      EXPECT_EQ(c.lhs, 4);
      EXPECT_EQ(c.rhs, 3);
      seen = true;
    }
  }
  EXPECT_TRUE(seen);
  for (auto m : kMethods) EXPECT_TRUE(check_interval_b(clamped, m).holds());
}

TEST(IntervalB, DoubleBExampleHolds) {
  for (auto m : kMethods) EXPECT_TRUE(check_interval_b(support::double_b_example(), m).holds());
}

TEST(IntervalB, MethodsAgreeWithVertexEnumeration) {
  std::mt19937_64 rng(31);
  int holds = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const bool wide = trial % 2 == 0;
    const IntervalTensor box = wide ? random_box(rng, 3, 2, -4, 4, 24) : random_box(rng, 2, 3, -4, 4, 12);
    const bool ref = support::all_vertices(box, support::ref_is_b);
    holds += ref;
    for (auto m : kMethods) ASSERT_EQ(check_interval_b(box, m).holds(), ref) << trial << " " << method_name(m);
  }
  EXPECT_GT(holds, 100);
  EXPECT_LT(holds, 1400);
}

TEST(IntervalB, DiagonalUpperIsIrrelevant) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const IntervalTensor box = random_box(rng, 3, 2, -4, 4, 24);
    Tensor upper = box.upper();
    for (Index i = 0; i < 2; ++i) {
      const Index p = box.shape().flat(i, box.shape().diag_tail(i));
      upper.set(p, upper[p] + 10);
    }
    EXPECT_EQ(check_interval_b(box).status, check_interval_b(IntervalTensor(box.lower(), upper)).status);
  }
}

TEST(IntervalB, ZFast) {
  EXPECT_TRUE(check_interval_b_zfast(z_box(5, -1, -0.5)).holds());
  const auto v = check_interval_b_zfast(z_box(2, -1, -1));
  ASSERT_TRUE(v.fails());
  EXPECT_EQ(v.witness->lhs, -1);
  EXPECT_TRUE(check_interval_b_zfast(IntervalTensor(z_box(5, -1, -1).lower(), z_box(5, -1, -1).lower())).holds());
  EXPECT_THROW(check_interval_b_zfast(support::double_b_example()), InputError);

  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 500; ++trial) {
    IntervalTensor box = random_box(rng, 3, 2, -8, -3, 20);
    ASSERT_TRUE(is_interval_z(box));
    EXPECT_EQ(check_interval_b_zfast(box).status, check_interval_b(box).status);
  }
}

TEST(IntervalB, NecessaryConditions) {
  EXPECT_TRUE(interval_b_necessary(support::double_b_example()).holds());
  EXPECT_TRUE(interval_b_necessary(support::boundary_example()).holds());
  EXPECT_FALSE(check_interval_b(support::boundary_example()).holds());

  const IntervalTensor weak(t32({1, 0, 0, 0, 0, 0, 0, 1}), t32({2, 3, 0, 0, 0, 0, 0, 2}));
  const auto v = interval_b_necessary(weak);
  ASSERT_TRUE(v.fails());
  EXPECT_EQ(v.witness->condition, "nec-b");

  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 1000; ++trial) {
    const IntervalTensor box = random_box(rng, 3, 2, -6, 4, 16);
    if (interval_b_necessary(box).fails()) {
      EXPECT_TRUE(check_interval_b(box).fails());
    }
  }
}

TEST(IntervalDoubleB, DoubleBExampleValues) {
  const auto v = check_interval_double_b(support::double_b_example(), {Tolerance{}, true});
  ASSERT_TRUE(v.holds());
  const auto* a = first_record(v, "a");
  const auto* b1 = first_record(v, "b1");
  const auto* c1 = first_record(v, "c1");
  ASSERT_TRUE(a && b1 && c1);
  EXPECT_EQ(a->lhs, 6);
  EXPECT_EQ(a->rhs, 1);
  EXPECT_EQ(b1->lhs, 5);
  EXPECT_EQ(b1->rhs, 2);
  EXPECT_EQ(b1->relation, Relation::GreaterEqual);
  EXPECT_EQ(c1->lhs, 25);
  EXPECT_EQ(c1->rhs, 4);
  for (const char* id : {"b2", "c2", "c3"}) EXPECT_NE(first_record(v, id), nullptr) << id;
}

TEST(IntervalDoubleB, BoundaryExampleFails) {
  EXPECT_TRUE(check_interval_double_b(support::boundary_example()).fails());
  const Tensor raised = extreme_single_raise(support::boundary_example(), 0, 3);
  EXPECT_FALSE(support::ref_is_double_b(raised));
}

TEST(IntervalDoubleB, DegenerateBoxReducesToPointTest) {
  std::mt19937_64 rng(39);
  for (int trial = 0; trial < 500; ++trial) {
    const IntervalTensor box = random_box(rng, 3, 2, -4, 4, 16);
    const IntervalTensor point(box.lower(), box.lower());
    EXPECT_EQ(check_interval_double_b(point).holds(), support::ref_is_double_b(box.lower()));
  }
}

TEST(IntervalDoubleB, AgreesWithVertexEnumeration) {
  std::mt19937_64 rng(41);
  int holds = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const bool wide = trial % 2 == 0;
    const IntervalTensor box = wide ? random_box(rng, 3, 2, -4, 4, 20) : random_box(rng, 2, 3, -4, 4, 10);
    const bool ref = support::all_vertices(box, support::ref_is_double_b);
    holds += ref;
    ASSERT_EQ(check_interval_double_b(box).holds(), ref) << trial;
  }
  EXPECT_GT(holds, 100);
}

TEST(IntervalDoubleB, Dichotomy) {
  EXPECT_EQ(classify_interval_double_b_dichotomy(support::double_b_example()).kind,
            IntervalDichotomy::Kind::IntervalB);
  EXPECT_EQ(classify_interval_double_b_dichotomy(support::boundary_example()).kind,
            IntervalDichotomy::Kind::NotDoubleB);

  const auto box = critical_box();
  EXPECT_TRUE(check_interval_double_b(box).holds());
  EXPECT_TRUE(check_interval_b(box).fails());
  const auto d = classify_interval_double_b_dichotomy(box);
  EXPECT_EQ(d.kind, IntervalDichotomy::Kind::CriticalRow);
  EXPECT_EQ(d.critical_row, Index{0});
  ASSERT_EQ(d.failing_rows.size(), 1u);
  EXPECT_EQ(d.failing_rows[0].mode, IntervalDichotomy::Mode::SlackEquality);
  EXPECT_EQ(d.failing_rows[0].tail, Index{1});
}

TEST(IntervalDoubleB, NecessaryExtremes) {
  EXPECT_TRUE(interval_double_b_necessary(support::double_b_example(), NecessaryVariant::Extremes).holds());
  EXPECT_TRUE(interval_double_b_necessary(support::boundary_example(), NecessaryVariant::Extremes).fails());
}

TEST(IntervalDoubleB, NecessaryRowmax) {
  EXPECT_TRUE(interval_double_b_necessary(support::double_b_example(), NecessaryVariant::Rowmax).holds());
  const auto v = interval_double_b_necessary(support::boundary_example(), NecessaryVariant::Rowmax);
  ASSERT_TRUE(v.fails());
  EXPECT_EQ(v.witness->condition, "b1");
  EXPECT_EQ(v.witness->row, 0u);
  EXPECT_EQ(v.witness->lhs, 2);
  EXPECT_EQ(v.witness->rhs, 4);
}

TEST(IntervalDoubleB, NecessaryVariantsNeverRejectMembers) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 1000; ++trial) {
    const IntervalTensor box = random_box(rng, 3, 2, -4, 4, 20);
    const bool member = check_interval_double_b(box).holds();
    for (auto variant : {NecessaryVariant::Extremes, NecessaryVariant::Rowmax}) {
      if (member) {
        EXPECT_TRUE(interval_double_b_necessary(box, variant).holds()) << trial;
      }
    }
    const IntervalTensor point(box.lower(), box.lower());
    for (auto variant : {NecessaryVariant::Extremes, NecessaryVariant::Rowmax}) {
      EXPECT_EQ(interval_double_b_necessary(point, variant).holds(), support::ref_is_double_b(box.lower()));
    }
  }
}

TEST(IntervalDoubleB, Dominance) {
  EXPECT_EQ(check_interval_double_b_dominance(support::double_b_example()).status, Status::Inconclusive);

  // m = 3, n = 3: each row has one off-diagonal tail with lower 2 while every
  // other off-diagonal upper is 1.
  Shape s{3, 3};
  std::vector<double> l(27, 0.0), h(27, 1.0);
  for (Index i = 0; i < 3; ++i) {
    const Index d = s.diag_tail(i);
    const Index k = d == 0 ? 1 : 0;
    l[s.flat(i, d)] = 30;
    h[s.flat(i, d)] = 31;
    l[s.flat(i, k)] = 2;
    h[s.flat(i, k)] = 3;
  }
  const IntervalTensor box(Tensor(s, l), Tensor(s, h));
  const auto tails = dominance_tails(box);
  ASSERT_TRUE(tails.has_value());
  EXPECT_EQ(*tails, (std::vector<Index>{1, 0, 0}));
  EXPECT_EQ(check_interval_double_b_dominance(box).status, check_interval_double_b(box).status);

  h[s.flat(2, 1)] = 2.5;
  Index failing = 99;
  const IntervalTensor broken(Tensor(s, l), Tensor(s, h));
  EXPECT_FALSE(dominance_tails(broken, &failing).has_value());
  EXPECT_EQ(failing, 2u);
  EXPECT_EQ(check_interval_double_b_dominance(broken).status, Status::Inconclusive);
}

TEST(IntervalDoubleB, ZFast) {
  // The product condition compares (diag - gamma) terms: 5 * 5 > 3 * 3.
  EXPECT_TRUE(check_interval_double_b_zfast(z_box(5, -1, -0.5)).holds());
  EXPECT_TRUE(check_interval_double_b(z_box(5, -1, -0.5)).holds());
  EXPECT_TRUE(check_interval_double_b_zfast(z_box(5, -0.5, -0.5)).holds());
  EXPECT_TRUE(check_interval_double_b_zfast(z_box(2, -1, -1)).fails());
  EXPECT_THROW(check_interval_double_b_zfast(support::double_b_example()), InputError);

  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 500; ++trial) {
    const IntervalTensor box = random_box(rng, 3, 2, -8, -3, 20);
    EXPECT_EQ(check_interval_double_b_zfast(box).status, check_interval_double_b(box).status);
  }
}

TEST(IntervalDoubleB, HatSufficient) {
  EXPECT_TRUE(check_interval_double_b_hat_sufficient(support::double_b_example()).holds());
  EXPECT_EQ(check_interval_double_b_hat_sufficient(z_box(5, -1, -0.5)).status, Status::Inconclusive);

  std::mt19937_64 rng(47);
  int certified = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const IntervalTensor box = random_box(rng, 3, 2, 0, 4, 20);
    const auto v = check_interval_double_b_hat_sufficient(box);
    EXPECT_NE(v.status, Status::Fails);
    if (v.holds()) {
      ++certified;
      EXPECT_TRUE(check_interval_double_b(box).holds()) << trial;
    }
  }
  EXPECT_GT(certified, 50);
}

TEST(IntervalCirculant, Examples) {
  const IntervalTensor fails(circulant_from_first_row(std::vector<double>{4, 0, 0, 1}, 3, 2),
                             circulant_from_first_row(std::vector<double>{5, 1, 1, 2}, 3, 2));
  const auto v = check_interval_circulant(fails);
  ASSERT_TRUE(v.fails());
  EXPECT_EQ(v.witness->condition, "c2");
  EXPECT_EQ(v.witness->lhs, 2);
  EXPECT_EQ(v.witness->rhs, 4);
  EXPECT_TRUE(check_interval_b(fails).fails());
  EXPECT_TRUE(check_interval_double_b(fails).fails());

  const IntervalTensor holds(circulant_from_first_row(std::vector<double>{4, 0, 0, 0}, 3, 2),
                             circulant_from_first_row(std::vector<double>{5, 1, 1, 1}, 3, 2));
  EXPECT_TRUE(check_interval_circulant(holds).holds());
  EXPECT_TRUE(check_interval_b(holds).holds());
  EXPECT_TRUE(check_interval_double_b(holds).holds());

  EXPECT_THROW(check_interval_circulant(support::boundary_example()), InputError);
}

TEST(IntervalCirculant, AgreesWithGeneralTests) {
  std::mt19937_64 rng(49);
  std::uniform_int_distribution<int> u(-8, 8), w(0, 3), d(0, 40);
  for (int trial = 0; trial < 1000; ++trial) {
    const Index n = 2 + trial % 2;
    std::vector<double> lo(n * n), hi(n * n);
    for (Index t = 0; t < n * n; ++t) {
      lo[t] = (t == 0 ? d(rng) : u(rng)) / 4.0;
      hi[t] = lo[t] + w(rng) / 4.0;
    }
    const IntervalTensor box(circulant_from_first_row(lo, 3, n), circulant_from_first_row(hi, 3, n));
    const bool circ = check_interval_circulant(box).holds();
    ASSERT_EQ(check_interval_b(box).holds(), circ) << trial;
    ASSERT_EQ(check_interval_double_b(box).holds(), circ) << trial;
  }
}

TEST(IntervalP, Sufficient) {
  EXPECT_EQ(interval_p_sufficient(support::double_b_example()).status, Status::Inconclusive);
  const IntervalTensor sym(Tensor::diagonal(4, 2, 6.0), [] {
    Tensor u = Tensor::filled(4, 2, 0.1);
    u.set(0, 7);
    u.set(15, 7);
    return u;
  }());
  EXPECT_TRUE(is_symmetric_interval(sym));
  EXPECT_TRUE(interval_p_sufficient(sym).holds());
  EXPECT_EQ(interval_p_sufficient(IntervalTensor(Tensor::zeros(4, 2), Tensor::zeros(4, 2))).status,
            Status::Inconclusive);
}
