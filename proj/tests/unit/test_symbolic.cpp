#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "../support/symbolic_random.hpp"
#include "mvalg/ideals.hpp"
#include "mvalg/symbolic.hpp"

namespace mvalg {
namespace {

using testing::example_4_5;
using testing::example_4_6;

IndexSpec all_const(int order, std::optional<Index> limit = std::nullopt) {
  IndexSpec s;
  s.classes = {ConstLaw{order}};
  s.finite_limit = limit;
  return s;
}

IndexSpec two_unbounded() {
  IndexSpec s;
  s.period = 2;
  s.classes = {UnboundedLaw{1, 2}, UnboundedLaw{1, 3}};
  return s;
}

TEST(IndexSpec, ChainOrders) {
  EXPECT_EQ(chain_order_at(example_4_5(), 3), 5);
  EXPECT_EQ(chain_order_at(example_4_6(), 0), 2);
  EXPECT_EQ(chain_order_at(example_4_6(), 3), 4);
  EXPECT_EQ(chain_order_at(example_4_6(), 5), 6);
  IndexSpec s = example_4_5();
  s.prefix_overrides[5] = 7;
  EXPECT_EQ(chain_order_at(s, 5), 7);
  EXPECT_EQ(chain_order_at(s, 6), 8);
  EXPECT_THROW(chain_order_at(s, -1), PreconditionError);
  EXPECT_THROW(chain_order_at(all_const(3, 4), 4), PreconditionError);
}

TEST(IndexSpec, Validation) {
  IndexSpec s = example_4_6();
  s.classes.pop_back();
  EXPECT_THROW(s.validate(), PreconditionError);
  EXPECT_THROW(all_const(1).validate(), PreconditionError);
  IndexSpec u;
  u.classes = {UnboundedLaw{0, 2}};
  EXPECT_THROW(u.validate(), PreconditionError);
  IndexSpec o = all_const(3, 2);
  o.prefix_overrides[2] = 4;
  EXPECT_THROW(o.validate(), PreconditionError);
  const IndexSpec f = finite_spec_from_orders({3, 2, 3});
  EXPECT_EQ(truncated_orders(f, 3), (std::vector<int>{3, 2, 3}));
}

TEST(SymbolicOps, SpecExamples) {
  const IndexSpec s = two_unbounded();
  const SymbolicElement f{2, {}, {Extreme::Top, Extreme::Zero}};
  EXPECT_EQ(neg(s, f), (SymbolicElement{2, {}, {Extreme::Zero, Extreme::Top}}));
  const IndexSpec c = all_const(3);
  const SymbolicElement half{1, {}, {1}};
  EXPECT_TRUE(equivalent(c, oplus(c, half, half), top_element(c)));
  std::mt19937_64 rng(1);
  for (const IndexSpec& spec : {example_4_5(), example_4_6(), c}) {
    for (int i = 0; i < 20; ++i) {
      const SymbolicElement g = testing::random_element(spec, rng);
      EXPECT_TRUE(equivalent(spec, oplus(spec, g, zero_element(spec)), g));
    }
  }
}

TEST(SymbolicOps, ClosedAndPointwise) {
  std::mt19937_64 rng(2);
  IndexSpec with_override = example_4_6();
  with_override.prefix_overrides[4] = 3;
  for (const IndexSpec& spec : {example_4_5(), example_4_6(), all_const(4), with_override}) {
    for (int i = 0; i < 100; ++i) {
      const SymbolicElement f = testing::random_element(spec, rng);
      const SymbolicElement g = testing::random_element(spec, rng);
      const SymbolicElement s = oplus(spec, f, g);
      const SymbolicElement n = neg(spec, f);
      EXPECT_NO_THROW(validate(spec, s));
      EXPECT_NO_THROW(validate(spec, n));
      for (Index x = 0; x < 40; ++x) {
        EXPECT_EQ(value_at(spec, s, x), truncated_add(value_at(spec, f, x), value_at(spec, g, x)));
        EXPECT_EQ(value_at(spec, n, x), complement(value_at(spec, f, x)));
      }
    }
  }
}

TEST(SymbolicElement, ValidationRejectsBadValues) {
  const IndexSpec s = example_4_6();
  EXPECT_THROW(validate(s, SymbolicElement{1, {}, {0}}), PreconditionError);  // modulus not a multiple of 2
  EXPECT_THROW(validate(s, SymbolicElement{2, {}, {2, Extreme::Top}}), PreconditionError);
  EXPECT_THROW(validate(s, SymbolicElement{2, {}, {Extreme::Top, Extreme::Top}}), PreconditionError);
  EXPECT_THROW(validate(s, SymbolicElement{2, {}, {0, 1}}), PreconditionError);
  EXPECT_THROW(validate(s, SymbolicElement{2, {{3, 4}}, {0, Extreme::Zero}}), PreconditionError);
  IndexSpec o = all_const(3);
  o.prefix_overrides[1] = 4;  // 1/2 is not in L4
  EXPECT_THROW(validate(o, SymbolicElement{1, {}, {1}}), PreconditionError);
  EXPECT_NO_THROW(validate(o, SymbolicElement{1, {{1, 1}}, {1}}));
}

TEST(UltrafilterLimit, SpecExamples) {
  const IndexSpec s = example_4_6();
  const SymbolicElement top = top_element(s);
  EXPECT_EQ(ultrafilter_limit(s, top, FreeUltrafilter{1, 2}), Rational(1));
  const SymbolicElement f{2, {{3, 1}}, {1, Extreme::Zero}};
  EXPECT_EQ(ultrafilter_limit(s, f, PrincipalUltrafilter{3}), Rational(1, 3));
  EXPECT_EQ(ultrafilter_limit(s, f, PrincipalUltrafilter{0}), Rational(1));
  EXPECT_EQ(ultrafilter_limit(s, f, FreeUltrafilter{0, 2}), Rational(1));
  EXPECT_FALSE(in_maximal_ideal(s, f, FreeUltrafilter{0, 2}));
  EXPECT_TRUE(in_maximal_ideal(s, f, FreeUltrafilter{1, 2}));
  EXPECT_FALSE(in_maximal_ideal(s, f, PrincipalUltrafilter{3}));
}

TEST(UltrafilterLimit, RefinesToTheUltrafilterModulus) {
  const IndexSpec s = example_4_5();
  const SymbolicElement f{2, {}, {Extreme::Top, Extreme::Zero}};
  EXPECT_EQ(ultrafilter_limit(s, f, FreeUltrafilter{0, 4}), Rational(1));
  EXPECT_EQ(ultrafilter_limit(s, f, FreeUltrafilter{3, 4}), Rational(0));
  EXPECT_EQ(ultrafilter_limit(s, f, FreeUltrafilter{0, 1}), Rational(1));  // residue 0 mod every multiple of 1
}

TEST(UltrafilterLimit, InvalidUltrafilters) {
  const IndexSpec finite = all_const(3, 5);
  const SymbolicElement z = zero_element(finite);
  EXPECT_THROW(ultrafilter_limit(finite, z, FreeUltrafilter{0, 1}), PreconditionError);
  EXPECT_THROW(ultrafilter_limit(finite, z, PrincipalUltrafilter{5}), PreconditionError);
  EXPECT_THROW(validate(example_4_6(), SymbolicUltrafilter{FreeUltrafilter{0, 3}}), PreconditionError);
  EXPECT_THROW(validate(example_4_6(), SymbolicUltrafilter{FreeUltrafilter{2, 2}}), PreconditionError);
}

TEST(UltrafilterLimit, HomomorphismAndKernel) {
  std::mt19937_64 rng(3);
  IndexSpec with_override = example_4_6();
  with_override.prefix_overrides[2] = 5;
  for (const IndexSpec& spec : {example_4_5(), example_4_6(), all_const(5), all_const(4, 9), with_override}) {
    for (int i = 0; i < 200; ++i) {
      const SymbolicElement f = testing::random_element(spec, rng);
      const SymbolicElement g = testing::random_element(spec, rng);
      const SymbolicUltrafilter u = testing::random_ultrafilter(spec, rng);
      const Rational lf = ultrafilter_limit(spec, f, u);
      EXPECT_EQ(ultrafilter_limit(spec, oplus(spec, f, g), u), truncated_add(lf, ultrafilter_limit(spec, g, u)));
      EXPECT_EQ(ultrafilter_limit(spec, neg(spec, f), u), complement(lf));
      EXPECT_EQ(in_maximal_ideal(spec, f, u), lf == Rational(0));
    }
  }
}

TEST(Census, SpecExamples) {
  const Census a = maximal_ideal_census(example_4_5(), 5);
  ASSERT_EQ(a.principal.size(), 5u);
  for (Index x = 0; x < 5; ++x) EXPECT_EQ(a.principal[x].rank, static_cast<int>(x) + 2);
  ASSERT_EQ(a.free.size(), 1u);
  EXPECT_FALSE(a.free[0].rank.has_value());
  EXPECT_FALSE(a.free[0].principal);
  EXPECT_FALSE(a.all_finite_rank);
  EXPECT_FALSE(a.principal_complete);

  const Census b = maximal_ideal_census(example_4_6(), 4);
  ASSERT_EQ(b.free.size(), 2u);
  EXPECT_EQ(b.free[0].residue, 0);
  EXPECT_EQ(b.free[0].rank, 2);
  EXPECT_FALSE(b.free[1].rank.has_value());

  const Census c = maximal_ideal_census(all_const(3), 6);
  EXPECT_TRUE(c.all_finite_rank);
  EXPECT_EQ(c.free.at(0).rank, 3);
  for (const auto& d : c.principal) EXPECT_EQ(d.rank, 3);

  const Census f = maximal_ideal_census(finite_spec_from_orders({2, 3}), 16);
  EXPECT_TRUE(f.principal_complete);
  EXPECT_EQ(f.principal.size(), 2u);
  EXPECT_TRUE(f.free.empty());
}

TEST(Census, AllConstSpecsHaveOnlyFiniteRanks) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    IndexSpec s;
    s.period = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int r = 0; r < s.period; ++r) s.classes.emplace_back(ConstLaw{std::uniform_int_distribution<int>(2, 9)(rng)});
    EXPECT_TRUE(maximal_ideal_census(s, 8).all_finite_rank);
    EXPECT_FALSE(decide_strongly_complete(s).strongly_complete);
  }
}

// Truncations small enough to tabulate; the acceptance suite covers larger N.
TEST(Census, MatchesIdealClassificationOfTruncations) {
  const std::vector<std::pair<IndexSpec, Index>> cases{
      {example_4_5(), 5}, {example_4_6(), 7}, {all_const(3), 5}, {finite_spec_from_orders({2, 3, 4}), 3}};
  for (const auto& [spec, limit] : cases) {
    for (Index n = 1; n <= limit; ++n) {
      const FiniteMVAlgebra a = truncate(spec, n);
      std::vector<int> ranks;
      for (const Ideal& i : all_ideals(a)) {
        const IdealClassification c = classify(a, i);
        if (c.maximal) ranks.push_back(*c.rank);
      }
      std::vector<int> expected;
      for (const auto& d : maximal_ideal_census(spec, n).principal) expected.push_back(*d.rank);
      std::sort(ranks.begin(), ranks.end());
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(ranks, expected) << "N=" << n;
    }
  }
}

TEST(Decide, SpecExamples) {
  EXPECT_TRUE(decide_strongly_complete(example_4_5()).strongly_complete);
  const Verdict v = decide_strongly_complete(example_4_6());
  EXPECT_FALSE(v.strongly_complete);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->kind, MaximalIdealDescriptor::Kind::FreeClass);
  EXPECT_EQ(v.witness->residue, 0);
  EXPECT_EQ(v.witness->rank, 2);
  EXPECT_FALSE(v.witness->principal);
  EXPECT_FALSE(decide_strongly_complete(all_const(4)).strongly_complete);
  EXPECT_TRUE(decide_strongly_complete(all_const(4, 10)).strongly_complete);
}

TEST(Decide, AddingAConstClassNeverRestoresStrongCompleteness) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    IndexSpec s;
    s.period = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int r = 0; r < s.period; ++r) {
      if (std::bernoulli_distribution(0.5)(rng)) {
        s.classes.emplace_back(ConstLaw{std::uniform_int_distribution<int>(2, 6)(rng)});
      } else {
        s.classes.emplace_back(UnboundedLaw{std::uniform_int_distribution<int>(1, 3)(rng), 2});
      }
    }
    IndexSpec t = s;
    t.period += 1;
    t.classes.emplace_back(ConstLaw{3});
    const bool before = decide_strongly_complete(s).strongly_complete;
    const bool after = decide_strongly_complete(t).strongly_complete;
    if (!before) EXPECT_FALSE(after);
    EXPECT_FALSE(after);
  }
}

TEST(CompletionReport, SpecExamples) {
  const CompletionReport f = completion_report(finite_spec_from_orders({2, 3}));
  EXPECT_TRUE(f.completion_is_algebra);
  EXPECT_EQ(f.finite_eta, (std::vector<int>{2, 3}));
  ASSERT_EQ(f.factors.size(), 1u);

  const CompletionReport a = completion_report(example_4_5());
  EXPECT_TRUE(a.completion_is_algebra);
  ASSERT_EQ(a.factors.size(), 1u);
  EXPECT_EQ(a.factors[0].kind, FactorFamily::Kind::PrincipalPart);

  const CompletionReport b = completion_report(example_4_6());
  EXPECT_FALSE(b.completion_is_algebra);
  ASSERT_EQ(b.factors.size(), 2u);
  EXPECT_EQ(b.factors[1].kind, FactorFamily::Kind::FreeUltrafilterFamily);
  EXPECT_EQ(b.factors[1].order, 2);
  EXPECT_EQ(b.factors[1].residue, 0);
  EXPECT_FALSE(b.factors[1].multiplicity.empty());
}

TEST(Truncate, SpecExamples) {
  auto eta = [](const FiniteMVAlgebra& a) { return decompose(a).eta; };
  EXPECT_EQ(truncated_orders(example_4_6(), 4), (std::vector<int>{2, 2, 2, 4}));
  EXPECT_EQ(eta(truncate(example_4_6(), 4)), (std::vector<int>{2, 2, 2, 4}));
  EXPECT_EQ(eta(truncate(example_4_5(), 3)), (std::vector<int>{2, 3, 4}));
  EXPECT_TRUE(truncate(example_4_5(), 0).is_trivial());
  EXPECT_THROW(truncate(example_4_5(), 17), ResourceError);
  EXPECT_THROW(truncate(example_4_5(), 8), ResourceError);
  EXPECT_THROW(truncate(all_const(3, 2), 3), PreconditionError);
}

TEST(Truncate, PrincipalLimitsMatchTruncatedElements) {
  std::mt19937_64 rng(8);
  for (const auto& [spec, n] : std::vector<std::pair<IndexSpec, Index>>{{example_4_5(), 4}, {example_4_6(), 6}}) {
    const FiniteMVAlgebra a = truncate(spec, n);
    const Decomposition d = decompose(a);
    const std::vector<int> orders = truncated_orders(spec, n);
    for (int i = 0; i < 50; ++i) {
      const SymbolicElement f = testing::random_element(spec, rng);
      const SymbolicElement g = testing::random_element(spec, rng);
      const Element tf = truncate_element(spec, f, n);
      EXPECT_EQ(truncate_element(spec, oplus(spec, f, g), n), a.oplus(tf, truncate_element(spec, g, n)));
      EXPECT_EQ(truncate_element(spec, neg(spec, f), n), a.neg(tf));
      // Mixed radix, index 0 most significant.
      Element rest = tf;
      for (Index x = n; x-- > 0;) {
        const int order = orders[static_cast<std::size_t>(x)];
        EXPECT_EQ(ultrafilter_limit(spec, f, PrincipalUltrafilter{x}),
                  Rational(static_cast<std::int64_t>(rest % order), order - 1));
        rest /= order;
      }
    }
    EXPECT_FALSE(d.eta.empty());
  }
}

}  // namespace
}  // namespace mvalg
