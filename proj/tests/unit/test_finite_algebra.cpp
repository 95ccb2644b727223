#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "../oracles/oracles.hpp"
#include "../support/family.hpp"
#include "mvalg/finite_algebra.hpp"

namespace mvalg {
namespace {

using testing::order_family;

FiniteMVAlgebra chains(std::vector<int> orders) { return product_of_chains(orders); }


TEST(FromTables, AcceptsChainsAndTrivial) {
  const FiniteMVAlgebra l3 = chain_algebra(3);
  EXPECT_EQ(l3.size(), 3u);
  EXPECT_EQ(l3.one(), 2u);
  const FiniteMVAlgebra t = FiniteMVAlgebra::from_tables(1, 0, {{0}}, {0});
  EXPECT_TRUE(t.is_trivial());
  EXPECT_EQ(t.one(), t.zero());
}

TEST(FromTables, MaxIsNotAnMvAlgebra) {
  try {
    FiniteMVAlgebra::from_tables(3, 0, {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}, {2, 1, 0});
    FAIL() << "max-oplus accepted";
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.axiom(), "mv_axiom_2");
    EXPECT_EQ(e.witness(), (std::vector<std::size_t>{2, 1}));  // x = 1, y = 1/2
  }
}

TEST(FromTables, NamesEachQuadraticAxiom) {
  auto axiom_of = [](std::size_t n, std::vector<std::vector<Element>> t, std::vector<Element> neg) {
    try {
      FiniteMVAlgebra::from_tables(n, 0, t, neg);
    } catch (const AxiomViolation& e) {
      return e.axiom();
    }
    return std::string("accepted");
  };
  EXPECT_EQ(axiom_of(2, {{0, 0}, {1, 1}}, {1, 0}), "zero_identity");
  EXPECT_EQ(axiom_of(3, {{0, 1, 2}, {1, 2, 2}, {2, 1, 2}}, {2, 1, 0}), "oplus_commutative");
  EXPECT_EQ(axiom_of(3, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, {1, 2, 0}), "neg_involution");
  EXPECT_EQ(axiom_of(3, {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}}, {2, 1, 0}), "mv_axiom_1");
  EXPECT_EQ(axiom_of(3, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, {2, 1, 0}), "accepted");
}

TEST(FromTables, StructuralErrors) {
  EXPECT_THROW(FiniteMVAlgebra::from_tables(0, 0, {}, {}), StructuralError);
  EXPECT_THROW(FiniteMVAlgebra::from_tables(2, 2, {{0, 1}, {1, 1}}, {1, 0}), StructuralError);
  EXPECT_THROW(FiniteMVAlgebra::from_tables(2, 0, {{0, 1}}, {1, 0}), StructuralError);
  EXPECT_THROW(FiniteMVAlgebra::from_tables(2, 0, {{0, 1}, {1}}, {1, 0}), StructuralError);
  EXPECT_THROW(FiniteMVAlgebra::from_tables(2, 0, {{0, 1}, {1, 5}}, {1, 0}), StructuralError);
  EXPECT_THROW(FiniteMVAlgebra::from_tables(2, 0, {{0, 1}, {1, 1}}, {1, 9}), StructuralError);
  EXPECT_THROW(FiniteMVAlgebra::from_tables(2, 0, {{0, 1}, {1, 1}}, {1, 0}, {"a"}), StructuralError);
}

// Naive cubic check of every defining axiom, independent of the certificate.
bool axioms_hold(std::size_t n, const std::vector<std::vector<Element>>& t, const std::vector<Element>& neg) {
  const Element one = neg[0];
  for (Element x = 0; x < n; ++x) {
    if (t[0][x] != x || neg[neg[x]] != x || t[one][x] != one) return false;
    for (Element y = 0; y < n; ++y) {
      if (t[x][y] != t[y][x]) return false;
      if (t[neg[t[neg[x]][y]]][y] != t[neg[t[neg[y]][x]]][x]) return false;
      for (Element z = 0; z < n; ++z) {
        if (t[t[x][y]][z] != t[x][t[y][z]]) return false;
      }
    }
  }
  return true;
}

// Every commutative table with identity 0 on 3 and 4 elements, under every
// involution: from_tables accepts exactly the MV-algebras.
TEST(FromTables, CertificateAgreesWithCubicCheckOnAllSmallTables) {
  for (std::size_t n : {3u, 4u}) {
    std::vector<std::pair<Element, Element>> cells;
    for (Element x = 1; x < n; ++x) {
      for (Element y = x; y < n; ++y) cells.emplace_back(x, y);
    }
    std::vector<std::vector<Element>> involutions;
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), Element{0});
    do {
      bool inv = true;
      for (Element x = 0; x < n; ++x) inv = inv && perm[perm[x]] == x;
      if (inv) involutions.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::size_t total = 1;
    for (std::size_t i = 0; i < cells.size(); ++i) total *= n;
    std::size_t accepted = 0;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
      for (Element x = 0; x < n; ++x) t[0][x] = t[x][0] = x;
      std::size_t c = code;
      for (const auto& [x, y] : cells) {
        t[x][y] = t[y][x] = c % n;
        c /= n;
      }
      for (const auto& neg : involutions) {
        bool ok = true;
        try {
          FiniteMVAlgebra::from_tables(n, 0, t, neg);
        } catch (const AxiomViolation&) {
          ok = false;
        }
        ASSERT_EQ(ok, axioms_hold(n, t, neg)) << "n=" << n << " code=" << code;
        accepted += ok ? 1 : 0;
      }
    }
    // Labelings with zero at 0: L3 has 2; L4 has 3! = 6 and L2xL2 has 3!/2 = 3.
    EXPECT_EQ(accepted, n == 3 ? 2u : 9u);
  }
}

TEST(Product, Shapes) {
  EXPECT_TRUE(product({}).is_trivial());
  const FiniteMVAlgebra a = chains({2, 3});
  EXPECT_EQ(a.size(), 6u);
  EXPECT_EQ(a.label(1), "(0,1/2)");
  EXPECT_EQ(a.label(a.one()), "(1,1)");
  const FiniteMVAlgebra b = chains({2, 2});
  EXPECT_EQ(b.size(), 4u);
  EXPECT_EQ(boolean_center(b).members.size(), 4u);
  const std::vector<FiniteMVAlgebra> single{chain_algebra(4)};
  EXPECT_EQ(product(single).size(), 4u);
}

TEST(Product, WholeFamilyIsAccepted) {
  for (const auto& orders : order_family()) {
    EXPECT_NO_THROW(chains(orders)) << testing::orders_name(orders);
  }
}

TEST(Product, FourThousandElementsValidateQuickly) {
  const FiniteMVAlgebra a = chains({8, 8, 8, 8});
  EXPECT_EQ(a.size(), 4096u);
  EXPECT_EQ(decompose(a).eta, (std::vector<int>{8, 8, 8, 8}));
}

TEST(BooleanCenter, SpecExamples) {
  const FiniteMVAlgebra a = chains({2, 3});  // index = 3a + b
  const BooleanCenter c = boolean_center(a);
  EXPECT_EQ(c.members, (std::vector<Element>{0, 2, 3, 5}));
  EXPECT_EQ(c.atoms, (std::vector<Element>{2, 3}));
  const BooleanCenter c5 = boolean_center(chain_algebra(5));
  EXPECT_EQ(c5.members, (std::vector<Element>{0, 4}));
  EXPECT_EQ(c5.atoms, (std::vector<Element>{4}));
  const BooleanCenter c8 = boolean_center(chains({2, 2, 2}));
  EXPECT_EQ(c8.members.size(), 8u);
  EXPECT_EQ(c8.atoms.size(), 3u);
}

TEST(BooleanCenter, FamilyMatchesIdempotentOracle) {
  for (const auto& orders : order_family()) {
    const FiniteMVAlgebra a = chains(orders);
    const BooleanCenter c = boolean_center(a);
    EXPECT_EQ(c.members, oracle::center_by_definition(a));
    EXPECT_EQ(c.members.size(), std::size_t{1} << orders.size());
    EXPECT_EQ(c.atoms.size(), orders.size());
    const EmbeddedAlgebra b = center_algebra(a);
    EXPECT_EQ(b.algebra.size(), c.members.size());
  }
}

TEST(IntervalAlgebra, SpecExamples) {
  const FiniteMVAlgebra a = chains({2, 3});
  EXPECT_TRUE(are_isomorphic(interval_algebra(a, 2).algebra, chain_algebra(3)));
  EXPECT_TRUE(are_isomorphic(interval_algebra(a, 3).algebra, chain_algebra(2)));
  EXPECT_EQ(interval_algebra(a, a.one()).algebra.size(), 6u);
  EXPECT_TRUE(interval_algebra(a, a.zero()).algebra.is_trivial());
  EXPECT_THROW(interval_algebra(a, 1), PreconditionError);  // (0,1/2) is not central
}

TEST(Decompose, SpecExamples) {
  EXPECT_EQ(decompose(chain_algebra(7)).eta, (std::vector<int>{7}));
  EXPECT_EQ(decompose(chains({2, 2, 2})).eta, (std::vector<int>{2, 2, 2}));
  EXPECT_THROW(decompose(FiniteMVAlgebra::trivial()), PreconditionError);
}

TEST(Decompose, ShuffledL2xL3AgreesWithSearch) {
  std::mt19937_64 rng(7);
  const FiniteMVAlgebra a = chains({2, 3});
  for (int round = 0; round < 10; ++round) {
    const FiniteMVAlgebra s = relabel(a, testing::random_permutation(a.size(), rng));
    EXPECT_EQ(decompose(s).eta, (std::vector<int>{2, 3}));
    EXPECT_TRUE(oracle::isomorphic_by_search(s, a));
  }
}

TEST(Decompose, WitnessIsConsistent) {
  std::mt19937_64 rng(11);
  for (const auto& orders : order_family()) {
    const FiniteMVAlgebra a = relabel(chains(orders), testing::random_permutation(
                                                          chains(orders).size(), rng));
    const Decomposition d = decompose(a);
    ASSERT_EQ(d.atoms.size(), d.eta.size());
    for (std::size_t i = 0; i < d.atoms.size(); ++i) {
      EXPECT_EQ(interval_algebra(a, d.atoms[i]).algebra.size(), static_cast<std::size_t>(d.eta[i]));
    }
    for (Element x = 0; x < a.size(); ++x) EXPECT_EQ(d.element_of(d.iso[x]), x);
  }
}

TEST(AreIsomorphic, AgreesWithSearchUpToTwelveElements) {
  std::mt19937_64 rng(3);
  std::vector<FiniteMVAlgebra> algebras;
  for (const auto& orders : order_family(2, 12, 3)) {
    std::size_t size = 1;
    for (int n : orders) size *= static_cast<std::size_t>(n);
    if (size > 12) continue;
    const FiniteMVAlgebra a = chains(orders);
    algebras.push_back(relabel(a, testing::random_permutation(a.size(), rng)));
  }
  algebras.push_back(chains({3, 2}));
  algebras.push_back(chains({2, 2, 3}));
  for (const auto& a : algebras) {
    for (const auto& b : algebras) {
      EXPECT_EQ(are_isomorphic(a, b), oracle::isomorphic_by_search(a, b));
    }
  }
  EXPECT_FALSE(are_isomorphic(chain_algebra(4), chains({2, 2})));
  EXPECT_TRUE(are_isomorphic(FiniteMVAlgebra::trivial(), product({})));
}

TEST(Misc, MultiplesHomomorphismsAndCaps) {
  const FiniteMVAlgebra l5 = chain_algebra(5);
  EXPECT_EQ(l5.multiple(1, 0), 0u);
  EXPECT_EQ(l5.multiple(1, 3), 3u);
  EXPECT_EQ(l5.multiple(1, 100), 4u);
  const FiniteMVAlgebra l3 = chain_algebra(3);
  const std::vector<Element> halve{0, 2, 4};  // L3 -> L5, k -> 2k
  EXPECT_TRUE(is_homomorphism(l3, l5, halve));
  const std::vector<Element> bad{0, 1, 4};
  EXPECT_FALSE(is_homomorphism(l3, l5, bad));
  EXPECT_THROW(check_size_cap(l5, 4), ResourceError);
  EXPECT_NO_THROW(check_size_cap(l5, 5));
}

}  // namespace
}  // namespace mvalg
