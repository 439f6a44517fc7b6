#include <gtest/gtest.h>

#include "lindex/error.hpp"
#include "lindex/promotion.hpp"
#include "lindex/verify.hpp"
#include "test_util.hpp"

namespace lindex {
namespace {

// Independent tau: swap word positions i, i+1 (1-based) when incomparable.
std::vector<int> oracle_tau(const Poset& P, std::vector<int> w, int i) {
  const auto a = static_cast<std::size_t>(i - 1);
  if (!P.comparable(w[a], w[a + 1])) std::swap(w[a], w[a + 1]);
  return w;
}

std::vector<int> oracle_word(const Poset& P, std::vector<int> w, const std::vector<int>& taus) {
  for (int i : taus) w = oracle_tau(P, std::move(w), i);
  return w;
}

TEST(Promotion, TauMatchesOracle) {
  for (const auto& src : testing::corpus(7)) {
    const int p = src.poset.size();
    for (const auto& f : linear_extensions(src.poset)) {
      for (int i = 1; i < p; ++i) {
        EXPECT_EQ(tau(src.poset, f, i).vec(), oracle_tau(src.poset, f.vec(), i)) << src.name;
      }
    }
  }
  const Poset P = testing::corpus_poset("vee").poset;
  const LinearExtension f = linear_extensions(P).front();
  EXPECT_THROW(tau(P, f, 0), PreconditionError);
  EXPECT_THROW(tau(P, f, 3), PreconditionError);
}

TEST(Promotion, TauRelations) {
  for (const auto& src : testing::corpus(7)) {
    const Poset& P = src.poset;
    const int p = P.size();
    for (const auto& f : linear_extensions(P)) {
      for (int i = 1; i < p; ++i) {
        EXPECT_EQ(apply_taus(P, f, {i, i}), f);
        for (int j = i + 2; j < p; ++j) EXPECT_EQ(apply_taus(P, f, {i, j}), apply_taus(P, f, {j, i}));
        if (i + 1 < p) {
          std::vector<int> w;
          for (int k = 0; k < 6; ++k) w.insert(w.end(), {i, i + 1});
          EXPECT_EQ(apply_taus(P, f, w), f) << src.name << " (tau_i tau_{i+1})^6";
        }
      }
    }
  }
}

TEST(Promotion, WordsOfTheNamedProducts) {
  EXPECT_EQ(delta_word(4), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(gamma_word(4), (std::vector<int>{1, 2, 3, 1, 2, 1}));
  EXPECT_EQ(gamma_star_word(4), (std::vector<int>{3, 2, 1, 3, 2, 3}));
  EXPECT_TRUE(delta_word(1).empty());
}

TEST(Promotion, SlideAgreesWithWordAndOracle) {
  for (const auto& src : testing::corpus(8)) {
    const Poset& P = src.poset;
    for (const auto& f : linear_extensions(P)) {
      const Promotion pr = promote_slide(P, f);
      EXPECT_EQ(pr.result, promote_word(P, f)) << src.name;
      EXPECT_EQ(pr.result.vec(), oracle_word(P, f.vec(), delta_word(P.size()))) << src.name;
      EXPECT_EQ(dual_promote(P, pr.result), f) << src.name;
      EXPECT_TRUE(is_linear_extension(P, pr.result.word()));
      for (std::size_t k = 1; k < pr.chain.size(); ++k) {
        EXPECT_TRUE(P.less(pr.chain[k - 1], pr.chain[k])) << src.name;
      }
      EXPECT_EQ(pr.result.vec(), rotate_factors(block_factorization(P, f))) << src.name;
    }
  }
}

TEST(Promotion, EvacuationRelations) {
  for (const auto& src : testing::corpus(8)) {
    const Poset& P = src.poset;
    const int p = P.size();
    for (const auto& f : linear_extensions(P)) {
      const LinearExtension e = evacuate(P, f);
      const LinearExtension es = dual_evacuate(P, f);
      EXPECT_EQ(e, evacuate_word(P, f)) << src.name;
      EXPECT_EQ(es, dual_evacuate_word(P, f)) << src.name;
      EXPECT_EQ(evacuate(P, e), f) << src.name;
      EXPECT_EQ(dual_evacuate(P, es), f) << src.name;
      LinearExtension g = f;
      for (int k = 0; k < p; ++k) g = promote_word(P, g);
      EXPECT_EQ(g, dual_evacuate(P, e)) << src.name << " promotion^p";
      EXPECT_EQ(evacuate(P, promote_word(P, f)), dual_promote(P, e)) << src.name;
    }
  }
}

TEST(Promotion, TrajectoryOfEvacuationIsPrincipalChain) {
  for (const auto& src : testing::corpus(7)) {
    for (const auto& f : linear_extensions(src.poset)) {
      const ChainInP pc = principal_chain(src.poset, f);
      EXPECT_EQ(trajectory(src.poset, evacuate(src.poset, f)), pc) << src.name;
      EXPECT_EQ(principal_chain_from_words(src.poset, f), pc) << src.name;
    }
  }
}

TEST(Promotion, CuttingAntichainRecurrence) {
  for (const auto& src : testing::corpus(8)) {
    const Poset& P = src.poset;
    const int p = P.size();
    const BigInt e = count_extensions(P);
    for (unsigned mask = 1; mask < (1U << p); ++mask) {
      std::vector<int> A;
      for (int t = 0; t < p; ++t) {
        if (mask >> t & 1U) A.push_back(t);
      }
      if (!antichain_cuts_all_chains(P, A)) continue;
      BigInt sum = 0;
      for (int t : A) sum += count_extensions(P.without(t));
      EXPECT_EQ(sum, e) << src.name;
    }
  }
}

TEST(Promotion, PermutationToolkit) {
  const IndexPerm a{1, 2, 0};
  const IndexPerm b{1, 0, 2};
  EXPECT_EQ(compose(a, b), (IndexPerm{0, 2, 1}));
  EXPECT_EQ(perm_order(a), 3);
  EXPECT_TRUE(is_identity(perm_power(a, BigInt(3))));
  EXPECT_EQ(cycle_type(b), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(dihedral_group_order(b, IndexPerm{0, 2, 1}), 6);
  EXPECT_EQ(dihedral_group_order(b, b), 2);
}

TEST(Promotion, FrozenOrbitStructures) {
  const Poset NP = testing::corpus_poset("n_poset").poset;
  const ExtensionIndex N(NP);
  const OrbitReport r = orbit_structure(N, OrbitOperator::Promotion);
  EXPECT_EQ(r.cycles, (std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {3, 1}}));
  EXPECT_EQ(r.order, 6);
  // Promotion on the 3 x 3 rectangle has order 9 and e = 42.
  const Poset RP = shape_poset(parse_shape("shape:3,3,3"));
  const ExtensionIndex R(RP);
  EXPECT_EQ(R.size(), 42U);
  EXPECT_EQ(orbit_structure(R, OrbitOperator::Promotion).order, 9);
  EXPECT_EQ(orbit_structure(R, OrbitOperator::PromotionPowerP).order, 1);
}

TEST(Promotion, BlockExampleFactorization) {
  const SuiteReport r = verify_block_example();
  ASSERT_EQ(r.lines.size(), 4U);
  EXPECT_TRUE(r.lines[0].pass);
  EXPECT_TRUE(r.lines[1].pass);
  EXPECT_EQ(r.lines[1].detail, "abdcegfhilkj");
}

TEST(Promotion, OperatorIdentityOfTheNestedWords) {
  EXPECT_TRUE(verify_lemma2(testing::corpus(7), kDefaultExtensionCap).pass());
}

}  // namespace
}  // namespace lindex
