#include <gtest/gtest.h>

#include "lindex/error.hpp"
#include "lindex/verify.hpp"
#include "test_util.hpp"

namespace lindex {
namespace {

TEST(Verify, InformationalLinesDoNotDecide) {
  SuiteReport r{"x", {}};
  r.add("a", "check", true);
  r.note("a", "variant", false);
  EXPECT_TRUE(r.pass());
  r.add("b", "check", false);
  EXPECT_FALSE(r.pass());
}

TEST(Verify, KnownIds) {
  EXPECT_EQ(verify_ids().size(), 12U);
  VerifyOptions opt;
  EXPECT_THROW(run_verify("nope", opt), PreconditionError);
}

TEST(Verify, CorpusSuitesPass) {
  const auto posets = testing::corpus(7);
  EXPECT_TRUE(verify_thm1(posets, kDefaultExtensionCap).pass());
  EXPECT_TRUE(verify_lemma1(posets, kDefaultExtensionCap).pass());
  EXPECT_TRUE(verify_promotion(posets, kDefaultExtensionCap).pass());
  EXPECT_TRUE(verify_thm2(posets, kDefaultExtensionCap).pass());
  EXPECT_TRUE(verify_thm3(posets).pass());
  EXPECT_TRUE(verify_thm5(posets, kDefaultExtensionCap).pass());
}

TEST(Verify, SignBalanceLiteralHypothesisFailsOnShortChains) {
  const SuiteReport r = verify_thm4({testing::corpus_poset("chain2"), testing::corpus_poset("wedge")},
                                    kDefaultExtensionCap);
  EXPECT_FALSE(r.pass());
  bool corrected_ok = true;
  for (const auto& l : r.lines) {
    if (l.informational) corrected_ok = corrected_ok && l.pass;
  }
  EXPECT_TRUE(corrected_ok);
}

TEST(Verify, HeckeAndGeometrySuites) {
  EXPECT_TRUE(verify_hecke_tables(kDefaultHeckeCap).pass());
  EXPECT_TRUE(verify_thm8(2, 5, kDefaultHeckeCap).pass());
  EXPECT_TRUE(verify_thm9(2, 4, kDefaultHeckeCap).pass());
  EXPECT_TRUE(verify_crosspoly(2, 4).pass());
  EXPECT_TRUE(verify_eulerian().pass());
}

}  // namespace
}  // namespace lindex
