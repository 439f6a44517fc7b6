#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "lindex/error.hpp"
#include "lindex/poset.hpp"
#include "test_util.hpp"

namespace lindex {
namespace {

// Frozen from the brute-force oracle below.
const std::map<std::string, int> kExtensionCounts = {
    {"antichain2", 2},    {"antichain3", 6},     {"antichain4", 24},      {"boolean_b3", 48},
    {"chain1", 1},        {"chain2", 1},         {"chain4", 1},           {"chain7", 1},
    {"chain_plus_point", 5}, {"crown6", 48},     {"diamond", 2},          {"fence5", 16},
    {"hook_311", 6},      {"n_poset", 5},        {"nonnatural", 5},       {"ordinal_1_3_1", 6},
    {"ordinal_2_2_2", 8}, {"rect_2x2", 2},       {"rect_2x3", 5},         {"rect_2x4", 14},
    {"shape_32", 5},      {"shifted_21", 1},     {"shifted_31", 2},       {"shifted_32", 2},
    {"shifted_321", 2},   {"shifted_42", 5},     {"staircase_21", 2},     {"staircase_321", 16},
    {"tree7", 80},        {"two_chains", 6},     {"vee", 2},              {"weak_s3", 6},
    {"wedge", 2},
};

TEST(Poset, ExtensionCountsMatchBruteForce) {
  for (const auto& src : testing::corpus(8)) {
    const auto brute = testing::brute_extensions(src.poset);
    const auto listed = linear_extensions(src.poset);
    ASSERT_EQ(listed.size(), brute.size()) << src.name;
    for (std::size_t k = 0; k < brute.size(); ++k) EXPECT_EQ(listed[k].vec(), brute[k]) << src.name;
    EXPECT_EQ(count_extensions(src.poset), BigInt(static_cast<long>(brute.size()))) << src.name;
    const auto it = kExtensionCounts.find(src.name);
    ASSERT_NE(it, kExtensionCounts.end()) << src.name;
    EXPECT_EQ(static_cast<int>(brute.size()), it->second) << src.name;
  }
}

TEST(Poset, ExtensionsAreValid) {
  for (const auto& src : testing::corpus(8)) {
    for (const auto& f : linear_extensions(src.poset)) {
      EXPECT_TRUE(is_linear_extension(src.poset, f.word()));
      EXPECT_TRUE(testing::respects_covers(src.poset, f.vec()));
    }
  }
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Hook length formula, computed from the row lengths alone.
long hook_count(const std::vector<int>& rows) {
  long denom = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      int leg = 0;
      for (std::size_t k = i + 1; k < rows.size() && rows[k] > j; ++k) ++leg;
      denom *= rows[i] - j - 1 + leg + 1;
    }
  }
  return factorial(std::accumulate(rows.begin(), rows.end(), 0)) / denom;
}

TEST(Poset, ShapeCountsMatchHookFormula) {
  for (const std::vector<int>& rows : std::vector<std::vector<int>>{
           {1}, {2, 1}, {3, 3}, {3, 2, 1}, {4, 4, 4}, {5, 3, 1}, {4, 2, 2, 1}, {6, 6}}) {
    const Shape s{rows, false};
    EXPECT_EQ(count_extensions(shape_poset(s)), BigInt(hook_count(rows))) << s.to_string();
  }
}

TEST(Poset, ShiftedStaircaseCounts) {
  // Shifted (3,2,1) and (4,3,2,1) have 2 and 12 standard fillings.
  EXPECT_EQ(count_extensions(shape_poset(parse_shape("shifted:3,2,1"))), 2);
  EXPECT_EQ(count_extensions(shape_poset(parse_shape("shifted:4,3,2,1"))), 12);
}

TEST(Poset, CoversAreIrredundant) {
  const std::vector<Cover> covers = {{0, 1}, {1, 2}, {0, 2}};
  const Poset P = Poset::from_covers(3, covers);
  EXPECT_EQ(P.covers(), (std::vector<Cover>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(P.less(0, 2));
  EXPECT_TRUE(P.is_chain());
  EXPECT_TRUE(P.is_natural());
  EXPECT_EQ(P.dual().dual(), P);
}

TEST(Poset, RejectsBadCovers) {
  const std::vector<Cover> loop = {{0, 1}, {1, 0}};
  EXPECT_THROW(Poset::from_covers(2, loop), CycleError);
  const std::vector<Cover> out_of_range = {{0, 3}};
  EXPECT_THROW(Poset::from_covers(2, out_of_range), PreconditionError);
}

TEST(Poset, Ideals) {
  EXPECT_EQ(ideals_lattice(testing::corpus_poset("antichain4").poset).ideals.size(), 16U);
  EXPECT_EQ(ideals_lattice(testing::corpus_poset("chain7").poset).ideals.size(), 8U);
  const Poset P = testing::corpus_poset("n_poset").poset;
  const IdealLattice J = ideals_lattice(P);
  for (const auto& I : J.ideals) EXPECT_TRUE(is_ideal(P, I.members));
  // Ideals are sorted by (size, mask) and start with the empty ideal.
  EXPECT_EQ(J.ideals.front().members, 0U);
  EXPECT_TRUE(std::is_sorted(J.ideals.begin(), J.ideals.end(), [](const Ideal& a, const Ideal& b) {
    return std::pair(a.size(), a.members) < std::pair(b.size(), b.members);
  }));
}

TEST(Poset, NaturalRelabelling) {
  const Poset P = testing::corpus_poset("nonnatural").poset;
  EXPECT_FALSE(P.is_natural());
  const NaturalForm nf = natural_relabel(P);
  EXPECT_TRUE(nf.poset.is_natural());
  EXPECT_EQ(count_extensions(nf.poset), count_extensions(P));
  for (int t = 0; t < P.size(); ++t) {
    EXPECT_EQ(nf.new_to_old[static_cast<std::size_t>(nf.old_to_new[static_cast<std::size_t>(t)])], t);
  }
}

TEST(Poset, CuttingAntichains) {
  const Poset chain = testing::corpus_poset("chain4").poset;
  for (int t = 0; t < 4; ++t) EXPECT_TRUE(antichain_cuts_all_chains(chain, std::vector<int>{t}));
  const Poset vee = testing::corpus_poset("antichain2").poset;
  EXPECT_FALSE(antichain_cuts_all_chains(vee, std::vector<int>{0}));
  EXPECT_TRUE(antichain_cuts_all_chains(vee, std::vector<int>{0, 1}));
}

TEST(Poset, EnumerationCap) {
  EXPECT_THROW(linear_extensions(testing::corpus_poset("antichain4").poset, 10), CapExceeded);
}

}  // namespace
}  // namespace lindex
