#include <gtest/gtest.h>

#include <map>

#include "lindex/error.hpp"
#include "lindex/slender.hpp"
#include "test_util.hpp"

namespace lindex {
namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// [n]_q! at an integer q.
long q_factorial(int n, long q) {
  long r = 1;
  for (int k = 1; k <= n; ++k) {
    long bracket = 0;
    for (int j = 0; j < k; ++j) bracket = bracket * q + 1;
    r *= bracket;
  }
  return r;
}

long power(long q, int e) {
  long r = 1;
  while (e-- > 0) r *= q;
  return r;
}

TEST(Slender, BooleanLattice) {
  const GradedPoset B = boolean_lattice(3);
  EXPECT_EQ(B.size(), 8);
  EXPECT_EQ(B.rank(), 3);
  EXPECT_TRUE(is_slender(B));
  EXPECT_EQ(maximal_chains(B).size(), 6U);
  EXPECT_EQ(dual_domino_chains(B), 0);
  EXPECT_EQ(self_evacuating_chains(B), 0U);
}

TEST(Slender, GradedChecks) {
  EXPECT_THROW(GradedPoset::from_poset(testing::corpus_poset("vee").poset), PreconditionError);
  const GradedPoset W = GradedPoset::from_poset(testing::corpus_poset("weak_s3").poset);
  EXPECT_TRUE(is_slender(W));
  EXPECT_EQ(W.rank(), 3);
  EXPECT_EQ(dual_domino_chains(W), 2);
  EXPECT_EQ(self_evacuating_chains(W), 2U);
}

TEST(Slender, ChainsOfIdealLatticesAreExtensions) {
  for (const auto& src : testing::corpus(7)) {
    const IdealLattice J = ideals_lattice(src.poset);
    const GradedPoset Q = ideal_lattice_graded(src.poset);
    EXPECT_TRUE(is_slender(Q)) << src.name;
    const auto chains = maximal_chains(Q);
    EXPECT_EQ(BigInt(static_cast<long>(chains.size())), count_extensions(src.poset)) << src.name;
    for (const auto& m : chains) {
      const LinearExtension f = extension_from_chain(J, m);
      EXPECT_TRUE(is_linear_extension(src.poset, f.word()));
      EXPECT_EQ(chain_from_extension(J, f), m);
      EXPECT_EQ(extension_from_chain(J, promote_chain(Q, m)), promote_word(src.poset, f)) << src.name;
      EXPECT_EQ(extension_from_chain(J, evacuate_chain(Q, m)), evacuate(src.poset, f)) << src.name;
    }
  }
}

TEST(Slender, ReportOnIdealLattices) {
  for (const auto& src : testing::corpus(7)) {
    const SlenderReport r = slender_report(ideal_lattice_graded(src.poset));
    EXPECT_TRUE(r.slender);
    EXPECT_TRUE(r.involutions_ok) << src.name;
    EXPECT_TRUE(r.power_ok) << src.name;
    EXPECT_EQ(r.dual_domino, BigInt(static_cast<long>(r.self_evacuating))) << src.name;
  }
}

// On a slender poset the averaged swap sends a chain to minus the swapped
// chain, or fixes it, so it is +-tau_i on the basis.
TEST(Slender, LinearTauIsSignedSwap) {
  const GradedPoset Q = ideal_lattice_graded(testing::corpus_poset("fence5").poset);
  for (const auto& m : maximal_chains(Q)) {
    for (int i = 1; i < Q.rank(); ++i) {
      const ChainVector v = linear_tau(Q, ChainVector::basis(m), i);
      const auto nb = neighbors(Q, m, i);
      ASSERT_LE(nb.size(), 1U);
      if (nb.empty()) {
        EXPECT_EQ(v, ChainVector::basis(m));
      } else {
        EXPECT_EQ(v, ChainVector::basis(tau_chain(Q, m, i)) * Rat(-1));
      }
    }
  }
}

TEST(Slender, CrossPolytope) {
  for (int n = 1; n <= 4; ++n) {
    const CrossPolytope X = cross_polytope(n);
    EXPECT_TRUE(is_slender(X.Q));
    EXPECT_EQ(static_cast<long>(maximal_chains(X.Q).size()), power(2, n) * factorial(n));
    for (const SignedPerm& w : all_signed_perms(n)) EXPECT_EQ(X.signed_of(X.chain_of(w)), w);
  }
  EXPECT_EQ(cross_polytope_report(1).dihedral_order, 2);
  EXPECT_EQ(cross_polytope_report(2).dihedral_order, 8);
  for (int n = 2; n <= 4; ++n) EXPECT_TRUE(cross_polytope_report(n).pass()) << n;
  EXPECT_THROW(cross_polytope(7), PreconditionError);
}

TEST(Slender, SignedClosedForms) {
  const SignedPerm w = parse_signed_perm("1,2,-3");
  EXPECT_EQ(signed_delta(w).to_string(), "2,-3,-1");
  EXPECT_EQ(signed_gamma(w).to_string(), "-1,-3,2");
  EXPECT_EQ(signed_gamma_star(w).to_string(), "3,-2,-1");
  EXPECT_EQ(signed_deltapow(w), signed_gamma_star(signed_gamma(w)));
  EXPECT_THROW(parse_signed_perm("1,-1"), ParseError);
}

TEST(Slender, FlagCounts) {
  for (const auto& [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2}}) {
    const SubspaceLattice L = subspace_lattice(n, q);
    EXPECT_EQ(static_cast<long>(maximal_chains(L.Q).size()), q_factorial(n, q)) << n << "," << q;
  }
  EXPECT_EQ(maximal_chains(subspace_lattice(3, 2).Q).size(), 21U);
  EXPECT_THROW(subspace_lattice(5, 2), CapExceeded);
  EXPECT_FALSE(subspace_lattice_supported(4, 3));
}

TEST(Slender, BruhatCellSizes) {
  for (const auto& [n, q] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}}) {
    const SubspaceLattice L = subspace_lattice(n, q);
    std::map<Perm, long> sizes;
    for (const auto& m : maximal_chains(L.Q)) ++sizes[bruhat_cell(L, m, L.standard_flag)];
    EXPECT_EQ(sizes.size(), static_cast<std::size_t>(factorial(n)));
    for (const auto& [w, size] : sizes) EXPECT_EQ(size, power(q, w.length())) << w.to_string();
    EXPECT_EQ(bruhat_cell(L, L.standard_flag, L.standard_flag), Perm::identity(n));
  }
}

TEST(Slender, NeighborSumSatisfiesQuadraticRelation) {
  const SubspaceLattice L = subspace_lattice(3, 2);
  const Rat q(2);
  for (const auto& m : maximal_chains(L.Q)) {
    for (int i = 1; i < 3; ++i) {
      const ChainVector v = ChainVector::basis(m);
      const ChainVector s = neighbor_sum(L.Q, v, i);
      const ChainVector ss = neighbor_sum(L.Q, s, i);
      // S^2 = (q - 1) S + q
      EXPECT_EQ(ss, s * (q - 1) + v * q);
      EXPECT_EQ(linear_tau(L.Q, linear_tau(L.Q, v, i), i), v);
    }
  }
}

TEST(Slender, FlagEvacuationMatchesHecke) {
  for (const auto& [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const HeckeConsistency h = hecke_consistency(n, q);
    EXPECT_TRUE(h.ok) << n << "," << q << " " << h.witness;
    EXPECT_TRUE(h.local_q_uniform);
    for (const auto& c : h.cells) EXPECT_TRUE(c.constant);
  }
  const HeckeConsistency b22 = hecke_consistency(2, 2);
  EXPECT_EQ(b22.cells[0].coefficient, Rat(1, 3));
  EXPECT_EQ(b22.cells[1].coefficient, Rat(-2, 3));
}

TEST(Slender, EchelonAndFlagText) {
  const SubspaceLattice L = subspace_lattice(2, 2);
  EXPECT_EQ(flag_to_string(L, L.standard_flag), "<10>");
  EXPECT_EQ(echelon_basis(L, L.standard_flag[1]), (std::vector<std::vector<int>>{{1, 0}}));
}

}  // namespace
}  // namespace lindex
