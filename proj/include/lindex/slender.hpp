#pragma once

// Promotion and evacuation on maximal chains of graded posets: the swap
// operators of slender posets, dual domino chains, the cross-polytope, the
// averaged linear operators on arbitrary graded posets, and flags of F_q^n
// against the Hecke expansion.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lindex/hecke.hpp"
#include "lindex/poset.hpp"
#include "lindex/promotion.hpp"

namespace lindex {

inline constexpr std::size_t kDefaultChainCap = 2'000'000;

class GradedPoset {
 public:
  GradedPoset() = default;
  // Throws PreconditionError unless P has a unique minimum and maximum and
  // every cover raises the rank by one.
  static GradedPoset from_poset(Poset P);

  const Poset& poset() const { return P_; }
  int size() const { return P_.size(); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int rank() const { return rank_of(top_); }
  int rank_of(int t) const { return rank_[static_cast<std::size_t>(t)]; }

  // Elements strictly between a and b, where rank(b) = rank(a) + 2.
  std::vector<int> middles(int a, int b) const;

 private:
  Poset P_;
  std::vector<int> rank_;
  int bottom_ = 0;
  int top_ = 0;
};

// J(P) as a graded poset; element k is ideals_lattice(P).ideals[k].
GradedPoset ideal_lattice_graded(const Poset& P);
// Subsets of an n-set; the lattice of ideals of an n-element antichain.
GradedPoset boolean_lattice(int n);

// t_0 = bottom, ..., t_n = top.
using MaxChain = std::vector<int>;

bool is_maximal_chain(const GradedPoset& Q, const MaxChain& m);
// Lexicographic in element ids; throws CapExceeded past `cap`.
std::vector<MaxChain> maximal_chains(const GradedPoset& Q, std::size_t cap = kDefaultChainCap);

// Every rank-2 interval has three or four elements.
bool is_slender(const GradedPoset& Q);

// Replaces t_i by the other middle of [t_{i-1}, t_{i+1}] when there is one.
// 1 <= i <= rank - 1.  Throws PreconditionError when that interval has more
// than four elements.
MaxChain tau_chain(const GradedPoset& Q, const MaxChain& m, int i);
MaxChain apply_chain_taus(const GradedPoset& Q, MaxChain m, const std::vector<int>& word);
MaxChain promote_chain(const GradedPoset& Q, const MaxChain& m);
MaxChain evacuate_chain(const GradedPoset& Q, const MaxChain& m);
MaxChain dual_evacuate_chain(const GradedPoset& Q, const MaxChain& m);

// Dense indexing of the maximal chains of a slender poset.
class ChainIndex {
 public:
  // Keeps a pointer to Q, which must outlive the index.
  explicit ChainIndex(const GradedPoset& Q, std::size_t cap = kDefaultChainCap);
  explicit ChainIndex(GradedPoset&&, std::size_t = kDefaultChainCap) = delete;

  const GradedPoset& poset() const { return *Q_; }
  std::size_t size() const { return chains_.size(); }
  const MaxChain& operator[](std::size_t k) const { return chains_[k]; }
  const std::vector<MaxChain>& all() const { return chains_; }
  std::size_t index_of(const MaxChain& m) const;

  // k -> index_of(chains[k] applied to `word`).
  IndexPerm tau_word_perm(const std::vector<int>& word) const;

 private:
  const GradedPoset* Q_;
  std::vector<MaxChain> chains_;
  std::map<MaxChain, std::size_t> index_;
};

// Chains with t_{i-1} < t_i a rank-2 chain interval for i >= 2, and t_1 an
// atom (odd rank) or a rank-2 chain interval above the bottom (even rank).
BigInt dual_domino_chains(const GradedPoset& Q);
// #{m : m evacuated = m}.  Q must be slender.
std::size_t self_evacuating_chains(const GradedPoset& Q, std::size_t cap = kDefaultChainCap);

struct SlenderReport {
  bool slender = false;
  int rank = 0;
  std::size_t chains = 0;
  // Number of rank-2 intervals with 3 and with 4 elements.
  std::size_t chain_intervals = 0;
  std::size_t square_intervals = 0;
  BigInt dual_domino;
  std::size_t self_evacuating = 0;
  BigInt promotion_order;
  BigInt dihedral_order;
  bool involutions_ok = false;   // evacuation and dual evacuation square to 1
  bool power_ok = false;         // promotion^rank = evacuation * dual evacuation
};
// Everything past `slender` and the interval census is left at its default
// when Q is not slender.
SlenderReport slender_report(const GradedPoset& Q, std::size_t cap = kDefaultChainCap);

// J(P) chain <-> extension: f(t) = i for t in I_i - I_{i-1}.
LinearExtension extension_from_chain(const IdealLattice& J, const MaxChain& m);
MaxChain chain_from_extension(const IdealLattice& J, const LinearExtension& f);

// ---------------------------------------------------------------------------
// Cross-polytope

inline constexpr int kMaxCrossPolytopeDim = 6;

// Entries +v and -v stand for v and its barred (antipodal) copy.
struct SignedPerm {
  std::vector<int> a;

  int n() const { return static_cast<int>(a.size()); }
  // "1,2,-3".
  std::string to_string() const;
  auto operator<=>(const SignedPerm&) const = default;
};

// Throws ParseError unless the absolute values form a permutation.
SignedPerm parse_signed_perm(std::string_view text);
std::vector<SignedPerm> all_signed_perms(int n);

struct CrossPolytope {
  int n = 0;
  GradedPoset Q;
  // Vertex set of each element as a mask: bit 2(v-1) for v, bit 2(v-1)+1 for
  // its bar.  The top element has every bit set.
  std::vector<std::uint32_t> faces;

  MaxChain chain_of(const SignedPerm& w) const;
  SignedPerm signed_of(const MaxChain& m) const;

 private:
  std::map<std::uint32_t, int> by_face_;
  friend CrossPolytope cross_polytope(int n);
};

// Face lattice of the n-dimensional cross-polytope, with bottom and top.
// Throws PreconditionError for n outside 1..6.
CrossPolytope cross_polytope(int n);

SignedPerm signed_delta(const SignedPerm& w);
SignedPerm signed_gamma(const SignedPerm& w);
SignedPerm signed_gamma_star(const SignedPerm& w);
// w delta^{n+1} = w gamma gamma*.
SignedPerm signed_deltapow(const SignedPerm& w);

struct CrossPolytopeReport {
  int n = 0;
  std::size_t chains = 0;
  bool delta_ok = false;
  bool gamma_ok = false;
  bool gamma_star_ok = false;
  bool deltapow_ok = false;
  BigInt gamma_gamma_star_order;
  BigInt dihedral_order;
  BigInt expected_dihedral_order;  // 2n for odd n, 4n for even n
  bool pass() const {
    return delta_ok && gamma_ok && gamma_star_ok && deltapow_ok &&
           dihedral_order == expected_dihedral_order;
  }
};
// Closed forms against the generic chain operators on every maximal chain.
CrossPolytopeReport cross_polytope_report(int n);

// ---------------------------------------------------------------------------
// Linear operators on K M(Q)

// Finite combination of maximal chains; no stored zeros.
class ChainVector {
 public:
  ChainVector() = default;
  static ChainVector basis(const MaxChain& m);

  const std::map<MaxChain, Rat>& terms() const { return terms_; }
  Rat coeff(const MaxChain& m) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MaxChain& m, const Rat& c);
  ChainVector& operator+=(const ChainVector& o);
  ChainVector& operator-=(const ChainVector& o);
  ChainVector& operator*=(const Rat& c);
  friend ChainVector operator+(ChainVector a, const ChainVector& b) { return a += b; }
  friend ChainVector operator-(ChainVector a, const ChainVector& b) { return a -= b; }
  friend ChainVector operator*(ChainVector a, const Rat& c) { return a *= c; }
  friend bool operator==(const ChainVector&, const ChainVector&) = default;

 private:
  std::map<MaxChain, Rat> terms_;
};

// Chains differing from m exactly at t_i.
std::vector<MaxChain> neighbors(const GradedPoset& Q, const MaxChain& m, int i);

// m -> ((q-1) m - 2 sum of N_i(m)) / (q+1) with q = #N_i(m); m when q = 0.
ChainVector linear_tau(const GradedPoset& Q, const ChainVector& v, int i);
// m -> sum of N_i(m).  On B_n(q) this is the image of T_i.
ChainVector neighbor_sum(const GradedPoset& Q, const ChainVector& v, int i);
// linear_tau along the gamma word.
ChainVector evacuate_chains(const GradedPoset& Q, const ChainVector& v);
ChainVector promote_chains(const GradedPoset& Q, const ChainVector& v);

struct EvacuationSigns {
  std::size_t chains = 0;
  // Chains whose linear evacuation is +/- a single chain, the combinatorial
  // one.
  std::size_t matched = 0;
  std::size_t negative = 0;
};
// Compares evacuate_chains with evacuate_chain on every basis chain of a
// slender poset.
EvacuationSigns evacuation_signs(const GradedPoset& Q, std::size_t cap = kDefaultChainCap);

// ---------------------------------------------------------------------------
// Subspaces of F_q^n

// q = 2 with n <= 4, or q = 3 with n <= 3.
bool subspace_lattice_supported(int n, int q);

struct SubspaceLattice {
  int n = 0;
  int q = 0;
  GradedPoset Q;
  // Vectors of F_q^n are the integers 0..q^n-1 read as base-q digits
  // (coordinate 1 is the lowest digit); bit v of members[k] is set when
  // vector v lies in subspace k.
  std::vector<std::uint64_t> members;
  // Standard flag: t_i spanned by the first i unit vectors.
  MaxChain standard_flag;
};

// Throws CapExceeded outside subspace_lattice_supported.
SubspaceLattice subspace_lattice(int n, int q);

// Reduced row-echelon basis of subspace k, rows as coordinate vectors.
std::vector<std::vector<int>> echelon_basis(const SubspaceLattice& L, int k);
// "<100,010>" style description of a flag, one basis per step.
std::string flag_to_string(const SubspaceLattice& L, const MaxChain& m);

// Relative position of m with respect to m0: pi(i) is the least j with
// dim(t_i ∩ t0_j) - dim(t_{i-1} ∩ t0_j) = 1.
Perm bruhat_cell(const SubspaceLattice& L, const MaxChain& m, const MaxChain& m0);

struct CellRow {
  Perm w;
  std::size_t size = 0;
  bool constant = false;  // one coefficient across the cell
  Rat coefficient;        // the coefficient on the first chain of the cell
  Rat expected;           // c_w at the lattice's q
  bool ok = false;
};

struct HeckeConsistency {
  int n = 0;
  int q = 0;
  std::size_t flags = 0;
  bool local_q_uniform = false;  // #N_i(m) = q for every chain and i
  std::vector<CellRow> cells;    // in all_perms order
  bool ok = false;
  // First failing flag, empty when ok.
  std::string witness;
};
HeckeConsistency hecke_consistency(int n, int q, int hecke_cap = kDefaultHeckeCap);

}  // namespace lindex
