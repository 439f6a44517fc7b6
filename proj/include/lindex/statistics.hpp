#pragma once

// Descent statistics, W'_P, dual domino tableaux, self-evacuation and sign
// balance.  Functions taking a natural poset expect ids to already satisfy
// s < t in P => s < t; the value of letter t in a word is t + 1.

#include <cstddef>
#include <vector>

#include "lindex/poset.hpp"
#include "lindex/qpoly.hpp"

namespace lindex {

// 1-based descent positions of the word.  Throws PreconditionError unless P
// is natural.
std::vector<int> descent_set(const Poset& P, const LinearExtension& w);
int comaj(const Poset& P, const LinearExtension& w);
int maj(const Poset& P, const LinearExtension& w);

struct StatPoly {
  IntPoly poly;
  NaturalForm relabel;  // the natural relabelling the sum was taken over
};

// Sum of x^comaj (or x^maj) over L(P) after natural relabelling.
StatPoly wprime_poly(const Poset& P, std::size_t cap = kDefaultExtensionCap);
StatPoly w_poly(const Poset& P, std::size_t cap = kDefaultExtensionCap);

enum class DominoKind {
  Dual,    // I_1 may be a singleton (odd p); later steps are 2-chains
  Ordinary // the last step may be a singleton
};

struct DominoTableau {
  std::vector<Ideal> ideals;  // I_0 = {} ... I_r = P
};

// Exhaustive ideal-chain search (p <= 64).
std::vector<DominoTableau> domino_tableaux(const Poset& P, DominoKind kind = DominoKind::Dual);

// Word whose ideal chain, cut into pairs from the right (dual) or from the
// left (ordinary), is a domino tableau.
bool is_domino_extension(const Poset& P, const LinearExtension& w, DominoKind kind = DominoKind::Dual);
std::vector<LinearExtension> domino_extensions(const Poset& P, DominoKind kind = DominoKind::Dual,
                                               std::size_t cap = kDefaultExtensionCap);
// The word read off a tableau, each 2-chain listed bottom first.
LinearExtension domino_word(const Poset& P, const DominoTableau& T);

std::vector<LinearExtension> self_evacuating(const Poset& P, std::size_t cap = kDefaultExtensionCap);

// The tau word tau_1 . tau_3 tau_2 tau_1 ... tau_m ... tau_1 with m = p - 1
// (p even) or p - 2 (p odd).
std::vector<int> domino_bijection_word(int p);
// Applies the word above.  Throws PreconditionError unless w is a dual
// domino extension.
LinearExtension domino_to_selfevac(const Poset& P, const LinearExtension& w);

struct ChainLengthData {
  // Per element: longest saturated chain from a minimal element (in edges),
  // and whether all such chains have the same length parity.
  std::vector<int> nu;
  std::vector<bool> uniform_parity;
  // Parities of the lengths of maximal chains of P (bit 0 even, bit 1 odd).
  unsigned maximal_parities = 0;
};
ChainLengthData chain_length_data(const Poset& P);

struct SignBalance {
  std::size_t even = 0;
  std::size_t odd = 0;
  bool balanced = false;
  bool thm4a_applies = false;
  // Every Lambda_t has uniform chain parity.
  bool uniform_ideals = false;
  // Gamma(P) = sum of nu(t), chain lengths counted in edges.
  long gamma = 0;
  // Uniform parity and C(p,2) == Gamma (mod 2), as stated.
  bool thm4b_applies = false;
  // Uniform parity and C(p,2) != Gamma (mod 2).
  bool thm4b_corrected_applies = false;
};

SignBalance sign_balance_report(const Poset& P, std::size_t cap = kDefaultExtensionCap);

}  // namespace lindex
