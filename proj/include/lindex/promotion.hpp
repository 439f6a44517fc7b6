#pragma once

// Promotion, evacuation and their duals on linear extensions.  Operators act
// on the right: promote(P, f) is f∂, and applying a tau word {i1, i2, ...}
// applies tau_{i1} first.

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "lindex/parallel.hpp"
#include "lindex/poset.hpp"

namespace lindex {

// Elements of a chain of P listed from bottom to top.
using ChainInP = std::vector<int>;

// tau_i for 1 <= i <= p-1: swaps word positions i, i+1 (1-based) when the two
// elements are incomparable.  Throws PreconditionError on a bad index.
LinearExtension tau(const Poset& P, const LinearExtension& f, int i);
// Applies tau_{word[0]}, then tau_{word[1]}, ...
LinearExtension apply_taus(const Poset& P, LinearExtension f, const std::vector<int>& word);

// tau words for the named products; all on a p-element poset.
std::vector<int> delta_word(int p);       // tau_1 ... tau_{p-1}
std::vector<int> gamma_word(int p);       // delta_{p-1} delta_{p-2} ... delta_1
std::vector<int> gamma_star_word(int p);  // tau_{p-1}..tau_1 . tau_{p-1}..tau_2 ... tau_{p-1}

struct Promotion {
  LinearExtension result;
  ChainInP chain;  // the promotion chain t1 < t2 < ... < tk
};

// Label-sliding promotion.
Promotion promote_slide(const Poset& P, const LinearExtension& f);
// Block-rotation form of tau_1 ... tau_{p-1}.
LinearExtension promote_word(const Poset& P, const LinearExtension& f);
// Label-sliding dual promotion; the inverse of promotion.
LinearExtension dual_promote(const Poset& P, const LinearExtension& f);

// Splits a word into maximal factors whose first letter is incomparable with
// every other letter of the factor.
std::vector<std::vector<int>> block_factorization(const Poset& P, const LinearExtension& f);

// Rotates every factor left by one and concatenates.
template <typename T>
std::vector<T> rotate_factors(const std::vector<std::vector<T>>& factors) {
  std::vector<T> out;
  for (const auto& block : factors) {
    for (std::size_t k = 1; k < block.size(); ++k) out.push_back(block[k]);
    if (!block.empty()) out.push_back(block.front());
  }
  return out;
}

// Promote-and-freeze on shrinking prefixes.
LinearExtension evacuate(const Poset& P, const LinearExtension& f);
// f applied to the gamma word.
LinearExtension evacuate_word(const Poset& P, const LinearExtension& f);
// Through the dual poset: conj(evacuate(P*, conj(f))).
LinearExtension dual_evacuate(const Poset& P, const LinearExtension& f);
// f applied to the gamma* word.
LinearExtension dual_evacuate_word(const Poset& P, const LinearExtension& f);

// Elements visited by the label starting at f^{-1}(p) during p - 1 promotions.
ChainInP principal_chain(const Poset& P, const LinearExtension& f);
// {u_{i,p-i}} read off the words of f, f∂, ..., f∂^{p-1}.
ChainInP principal_chain_from_words(const Poset& P, const LinearExtension& f);
// The promotion chain of f.
ChainInP trajectory(const Poset& P, const LinearExtension& f);

// Word parity as a permutation of element ids (even = false).
bool extension_is_odd(const LinearExtension& f);

// Dense indexing of L(P) in lexicographic order, for turning operators into
// permutations.
class ExtensionIndex {
 public:
  // Keeps a pointer to P, which must outlive the index.
  explicit ExtensionIndex(const Poset& P, std::size_t cap = kDefaultExtensionCap);
  explicit ExtensionIndex(Poset&&, std::size_t = kDefaultExtensionCap) = delete;

  const Poset& poset() const { return *P_; }
  std::size_t size() const { return exts_.size(); }
  const LinearExtension& operator[](std::size_t k) const { return exts_[k]; }
  const std::vector<LinearExtension>& all() const { return exts_; }
  // Throws PreconditionError for a word outside L(P).
  std::size_t index_of(const LinearExtension& f) const;

  // The permutation k -> index_of(op(ext[k])), computed in parallel.
  template <typename Op>
  std::vector<std::size_t> permutation(Op op) const;

 private:
  const Poset* P_;
  std::vector<LinearExtension> exts_;
  std::unordered_map<LinearExtension, std::size_t, LinearExtensionHash> index_;
};

using IndexPerm = std::vector<std::size_t>;

// (a then b): k -> b[a[k]], matching right actions.
IndexPerm compose(const IndexPerm& a, const IndexPerm& b);
IndexPerm perm_power(const IndexPerm& a, const BigInt& e);
bool is_identity(const IndexPerm& a);
// Sorted cycle lengths.
std::vector<std::size_t> cycle_type(const IndexPerm& a);
// lcm of the cycle lengths.
BigInt perm_order(const IndexPerm& a);
// Order of the group generated by two involutions.
BigInt dihedral_group_order(const IndexPerm& a, const IndexPerm& b);

enum class OrbitOperator { Promotion, Evacuation, DualEvacuation, PromotionPowerP };

struct OrbitReport {
  std::string op;
  std::size_t extensions = 0;
  // (cycle length, multiplicity), ascending.
  std::vector<std::pair<std::size_t, std::size_t>> cycles;
  BigInt order;
};

OrbitReport orbit_structure(const ExtensionIndex& L, OrbitOperator op);
std::string operator_name(OrbitOperator op);

// Order of the group generated by evacuation and dual evacuation.
BigInt dihedral_order(const ExtensionIndex& L);

// The permutations of L(P) used across the verification suites.
struct OperatorTable {
  IndexPerm promote;
  IndexPerm dual_promote;
  IndexPerm evacuate;
  IndexPerm dual_evacuate;
};
OperatorTable operator_table(const ExtensionIndex& L);

template <typename Op>
std::vector<std::size_t> ExtensionIndex::permutation(Op op) const {
  std::vector<std::size_t> out(exts_.size());
  parallel_for(exts_.size(), [&](std::size_t k) { out[k] = index_of(op(exts_[k])); });
  return out;
}

}  // namespace lindex
