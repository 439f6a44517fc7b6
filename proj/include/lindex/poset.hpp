#pragma once

// Finite posets over dense element ids 0..p-1, linear extensions as words,
// order ideals, J(P), Young-diagram shapes and their posets.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "lindex/qpoly.hpp"

namespace lindex {

using Cover = std::pair<int, int>;  // (s, t) means s is covered by t

inline constexpr std::size_t kDefaultExtensionCap = 2'000'000;
inline constexpr std::size_t kDefaultIdealCap = std::size_t{1} << 20;

class Poset {
 public:
  Poset() = default;

  // Builds the poset generated by `covers` (pairs need not be irredundant;
  // the transitive reduction is kept).  Throws PreconditionError for ids out
  // of range and CycleError when the relation has a directed cycle.
  static Poset from_covers(int p, std::span<const Cover> covers);
  // Trusts `covers` to already be an acyclic, irredundant cover relation.
  // Used by the lattice builders, where checking would dominate the cost.
  static Poset from_hasse(int p, std::vector<Cover> covers);

  int size() const { return p_; }
  // Sorted, irredundant cover pairs.
  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int s) const { return up_[static_cast<std::size_t>(s)]; }
  const std::vector<int>& lower_covers(int t) const { return down_[static_cast<std::size_t>(t)]; }

  bool leq(int s, int t) const;
  bool less(int s, int t) const { return s != t && leq(s, t); }
  bool comparable(int s, int t) const { return leq(s, t) || leq(t, s); }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  // Subposet on `elems`, with elems[i] relabelled i.
  Poset induced(std::span<const int> elems) const;
  // P - t, remaining elements relabelled in increasing id order.
  Poset without(int t) const;
  // Covers reversed.
  Poset dual() const;

  // True when s < t implies s < t as integers.
  bool is_natural() const;
  // True when the cover digraph is a single chain.
  bool is_chain() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.p_ == b.p_ && a.covers_ == b.covers_;
  }

 private:
  void build_relation();

  int p_ = 0;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  // upset_[s][t] == (s <= t); only filled when p is small enough to store.
  std::vector<boost::dynamic_bitset<>> upset_;
};

// A word u_1 ... u_p listing every element once, with every prefix an order
// ideal; position i (0-based) holds the element labelled i + 1.
class LinearExtension {
 public:
  LinearExtension() = default;
  // Unchecked; use checked() for untrusted input.
  explicit LinearExtension(std::vector<int> word) : word_(std::move(word)) {}
  static LinearExtension checked(const Poset& P, std::vector<int> word);

  std::span<const int> word() const { return word_; }
  const std::vector<int>& vec() const { return word_; }
  std::size_t size() const { return word_.size(); }
  int operator[](std::size_t i) const { return word_[i]; }
  // labels()[t] = f(t), 1-based.
  std::vector<int> labels() const;

  void swap_positions(std::size_t i, std::size_t j) { std::swap(word_[i], word_[j]); }

  auto operator<=>(const LinearExtension&) const = default;

 private:
  std::vector<int> word_;
};

struct LinearExtensionHash {
  std::size_t operator()(const LinearExtension& f) const noexcept;
};

bool is_linear_extension(const Poset& P, std::span<const int> word);

// Lexicographic enumeration of L(P).
class ExtensionEnumerator {
 public:
  explicit ExtensionEnumerator(const Poset& P);
  // Fills `out` with the next extension; false when exhausted.
  bool next(LinearExtension& out);

 private:
  bool descend(std::size_t depth);
  bool available(int t) const;

  const Poset* P_;
  std::vector<int> word_;
  std::vector<char> used_;
  bool started_ = false;
  bool done_ = false;
};

// All extensions in lexicographic order; throws CapExceeded past `cap`.
std::vector<LinearExtension> linear_extensions(const Poset& P,
                                               std::size_t cap = kDefaultExtensionCap);
void for_each_linear_extension(const Poset& P,
                               const std::function<void(const LinearExtension&)>& fn);
// e(P) by dynamic programming over order ideals (needs p <= 64).
BigInt count_extensions(const Poset& P);

// f* as an extension of P*: the reversed word.
LinearExtension conjugate_extension(const LinearExtension& f);

// Order ideals as bit masks over element ids (p <= 64).
using ElemMask = std::uint64_t;

struct Ideal {
  ElemMask members = 0;

  std::vector<int> elements() const;
  int size() const;
  bool contains(int t) const { return (members >> t) & 1U; }
  auto operator<=>(const Ideal&) const = default;
};

bool is_ideal(const Poset& P, ElemMask members);

struct IdealLattice {
  Poset lattice;              // element k is ideals[k]
  std::vector<Ideal> ideals;  // sorted by (size, mask); ideals[0] is empty
};

// J(P) ordered by inclusion.  Throws CapExceeded past `cap` ideals.
IdealLattice ideals_lattice(const Poset& P, std::size_t cap = kDefaultIdealCap);

// True iff A is an antichain meeting every maximal chain of P.
bool antichain_cuts_all_chains(const Poset& P, std::span<const int> A);

struct NaturalForm {
  Poset poset;
  std::vector<int> old_to_new;
  std::vector<int> new_to_old;
};

// Relabels along the lexicographically first linear extension, so the
// identity map is returned for posets that are already natural.
NaturalForm natural_relabel(const Poset& P);

// Partition shapes, ordinary or shifted (row r indented r - 1).
struct Shape {
  std::vector<int> rows;
  bool shifted = false;

  // Throws PreconditionError unless rows are positive and weakly
  // (ordinary) or strictly (shifted) decreasing.
  void validate() const;
  int size() const;
  // 1-based (row, col) cells in row-major order; cell k is poset element k.
  std::vector<std::pair<int, int>> cells() const;
  // Element id of cell (row, col), or -1 when absent.
  int cell_index(int row, int col) const;

  bool is_rectangle() const;
  bool is_staircase() const;
  std::string to_string() const;
  friend bool operator==(const Shape&, const Shape&) = default;
};

Poset shape_poset(const Shape& s);

// "shape:3,3,2" or "shifted:4,3,1".
Shape parse_shape(std::string_view text);

}  // namespace lindex
