#pragma once

// The Hecke algebra H_n(q) over Q(q) in the T_w basis.
//
// Permutations are one-line words of 1..n.  Products compose as functions,
// (uv)(i) = u(v(i)), so u s_k swaps positions k, k+1 of u and s_k u swaps the
// values k, k+1.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lindex/qpoly.hpp"

namespace lindex {

inline constexpr int kDefaultHeckeCap = 7;

class Perm {
 public:
  Perm() = default;
  // Throws PreconditionError unless `one_line` is a permutation of 1..n.
  explicit Perm(const std::vector<int>& one_line);
  static Perm identity(int n);
  static Perm longest(int n);
  static Perm simple(int n, int k);

  int n() const { return static_cast<int>(w_.size()); }
  // w(i) for 1-based i.
  int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  std::vector<int> one_line() const { return {w_.begin(), w_.end()}; }

  int length() const;
  int cycle_count() const;
  // One-line word read backwards.
  Perm reversal() const;
  Perm inverse() const;
  // u s_k and s_k u.
  Perm swap_positions(int k) const;
  Perm swap_values(int k) const;
  bool has_descent_at(int k) const { return (*this)(k) > (*this)(k + 1); }
  // Lexicographically first reduced word.
  std::vector<int> reduced_word() const;

  friend Perm operator*(const Perm& u, const Perm& v);
  friend auto operator<=>(const Perm&, const Perm&) = default;

  // "2413" when n <= 9, otherwise comma separated.
  std::string to_string() const;

 private:
  std::vector<std::uint8_t> w_;
};

// "2413" or "2,4,1,3".
Perm parse_perm(std::string_view text);
// All of S_n in lexicographic order.
std::vector<Perm> all_perms(int n);

class HeckeElt {
 public:
  explicit HeckeElt(int n = 1) : n_(n) {}
  static HeckeElt one(int n);
  static HeckeElt basis(const Perm& w);

  int n() const { return n_; }
  const std::map<Perm, RatFunc>& terms() const { return terms_; }
  RatFunc coeff(const Perm& w) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Perm& w, const RatFunc& c);
  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  HeckeElt& operator*=(const RatFunc& c);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(HeckeElt a, const RatFunc& c) { return a *= c; }
  friend HeckeElt operator*(const RatFunc& c, HeckeElt a) { return a *= c; }
  friend HeckeElt operator*(const HeckeElt& a, const HeckeElt& b);
  friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // h T_i and T_i h.
  HeckeElt mul_gen_right(int i) const;
  HeckeElt mul_gen_left(int i) const;
  // h E_i, without forming E_i.
  HeckeElt mul_e_right(int i) const;

 private:
  void check_gen(int i) const;

  int n_;
  std::map<Perm, RatFunc> terms_;  // no stored zeros
};

// T_w as the product of generators along reduced_word(w), or along `word`
// (which must then be reduced for the result to be T_w).
HeckeElt t_w(const Perm& w);
HeckeElt t_word(int n, const std::vector<int>& word);
// E_i = ((q - 1) - 2 T_i) / (q + 1).
HeckeElt e_i(int n, int i);

// E_1...E_{n-1} . E_1...E_{n-2} ... E_1 E_2 . E_1 expanded.  Throws
// CapExceeded when n > cap.
HeckeElt evacuation_element(int n, int cap = kDefaultHeckeCap);

// <T_u, T_v> = q^{l(u)} [u = v].
RatFunc scalar_product(const HeckeElt& g, const HeckeElt& h);

struct CidCheck {
  int n = 0;
  RatFunc computed;
  RatFunc expected;
  bool ok = false;
};
CidCheck check_thm_cid(int n, int cap = kDefaultHeckeCap);
CidCheck check_thm_cid(const HeckeElt& evac);

struct DivisibilityRow {
  Perm w;
  int bound = 0;            // n - kappa(reversal(w))
  int order = -1;           // (q-1)-adic order of c_w; -1 for c_w = 0
  bool divisible = false;
  bool tight = false;       // order == bound
};
std::vector<DivisibilityRow> check_thm_divisibility(int n, int cap = kDefaultHeckeCap);
std::vector<DivisibilityRow> check_thm_divisibility(const HeckeElt& evac);

}  // namespace lindex
