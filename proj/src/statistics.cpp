#include "lindex/statistics.hpp"

#include <algorithm>
#include <bit>

#include "lindex/error.hpp"
#include "lindex/promotion.hpp"

namespace lindex {

namespace {

void require_natural(const Poset& P) {
  if (!P.is_natural()) throw PreconditionError("descent statistics need a natural partial order");
}

template <typename Stat>
StatPoly stat_poly(const Poset& P, std::size_t cap, Stat stat) {
  StatPoly out;
  out.relabel = natural_relabel(P);
  const Poset& N = out.relabel.poset;
  std::vector<BigInt> coeffs;
  std::size_t seen = 0;
  for_each_linear_extension(N, [&](const LinearExtension& w) {
    if (++seen > cap) throw CapExceeded("poset has more than " + std::to_string(cap) + " linear extensions");
    const auto s = static_cast<std::size_t>(stat(N, w));
    if (coeffs.size() <= s) coeffs.resize(s + 1);
    coeffs[s] += 1;
  });
  out.poly = IntPoly(std::move(coeffs));
  return out;
}

}  // namespace

std::vector<int> descent_set(const Poset& P, const LinearExtension& w) {
  require_natural(P);
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i) + 1);
  }
  return d;
}

int comaj(const Poset& P, const LinearExtension& w) {
  const int p = static_cast<int>(w.size());
  int s = 0;
  for (int i : descent_set(P, w)) s += p - i;
  return s;
}

int maj(const Poset& P, const LinearExtension& w) {
  int s = 0;
  for (int i : descent_set(P, w)) s += i;
  return s;
}

StatPoly wprime_poly(const Poset& P, std::size_t cap) { return stat_poly(P, cap, comaj); }

StatPoly w_poly(const Poset& P, std::size_t cap) { return stat_poly(P, cap, maj); }

namespace {

struct DominoSearch {
  const Poset& P;
  std::vector<ElemMask> below;
  std::vector<int> steps;  // step sizes, in order
  std::vector<DominoTableau> out;
  std::vector<Ideal> current;

  bool addable(ElemMask I, int t) const {
    return !((I >> t) & 1U) && (below[static_cast<std::size_t>(t)] & ~I) == 0;
  }

  void run(std::size_t k, ElemMask I) {
    if (k == steps.size()) {
      out.push_back(DominoTableau{current});
      return;
    }
    const int p = P.size();
    for (int a = 0; a < p; ++a) {
      if (!addable(I, a)) continue;
      const ElemMask Ia = I | (ElemMask{1} << a);
      if (steps[k] == 1) {
        current.push_back(Ideal{Ia});
        run(k + 1, Ia);
        current.pop_back();
        continue;
      }
      for (int b : P.upper_covers(a)) {
        if (!addable(Ia, b)) continue;
        const ElemMask J = Ia | (ElemMask{1} << b);
        current.push_back(Ideal{J});
        run(k + 1, J);
        current.pop_back();
      }
    }
  }
};

std::vector<int> domino_steps(int p, DominoKind kind) {
  std::vector<int> steps(static_cast<std::size_t>(p / 2), 2);
  if (p % 2 == 1) {
    if (kind == DominoKind::Dual) {
      steps.insert(steps.begin(), 1);
    } else {
      steps.push_back(1);
    }
  }
  return steps;
}

}  // namespace

// A 2-chain difference {a, b} of consecutive ideals has b covering a: any
// element strictly between them would lie in the larger ideal too.
std::vector<DominoTableau> domino_tableaux(const Poset& P, DominoKind kind) {
  if (P.size() > 64) throw PreconditionError("domino tableaux support at most 64 elements");
  DominoSearch s{P, {}, domino_steps(P.size(), kind), {}, {Ideal{0}}};
  s.below.assign(static_cast<std::size_t>(P.size()), 0);
  for (const auto& [a, b] : P.covers()) s.below[static_cast<std::size_t>(b)] |= ElemMask{1} << a;
  s.run(0, 0);
  return std::move(s.out);
}

bool is_domino_extension(const Poset& P, const LinearExtension& w, DominoKind kind) {
  const int p = static_cast<int>(w.size());
  const int start = (kind == DominoKind::Dual) ? p % 2 : 0;
  for (int i = start; i + 1 < p; i += 2) {
    if (!P.less(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i + 1)])) return false;
  }
  return true;
}

std::vector<LinearExtension> domino_extensions(const Poset& P, DominoKind kind, std::size_t cap) {
  std::vector<LinearExtension> out;
  for (const auto& w : linear_extensions(P, cap)) {
    if (is_domino_extension(P, w, kind)) out.push_back(w);
  }
  return out;
}

LinearExtension domino_word(const Poset& P, const DominoTableau& T) {
  std::vector<int> w;
  for (std::size_t k = 1; k < T.ideals.size(); ++k) {
    std::vector<int> diff = Ideal{T.ideals[k].members & ~T.ideals[k - 1].members}.elements();
    if (diff.size() == 2 && P.less(diff[1], diff[0])) std::swap(diff[0], diff[1]);
    w.insert(w.end(), diff.begin(), diff.end());
  }
  return LinearExtension(std::move(w));
}

std::vector<LinearExtension> self_evacuating(const Poset& P, std::size_t cap) {
  std::vector<LinearExtension> out;
  for (const auto& f : linear_extensions(P, cap)) {
    if (evacuate(P, f) == f) out.push_back(f);
  }
  return out;
}

std::vector<int> domino_bijection_word(int p) {
  const int m = (p % 2 == 0) ? p - 1 : p - 2;
  std::vector<int> word;
  for (int k = 1; k <= m; k += 2) {
    for (int i = k; i >= 1; --i) word.push_back(i);
  }
  return word;
}

LinearExtension domino_to_selfevac(const Poset& P, const LinearExtension& w) {
  if (!is_linear_extension(P, w.word()) || !is_domino_extension(P, w, DominoKind::Dual)) {
    throw PreconditionError("word is not a dual domino linear extension");
  }
  return apply_taus(P, w, domino_bijection_word(P.size()));
}

ChainLengthData chain_length_data(const Poset& P) {
  const int p = P.size();
  ChainLengthData d;
  d.nu.assign(static_cast<std::size_t>(p), 0);
  d.uniform_parity.assign(static_cast<std::size_t>(p), true);
  // parity bits of saturated chains from a minimal element up to t
  std::vector<unsigned> par(static_cast<std::size_t>(p), 0);
  LinearExtension order;
  ExtensionEnumerator(P).next(order);
  for (int t : order.word()) {
    const auto ti = static_cast<std::size_t>(t);
    if (P.lower_covers(t).empty()) {
      par[ti] = 1U;
      continue;
    }
    for (int s : P.lower_covers(t)) {
      const auto si = static_cast<std::size_t>(s);
      // Shifting by one edge flips parity: swap the two bits.
      par[ti] |= ((par[si] & 1U) << 1) | ((par[si] >> 1) & 1U);
      d.nu[ti] = std::max(d.nu[ti], d.nu[si] + 1);
    }
  }
  for (int t = 0; t < p; ++t) {
    const auto ti = static_cast<std::size_t>(t);
    d.uniform_parity[ti] = std::popcount(par[ti]) == 1;
    if (P.upper_covers(t).empty()) d.maximal_parities |= par[ti];
  }
  return d;
}

SignBalance sign_balance_report(const Poset& P, std::size_t cap) {
  SignBalance r;
  std::size_t seen = 0;
  for_each_linear_extension(P, [&](const LinearExtension& f) {
    if (++seen > cap) throw CapExceeded("poset has more than " + std::to_string(cap) + " linear extensions");
    (extension_is_odd(f) ? r.odd : r.even) += 1;
  });
  r.balanced = r.odd == r.even;
  const int p = P.size();
  const ChainLengthData d = chain_length_data(P);
  const unsigned want = 1U << (p % 2);
  r.thm4a_applies = p > 0 && d.maximal_parities == want;
  r.uniform_ideals = std::all_of(d.uniform_parity.begin(), d.uniform_parity.end(), [](bool b) { return b; });
  for (int v : d.nu) r.gamma += v;
  const long binom = static_cast<long>(p) * (p - 1) / 2;
  const bool same = (binom - r.gamma) % 2 == 0;
  r.thm4b_applies = r.uniform_ideals && same;
  r.thm4b_corrected_applies = r.uniform_ideals && !same;
  return r;
}

}  // namespace lindex
