#include "lindex/promotion.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lindex/error.hpp"

namespace lindex {

namespace {

// Promotes the prefix word[0..k) in place (an order ideal, so covers inside it
// are covers of P).  With `dual` set, the order is reversed: this is promotion
// on the dual of the prefix.  Returns the slide chain from the start element.
ChainInP slide_prefix(const Poset& P, std::vector<int>& word, std::size_t k, bool dual) {
  const int p = P.size();
  std::vector<int> lab(static_cast<std::size_t>(p), -1);  // -1 marks inactive
  for (std::size_t i = 0; i < k; ++i) lab[static_cast<std::size_t>(word[i])] = static_cast<int>(i);
  int t = word[0];
  ChainInP chain{t};
  for (;;) {
    const auto& ups = dual ? P.lower_covers(t) : P.upper_covers(t);
    int next = -1;
    for (int u : ups) {
      const int l = lab[static_cast<std::size_t>(u)];
      if (l >= 0 && (next < 0 || l < lab[static_cast<std::size_t>(next)])) next = u;
    }
    if (next < 0) break;
    lab[static_cast<std::size_t>(t)] = lab[static_cast<std::size_t>(next)];
    t = next;
    chain.push_back(t);
  }
  lab[static_cast<std::size_t>(t)] = static_cast<int>(k);
  const std::vector<int> old(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k));
  for (int s : old) word[static_cast<std::size_t>(lab[static_cast<std::size_t>(s)] - 1)] = s;
  return chain;
}

void check_index(const Poset& P, int i) {
  if (i < 1 || i > P.size() - 1) {
    throw PreconditionError("tau index " + std::to_string(i) + " outside 1.." + std::to_string(P.size() - 1));
  }
}

}  // namespace

LinearExtension tau(const Poset& P, const LinearExtension& f, int i) {
  check_index(P, i);
  LinearExtension g = f;
  const auto a = static_cast<std::size_t>(i - 1);
  if (!P.comparable(f[a], f[a + 1])) g.swap_positions(a, a + 1);
  return g;
}

LinearExtension apply_taus(const Poset& P, LinearExtension f, const std::vector<int>& word) {
  for (int i : word) {
    check_index(P, i);
    const auto a = static_cast<std::size_t>(i - 1);
    if (!P.comparable(f[a], f[a + 1])) f.swap_positions(a, a + 1);
  }
  return f;
}

std::vector<int> delta_word(int p) {
  std::vector<int> w(static_cast<std::size_t>(std::max(p - 1, 0)));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

std::vector<int> gamma_word(int p) {
  std::vector<int> w;
  for (int k = p - 1; k >= 1; --k) {
    for (int i = 1; i <= k; ++i) w.push_back(i);
  }
  return w;
}

std::vector<int> gamma_star_word(int p) {
  std::vector<int> w;
  for (int low = 1; low <= p - 1; ++low) {
    for (int i = p - 1; i >= low; --i) w.push_back(i);
  }
  return w;
}

Promotion promote_slide(const Poset& P, const LinearExtension& f) {
  if (P.size() == 0) return {f, {}};
  std::vector<int> w = f.vec();
  ChainInP chain = slide_prefix(P, w, w.size(), false);
  return {LinearExtension(std::move(w)), std::move(chain)};
}

std::vector<std::vector<int>> block_factorization(const Poset& P, const LinearExtension& f) {
  std::vector<std::vector<int>> blocks;
  std::size_t i = 0;
  while (i < f.size()) {
    std::vector<int> block{f[i]};
    std::size_t j = i + 1;
    while (j < f.size() && !P.less(f[i], f[j])) block.push_back(f[j++]);
    blocks.push_back(std::move(block));
    i = j;
  }
  return blocks;
}

LinearExtension promote_word(const Poset& P, const LinearExtension& f) {
  return LinearExtension(rotate_factors(block_factorization(P, f)));
}

LinearExtension dual_promote(const Poset& P, const LinearExtension& f) {
  if (P.size() == 0) return f;
  std::vector<int> w(f.word().rbegin(), f.word().rend());
  slide_prefix(P, w, w.size(), true);
  std::reverse(w.begin(), w.end());
  return LinearExtension(std::move(w));
}

LinearExtension evacuate(const Poset& P, const LinearExtension& f) {
  std::vector<int> w = f.vec();
  for (std::size_t k = w.size(); k >= 2; --k) slide_prefix(P, w, k, false);
  return LinearExtension(std::move(w));
}

LinearExtension evacuate_word(const Poset& P, const LinearExtension& f) {
  return apply_taus(P, f, gamma_word(P.size()));
}

LinearExtension dual_evacuate(const Poset& P, const LinearExtension& f) {
  std::vector<int> w(f.word().rbegin(), f.word().rend());
  for (std::size_t k = w.size(); k >= 2; --k) slide_prefix(P, w, k, true);
  std::reverse(w.begin(), w.end());
  return LinearExtension(std::move(w));
}

LinearExtension dual_evacuate_word(const Poset& P, const LinearExtension& f) {
  return apply_taus(P, f, gamma_star_word(P.size()));
}

ChainInP principal_chain(const Poset& P, const LinearExtension& f) {
  const int p = P.size();
  if (p == 0) return {};
  int holder = f[static_cast<std::size_t>(p - 1)];
  ChainInP visited{holder};
  LinearExtension g = f;
  for (int step = 1; step < p; ++step) {
    Promotion pr = promote_slide(P, g);
    // A label on the promotion chain (other than the removed one) slides one
    // step down the chain.
    auto it = std::find(pr.chain.begin(), pr.chain.end(), holder);
    if (it != pr.chain.end() && it != pr.chain.begin()) {
      holder = *(it - 1);
      visited.push_back(holder);
    }
    g = std::move(pr.result);
  }
  std::reverse(visited.begin(), visited.end());
  return visited;
}

ChainInP principal_chain_from_words(const Poset& P, const LinearExtension& f) {
  const int p = P.size();
  std::vector<char> in(static_cast<std::size_t>(p), 0);
  LinearExtension g = f;
  for (int i = 0; i < p; ++i) {
    in[static_cast<std::size_t>(g[static_cast<std::size_t>(p - i - 1)])] = 1;
    g = promote_word(P, g);
  }
  ChainInP out;
  for (int t : f.word()) {
    if (in[static_cast<std::size_t>(t)]) out.push_back(t);
  }
  return out;
}

ChainInP trajectory(const Poset& P, const LinearExtension& f) { return promote_slide(P, f).chain; }

bool extension_is_odd(const LinearExtension& f) {
  // Parity via cycle decomposition: n - #cycles.
  const std::size_t n = f.size();
  std::vector<char> seen(n, 0);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(f[j])) seen[j] = 1;
  }
  return (n - cycles) % 2 == 1;
}

ExtensionIndex::ExtensionIndex(const Poset& P, std::size_t cap)
    : P_(&P), exts_(linear_extensions(P, cap)) {
  index_.reserve(exts_.size());
  for (std::size_t k = 0; k < exts_.size(); ++k) index_.emplace(exts_[k], k);
}

std::size_t ExtensionIndex::index_of(const LinearExtension& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) throw PreconditionError("word is not a linear extension of the indexed poset");
  return it->second;
}

IndexPerm compose(const IndexPerm& a, const IndexPerm& b) {
  IndexPerm out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = b[a[k]];
  return out;
}

IndexPerm perm_power(const IndexPerm& a, const BigInt& e) {
  if (e < 0) throw PreconditionError("negative permutation power");
  IndexPerm result(a.size());
  std::iota(result.begin(), result.end(), std::size_t{0});
  IndexPerm base = a;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t b = 0; b < bits; ++b) {
    if (mpz_tstbit(e.get_mpz_t(), b)) result = compose(result, base);
    base = compose(base, base);
  }
  return result;
}

bool is_identity(const IndexPerm& a) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != k) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<std::size_t>> cycles_of(const IndexPerm& a) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> seen(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = 1;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace

std::vector<std::size_t> cycle_type(const IndexPerm& a) {
  std::vector<std::size_t> out;
  for (const auto& c : cycles_of(a)) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

BigInt perm_order(const IndexPerm& a) {
  BigInt m = 1;
  for (std::size_t len : cycle_type(a)) {
    BigInt l = static_cast<unsigned long>(len);
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), l.get_mpz_t());
  }
  return m;
}

BigInt dihedral_group_order(const IndexPerm& a, const IndexPerm& b) {
  const IndexPerm r = compose(a, b);
  const BigInt m = perm_order(r);
  // The group is <r> when a is a power of r, and <r> with a coset otherwise.
  // a = r^k needs a to shift every r-cycle by the same k (mod its length).
  std::vector<std::size_t> pos(a.size());
  std::vector<std::size_t> cycle_id(a.size());
  const auto cycles = cycles_of(r);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (std::size_t j = 0; j < cycles[c].size(); ++j) {
      pos[cycles[c][j]] = j;
      cycle_id[cycles[c][j]] = c;
    }
  }
  BigInt residue = 0;
  BigInt modulus = 1;
  bool in_cyclic = true;
  for (std::size_t c = 0; c < cycles.size() && in_cyclic; ++c) {
    const auto& cyc = cycles[c];
    const std::size_t len = cyc.size();
    if (cycle_id[a[cyc[0]]] != c) {
      in_cyclic = false;
      break;
    }
    const std::size_t k = pos[a[cyc[0]]];
    for (std::size_t j = 0; j < len; ++j) {
      if (a[cyc[j]] != cyc[(j + k) % len]) {
        in_cyclic = false;
        break;
      }
    }
    if (!in_cyclic) break;
    // Merge k (mod len) into residue (mod modulus).
    BigInt L = static_cast<unsigned long>(len);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), modulus.get_mpz_t(), L.get_mpz_t());
    BigInt diff = BigInt(static_cast<unsigned long>(k)) - residue;
    if (diff % g != 0) {
      in_cyclic = false;
      break;
    }
    // residue + modulus * t == k (mod L)  =>  t == diff/g * inv(modulus/g) (mod L/g)
    BigInt mg = modulus / g, Lg = L / g, inv;
    if (Lg == 1) {
      inv = 0;
    } else {
      mpz_invert(inv.get_mpz_t(), mg.get_mpz_t(), Lg.get_mpz_t());
    }
    BigInt t = (diff / g) * inv;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), Lg.get_mpz_t());
    residue += modulus * t;
    modulus *= Lg;
    mpz_fdiv_r(residue.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t());
  }
  return in_cyclic ? m : 2 * m;
}

std::string operator_name(OrbitOperator op) {
  switch (op) {
    case OrbitOperator::Promotion:
      return "promotion";
    case OrbitOperator::Evacuation:
      return "evacuation";
    case OrbitOperator::DualEvacuation:
      return "dual-evacuation";
    case OrbitOperator::PromotionPowerP:
      return "promotion^p";
  }
  return "?";
}

OrbitReport orbit_structure(const ExtensionIndex& L, OrbitOperator op) {
  const Poset& P = L.poset();
  IndexPerm perm;
  switch (op) {
    case OrbitOperator::Promotion:
      perm = L.permutation([&](const LinearExtension& f) { return promote_word(P, f); });
      break;
    case OrbitOperator::Evacuation:
      perm = L.permutation([&](const LinearExtension& f) { return evacuate(P, f); });
      break;
    case OrbitOperator::DualEvacuation:
      perm = L.permutation([&](const LinearExtension& f) { return dual_evacuate(P, f); });
      break;
    case OrbitOperator::PromotionPowerP:
      perm = perm_power(L.permutation([&](const LinearExtension& f) { return promote_word(P, f); }),
                        BigInt(P.size()));
      break;
  }
  OrbitReport rep;
  rep.op = operator_name(op);
  rep.extensions = L.size();
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t len : cycle_type(perm)) ++counts[len];
  rep.cycles.assign(counts.begin(), counts.end());
  rep.order = perm_order(perm);
  return rep;
}

OperatorTable operator_table(const ExtensionIndex& L) {
  const Poset& P = L.poset();
  OperatorTable t;
  t.promote = L.permutation([&](const LinearExtension& f) { return promote_word(P, f); });
  t.dual_promote = L.permutation([&](const LinearExtension& f) { return dual_promote(P, f); });
  t.evacuate = L.permutation([&](const LinearExtension& f) { return evacuate(P, f); });
  t.dual_evacuate = L.permutation([&](const LinearExtension& f) { return dual_evacuate(P, f); });
  return t;
}

BigInt dihedral_order(const ExtensionIndex& L) {
  const OperatorTable t = operator_table(L);
  return dihedral_group_order(t.evacuate, t.dual_evacuate);
}

}  // namespace lindex
