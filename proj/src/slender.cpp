#include "lindex/slender.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>

#include "lindex/error.hpp"
#include "lindex/parallel.hpp"

namespace lindex {

GradedPoset GradedPoset::from_poset(Poset P) {
  GradedPoset Q;
  const auto mins = P.minimal_elements();
  const auto maxs = P.maximal_elements();
  if (mins.size() != 1 || maxs.size() != 1) {
    throw PreconditionError("graded poset needs a unique minimum and maximum");
  }
  Q.bottom_ = mins.front();
  Q.top_ = maxs.front();
  Q.rank_.assign(static_cast<std::size_t>(P.size()), -1);
  Q.rank_[static_cast<std::size_t>(Q.bottom_)] = 0;
  std::deque<int> queue{Q.bottom_};
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    const int next = Q.rank_of(s) + 1;
    for (int t : P.upper_covers(s)) {
      int& r = Q.rank_[static_cast<std::size_t>(t)];
      if (r < 0) {
        r = next;
        queue.push_back(t);
      } else if (r != next) {
        throw PreconditionError("poset is not graded: element " + std::to_string(t) +
                                " is reached at ranks " + std::to_string(r) + " and " +
                                std::to_string(next));
      }
    }
  }
  Q.P_ = std::move(P);
  return Q;
}

std::vector<int> GradedPoset::middles(int a, int b) const {
  std::vector<int> out;
  const auto& down = P_.lower_covers(b);
  for (int x : P_.upper_covers(a)) {
    if (std::find(down.begin(), down.end(), x) != down.end()) out.push_back(x);
  }
  return out;
}

GradedPoset ideal_lattice_graded(const Poset& P) {
  return GradedPoset::from_poset(ideals_lattice(P).lattice);
}

GradedPoset boolean_lattice(int n) {
  if (n < 0 || n > 20) throw PreconditionError("boolean lattice rank must lie in 0..20");
  return ideal_lattice_graded(Poset::from_covers(n, {}));
}

bool is_maximal_chain(const GradedPoset& Q, const MaxChain& m) {
  if (static_cast<int>(m.size()) != Q.rank() + 1) return false;
  if (m.front() != Q.bottom() || m.back() != Q.top()) return false;
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i] < 0 || m[i] >= Q.size()) return false;
    const auto& up = Q.poset().upper_covers(m[i - 1]);
    if (std::find(up.begin(), up.end(), m[i]) == up.end()) return false;
  }
  return true;
}

std::vector<MaxChain> maximal_chains(const GradedPoset& Q, std::size_t cap) {
  std::vector<MaxChain> out;
  MaxChain cur{Q.bottom()};
  auto rec = [&](auto&& self) -> void {
    const int t = cur.back();
    if (t == Q.top()) {
      if (out.size() >= cap) {
        throw CapExceeded("graded poset has more than " + std::to_string(cap) + " maximal chains");
      }
      out.push_back(cur);
      return;
    }
    std::vector<int> up = Q.poset().upper_covers(t);
    std::sort(up.begin(), up.end());
    for (int u : up) {
      cur.push_back(u);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

namespace {

// Number of middles of every rank-2 interval [a, b], keyed by (a, b).
std::map<std::pair<int, int>, int> rank_two_census(const GradedPoset& Q) {
  std::map<std::pair<int, int>, int> count;
  for (int a = 0; a < Q.size(); ++a) {
    for (int x : Q.poset().upper_covers(a)) {
      for (int b : Q.poset().upper_covers(x)) ++count[{a, b}];
    }
  }
  return count;
}

}  // namespace

bool is_slender(const GradedPoset& Q) {
  for (const auto& [ab, c] : rank_two_census(Q)) {
    if (c > 2) return false;
  }
  return true;
}

MaxChain tau_chain(const GradedPoset& Q, const MaxChain& m, int i) {
  if (i < 1 || i >= static_cast<int>(m.size()) - 1) {
    throw PreconditionError("tau_" + std::to_string(i) + " outside 1.." + std::to_string(m.size() - 2));
  }
  const auto k = static_cast<std::size_t>(i);
  const auto mid = Q.middles(m[k - 1], m[k + 1]);
  if (mid.size() > 2) {
    throw PreconditionError("interval [" + std::to_string(m[k - 1]) + ", " + std::to_string(m[k + 1]) +
                            "] has " + std::to_string(mid.size() + 2) + " elements; poset is not slender");
  }
  if (mid.size() < 2) return m;
  MaxChain out = m;
  out[k] = mid[0] == m[k] ? mid[1] : mid[0];
  return out;
}

MaxChain apply_chain_taus(const GradedPoset& Q, MaxChain m, const std::vector<int>& word) {
  for (int i : word) m = tau_chain(Q, m, i);
  return m;
}

MaxChain promote_chain(const GradedPoset& Q, const MaxChain& m) {
  return apply_chain_taus(Q, m, delta_word(Q.rank()));
}

MaxChain evacuate_chain(const GradedPoset& Q, const MaxChain& m) {
  return apply_chain_taus(Q, m, gamma_word(Q.rank()));
}

MaxChain dual_evacuate_chain(const GradedPoset& Q, const MaxChain& m) {
  return apply_chain_taus(Q, m, gamma_star_word(Q.rank()));
}

ChainIndex::ChainIndex(const GradedPoset& Q, std::size_t cap) : Q_(&Q), chains_(maximal_chains(Q, cap)) {
  for (std::size_t k = 0; k < chains_.size(); ++k) index_.emplace(chains_[k], k);
}

std::size_t ChainIndex::index_of(const MaxChain& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw PreconditionError("not a maximal chain of the poset");
  return it->second;
}

IndexPerm ChainIndex::tau_word_perm(const std::vector<int>& word) const {
  IndexPerm out(chains_.size());
  parallel_for(chains_.size(), [&](std::size_t k) { out[k] = index_of(apply_chain_taus(*Q_, chains_[k], word)); });
  return out;
}

BigInt dual_domino_chains(const GradedPoset& Q) {
  const int n = Q.rank();
  std::vector<BigInt> ways(static_cast<std::size_t>(Q.size()));
  if (n % 2 == 1) {
    for (int a : Q.poset().upper_covers(Q.bottom())) ways[static_cast<std::size_t>(a)] = 1;
  } else {
    ways[static_cast<std::size_t>(Q.bottom())] = 1;
  }
  std::vector<int> order(static_cast<std::size_t>(Q.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return Q.rank_of(a) < Q.rank_of(b); });
  for (int t : order) {
    if (ways[static_cast<std::size_t>(t)] == 0) continue;
    std::set<int> above;
    for (int x : Q.poset().upper_covers(t)) {
      for (int b : Q.poset().upper_covers(x)) above.insert(b);
    }
    for (int b : above) {
      if (Q.middles(t, b).size() == 1) ways[static_cast<std::size_t>(b)] += ways[static_cast<std::size_t>(t)];
    }
  }
  return ways[static_cast<std::size_t>(Q.top())];
}

std::size_t self_evacuating_chains(const GradedPoset& Q, std::size_t cap) {
  const ChainIndex C(Q, cap);
  const IndexPerm g = C.tau_word_perm(gamma_word(Q.rank()));
  std::size_t fixed = 0;
  for (std::size_t k = 0; k < g.size(); ++k) fixed += g[k] == k;
  return fixed;
}

SlenderReport slender_report(const GradedPoset& Q, std::size_t cap) {
  SlenderReport r;
  r.rank = Q.rank();
  r.slender = true;
  for (const auto& [ab, c] : rank_two_census(Q)) {
    if (c == 1) {
      ++r.chain_intervals;
    } else if (c == 2) {
      ++r.square_intervals;
    } else {
      r.slender = false;
    }
  }
  if (!r.slender) return r;
  const ChainIndex C(Q, cap);
  const IndexPerm pr = C.tau_word_perm(delta_word(r.rank));
  const IndexPerm ev = C.tau_word_perm(gamma_word(r.rank));
  const IndexPerm dev = C.tau_word_perm(gamma_star_word(r.rank));
  r.chains = C.size();
  r.dual_domino = dual_domino_chains(Q);
  for (std::size_t k = 0; k < ev.size(); ++k) r.self_evacuating += ev[k] == k;
  r.promotion_order = perm_order(pr);
  r.dihedral_order = dihedral_group_order(ev, dev);
  r.involutions_ok = is_identity(compose(ev, ev)) && is_identity(compose(dev, dev));
  r.power_ok = perm_power(pr, BigInt(r.rank)) == compose(ev, dev);
  return r;
}

LinearExtension extension_from_chain(const IdealLattice& J, const MaxChain& m) {
  std::vector<int> word;
  for (std::size_t i = 1; i < m.size(); ++i) {
    const ElemMask diff = J.ideals[static_cast<std::size_t>(m[i])].members &
                          ~J.ideals[static_cast<std::size_t>(m[i - 1])].members;
    if (std::popcount(diff) != 1) throw PreconditionError("chain step does not add exactly one element");
    word.push_back(std::countr_zero(diff));
  }
  return LinearExtension(std::move(word));
}

MaxChain chain_from_extension(const IdealLattice& J, const LinearExtension& f) {
  auto key = [](const Ideal& I) { return std::pair(std::popcount(I.members), I.members); };
  MaxChain m;
  Ideal cur;
  auto locate = [&] {
    auto it = std::lower_bound(J.ideals.begin(), J.ideals.end(), cur,
                               [&](const Ideal& a, const Ideal& b) { return key(a) < key(b); });
    if (it == J.ideals.end() || *it != cur) throw PreconditionError("word is not a linear extension");
    m.push_back(static_cast<int>(it - J.ideals.begin()));
  };
  locate();
  for (int t : f.word()) {
    cur.members |= ElemMask{1} << t;
    locate();
  }
  return m;
}

// ---------------------------------------------------------------------------

std::string SignedPerm::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s;
}

SignedPerm parse_signed_perm(std::string_view text) {
  SignedPerm w;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
    if (ec != std::errc() || ptr != text.data() + end) {
      throw ParseError("bad signed permutation '" + std::string(text) + "'");
    }
    w.a.push_back(v);
    pos = end + 1;
  }
  std::vector<char> seen(w.a.size() + 1, 0);
  for (int v : w.a) {
    const auto u = static_cast<std::size_t>(v < 0 ? -v : v);
    if (u < 1 || u > w.a.size() || seen[u]) {
      throw ParseError("bad signed permutation '" + std::string(text) + "'");
    }
    seen[u] = 1;
  }
  return w;
}

std::vector<SignedPerm> all_signed_perms(int n) {
  std::vector<SignedPerm> out;
  for (const Perm& u : all_perms(n)) {
    for (unsigned bars = 0; bars < (1U << n); ++bars) {
      SignedPerm w{u.one_line()};
      for (int i = 0; i < n; ++i) {
        if ((bars >> i) & 1U) w.a[static_cast<std::size_t>(i)] = -w.a[static_cast<std::size_t>(i)];
      }
      out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::uint32_t vertex_bit(int v) {
  const int u = v < 0 ? -v : v;
  return std::uint32_t{1} << (2 * (u - 1) + (v < 0 ? 1 : 0));
}

int vertex_of_bit(int b) { return (b % 2 == 0) ? b / 2 + 1 : -(b / 2 + 1); }

}  // namespace

MaxChain CrossPolytope::chain_of(const SignedPerm& w) const {
  if (w.n() != n) throw PreconditionError("signed permutation has the wrong length");
  MaxChain m{Q.bottom()};
  std::uint32_t face = 0;
  for (int v : w.a) {
    face |= vertex_bit(v);
    auto it = by_face_.find(face);
    if (it == by_face_.end()) throw PreconditionError("not a signed permutation");
    m.push_back(it->second);
  }
  m.push_back(Q.top());
  return m;
}

SignedPerm CrossPolytope::signed_of(const MaxChain& m) const {
  if (static_cast<int>(m.size()) != n + 2) throw PreconditionError("chain has the wrong length");
  SignedPerm w;
  for (int i = 1; i <= n; ++i) {
    const std::uint32_t diff =
        faces[static_cast<std::size_t>(m[static_cast<std::size_t>(i)])] &
        ~faces[static_cast<std::size_t>(m[static_cast<std::size_t>(i - 1)])];
    w.a.push_back(vertex_of_bit(std::countr_zero(diff)));
  }
  return w;
}

CrossPolytope cross_polytope(int n) {
  if (n < 1 || n > kMaxCrossPolytopeDim) {
    throw PreconditionError("cross-polytope dimension must lie in 1.." + std::to_string(kMaxCrossPolytopeDim));
  }
  CrossPolytope C;
  C.n = n;
  // Each vertex pair contributes nothing, v, or its bar.
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::uint32_t face = 0;
    int c = code;
    for (int i = 0; i < n; ++i, c /= 3) {
      if (c % 3) face |= std::uint32_t{1} << (2 * i + (c % 3 - 1));
    }
    C.faces.push_back(face);
  }
  std::sort(C.faces.begin(), C.faces.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
  });
  const std::uint32_t top = (std::uint32_t{1} << (2 * n)) - 1;
  C.faces.push_back(top);
  for (std::size_t k = 0; k < C.faces.size(); ++k) C.by_face_.emplace(C.faces[k], static_cast<int>(k));

  std::vector<Cover> covers;
  const int top_id = static_cast<int>(C.faces.size()) - 1;
  for (int k = 0; k < top_id; ++k) {
    const std::uint32_t f = C.faces[static_cast<std::size_t>(k)];
    if (std::popcount(f) == n) {
      covers.emplace_back(k, top_id);
      continue;
    }
    for (int i = 0; i < n; ++i) {
      const std::uint32_t pair = std::uint32_t{3} << (2 * i);
      if (f & pair) continue;
      for (int side = 0; side < 2; ++side) {
        covers.emplace_back(k, C.by_face_.at(f | (std::uint32_t{1} << (2 * i + side))));
      }
    }
  }
  std::sort(covers.begin(), covers.end());
  C.Q = GradedPoset::from_poset(Poset::from_hasse(top_id + 1, std::move(covers)));
  return C;
}

SignedPerm signed_delta(const SignedPerm& w) {
  SignedPerm r;
  if (w.a.empty()) return r;
  r.a.assign(w.a.begin() + 1, w.a.end());
  r.a.push_back(-w.a.front());
  return r;
}

SignedPerm signed_gamma(const SignedPerm& w) {
  SignedPerm r;
  if (w.a.empty()) return r;
  r.a.push_back(-w.a.front());
  r.a.insert(r.a.end(), w.a.rbegin(), w.a.rend() - 1);
  return r;
}

SignedPerm signed_gamma_star(const SignedPerm& w) {
  SignedPerm r;
  for (auto it = w.a.rbegin(); it != w.a.rend(); ++it) r.a.push_back(-*it);
  return r;
}

SignedPerm signed_deltapow(const SignedPerm& w) {
  SignedPerm r;
  if (w.a.empty()) return r;
  for (std::size_t i = 1; i < w.a.size(); ++i) r.a.push_back(-w.a[i]);
  r.a.push_back(w.a.front());
  return r;
}

CrossPolytopeReport cross_polytope_report(int n) {
  const CrossPolytope C = cross_polytope(n);
  const ChainIndex idx(C.Q);
  const int rank = C.Q.rank();
  const IndexPerm pr = idx.tau_word_perm(delta_word(rank));
  const IndexPerm ev = idx.tau_word_perm(gamma_word(rank));
  const IndexPerm dev = idx.tau_word_perm(gamma_star_word(rank));
  const IndexPerm prpow = perm_power(pr, BigInt(rank));

  CrossPolytopeReport r;
  r.n = n;
  r.chains = idx.size();
  r.delta_ok = r.gamma_ok = r.gamma_star_ok = r.deltapow_ok = true;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const SignedPerm w = C.signed_of(idx[k]);
    r.delta_ok = r.delta_ok && idx.index_of(C.chain_of(signed_delta(w))) == pr[k];
    r.gamma_ok = r.gamma_ok && idx.index_of(C.chain_of(signed_gamma(w))) == ev[k];
    r.gamma_star_ok = r.gamma_star_ok && idx.index_of(C.chain_of(signed_gamma_star(w))) == dev[k];
    r.deltapow_ok = r.deltapow_ok && idx.index_of(C.chain_of(signed_deltapow(w))) == prpow[k];
  }
  r.gamma_gamma_star_order = perm_order(compose(ev, dev));
  r.dihedral_order = dihedral_group_order(ev, dev);
  r.expected_dihedral_order = BigInt(n % 2 ? 2 * n : 4 * n);
  return r;
}

// ---------------------------------------------------------------------------

ChainVector ChainVector::basis(const MaxChain& m) {
  ChainVector v;
  v.terms_.emplace(m, Rat(1));
  return v;
}

Rat ChainVector::coeff(const MaxChain& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void ChainVector::add_term(const MaxChain& m, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

ChainVector& ChainVector::operator+=(const ChainVector& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ChainVector& ChainVector::operator-=(const ChainVector& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ChainVector& ChainVector::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::vector<MaxChain> neighbors(const GradedPoset& Q, const MaxChain& m, int i) {
  if (i < 1 || i >= static_cast<int>(m.size()) - 1) {
    throw PreconditionError("tau_" + std::to_string(i) + " outside 1.." + std::to_string(m.size() - 2));
  }
  const auto k = static_cast<std::size_t>(i);
  std::vector<MaxChain> out;
  for (int x : Q.middles(m[k - 1], m[k + 1])) {
    if (x == m[k]) continue;
    out.push_back(m);
    out.back()[k] = x;
  }
  return out;
}

ChainVector linear_tau(const GradedPoset& Q, const ChainVector& v, int i) {
  ChainVector out;
  for (const auto& [m, c] : v.terms()) {
    const auto nb = neighbors(Q, m, i);
    if (nb.empty()) {
      out.add_term(m, c);
      continue;
    }
    const Rat q(static_cast<long>(nb.size()));
    out.add_term(m, c * (q - 1) / (q + 1));
    const Rat off = -2 * c / (q + 1);
    for (const auto& m2 : nb) out.add_term(m2, off);
  }
  return out;
}

ChainVector neighbor_sum(const GradedPoset& Q, const ChainVector& v, int i) {
  ChainVector out;
  for (const auto& [m, c] : v.terms()) {
    for (const auto& m2 : neighbors(Q, m, i)) out.add_term(m2, c);
  }
  return out;
}

ChainVector evacuate_chains(const GradedPoset& Q, const ChainVector& v) {
  ChainVector out = v;
  for (int i : gamma_word(Q.rank())) out = linear_tau(Q, out, i);
  return out;
}

ChainVector promote_chains(const GradedPoset& Q, const ChainVector& v) {
  ChainVector out = v;
  for (int i : delta_word(Q.rank())) out = linear_tau(Q, out, i);
  return out;
}

EvacuationSigns evacuation_signs(const GradedPoset& Q, std::size_t cap) {
  EvacuationSigns r;
  for (const MaxChain& m : maximal_chains(Q, cap)) {
    ++r.chains;
    const ChainVector v = evacuate_chains(Q, ChainVector::basis(m));
    if (v.terms().size() != 1) continue;
    const auto& [chain, c] = *v.terms().begin();
    if (chain != evacuate_chain(Q, m) || abs(c) != 1) continue;
    ++r.matched;
    r.negative += sgn(c) < 0;
  }
  return r;
}

// ---------------------------------------------------------------------------

bool subspace_lattice_supported(int n, int q) {
  return n >= 1 && ((q == 2 && n <= 4) || (q == 3 && n <= 3));
}

namespace {

struct FqSpace {
  int n;
  int q;
  int size;  // q^n

  int digit(int v, int i) const {
    for (int k = 0; k < i; ++k) v /= q;
    return v % q;
  }
  int combine(int u, int v, int c) const {  // u + c v
    int out = 0;
    int place = 1;
    for (int i = 0; i < n; ++i, u /= q, v /= q, place *= q) out += ((u % q + c * (v % q)) % q) * place;
    return out;
  }
  std::uint64_t span_with(std::uint64_t S, int v) const {
    std::uint64_t T = 0;
    for (int s = 0; s < size; ++s) {
      if (!((S >> s) & 1U)) continue;
      for (int c = 0; c < q; ++c) T |= std::uint64_t{1} << combine(s, v, c);
    }
    return T;
  }
  int dim(std::uint64_t S) const {
    int d = 0;
    for (int c = std::popcount(S); c > 1; c /= q) ++d;
    return d;
  }
};

}  // namespace

SubspaceLattice subspace_lattice(int n, int q) {
  if (!subspace_lattice_supported(n, q)) {
    throw CapExceeded("subspace lattice supports q = 2 with n <= 4 and q = 3 with n <= 3");
  }
  FqSpace F{n, q, 1};
  for (int i = 0; i < n; ++i) F.size *= q;

  std::vector<std::vector<std::uint64_t>> levels{{std::uint64_t{1}}};
  std::set<std::pair<std::uint64_t, std::uint64_t>> cover_masks;
  for (int d = 0; d < n; ++d) {
    std::set<std::uint64_t> next;
    for (std::uint64_t S : levels.back()) {
      for (int v = 0; v < F.size; ++v) {
        if ((S >> v) & 1U) continue;
        const std::uint64_t T = F.span_with(S, v);
        next.insert(T);
        cover_masks.emplace(S, T);
      }
    }
    levels.emplace_back(next.begin(), next.end());
  }

  SubspaceLattice L;
  L.n = n;
  L.q = q;
  std::map<std::uint64_t, int> id;
  for (const auto& level : levels) {
    for (std::uint64_t S : level) {
      id.emplace(S, static_cast<int>(L.members.size()));
      L.members.push_back(S);
    }
  }
  std::vector<Cover> covers;
  for (const auto& [S, T] : cover_masks) covers.emplace_back(id.at(S), id.at(T));
  std::sort(covers.begin(), covers.end());
  L.Q = GradedPoset::from_poset(Poset::from_hasse(static_cast<int>(L.members.size()), std::move(covers)));

  std::uint64_t S = 1;
  L.standard_flag.push_back(id.at(S));
  int unit = 1;
  for (int i = 0; i < n; ++i, unit *= q) {
    S = F.span_with(S, unit);
    L.standard_flag.push_back(id.at(S));
  }
  return L;
}

std::vector<std::vector<int>> echelon_basis(const SubspaceLattice& L, int k) {
  FqSpace F{L.n, L.q, 1};
  for (int i = 0; i < L.n; ++i) F.size *= L.q;
  std::vector<std::vector<int>> rows;
  const std::uint64_t S = L.members.at(static_cast<std::size_t>(k));
  for (int v = 0; v < F.size; ++v) {
    if (!((S >> v) & 1U)) continue;
    std::vector<int> row;
    for (int i = 0; i < L.n; ++i) row.push_back(F.digit(v, i));
    rows.push_back(std::move(row));
  }
  auto inv = [&](int a) {
    for (int b = 1; b < L.q; ++b) {
      if (a * b % L.q == 1) return b;
    }
    return 1;
  };
  std::size_t rank = 0;
  for (int col = 0; col < L.n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const int s = inv(rows[rank][static_cast<std::size_t>(col)]);
    for (int& x : rows[rank]) x = x * s % L.q;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const int c = rows[r][static_cast<std::size_t>(col)];
      if (r == rank || c == 0) continue;
      for (int j = 0; j < L.n; ++j) {
        auto& x = rows[r][static_cast<std::size_t>(j)];
        x = ((x - c * rows[rank][static_cast<std::size_t>(j)]) % L.q + L.q) % L.q;
      }
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::string flag_to_string(const SubspaceLattice& L, const MaxChain& m) {
  std::string s;
  for (std::size_t i = 1; i + 1 < m.size(); ++i) {
    if (i > 1) s += " < ";
    s += '<';
    bool first = true;
    for (const auto& row : echelon_basis(L, m[i])) {
      if (!first) s += ',';
      first = false;
      for (int x : row) s += static_cast<char>('0' + x);
    }
    s += '>';
  }
  return s;
}

Perm bruhat_cell(const SubspaceLattice& L, const MaxChain& m, const MaxChain& m0) {
  const FqSpace F{L.n, L.q, 0};
  auto r = [&](std::size_t i, std::size_t j) {
    return F.dim(L.members[static_cast<std::size_t>(m[i])] & L.members[static_cast<std::size_t>(m0[j])]);
  };
  std::vector<int> pi;
  for (std::size_t i = 1; i <= static_cast<std::size_t>(L.n); ++i) {
    std::size_t j = 1;
    while (j <= static_cast<std::size_t>(L.n) && r(i, j) - r(i - 1, j) != 1) ++j;
    pi.push_back(static_cast<int>(j));
  }
  return Perm(pi);
}

HeckeConsistency hecke_consistency(int n, int q, int hecke_cap) {
  const SubspaceLattice L = subspace_lattice(n, q);
  const HeckeElt E = evacuation_element(n, hecke_cap);
  const std::vector<MaxChain> chains = maximal_chains(L.Q);

  HeckeConsistency rep;
  rep.n = n;
  rep.q = q;
  rep.flags = chains.size();
  rep.local_q_uniform = true;
  for (const auto& m : chains) {
    for (int i = 1; i < n; ++i) {
      rep.local_q_uniform = rep.local_q_uniform && static_cast<int>(neighbors(L.Q, m, i).size()) == q;
    }
  }

  const ChainVector v = evacuate_chains(L.Q, ChainVector::basis(L.standard_flag));
  std::map<Perm, std::vector<const MaxChain*>> cells;
  for (const auto& m : chains) cells[bruhat_cell(L, m, L.standard_flag)].push_back(&m);

  rep.ok = true;
  for (const Perm& w : all_perms(n)) {
    CellRow row;
    row.w = w;
    row.expected = E.coeff(w).eval(Rat(q));
    const auto it = cells.find(w);
    if (it != cells.end()) {
      row.size = it->second.size();
      row.coefficient = v.coeff(*it->second.front());
      row.constant = true;
      for (const MaxChain* m : it->second) {
        const Rat c = v.coeff(*m);
        if (c != row.coefficient) row.constant = false;
        if ((c != row.expected) && rep.witness.empty()) {
          rep.witness = flag_to_string(L, *m) + " in cell " + w.to_string() + " has coefficient " +
                        c.get_str() + ", expected " + row.expected.get_str();
        }
      }
    }
    row.ok = row.size > 0 && row.constant && row.coefficient == row.expected;
    rep.ok = rep.ok && row.ok;
    rep.cells.push_back(std::move(row));
  }
  rep.ok = rep.ok && rep.local_q_uniform;
  return rep;
}

}  // namespace lindex
