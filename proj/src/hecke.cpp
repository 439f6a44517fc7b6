#include "lindex/hecke.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "lindex/error.hpp"

namespace lindex {

Perm::Perm(const std::vector<int>& one_line) {
  const int n = static_cast<int>(one_line.size());
  if (n > 255) throw PreconditionError("permutations are limited to 255 letters");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : one_line) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw PreconditionError("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = 1;
    w_.push_back(static_cast<std::uint8_t>(v));
  }
}

Perm Perm::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Perm(w);
}

Perm Perm::longest(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Perm(w);
}

Perm Perm::simple(int n, int k) { return identity(n).swap_positions(k); }

int Perm::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    for (std::size_t j = i + 1; j < w_.size(); ++j) inv += w_[i] > w_[j];
  }
  return inv;
}

int Perm::cycle_count() const {
  std::vector<char> seen(w_.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = w_[j] - 1U) seen[j] = 1;
  }
  return cycles;
}

Perm Perm::reversal() const {
  Perm r = *this;
  std::reverse(r.w_.begin(), r.w_.end());
  return r;
}

Perm Perm::inverse() const {
  Perm r = *this;
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[w_[i] - 1U] = static_cast<std::uint8_t>(i + 1);
  return r;
}

Perm Perm::swap_positions(int k) const {
  if (k < 1 || k >= n()) throw PreconditionError("generator index out of range");
  Perm r = *this;
  std::swap(r.w_[static_cast<std::size_t>(k - 1)], r.w_[static_cast<std::size_t>(k)]);
  return r;
}

Perm Perm::swap_values(int k) const {
  if (k < 1 || k >= n()) throw PreconditionError("generator index out of range");
  Perm r = *this;
  for (auto& v : r.w_) {
    if (v == k) {
      v = static_cast<std::uint8_t>(k + 1);
    } else if (v == k + 1) {
      v = static_cast<std::uint8_t>(k);
    }
  }
  return r;
}

std::vector<int> Perm::reduced_word() const {
  // Peel right descents: w = (w s_k) s_k with l(w s_k) = l(w) - 1.
  std::vector<int> word;
  Perm u = *this;
  for (;;) {
    int k = 1;
    while (k < n() && !u.has_descent_at(k)) ++k;
    if (k >= n()) break;
    word.push_back(k);
    u = u.swap_positions(k);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Perm operator*(const Perm& u, const Perm& v) {
  if (u.n() != v.n()) throw PreconditionError("permutation sizes differ");
  Perm r = v;
  for (auto& x : r.w_) x = u.w_[x - 1U];
  return r;
}

std::string Perm::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_.size() > 9 && i) s += ',';
    s += std::to_string(w_[i]);
  }
  return s;
}

Perm parse_perm(std::string_view text) {
  std::vector<int> w;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError("bad permutation '" + std::string(text) + "'");
      w.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
      if (ec != std::errc() || ptr != text.data() + end) {
        throw ParseError("bad permutation '" + std::string(text) + "'");
      }
      w.push_back(v);
      pos = end + 1;
    }
  }
  try {
    return Perm(w);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// ---------------------------------------------------------------------------

HeckeElt HeckeElt::one(int n) { return basis(Perm::identity(n)); }

HeckeElt HeckeElt::basis(const Perm& w) {
  HeckeElt h(w.n());
  h.terms_.emplace(w, RatFunc(1));
  return h;
}

RatFunc HeckeElt::coeff(const Perm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc() : it->second;
}

void HeckeElt::add_term(const Perm& w, const RatFunc& c) {
  if (w.n() != n_) throw PreconditionError("permutation size does not match the algebra");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  if (o.n_ != n_) throw PreconditionError("Hecke elements of different rank");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  if (o.n_ != n_) throw PreconditionError("Hecke elements of different rank");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HeckeElt& HeckeElt::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

void HeckeElt::check_gen(int i) const {
  if (i < 1 || i >= n_) {
    throw PreconditionError("generator T_" + std::to_string(i) + " outside 1.." + std::to_string(n_ - 1));
  }
}

HeckeElt HeckeElt::mul_gen_right(int i) const {
  check_gen(i);
  const RatFunc q = RatFunc::q();
  const RatFunc qm1 = q - RatFunc(1);
  HeckeElt out(n_);
  for (const auto& [u, c] : terms_) {
    const Perm us = u.swap_positions(i);
    if (!u.has_descent_at(i)) {
      out.add_term(us, c);
    } else {
      out.add_term(us, c * q);
      out.add_term(u, c * qm1);
    }
  }
  return out;
}

HeckeElt HeckeElt::mul_gen_left(int i) const {
  check_gen(i);
  const RatFunc q = RatFunc::q();
  const RatFunc qm1 = q - RatFunc(1);
  HeckeElt out(n_);
  for (const auto& [u, c] : terms_) {
    const Perm su = u.swap_values(i);
    // l(s_i u) > l(u) iff i precedes i + 1 in u's word.
    if (u.inverse().has_descent_at(i)) {
      out.add_term(su, c * q);
      out.add_term(u, c * qm1);
    } else {
      out.add_term(su, c);
    }
  }
  return out;
}

HeckeElt HeckeElt::mul_e_right(int i) const {
  check_gen(i);
  const RatFunc q = RatFunc::q();
  const RatFunc qp1 = q + RatFunc(1);
  const RatFunc a = (q - RatFunc(1)) / qp1;  // (q-1)/(q+1)
  const RatFunc b = RatFunc(-2) / qp1;        // -2/(q+1)
  const RatFunc bq = b * q;                   // -2q/(q+1)
  HeckeElt out(n_);
  for (const auto& [u, c] : terms_) {
    const Perm us = u.swap_positions(i);
    if (!u.has_descent_at(i)) {
      out.add_term(u, c * a);
      out.add_term(us, c * b);
    } else {
      // (q-1)/(q+1) T_u - 2/(q+1) (q T_us + (q-1) T_u)
      out.add_term(u, -(c * a));
      out.add_term(us, c * bq);
    }
  }
  return out;
}

HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) {
  if (a.n() != b.n()) throw PreconditionError("Hecke elements of different rank");
  HeckeElt out(a.n());
  for (const auto& [v, c] : b.terms()) {
    HeckeElt part = a;
    for (int k : v.reduced_word()) part = part.mul_gen_right(k);
    part *= c;
    out += part;
  }
  return out;
}

HeckeElt t_word(int n, const std::vector<int>& word) {
  HeckeElt h = HeckeElt::one(n);
  for (int k : word) h = h.mul_gen_right(k);
  return h;
}

HeckeElt t_w(const Perm& w) { return t_word(w.n(), w.reduced_word()); }

HeckeElt e_i(int n, int i) {
  const RatFunc q = RatFunc::q();
  const RatFunc qp1 = q + RatFunc(1);
  HeckeElt h = HeckeElt::one(n) * ((q - RatFunc(1)) / qp1);
  h += HeckeElt::basis(Perm::simple(n, i)) * (RatFunc(-2) / qp1);
  return h;
}

HeckeElt evacuation_element(int n, int cap) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (n > cap) {
    throw CapExceeded("evacuation element for n = " + std::to_string(n) + " exceeds the cap n <= " +
                      std::to_string(cap));
  }
  HeckeElt h = HeckeElt::one(n);
  for (int top = n - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) h = h.mul_e_right(i);
  }
  return h;
}

RatFunc scalar_product(const HeckeElt& g, const HeckeElt& h) {
  if (g.n() != h.n()) throw PreconditionError("Hecke elements of different rank");
  const RatFunc q = RatFunc::q();
  RatFunc s;
  for (const auto& [w, c] : g.terms()) {
    auto it = h.terms().find(w);
    if (it != h.terms().end()) s += c * it->second * q.pow(w.length());
  }
  return s;
}

CidCheck check_thm_cid(const HeckeElt& evac) {
  CidCheck r;
  r.n = evac.n();
  const RatFunc q = RatFunc::q();
  r.computed = evac.coeff(Perm::identity(r.n));
  r.expected = ((q - RatFunc(1)) / (q + RatFunc(1))).pow(r.n / 2);
  r.ok = r.computed == r.expected;
  return r;
}

CidCheck check_thm_cid(int n, int cap) { return check_thm_cid(evacuation_element(n, cap)); }

std::vector<DivisibilityRow> check_thm_divisibility(const HeckeElt& evac) {
  std::vector<DivisibilityRow> rows;
  for (const Perm& w : all_perms(evac.n())) {
    DivisibilityRow r;
    r.w = w;
    r.bound = evac.n() - w.reversal().cycle_count();
    const RatFunc c = evac.coeff(w);
    r.order = c.order_at_one();
    r.divisible = c.divisible_by_qm1(r.bound);
    r.tight = r.order == r.bound;
    rows.push_back(r);
  }
  return rows;
}

std::vector<DivisibilityRow> check_thm_divisibility(int n, int cap) {
  return check_thm_divisibility(evacuation_element(n, cap));
}

}  // namespace lindex
