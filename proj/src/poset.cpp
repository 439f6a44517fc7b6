#include "lindex/poset.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "lindex/error.hpp"

namespace lindex {

namespace {

// Beyond this size leq() falls back to graph search instead of a p x p table.
constexpr int kDenseRelationLimit = 1 << 13;

// `stuck[v]` marks vertices Kahn's algorithm never emitted; each has a stuck
// predecessor, so walking predecessors must revisit a vertex.
std::vector<int> find_cycle(int p, const std::vector<std::vector<int>>& succ,
                            const std::vector<char>& stuck) {
  std::vector<int> pred(static_cast<std::size_t>(p), -1);
  for (int s = 0; s < p; ++s) {
    if (!stuck[static_cast<std::size_t>(s)]) continue;
    for (int t : succ[static_cast<std::size_t>(s)]) {
      if (stuck[static_cast<std::size_t>(t)]) pred[static_cast<std::size_t>(t)] = s;
    }
  }
  int v = 0;
  while (!stuck[static_cast<std::size_t>(v)]) ++v;
  std::vector<int> seen_at(static_cast<std::size_t>(p), -1);
  std::vector<int> walk;
  while (seen_at[static_cast<std::size_t>(v)] < 0) {
    seen_at[static_cast<std::size_t>(v)] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = pred[static_cast<std::size_t>(v)];
  }
  std::vector<int> cycle(walk.begin() + seen_at[static_cast<std::size_t>(v)], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace

Poset Poset::from_covers(int p, std::span<const Cover> covers) {
  if (p < 0) throw PreconditionError("negative element count");
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(p));
  for (const auto& [s, t] : covers) {
    if (s < 0 || t < 0 || s >= p || t >= p) {
      throw PreconditionError("cover pair (" + std::to_string(s) + "," + std::to_string(t) +
                              ") references an id outside 0.." + std::to_string(p - 1));
    }
    if (s == t) throw CycleError("self-loop on element " + std::to_string(s), {s});
    succ[static_cast<std::size_t>(s)].push_back(t);
  }
  for (auto& v : succ) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  // Kahn's algorithm; leftover vertices lie on or behind a cycle.
  std::vector<int> indeg(static_cast<std::size_t>(p), 0);
  for (const auto& v : succ) {
    for (int t : v) ++indeg[static_cast<std::size_t>(t)];
  }
  std::deque<int> ready;
  for (int s = 0; s < p; ++s) {
    if (indeg[static_cast<std::size_t>(s)] == 0) ready.push_back(s);
  }
  std::vector<int> topo;
  while (!ready.empty()) {
    int s = ready.front();
    ready.pop_front();
    topo.push_back(s);
    for (int t : succ[static_cast<std::size_t>(s)]) {
      if (--indeg[static_cast<std::size_t>(t)] == 0) ready.push_back(t);
    }
  }
  if (static_cast<int>(topo.size()) != p) {
    std::vector<char> stuck(static_cast<std::size_t>(p), 1);
    for (int s : topo) stuck[static_cast<std::size_t>(s)] = 0;
    std::vector<int> cyc = find_cycle(p, succ, stuck);
    std::string msg = "cover relation has a cycle:";
    for (int v : cyc) msg += " " + std::to_string(v);
    throw CycleError(msg, std::move(cyc));
  }

  // Reachability over the given edges, then drop edges implied by longer paths.
  std::vector<boost::dynamic_bitset<>> reach(static_cast<std::size_t>(p),
                                             boost::dynamic_bitset<>(static_cast<std::size_t>(p)));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    auto& r = reach[static_cast<std::size_t>(*it)];
    r.set(static_cast<std::size_t>(*it));
    for (int t : succ[static_cast<std::size_t>(*it)]) r |= reach[static_cast<std::size_t>(t)];
  }
  std::vector<Cover> reduced;
  for (int s = 0; s < p; ++s) {
    const auto& out = succ[static_cast<std::size_t>(s)];
    for (int t : out) {
      bool implied = false;
      for (int u : out) {
        if (u != t && reach[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(t))) {
          implied = true;
          break;
        }
      }
      if (!implied) reduced.emplace_back(s, t);
    }
  }
  Poset P = from_hasse(p, std::move(reduced));
  return P;
}

Poset Poset::from_hasse(int p, std::vector<Cover> covers) {
  Poset P;
  P.p_ = p;
  std::sort(covers.begin(), covers.end());
  P.covers_ = std::move(covers);
  P.up_.assign(static_cast<std::size_t>(p), {});
  P.down_.assign(static_cast<std::size_t>(p), {});
  for (const auto& [s, t] : P.covers_) {
    P.up_[static_cast<std::size_t>(s)].push_back(t);
    P.down_[static_cast<std::size_t>(t)].push_back(s);
  }
  for (auto& v : P.down_) std::sort(v.begin(), v.end());
  P.build_relation();
  return P;
}

void Poset::build_relation() {
  upset_.clear();
  if (p_ > kDenseRelationLimit) return;
  // Process in reverse topological order (sinks first).
  std::vector<int> outdeg(static_cast<std::size_t>(p_));
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(p_));
  for (int s = 0; s < p_; ++s) {
    outdeg[static_cast<std::size_t>(s)] = static_cast<int>(up_[static_cast<std::size_t>(s)].size());
    if (outdeg[static_cast<std::size_t>(s)] == 0) order.push_back(s);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int s : down_[static_cast<std::size_t>(order[i])]) {
      if (--outdeg[static_cast<std::size_t>(s)] == 0) order.push_back(s);
    }
  }
  upset_.assign(static_cast<std::size_t>(p_), boost::dynamic_bitset<>(static_cast<std::size_t>(p_)));
  for (int s : order) {
    auto& r = upset_[static_cast<std::size_t>(s)];
    r.set(static_cast<std::size_t>(s));
    for (int t : up_[static_cast<std::size_t>(s)]) r |= upset_[static_cast<std::size_t>(t)];
  }
}

bool Poset::leq(int s, int t) const {
  if (s == t) return true;
  if (!upset_.empty()) return upset_[static_cast<std::size_t>(s)].test(static_cast<std::size_t>(t));
  std::vector<char> seen(static_cast<std::size_t>(p_), 0);
  std::vector<int> stack{s};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : up_[static_cast<std::size_t>(v)]) {
      if (w == t) return true;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int t = 0; t < p_; ++t) {
    if (down_[static_cast<std::size_t>(t)].empty()) out.push_back(t);
  }
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int t = 0; t < p_; ++t) {
    if (up_[static_cast<std::size_t>(t)].empty()) out.push_back(t);
  }
  return out;
}

Poset Poset::induced(std::span<const int> elems) const {
  const int k = static_cast<int>(elems.size());
  std::vector<Cover> covers;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (!less(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)])) continue;
      bool between = false;
      for (int m = 0; m < k && !between; ++m) {
        between = m != i && m != j && less(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(m)]) &&
                  less(elems[static_cast<std::size_t>(m)], elems[static_cast<std::size_t>(j)]);
      }
      if (!between) covers.emplace_back(i, j);
    }
  }
  return from_hasse(k, std::move(covers));
}

Poset Poset::without(int t) const {
  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(p_));
  for (int s = 0; s < p_; ++s) {
    if (s != t) keep.push_back(s);
  }
  return induced(keep);
}

Poset Poset::dual() const {
  std::vector<Cover> rev;
  rev.reserve(covers_.size());
  for (const auto& [s, t] : covers_) rev.emplace_back(t, s);
  return from_hasse(p_, std::move(rev));
}

bool Poset::is_natural() const {
  return std::all_of(covers_.begin(), covers_.end(), [](const Cover& c) { return c.first < c.second; });
}

bool Poset::is_chain() const {
  for (int s = 0; s < p_; ++s) {
    for (int t = s + 1; t < p_; ++t) {
      if (!comparable(s, t)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Linear extensions

LinearExtension LinearExtension::checked(const Poset& P, std::vector<int> word) {
  if (!is_linear_extension(P, word)) {
    std::string w;
    for (int x : word) w += (w.empty() ? "" : ",") + std::to_string(x);
    throw PreconditionError("[" + w + "] is not a linear extension of the given poset");
  }
  return LinearExtension(std::move(word));
}

std::vector<int> LinearExtension::labels() const {
  std::vector<int> lab(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) lab[static_cast<std::size_t>(word_[i])] = static_cast<int>(i) + 1;
  return lab;
}

std::size_t LinearExtensionHash::operator()(const LinearExtension& f) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int x : f.word()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool is_linear_extension(const Poset& P, std::span<const int> word) {
  const int p = P.size();
  if (static_cast<int>(word.size()) != p) return false;
  std::vector<char> placed(static_cast<std::size_t>(p), 0);
  for (int t : word) {
    if (t < 0 || t >= p || placed[static_cast<std::size_t>(t)]) return false;
    for (int s : P.lower_covers(t)) {
      if (!placed[static_cast<std::size_t>(s)]) return false;
    }
    placed[static_cast<std::size_t>(t)] = 1;
  }
  return true;
}

ExtensionEnumerator::ExtensionEnumerator(const Poset& P)
    : P_(&P), word_(static_cast<std::size_t>(P.size()), -1), used_(static_cast<std::size_t>(P.size()), 0) {}

bool ExtensionEnumerator::available(int t) const {
  if (used_[static_cast<std::size_t>(t)]) return false;
  for (int s : P_->lower_covers(t)) {
    if (!used_[static_cast<std::size_t>(s)]) return false;
  }
  return true;
}

bool ExtensionEnumerator::descend(std::size_t depth) {
  const int p = P_->size();
  for (std::size_t k = depth; k < static_cast<std::size_t>(p); ++k) {
    int pick = -1;
    for (int t = 0; t < p; ++t) {
      if (available(t)) {
        pick = t;
        break;
      }
    }
    if (pick < 0) return false;
    word_[k] = pick;
    used_[static_cast<std::size_t>(pick)] = 1;
  }
  return true;
}

bool ExtensionEnumerator::next(LinearExtension& out) {
  if (done_) return false;
  const int p = P_->size();
  if (!started_) {
    started_ = true;
    if (!descend(0)) {
      done_ = true;
      return false;
    }
    out = LinearExtension(word_);
    return true;
  }
  for (int depth = p - 1; depth >= 0; --depth) {
    const int cur = word_[static_cast<std::size_t>(depth)];
    used_[static_cast<std::size_t>(cur)] = 0;
    for (int t = cur + 1; t < p; ++t) {
      if (available(t)) {
        word_[static_cast<std::size_t>(depth)] = t;
        used_[static_cast<std::size_t>(t)] = 1;
        descend(static_cast<std::size_t>(depth) + 1);
        out = LinearExtension(word_);
        return true;
      }
    }
  }
  done_ = true;
  return false;
}

std::vector<LinearExtension> linear_extensions(const Poset& P, std::size_t cap) {
  std::vector<LinearExtension> out;
  ExtensionEnumerator en(P);
  LinearExtension f;
  while (en.next(f)) {
    if (out.size() >= cap) {
      throw CapExceeded("poset has more than " + std::to_string(cap) + " linear extensions");
    }
    out.push_back(f);
  }
  return out;
}

void for_each_linear_extension(const Poset& P,
                               const std::function<void(const LinearExtension&)>& fn) {
  ExtensionEnumerator en(P);
  LinearExtension f;
  while (en.next(f)) fn(f);
}

namespace {

std::vector<ElemMask> lower_cover_masks(const Poset& P) {
  if (P.size() > 64) throw PreconditionError("ideal computations support at most 64 elements");
  std::vector<ElemMask> below(static_cast<std::size_t>(P.size()), 0);
  for (const auto& [s, t] : P.covers()) below[static_cast<std::size_t>(t)] |= ElemMask{1} << s;
  return below;
}

ElemMask full_mask(int p) { return p == 64 ? ~ElemMask{0} : (ElemMask{1} << p) - 1; }

// Elements outside `ideal` whose lower covers all lie inside it.
ElemMask addable(const std::vector<ElemMask>& below, ElemMask ideal) {
  ElemMask out = 0;
  for (std::size_t t = 0; t < below.size(); ++t) {
    if (!((ideal >> t) & 1U) && (below[t] & ~ideal) == 0) out |= ElemMask{1} << t;
  }
  return out;
}

BigInt count_from(const std::vector<ElemMask>& below, ElemMask ideal, ElemMask full,
                  std::unordered_map<ElemMask, BigInt>& memo) {
  if (ideal == full) return 1;
  if (auto it = memo.find(ideal); it != memo.end()) return it->second;
  BigInt total = 0;
  for (ElemMask avail = addable(below, ideal); avail; avail &= avail - 1) {
    ElemMask bit = avail & (~avail + 1);
    total += count_from(below, ideal | bit, full, memo);
  }
  memo.emplace(ideal, total);
  return total;
}

}  // namespace

BigInt count_extensions(const Poset& P) {
  auto below = lower_cover_masks(P);
  std::unordered_map<ElemMask, BigInt> memo;
  return count_from(below, 0, full_mask(P.size()), memo);
}

LinearExtension conjugate_extension(const LinearExtension& f) {
  std::vector<int> w(f.word().rbegin(), f.word().rend());
  return LinearExtension(std::move(w));
}

// ---------------------------------------------------------------------------
// Ideals

std::vector<int> Ideal::elements() const {
  std::vector<int> out;
  for (ElemMask m = members; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

int Ideal::size() const { return std::popcount(members); }

bool is_ideal(const Poset& P, ElemMask members) {
  auto below = lower_cover_masks(P);
  for (ElemMask m = members; m; m &= m - 1) {
    if (below[static_cast<std::size_t>(std::countr_zero(m))] & ~members) return false;
  }
  return true;
}

IdealLattice ideals_lattice(const Poset& P, std::size_t cap) {
  auto below = lower_cover_masks(P);
  std::unordered_set<ElemMask> seen{0};
  std::vector<ElemMask> frontier{0};
  while (!frontier.empty()) {
    std::vector<ElemMask> next;
    for (ElemMask I : frontier) {
      for (ElemMask avail = addable(below, I); avail; avail &= avail - 1) {
        ElemMask J = I | (avail & (~avail + 1));
        if (seen.insert(J).second) {
          if (seen.size() > cap) {
            throw CapExceeded("J(P) has more than " + std::to_string(cap) + " order ideals");
          }
          next.push_back(J);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<ElemMask> all(seen.begin(), seen.end());
  std::sort(all.begin(), all.end(), [](ElemMask a, ElemMask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::unordered_map<ElemMask, int> index;
  index.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], static_cast<int>(i));
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (ElemMask avail = addable(below, all[i]); avail; avail &= avail - 1) {
      covers.emplace_back(static_cast<int>(i), index.at(all[i] | (avail & (~avail + 1))));
    }
  }
  IdealLattice out;
  out.lattice = Poset::from_hasse(static_cast<int>(all.size()), std::move(covers));
  out.ideals.reserve(all.size());
  for (ElemMask m : all) out.ideals.push_back(Ideal{m});
  return out;
}

bool antichain_cuts_all_chains(const Poset& P, std::span<const int> A) {
  const int p = P.size();
  std::vector<char> inA(static_cast<std::size_t>(p), 0);
  for (int a : A) {
    if (a < 0 || a >= p) throw PreconditionError("antichain element out of range");
    inA[static_cast<std::size_t>(a)] = 1;
  }
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = i + 1; j < A.size(); ++j) {
      if (P.comparable(A[i], A[j])) return false;
    }
  }
  // A maximal chain avoiding A is a saturated min-to-max path outside A.
  std::vector<char> reached(static_cast<std::size_t>(p), 0);
  std::vector<int> stack;
  for (int m : P.minimal_elements()) {
    if (!inA[static_cast<std::size_t>(m)]) {
      reached[static_cast<std::size_t>(m)] = 1;
      stack.push_back(m);
    }
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (P.upper_covers(v).empty()) return false;
    for (int w : P.upper_covers(v)) {
      if (!inA[static_cast<std::size_t>(w)] && !reached[static_cast<std::size_t>(w)]) {
        reached[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return true;
}

NaturalForm natural_relabel(const Poset& P) {
  NaturalForm nf;
  ExtensionEnumerator en(P);
  LinearExtension first;
  en.next(first);
  nf.new_to_old = first.vec();
  nf.old_to_new.assign(static_cast<std::size_t>(P.size()), 0);
  for (std::size_t i = 0; i < nf.new_to_old.size(); ++i) {
    nf.old_to_new[static_cast<std::size_t>(nf.new_to_old[i])] = static_cast<int>(i);
  }
  std::vector<Cover> covers;
  for (const auto& [s, t] : P.covers()) {
    covers.emplace_back(nf.old_to_new[static_cast<std::size_t>(s)], nf.old_to_new[static_cast<std::size_t>(t)]);
  }
  nf.poset = Poset::from_hasse(P.size(), std::move(covers));
  return nf;
}

// ---------------------------------------------------------------------------
// Shapes

void Shape::validate() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] <= 0) throw PreconditionError("shape rows must be positive");
    if (i > 0) {
      if (shifted && rows[i] >= rows[i - 1]) {
        throw PreconditionError("shifted shape rows must be strictly decreasing");
      }
      if (!shifted && rows[i] > rows[i - 1]) {
        throw PreconditionError("shape rows must be weakly decreasing");
      }
    }
  }
}

int Shape::size() const { return std::accumulate(rows.begin(), rows.end(), 0); }

std::vector<std::pair<int, int>> Shape::cells() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int row = static_cast<int>(r) + 1;
    const int start = shifted ? row : 1;
    for (int k = 0; k < rows[r]; ++k) out.emplace_back(row, start + k);
  }
  return out;
}

int Shape::cell_index(int row, int col) const {
  if (row < 1 || row > static_cast<int>(rows.size())) return -1;
  const int start = shifted ? row : 1;
  const int len = rows[static_cast<std::size_t>(row - 1)];
  if (col < start || col >= start + len) return -1;
  int offset = 0;
  for (int r = 0; r < row - 1; ++r) offset += rows[static_cast<std::size_t>(r)];
  return offset + (col - start);
}

bool Shape::is_rectangle() const {
  return !shifted && !rows.empty() &&
         std::all_of(rows.begin(), rows.end(), [&](int r) { return r == rows.front(); });
}

bool Shape::is_staircase() const {
  if (shifted || rows.empty()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] != static_cast<int>(rows.size() - i)) return false;
  }
  return true;
}

std::string Shape::to_string() const {
  std::string s = shifted ? "shifted:" : "shape:";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(rows[i]);
  }
  return s;
}

Poset shape_poset(const Shape& s) {
  s.validate();
  std::vector<Cover> covers;
  const auto cells = s.cells();
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const auto [r, c] = cells[k];
    if (int right = s.cell_index(r, c + 1); right >= 0) covers.emplace_back(static_cast<int>(k), right);
    if (int down = s.cell_index(r + 1, c); down >= 0) covers.emplace_back(static_cast<int>(k), down);
  }
  return Poset::from_hasse(s.size(), std::move(covers));
}

namespace {

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("bad integer '" + std::string(tok) + "' in " + std::string(what));
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Shape parse_shape(std::string_view text) {
  Shape s;
  std::string_view body;
  if (text.starts_with("shape:")) {
    body = text.substr(6);
  } else if (text.starts_with("shifted:")) {
    s.shifted = true;
    body = text.substr(8);
  } else {
    throw ParseError("shape descriptor must start with 'shape:' or 'shifted:': " + std::string(text));
  }
  s.rows = parse_int_list(body, "shape");
  try {
    s.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return s;
}

}  // namespace lindex
