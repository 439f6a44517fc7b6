#include "lindex/sieve.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "lindex/error.hpp"
#include "lindex/promotion.hpp"

namespace lindex {

std::vector<int> hook_lengths(const Shape& s) {
  s.validate();
  if (s.shifted) throw PreconditionError("hook lengths are defined here for ordinary shapes only");
  std::vector<int> col_len;
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    for (int c = 0; c < s.rows[r]; ++c) {
      if (static_cast<int>(col_len.size()) <= c) col_len.push_back(0);
      ++col_len[static_cast<std::size_t>(c)];
    }
  }
  std::vector<int> h;
  for (const auto& [row, col] : s.cells()) {
    const int arm = s.rows[static_cast<std::size_t>(row - 1)] - col;
    const int leg = col_len[static_cast<std::size_t>(col - 1)] - row;
    h.push_back(arm + leg + 1);
  }
  return h;
}

LinearExtension tableau_from_rows(const Shape& s, const std::vector<std::vector<int>>& rows) {
  const int p = s.size();
  std::vector<int> word(static_cast<std::size_t>(p), -1);
  if (rows.size() != s.rows.size()) throw PreconditionError("filling has the wrong number of rows");
  int id = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != s.rows[r]) throw PreconditionError("filling row has the wrong length");
    for (int v : rows[r]) {
      if (v < 1 || v > p || word[static_cast<std::size_t>(v - 1)] >= 0) {
        throw PreconditionError("filling must use each of 1..p once");
      }
      word[static_cast<std::size_t>(v - 1)] = id++;
    }
  }
  return LinearExtension::checked(shape_poset(s), std::move(word));
}

std::vector<std::vector<int>> tableau_rows(const Shape& s, const LinearExtension& f) {
  const std::vector<int> lab = f.labels();
  std::vector<std::vector<int>> rows;
  int id = 0;
  for (int len : s.rows) {
    rows.emplace_back();
    for (int k = 0; k < len; ++k) rows.back().push_back(lab[static_cast<std::size_t>(id++)]);
  }
  return rows;
}

int maj_tableau(const Shape& s, const LinearExtension& f) {
  if (static_cast<int>(f.size()) != s.size()) throw PreconditionError("extension size does not match the shape");
  std::vector<int> row_of;
  for (const auto& cell : s.cells()) row_of.push_back(cell.first);
  int m = 0;
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (row_of[static_cast<std::size_t>(f[i])] > row_of[static_cast<std::size_t>(f[i - 1])]) {
      m += static_cast<int>(i);
    }
  }
  return m;
}

IntPoly F_poly_sum(const Shape& s, std::size_t cap) {
  const Poset P = shape_poset(s);
  std::vector<BigInt> c;
  std::size_t seen = 0;
  for_each_linear_extension(P, [&](const LinearExtension& f) {
    if (++seen > cap) throw CapExceeded("shape has more than " + std::to_string(cap) + " tableaux");
    const auto m = static_cast<std::size_t>(maj_tableau(s, f));
    if (c.size() <= m) c.resize(m + 1);
    c[m] += 1;
  });
  return IntPoly(std::move(c));
}

int b_statistic(const Shape& s) {
  int b = 0;
  for (std::size_t i = 0; i < s.rows.size(); ++i) b += static_cast<int>(i) * s.rows[i];
  return b;
}

IntPoly F_poly_hook(const Shape& s) { return IntPoly::monomial(1, b_statistic(s)) * q_hook_poly(s); }

IntPoly q_hook_poly(const Shape& s) {
  const auto hooks = hook_lengths(s);
  auto one_minus = [](int k) { return IntPoly::constant(1) - IntPoly::monomial(1, k); };
  IntPoly num = IntPoly::constant(1);
  for (int k = 1; k <= s.size(); ++k) num = num * one_minus(k);
  IntPoly den = IntPoly::constant(1);
  for (int h : hooks) den = den * one_minus(h);
  return divexact(num, den);
}

BigInt fixed_count(const Poset& P, long d, std::size_t cap) {
  const ExtensionIndex L(P, cap);
  const IndexPerm pr = L.permutation([&](const LinearExtension& f) { return promote_word(P, f); });
  const long ad = d < 0 ? -d : d;
  BigInt total = 0;
  for (std::size_t len : cycle_type(pr)) {
    if (ad % static_cast<long>(len) == 0) total += static_cast<unsigned long>(len);
  }
  return total;
}

IntPoly cyclotomic_polynomial(int m) {
  if (m < 1) throw PreconditionError("cyclotomic index must be positive");
  IntPoly f = IntPoly::monomial(1, m) - IntPoly::constant(1);
  for (int k = 1; k < m; ++k) {
    if (m % k == 0) f = divexact(f, cyclotomic_polynomial(k));
  }
  return f;
}

bool CycloElt::is_integer() const {
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) return false;
  }
  return true;
}

CycloElt reduce_at_primitive_root(const IntPoly& F, int m) {
  std::vector<BigInt> folded(static_cast<std::size_t>(m));
  for (int k = 0; k <= F.degree(); ++k) folded[static_cast<std::size_t>(k % m)] += F.coeff(k);
  const IntPoly phi = cyclotomic_polynomial(m);
  IntPoly r = divmod_monic(IntPoly(std::move(folded)), phi).second;
  CycloElt e;
  e.m = m;
  e.coeffs.resize(static_cast<std::size_t>(phi.degree()));
  for (int k = 0; k <= r.degree(); ++k) e.coeffs[static_cast<std::size_t>(k)] = r.coeff(k);
  return e;
}

BigInt eval_at_root(const IntPoly& F, int p, long d) {
  if (p < 1) throw PreconditionError("root order must be positive");
  const long r = ((d % p) + p) % p;
  const int m = p / static_cast<int>(std::gcd(r, static_cast<long>(p)));
  const CycloElt e = reduce_at_primitive_root(F, m);
  if (!e.is_integer()) {
    throw ArithmeticError("F(zeta^" + std::to_string(d) + ") with p = " + std::to_string(p) + " is not an integer");
  }
  return e.coeffs.empty() ? BigInt(0) : e.coeffs[0];
}

double eval_at_root_float(const IntPoly& F, int p, long d) {
  double sum = 0;
  for (int k = 0; k <= F.degree(); ++k) {
    const double angle = 2 * std::numbers::pi * static_cast<double>((static_cast<long>(k) * d) % p) / p;
    sum += F.coeff(k).get_d() * std::cos(angle);
  }
  return sum;
}

std::vector<SieveRow> rhoades_check(int m, int n, SievePoly poly, std::size_t cap) {
  const Shape s{std::vector<int>(static_cast<std::size_t>(m), n), false};
  const Poset P = shape_poset(s);
  const int p = m * n;
  const IntPoly F = poly == SievePoly::MajSum ? F_poly_hook(s) : q_hook_poly(s);
  const ExtensionIndex L(P, cap);
  const IndexPerm pr = L.permutation([&](const LinearExtension& f) { return promote_word(P, f); });
  const auto lens = cycle_type(pr);
  std::vector<SieveRow> rows;
  for (long d = 1; d <= p; ++d) {
    SieveRow row;
    row.d = d;
    for (std::size_t len : lens) {
      if (d % static_cast<long>(len) == 0) row.fixed += static_cast<unsigned long>(len);
    }
    row.at_root = eval_at_root(F, p, d);
    row.pass = row.fixed == row.at_root;
    rows.push_back(row);
  }
  return rows;
}

ShapeKind parse_shape_kind(const std::string& name) {
  if (name == "rectangle") return ShapeKind::Rectangle;
  if (name == "staircase") return ShapeKind::Staircase;
  if (name == "shifted_double_staircase") return ShapeKind::ShiftedDoubleStaircase;
  if (name == "shifted_trapezoid") return ShapeKind::ShiftedTrapezoid;
  throw ParseError("unknown shape kind '" + name +
                   "' (rectangle, staircase, shifted_double_staircase, shifted_trapezoid)");
}

std::string shape_kind_name(ShapeKind k) {
  switch (k) {
    case ShapeKind::Rectangle:
      return "rectangle";
    case ShapeKind::Staircase:
      return "staircase";
    case ShapeKind::ShiftedDoubleStaircase:
      return "shifted_double_staircase";
    case ShapeKind::ShiftedTrapezoid:
      return "shifted_trapezoid";
  }
  return "?";
}

bool shape_is_kind(const Shape& s, ShapeKind k) {
  const auto& r = s.rows;
  switch (k) {
    case ShapeKind::Rectangle:
      return s.is_rectangle();
    case ShapeKind::Staircase:
      return s.is_staircase();
    case ShapeKind::ShiftedDoubleStaircase:
    case ShapeKind::ShiftedTrapezoid: {
      if (!s.shifted || r.empty()) return false;
      const int step = (k == ShapeKind::ShiftedDoubleStaircase) ? 1 : 2;
      for (std::size_t i = 1; i < r.size(); ++i) {
        if (r[i - 1] - r[i] != step) return false;
      }
      return step == 2 || r.back() == 1;
    }
  }
  return false;
}

std::vector<int> transpose_map(const Shape& s) {
  std::vector<int> map;
  for (const auto& [row, col] : s.cells()) {
    const int t = s.cell_index(col, row);
    if (t < 0) throw PreconditionError("shape is not symmetric under transposition");
    map.push_back(t);
  }
  return map;
}

SpecialShapeReport special_shape_check(const Shape& s, ShapeKind kind, std::size_t cap) {
  if (!shape_is_kind(s, kind)) {
    throw PreconditionError(s.to_string() + " is not a " + shape_kind_name(kind));
  }
  const Poset P = shape_poset(s);
  const int p = P.size();
  const ExtensionIndex L(P, cap);
  const OperatorTable ops = operator_table(L);
  const IndexPerm power = perm_power(ops.promote, BigInt(p));

  SpecialShapeReport rep;
  rep.extensions = L.size();
  if (kind == ShapeKind::Staircase) {
    const std::vector<int> tr = transpose_map(s);
    rep.power_ok = true;
    for (std::size_t k = 0; k < L.size() && rep.power_ok; ++k) {
      std::vector<int> w;
      for (int t : L[k].word()) w.push_back(tr[static_cast<std::size_t>(t)]);
      rep.power_ok = L[power[k]] == LinearExtension(std::move(w));
    }
  } else {
    rep.power_ok = is_identity(power);
  }

  if (kind == ShapeKind::Rectangle) {
    const int m = static_cast<int>(s.rows.size());
    const int n = s.rows.front();
    for (std::size_t k = 0; k < L.size() && rep.evacuation_formula_ok; ++k) {
      const auto a = L[k].labels();
      const auto b = L[ops.evacuate[k]].labels();
      for (int i = 1; i <= m && rep.evacuation_formula_ok; ++i) {
        for (int j = 1; j <= n; ++j) {
          const int here = s.cell_index(i, j);
          const int opposite = s.cell_index(m + 1 - i, n + 1 - j);
          if (b[static_cast<std::size_t>(here)] != p + 1 - a[static_cast<std::size_t>(opposite)]) {
            rep.evacuation_formula_ok = false;
            break;
          }
        }
      }
    }
  }

  rep.dihedral_order = dihedral_group_order(ops.evacuate, ops.dual_evacuate);
  // The trivial group occurs only for chains; otherwise Z/2 (a, c, d) or
  // Z/2 x Z/2 (b).
  if (P.is_chain()) {
    rep.expected_dihedral_order = 1;
  } else {
    rep.expected_dihedral_order = kind == ShapeKind::Staircase ? 4 : 2;
  }
  rep.dihedral_ok = rep.dihedral_order == rep.expected_dihedral_order;
  return rep;
}

}  // namespace lindex
