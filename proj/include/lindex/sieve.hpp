#pragma once

// Tableau major index, the q-count F(q), fixed points of powers of
// promotion, exact evaluation at roots of unity, and the special-shape checks.

#include <string>
#include <vector>

#include "lindex/poset.hpp"
#include "lindex/qpoly.hpp"

namespace lindex {

// Hook length per cell, in Shape::cells() order.  Ordinary shapes only.
std::vector<int> hook_lengths(const Shape& s);

// Extension of shape_poset(s) from row-wise entries (1..p).  Throws
// PreconditionError when the filling is not standard.
LinearExtension tableau_from_rows(const Shape& s, const std::vector<std::vector<int>>& rows);
std::vector<std::vector<int>> tableau_rows(const Shape& s, const LinearExtension& f);

// Sum of the entries i whose successor i + 1 sits in a strictly lower row.
int maj_tableau(const Shape& s, const LinearExtension& f);

// F(q) = sum of q^maj over standard tableaux.
IntPoly F_poly_sum(const Shape& s, std::size_t cap = kDefaultExtensionCap);
// q^{b(lambda)} (1-q)...(1-q^p) / prod (1-q^{h(t)}), b(lambda) = sum (i-1) lambda_i.
IntPoly F_poly_hook(const Shape& s);
// The same without the q^{b(lambda)} factor.
IntPoly q_hook_poly(const Shape& s);
int b_statistic(const Shape& s);

// #{f : f = f∂^d}.
BigInt fixed_count(const Poset& P, long d, std::size_t cap = kDefaultExtensionCap);

// Phi_m(x).
IntPoly cyclotomic_polynomial(int m);

// Element of Z[x]/Phi_m(x), coefficients ascending, length phi(m).
struct CycloElt {
  int m = 1;
  std::vector<BigInt> coeffs;

  bool is_integer() const;
};

// F(omega) in Z[x]/Phi_m for omega a primitive m-th root of unity.
CycloElt reduce_at_primitive_root(const IntPoly& F, int m);

// F(zeta^d), zeta = exp(2 pi i / p).  zeta^d is a primitive m-th root with
// m = p / gcd(d, p), so F is reduced mod y^m - 1 and then mod Phi_m.  Throws
// ArithmeticError unless the residue is an integer.
BigInt eval_at_root(const IntPoly& F, int p, long d);
// The same value in floating point (real part); sanity check only.
double eval_at_root_float(const IntPoly& F, int p, long d);

struct SieveRow {
  long d = 0;
  BigInt fixed;
  BigInt at_root;
  bool pass = false;
};

enum class SievePoly {
  MajSum,    // F(q), the maj generating function
  QHook      // F(q) / q^{b(lambda)} = [p]!_q / prod [h(t)]_q
};

// For every d in 1..p: e_d(P) against the polynomial at zeta^d on the m x n
// rectangle (m rows of length n).
std::vector<SieveRow> rhoades_check(int m, int n, SievePoly poly = SievePoly::MajSum,
                                    std::size_t cap = kDefaultExtensionCap);

enum class ShapeKind { Rectangle, Staircase, ShiftedDoubleStaircase, ShiftedTrapezoid };

ShapeKind parse_shape_kind(const std::string& name);
std::string shape_kind_name(ShapeKind k);
// Rectangle: ordinary, equal rows.  Staircase: (n, n-1, ..., 1).
// Shifted double staircase: shifted (n, n-1, ..., 1).  Shifted trapezoid:
// shifted rows dropping by exactly 2.
bool shape_is_kind(const Shape& s, ShapeKind k);

// Cell (i, j) -> (j, i) on a staircase, as a map of element ids.
std::vector<int> transpose_map(const Shape& s);

struct SpecialShapeReport {
  std::size_t extensions = 0;
  // ∂^p is the identity (a, c, d) or the transpose (b) on every extension.
  bool power_ok = false;
  // Rectangles only: f ε = (p + 1 - a_{m+1-i, n+1-j}) cell-wise.
  bool evacuation_formula_ok = true;
  BigInt dihedral_order;
  BigInt expected_dihedral_order;
  bool dihedral_ok = false;
  bool pass() const { return power_ok && evacuation_formula_ok && dihedral_ok; }
};

// Throws PreconditionError when s is not of the given kind.
SpecialShapeReport special_shape_check(const Shape& s, ShapeKind kind,
                                       std::size_t cap = kDefaultExtensionCap);

}  // namespace lindex
