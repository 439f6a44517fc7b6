#pragma once

// Exact univariate polynomials over Z and rational functions over Q.
//
// RatFunc keeps a canonical form  scale * num / den  where num and den are
// primitive integer polynomials with positive leading coefficient, coprime
// over Q, and scale is a rational number.  Zero is scale = 0, num = den = 1.
// Two RatFuncs are equal iff their canonical forms are identical.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lindex {

using BigInt = mpz_class;
using Rat = mpq_class;

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, int degree);
  static IntPoly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  // Coefficient of x^i; zero past the degree.
  BigInt coeff(int i) const;
  const BigInt& leading() const { return c_.back(); }

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  friend IntPoly operator*(const BigInt& c, IntPoly a) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  IntPoly pow(int e) const;

  // gcd of the coefficients, non-negative; 0 for the zero polynomial.
  BigInt content() const;
  // Divides out the content and makes the leading coefficient positive.
  IntPoly primitive() const;

  BigInt eval(const BigInt& x) const;
  Rat eval(const Rat& x) const;
  // F(x^d).
  IntPoly substitute_power(int d) const;

  // Multiplicity of (x - r) as a factor, for an integer root r.
  int multiplicity_of_root(const BigInt& r) const;

  // e.g. "q^4+q^2"; "0" for zero.
  std::string to_string(std::string_view var = "q") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Exact quotient a / b over Z[x]; throws ArithmeticError when b does not
// divide a.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
// Quotient and remainder for a monic (leading coefficient +-1) divisor.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b);
// Primitive gcd with positive leading coefficient (content ignored).
IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b);

class RatFunc {
 public:
  RatFunc();
  RatFunc(long c);  // NOLINT(google-explicit-constructor)
  RatFunc(const Rat& c);  // NOLINT(google-explicit-constructor)
  // scale * num / den, reduced.  Throws ArithmeticError if den is zero.
  RatFunc(const IntPoly& num, const IntPoly& den, const Rat& scale = 1);

  static RatFunc q();

  bool is_zero() const { return sgn(scale_) == 0; }
  const Rat& scale() const { return scale_; }
  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }
  // Numerator coefficients with the scale folded in.
  std::vector<Rat> numerator_coeffs() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.scale_ == b.scale_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc pow(int e) const;

  // Exact value at x; throws ArithmeticError at a pole.
  Rat eval(const Rat& x) const;

  // Largest k with (q-1)^k dividing the numerator.  The denominator must be
  // coprime to q-1 (checked).  Returns -1 for zero.
  int order_at_one() const;
  // True iff (q-1)^k divides this function (always true for zero).
  bool divisible_by_qm1(int k) const;
  // True iff the denominator is a power of (q+1), including (q+1)^0.
  bool denominator_is_power_of_qp1() const;

  // Human form with (q-1) and (q+1) powers pulled out, e.g.
  // "-2*(q-1)^3/(q+1)^4".
  std::string display() const;

 private:
  void normalize(IntPoly num, IntPoly den, Rat scale);

  Rat scale_;
  IntPoly num_;
  IntPoly den_;
};

// Parses expressions such as "-16q(q-1)(q^2+1)/(q+1)^6" or "(q-1)^2/(q+1)^2".
// Accepts integers, the variable q (or x), + - * / ^, parentheses and
// implicit multiplication.  Throws ParseError.
RatFunc parse_ratfunc(std::string_view text);

}  // namespace lindex
