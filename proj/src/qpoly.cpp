#include "lindex/qpoly.hpp"

#include <cctype>
#include <sstream>

#include "lindex/error.hpp"

namespace lindex {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& c) {
  if (sgn(c) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::pow(int e) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (sgn(leading()) < 0) g = -g;
  IntPoly r = *this;
  if (g != 1) {
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x + Rat(*it);
  }
  acc.canonicalize();
  return acc;
}

IntPoly IntPoly::substitute_power(int d) const {
  if (is_zero() || d == 1) return *this;
  if (d == 0) return constant(eval(BigInt(1)));
  std::vector<BigInt> r(static_cast<std::size_t>(degree()) * static_cast<std::size_t>(d) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * static_cast<std::size_t>(d)] = c_[i];
  return IntPoly(std::move(r));
}

int IntPoly::multiplicity_of_root(const BigInt& r) const {
  if (is_zero()) throw ArithmeticError("multiplicity of a root of the zero polynomial");
  int k = 0;
  std::vector<BigInt> cur = c_;
  while (cur.size() > 1) {
    // Synthetic division by (x - r).
    std::vector<BigInt> quot(cur.size() - 1);
    BigInt carry = 0;
    for (std::size_t i = cur.size(); i-- > 1;) {
      carry = carry * r + cur[i];
      quot[i - 1] = carry;
    }
    BigInt rem = carry * r + cur[0];
    if (sgn(rem) != 0) break;
    cur = std::move(quot);
    ++k;
  }
  return k;
}

namespace {

void append_term(std::ostringstream& os, const BigInt& c, int power, std::string_view var,
                 bool first) {
  BigInt a = abs(c);
  if (sgn(c) < 0) {
    os << '-';
  } else if (!first) {
    os << '+';
  }
  if (power == 0) {
    os << a;
    return;
  }
  if (a != 1) os << a << '*';
  os << var;
  if (power > 1) os << '^' << power;
}

}  // namespace

std::string IntPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = c_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    append_term(os, c, i, var, first);
    first = false;
  }
  return os.str();
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.is_zero()) return {};
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  int dr = a.degree();
  if (dr < db) throw ArithmeticError("polynomial division is not exact");
  std::vector<BigInt> q(static_cast<std::size_t>(dr - db) + 1);
  const BigInt& lb = b.leading();
  BigInt t;
  for (; dr >= db; --dr) {
    BigInt& lr = r[static_cast<std::size_t>(dr)];
    if (sgn(lr) == 0) continue;
    if (!mpz_divisible_p(lr.get_mpz_t(), lb.get_mpz_t())) {
      throw ArithmeticError("polynomial division is not exact");
    }
    mpz_divexact(t.get_mpz_t(), lr.get_mpz_t(), lb.get_mpz_t());
    const int shift = dr - db;
    q[static_cast<std::size_t>(shift)] = t;
    for (int j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(shift + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  for (const auto& c : r) {
    if (sgn(c) != 0) throw ArithmeticError("polynomial division is not exact");
  }
  return IntPoly(std::move(q));
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero() || abs(b.leading()) != 1) {
    throw ArithmeticError("divmod_monic needs a divisor with unit leading coefficient");
  }
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {IntPoly{}, a};
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db) + 1);
  const BigInt lb = b.leading();
  for (int dr = a.degree(); dr >= db; --dr) {
    BigInt t = r[static_cast<std::size_t>(dr)] * lb;  // lb = +-1 is its own inverse
    if (sgn(t) == 0) continue;
    const int shift = dr - db;
    q[static_cast<std::size_t>(shift)] = t;
    for (int j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(shift + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

namespace {

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  const BigInt& lb = b.leading();
  int dr = a.degree();
  while (dr >= db) {
    const BigInt lr = r[static_cast<std::size_t>(dr)];
    if (sgn(lr) != 0) {
      for (auto& c : r) c *= lb;
      const int shift = dr - db;
      for (int j = 0; j <= db; ++j) {
        r[static_cast<std::size_t>(shift + j)] -= lr * b.coeffs()[static_cast<std::size_t>(j)];
      }
    }
    --dr;
  }
  r.resize(static_cast<std::size_t>(std::max(db, 0)));
  return IntPoly(std::move(r));
}

}  // namespace

IntPoly primitive_gcd(const IntPoly& a0, const IntPoly& b0) {
  IntPoly a = a0.primitive();
  IntPoly b = b0.primitive();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return IntPoly{1};
    IntPoly r = pseudo_remainder(a, b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc() : scale_(0), num_{1}, den_{1} {}

RatFunc::RatFunc(long c) : RatFunc(Rat(c)) {}

RatFunc::RatFunc(const Rat& c) : scale_(c), num_{1}, den_{1} { scale_.canonicalize(); }

RatFunc::RatFunc(const IntPoly& num, const IntPoly& den, const Rat& scale) {
  normalize(num, den, scale);
}

RatFunc RatFunc::q() { return RatFunc(IntPoly::x(), IntPoly{1}); }

void RatFunc::normalize(IntPoly num, IntPoly den, Rat scale) {
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
  if (num.is_zero() || sgn(scale) == 0) {
    *this = RatFunc();
    return;
  }
  BigInt cn = num.content();
  if (sgn(num.leading()) < 0) cn = -cn;
  BigInt cd = den.content();
  if (sgn(den.leading()) < 0) cd = -cd;
  num = num.primitive();
  den = den.primitive();
  Rat content_ratio(cn, cd);
  content_ratio.canonicalize();
  scale.canonicalize();
  scale *= content_ratio;
  if (den.degree() > 0 && num.degree() > 0) {
    IntPoly g = primitive_gcd(num, den);
    if (g.degree() > 0) {
      num = divexact(num, g);
      den = divexact(den, g);
    }
  }
  scale_ = std::move(scale);
  num_ = std::move(num);
  den_ = std::move(den);
}

std::vector<Rat> RatFunc::numerator_coeffs() const {
  std::vector<Rat> out;
  if (is_zero()) return out;
  for (const auto& c : num_.coeffs()) {
    Rat v = scale_ * Rat(c);
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.scale_ = -r.scale_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const BigInt& a1 = scale_.get_num();
  const BigInt& b1 = scale_.get_den();
  const BigInt& a2 = o.scale_.get_num();
  const BigInt& b2 = o.scale_.get_den();
  if (den_ == o.den_) {
    IntPoly n = num_ * BigInt(a1 * b2) + o.num_ * BigInt(a2 * b1);
    normalize(std::move(n), den_, Rat(1, b1 * b2));
    return *this;
  }
  IntPoly g = primitive_gcd(den_, o.den_);
  IntPoly d1g = g.degree() > 0 ? divexact(den_, g) : den_;
  IntPoly d2g = g.degree() > 0 ? divexact(o.den_, g) : o.den_;
  IntPoly n = num_ * d2g * BigInt(a1 * b2) + o.num_ * d1g * BigInt(a2 * b1);
  IntPoly d = den_ * d2g;
  normalize(std::move(n), std::move(d), Rat(1, b1 * b2));
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  IntPoly g1 = primitive_gcd(num_, o.den_);
  IntPoly g2 = primitive_gcd(o.num_, den_);
  IntPoly n1 = g1.degree() > 0 ? divexact(num_, g1) : num_;
  IntPoly d2 = g1.degree() > 0 ? divexact(o.den_, g1) : o.den_;
  IntPoly n2 = g2.degree() > 0 ? divexact(o.num_, g2) : o.num_;
  IntPoly d1 = g2.degree() > 0 ? divexact(den_, g2) : den_;
  // Products of primitive polynomials are primitive, and the cross
  // cancellation leaves them coprime, so the result is already canonical.
  scale_ *= o.scale_;
  scale_.canonicalize();
  num_ = n1 * n2;
  den_ = d1 * d2;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw ArithmeticError("division by the zero rational function");
  RatFunc inv;
  inv.scale_ = 1 / o.scale_;
  inv.scale_.canonicalize();
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  return *this *= inv;
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return RatFunc(1) / pow(-e);
  RatFunc result(1);
  RatFunc base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Rat RatFunc::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (sgn(d) == 0) throw ArithmeticError("evaluation at a pole");
  if (is_zero()) return 0;
  Rat v = scale_ * num_.eval(x) / d;
  v.canonicalize();
  return v;
}

int RatFunc::order_at_one() const {
  if (sgn(den_.eval(BigInt(1))) == 0) {
    throw ArithmeticError("denominator is not coprime to q-1");
  }
  if (is_zero()) return -1;
  return num_.multiplicity_of_root(1);
}

bool RatFunc::divisible_by_qm1(int k) const {
  if (is_zero()) {
    if (sgn(den_.eval(BigInt(1))) == 0) throw ArithmeticError("denominator is not coprime to q-1");
    return true;
  }
  return order_at_one() >= k;
}

bool RatFunc::denominator_is_power_of_qp1() const {
  if (den_.degree() == 0) return true;
  return den_.multiplicity_of_root(-1) == den_.degree();
}

namespace {

struct Factored {
  IntPoly rest;
  int at_one = 0;
  int at_minus_one = 0;
};

Factored split_qpm1(const IntPoly& p) {
  Factored f;
  f.at_one = p.multiplicity_of_root(1);
  f.at_minus_one = p.multiplicity_of_root(-1);
  IntPoly strip = (IntPoly{-1, 1}).pow(f.at_one) * (IntPoly{1, 1}).pow(f.at_minus_one);
  f.rest = divexact(p, strip);
  return f;
}

std::vector<std::string> factor_strings(const BigInt& c, const Factored& f) {
  std::vector<std::string> out;
  if (c != 1) out.push_back(c.get_str());
  if (f.rest.degree() > 0) {
    std::string r = f.rest.to_string("q");
    bool single_term = 0;
    int nonzero = 0;
    for (const auto& x : f.rest.coeffs()) nonzero += sgn(x) != 0;
    single_term = nonzero == 1;
    out.push_back(single_term ? r : "(" + r + ")");
  } else if (f.rest.coeff(0) != 1) {
    out.push_back(f.rest.coeff(0).get_str());
  }
  auto power = [&](const char* base, int e) {
    if (e == 0) return;
    out.push_back(e == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(e));
  };
  power("(q-1)", f.at_one);
  power("(q+1)", f.at_minus_one);
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '*';
    s += parts[i];
  }
  return s;
}

}  // namespace

std::string RatFunc::display() const {
  if (is_zero()) return "0";
  Factored n = split_qpm1(num_);
  Factored d = split_qpm1(den_);
  BigInt a = abs(scale_.get_num());
  std::vector<std::string> top = factor_strings(a, n);
  std::vector<std::string> bottom = factor_strings(scale_.get_den(), d);
  std::string s = sgn(scale_) < 0 ? "-" : "";
  s += top.empty() ? "1" : join(top);
  if (!bottom.empty()) {
    s += '/';
    s += bottom.size() == 1 ? bottom.front() : "(" + join(bottom) + ")";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  RatFunc parse() {
    RatFunc v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse rational function '" + std::string(s_) + "' at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_primary() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 'x' || c == '(';
  }

  RatFunc expr() {
    RatFunc v = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        v += term();
      } else if (c == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  RatFunc term() {
    RatFunc v = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        v *= unary();
      } else if (c == '/') {
        ++pos_;
        v /= unary();
      } else if (starts_primary()) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  RatFunc unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  RatFunc power() {
    RatFunc base = primary();
    if (peek() == '^') {
      ++pos_;
      bool braces = peek() == '{';
      if (braces) ++pos_;
      long e = integer();
      if (braces) {
        if (peek() != '}') fail("expected '}'");
        ++pos_;
      }
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  RatFunc primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RatFunc v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 'q' || c == 'x') {
      ++pos_;
      return RatFunc::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc(Rat(BigInt(std::string(s_.substr(start, pos_ - start)))));
    }
    fail("expected a number, q, or '('");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace lindex
