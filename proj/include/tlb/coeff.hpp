#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tlb {

// Largest framing modulus supported by the variable table.
constexpr int kMaxD = 8;

// Variable slots: u, v, z, l (formal square root of lambda), x_0..x_{kMaxD-1},
// y_0..y_{kMaxD-1}.  u, v, z, l may carry negative exponents.
enum : int { kU = 0, kV = 1, kZ = 2, kL = 3, kX0 = 4, kY0 = 4 + kMaxD, kNumVars = 4 + 2 * kMaxD };

inline int var_x(int k) { return kX0 + k; }
inline int var_y(int k) { return kY0 + k; }
inline bool is_laurent_var(int v) { return v < kX0; }
std::string var_name(int v);

struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  size_t position;
};

// Element of Q(zeta_d), stored in the power basis modulo the d-th cyclotomic
// polynomial.  Values that happen to be rational are always stored with d = 1.
class Cyclotomic {
 public:
  Cyclotomic() : c_(1) {}
  Cyclotomic(long n) : c_(1, mpq_class(n)) {}
  Cyclotomic(const mpq_class& q) : c_(1, q) {}

  static Cyclotomic zeta(int d, long k);
  static int phi(int d);

  int conductor() const { return d_; }
  const std::vector<mpq_class>& coords() const { return c_; }
  bool is_zero() const { return d_ == 1 && sgn(c_[0]) == 0; }
  bool is_rational() const { return d_ == 1; }
  bool is_one() const { return d_ == 1 && c_[0] == 1; }
  const mpq_class& rational() const { return c_[0]; }

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
  Cyclotomic inverse() const;
  // throws ArithmeticError for two different non-rational conductors
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  // Rendering as a polynomial in z{d}; rational values print as plain rationals.
  std::string str() const;

 private:
  Cyclotomic(int d, std::vector<mpq_class> c);
  Cyclotomic lifted(int d) const;
  void normalize();

  int d_ = 1;
  std::vector<mpq_class> c_;
};

struct Monomial {
  std::array<int16_t, kNumVars> e{};

  static Monomial var(int v, int power = 1) {
    Monomial m;
    m.e[v] = static_cast<int16_t>(power);
    return m;
  }
  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<int16_t>(e[i] + o.e[i]);
    return r;
  }
  Monomial inverse() const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<int16_t>(-e[i]);
    return r;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  auto operator<=>(const Monomial&) const = default;
  std::string str() const;
};

// Sparse Laurent polynomial with cyclotomic coefficients.  Terms are kept in
// descending monomial order with no zero coefficients.
class Poly {
 public:
  using Term = std::pair<Monomial, Cyclotomic>;

  Poly() = default;
  Poly(long n) : Poly(Cyclotomic(n)) {}
  Poly(const mpq_class& q) : Poly(Cyclotomic(q)) {}
  Poly(const Cyclotomic& c);
  Poly(const Monomial& m, const Cyclotomic& c = Cyclotomic(1));
  static Poly var(int v, int power = 1) { return Poly(Monomial::var(v, power)); }
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return t_; }
  size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
  bool is_monomial() const { return t_.size() == 1; }
  Cyclotomic constant_term() const;
  const Term& leading() const { return t_.front(); }
  // componentwise minimum exponent over all terms
  Monomial min_exponents() const;
  int degree_in(int v) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  Poly scaled(const Cyclotomic& c) const;
  Poly shifted(const Monomial& m) const;
  Poly pow(unsigned k) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

  // Exact quotient a/b when b divides a over Laurent polynomials; false otherwise.
  friend bool try_divide(const Poly& a, const Poly& b, Poly& q);

  std::string str() const;

 private:
  std::vector<Term> t_;
};

// Lazy fraction num/den.  den is either the constant 1 or a monic polynomial
// without negative exponents; all Laurent monomial factors live in num.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long n) : num_(n), den_(1) {}
  Scalar(const mpq_class& q) : num_(q), den_(1) {}
  Scalar(const Cyclotomic& c) : num_(c), den_(1) {}
  Scalar(Poly p) : num_(std::move(p)), den_(1) {}
  Scalar(Poly num, Poly den);
  static Scalar var(int v, int power = 1) { return Scalar(Poly::var(v, power)); }
  static Scalar ratio(long a, long b) { return Scalar(mpq_class(a, b)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_constant(); }
  bool is_one() const { return is_poly() && num_ == Poly(1); }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
  Scalar inverse() const;
  Scalar pow(long k) const;

  // Equality by cross-multiplication.
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  void normalize();
  Poly num_, den_;
};

using Bindings = std::map<int, Scalar>;

Poly delta(int v);  // v - v^{-1}
Scalar substitute(const Scalar& s, const Bindings& b);
Scalar substitute(const Poly& p, const Bindings& b);

Scalar parse_scalar(std::string_view text);

}  // namespace tlb
