#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tlb/coeff.hpp"
#include "tlb/markov.hpp"

namespace tlb {

// A function Z/dZ -> Scalar; value(k) is f(t^k).
class CyclicFunction {
 public:
  explicit CyclicFunction(int d);
  explicit CyclicFunction(std::vector<Scalar> values);
  static CyclicFunction delta(int d, int a);
  static CyclicFunction one(int d);
  static CyclicFunction character(int d, int m);  // k -> zeta_d^{mk}
  // x with x(0) = 1 and x(k) = x_k symbolic; y with y(k) = y_k symbolic
  static CyclicFunction symbolic_x(int d);
  static CyclicFunction symbolic_y(int d);

  int d() const { return static_cast<int>(v_.size()); }
  const Scalar& operator()(int k) const;
  Scalar& at(int k);
  const std::vector<Scalar>& values() const { return v_; }
  bool is_zero() const;

  friend CyclicFunction operator+(const CyclicFunction& a, const CyclicFunction& b);
  friend CyclicFunction operator-(const CyclicFunction& a, const CyclicFunction& b);
  friend CyclicFunction operator*(const Scalar& c, const CyclicFunction& f);
  friend CyclicFunction pointwise(const CyclicFunction& a, const CyclicFunction& b);
  friend CyclicFunction convolve(const CyclicFunction& a, const CyclicFunction& b);
  friend bool operator==(const CyclicFunction& a, const CyclicFunction& b);

  // fhat(k) = sum_y f(y) zeta^{-ky}
  CyclicFunction fourier() const;
  // inverse of fourier: f(k) = (1/d) sum_m fhat(m) zeta^{mk}
  CyclicFunction inverse_fourier() const;
  CyclicFunction substituted(const Bindings& b) const;

  std::string str() const;

 private:
  std::vector<Scalar> v_;
};

// How the E-system coefficient is written.
enum class ESystemVariant {
  UPlus2,        // dzu(u+2) x*x + d^2 z u^2(u^2+1) x
  ZOnce,         // dzu(u^2+2) x*x + d^2 z u^2(u^2+1) x
  ZSquared,      // dzu(u^2+2) x*x + d^2 z^2 u^2(u^2+1) x
};
std::string variant_name(ESystemVariant v);

// The functional forms of A, B, Tr(r_B) and the E/F equations.  In the
// spatial domain products are convolutions; in the Fourier domain they are
// pointwise and the constant function 1 becomes d*delta_0.
class FunctionalForms {
 public:
  enum class Domain { Spatial, Fourier };
  FunctionalForms(Domain dom, CyclicFunction x, CyclicFunction y, Scalar z);

  std::array<CyclicFunction, 6> A_parts() const;
  std::array<CyclicFunction, 6> B_parts() const;
  CyclicFunction A() const;
  CyclicFunction B() const;
  // d^2 Tr(r_B) as a constant function
  CyclicFunction rb() const;
  // d^2 Tr(e_1^{(m)} e_2 r_{1,2}) and d^2 Tr(e_1^{(m)} e_2 b_1 r_{1,2})
  CyclicFunction e_system(ESystemVariant v) const;
  CyclicFunction f_system(ESystemVariant v) const;

 private:
  CyclicFunction conv(const CyclicFunction& a, const CyclicFunction& b) const;
  CyclicFunction one() const;
  static CyclicFunction assemble(const std::array<CyclicFunction, 6>& p);

  Domain dom_;
  int d_;
  CyclicFunction x_, y_;
  Scalar z_;
};

struct SupportProfile {
  int d = 1;
  std::set<int> sup1, sup2, y1, y2, y3, y4;

  static SupportProfile parse(const std::string& text, int d);
  std::string str() const;
  // empty string when valid, otherwise the reason
  std::string validate() const;
  bool zero_in_sup1() const { return sup1.count(0) > 0; }
  // branches admitted by the location of 0
  std::vector<int> branches() const;
};

// All valid profiles with 0 in Sup_1 or Sup_2, in lexicographic order.
std::vector<SupportProfile> enumerate_profiles(int d);

struct Solution {
  CyclicFunction x, y;
  Scalar z;
  TraceParams params() const;
};

// Coefficient of chi_0 in the y-branch formula.
Scalar branch_constant(int branch);
Solution build_solution(const SupportProfile& p, int branch);

struct FunctionalReport {
  std::vector<CheckLine> lines;
  std::vector<CheckLine> variants;  // informational
  bool ok() const;
};
// A, B, Tr(r_B) and the ZSquared E/F equations vanish; the other two
// variants of the E/F equations are reported alongside.
FunctionalReport verify_functional_system(const CyclicFunction& x, const CyclicFunction& y, const Scalar& z);

// Univariate polynomial in one variable with Scalar coefficients, low degree first.
using UPoly = std::vector<Scalar>;
UPoly to_upoly(const Scalar& s, int var);
UPoly upoly_gcd(UPoly a, UPoly b);
std::string upoly_str(const UPoly& p, const std::string& var);

// Admitted values of yhat(k) at a point with xhat(k) = X: the roots of
// gcd(FA, FB[, rb]) in Y, when that gcd splits over the candidate set.
struct PointSolve {
  UPoly gcd;                    // monic
  std::vector<Scalar> roots;    // candidates confirmed as roots
  bool split = false;           // gcd equals the product over the roots
};
PointSolve solve_point(int d, bool at_zero, const Scalar& X, const std::vector<Scalar>& candidates);

}  // namespace tlb
