#pragma once

#include <map>
#include <string>
#include <vector>

#include "tlb/coeff.hpp"
#include "tlb/coxeter.hpp"

namespace tlb {

// t_1^{a_1}...t_n^{a_n} T_w, with T_w the positive lift of w.
struct BasisMonomial {
  std::array<uint8_t, kMaxN> a{};
  SignedPermutation w;

  BasisMonomial() = default;
  explicit BasisMonomial(int n) : w(n) {}
  BasisMonomial(std::vector<int> framing, SignedPermutation perm, int d);
  int n() const { return w.n(); }
  auto operator<=>(const BasisMonomial&) const = default;
  std::string str() const;
};

struct Letter {
  enum Kind { G, GInv, B, BInv, T };
  Kind kind = G;
  int index = 1;
  int power = 1;  // only for T

  static Letter g(int i) { return {G, i, 1}; }
  static Letter g_inv(int i) { return {GInv, i, 1}; }
  static Letter b() { return {B, 1, 1}; }
  static Letter b_inv() { return {BInv, 1, 1}; }
  static Letter t(int j, int k) { return {T, j, k}; }
  std::string str() const;
};

using Word = std::vector<Letter>;

class AlgebraElement {
 public:
  using Terms = std::map<BasisMonomial, Scalar>;

  AlgebraElement(int n, int d);
  static AlgebraElement one(int n, int d);
  static AlgebraElement basis(int d, const BasisMonomial& m, const Scalar& c = Scalar(1));
  static AlgebraElement from_word(int n, int d, const Word& w);

  int n() const { return n_; }
  int d() const { return d_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const BasisMonomial& m) const;

  void add_term(const BasisMonomial& m, const Scalar& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  AlgebraElement mul_generator(const Letter& g) const;
  AlgebraElement mul_word(const Word& w) const;
  // the same element of Y_{d,n+k}
  AlgebraElement embedded(int n) const;

  std::string str() const;

 private:
  void check_letter(const Letter& g) const;
  AlgebraElement mul_t(int i, int k) const;
  AlgebraElement mul_g(int i) const;
  AlgebraElement mul_b() const;
  AlgebraElement mul_e(int i) const;  // right multiplication by e_i
  AlgebraElement mul_f() const;       // right multiplication by f_1

  int n_, d_;
  Terms terms_;
};

// e_{i,j}^{(m)} and f_i^{(m)}.
AlgebraElement idempotent_e(int i, int j, int m, int n, int d);
AlgebraElement idempotent_f(int i, int m, int n, int d);

// g_{1,2} = 1 + u(g_1 + g_2) + u^2(g_1g_2 + g_2g_1) + u^3 g_1g_2g_1 and
// g_B = 1 + u g_1 + v b_1 + uv(g_1b_1 + b_1g_1) + u^2v g_1b_1g_1 + uv^2 b_1g_1b_1 + u^2v^2 g_1b_1g_1b_1
AlgebraElement g12(int n, int d);
AlgebraElement gB(int n, int d);

enum class IdealKind { H12, HB, R12, RB };
AlgebraElement ideal_generator(IdealKind kind, int n, int d);

// all d^n 2^n n! basis monomials
std::vector<BasisMonomial> enumerate_basis(int n, int d);

// the positive-lift word of w
Word lift_word(const SignedPermutation& w);
Word coxeter_to_word(const std::vector<CoxGen>& cw);

// Parse "coef * t[a1,...,an] * w[window] + ..." (the element text format).
AlgebraElement parse_element(const std::string& text, int n, int d);

}  // namespace tlb
