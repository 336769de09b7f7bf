#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tlb {

constexpr int kMaxN = 8;

// Coxeter generator of W_n: 0 is r_1, i >= 1 is s_i.
using CoxGen = int;

class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(int n);  // identity
  static SignedPermutation from_window(const std::vector<int>& w);
  static SignedPermutation generator(int n, CoxGen g);
  static SignedPermutation parse(std::string_view text);

  int n() const { return n_; }
  int operator()(int i) const;  // w(i) for i in [-n, n] \ {0}
  std::vector<int> window() const;

  SignedPermutation inverse() const;
  SignedPermutation times(CoxGen g) const;  // w * g
  bool right_descent(CoxGen g) const;
  int length() const;
  std::vector<CoxGen> reduced_word() const;
  // the same permutation on n + 1 strands, fixing n + 1
  SignedPermutation embedded(int n) const;

  friend SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);
  auto operator<=>(const SignedPermutation&) const = default;
  std::string str() const;

 private:
  int8_t n_ = 0;
  std::array<int8_t, kMaxN> w_{};
};

// Element of N_k: (p = k, unsigned) is 1, (p = k, signed) is r_k,
// (p < k, unsigned) is s_{k-1}...s_p and (p < k, signed) is s_{k-1}...s_p r_p.
struct NkFactor {
  int k = 0;
  int p = 0;
  bool is_signed = false;
  auto operator<=>(const NkFactor&) const = default;
};

// The factor as an element of W_n (n >= k).
SignedPermutation lift(const NkFactor& f, int n);
// Coxeter word for the factor, r_p written as s_{p-1}..s_1 r_1 s_1..s_{p-1}.
std::vector<CoxGen> factor_word(const NkFactor& f);

// w = remainder * lift(factor); the remainder fixes n.
struct TopFactorization {
  NkFactor factor;
  SignedPermutation remainder;
};
TopFactorization top_factor(const SignedPermutation& w);

// All 2^n n! elements in lexicographic window order.
std::vector<SignedPermutation> all_signed_permutations(int n);

}  // namespace tlb
