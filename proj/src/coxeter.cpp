#include "tlb/coxeter.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tlb {

SignedPermutation::SignedPermutation(int n) : n_(static_cast<int8_t>(n)) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("strand count out of range");
  for (int i = 0; i < n; ++i) w_[i] = static_cast<int8_t>(i + 1);
}

SignedPermutation SignedPermutation::from_window(const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  SignedPermutation p(n);
  std::vector<bool> seen(n + 1, false);
  for (int i = 0; i < n; ++i) {
    int a = std::abs(w[i]);
    if (a < 1 || a > n || seen[a]) throw std::invalid_argument("not a signed permutation");
    seen[a] = true;
    p.w_[i] = static_cast<int8_t>(w[i]);
  }
  return p;
}

SignedPermutation SignedPermutation::generator(int n, CoxGen g) {
  return SignedPermutation(n).times(g);
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '[' || c == ']'; }), s.end());
  std::vector<int> w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) w.push_back(std::stoi(item));
  return from_window(w);
}

int SignedPermutation::operator()(int i) const {
  return i > 0 ? w_[i - 1] : -w_[-i - 1];
}

std::vector<int> SignedPermutation::window() const { return std::vector<int>(w_.begin(), w_.begin() + n_); }

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation r(n_);
  for (int i = 1; i <= n_; ++i) {
    int a = w_[i - 1];
    r.w_[std::abs(a) - 1] = static_cast<int8_t>(a > 0 ? i : -i);
  }
  return r;
}

SignedPermutation SignedPermutation::times(CoxGen g) const {
  if (g < 0 || g >= std::max<int>(n_, 1) || (g == 0 && n_ < 1))
    throw std::invalid_argument("generator index out of range");
  SignedPermutation r = *this;
  if (g == 0)
    r.w_[0] = static_cast<int8_t>(-r.w_[0]);
  else
    std::swap(r.w_[g - 1], r.w_[g]);
  return r;
}

bool SignedPermutation::right_descent(CoxGen g) const {
  if (g == 0) return w_[0] < 0;
  return w_[g - 1] > w_[g];
}

int SignedPermutation::length() const {
  int len = 0;
  for (int i = 0; i < n_; ++i) {
    if (w_[i] < 0) ++len;
    for (int j = i + 1; j < n_; ++j) {
      if (w_[i] > w_[j]) ++len;
      if (w_[i] + w_[j] < 0) ++len;
    }
  }
  return len;
}

std::vector<CoxGen> SignedPermutation::reduced_word() const {
  std::vector<CoxGen> word;
  SignedPermutation w = *this;
  for (;;) {
    CoxGen g = -1;
    for (int i = 1; i < n_ && g < 0; ++i)
      if (w.right_descent(i)) g = i;
    if (g < 0 && n_ > 0 && w.right_descent(0)) g = 0;
    if (g < 0) break;
    word.push_back(g);
    w = w.times(g);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

SignedPermutation SignedPermutation::embedded(int n) const {
  SignedPermutation r(n);
  for (int i = 0; i < n_; ++i) r.w_[i] = w_[i];
  return r;
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("compose: mismatched strand counts");
  SignedPermutation r(a.n_);
  for (int i = 1; i <= a.n_; ++i) r.w_[i - 1] = static_cast<int8_t>(a(b(i)));
  return r;
}

std::string SignedPermutation::str() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += std::to_string(w_[i]);
  }
  return s + "]";
}

std::vector<CoxGen> factor_word(const NkFactor& f) {
  std::vector<CoxGen> word;
  for (int i = f.k - 1; i >= f.p; --i) word.push_back(i);
  if (f.is_signed) {
    for (int i = f.p - 1; i >= 1; --i) word.push_back(i);
    word.push_back(0);
    for (int i = 1; i <= f.p - 1; ++i) word.push_back(i);
  }
  return word;
}

SignedPermutation lift(const NkFactor& f, int n) {
  SignedPermutation w(n);
  for (CoxGen g : factor_word(f)) w = w.times(g);
  return w;
}

TopFactorization top_factor(const SignedPermutation& w) {
  int n = w.n();
  if (n < 1) throw std::invalid_argument("top_factor needs n >= 1");
  int p = 1;
  while (std::abs(w(p)) != n) ++p;
  NkFactor f{n, p, w(p) < 0};
  return {f, compose(w, lift(f, n).inverse())};
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> w(perm);
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) w[i] = -w[i];
      out.push_back(SignedPermutation::from_window(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(), [](const SignedPermutation& a, const SignedPermutation& b) {
    return a.window() < b.window();
  });
  return out;
}

}  // namespace tlb
