#include "tlb/algebra.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace tlb {

namespace {

int mod(int a, int d) {
  a %= d;
  return a < 0 ? a + d : a;
}

const Scalar& cu() {
  static const Scalar c(delta(kU));
  return c;
}
const Scalar& cv() {
  static const Scalar c(delta(kV));
  return c;
}

}  // namespace

BasisMonomial::BasisMonomial(std::vector<int> framing, SignedPermutation perm, int d) : w(perm) {
  if (static_cast<int>(framing.size()) != perm.n()) throw std::invalid_argument("framing length mismatch");
  for (size_t i = 0; i < framing.size(); ++i) a[i] = static_cast<uint8_t>(mod(framing[i], d));
}

std::string BasisMonomial::str() const {
  std::string s = "t[";
  for (int i = 0; i < n(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + "] * w" + w.str();
}

std::string Letter::str() const {
  switch (kind) {
    case G: return "g" + std::to_string(index);
    case GInv: return "g" + std::to_string(index) + "^-1";
    case B: return "b1";
    case BInv: return "b1^-1";
    case T: return "t" + std::to_string(index) + "^" + std::to_string(power);
  }
  return "?";
}

AlgebraElement::AlgebraElement(int n, int d) : n_(n), d_(d) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("strand count out of range");
  if (d < 1 || d > kMaxD) throw std::invalid_argument("framing modulus out of range");
}

AlgebraElement AlgebraElement::one(int n, int d) {
  AlgebraElement r(n, d);
  r.terms_.emplace(BasisMonomial(n), Scalar(1));
  return r;
}

AlgebraElement AlgebraElement::basis(int d, const BasisMonomial& m, const Scalar& c) {
  AlgebraElement r(m.n(), d);
  r.add_term(m, c);
  return r;
}

AlgebraElement AlgebraElement::from_word(int n, int d, const Word& w) { return one(n, d).mul_word(w); }

Scalar AlgebraElement::coefficient(const BasisMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void AlgebraElement::add_term(const BasisMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.n_ != n_ || o.d_ != d_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (o.n_ != n_ || o.d_ != d_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
  AlgebraElement r(a.n_, a.d_);
  if (c.is_zero()) return r;
  for (const auto& [m, x] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * x);
  return r;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n_ != b.n_ || a.d_ != b.d_) return false;
  AlgebraElement diff = a - b;
  return diff.is_zero();
}

void AlgebraElement::check_letter(const Letter& g) const {
  switch (g.kind) {
    case Letter::G:
    case Letter::GInv:
      if (g.index < 1 || g.index >= n_) throw std::out_of_range("braiding generator index out of range");
      break;
    case Letter::B:
    case Letter::BInv:
      if (g.index != 1 || n_ < 1) throw std::out_of_range("loop generator must be b1");
      break;
    case Letter::T:
      if (g.index < 1 || g.index > n_) throw std::out_of_range("framing generator index out of range");
      break;
  }
}

AlgebraElement AlgebraElement::mul_t(int i, int k) const {
  AlgebraElement r(n_, d_);
  if (mod(k, d_) == 0) return *this;
  for (const auto& [m, c] : terms_) {
    BasisMonomial x = m;
    int p = std::abs(m.w(i)) - 1;
    x.a[p] = static_cast<uint8_t>(mod(x.a[p] + k, d_));
    r.terms_.emplace(x, c);
  }
  return r;
}

AlgebraElement AlgebraElement::mul_g(int i) const {
  AlgebraElement r(n_, d_);
  Scalar cd = cu() * Scalar::ratio(1, d_);
  for (const auto& [m, c] : terms_) {
    BasisMonomial x = m;
    x.w = m.w.times(i);
    r.add_term(x, c);
    if (!m.w.right_descent(i)) continue;
    int p = std::abs(m.w(i)) - 1, q = std::abs(m.w(i + 1)) - 1;
    Scalar cc = c * cd;
    for (int s = 0; s < d_; ++s) {
      BasisMonomial y = m;
      y.a[p] = static_cast<uint8_t>(mod(y.a[p] + s, d_));
      y.a[q] = static_cast<uint8_t>(mod(y.a[q] - s, d_));
      r.add_term(y, cc);
    }
  }
  return r;
}

AlgebraElement AlgebraElement::mul_b() const {
  AlgebraElement r(n_, d_);
  Scalar cd = cv() * Scalar::ratio(1, d_);
  for (const auto& [m, c] : terms_) {
    BasisMonomial x = m;
    x.w = m.w.times(0);
    r.add_term(x, c);
    if (!m.w.right_descent(0)) continue;
    int p = std::abs(m.w(1)) - 1;
    Scalar cc = c * cd;
    for (int k = 0; k < d_; ++k) {
      BasisMonomial y = m;
      y.a[p] = static_cast<uint8_t>(mod(y.a[p] + k, d_));
      r.add_term(y, cc);
    }
  }
  return r;
}

AlgebraElement AlgebraElement::mul_e(int i) const {
  AlgebraElement r(n_, d_);
  Scalar inv = Scalar::ratio(1, d_);
  for (int s = 0; s < d_; ++s) r += mul_t(i, s).mul_t(i + 1, -s);
  return inv * r;
}

AlgebraElement AlgebraElement::mul_f() const {
  AlgebraElement r(n_, d_);
  for (int k = 0; k < d_; ++k) r += mul_t(1, k);
  return Scalar::ratio(1, d_) * r;
}

AlgebraElement AlgebraElement::mul_generator(const Letter& g) const {
  check_letter(g);
  switch (g.kind) {
    case Letter::T: return mul_t(g.index, g.power);
    case Letter::G: return mul_g(g.index);
    case Letter::B: return mul_b();
    case Letter::GInv: return mul_g(g.index) - cu() * mul_e(g.index);
    case Letter::BInv: return mul_b() - cv() * mul_f();
  }
  return *this;
}

AlgebraElement AlgebraElement::mul_word(const Word& w) const {
  AlgebraElement r = *this;
  for (const auto& g : w) r = r.mul_generator(g);
  return r;
}

Word coxeter_to_word(const std::vector<CoxGen>& cw) {
  Word w;
  for (CoxGen g : cw) w.push_back(g == 0 ? Letter::b() : Letter::g(g));
  return w;
}

Word lift_word(const SignedPermutation& w) { return coxeter_to_word(w.reduced_word()); }

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.n_ != y.n_ || x.d_ != y.d_) throw std::invalid_argument("dimension mismatch");
  AlgebraElement r(x.n_, x.d_);
  for (const auto& [m, c] : y.terms_) {
    AlgebraElement p = x;
    for (int i = 0; i < m.n(); ++i)
      if (m.a[i]) p = p.mul_t(i + 1, m.a[i]);
    p = p.mul_word(lift_word(m.w));
    r += c * p;
  }
  return r;
}

AlgebraElement AlgebraElement::embedded(int n) const {
  if (n < n_) throw std::invalid_argument("cannot embed into fewer strands");
  AlgebraElement r(n, d_);
  for (const auto& [m, c] : terms_) {
    BasisMonomial x = m;
    x.w = m.w.embedded(n);
    r.terms_.emplace(x, c);
  }
  return r;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ") * " + m.str();
  }
  return s;
}

AlgebraElement idempotent_e(int i, int j, int m, int n, int d) {
  if (i == j || i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("invalid idempotent indices");
  AlgebraElement r(n, d);
  for (int s = 0; s < d; ++s) {
    BasisMonomial x(n);
    x.a[i - 1] = static_cast<uint8_t>(mod(m + s, d));
    x.a[j - 1] = static_cast<uint8_t>(mod(-s, d));
    r.add_term(x, Scalar::ratio(1, d));
  }
  return r;
}

AlgebraElement idempotent_f(int i, int m, int n, int d) {
  if (i < 1 || i > n) throw std::invalid_argument("invalid idempotent index");
  AlgebraElement r(n, d);
  for (int k = 0; k < d; ++k) {
    BasisMonomial x(n);
    x.a[i - 1] = static_cast<uint8_t>(mod(m + k, d));
    r.add_term(x, Scalar::ratio(1, d));
  }
  return r;
}

namespace {

AlgebraElement sum_words(int n, int d, const std::vector<std::pair<Scalar, Word>>& parts) {
  AlgebraElement r(n, d);
  for (const auto& [c, w] : parts) r += c * AlgebraElement::from_word(n, d, w);
  return r;
}

}  // namespace

AlgebraElement g12(int n, int d) {
  Scalar u = Scalar::var(kU);
  auto g = Letter::g;
  return sum_words(n, d,
                   {{Scalar(1), {}},
                    {u, {g(1)}},
                    {u, {g(2)}},
                    {u * u, {g(1), g(2)}},
                    {u * u, {g(2), g(1)}},
                    {u.pow(3), {g(1), g(2), g(1)}}});
}

AlgebraElement gB(int n, int d) {
  Scalar u = Scalar::var(kU), v = Scalar::var(kV);
  auto g = Letter::g;
  Letter b = Letter::b();
  return sum_words(n, d,
                   {{Scalar(1), {}},
                    {u, {g(1)}},
                    {v, {b}},
                    {u * v, {g(1), b}},
                    {u * v, {b, g(1)}},
                    {u * u * v, {g(1), b, g(1)}},
                    {v * v * u, {b, g(1), b}},
                    {(u * v).pow(2), {g(1), b, g(1), b}}});
}

AlgebraElement ideal_generator(IdealKind kind, int n, int d) {
  bool classical = kind == IdealKind::H12 || kind == IdealKind::HB;
  bool type_a = kind == IdealKind::H12 || kind == IdealKind::R12;
  if (classical && d != 1) throw std::invalid_argument("h12/hB live in the d = 1 algebra");
  if (type_a && n < 3) throw std::invalid_argument("h12/r12 need n >= 3");
  if (!type_a && n < 2) throw std::invalid_argument("hB/rB need n >= 2");
  if (type_a) {
    AlgebraElement x = g12(n, d);
    return classical ? x : idempotent_e(1, 2, 0, n, d) * idempotent_e(2, 3, 0, n, d) * x;
  }
  AlgebraElement x = gB(n, d);
  return classical ? x : idempotent_f(1, 0, n, d) * idempotent_f(2, 0, n, d) * x;
}

std::vector<BasisMonomial> enumerate_basis(int n, int d) {
  std::vector<BasisMonomial> out;
  auto perms = all_signed_permutations(n);
  int total = 1;
  for (int i = 0; i < n; ++i) total *= d;
  for (int code = 0; code < total; ++code) {
    std::vector<int> a(n);
    int c = code;
    for (int i = n - 1; i >= 0; --i) {
      a[i] = c % d;
      c /= d;
    }
    for (const auto& w : perms) out.emplace_back(a, w, d);
  }
  return out;
}

AlgebraElement parse_element(const std::string& text, int n, int d) {
  AlgebraElement r(n, d);
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c)
      throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
  };
  auto bracket_list = [&]() {
    expect('[');
    size_t st = i;
    while (i < text.size() && text[i] != ']') ++i;
    if (i >= text.size()) throw ParseError("unterminated list", st);
    std::string body = text.substr(st, i - st);
    ++i;
    std::vector<int> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ','))
      if (item.find_first_not_of(' ') != std::string::npos) out.push_back(std::stoi(item));
    return out;
  };
  skip();
  if (text.substr(i) == "0") return r;
  for (;;) {
    skip();
    expect('(');
    size_t st = i;
    int depth = 1;
    while (i < text.size() && depth) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      ++i;
    }
    if (depth) throw ParseError("unbalanced parentheses", st);
    Scalar c = parse_scalar(std::string_view(text).substr(st, i - st - 1));
    expect('*');
    expect('t');
    std::vector<int> a = bracket_list();
    expect('*');
    expect('w');
    SignedPermutation w = SignedPermutation::from_window(bracket_list());
    if (w.n() != n || static_cast<int>(a.size()) != n) throw ParseError("wrong strand count", i);
    r.add_term(BasisMonomial(a, w, d), c);
    skip();
    if (i >= text.size()) break;
    expect('+');
  }
  return r;
}

}  // namespace tlb
