#include "tlb/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tlb {

namespace {

using QPoly = std::vector<mpq_class>;  // dense, index = degree

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Integer coefficients of the d-th cyclotomic polynomial, low degree first.
std::vector<long> cyclotomic_polynomial(int d) {
  // x^d - 1 divided by Phi_e for every proper divisor e of d
  std::vector<long> num(d + 1, 0);
  num[0] = -1;
  num[d] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e) continue;
    std::vector<long> den = cyclotomic_polynomial(e);
    int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
    std::vector<long> q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
      long c = num[i];  // den is monic
      q[i - dd] = c;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = q;
  }
  return num;
}

const std::vector<long>& phi_poly(int d) {
  static const std::vector<std::vector<long>> table = [] {
    std::vector<std::vector<long>> t(kMaxD + 1);
    for (int d = 1; d <= kMaxD; ++d) t[d] = cyclotomic_polynomial(d);
    return t;
  }();
  if (d < 1 || d > kMaxD) throw ArithmeticError("cyclotomic conductor out of range");
  return table[d];
}

void reduce_mod_phi(QPoly& p, int d) {
  const auto& f = phi_poly(d);
  int deg = static_cast<int>(f.size()) - 1;
  for (int i = static_cast<int>(p.size()) - 1; i >= deg; --i) {
    if (sgn(p[i]) == 0) continue;
    mpq_class c = p[i];
    for (int j = 0; j <= deg; ++j) p[i - deg + j] -= c * f[j];
  }
  p.resize(deg);
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void qdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    size_t s = a.size() - b.size();
    mpq_class c = a.back() / b.back();
    q[s] = c;
    for (size_t j = 0; j < b.size(); ++j) a[s + j] -= c * b[j];
    trim(a);
  }
  r = a;
}

}  // namespace

std::string var_name(int v) {
  switch (v) {
    case kU: return "u";
    case kV: return "v";
    case kZ: return "z";
    case kL: return "l";
  }
  if (v >= kX0 && v < kY0) return "x" + std::to_string(v - kX0);
  return "y" + std::to_string(v - kY0);
}

// ---------------------------------------------------------------- Cyclotomic

int Cyclotomic::phi(int d) { return static_cast<int>(phi_poly(d).size()) - 1; }

Cyclotomic::Cyclotomic(int d, std::vector<mpq_class> c) : d_(d), c_(std::move(c)) { normalize(); }

void Cyclotomic::normalize() {
  if (d_ <= 2) {
    d_ = 1;
    c_.resize(1);
    return;
  }
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return;
  d_ = 1;
  c_.resize(1);
}

Cyclotomic Cyclotomic::lifted(int d) const {
  Cyclotomic r = *this;
  if (d_ == d) return r;
  r.d_ = d;
  r.c_.resize(phi(d));
  return r;
}

Cyclotomic Cyclotomic::zeta(int d, long k) {
  if (d < 1) throw ArithmeticError("bad conductor");
  k %= d;
  if (k < 0) k += d;
  if (d == 2) return Cyclotomic(k ? -1 : 1);
  QPoly p(k + 1);
  p[k] = 1;
  if (static_cast<int>(p.size()) < phi(d)) p.resize(phi(d));
  reduce_mod_phi(p, d);
  return Cyclotomic(d, p);
}

namespace {
int common_conductor(int a, int b) {
  if (a == b || b == 1) return a;
  if (a == 1) return b;
  throw ArithmeticError("mixed cyclotomic conductors " + std::to_string(a) + " and " + std::to_string(b));
}
}  // namespace

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.d_ == 1 && b.d_ == 1) return Cyclotomic(mpq_class(a.c_[0] + b.c_[0]));
  int d = common_conductor(a.d_, b.d_);
  Cyclotomic x = a.lifted(d), y = b.lifted(d);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  x.normalize();
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.d_ == b.d_) return a.c_ == b.c_;
  if (a.d_ == 1 || b.d_ == 1) return false;
  return (a - b).is_zero();
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.d_ == 1 && b.d_ == 1) return Cyclotomic(mpq_class(a.c_[0] * b.c_[0]));
  int d = common_conductor(a.d_, b.d_);
  if (a.d_ == 1 || b.d_ == 1) {
    const Cyclotomic& s = a.d_ == 1 ? a : b;
    Cyclotomic r = a.d_ == 1 ? b : a;
    for (auto& x : r.c_) x *= s.c_[0];
    r.normalize();
    return r;
  }
  QPoly p = qmul(a.c_, b.c_);
  if (static_cast<int>(p.size()) < Cyclotomic::phi(d)) p.resize(Cyclotomic::phi(d));
  reduce_mod_phi(p, d);
  return Cyclotomic(d, p);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (d_ == 1) return Cyclotomic(mpq_class(1 / c_[0]));
  // extended Euclid: s*a + t*f = 1 with f = Phi_d
  QPoly f;
  for (long c : phi_poly(d_)) f.push_back(mpq_class(c));
  QPoly r0 = f, r1 = c_, s0, s1{1};
  trim(r1);
  while (!(r1.size() == 1)) {
    QPoly q, r;
    qdivmod(r0, r1, q, r);
    QPoly s = qsub(s0, qmul(q, s1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
  }
  for (auto& x : s1) x /= r1[0];
  if (static_cast<int>(s1.size()) < phi(d_)) s1.resize(phi(d_));
  reduce_mod_phi(s1, d_);
  return Cyclotomic(d_, s1);
}

std::string Cyclotomic::str() const {
  if (d_ == 1) return c_[0].get_str();
  std::string out;
  for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
    const mpq_class& c = c_[k];
    if (sgn(c) == 0) continue;
    mpq_class a = abs(c);
    std::string body;
    std::string zk = "z{" + std::to_string(d_) + "}" + (k > 1 ? "^" + std::to_string(k) : "");
    if (k == 0)
      body = a.get_str();
    else if (a == 1)
      body = zk;
    else
      body = a.get_str() + "*" + zk;
    if (out.empty())
      out = (sgn(c) < 0 ? "-" : "") + body;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + body;
  }
  return out;
}

// ------------------------------------------------------------------ Monomial

std::string Monomial::str() const {
  std::string out;
  for (int v = 0; v < kNumVars; ++v) {
    if (!e[v]) continue;
    if (!out.empty()) out += "*";
    out += var_name(v);
    if (e[v] != 1) out += "^" + std::to_string(e[v]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------- Poly

Poly::Poly(const Cyclotomic& c) {
  if (!c.is_zero()) t_.emplace_back(Monomial{}, c);
}

Poly::Poly(const Monomial& m, const Cyclotomic& c) {
  if (!c.is_zero()) t_.emplace_back(m, c);
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  Poly r;
  for (auto& t : terms) {
    if (!r.t_.empty() && r.t_.back().first == t.first) {
      r.t_.back().second += t.second;
      if (r.t_.back().second.is_zero()) r.t_.pop_back();
    } else if (!t.second.is_zero()) {
      r.t_.push_back(std::move(t));
    }
  }
  return r;
}

Cyclotomic Poly::constant_term() const {
  for (const auto& t : t_)
    if (t.first.is_one()) return t.second;
  return Cyclotomic(0);
}

Monomial Poly::min_exponents() const {
  Monomial m;
  if (t_.empty()) return m;
  m = t_[0].first;
  for (const auto& t : t_)
    for (int i = 0; i < kNumVars; ++i) m.e[i] = std::min(m.e[i], t.first.e[i]);
  return m;
}

int Poly::degree_in(int v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : t_) {
    if (first || t.first.e[v] > d) d = t.first.e[v];
    first = false;
  }
  return d;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.t_.empty()) return b;
  if (b.t_.empty()) return a;
  Poly r;
  r.t_.reserve(a.t_.size() + b.t_.size());
  size_t i = 0, j = 0;
  while (i < a.t_.size() && j < b.t_.size()) {
    const auto& x = a.t_[i];
    const auto& y = b.t_[j];
    if (x.first > y.first) {
      r.t_.push_back(x);
      ++i;
    } else if (y.first > x.first) {
      r.t_.push_back(y);
      ++j;
    } else {
      Cyclotomic c = x.second + y.second;
      if (!c.is_zero()) r.t_.emplace_back(x.first, std::move(c));
      ++i;
      ++j;
    }
  }
  for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
  for (; j < b.t_.size(); ++j) r.t_.push_back(b.t_[j]);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.t_.empty() || b.t_.empty()) return Poly();
  if (b.t_.size() == 1) {
    Poly r = a.shifted(b.t_[0].first);
    return b.t_[0].second.is_one() ? r : r.scaled(b.t_[0].second);
  }
  if (a.t_.size() == 1) return b * a;
  std::vector<Poly::Term> out;
  out.reserve(a.t_.size() * b.t_.size());
  for (const auto& x : a.t_)
    for (const auto& y : b.t_) out.emplace_back(x.first * y.first, x.second * y.second);
  return Poly::from_terms(std::move(out));
}

Poly Poly::scaled(const Cyclotomic& c) const {
  if (c.is_zero()) return Poly();
  Poly r = *this;
  for (auto& t : r.t_) t.second *= c;
  // non-rational scaling can annihilate a coefficient only if c = 0
  return r;
}

Poly Poly::shifted(const Monomial& m) const {
  Poly r = *this;
  for (auto& t : r.t_) t.first = t.first * m;
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

bool try_divide(const Poly& a, const Poly& b, Poly& q) {
  if (b.is_zero()) throw ArithmeticError("division by zero");
  if (a.is_zero()) {
    q = Poly();
    return true;
  }
  if (b.is_monomial()) {
    q = a.shifted(b.t_[0].first.inverse()).scaled(b.t_[0].second.inverse());
    return true;
  }
  Monomial ma = a.min_exponents(), mb = b.min_exponents();
  Poly r = a.shifted(ma.inverse());
  Poly bb = b.shifted(mb.inverse());
  const Monomial& lm = bb.t_[0].first;
  Cyclotomic lc_inv = bb.t_[0].second.inverse();
  std::vector<Poly::Term> qt;
  size_t budget = 64 + 8 * a.size();
  while (!r.is_zero()) {
    if (!budget--) return false;
    const auto& lt = r.t_[0];
    if (!lm.divides(lt.first)) return false;
    Monomial m = lt.first * lm.inverse();
    Cyclotomic c = lt.second * lc_inv;
    qt.emplace_back(m, c);
    r -= bb.shifted(m).scaled(c);
  }
  Monomial shift = ma * mb.inverse();
  for (int v = kX0; v < kNumVars; ++v)
    for (const auto& t : qt)
      if (t.first.e[v] + shift.e[v] < 0) return false;
  q = Poly::from_terms(std::move(qt)).shifted(shift);
  return true;
}

namespace {

std::string term_body(const Monomial& m, const mpq_class& a) {
  if (m.is_one()) return a.get_str();
  if (a == 1) return m.str();
  return a.get_str() + "*" + m.str();
}

}  // namespace

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : t_) {
    bool neg = false;
    std::string body;
    if (c.is_rational()) {
      neg = sgn(c.rational()) < 0;
      body = term_body(m, abs(c.rational()));
    } else {
      body = "(" + c.str() + ")";
      if (!m.is_one()) body += "*" + m.str();
    }
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

Poly delta(int v) { return Poly::var(v) - Poly::var(v, -1); }

// -------------------------------------------------------------------- Scalar

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("division by zero");
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_ == Poly(1)) return;
  Poly q;
  bool laurent_den = den_.is_monomial();
  if (laurent_den)
    for (int v = kX0; v < kNumVars; ++v)
      if (den_.leading().first.e[v]) laurent_den = false;
  if (laurent_den || (num_.size() <= 4096 && try_divide(num_, den_, q))) {
    if (laurent_den) try_divide(num_, den_, q);
    num_ = std::move(q);
    den_ = Poly(1);
    return;
  }
  // move the Laurent part of den into num and strip common x/y factors
  Monomial md = den_.min_exponents(), mn = num_.min_exponents(), s;
  for (int v = 0; v < kNumVars; ++v)
    s.e[v] = is_laurent_var(v) ? md.e[v] : std::min(md.e[v], mn.e[v]);
  if (!s.is_one()) {
    Monomial inv = s.inverse();
    num_ = num_.shifted(inv);
    den_ = den_.shifted(inv);
  }
  Cyclotomic lc = den_.leading().second;
  if (!lc.is_one()) {
    Cyclotomic li = lc.inverse();
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    Scalar r;
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
    r.normalize();
    return r;
  }
  Scalar r;
  r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  Scalar r;
  if (a.den_ == b.num_ && !a.is_poly()) {
    r.num_ = a.num_;
    r.den_ = b.den_;
  } else if (b.den_ == a.num_ && !b.is_poly()) {
    r.num_ = b.num_;
    r.den_ = a.den_;
  } else {
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
  }
  r.normalize();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  return Scalar(den_, num_);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string Scalar::str() const {
  // clear negative exponents for display
  Monomial m;
  Monomial mn = num_.min_exponents(), md = den_.min_exponents();
  for (int v = 0; v < kNumVars; ++v) m.e[v] = static_cast<int16_t>(std::max(0, -std::min(mn.e[v], md.e[v])));
  Poly n = num_.shifted(m), d = den_.shifted(m);
  if (d == Poly(1)) return n.str();
  std::string ns = n.size() > 1 ? "(" + n.str() + ")" : n.str();
  bool atomic = d.is_monomial() && d.leading().second.is_one();
  if (atomic) {
    int factors = 0;
    for (auto x : d.leading().first.e) factors += x != 0;
    atomic = factors == 1;
  }
  return ns + "/" + (atomic ? d.str() : "(" + d.str() + ")");
}

// -------------------------------------------------------------- substitution

Scalar substitute(const Poly& p, const Bindings& b) {
  if (b.empty()) return Scalar(p);
  // group terms by their bound exponent vector
  std::map<std::vector<int>, std::vector<Poly::Term>> groups;
  std::vector<int> bound;
  for (const auto& [v, _] : b) bound.push_back(v);
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> key;
    Monomial rest = m;
    for (int v : bound) {
      key.push_back(m.e[v]);
      rest.e[v] = 0;
    }
    groups[key].emplace_back(rest, c);
  }
  std::map<std::pair<int, int>, Scalar> powers;
  auto power = [&](int v, int e) -> const Scalar& {
    auto it = powers.find({v, e});
    if (it != powers.end()) return it->second;
    return powers.emplace(std::make_pair(v, e), b.at(v).pow(e)).first->second;
  };
  Scalar out;
  for (auto& [key, terms] : groups) {
    Scalar f(Poly::from_terms(std::move(terms)));
    for (size_t i = 0; i < bound.size(); ++i)
      if (key[i]) f *= power(bound[i], key[i]);
    out += f;
  }
  return out;
}

Scalar substitute(const Scalar& s, const Bindings& b) {
  Scalar d = substitute(s.den(), b);
  if (d.is_zero()) throw ArithmeticError("denominator vanishes under substitution");
  return substitute(s.num(), b) / d;
}

// -------------------------------------------------------------------- parser

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  Scalar parse() {
    Scalar r = expr();
    skip();
    if (i_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return r;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  long integer() {
    skip();
    size_t st = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (st == i_) throw ParseError("expected integer", i_);
    return std::stol(std::string(s_.substr(st, i_ - st)));
  }

  Scalar expr() {
    Scalar r = term();
    for (;;) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }
  Scalar term() {
    Scalar r = factor();
    for (;;) {
      if (eat('*')) {
        r *= factor();
      } else if (eat('/')) {
        size_t at = i_;
        Scalar d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        r /= d;
      } else {
        return r;
      }
    }
  }
  Scalar factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    Scalar a = atom();
    if (eat('^')) {
      bool neg = eat('-');
      long e = integer();
      size_t at = i_;
      if (neg && a.is_zero()) throw ParseError("division by zero", at);
      a = a.pow(neg ? -e : e);
    }
    return a;
  }
  Scalar atom() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Scalar r = expr();
      if (!eat(')')) throw ParseError("expected ')'", i_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return Scalar(mpq_class(std::string(s_.substr(st, i_ - st))));
    }
    size_t st = i_;
    ++i_;
    switch (c) {
      case 'u': return Scalar::var(kU);
      case 'v': return Scalar::var(kV);
      case 'l': return Scalar::var(kL);
      case 'z':
        if (i_ < s_.size() && s_[i_] == '{') {
          ++i_;
          long d = integer();
          if (!eat('}')) throw ParseError("expected '}'", i_);
          if (d < 1 || d > kMaxD) throw ParseError("root of unity order out of range", st);
          return Scalar(Cyclotomic::zeta(static_cast<int>(d), 1));
        }
        return Scalar::var(kZ);
      case 'x':
      case 'y': {
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
          throw ParseError("expected index after '" + std::string(1, c) + "'", i_);
        long k = integer();
        if (k >= kMaxD) throw ParseError("parameter index out of range", st);
        return Scalar::var(c == 'x' ? var_x(static_cast<int>(k)) : var_y(static_cast<int>(k)));
      }
    }
    throw ParseError("unknown symbol '" + std::string(1, c) + "'", st);
  }

  std::string_view s_;
  size_t i_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace tlb
