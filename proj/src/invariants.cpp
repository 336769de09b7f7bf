#include "tlb/invariants.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tlb {

int BraidWord::epsilon() const {
  int e = 0;
  for (const auto& l : letters) {
    if (l.kind == Letter::G) ++e;
    if (l.kind == Letter::GInv) --e;
  }
  return e;
}

std::string BraidWord::str() const {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    switch (l.kind) {
      case Letter::G: out += "s" + std::to_string(l.index); break;
      case Letter::GInv: out += "s" + std::to_string(l.index) + "^-1"; break;
      case Letter::B: out += "r1"; break;
      case Letter::BInv: out += "r1^-1"; break;
      case Letter::T: out += "t" + std::to_string(l.index) + "^" + std::to_string(l.power); break;
    }
  }
  return out;
}

AlgebraElement BraidWord::image() const { return AlgebraElement::from_word(n, d, letters); }

namespace {

// reads a (possibly signed) integer at pos; false when none
bool read_int(const std::string& s, size_t& pos, long& out) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  size_t digits = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits) {
    pos = start;
    return false;
  }
  out = std::stol(s.substr(start, pos - start));
  return true;
}

}  // namespace

BraidWord parse_braid(const std::string& text, int n, int d) {
  if (n < 1) throw std::invalid_argument("braid needs n >= 1");
  if (d < 1 || d > kMaxD) throw std::invalid_argument("framing modulus out of range");
  BraidWord w{n, d, {}};
  size_t pos = 0;
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    size_t start = pos;
    char c = text[pos++];
    long idx = 0, power = 1;
    if (c != 's' && c != 'r' && c != 't') throw ParseError("unknown token", start);
    if (!read_int(text, pos, idx) || text[start + 1] == '-' || text[start + 1] == '+')
      throw ParseError("expected generator index", start + 1);
    bool has_power = pos < text.size() && text[pos] == '^';
    if (has_power) {
      size_t ppos = ++pos;
      if (!read_int(text, pos, power)) throw ParseError("expected exponent", ppos);
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError("unexpected character", pos);
    if (c == 's') {
      if (idx < 1 || idx >= n) throw ParseError("index out of range", start);
      if (has_power && power != 1 && power != -1) throw ParseError("exponent must be 1 or -1", start);
      w.letters.push_back(power == 1 ? Letter::g(static_cast<int>(idx)) : Letter::g_inv(static_cast<int>(idx)));
    } else if (c == 'r') {
      if (idx != 1) throw ParseError("index out of range", start);
      if (has_power && power != 1 && power != -1) throw ParseError("exponent must be 1 or -1", start);
      w.letters.push_back(power == 1 ? Letter::b() : Letter::b_inv());
    } else {
      if (d == 1) throw ParseError("framing letter with d = 1", start);
      if (idx < 1 || idx > n) throw ParseError("index out of range", start);
      if (!has_power) throw ParseError("framing letter needs an exponent", pos);
      int k = static_cast<int>(((power % d) + d) % d);
      w.letters.push_back(Letter::t(static_cast<int>(idx), k));
    }
  }
  return w;
}

std::string kind_name(InvariantKind k) {
  switch (k) {
    case InvariantKind::PB: return "pb";
    case InvariantKind::VB: return "vb";
    case InvariantKind::XB: return "xb";
    case InvariantKind::RhoB: return "rhob";
  }
  return "";
}

InvariantKind parse_kind(const std::string& s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "pb") return InvariantKind::PB;
  if (t == "vb") return InvariantKind::VB;
  if (t == "xb") return InvariantKind::XB;
  if (t == "rhob" || t == "rho") return InvariantKind::RhoB;
  throw std::invalid_argument("unknown invariant kind '" + s + "' (pb, vb, xb, rhob)");
}

SupportProfile InvariantSpec::rho_profile() const {
  SupportProfile p;
  p.d = d;
  p.sup2 = S;
  p.y3 = y3;
  p.y4 = y4;
  return p;
}

std::string InvariantSpec::validate() const {
  if (d < 1 || d > kMaxD) return "d out of range";
  bool classical = kind == InvariantKind::PB || kind == InvariantKind::VB;
  if (classical && d != 1) return kind_name(kind) + " needs d = 1";
  if (classical) return "";
  if (S.empty()) return "S must be nonempty";
  for (int k : S)
    if (k < 0 || k >= d) return "S element out of range";
  if (kind == InvariantKind::RhoB) {
    if (!S.count(0)) return "rhob needs 0 in S";
    return rho_profile().validate();
  }
  if (!y3.empty() || !y4.empty()) return "y3/y4 apply to rhob only";
  return "";
}

Scalar reduce_ell(const Scalar& s, const Scalar& lambda) {
  if (s.den().degree_in(kL) != 0)
    throw std::invalid_argument("reduce_ell: ell in denominator");
  std::map<int, std::vector<Poly::Term>> by_q;
  for (const auto& [m, c] : s.num().terms()) {
    int e = m.e[kL];
    int r = ((e % 2) + 2) % 2;
    int q = (e - r) / 2;
    Monomial k = m;
    k.e[kL] = static_cast<int16_t>(r);
    by_q[q].push_back({k, c});
  }
  Scalar out;
  for (auto& [q, terms] : by_q) out += Scalar(Poly::from_terms(std::move(terms))) * lambda.pow(q);
  return out / Scalar(s.den());
}

InvariantEvaluator::InvariantEvaluator(const InvariantSpec& spec) : spec_(spec), tracer_(spec.d) {
  if (std::string why = spec.validate(); !why.empty()) throw std::invalid_argument("invalid invariant spec: " + why);
  Scalar u = Scalar::var(kU), v = Scalar::var(kV), z = Scalar::var(kZ), ell = Scalar::var(kL);
  Scalar du(delta(kU));
  int d = spec.d;
  switch (spec.kind) {
    case InvariantKind::PB:
      params_ = TraceParams::symbolic(1);
      lambda_ = (z - du) / z;
      prefactor_ = (Scalar(1) - lambda_) / (ell * du);
      formal_ = true;
      break;
    case InvariantKind::XB: {
      Scalar E = Scalar(1) / Scalar(static_cast<long>(spec.S.size()));
      params_ = TraceParams::symbolic(d);
      for (int k = 0; k < d; ++k) {
        Scalar xk, yk;
        for (int m : spec.S) {
          Scalar w(Cyclotomic::zeta(d, static_cast<long>(m) * k));
          xk += w;
          yk += w * Scalar::var(var_y(m));
        }
        params_.x[k] = xk * E;
        params_.y[k] = yk;
      }
      if (!(params_.x[0] == Scalar(1))) throw std::invalid_argument("x_0 != 1");
      params_.x[0] = Scalar(1);
      lambda_ = (z - du * E) / z;
      prefactor_ = (Scalar(1) - lambda_) / (ell * du * E);
      formal_ = true;
      break;
    }
    case InvariantKind::VB:
      params_ = TraceParams::symbolic(1);
      params_.z = Scalar(-1) / (u * (u * u + 1));
      params_.y[0] = (v * v - 1) / ((u * u + 1) * v);
      lambda_ = u.pow(4);
      prefactor_ = -(u * u + 1) / u;
      formal_ = false;
      break;
    case InvariantKind::RhoB: {
      Solution s = build_solution(spec.rho_profile(), 4);
      params_ = s.params();
      lambda_ = u.pow(4);
      prefactor_ = -(u * u + 1) * Scalar(static_cast<long>(spec.S.size())) / u;
      formal_ = false;
      break;
    }
  }
}

Scalar InvariantEvaluator::sqrt_lambda() const { return formal_ ? Scalar::var(kL) : Scalar::var(kU, 2); }

Scalar InvariantEvaluator::normalize(const Scalar& s) const { return formal_ ? reduce_ell(s, lambda_) : s; }

Scalar InvariantEvaluator::trace(const BraidWord& w) {
  if (w.d != spec_.d) throw std::invalid_argument("braid modulus does not match the invariant");
  return tracer_(w.image(), params_);
}

Scalar InvariantEvaluator::operator()(const BraidWord& w) {
  Scalar t = trace(w);
  return normalize(prefactor_.pow(w.n - 1) * sqrt_lambda().pow(w.epsilon()) * t);
}

Scalar evaluate(const BraidWord& w, const InvariantSpec& spec) {
  InvariantEvaluator ev(spec);
  return ev(w);
}

namespace {

BraidWord inserted(const BraidWord& base, int pos, const Word& w) {
  BraidWord out = base;
  out.letters.insert(out.letters.begin() + pos, w.begin(), w.end());
  return out;
}

}  // namespace

SkeinReport verify_skein(InvariantEvaluator& ev, const BraidWord& base, const SkeinSite& site) {
  if (site.position < 0 || site.position > static_cast<int>(base.letters.size()))
    throw std::invalid_argument("skein site position out of range");
  if (site.index < 0 || site.index >= base.n) throw std::invalid_argument("skein site index out of range");
  int d = base.d;
  Scalar D(d);
  SkeinReport r;
  Scalar sum;
  if (site.index > 0) {
    int i = site.index;
    Scalar ell = ev.sqrt_lambda();
    Scalar plus = ev(inserted(base, site.position, {Letter::g(i)}));
    Scalar minus = ev(inserted(base, site.position, {Letter::g_inv(i)}));
    for (int s = 0; s < d; ++s) sum += ev(inserted(base, site.position, {Letter::t(i, s), Letter::t(i + 1, (d - s) % d)}));
    r.lhs = ev.normalize(ell.inverse() * plus - ell * minus);
    r.rhs = ev.normalize(Scalar(delta(kU)) / D * sum);
    r.relation = "crossing at s" + std::to_string(i);
  } else {
    Scalar plus = ev(inserted(base, site.position, {Letter::b()}));
    Scalar minus = ev(inserted(base, site.position, {Letter::b_inv()}));
    for (int s = 0; s < d; ++s) sum += ev(inserted(base, site.position, {Letter::t(1, s)}));
    r.lhs = plus - minus;
    r.rhs = Scalar(delta(kV)) / D * sum;
    r.relation = "loop crossing";
  }
  r.ok = r.lhs == r.rhs;
  return r;
}

namespace {

Letter inverse_letter(const Letter& l, int d) {
  switch (l.kind) {
    case Letter::G: return Letter::g_inv(l.index);
    case Letter::GInv: return Letter::g(l.index);
    case Letter::B: return Letter::b_inv();
    case Letter::BInv: return Letter::b();
    case Letter::T: return Letter::t(l.index, (d - l.power) % d);
  }
  return l;
}

Letter random_letter(int n, int d, std::mt19937_64& rng) {
  std::vector<int> kinds;
  if (n >= 2) kinds.push_back(0);
  kinds.push_back(1);
  if (d > 1) kinds.push_back(2);
  int k = kinds[std::uniform_int_distribution<size_t>(0, kinds.size() - 1)(rng)];
  bool inv = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
  if (k == 0) {
    int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
    return inv ? Letter::g_inv(i) : Letter::g(i);
  }
  if (k == 1) return inv ? Letter::b_inv() : Letter::b();
  int j = std::uniform_int_distribution<int>(1, n)(rng);
  return Letter::t(j, std::uniform_int_distribution<int>(1, d - 1)(rng));
}

}  // namespace

BraidWord random_braid(int n, int d, int length, std::mt19937_64& rng) {
  BraidWord w{n, d, {}};
  for (int i = 0; i < length; ++i) w.letters.push_back(random_letter(n, d, rng));
  return w;
}

MarkovReport verify_markov(InvariantEvaluator& ev, const BraidWord& word, int trials, uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  std::mt19937_64 rng(seed);
  MarkovReport r;
  Scalar base = ev(word);
  auto check = [&](const BraidWord& w, const std::string& what) {
    ++r.checks;
    if (r.ok && !(ev(w) == base)) {
      r.ok = false;
      r.failure = what + ": " + w.str();
    }
  };
  for (int t = 0; t < trials; ++t) {
    int len = std::uniform_int_distribution<int>(1, 3)(rng);
    Word c;
    for (int i = 0; i < len; ++i) c.push_back(random_letter(word.n, word.d, rng));
    BraidWord conj = word;
    conj.letters.insert(conj.letters.begin(), c.begin(), c.end());
    for (auto it = c.rbegin(); it != c.rend(); ++it) conj.letters.push_back(inverse_letter(*it, word.d));
    check(conj, "conjugation");
  }
  for (bool positive : {true, false}) {
    BraidWord s = word;
    s.n = word.n + 1;
    s.letters.push_back(positive ? Letter::g(word.n) : Letter::g_inv(word.n));
    check(s, positive ? "positive stabilization" : "negative stabilization");
  }
  return r;
}

}  // namespace tlb
