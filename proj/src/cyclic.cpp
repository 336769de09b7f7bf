#include "tlb/cyclic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tlb {

namespace {

int mod(int a, int d) { return ((a % d) + d) % d; }

Scalar zeta(int d, long k) { return Scalar(Cyclotomic::zeta(d, mod(static_cast<int>(k % d), d))); }

Scalar U() { return Scalar::var(kU); }
Scalar V() { return Scalar::var(kV); }
Scalar du() { return Scalar(delta(kU)); }
Scalar dv() { return Scalar(delta(kV)); }

}  // namespace

// ------------------------------------------------------------ CyclicFunction

CyclicFunction::CyclicFunction(int d) : v_(d) {
  if (d < 1) throw std::invalid_argument("modulus must be positive");
}

CyclicFunction::CyclicFunction(std::vector<Scalar> values) : v_(std::move(values)) {
  if (v_.empty()) throw std::invalid_argument("modulus must be positive");
}

CyclicFunction CyclicFunction::delta(int d, int a) {
  CyclicFunction f(d);
  f.at(a) = Scalar(1);
  return f;
}

CyclicFunction CyclicFunction::one(int d) { return CyclicFunction(std::vector<Scalar>(d, Scalar(1))); }

CyclicFunction CyclicFunction::character(int d, int m) {
  CyclicFunction f(d);
  for (int k = 0; k < d; ++k) f.at(k) = zeta(d, static_cast<long>(m) * k);
  return f;
}

CyclicFunction CyclicFunction::symbolic_x(int d) {
  CyclicFunction f(d);
  f.at(0) = Scalar(1);
  for (int k = 1; k < d; ++k) f.at(k) = Scalar::var(var_x(k));
  return f;
}

CyclicFunction CyclicFunction::symbolic_y(int d) {
  CyclicFunction f(d);
  for (int k = 0; k < d; ++k) f.at(k) = Scalar::var(var_y(k));
  return f;
}

const Scalar& CyclicFunction::operator()(int k) const { return v_[mod(k, d())]; }
Scalar& CyclicFunction::at(int k) { return v_[mod(k, d())]; }

bool CyclicFunction::is_zero() const {
  for (const auto& s : v_)
    if (!s.is_zero()) return false;
  return true;
}

static void same_modulus(const CyclicFunction& a, const CyclicFunction& b) {
  if (a.d() != b.d()) throw std::invalid_argument("cyclic functions with different moduli");
}

CyclicFunction operator+(const CyclicFunction& a, const CyclicFunction& b) {
  same_modulus(a, b);
  CyclicFunction r(a.d());
  for (int k = 0; k < a.d(); ++k) r.at(k) = a(k) + b(k);
  return r;
}

CyclicFunction operator-(const CyclicFunction& a, const CyclicFunction& b) {
  same_modulus(a, b);
  CyclicFunction r(a.d());
  for (int k = 0; k < a.d(); ++k) r.at(k) = a(k) - b(k);
  return r;
}

CyclicFunction operator*(const Scalar& c, const CyclicFunction& f) {
  CyclicFunction r(f.d());
  for (int k = 0; k < f.d(); ++k) r.at(k) = c * f(k);
  return r;
}

CyclicFunction pointwise(const CyclicFunction& a, const CyclicFunction& b) {
  same_modulus(a, b);
  CyclicFunction r(a.d());
  for (int k = 0; k < a.d(); ++k) r.at(k) = a(k) * b(k);
  return r;
}

CyclicFunction convolve(const CyclicFunction& a, const CyclicFunction& b) {
  same_modulus(a, b);
  int d = a.d();
  CyclicFunction r(d);
  for (int x = 0; x < d; ++x) {
    Scalar s;
    for (int y = 0; y < d; ++y) s += a(y) * b(x - y);
    r.at(x) = s;
  }
  return r;
}

bool operator==(const CyclicFunction& a, const CyclicFunction& b) {
  if (a.d() != b.d()) return false;
  for (int k = 0; k < a.d(); ++k)
    if (!(a(k) == b(k))) return false;
  return true;
}

CyclicFunction CyclicFunction::fourier() const {
  int d = this->d();
  CyclicFunction r(d);
  for (int k = 0; k < d; ++k) {
    Scalar s;
    for (int y = 0; y < d; ++y) s += (*this)(y) * zeta(d, -static_cast<long>(k) * y);
    r.at(k) = s;
  }
  return r;
}

CyclicFunction CyclicFunction::inverse_fourier() const {
  int d = this->d();
  CyclicFunction r(d);
  for (int k = 0; k < d; ++k) {
    Scalar s;
    for (int m = 0; m < d; ++m) s += (*this)(m) * zeta(d, static_cast<long>(m) * k);
    r.at(k) = s * Scalar::ratio(1, d);
  }
  return r;
}

CyclicFunction CyclicFunction::substituted(const Bindings& b) const {
  CyclicFunction r(d());
  for (int k = 0; k < d(); ++k) r.at(k) = substitute((*this)(k), b);
  return r;
}

std::string CyclicFunction::str() const {
  std::string s = "[";
  for (int k = 0; k < d(); ++k) {
    if (k) s += ", ";
    s += v_[k].str();
  }
  return s + "]";
}

// ------------------------------------------------------------ functional forms

std::string variant_name(ESystemVariant v) {
  switch (v) {
    case ESystemVariant::UPlus2: return "coefficient u+2";
    case ESystemVariant::ZOnce: return "linear term with z";
    case ESystemVariant::ZSquared: return "linear term with z^2";
  }
  return "?";
}

FunctionalForms::FunctionalForms(Domain dom, CyclicFunction x, CyclicFunction y, Scalar z)
    : dom_(dom), d_(x.d()), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
  same_modulus(x_, y_);
}

CyclicFunction FunctionalForms::conv(const CyclicFunction& a, const CyclicFunction& b) const {
  return dom_ == Domain::Spatial ? convolve(a, b) : pointwise(a, b);
}

CyclicFunction FunctionalForms::one() const {
  return dom_ == Domain::Spatial ? CyclicFunction::one(d_) : Scalar(d_) * CyclicFunction::delta(d_, 0);
}

CyclicFunction FunctionalForms::assemble(const std::array<CyclicFunction, 6>& p) {
  Scalar u = U();
  return p[0] + u * (p[1] + p[2]) + (u * u) * (p[3] + p[4]) + u.pow(3) * p[5];
}

std::array<CyclicFunction, 6> FunctionalForms::A_parts() const {
  const auto &x = x_, &y = y_;
  const Scalar& z = z_;
  Scalar d(d_), zd = z / d, zz = z * z;
  CyclicFunction A1 = zd * conv(x, x) + (dv() * z / (d * d)) * conv(conv(x, y), one());
  CyclicFunction A2 = (Scalar(1) / (d * d)) * conv(conv(x, y), y) + du() * A1;
  CyclicFunction A3 = zz * x + (dv() * zz / d) * conv(y, one());
  CyclicFunction A4 = zd * conv(y, y) + du() * A3;
  CyclicFunction A6 = A3 + du() * A4;
  return {A1, A2, A3, A4, A4, A6};
}

std::array<CyclicFunction, 6> FunctionalForms::B_parts() const {
  const auto &x = x_, &y = y_;
  const Scalar& z = z_;
  Scalar d(d_), zd = z / d, zz = z * z;
  CyclicFunction B1 = zd * conv(x, y) + (du() * zz) * y + (dv() * z / (d * d)) * conv(conv(y, y), one()) +
                      (zz / d * dv() * du()) * conv(x, one()) +
                      (zz / d * dv() * dv() * du()) * conv(y, one());
  CyclicFunction B2 = zz * y + (zz / d * dv()) * conv(x, one()) + (zz / d * dv() * dv()) * conv(y, one()) + du() * B1;
  CyclicFunction B4 = B1 + du() * B2;
  CyclicFunction B6 = (Scalar(1) / (d * d)) * conv(conv(y, y), y) + (zd * du()) * conv(x, y) +
                      (du() * dv() * z / (d * d)) * conv(conv(y, y), one()) + du() * (B1 + B4);
  return {B1, B2, B2, B4, B4, B6};
}

CyclicFunction FunctionalForms::A() const { return assemble(A_parts()); }
CyclicFunction FunctionalForms::B() const { return assemble(B_parts()); }

CyclicFunction FunctionalForms::rb() const {
  Scalar u = U(), v = V(), d(d_);
  const auto &x = x_, &y = y_;
  CyclicFunction o = one();
  return conv(x, conv(x, o)) + (u * u * v * v) * conv(y, conv(y, o)) + (v * (u * u + 1)) * conv(x, conv(y, o)) +
         (d * z_ * u * (Scalar(1) + u * u * v * v)) * conv(x, o) +
         (d * z_ * (u.pow(3) * v.pow(3) + u * v)) * conv(y, o);
}

namespace {

std::pair<Scalar, Scalar> e_coefficients(ESystemVariant var, int dd, const Scalar& z) {
  Scalar u = U(), d(dd);
  Scalar c1 = var == ESystemVariant::UPlus2 ? d * z * u * (u + 2) : d * z * u * (u * u + 2);
  Scalar zz = var == ESystemVariant::ZSquared ? z * z : z;
  Scalar c2 = d * d * zz * u * u * (u * u + 1);
  return {c1, c2};
}

}  // namespace

CyclicFunction FunctionalForms::e_system(ESystemVariant v) const {
  auto [c1, c2] = e_coefficients(v, d_, z_);
  CyclicFunction xx = conv(x_, x_);
  return conv(x_, xx) + c1 * xx + c2 * x_;
}

CyclicFunction FunctionalForms::f_system(ESystemVariant v) const {
  auto [c1, c2] = e_coefficients(v, d_, z_);
  CyclicFunction xy = conv(x_, y_);
  return conv(x_, xy) + c1 * xy + c2 * y_;
}

// ------------------------------------------------------------ profiles

namespace {

std::set<int> parse_residues(const std::string& text, int d) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(' ') == std::string::npos) continue;
    size_t used = 0;
    int k = std::stoi(item, &used);
    if (k < 0 || k >= d) throw std::invalid_argument("residue " + item + " out of range for d = " + std::to_string(d));
    out.insert(k);
  }
  return out;
}

std::string residues_str(const std::set<int>& s) {
  std::string r;
  for (int k : s) {
    if (!r.empty()) r += ",";
    r += std::to_string(k);
  }
  return r;
}

bool disjoint(const std::set<int>& a, const std::set<int>& b) {
  for (int k : a)
    if (b.count(k)) return false;
  return true;
}

}  // namespace

SupportProfile SupportProfile::parse(const std::string& text, int d) {
  SupportProfile p;
  p.d = d;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ';')) {
    if (field.empty()) continue;
    auto eq = field.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("profile field without '=': " + field);
    std::string key = field.substr(0, eq);
    std::set<int> vals = parse_residues(field.substr(eq + 1), d);
    if (key == "sup1") p.sup1 = vals;
    else if (key == "sup2") p.sup2 = vals;
    else if (key == "y1") p.y1 = vals;
    else if (key == "y2") p.y2 = vals;
    else if (key == "y3") p.y3 = vals;
    else if (key == "y4") p.y4 = vals;
    else throw std::invalid_argument("unknown profile field: " + key);
  }
  return p;
}

std::string SupportProfile::str() const {
  return "sup1=" + residues_str(sup1) + ";sup2=" + residues_str(sup2) + ";y1=" + residues_str(y1) +
         ";y2=" + residues_str(y2) + ";y3=" + residues_str(y3) + ";y4=" + residues_str(y4);
}

std::string SupportProfile::validate() const {
  if (!disjoint(sup1, sup2)) return "sup1 and sup2 intersect";
  if (sup1.empty() && sup2.empty()) return "empty support";
  bool z1 = sup1.count(0) > 0, z2 = sup2.count(0) > 0;
  if (!z1 && !z2) return "0 must lie in sup1 or sup2";
  const std::set<int>* ys[] = {&y1, &y2, &y3, &y4};
  for (int i = 0; i < 4; ++i) {
    if (ys[i]->count(0)) return "0 cannot be in y" + std::to_string(i + 1);
    for (int j = i + 1; j < 4; ++j)
      if (!disjoint(*ys[i], *ys[j])) return "y" + std::to_string(i + 1) + " and y" + std::to_string(j + 1) + " intersect";
  }
  std::set<int> y12 = y1;
  y12.insert(y2.begin(), y2.end());
  if (z1) y12.insert(0);
  if (y12 != sup1) return z1 ? "y1, y2 and {0} must partition sup1" : "y1 and y2 must partition sup1";
  for (int k : y3)
    if (!sup2.count(k)) return "y3 must lie in sup2";
  for (int k : y4)
    if (!sup2.count(k)) return "y4 must lie in sup2";
  return "";
}

std::vector<int> SupportProfile::branches() const {
  if (sup1.count(0)) return {1, 2};
  if (sup2.count(0)) return {3, 4};
  return {};
}

std::vector<SupportProfile> enumerate_profiles(int d) {
  // label per nonzero residue: 0 absent, 1 sup1&y1, 2 sup1&y2, 3 sup2, 4 sup2&y3, 5 sup2&y4
  std::vector<SupportProfile> out;
  for (int zero_in = 1; zero_in <= 2; ++zero_in) {
    int count = 1;
    for (int k = 1; k < d; ++k) count *= 6;
    for (int code = 0; code < count; ++code) {
      SupportProfile p;
      p.d = d;
      (zero_in == 1 ? p.sup1 : p.sup2).insert(0);
      int c = code;
      for (int k = 1; k < d; ++k, c /= 6) {
        switch (c % 6) {
          case 0: break;
          case 1: p.sup1.insert(k); p.y1.insert(k); break;
          case 2: p.sup1.insert(k); p.y2.insert(k); break;
          case 3: p.sup2.insert(k); break;
          case 4: p.sup2.insert(k); p.y3.insert(k); break;
          case 5: p.sup2.insert(k); p.y4.insert(k); break;
        }
      }
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(), [](const SupportProfile& a, const SupportProfile& b) { return a.str() < b.str(); });
  return out;
}

// ------------------------------------------------------------ solutions

TraceParams Solution::params() const {
  TraceParams p;
  p.d = x.d();
  p.z = z;
  p.x = x.values();
  p.y = y.values();
  return p;
}

Scalar branch_constant(int branch) {
  Scalar u = U(), v = V();
  switch (branch) {
    case 1: return Scalar(-1) / v;
    case 2: return v;
    case 3: return -(u * u + 1) / v;
    case 4: return (v * v - 1) / v;
  }
  throw std::invalid_argument("branch must be 1..4");
}

Solution build_solution(const SupportProfile& p, int branch) {
  if (std::string why = p.validate(); !why.empty()) throw std::invalid_argument("invalid profile: " + why);
  auto allowed = p.branches();
  if (std::find(allowed.begin(), allowed.end(), branch) == allowed.end())
    throw std::invalid_argument("branch " + std::to_string(branch) + " incompatible with the location of 0");
  int d = p.d;
  Scalar u = U(), u2p1 = u * u + 1;
  Scalar z = Scalar(-1) / (u * Scalar(static_cast<long>(p.sup1.size())) + u * u2p1 * Scalar(static_cast<long>(p.sup2.size())));
  CyclicFunction xhat(d), yhat(d);
  Scalar dz = Scalar(d) * u * z;
  for (int m : p.sup1) xhat.at(m) = -dz;
  for (int m : p.sup2) xhat.at(m) = -dz * u2p1;
  yhat.at(0) = -dz * branch_constant(branch);
  for (int m : p.y1) yhat.at(m) = -dz;
  for (int m : p.y2) yhat.at(m) = dz;
  for (int m : p.y3) yhat.at(m) = -dz * u2p1;
  for (int m : p.y4) yhat.at(m) = dz * u2p1;
  Solution s{xhat.inverse_fourier(), yhat.inverse_fourier(), z};
  if (!(s.x(0) == Scalar(1))) throw std::logic_error("x(0) != 1 in built solution");
  s.x.at(0) = Scalar(1);
  return s;
}

bool FunctionalReport::ok() const {
  for (const auto& l : lines)
    if (!l.pass) return false;
  return true;
}

FunctionalReport verify_functional_system(const CyclicFunction& x, const CyclicFunction& y, const Scalar& z) {
  FunctionalForms f(FunctionalForms::Domain::Spatial, x, y, z);
  FunctionalReport r;
  auto add = [&](std::vector<CheckLine>& into, const std::string& label, const CyclicFunction& g) {
    CheckLine l{label, g.is_zero(), ""};
    if (!l.pass) l.detail = g.str();
    into.push_back(l);
  };
  add(r.lines, "A = 0", f.A());
  add(r.lines, "B = 0", f.B());
  add(r.lines, "Tr(r_B) = 0", f.rb());
  add(r.lines, "E-system", f.e_system(ESystemVariant::ZSquared));
  add(r.lines, "F-system", f.f_system(ESystemVariant::ZSquared));
  for (auto v : {ESystemVariant::UPlus2, ESystemVariant::ZOnce}) {
    add(r.variants, "E-system (" + variant_name(v) + ")", f.e_system(v));
    add(r.variants, "F-system (" + variant_name(v) + ")", f.f_system(v));
  }
  return r;
}

// ------------------------------------------------------------ univariate solve

UPoly to_upoly(const Scalar& s, int var) {
  if (s.den().degree_in(var) != 0 || s.den().min_exponents().e[var] != 0)
    throw std::invalid_argument("to_upoly: variable in denominator");
  std::map<int, std::vector<Poly::Term>> by_deg;
  for (const auto& [m, c] : s.num().terms()) {
    Monomial r = m;
    int k = r.e[var];
    if (k < 0) throw std::invalid_argument("to_upoly: negative exponent");
    r.e[var] = 0;
    by_deg[k].push_back({r, c});
  }
  UPoly p;
  for (auto& [k, terms] : by_deg) {
    if (static_cast<int>(p.size()) <= k) p.resize(k + 1);
    p[k] = Scalar(Poly::from_terms(terms), s.den());
  }
  return p;
}

namespace {

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly remainder(UPoly a, const UPoly& b) {
  trim(a);
  Scalar lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    Scalar q = a.back() * lead_inv;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Scalar eval(const UPoly& p, const Scalar& x) {
  Scalar r;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

}  // namespace

UPoly upoly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Scalar inv = a.back().inverse();
  for (auto& c : a) c = c * inv;
  return a;
}

std::string upoly_str(const UPoly& p, const std::string& var) {
  std::string s;
  for (size_t i = p.size(); i-- > 0;) {
    if (p[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + p[i].str() + ")";
    if (i >= 1) s += "*" + var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

PointSolve solve_point(int d, bool at_zero, const Scalar& X, const std::vector<Scalar>& candidates) {
  if (!at_zero && d < 2) throw std::invalid_argument("nonzero point needs d >= 2");
  const int Y = var_y(0);
  CyclicFunction xh(std::vector<Scalar>(d, X)), yh(std::vector<Scalar>(d, Scalar::var(Y)));
  FunctionalForms f(FunctionalForms::Domain::Fourier, xh, yh, Scalar::var(kZ));
  int k = at_zero ? 0 : 1;
  UPoly g = upoly_gcd(to_upoly(f.A()(k), Y), to_upoly(f.B()(k), Y));
  if (at_zero) g = upoly_gcd(g, to_upoly(f.rb()(k), Y));
  PointSolve r;
  r.gcd = g;
  UPoly prod{Scalar(1)};
  for (const auto& c : candidates) {
    if (!eval(g, c).is_zero()) continue;
    r.roots.push_back(c);
    UPoly next(prod.size() + 1);
    for (size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] += prod[i];
      next[i] -= prod[i] * c;
    }
    prod = next;
  }
  r.split = prod.size() == g.size();
  for (size_t i = 0; r.split && i < g.size(); ++i) r.split = prod[i] == g[i];
  return r;
}

}  // namespace tlb
