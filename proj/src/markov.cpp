#include "tlb/markov.hpp"

#include <stdexcept>

namespace tlb {

TraceParams TraceParams::symbolic(int d) {
  TraceParams p;
  p.d = d;
  p.z = Scalar::var(kZ);
  p.x.push_back(Scalar(1));
  for (int k = 1; k < d; ++k) p.x.push_back(Scalar::var(var_x(k)));
  for (int k = 0; k < d; ++k) p.y.push_back(Scalar::var(var_y(k)));
  return p;
}

Bindings TraceParams::bindings() const {
  Bindings b;
  if (!(z == Scalar::var(kZ))) b[kZ] = z;
  for (int k = 1; k < d; ++k)
    if (!(x[k] == Scalar::var(var_x(k)))) b[var_x(k)] = x[k];
  for (int k = 0; k < d; ++k)
    if (!(y[k] == Scalar::var(var_y(k)))) b[var_y(k)] = y[k];
  return b;
}

namespace {

Poly x_symbol(int k) { return k == 0 ? Poly(1) : Poly::var(var_x(k)); }

AlgebraElement restrict_monomial(const BasisMonomial& m, int d) {
  // (a_1..a_{n-1}, w') for w' fixing n
  int n = m.n();
  std::vector<int> a(m.a.begin(), m.a.begin() + (n - 1));
  std::vector<int> win = m.w.window();
  win.pop_back();
  return AlgebraElement::basis(d, BasisMonomial(a, SignedPermutation::from_window(win), d));
}

}  // namespace

const AlgebraElement& Tracer::loop_correction(int n) {
  auto it = correction_.find(n);
  if (it != correction_.end()) return it->second;
  Word w;
  for (int i = n - 1; i >= 1; --i) w.push_back(Letter::g(i));
  w.push_back(Letter::b());
  for (int i = 1; i <= n - 1; ++i) w.push_back(Letter::g_inv(i));
  AlgebraElement bn = AlgebraElement::from_word(n, d_, w);
  SignedPermutation rn = lift(NkFactor{n, n, true}, n);
  bn -= AlgebraElement::basis(d_, BasisMonomial(std::vector<int>(n, 0), rn, d_));
  return correction_.emplace(n, std::move(bn)).first->second;
}

const Poly& Tracer::monomial(const BasisMonomial& m) {
  auto it = memo_.find(m);
  if (it != memo_.end()) return it->second;
  Poly v = compute(m);
  return memo_.emplace(m, std::move(v)).first->second;
}

Poly Tracer::compute(const BasisMonomial& m) {
  int n = m.n();
  if (n == 0) return Poly(1);
  TopFactorization tf = top_factor(m.w);
  int an = m.a[n - 1];
  BasisMonomial base = m;
  base.w = tf.remainder;
  base.a[n - 1] = 0;
  AlgebraElement rest = restrict_monomial(base, d_);
  const NkFactor& f = tf.factor;
  if (f.p == n && !f.is_signed) return x_symbol(an) * symbolic(rest).num();
  if (f.p < n) {
    AlgebraElement e = rest.mul_word(coxeter_to_word(factor_word(NkFactor{n - 1, f.p, f.is_signed})));
    e = e.mul_generator(Letter::t(f.p, an));
    return Poly::var(kZ) * symbolic(e).num();
  }
  // T_{r_n} = b_n - (b_n - T_{r_n}); the correction has shorter terms
  Poly head = Poly::var(var_y(an)) * symbolic(rest).num();
  AlgebraElement low = AlgebraElement::basis(d_, base) * loop_correction(n);
  low = low.mul_generator(Letter::t(n, an));
  return head - symbolic(low).num();
}

Scalar Tracer::symbolic(const AlgebraElement& x) {
  if (x.d() != d_) throw std::invalid_argument("trace: modulus mismatch");
  Scalar s;
  for (const auto& [m, c] : x.terms()) s += c * Scalar(monomial(m));
  return s;
}

Scalar Tracer::operator()(const AlgebraElement& x, const TraceParams& p) {
  if (p.d != d_) throw std::invalid_argument("trace: modulus mismatch");
  return substitute(symbolic(x), p.bindings());
}

Scalar trace(const AlgebraElement& x, const TraceParams& p) {
  Tracer t(x.d());
  return t(x, p);
}

Scalar trace_of_word(const Word& w, int n, int d, const TraceParams& p) {
  return trace(AlgebraElement::from_word(n, d, w), p);
}

// ------------------------------------------------------------ annihilation

namespace {

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Monomial m = p.min_exponents();
  Monomial s;
  s.e[kU] = m.e[kU];
  s.e[kV] = m.e[kV];
  return p.shifted(s.inverse()).scaled(p.leading().second.inverse());
}

}  // namespace

IdealTraceTable::IdealTraceTable(QuotientKind kind, int n, int d) {
  if (n < 3) throw std::invalid_argument("annihilation check needs n >= 3");
  std::vector<IdealKind> gens = kind == QuotientKind::TLB ? std::vector{IdealKind::H12, IdealKind::HB}
                                                          : std::vector{IdealKind::R12, IdealKind::RB};
  if (kind == QuotientKind::TLB && d != 1) throw std::invalid_argument("TLB quotient needs d = 1");
  Tracer tr(d);
  auto perms = all_signed_permutations(n);
  auto basis = enumerate_basis(n, d);
  for (IdealKind g : gens) {
    AlgebraElement r = ideal_generator(g, n, d);
    std::map<SignedPermutation, AlgebraElement> products;
    for (const auto& w : perms) {
      BasisMonomial m(std::vector<int>(n, 0), w, d);
      products.emplace(w, AlgebraElement::basis(d, m) * r);
    }
    for (const auto& m : basis) {
      // t^a T_w r: shift the framings of T_w r by a
      const AlgebraElement& tw = products.at(m.w);
      Scalar s;
      for (const auto& [x, c] : tw.terms()) {
        BasisMonomial y = x;
        for (int i = 0; i < n; ++i) y.a[i] = static_cast<uint8_t>((y.a[i] + m.a[i]) % d);
        s += c * Scalar(tr.monomial(y));
      }
      if (!s.is_poly()) throw std::logic_error("symbolic trace with denominator");
      entries_.push_back({m, g, s.num()});
    }
  }
  std::map<Poly, size_t, bool (*)(const Poly&, const Poly&)> seen([](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const auto& x = a.terms();
    const auto& y = b.terms();
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i].first != y[i].first) return x[i].first < y[i].first;
      const auto& cx = x[i].second.coords();
      const auto& cy = y[i].second.coords();
      if (x[i].second.conductor() != y[i].second.conductor())
        return x[i].second.conductor() < y[i].second.conductor();
      for (size_t k = 0; k < cx.size(); ++k)
        if (cx[k] != cy[k]) return cx[k] < cy[k];
    }
    return false;
  });
  rep_of_.resize(entries_.size());
  for (size_t i = 0; i < entries_.size(); ++i) {
    Poly key = primitive_part(entries_[i].value);
    auto [it, inserted] = seen.emplace(key, reps_.size());
    if (inserted) reps_.push_back(i);
    rep_of_[i] = it->second;
  }
}

AnnihilationResult IdealTraceTable::check(const TraceParams& p) const {
  Bindings b = p.bindings();
  for (size_t k = 0; k < reps_.size(); ++k) {
    const Entry& e = entries_[reps_[k]];
    Scalar v = substitute(e.value, b);
    if (!v.is_zero()) {
      // report the first failing monomial in enumeration order
      for (size_t i = 0; i < entries_.size(); ++i)
        if (rep_of_[i] == k) {
          AnnihilationResult r;
          r.ok = false;
          r.witness = entries_[i].m;
          r.generator = entries_[i].r;
          r.value = substitute(entries_[i].value, b);
          return r;
        }
    }
  }
  return {};
}

AnnihilationResult annihilates_ideal(QuotientKind kind, int n, int d, const TraceParams& p) {
  return IdealTraceTable(kind, n, d).check(p);
}

}  // namespace tlb
