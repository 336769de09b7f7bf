#include "tlb/suites.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "tlb/cyclic.hpp"
#include "tlb/invariants.hpp"
#include "tlb/oracle.hpp"

namespace tlb {

namespace {

Scalar U() { return Scalar::var(kU); }
Scalar V() { return Scalar::var(kV); }
Scalar Z() { return Scalar::var(kZ); }

std::string dsuffix(int d) { return " [d=" + std::to_string(d) + "]"; }

CheckLine line(std::string label, bool pass, std::string detail = "", bool info = false) {
  return CheckLine{std::move(label), pass, std::move(detail), info};
}

CheckLine equality(std::string label, const Scalar& got, const Scalar& want) {
  bool ok = got == want;
  return line(std::move(label), ok, ok ? "" : "got " + got.str() + ", expected " + want.str());
}

TraceParams tlb_params(const Scalar& z, const Scalar& y) {
  TraceParams p;
  p.d = 1;
  p.z = z;
  p.x = {Scalar(1)};
  p.y = {y};
  return p;
}

struct SpecSet {
  InvariantKind kind;
  std::vector<InvariantSpec> specs;
};

std::vector<SpecSet> invariant_specs() {
  auto make = [](InvariantKind k, int d, std::set<int> S, std::set<int> y3 = {}) {
    InvariantSpec s;
    s.kind = k;
    s.d = d;
    s.S = std::move(S);
    s.y3 = std::move(y3);
    std::string err = s.validate();
    if (!err.empty()) throw std::logic_error("invalid invariant spec: " + err);
    return s;
  };
  return {
      {InvariantKind::PB, {make(InvariantKind::PB, 1, {0})}},
      {InvariantKind::VB, {make(InvariantKind::VB, 1, {0})}},
      {InvariantKind::XB,
       {make(InvariantKind::XB, 1, {0}), make(InvariantKind::XB, 2, {0, 1}), make(InvariantKind::XB, 3, {0, 2})}},
      {InvariantKind::RhoB,
       {make(InvariantKind::RhoB, 1, {0}), make(InvariantKind::RhoB, 2, {0, 1}, {1}),
        make(InvariantKind::RhoB, 3, {0, 2}, {2})}},
  };
}

std::string spec_str(const InvariantSpec& s) {
  std::ostringstream os;
  os << kind_name(s.kind) << " d=" << s.d << " S={";
  bool first = true;
  for (int k : s.S) {
    os << (first ? "" : ",") << k;
    first = false;
  }
  os << "}";
  return os.str();
}

bool same_set(const std::vector<Scalar>& got, const std::vector<Scalar>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    bool found = false;
    for (const auto& g : got) found = found || g == w;
    if (!found) return false;
  }
  return true;
}

std::string list_str(const std::vector<Scalar>& xs) {
  std::string s = "{";
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].str();
  return s + "}";
}

}  // namespace

bool all_pass(const std::vector<CheckLine>& lines) {
  for (const auto& l : lines)
    if (!l.informational && !l.pass) return false;
  return true;
}

std::vector<CheckLine> check_hecke_ideal_traces() {
  Scalar u = U(), v = V(), z = Z(), y = Scalar::var(var_y(0));
  auto p = TraceParams::symbolic(1);
  std::vector<CheckLine> out;
  Scalar want12 = (u * u + 1) * (u * z) * (u * z) + (u * u + 2) * u * z + 1;
  out.push_back(equality("tau(h12) on H_3", trace(ideal_generator(IdealKind::H12, 3, 1), p), want12));
  Scalar wantB = u * u * v * v * y * y + (u * v + u.pow(3) * v.pow(3)) * z * y + (v + u * u * v) * y +
                 (u + u.pow(3) * v * v) * z + 1;
  out.push_back(equality("tau(hB) on H_2", trace(ideal_generator(IdealKind::HB, 2, 1), p), wantB));
  out.push_back(equality("tau(hB) on H_3", trace(ideal_generator(IdealKind::HB, 3, 1), p), wantB));
  return out;
}

std::vector<CheckLine> check_absorption(int d) {
  const int n = 3;
  std::vector<CheckLine> out;
  auto absorb = [&](const std::string& name, const Letter& g, const std::string& gname, const AlgebraElement& r,
                    const Scalar& c) {
    AlgebraElement x = AlgebraElement::from_word(n, d, {g});
    AlgebraElement want = c * r;
    bool left = x * r == want, right = r * x == want;
    std::string detail;
    if (!left) detail += "left product differs";
    if (!right) detail += std::string(detail.empty() ? "" : "; ") + "right product differs";
    out.push_back(line(gname + " " + name + " = " + name + " " + gname + " = " + c.str() + " " + name + dsuffix(d),
                       left && right, detail));
  };
  Scalar u = U(), v = V();
  if (d == 1) {
    AlgebraElement h12 = ideal_generator(IdealKind::H12, n, 1), hB = ideal_generator(IdealKind::HB, n, 1);
    absorb("h12", Letter::g(1), "g1", h12, u);
    absorb("h12", Letter::g(2), "g2", h12, u);
    absorb("hB", Letter::b(), "b1", hB, v);
    absorb("hB", Letter::g(1), "g1", hB, u);
  }
  AlgebraElement r12 = ideal_generator(IdealKind::R12, n, d), rB = ideal_generator(IdealKind::RB, n, d);
  absorb("r12", Letter::g(1), "g1", r12, u);
  absorb("r12", Letter::g(2), "g2", r12, u);
  absorb("rB", Letter::b(), "b1", rB, v);
  absorb("rB", Letter::g(1), "g1", rB, u);
  return out;
}

std::vector<CheckLine> check_loop_ideal_traces() {
  Scalar u = U(), v = V(), z = Z(), y = Scalar::var(var_y(0));
  auto p = TraceParams::symbolic(1);
  AlgebraElement h12 = ideal_generator(IdealKind::H12, 3, 1);
  std::vector<CheckLine> out;

  AlgebraElement w1 = AlgebraElement::from_word(3, 1, {Letter::b(), Letter::g(1), Letter::b()}) * h12;
  Scalar want1 = u * (1 + u * z + u.pow(3) * z) * (v * y * y + u * (v + (v * v - 1) * y) * z) / v;
  out.push_back(equality("tau(b1 h1 b1 h12)", trace(w1, p), want1));

  AlgebraElement w2 = AlgebraElement::from_word(
                          3, 1, {Letter::b(), Letter::g(1), Letter::b(), Letter::g(2), Letter::g(1), Letter::b()}) *
                      h12;
  Scalar want2 = u.pow(3) *
                 (v * v * y.pow(3) + u * (2 + u * u) * v * y * (v + (v * v - 1) * y) * z +
                  u * u * (1 + u * u) * (y + v * (v * v - 1) * (1 + v * y)) * z * z) /
                 (v * v);
  out.push_back(equality("tau(b1 h1 b1 h2 h1 b1 h12)", trace(w2, p), want2));
  return out;
}

std::vector<CheckLine> check_tlb_parameters() {
  Scalar u = U(), v = V(), w = u * (1 + u * u);
  IdealTraceTable table(QuotientKind::TLB, 3, 1);
  std::vector<CheckLine> out;
  struct Pair {
    std::string name;
    Scalar z, y;
  };
  std::vector<Pair> good = {
      {"z = -1/u, y = -1/v", Scalar(-1) / u, Scalar(-1) / v},
      {"z = -1/u, y = v", Scalar(-1) / u, v},
      {"z = -1/(u(1+u^2)), y = -1/v", Scalar(-1) / w, Scalar(-1) / v},
      {"z = -1/(u(1+u^2)), y = (v^2-1)/((1+u^2)v)", Scalar(-1) / w, (v * v - 1) / ((1 + u * u) * v)},
  };
  for (const auto& g : good) {
    auto r = table.check(tlb_params(g.z, g.y));
    std::string detail;
    if (!r.ok) detail = "nonzero on " + r.witness->str() + ": " + r.value.str();
    out.push_back(line(g.name + " annihilates <h12, hB> on H_3", r.ok, detail));
  }
  std::vector<Pair> bad = {
      {"symbolic z, y", Z(), Scalar::var(var_y(0))},
      {"z = -1/u, y = (v^2-1)/((1+u^2)v)", Scalar(-1) / u, (v * v - 1) / ((1 + u * u) * v)},
      {"z = -1/(u(1+u^2)), y = v", Scalar(-1) / w, v},
      {"z = -1/u, y = 1/v", Scalar(-1) / u, Scalar(1) / v},
      {"z = 1/u, y = -1/v", Scalar(1) / u, Scalar(-1) / v},
      {"z = -1/u, symbolic y", Scalar(-1) / u, Scalar::var(var_y(0))},
      {"z = 2, y = 3", Scalar(2), Scalar(3)},
  };
  std::vector<std::string> passed;
  for (const auto& b : bad)
    if (table.check(tlb_params(b.z, b.y)).ok) passed.push_back(b.name);
  std::string detail;
  for (const auto& s : passed) detail += (detail.empty() ? "annihilates: " : "; ") + s;
  out.push_back(line(std::to_string(bad.size()) + " other pairs fail to annihilate", passed.empty(), detail));
  return out;
}

std::vector<CheckLine> check_ideal_trace_forms(int d) {
  std::vector<CheckLine> out;
  for (auto& l : reduced_trace_checks(d))
    if (l.label.rfind("Tr(", 0) == 0) out.push_back(std::move(l));
  return out;
}

std::vector<CheckLine> check_step_forms(int d) {
  std::vector<CheckLine> out;
  for (auto& l : reduced_trace_checks(d))
    if (l.label.rfind("Tr(", 0) != 0) out.push_back(std::move(l));
  return out;
}

std::vector<CheckLine> check_point_solutions(int d) {
  Scalar u = U(), v = V(), z = Z(), D(d);
  Scalar duz = D * u * z, w = u * u + 1;
  std::vector<Scalar> candidates = {
      Scalar(0), duz, -duz, duz * w, -duz * w, duz / v, -duz * v, D * (u + u.pow(3)) * z / v,
      (duz - duz * v * v) / v, -duz / v, duz * v, D * z, -D * z, duz * u, -duz * w / v, Scalar(1), -v, v};
  struct Case {
    std::string name;
    bool at_zero;
    Scalar X;
    std::vector<Scalar> want;
  };
  std::vector<Case> cases;
  if (d > 1) {
    cases.push_back({"k in Sup1 \\ {0}", false, -duz, {-duz, duz}});
    cases.push_back({"k in Sup2 \\ {0}", false, -duz * w, {Scalar(0), -duz * w, duz * w}});
  }
  cases.push_back({"k = 0 in Sup1", true, -duz, {duz / v, -duz * v}});
  cases.push_back({"k = 0 in Sup2", true, -duz * w, {D * (u + u.pow(3)) * z / v, (duz - duz * v * v) / v}});
  std::vector<CheckLine> out;
  for (const auto& c : cases) {
    auto r = solve_point(d, c.at_zero, c.X, candidates);
    bool ok = r.split && same_set(r.roots, c.want);
    std::string detail = "gcd " + upoly_str(r.gcd, "Y");
    if (!ok) detail += ", roots " + list_str(r.roots) + (r.split ? "" : ", does not split");
    out.push_back(line("admitted yhat at " + c.name + " is " + list_str(c.want) + dsuffix(d), ok, detail));
  }
  return out;
}

std::vector<CheckLine> check_ftlb_solutions(int d) {
  std::vector<CheckLine> out;
  IdealTraceTable table(QuotientKind::FTLB, 3, d);
  auto profiles = enumerate_profiles(d);
  int pairs = 0, fs_bad = 0, an_bad = 0, disagree = 0;
  std::string fs_first, an_first;
  std::map<std::string, std::pair<int, int>> variants;  // label -> (holds, total)
  int flipped_total = 0, flipped_ok = 0;
  for (const auto& p : profiles) {
    for (int br : p.branches()) {
      ++pairs;
      Solution s = build_solution(p, br);
      auto fr = verify_functional_system(s.x, s.y, s.z);
      auto an = table.check(s.params());
      if (!fr.ok()) {
        ++fs_bad;
        if (fs_first.empty()) fs_first = p.str() + " branch " + std::to_string(br);
      }
      if (!an.ok) {
        ++an_bad;
        if (an_first.empty()) an_first = p.str() + " branch " + std::to_string(br) + " at " + an.witness->str();
      }
      if (fr.ok() != an.ok) ++disagree;
      for (const auto& l : fr.variants) {
        auto& [holds, total] = variants[l.label];
        holds += l.pass;
        ++total;
      }
      if (br == 1) {
        // the chi_0 coefficient with the opposite sign
        Scalar c = Scalar(1) / V();
        CyclicFunction yhat = s.y.fourier();
        yhat.at(0) = -Scalar(d) * U() * s.z * c;
        s.y = yhat.inverse_fourier();
        ++flipped_total;
        flipped_ok += table.check(s.params()).ok;
      }
    }
  }
  std::string tag = std::to_string(pairs) + " profile/branch pairs";
  out.push_back(line(std::to_string(profiles.size()) + " support profiles enumerated" + dsuffix(d), !profiles.empty()));
  out.push_back(line("functional system holds for " + tag + dsuffix(d), fs_bad == 0,
                     fs_bad ? std::to_string(fs_bad) + " fail, first " + fs_first : ""));
  out.push_back(line("parameters annihilate <r12, rB> on Y_{d,3} for " + tag + dsuffix(d), an_bad == 0,
                     an_bad ? std::to_string(an_bad) + " fail, first " + an_first : ""));
  out.push_back(line("functional and ideal routes agree" + dsuffix(d), disagree == 0,
                     disagree ? std::to_string(disagree) + " disagreements" : ""));
  out.push_back(line("symbolic parameters do not annihilate" + dsuffix(d), !table.check(TraceParams::symbolic(d)).ok));
  for (const auto& [label, c] : variants)
    out.push_back(line(label + " for all solutions" + dsuffix(d), c.first == c.second,
                       std::to_string(c.first) + "/" + std::to_string(c.second) + " hold", true));
  out.push_back(line("chi_0 coefficient +1/v in the first branch annihilates" + dsuffix(d),
                     flipped_total > 0 && flipped_ok == flipped_total,
                     std::to_string(flipped_ok) + "/" + std::to_string(flipped_total) + " annihilate", true));
  return out;
}

std::vector<CheckLine> check_skein(int sites, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckLine> out;
  for (const auto& set : invariant_specs()) {
    std::vector<InvariantEvaluator> evs;
    for (const auto& s : set.specs) evs.emplace_back(s);
    int crossing = 0, loop = 0, bad = 0;
    std::string first;
    for (int i = 0; i < sites; ++i) {
      auto& ev = evs[i % evs.size()];
      int n = 1 + static_cast<int>(rng() % 3);
      int len = static_cast<int>(rng() % 7);
      BraidWord w = random_braid(n, ev.spec().d, len, rng);
      SkeinSite site{static_cast<int>(rng() % (w.letters.size() + 1)), static_cast<int>(rng() % n)};
      (site.index == 0 ? loop : crossing)++;
      auto r = verify_skein(ev, w, site);
      if (!r.ok) {
        ++bad;
        if (first.empty())
          first = spec_str(ev.spec()) + " n=" + std::to_string(n) + " '" + w.str() + "' site " +
                  std::to_string(site.position) + "/" + std::to_string(site.index) + ": " + r.relation;
      }
    }
    out.push_back(line(kind_name(set.kind) + " skein relations on " + std::to_string(sites) + " sites (" +
                           std::to_string(crossing) + " crossing, " + std::to_string(loop) + " loop)",
                       bad == 0, bad ? std::to_string(bad) + " fail, first " + first : ""));
  }
  return out;
}

std::vector<CheckLine> check_markov(int words, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckLine> out;
  for (const auto& set : invariant_specs()) {
    std::vector<InvariantEvaluator> evs;
    for (const auto& s : set.specs) evs.emplace_back(s);
    int checks = 0, bad = 0;
    std::string first;
    for (int i = 0; i < words; ++i) {
      auto& ev = evs[i % evs.size()];
      int n = 1 + static_cast<int>(rng() % 3);
      BraidWord w = random_braid(n, ev.spec().d, static_cast<int>(rng() % 7), rng);
      auto r = verify_markov(ev, w, 2, rng());
      checks += r.checks;
      if (!r.ok) {
        ++bad;
        if (first.empty()) first = spec_str(ev.spec()) + " '" + w.str() + "': " + r.failure;
      }
    }
    out.push_back(line(kind_name(set.kind) + " invariant under conjugation and stabilization on " +
                           std::to_string(words) + " words",
                       bad == 0,
                       std::to_string(checks) + " moves" + (bad ? ", " + std::to_string(bad) + " fail, first " + first : "")));
  }

  auto pair = [&](const std::string& label, const InvariantSpec& spec, const BraidWord& a, const BraidWord& b) {
    out.push_back(equality(label, evaluate(a, spec), evaluate(b, spec)));
  };
  InvariantSpec vb;
  vb.kind = InvariantKind::VB;
  pair("VB of 's1 s1 s1' equals its conjugate by s1", vb, parse_braid("s1 s1 s1", 2, 1),
       parse_braid("s1 s1 s1 s1 s1^-1", 2, 1));
  InvariantSpec rho;
  rho.kind = InvariantKind::RhoB;
  rho.d = 2;
  pair("RhoB of 's1' on 2 strands equals 's1 s2' on 3 strands [d=2]", rho, parse_braid("s1", 2, 2),
       parse_braid("s1 s2", 3, 2));
  InvariantSpec pb;
  pair("PB of 'r1' on 1 strand equals 'r1 s1' on 2 strands", pb, parse_braid("r1", 1, 1), parse_braid("r1 s1", 2, 1));
  return out;
}

std::vector<CheckLine> check_degenerations(int words, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckLine> out;
  InvariantSpec pb, vb, xb, rho;
  vb.kind = InvariantKind::VB;
  xb.kind = InvariantKind::XB;
  rho.kind = InvariantKind::RhoB;
  InvariantEvaluator epb(pb), evb(vb), exb(xb), erho(rho);
  int bad_x = 0, bad_r = 0;
  std::string first_x, first_r;
  for (int i = 0; i < words; ++i) {
    int n = 1 + static_cast<int>(rng() % 3);
    BraidWord w = random_braid(n, 1, static_cast<int>(rng() % 7), rng);
    if (!(exb(w) == epb(w)) && bad_x++ == 0) first_x = w.str();
    if (!(erho(w) == evb(w)) && bad_r++ == 0) first_r = w.str();
  }
  std::string tag = " on " + std::to_string(words) + " words [d=1]";
  out.push_back(line("XB with S={0} equals PB" + tag, bad_x == 0, bad_x ? "first differs on '" + first_x + "'" : ""));
  out.push_back(line("RhoB with S={0} equals VB" + tag, bad_r == 0, bad_r ? "first differs on '" + first_r + "'" : ""));

  bool idem = true;
  for (int n = 2; n <= 3; ++n) {
    AlgebraElement one = AlgebraElement::one(n, 1);
    for (int i = 1; i < n; ++i) idem = idem && idempotent_e(i, i + 1, 0, n, 1) == one;
    idem = idem && idempotent_f(1, 0, n, 1) == one;
  }
  out.push_back(line("e_i = f_1 = 1 [d=1]", idem));

  // Y_{1,n} is H_n: unframed basis of size 2^n n! and the undeformed quadratic relations
  bool hecke = true;
  std::string detail;
  Scalar du(delta(kU)), dv(delta(kV));
  for (int n = 1; n <= 3 && hecke; ++n) {
    auto basis = enumerate_basis(n, 1);
    size_t want = n == 1 ? 2 : n == 2 ? 8 : 48;
    if (basis.size() != want) {
      hecke = false;
      detail = "basis size " + std::to_string(basis.size()) + " at n=" + std::to_string(n);
      break;
    }
    for (const auto& m : basis) {
      AlgebraElement x = AlgebraElement::basis(1, m);
      for (int i = 0; i < n; ++i) {
        Letter g = i == 0 ? Letter::b() : Letter::g(i);
        const Scalar& c = i == 0 ? dv : du;
        AlgebraElement xg = x.mul_generator(g);
        if (!(xg.mul_generator(g) == x + c * xg)) {
          hecke = false;
          detail = m.str() + " times " + g.str() + "^2";
        }
      }
    }
  }
  out.push_back(line("Y_{1,n} is H_n: basis 2^n n! and g^2 = 1 + (u-1/u)g, b^2 = 1 + (v-1/v)b", hecke, detail));
  return out;
}

std::vector<CheckLine> check_oracle(int words, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckLine> out;

  auto b2 = bfs_coxeter(2), b3 = bfs_coxeter(3);
  int max2 = 0;
  for (const auto& [w, l] : b2) max2 = std::max(max2, l);
  out.push_back(line("BFS over B_2 reaches 8 elements of length at most 4", b2.size() == 8 && max2 == 4));
  bool lengths = b3.size() == 48;
  for (const auto& [w, l] : b3) lengths = lengths && w.length() == l;
  out.push_back(line("BFS over B_3 reaches 48 elements with lengths matching the length function", lengths));

  auto p1 = TraceParams::symbolic(1);
  out.push_back(equality("oracle trace of g1 is z", word_trace_oracle({Letter::g(1)}, 2, 1, p1), Z()));

  int bad = 0, budget = 0;
  std::string first;
  for (int i = 0; i < words; ++i) {
    int n = 1 + static_cast<int>(rng() % 3), d = 1 + static_cast<int>(rng() % 3);
    BraidWord w = random_braid(n, d, static_cast<int>(rng() % 9), rng);
    auto p = TraceParams::symbolic(d);
    try {
      if (!(trace_of_word(w.letters, n, d, p) == word_trace_oracle(w.letters, n, d, p)) && bad++ == 0)
        first = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " '" + w.str() + "'";
    } catch (const OracleBudgetExceeded&) {
      ++budget;
    }
  }
  std::string detail;
  if (bad) detail = std::to_string(bad) + " mismatches, first " + first;
  if (budget) detail += (detail.empty() ? "" : "; ") + std::to_string(budget) + " over the step budget";
  out.push_back(line("engine trace equals word-rewriting oracle on " + std::to_string(words) + " words", !bad && !budget,
                     detail));
  return out;
}

std::vector<CheckLine> check_certification(uint64_t seed) {
  std::vector<CheckLine> out;
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 3; ++d) {
      auto r = certify_algebra(n, d, seed);
      std::string detail;
      for (const auto& l : r.lines)
        if (!l.pass) detail += (detail.empty() ? "" : "; ") + l.label + (l.detail.empty() ? "" : ": " + l.detail);
      out.push_back(line("Y_{" + std::to_string(d) + "," + std::to_string(n) + "} structure table certified (" +
                             std::to_string(r.lines.size()) + " checks)",
                         r.ok(), detail));
    }
  }
  return out;
}

const std::vector<std::string> kSuiteNames = {"lemmas", "tracetlb", "ftlb",  "appendixA",
                                              "appendixB", "skein", "markov", "oracle"};

std::vector<CheckLine> run_suite(const std::string& name, int d, uint64_t seed) {
  std::vector<CheckLine> out;
  auto add = [&](std::vector<CheckLine> v) {
    for (auto& l : v) out.push_back(std::move(l));
  };
  if (name == "lemmas") {
    add(check_hecke_ideal_traces());
    add(check_absorption(d));
    add(check_loop_ideal_traces());
    add(check_ideal_trace_forms(d));
  } else if (name == "tracetlb") {
    add(check_tlb_parameters());
  } else if (name == "ftlb") {
    add(check_ftlb_solutions(d));
  } else if (name == "appendixA") {
    add(check_step_forms(d));
  } else if (name == "appendixB") {
    add(check_point_solutions(d));
  } else if (name == "skein") {
    add(check_skein(50, seed));
  } else if (name == "markov") {
    add(check_markov(50, seed));
    add(check_degenerations(50, seed));
  } else if (name == "oracle") {
    add(check_oracle(500, seed));
    add(check_certification(seed));
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  return out;
}

}  // namespace tlb
