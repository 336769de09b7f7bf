#include <catch_amalgamated.hpp>

#include <random>

#include "tlb/invariants.hpp"
#include "tlb/markov.hpp"
#include "tlb/suites.hpp"

using namespace tlb;

namespace {
Scalar u() { return Scalar::var(kU); }
Scalar v() { return Scalar::var(kV); }
Scalar z() { return Scalar::var(kZ); }

Scalar tr(const Word& w, int n, int d) { return trace_of_word(w, n, d, TraceParams::symbolic(d)); }
}  // namespace

TEST_CASE("trace rules", "[markov]") {
  CHECK(tr({}, 1, 1) == Scalar(1));
  CHECK(tr({Letter::g(1)}, 2, 1) == z());
  CHECK(tr({Letter::b()}, 1, 1) == Scalar::var(var_y(0)));
  CHECK(tr({Letter::t(1, 1)}, 1, 3) == Scalar::var(var_x(1)));
  CHECK(tr({Letter::t(1, 2), Letter::b()}, 1, 3) == Scalar::var(var_y(2)));
  CHECK(tr({Letter::b(), Letter::g(1)}, 2, 1) == z() * Scalar::var(var_y(0)));
  CHECK(tr({Letter::g(1), Letter::t(2, 1)}, 2, 2) == z() * Scalar::var(var_x(1)));
  Scalar du(delta(kU));
  CHECK(tr({Letter::g(1), Letter::g(1)}, 2, 1) == 1 + du * z());
}

TEST_CASE("trace is a class function", "[markov][property]") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    int n = 1 + rng() % 3, d = 1 + rng() % 3;
    Word a = random_braid(n, d, rng() % 4, rng).letters;
    Word b = random_braid(n, d, rng() % 4, rng).letters;
    Word ab = a, ba = b;
    ab.insert(ab.end(), b.begin(), b.end());
    ba.insert(ba.end(), a.begin(), a.end());
    CHECK(tr(ab, n, d) == tr(ba, n, d));
  }
}

TEST_CASE("trace is stable under embedding", "[markov][property]") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 30; ++i) {
    int n = 1 + rng() % 2, d = 1 + rng() % 3;
    Word a = random_braid(n, d, rng() % 5, rng).letters;
    CHECK(tr(a, n, d) == tr(a, n + 1, d));
  }
}

TEST_CASE("bound parameters are substituted", "[markov]") {
  TraceParams p = TraceParams::symbolic(1);
  p.z = Scalar(-1) / u();
  p.y[0] = v();
  Scalar sym = tr({Letter::b(), Letter::g(1), Letter::g(1)}, 2, 1);
  Bindings b{{kZ, p.z}, {var_y(0), p.y[0]}};
  CHECK(trace_of_word({Letter::b(), Letter::g(1), Letter::g(1)}, 2, 1, p) == substitute(sym, b));
}

TEST_CASE("Temperley-Lieb quotient parameters", "[markov]") {
  IdealTraceTable table(QuotientKind::TLB, 3, 1);
  TraceParams p = TraceParams::symbolic(1);
  CHECK(!table.check(p).ok);
  p.z = Scalar(-1) / u();
  p.y[0] = Scalar(-1) / v();
  CHECK(table.check(p).ok);
  p.y[0] = Scalar(1) / v();
  auto r = table.check(p);
  CHECK(!r.ok);
  CHECK(r.witness.has_value());
  CHECK(!r.value.is_zero());
}

TEST_CASE("closed-form ideal traces", "[markov]") {
  for (int d = 1; d <= 2; ++d) {
    auto lines = reduced_trace_checks(d);
    REQUIRE(!lines.empty());
    for (const auto& l : lines) {
      INFO(l.label << " " << l.detail);
      if (!l.informational) CHECK(l.pass);
    }
  }
}

TEST_CASE("hecke ideal traces", "[markov]") {
  for (const auto& l : check_hecke_ideal_traces()) {
    INFO(l.label << " " << l.detail);
    CHECK(l.pass);
  }
  for (const auto& l : check_loop_ideal_traces()) {
    INFO(l.label << " " << l.detail);
    CHECK(l.pass);
  }
}
