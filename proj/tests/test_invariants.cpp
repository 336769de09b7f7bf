#include <catch_amalgamated.hpp>

#include <random>

#include "tlb/invariants.hpp"

using namespace tlb;

namespace {
InvariantSpec spec(InvariantKind k, int d = 1, std::set<int> S = {0}, std::set<int> y3 = {}) {
  InvariantSpec s;
  s.kind = k;
  s.d = d;
  s.S = std::move(S);
  s.y3 = std::move(y3);
  return s;
}

std::vector<InvariantSpec> sample_specs() {
  return {spec(InvariantKind::PB), spec(InvariantKind::VB), spec(InvariantKind::XB, 2, {0, 1}),
          spec(InvariantKind::XB, 3, {0}), spec(InvariantKind::RhoB, 2, {0, 1}, {1}), spec(InvariantKind::RhoB, 3, {0, 2})};
}
}  // namespace

TEST_CASE("braid grammar", "[invariants]") {
  BraidWord w = parse_braid("s1 s2^-1 r1", 3, 1);
  REQUIRE(w.letters.size() == 3);
  CHECK(w.letters[0].kind == Letter::G);
  CHECK(w.letters[1].kind == Letter::GInv);
  CHECK(w.letters[1].index == 2);
  CHECK(w.letters[2].kind == Letter::B);
  CHECK(w.epsilon() == 0);
  CHECK(parse_braid("  s1   s1 r1^-1 ", 2, 1).epsilon() == 2);
  BraidWord t = parse_braid("t2^1 s1 t1^2", 2, 3);
  CHECK(t.letters[0].kind == Letter::T);
  CHECK(t.letters[0].power == 1);
  CHECK(t.epsilon() == 1);
  CHECK(parse_braid(t.str(), 2, 3).str() == t.str());
  CHECK(parse_braid("", 1, 1).letters.empty());
}

TEST_CASE("braid grammar errors", "[invariants]") {
  struct Bad {
    const char* text;
    int n, d;
    size_t pos;
  };
  for (const Bad& b : {Bad{"s1 q2", 2, 1, 3}, Bad{"s3", 2, 1, 0}, Bad{"s1 t1^1", 2, 1, 3}, Bad{"s1^2", 2, 1, 0},
                       Bad{"t1", 2, 2, 2}, Bad{"r2", 2, 1, 0}, Bad{"s0", 2, 1, 0}}) {
    INFO(b.text);
    try {
      parse_braid(b.text, b.n, b.d);
      FAIL("accepted");
    } catch (const ParseError& e) {
      CHECK(e.position == b.pos);
    }
  }
}

TEST_CASE("kinds and specs", "[invariants]") {
  for (auto k : {InvariantKind::PB, InvariantKind::VB, InvariantKind::XB, InvariantKind::RhoB})
    CHECK(parse_kind(kind_name(k)) == k);
  CHECK_THROWS(parse_kind("homfly"));
  CHECK(spec(InvariantKind::XB, 2, {0, 1}).validate().empty());
  CHECK(!spec(InvariantKind::RhoB, 2, {1}).validate().empty());
  CHECK(!spec(InvariantKind::XB, 2, {}).validate().empty());
  CHECK(!spec(InvariantKind::RhoB, 2, {0, 1}, {0}).validate().empty());
}

TEST_CASE("trivial braids", "[invariants]") {
  for (const auto& s : sample_specs()) {
    INFO(kind_name(s.kind) << " d=" << s.d);
    CHECK(evaluate(parse_braid("", 1, s.d), s) == Scalar(1));
  }
}

TEST_CASE("reduce ell", "[invariants]") {
  Scalar l = Scalar::var(kL), lam = Scalar::var(kU) + 2;
  CHECK(reduce_ell(l.pow(3), lam) == lam * l);
  CHECK(reduce_ell(l.pow(-1), lam) == l / lam);
  CHECK(reduce_ell(l * l + l, lam) == lam + l);
}

TEST_CASE("Markov moves", "[invariants][property]") {
  std::mt19937_64 rng(41);
  for (const auto& s : sample_specs()) {
    InvariantEvaluator ev(s);
    for (int i = 0; i < 6; ++i) {
      int n = 1 + rng() % 3;
      BraidWord w = random_braid(n, s.d, rng() % 5, rng);
      auto r = verify_markov(ev, w, 2, rng());
      INFO(kind_name(s.kind) << " d=" << s.d << " '" << w.str() << "' " << r.failure);
      CHECK(r.ok);
      CHECK(r.checks > 0);
    }
  }
}

TEST_CASE("skein relations", "[invariants][property]") {
  std::mt19937_64 rng(42);
  for (const auto& s : sample_specs()) {
    InvariantEvaluator ev(s);
    for (int i = 0; i < 8; ++i) {
      int n = 1 + rng() % 3;
      BraidWord w = random_braid(n, s.d, rng() % 5, rng);
      SkeinSite site{static_cast<int>(rng() % (w.letters.size() + 1)), static_cast<int>(rng() % n)};
      auto r = verify_skein(ev, w, site);
      INFO(kind_name(s.kind) << " '" << w.str() << "' " << r.relation);
      CHECK(r.ok);
    }
  }
}

TEST_CASE("d = 1 degenerations", "[invariants][property]") {
  std::mt19937_64 rng(43);
  InvariantEvaluator pb(spec(InvariantKind::PB)), vb(spec(InvariantKind::VB)), xb(spec(InvariantKind::XB)),
      rho(spec(InvariantKind::RhoB));
  for (int i = 0; i < 15; ++i) {
    int n = 1 + rng() % 3;
    BraidWord w = random_braid(n, 1, rng() % 6, rng);
    CHECK(xb(w) == pb(w));
    CHECK(rho(w) == vb(w));
  }
}

TEST_CASE("stabilization examples", "[invariants]") {
  auto rho = spec(InvariantKind::RhoB, 2);
  CHECK(evaluate(parse_braid("s1", 2, 2), rho) == evaluate(parse_braid("s1 s2", 3, 2), rho));
  auto pb = spec(InvariantKind::PB);
  CHECK(evaluate(parse_braid("r1", 1, 1), pb) == evaluate(parse_braid("r1 s1", 2, 1), pb));
  CHECK(evaluate(parse_braid("r1", 1, 1), pb) == evaluate(parse_braid("r1 s1^-1", 2, 1), pb));
  auto vb = spec(InvariantKind::VB);
  CHECK(evaluate(parse_braid("s1 s1 s1", 2, 1), vb) == evaluate(parse_braid("s1 s1 s1 s1 s1^-1", 2, 1), vb));
}

TEST_CASE("V^B takes Laurent values in u", "[invariants]") {
  Scalar trefoil = evaluate(parse_braid("s1 s1 s1", 2, 1), spec(InvariantKind::VB));
  CHECK(trefoil.is_poly());
  for (const auto& [m, c] : trefoil.num().terms())
    for (int var = 1; var < kNumVars; ++var) CHECK(m.e[var] == 0);
}
