#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "tlb/invariants.hpp"
#include "tlb/oracle.hpp"

using namespace tlb;

TEST_CASE("breadth-first search over B_n", "[oracle]") {
  auto b2 = bfs_coxeter(2);
  CHECK(b2.size() == 8);
  int longest = 0;
  for (const auto& [w, l] : b2) longest = std::max(longest, l);
  CHECK(longest == 4);
  CHECK(b2.at(SignedPermutation(2)) == 0);
  CHECK(bfs_coxeter(3).size() == 48);
}

TEST_CASE("word-rewriting trace", "[oracle]") {
  auto p1 = TraceParams::symbolic(1), p2 = TraceParams::symbolic(2);
  CHECK(word_trace_oracle({Letter::g(1)}, 2, 1, p1) == Scalar::var(kZ));
  Word bgbg = {Letter::b(), Letter::g(1), Letter::b(), Letter::g(1)};
  CHECK(word_trace_oracle(bgbg, 2, 1, p1) == trace_of_word(bgbg, 2, 1, p1));
  Word tgt = {Letter::t(1, 1), Letter::g(1), Letter::t(1, 1)};
  CHECK(word_trace_oracle(tgt, 2, 2, p2) == trace_of_word(tgt, 2, 2, p2));
}

TEST_CASE("oracle agrees with the engine on small words", "[oracle][property]") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 40; ++i) {
    int n = 1 + rng() % 2, d = 1 + rng() % 2;
    BraidWord w = random_braid(n, d, rng() % 7, rng);
    auto p = TraceParams::symbolic(d);
    INFO(w.str());
    CHECK(word_trace_oracle(w.letters, n, d, p) == trace_of_word(w.letters, n, d, p));
  }
}

TEST_CASE("step budget", "[oracle]") {
  Word w(6, Letter::g_inv(1));
  CHECK_THROWS_AS(word_trace_oracle(w, 2, 1, TraceParams::symbolic(1), 3), OracleBudgetExceeded);
}

TEST_CASE("structure tables", "[oracle]") {
  StructureTable t(2, 2);
  CHECK(t.basis().size() == 32);
  for (size_t i = 0; i < t.basis().size(); ++i) CHECK(t.index(t.basis()[i]) == i);
  auto e = AlgebraElement::basis(2, t.basis()[5]);
  auto f = AlgebraElement::basis(2, t.basis()[17]);
  CHECK(t.multiply(e, f) == e * f);
}

TEST_CASE("algebra certification", "[oracle]") {
  for (auto [n, d] : {std::pair{1, 1}, {2, 1}, {2, 2}, {1, 3}}) {
    auto r = certify_algebra(n, d);
    for (const auto& l : r.lines) {
      INFO("n=" << n << " d=" << d << " " << l.label << " " << l.detail);
      CHECK(l.pass);
    }
  }
}
