#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "tlb/coxeter.hpp"
#include "tlb/oracle.hpp"

using namespace tlb;

namespace {
SignedPermutation word_product(int n, const std::vector<CoxGen>& w) {
  SignedPermutation p(n);
  for (CoxGen g : w) p = p.times(g);
  return p;
}
}  // namespace

TEST_CASE("group order 2^n n!", "[coxeter]") {
  size_t want[] = {1, 2, 8, 48, 384};
  for (int n = 1; n <= 4; ++n) {
    auto all = all_signed_permutations(n);
    CHECK(all.size() == want[n]);
    CHECK(std::set<SignedPermutation>(all.begin(), all.end()).size() == all.size());
  }
}

TEST_CASE("lengths", "[coxeter]") {
  CHECK(SignedPermutation(3).length() == 0);
  CHECK(SignedPermutation::from_window({-1}).length() == 1);
  CHECK(SignedPermutation::from_window({2, 1}).length() == 1);
  CHECK(SignedPermutation::from_window({-2, -1}).length() == 3);
  CHECK(SignedPermutation::from_window({-1, -2}).length() == 4);
  CHECK(SignedPermutation::from_window({-1, -2, -3}).length() == 9);
}

TEST_CASE("length agrees with breadth-first search", "[coxeter][property]") {
  for (int n = 1; n <= 3; ++n) {
    auto bfs = bfs_coxeter(n);
    REQUIRE(bfs.size() == all_signed_permutations(n).size());
    for (const auto& [w, l] : bfs) CHECK(w.length() == l);
  }
}

TEST_CASE("reduced words", "[coxeter][property]") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& w : all_signed_permutations(n)) {
      auto rw = w.reduced_word();
      CHECK(static_cast<int>(rw.size()) == w.length());
      CHECK(word_product(n, rw) == w);
    }
  }
}

TEST_CASE("descents change the length by one", "[coxeter][property]") {
  for (const auto& w : all_signed_permutations(3)) {
    for (CoxGen g = 0; g < 3; ++g) {
      int l = w.times(g).length();
      CHECK(l == w.length() + (w.right_descent(g) ? -1 : 1));
    }
  }
}

TEST_CASE("group laws", "[coxeter][property]") {
  std::mt19937_64 rng(5);
  auto all = all_signed_permutations(3);
  SignedPermutation e(3);
  for (int i = 0; i < 200; ++i) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto& c = all[rng() % all.size()];
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, a.inverse()) == e);
    CHECK(compose(e, a) == a);
    CHECK(a.inverse().length() == a.length());
  }
}

TEST_CASE("Coxeter relations", "[coxeter]") {
  SignedPermutation e(3);
  CHECK(word_product(3, {0, 0}) == e);
  CHECK(word_product(3, {1, 1}) == e);
  CHECK(word_product(3, {0, 1, 0, 1}) == word_product(3, {1, 0, 1, 0}));
  CHECK(word_product(3, {1, 2, 1}) == word_product(3, {2, 1, 2}));
  CHECK(word_product(3, {0, 2}) == word_product(3, {2, 0}));
}

TEST_CASE("top factorization", "[coxeter][property]") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& w : all_signed_permutations(n)) {
      auto tf = top_factor(w);
      CHECK(tf.factor.k == n);
      CHECK(tf.remainder(n) == n);
      CHECK(compose(tf.remainder, lift(tf.factor, n)) == w);
      CHECK(tf.remainder.length() + static_cast<int>(factor_word(tf.factor).size()) == w.length());
    }
  }
  auto tf = top_factor(SignedPermutation::from_window({2, -1}));
  CHECK(tf.factor.p == 1);
  CHECK(!tf.factor.is_signed);
}

TEST_CASE("window text round trip", "[coxeter]") {
  for (const auto& w : all_signed_permutations(3)) CHECK(SignedPermutation::parse(w.str()) == w);
  CHECK_THROWS(SignedPermutation::parse("[1,1]"));
  CHECK_THROWS(SignedPermutation::from_window({1, 3}));
}
