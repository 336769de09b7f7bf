#include <catch_amalgamated.hpp>

#include <random>

#include "tlb/algebra.hpp"
#include "tlb/invariants.hpp"

using namespace tlb;

namespace {
Scalar u() { return Scalar::var(kU); }
Scalar v() { return Scalar::var(kV); }

AlgebraElement W(int n, int d, const Word& w) { return AlgebraElement::from_word(n, d, w); }
}  // namespace

TEST_CASE("basis size d^n 2^n n!", "[algebra]") {
  CHECK(enumerate_basis(1, 1).size() == 2);
  CHECK(enumerate_basis(2, 1).size() == 8);
  CHECK(enumerate_basis(3, 1).size() == 48);
  CHECK(enumerate_basis(2, 2).size() == 32);
  CHECK(enumerate_basis(3, 3).size() == 1296);
}

TEST_CASE("words multiply as concatenation", "[algebra][property]") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 80; ++i) {
    int n = 1 + rng() % 3, d = 1 + rng() % 3;
    Word a = random_braid(n, d, rng() % 5, rng).letters;
    Word b = random_braid(n, d, rng() % 5, rng).letters;
    Word ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(W(n, d, ab) == W(n, d, a) * W(n, d, b));
    CHECK(W(n, d, a).mul_word(b) == W(n, d, ab));
  }
}

TEST_CASE("inverses and quadratic relations", "[algebra]") {
  for (int d = 1; d <= 3; ++d) {
    const int n = 3;
    AlgebraElement one = AlgebraElement::one(n, d);
    Scalar du(delta(kU)), dv(delta(kV));
    for (int i = 1; i < n; ++i) {
      CHECK(W(n, d, {Letter::g(i), Letter::g_inv(i)}) == one);
      AlgebraElement g = W(n, d, {Letter::g(i)});
      CHECK(g * g == one + du * (idempotent_e(i, i + 1, 0, n, d) * g));
    }
    CHECK(W(n, d, {Letter::b_inv(), Letter::b()}) == one);
    AlgebraElement b = W(n, d, {Letter::b()});
    CHECK(b * b == one + dv * (idempotent_f(1, 0, n, d) * b));
  }
}

TEST_CASE("framing generators", "[algebra]") {
  const int n = 2, d = 3;
  AlgebraElement one = AlgebraElement::one(n, d);
  CHECK(W(n, d, {Letter::t(1, 1), Letter::t(1, 2)}) == one);
  CHECK(W(n, d, {Letter::t(1, 1), Letter::g(1)}) == W(n, d, {Letter::g(1), Letter::t(2, 1)}));
  CHECK(W(n, d, {Letter::t(1, 1), Letter::b()}) == W(n, d, {Letter::b(), Letter::t(1, 1)}));
}

TEST_CASE("idempotents", "[algebra][property]") {
  for (int d = 1; d <= 3; ++d) {
    AlgebraElement e0 = idempotent_e(1, 2, 0, 3, d), f0 = idempotent_f(1, 0, 3, d);
    CHECK(e0 * e0 == e0);
    CHECK(f0 * f0 == f0);
    for (int m = 0; m < d; ++m) {
      for (int k = 0; k < d; ++k) {
        CHECK(idempotent_e(1, 2, m, 3, d) * idempotent_e(1, 2, k, 3, d) == idempotent_e(1, 2, m + k, 3, d));
        CHECK(idempotent_f(1, m, 3, d) * idempotent_f(1, k, 3, d) == idempotent_f(1, m + k, 3, d));
      }
      CHECK(idempotent_e(1, 2, m, 3, d) * f0 == f0 * idempotent_e(1, 2, m, 3, d));
    }
  }
}

TEST_CASE("absorption by the ideal generators", "[algebra]") {
  for (int d = 1; d <= 2; ++d) {
    AlgebraElement r12 = ideal_generator(IdealKind::R12, 3, d), rB = ideal_generator(IdealKind::RB, 3, d);
    for (int i = 1; i <= 2; ++i) CHECK(W(3, d, {Letter::g(i)}) * r12 == u() * r12);
    CHECK(rB * W(3, d, {Letter::b()}) == v() * rB);
    CHECK(rB * W(3, d, {Letter::g(1)}) == u() * rB);
  }
  CHECK(ideal_generator(IdealKind::R12, 3, 1) == ideal_generator(IdealKind::H12, 3, 1));
  CHECK(g12(3, 1) == ideal_generator(IdealKind::H12, 3, 1));
}

TEST_CASE("embedding commutes with multiplication", "[algebra][property]") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    int d = 1 + rng() % 2;
    AlgebraElement a = W(2, d, random_braid(2, d, rng() % 4, rng).letters);
    AlgebraElement b = W(2, d, random_braid(2, d, rng() % 4, rng).letters);
    CHECK((a * b).embedded(3) == a.embedded(3) * b.embedded(3));
  }
}

TEST_CASE("element text round trip", "[algebra][property]") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 30; ++i) {
    int n = 1 + rng() % 3, d = 1 + rng() % 3;
    AlgebraElement a = W(n, d, random_braid(n, d, rng() % 5, rng).letters);
    CHECK(parse_element(a.str(), n, d) == a);
  }
}

TEST_CASE("letters are checked against the algebra", "[algebra]") {
  CHECK_THROWS(W(2, 1, {Letter::g(2)}));
  CHECK_THROWS(W(2, 2, {Letter::t(3, 1)}));
}
