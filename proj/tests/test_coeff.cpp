#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "tlb/coeff.hpp"

using namespace tlb;
using tlbtest::random_scalar;

namespace {
Scalar u() { return Scalar::var(kU); }
Scalar v() { return Scalar::var(kV); }
Scalar z() { return Scalar::var(kZ); }
}  // namespace

TEST_CASE("roots of unity", "[coeff]") {
  for (int d = 1; d <= 8; ++d) {
    Cyclotomic w = Cyclotomic::zeta(d, 1), p(1), sum(0);
    for (int k = 0; k < d; ++k) {
      REQUIRE(Cyclotomic::zeta(d, k) == p);
      sum += p;
      p *= w;
    }
    CHECK(p == Cyclotomic(1));
    CHECK(sum == Cyclotomic(d == 1 ? 1 : 0));
    CHECK(Cyclotomic::zeta(d, -1) == w.inverse());
  }
  CHECK(Cyclotomic::zeta(4, 1) * Cyclotomic::zeta(4, 1) == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(6, 3) == Cyclotomic(-1));
  CHECK_THROWS_AS(Cyclotomic::zeta(6, 2) == Cyclotomic::zeta(3, 1), ArithmeticError);
  CHECK(Cyclotomic::zeta(2, 1).is_rational());
}

TEST_CASE("field axioms on random scalars", "[coeff][property]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar(0));
    CHECK(a * a.inverse() == Scalar(1));
    CHECK((a / b) * b == a);
    CHECK(a.pow(-2) * a.pow(3) == a);
  }
}

TEST_CASE("canonical rendering", "[coeff][property]") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 60; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    Scalar s = a + b;
    Scalar t = b + a;
    CHECK(s.str() == t.str());
    CHECK(parse_scalar(s.str()) == s);
    CHECK(parse_scalar(s.str()).str() == s.str());
  }
}

TEST_CASE("parse scalars", "[coeff]") {
  CHECK(parse_scalar("u - u^-1") == Scalar(delta(kU)));
  CHECK(parse_scalar("-1/(u*(1+u^2))") == Scalar(-1) / (u() * (1 + u() * u())));
  CHECK(parse_scalar("(v^2-1)/((u^2+1)*v)") == (v() * v() - 1) / ((u() * u() + 1) * v()));
  CHECK(parse_scalar("3/4") == Scalar::ratio(3, 4));
  CHECK(parse_scalar("x1*y0 + z") == Scalar::var(var_x(1)) * Scalar::var(var_y(0)) + z());
  CHECK(parse_scalar("0").is_zero());
}

TEST_CASE("parse errors carry a position", "[coeff]") {
  for (const char* bad : {"u +", "(u", "u)", "q", "u^", "1/0", "u ** 2"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_scalar(bad), std::runtime_error);
  }
  try {
    parse_scalar("u + q");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("division by zero", "[coeff]") {
  CHECK_THROWS_AS(Scalar(0).inverse(), ArithmeticError);
  CHECK_THROWS_AS(u() / (u() - u()), ArithmeticError);
}

TEST_CASE("substitution", "[coeff]") {
  Bindings b{{kZ, Scalar(-1) / u()}};
  CHECK(substitute(u() * z() + 1, b).is_zero());
  Bindings y{{var_y(0), v()}};
  CHECK(substitute(Scalar::var(var_y(0)).pow(2) / v(), y) == v());
  CHECK(substitute(z(), Bindings{}) == z());
}

TEST_CASE("polynomials and fractions", "[coeff]") {
  Scalar f = (u() * u() - 1) / (u() - 1);
  CHECK(f == u() + 1);
  CHECK(f.is_poly());
  CHECK((u() / v()).is_poly());  // Laurent monomials are units
  CHECK(!(Scalar(1) / (u() + 1)).is_poly());
  CHECK(Scalar(delta(kV)) == v() - v().inverse());
  Poly p = Poly::var(kU, 2) + Poly::var(kU, -1);
  CHECK(p.degree_in(kU) == 2);
}
