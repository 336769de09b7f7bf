#include <catch_amalgamated.hpp>

#include <random>

#include "generators.hpp"
#include "tlb/cyclic.hpp"

using namespace tlb;
using tlbtest::random_scalar;

namespace {
Scalar u() { return Scalar::var(kU); }
Scalar v() { return Scalar::var(kV); }
Scalar z() { return Scalar::var(kZ); }

CyclicFunction random_function(int d, std::mt19937_64& rng) {
  std::vector<Scalar> vals;
  for (int k = 0; k < d; ++k) vals.push_back(rng() % 3 == 0 ? Scalar(0) : random_scalar(rng));
  return CyclicFunction(vals);
}

CyclicFunction reflected(const CyclicFunction& f) {
  CyclicFunction g(f.d());
  for (int k = 0; k < f.d(); ++k) g.at(k) = f(-k);
  return g;
}
}  // namespace

TEST_CASE("Fourier transform basics", "[cyclic]") {
  for (int d = 1; d <= 5; ++d) {
    CHECK(CyclicFunction::one(d).fourier() == Scalar(d) * CyclicFunction::delta(d, 0));
    for (int a = 0; a < d; ++a) CHECK(CyclicFunction::delta(d, a).fourier() == CyclicFunction::character(d, -a));
  }
}

TEST_CASE("inversion and double transform", "[cyclic][property]") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    int d = 1 + rng() % 4;
    CyclicFunction f = random_function(d, rng);
    CHECK(f.fourier().inverse_fourier() == f);
    CHECK(f.inverse_fourier().fourier() == f);
    CHECK(f.fourier().fourier() == Scalar(d) * reflected(f));
  }
}

TEST_CASE("convolution theorem", "[cyclic][property]") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 20; ++i) {
    int d = 1 + rng() % 4;
    CyclicFunction a = random_function(d, rng), b = random_function(d, rng);
    CHECK(convolve(a, b).fourier() == pointwise(a.fourier(), b.fourier()));
    CHECK(convolve(a, b) == convolve(b, a));
    CHECK(convolve(a, CyclicFunction::delta(d, 0)) == a);
  }
}

TEST_CASE("functional forms agree across domains", "[cyclic][property]") {
  std::mt19937_64 rng(33);
  using D = FunctionalForms::Domain;
  for (int i = 0; i < 8; ++i) {
    int d = 1 + rng() % 3;
    CyclicFunction x = random_function(d, rng), y = random_function(d, rng);
    x.at(0) = Scalar(1);
    Scalar zz = random_scalar(rng);
    FunctionalForms sp(D::Spatial, x, y, zz), fo(D::Fourier, x.fourier(), y.fourier(), zz);
    CHECK(sp.A().fourier() == fo.A());
    CHECK(sp.B().fourier() == fo.B());
    CHECK(sp.rb().fourier() == fo.rb());
    CHECK(sp.e_system(ESystemVariant::ZSquared).fourier() == fo.e_system(ESystemVariant::ZSquared));
    CHECK(sp.f_system(ESystemVariant::ZSquared).fourier() == fo.f_system(ESystemVariant::ZSquared));
  }
}

TEST_CASE("support profiles", "[cyclic]") {
  CHECK(enumerate_profiles(1).size() == 2);
  CHECK(enumerate_profiles(2).size() == 12);
  size_t pairs = 0;
  for (const auto& p : enumerate_profiles(3)) {
    CHECK(p.validate().empty());
    CHECK(SupportProfile::parse(p.str(), 3).str() == p.str());
    pairs += p.branches().size();
  }
  CHECK(pairs == 144);

  CHECK(!SupportProfile::parse("sup1=1;sup2=", 2).validate().empty());
  CHECK(!SupportProfile::parse("sup1=0,1;sup2=1;y1=1", 2).validate().empty());
  CHECK(!SupportProfile::parse("sup1=0,1;sup2=;y1=", 2).validate().empty());
  CHECK(SupportProfile::parse("sup1=0,1;sup2=;y1=1", 2).validate().empty());
  CHECK_THROWS(SupportProfile::parse("sup1=5", 2));
  CHECK_THROWS(SupportProfile::parse("sup9=0", 2));
}

TEST_CASE("solutions satisfy the functional system", "[cyclic]") {
  for (int d = 1; d <= 2; ++d) {
    for (const auto& p : enumerate_profiles(d)) {
      for (int br : p.branches()) {
        Solution s = build_solution(p, br);
        INFO(p.str() << " branch " << br);
        CHECK(s.x(0) == Scalar(1));
        CHECK(verify_functional_system(s.x, s.y, s.z).ok());
      }
    }
  }
}

TEST_CASE("d = 1 solutions are the classical ones", "[cyclic]") {
  auto profiles = enumerate_profiles(1);
  Scalar w = u() * (1 + u() * u());
  for (const auto& p : profiles) {
    for (int br : p.branches()) {
      Solution s = build_solution(p, br);
      if (p.zero_in_sup1()) CHECK(s.z == Scalar(-1) / u());
      else CHECK(s.z == Scalar(-1) / w);
    }
  }
  SupportProfile sup2 = SupportProfile::parse("sup2=0", 1);
  CHECK(build_solution(sup2, 4).y(0) == (v() * v() - 1) / ((1 + u() * u()) * v()));
  CHECK(branch_constant(1) == Scalar(-1) / v());
}

TEST_CASE("polynomial gcd", "[cyclic]") {
  const int Y = var_y(0);
  Scalar y = Scalar::var(Y);
  UPoly g = upoly_gcd(to_upoly((y - 1) * (y - u()), Y), to_upoly((y - u()) * (y + v()), Y));
  REQUIRE(g.size() == 2);
  CHECK(g[1] == Scalar(1));
  CHECK(g[0] == -u());
}

TEST_CASE("admitted values at a point", "[cyclic]") {
  Scalar duz = Scalar(2) * u() * z();
  auto r = solve_point(2, false, -duz, {duz, -duz, Scalar(0), duz / v()});
  CHECK(r.split);
  CHECK(r.roots.size() == 2);
  auto partial = solve_point(2, false, -duz, {duz});
  CHECK(!partial.split);
}
