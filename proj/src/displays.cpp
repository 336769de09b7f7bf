#include <functional>

#include "tlb/cyclic.hpp"
#include "tlb/markov.hpp"

namespace tlb {

namespace {

struct Ctx {
  int d;
  Tracer tr;
  Scalar u = Scalar::var(kU), v = Scalar::var(kV), z = Scalar::var(kZ);
  Scalar du = Scalar(delta(kU)), dv = Scalar(delta(kV));
  Scalar D;

  explicit Ctx(int d_) : d(d_), tr(d_), D(d_) {}

  int mod(int a) const { return ((a % d) + d) % d; }
  Scalar x(int k) const { return mod(k) == 0 ? Scalar(1) : Scalar::var(var_x(mod(k))); }
  Scalar y(int k) const { return Scalar::var(var_y(mod(k))); }
  Scalar sum(const std::function<Scalar(int)>& f) const {
    Scalar s;
    for (int r = 0; r < d; ++r) s += f(r);
    return s;
  }
  Scalar sum2(const std::function<Scalar(int, int)>& f) const {
    Scalar s;
    for (int r = 0; r < d; ++r)
      for (int t = 0; t < d; ++t) s += f(r, t);
    return s;
  }
  // e_1^{(m)} e_2 in Y_{d,3}
  AlgebraElement e1e2(int m) const { return idempotent_e(1, 2, m, 3, d) * idempotent_e(2, 3, 0, 3, d); }
};

// One line per identity, passing when it holds for every m.
struct Collector {
  std::vector<CheckLine> lines;
  void add(const std::string& label, int d, const std::function<std::pair<Scalar, Scalar>(int)>& f,
           bool informational = false) {
    CheckLine l{label + " [d=" + std::to_string(d) + "]", true, "", informational};
    for (int m = 0; m < d; ++m) {
      auto [engine, formula] = f(m);
      if (!(engine == formula)) {
        l.pass = false;
        l.detail += "m=" + std::to_string(m) + ": engine " + engine.str() + " vs formula " + formula.str() + "; ";
      }
    }
    lines.push_back(l);
  }
};

}  // namespace

std::vector<CheckLine> reduced_trace_checks(int d) {
  Ctx c(d);
  Collector out;
  const auto &u = c.u, &v = c.v, &z = c.z, &du = c.du, &dv = c.dv, &D = c.D;
  auto g = Letter::g;
  Letter b = Letter::b();

  // Tr(r_B)
  Scalar trb = c.tr.symbolic(ideal_generator(IdealKind::RB, 2, d));
  out.add("Tr(r_B) closed form", d, [&](int) {
    Scalar f = c.sum2([&](int r, int s) { return c.x(r) * c.x(s); }) / (D * D) +
               u * u * v * v * c.sum2([&](int r, int s) { return c.y(r) * c.y(s); }) / (D * D) +
               v * (u * u + 1) * c.sum2([&](int r, int s) { return c.x(s) * c.y(r); }) / (D * D) +
               z * u * (Scalar(1) + u * u * v * v) * c.sum([&](int r) { return c.x(r); }) / D +
               z * (u.pow(3) * v.pow(3) + u * v) * c.sum([&](int r) { return c.y(r); }) / D;
    return std::pair{trb, f};
  });

  // Tr(e_1^{(m)} e_2 b_1 g_{1,2})
  AlgebraElement G = g12(3, d);
  out.add("Tr(e1(m) e2 b1 g12) closed form", d, [&](int m) {
    Scalar e = c.tr.symbolic(c.e1e2(m).mul_word({b}) * G);
    Scalar f = c.sum2([&](int s, int r) { return c.x(-r) * c.x(-s + r) * c.y(m + s); }) / (D * D) +
               (u * u + 2) * u * z / D * c.sum([&](int r) { return c.x(-r) * c.y(m + r); }) +
               (u * u + 1) * u * u * z * z * c.y(m);
    return std::pair{e, f};
  });

  // Tr(e_1^{(m)} e_2 g_{1,2}) against the coefficient variants
  auto r12 = [&](int m) { return c.tr.symbolic(c.e1e2(m) * G); };
  auto E = [&](int m) { return c.sum([&](int s) { return c.x(m + s) * c.x(-s); }) / D; };
  auto tr3 = [&](int m) { return c.sum2([&](int s, int r) { return c.x(m + s) * c.x(r - s) * c.x(-r); }) / (D * D); };
  struct Variant {
    std::string name;
    Scalar a, b;
    bool gating;
  };
  std::vector<Variant> variants = {{"(u+1), (u+2)", u + 1, u + 2, false},
                                   {"(u^2+1), (u^2+2)", u * u + 1, u * u + 2, false},
                                   {"u^2(u^2+1), u(u^2+2)", u * u * (u * u + 1), u * (u * u + 2), true}};
  for (const auto& var : variants)
    out.add("Tr(e1(m) e2 g12) coefficients " + var.name, d,
            [&](int m) { return std::pair{r12(m), var.a * z * z * c.x(m) + var.b * z * E(m) + tr3(m)}; },
            !var.gating);

  // A_i and B_i
  std::vector<Word> tails = {{}, {g(1)}, {g(2)}, {g(1), g(2)}, {g(2), g(1)}, {g(1), g(2), g(1)}};
  std::vector<std::vector<Scalar>> A(d), B(d);
  for (int m = 0; m < d; ++m) {
    AlgebraElement a = c.e1e2(m).mul_word({b, g(1), b});
    AlgebraElement bb = c.e1e2(m).mul_word({b, g(1), b, g(2), g(1), b});
    for (const auto& t : tails) {
      A[m].push_back(c.tr.symbolic(a.mul_word(t)));
      B[m].push_back(c.tr.symbolic(bb.mul_word(t)));
    }
  }
  auto A1_form = [&](int m, const Scalar& inner) {
    return z / D * c.sum([&](int s) {
             return c.x(m + s) * c.x(-s) + dv * inner * c.sum([&](int r) { return c.x(-s) * c.y(m + s + r); });
           });
  };
  out.add("A1 step form with 1/d^2", d, [&](int m) { return std::pair{A[m][0], A1_form(m, Scalar(1) / (D * D))}; },
          true);
  out.add("A1 step form with 1/d", d, [&](int m) { return std::pair{A[m][0], A1_form(m, Scalar(1) / D)}; });
  out.add("A2 step form", d, [&](int m) {
    return std::pair{A[m][1], c.sum2([&](int r, int s) { return c.x(-r) * c.y(m + s) * c.y(r - s); }) / (D * D) +
                                  du * A[m][0]};
  });
  out.add("A3 step form", d, [&](int m) {
    return std::pair{A[m][2], z * z * c.x(m) + dv * z * z / D * c.sum([&](int r) { return c.y(r); })};
  });
  out.add("A4 step form", d, [&](int m) {
    return std::pair{A[m][3], z / D * c.sum([&](int s) { return c.y(m + s) * c.y(-s); }) + du * A[m][2]};
  });
  out.add("A5 = A4", d, [&](int m) { return std::pair{A[m][4], A[m][3]}; });
  out.add("A6 step form", d, [&](int m) { return std::pair{A[m][5], A[m][2] + du * A[m][3]}; });

  out.add("B1 step form", d, [&](int m) {
    Scalar f = z / D * c.sum([&](int k) { return c.y(-k) * c.x(m + k); }) + du * z * z * c.y(m) +
               dv * z / (D * D) * c.sum2([&](int k, int r) { return c.y(-k) * c.y(m + k + r); }) +
               dv * du * z * z / D * c.sum([&](int r) { return c.x(m + r); }) +
               dv * dv * du * z * z / D * c.sum([&](int r) { return c.y(m + r); });
    return std::pair{B[m][0], f};
  });
  out.add("B2 step form", d, [&](int m) {
    Scalar f = z * z * c.y(m) + z * z * dv / D * c.sum([&](int r) { return c.x(r); }) +
               z * z * dv * dv / D * c.sum([&](int r) { return c.y(r); }) + du * B[m][0];
    return std::pair{B[m][1], f};
  });
  out.add("B3 = B2", d, [&](int m) { return std::pair{B[m][2], B[m][1]}; });
  out.add("B4 step form", d, [&](int m) {
    Scalar f = z / D * c.sum([&](int r) {
                 BasisMonomial t(2);
                 t.a[0] = static_cast<uint8_t>(c.mod(m + r));
                 t.a[1] = static_cast<uint8_t>(c.mod(-r));
                 AlgebraElement base = AlgebraElement::basis(d, t);
                 return c.tr.symbolic(base.mul_word({b, b, g(1), b, g(1)})) +
                        du * c.tr.symbolic(base.mul_word({b, g(1), b, g(1), b, g(1)}));
               });
    return std::pair{B[m][3], f};
  });
  out.add("B5 = B4", d, [&](int m) { return std::pair{B[m][4], B[m][3]}; });
  out.add("B6 step form", d, [&](int m) {
    Scalar f = c.sum2([&](int s, int k) { return c.y(-k) * c.y(-s + k) * c.y(m + s); }) / (D * D) +
               du * z / D * c.sum([&](int k) { return c.y(-k) * c.x(m + k); }) +
               du * dv * z / (D * D) * c.sum2([&](int r, int k) { return c.y(-k) * c.y(m + r + k); }) +
               du * (B[m][0] + B[m][4]);
    return std::pair{B[m][5], f};
  });

  // functional forms evaluated at m
  FunctionalForms F(FunctionalForms::Domain::Spatial, CyclicFunction::symbolic_x(d), CyclicFunction::symbolic_y(d), z);
  auto Fa = F.A_parts(), Fb = F.B_parts();
  for (int i = 0; i < 6; ++i) {
    out.add("A" + std::to_string(i + 1) + " functional form", d, [&](int m) { return std::pair{A[m][i], Fa[i](m)}; });
    out.add("B" + std::to_string(i + 1) + " functional form", d, [&](int m) { return std::pair{B[m][i], Fb[i](m)}; });
  }

  auto assemble = [&](const std::vector<Scalar>& p) {
    return p[0] + u * (p[1] + p[2]) + u * u * (p[3] + p[4]) + u.pow(3) * p[5];
  };
  CyclicFunction FA = F.A(), FB = F.B();
  out.add("A assembled", d, [&](int m) {
    Scalar direct = c.tr.symbolic(c.e1e2(m).mul_word({b, g(1), b}) * G);
    return std::pair{direct, assemble(A[m])};
  });
  out.add("A functional assembly", d, [&](int m) { return std::pair{assemble(A[m]), FA(m)}; });
  out.add("B assembled", d, [&](int m) {
    Scalar direct = c.tr.symbolic(c.e1e2(m).mul_word({b, g(1), b, g(2), g(1), b}) * G);
    return std::pair{direct, assemble(B[m])};
  });
  out.add("B functional assembly", d, [&](int m) { return std::pair{assemble(B[m]), FB(m)}; });

  // one-line summary forms of A and B
  out.add("A one-line summary form", d, [&](int m) {
    Scalar f = z / D * c.sum([&](int r) { return c.x(-r) * c.x(m + r); }) +
               (v + v.inverse()) * z / D * c.sum([&](int r) { return c.x(-r) * c.y(m + r); }) +
               c.sum2([&](int r, int s) { return c.x(-r) * c.y(m + s) * c.y(r - s); }) / (D * D) + du * A[m][0] +
               z * z * c.x(m) + dv * z * z / D * c.sum([&](int r) { return c.y(r); }) +
               Scalar(2) * (z / D * c.sum([&](int s) { return c.y(m + s) * c.y(-s); }) + du * A[m][2]) + A[m][2] +
               du * A[m][3];
    return std::pair{assemble(A[m]), f};
  }, true);
  out.add("B one-line summary form", d, [&](int m) {
    Scalar f = z / D * c.sum([&](int r) { return c.x(-r) * c.y(m + r); }) + du * z * z * c.y(m) +
               dv * z / (D * D) * c.sum2([&](int k, int r) { return c.y(-k) * c.y(m + k + r); }) +
               dv * du * z * z / D * c.sum([&](int r) { return c.x(m + r); }) +
               dv * dv * du * z * z / D * c.sum([&](int r) { return c.y(m + r); }) +
               Scalar(2) * (z * z * c.y(m) + z * z * dv / D * c.sum([&](int r) { return c.x(r); }) +
                            z * z * dv * dv / D * c.sum([&](int r) { return c.y(r); }) + du * B[m][0]) +
               Scalar(2) * (B[m][0] + du * B[m][1]) +
               c.sum2([&](int s, int k) { return c.y(-k) * c.y(-s + k) * c.y(m + s); }) / (D * D) + du * z / D +
               c.sum([&](int k) { return c.y(-k) * c.x(m + k); }) +
               du * dv * z / (D * D) * c.sum2([&](int r, int k) { return c.y(-k) * c.y(m + r + k); }) +
               du * (B[m][0] + B[m][4]);
    return std::pair{assemble(B[m]), f};
  }, true);

  return out.lines;
}

}  // namespace tlb
