// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "tlb/suites.hpp"

using namespace tlb;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::function<std::vector<CheckLine>()> run;
};

std::vector<CheckLine> over_d(std::initializer_list<int> ds, std::vector<CheckLine> (*f)(int)) {
  std::vector<CheckLine> out;
  for (int d : ds)
    for (auto& l : f(d)) out.push_back(std::move(l));
  return out;
}

std::vector<CheckLine> concat(std::vector<CheckLine> a, std::vector<CheckLine> b) {
  for (auto& l : b) a.push_back(std::move(l));
  return a;
}

}  // namespace

int main() {
  const uint64_t seed = 1;
  std::vector<Criterion> criteria = {
      {1, "tau(h12) and tau(hB) closed forms", [] { return check_hecke_ideal_traces(); }},
      {2, "absorption identities, d = 1..3", [] { return over_d({1, 2, 3}, check_absorption); }},
      {3, "tau(b1 h1 b1 h12) and tau(b1 h1 b1 h2 h1 b1 h12)", [] { return check_loop_ideal_traces(); }},
      {4, "four (z, y) pairs factor through the Temperley-Lieb quotient", [] { return check_tlb_parameters(); }},
      {5, "Tr(r_B) and Tr(e1 e2 r12) closed forms, d = 1..3", [] { return over_d({1, 2, 3}, check_ideal_trace_forms); }},
      {6, "A_i, B_i step forms and assemblies, d = 1..3", [] { return over_d({1, 2, 3}, check_step_forms); }},
      {7, "admitted yhat values by factoring, d = 2, 3", [] { return over_d({2, 3}, check_point_solutions); }},
      {8, "every profile and branch through both routes, d = 2, 3", [] { return over_d({2, 3}, check_ftlb_solutions); }},
      {9, "skein relations on seeded sites", [&] { return check_skein(50, seed); }},
      {10, "Markov invariance on seeded words", [&] { return check_markov(50, seed); }},
      {11, "d = 1 degenerations", [&] { return check_degenerations(50, seed); }},
      {12, "engine against oracles", [&] { return concat(check_oracle(500, seed), check_certification(seed)); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    auto lines = c.run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = !lines.empty() && all_pass(lines);
    failed += !ok;
    int gating = 0;
    for (const auto& l : lines) gating += !l.informational;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << std::setw(2) << c.id << ": " << c.name << " (" << gating
              << " checks, " << std::fixed << std::setprecision(1) << secs << " s)\n";
    for (const auto& l : lines) {
      if (l.informational)
        std::cout << "     note: " << l.label << (l.pass ? " holds" : " does not hold") << "\n";
      else if (!l.pass)
        std::cout << "     failed: " << l.label << (l.detail.empty() ? "" : ": " + l.detail) << "\n";
    }
    std::cout << std::flush;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
