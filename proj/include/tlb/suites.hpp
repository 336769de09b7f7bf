#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tlb/markov.hpp"

namespace tlb {

bool all_pass(const std::vector<CheckLine>& lines);  // informational lines ignored

// tau(h_{1,2}) and tau(h_B) closed forms on H_2, H_3
std::vector<CheckLine> check_hecke_ideal_traces();
// x r = r x = c r for the generators of both ideals; the unframed ones at d = 1
std::vector<CheckLine> check_absorption(int d);
// tau(b1 h1 b1 h12) and tau(b1 h1 b1 h2 h1 b1 h12) closed forms
std::vector<CheckLine> check_loop_ideal_traces();
// the four (z, y) pairs annihilate <h12, hB> on H_3; other pairs do not
std::vector<CheckLine> check_tlb_parameters();
// closed forms of Tr(r_B) and Tr(e1 e2 g12) (first) and the step-by-step
// A_i, B_i forms (second), split out of reduced_trace_checks
std::vector<CheckLine> check_ideal_trace_forms(int d);
std::vector<CheckLine> check_step_forms(int d);
// admitted yhat values at a point, by gcd and candidate roots
std::vector<CheckLine> check_point_solutions(int d);
// every profile and branch through both routes, plus informational sign variants
std::vector<CheckLine> check_ftlb_solutions(int d);
std::vector<CheckLine> check_skein(int sites, uint64_t seed);
std::vector<CheckLine> check_markov(int words, uint64_t seed);
std::vector<CheckLine> check_degenerations(int words, uint64_t seed);
std::vector<CheckLine> check_oracle(int words, uint64_t seed);
std::vector<CheckLine> check_certification(uint64_t seed);

// Named suites for the command line.
extern const std::vector<std::string> kSuiteNames;
std::vector<CheckLine> run_suite(const std::string& name, int d, uint64_t seed);

}  // namespace tlb
