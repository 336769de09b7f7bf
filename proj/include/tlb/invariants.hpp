#pragma once

#include <cstdint>
#include <random>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "tlb/algebra.hpp"
#include "tlb/cyclic.hpp"
#include "tlb/markov.hpp"

namespace tlb {

// Word in sigma_i^{+-1}, rho_1^{+-1} and t_j^k, stored with the algebra letters
// they map to (sigma_i -> g_i, rho_1 -> b_1, t_j -> t_j).
struct BraidWord {
  int n = 1;
  int d = 1;
  Word letters;

  int epsilon() const;  // exponent sum of the sigma letters only
  std::string str() const;
  AlgebraElement image() const;
};

// Whitespace separated letters: s<i>, s<i>^-1, r1, r1^-1, t<j>^<k>.
BraidWord parse_braid(const std::string& text, int n, int d);

enum class InvariantKind { PB, VB, XB, RhoB };
std::string kind_name(InvariantKind k);
InvariantKind parse_kind(const std::string& s);

struct InvariantSpec {
  InvariantKind kind = InvariantKind::PB;
  int d = 1;
  std::set<int> S{0};    // XB, RhoB
  std::set<int> y3, y4;  // RhoB: signs of yhat on S \ {0}

  // the profile used for RhoB parameters
  SupportProfile rho_profile() const;
  // empty when consistent
  std::string validate() const;
};

// ell stands for sqrt(lambda); rewrites ell^2 -> lambda so that the result
// has ell-degree 0 or 1 in every term.
Scalar reduce_ell(const Scalar& s, const Scalar& lambda);

class InvariantEvaluator {
 public:
  explicit InvariantEvaluator(const InvariantSpec& spec);

  const InvariantSpec& spec() const { return spec_; }
  const TraceParams& params() const { return params_; }
  // sqrt(lambda): the formal ell for PB/XB, u^2 for VB/RhoB
  Scalar sqrt_lambda() const;
  Scalar lambda() const { return lambda_; }

  Scalar trace(const BraidWord& w);
  Scalar operator()(const BraidWord& w);
  // reduce ell^2 where it applies
  Scalar normalize(const Scalar& s) const;

 private:
  InvariantSpec spec_;
  TraceParams params_;
  Scalar lambda_, prefactor_;
  bool formal_;
  Tracer tracer_;
};

Scalar evaluate(const BraidWord& w, const InvariantSpec& spec);

// Insertion point for a skein triple: before letter `position`, crossing
// sigma_index (index 0 means the loop generator).
struct SkeinSite {
  int position = 0;
  int index = 1;
};

struct SkeinReport {
  bool ok = true;
  Scalar lhs, rhs;
  std::string relation;
};

SkeinReport verify_skein(InvariantEvaluator& ev, const BraidWord& base, const SkeinSite& site);
inline SkeinReport verify_skein(const InvariantSpec& spec, const BraidWord& base, const SkeinSite& site) {
  InvariantEvaluator ev(spec);
  return verify_skein(ev, base, site);
}

struct MarkovReport {
  bool ok = true;
  int checks = 0;
  std::string failure;  // first failing move
};

// Random conjugations and both stabilizations of `word`.
MarkovReport verify_markov(InvariantEvaluator& ev, const BraidWord& word, int trials, uint64_t seed);

// Random braid word over all letters; framings only when d > 1.
BraidWord random_braid(int n, int d, int length, std::mt19937_64& rng);

}  // namespace tlb
