#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tlb/algebra.hpp"
#include "tlb/coxeter.hpp"
#include "tlb/markov.hpp"

namespace tlb {

// Breadth-first search from the identity over r_1, s_1..s_{n-1}.
std::map<SignedPermutation, int> bfs_coxeter(int n);

struct OracleBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Trace of a word by rewriting words only: framings pushed left, squares
// resolved by the quadratic relations inside braid-move classes, and the
// top strand peeled by the trace rules.  Shares no code with Tracer.
Scalar word_trace_oracle(const Word& word, int n, int d, const TraceParams& p, long step_budget = 2000000);

// Products of basis monomials, filled on demand; entries are kept only
// while the basis has at most `cache_limit` elements.
class StructureTable {
 public:
  StructureTable(int n, int d, size_t cache_limit = 64);
  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<BasisMonomial>& basis() const { return basis_; }
  size_t index(const BasisMonomial& m) const;
  AlgebraElement product(size_t i, size_t j);
  // x * y for arbitrary elements, through the table
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

 private:
  int n_, d_;
  bool cache_;
  std::vector<BasisMonomial> basis_;
  std::map<BasisMonomial, size_t> index_;
  std::map<std::pair<size_t, size_t>, AlgebraElement> table_;
};

struct CertifyReport {
  std::vector<CheckLine> lines;
  bool ok() const;
};

// Associativity (all triples up to 32 basis elements, otherwise `samples`
// seeded triples; 0 picks 1000, or 250 above 400 basis elements), unit laws,
// basis count, closure, defining relations and independence of T_w from the
// reduced word.
CertifyReport certify_algebra(int n, int d, uint64_t seed = 1, int samples = 0);

}  // namespace tlb
