#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlb/algebra.hpp"
#include "tlb/coeff.hpp"

namespace tlb {

struct TraceParams {
  int d = 1;
  Scalar z;
  std::vector<Scalar> x;  // x[0] == 1
  std::vector<Scalar> y;

  static TraceParams symbolic(int d);
  // bindings for the symbolic trace variables that differ from their symbols
  Bindings bindings() const;
};

// Symbolic Markov trace with a memo of basis monomial values.  The value of
// a basis monomial is a polynomial in z, x_1..x_{d-1}, y_0..y_{d-1} with
// Laurent coefficients in u, v.
class Tracer {
 public:
  explicit Tracer(int d) : d_(d) {}

  int d() const { return d_; }
  const Poly& monomial(const BasisMonomial& m);
  Scalar symbolic(const AlgebraElement& x);
  Scalar operator()(const AlgebraElement& x, const TraceParams& p);

  // b_n - T_{r_n} in normal form, framing zero
  const AlgebraElement& loop_correction(int n);

 private:
  Poly compute(const BasisMonomial& m);

  int d_;
  std::map<BasisMonomial, Poly> memo_;
  std::map<int, AlgebraElement> correction_;
};

Scalar trace(const AlgebraElement& x, const TraceParams& p);
Scalar trace_of_word(const Word& w, int n, int d, const TraceParams& p);

enum class QuotientKind { TLB, FTLB };

struct AnnihilationResult {
  bool ok = true;
  std::optional<BasisMonomial> witness;
  IdealKind generator = IdealKind::H12;
  Scalar value;
};

// Symbolic traces Tr(m r) for every basis monomial m and both ideal
// generators r, reusable across parameter choices.
class IdealTraceTable {
 public:
  IdealTraceTable(QuotientKind kind, int n, int d);
  AnnihilationResult check(const TraceParams& p) const;
  size_t distinct_values() const { return reps_.size(); }

 private:
  struct Entry {
    BasisMonomial m;
    IdealKind r;
    Poly value;
  };
  std::vector<Entry> entries_;
  std::vector<size_t> reps_;  // indices of pairwise non-proportional entries
  std::vector<size_t> rep_of_;
};

AnnihilationResult annihilates_ideal(QuotientKind kind, int n, int d, const TraceParams& p);

struct CheckLine {
  std::string label;
  bool pass = false;
  std::string detail;
  bool informational = false;  // reported, not gating
};

// Closed-form trace identities for framed ideal words, with variant reports.
// Each line covers every m in Z/dZ.
std::vector<CheckLine> reduced_trace_checks(int d);

}  // namespace tlb
