#pragma once

#include <random>

#include "tlb/coeff.hpp"

namespace tlbtest {

using tlb::Poly;
using tlb::Scalar;

inline int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

// Nonzero Laurent polynomial in u, v, z with small integer coefficients.
inline Poly random_poly(std::mt19937_64& rng, int max_terms = 3) {
  Poly p;
  while (p.is_zero()) {
    int terms = pick(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
      long c = pick(rng, -3, 3);
      if (c == 0) c = 1;
      p += Poly(c) * Poly::var(tlb::kU, pick(rng, -2, 2)) * Poly::var(tlb::kV, pick(rng, -2, 2)) *
           Poly::var(tlb::kZ, pick(rng, 0, 2));
    }
  }
  return p;
}

inline Scalar random_scalar(std::mt19937_64& rng) {
  if (rng() % 4 == 0) return Scalar(random_poly(rng));
  return Scalar(random_poly(rng), random_poly(rng, 2));
}

}  // namespace tlbtest
