#pragma once

#include <cstdint>

#include "gsa/algebra.hpp"

namespace gsa {

Subspace jacobson_radical(const GradedStarAlgebra& A);

// Smallest s with J^s = 0 (1 for J = 0).
int nilpotency_degree(const GradedStarAlgebra& A, const Subspace& J);
// Span of all products x_1 ... x_s with x_i in the given subspaces.
Subspace product_space(const GradedStarAlgebra& A, const Subspace& X, const Subspace& Y);

struct SimplicityVerdict {
  enum Kind { simple, not_simple, inconclusive } kind = inconclusive;
  size_t operator_algebra_dim = 0;  // dim of the span generated by S
  Subspace witness;                 // proper invariant subspace when not_simple
};

SimplicityVerdict is_star_graded_simple(const GradedStarAlgebra& A, uint64_t seed = 1);
const char* verdict_name(SimplicityVerdict::Kind k);

}  // namespace gsa
