#pragma once

#include "gsa/constructions.hpp"
#include "gsa/decomposition.hpp"

namespace fx {

using namespace gsa;

inline const FiniteAbelianGroup& Z2() {
  static const FiniteAbelianGroup g({2});
  return g;
}
inline const GroupElement g0{0}, g1{1};

inline InvolutionChoice transpose(int alpha = 1) { return {InvolutionChoice::transpose_family, alpha, {}}; }
inline InvolutionChoice no_star() { return {InvolutionChoice::none, 1, {}}; }

// M_1(F) graded by Z/2, identity involution
inline Built field() { return matrix_twisted(1, Z2(), {g0}, {g0}, transpose()); }
// M_1(F[Z/2]) with star(eta_1) = alpha eta_1
inline Built group_algebra(int alpha = 1) { return matrix_twisted(1, Z2(), {g0, g1}, {g0}, transpose(alpha)); }
inline Built m2(const GroupElement& a, const GroupElement& b) { return matrix_twisted(2, Z2(), {g0}, {a, b}, transpose()); }
inline Built ut(int n, std::vector<GroupElement> tuple = {}) {
  if (tuple.empty()) tuple.assign(n, g0);
  return upper_triangular(n, Z2(), tuple);
}
inline Built exchange_field() { return exchange_double(matrix_twisted(1, Z2(), {g0}, {g0}, no_star())); }

inline VerifiedDecomposition verified(const Built& b) {
  return certify(b.algebra, build_decomposition(b.algebra, b.frames));
}

inline size_t index_of_label(const GradedStarAlgebra& A, const std::string& l) {
  for (size_t i = 0; i < A.dim(); ++i)
    if (A.labels()[i] == l) return i;
  throw std::runtime_error("no label " + l);
}
inline Vec el(const GradedStarAlgebra& A, const std::string& l) { return A.basis(index_of_label(A, l)); }

}  // namespace fx
