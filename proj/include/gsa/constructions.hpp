#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gsa/algebra.hpp"
#include "gsa/decomposition.hpp"
#include "gsa/polynomial.hpp"

namespace gsa {

// An algebra together with the matrix-unit frames of its semisimple
// components (empty when unknown) and descriptive metadata.
struct Built {
  GradedStarAlgebra algebra;
  std::vector<ComponentFrame> frames;
  std::string name;
  int family = 0;  // classification family tag, 0 when not from the enumerator
};

struct ElementaryImage {
  int sign = 1;
  int i = 1, j = 1;
  GroupElement xi;
};
using ElementaryInvolutionSpec = std::map<std::tuple<int, int, GroupElement>, ElementaryImage>;

struct InvolutionChoice {
  enum Kind { elementary, transpose_family, symplectic_family, none } kind = transpose_family;
  int alpha = 1;
  ElementaryInvolutionSpec spec;
};

// Index of E_ij eta_xi (1-based i, j) in matrix_twisted's basis.
size_t twisted_index(int k, const Subgroup& H, int i, int j, const GroupElement& xi);

Built matrix_twisted(int k, const FiniteAbelianGroup& G, const Subgroup& H, const TwoCocycle& z,
                     const std::vector<GroupElement>& tuple, const InvolutionChoice& inv);

// Convenience: trivial cocycle of conductor exponent(G).
Built matrix_twisted(int k, const FiniteAbelianGroup& G, const Subgroup& H,
                     const std::vector<GroupElement>& tuple, const InvolutionChoice& inv);

// Reflection E_ij -> E_{k+1-j,k+1-i} extended to E_ij eta_xi with the degree
// correction on xi; sign = alpha^{chi(deg)} * pattern when chi applies.
ElementaryInvolutionSpec reflection_spec(int k, const FiniteAbelianGroup& G, const Subgroup& H,
                                         const std::vector<GroupElement>& tuple);

Built exchange_double(const Built& B);
Built direct_product(const std::vector<Built>& parts);
Built group_algebra_extension(const Built& B, const FiniteAbelianGroup& G);

// Upper triangular n x n matrices, elementary grading by tuple, reflection
// involution E_ij -> E_{n+1-j,n+1-i}.
Built upper_triangular(int n, const FiniteAbelianGroup& G, const std::vector<GroupElement>& tuple);

// B + B u with u^2 = 0, u central, u* = sign u, deg(b u) = deg b + shift.
Built square_zero_extension(const Built& B, int sign, const GroupElement& shift);

struct SuperAlgebra {
  GradedStarAlgebra algebra;  // over Z/2; star is the alpha-involution
  int alpha = 1;
};

SuperAlgebra phi_functor(const GradedStarAlgebra& C, const std::optional<Vec>& w = std::nullopt);
std::vector<Violation> verify_super_axioms(const SuperAlgebra& S);

// B + (free radical in q copies of Y and Z variables per degree), truncated at
// s variable letters and divided by the verbal ideal of the identities.
GradedStarAlgebra truncated_free_radical(const GradedStarAlgebra& B, int q, int s,
                                         const std::vector<MultilinearPolynomial>& identities = {});
// Number of normal-form words before the identity quotient.
size_t free_radical_word_count(size_t dimB, size_t group_order, int q, int s);

std::vector<Built> enumerate_classification(int q, int k_max);

}  // namespace gsa
