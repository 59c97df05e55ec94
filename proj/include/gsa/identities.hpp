#pragma once

#include <optional>
#include <vector>

#include "gsa/decomposition.hpp"
#include "gsa/polynomial.hpp"

namespace gsa {

struct IdentityCheck {
  bool identity = true;
  std::vector<Vec> witness;  // first nonzero tuple in lexicographic order
  Vec value;
  long long evaluations = 0;
};

IdentityCheck is_identity(const GradedStarAlgebra& A, const MultilinearPolynomial& f);

// counts[complete_index] = number of variables of that complete degree.
struct IdentitySpace {
  size_t dim_identities = 0;  // dim Gamma_n
  size_t dim_quotient = 0;    // dim P_n / Gamma_n
  std::vector<MultilinearPolynomial> kernel;
  MultilinearPolynomial generic;  // variables used, no terms
};

IdentitySpace identity_space_dimension(const GradedStarAlgebra& A, const std::vector<size_t>& counts);

// Variables 1..n laid out by complete index, as used by identity_space_dimension.
std::vector<StarVariable> variables_for_multidegree(const FiniteAbelianGroup& G,
                                                    const std::vector<size_t>& counts);

// D and U elements with their complete degrees and touched components.
struct ElementaryElement {
  Vec vector;
  CompleteDegree degree;
  bool radical = false;
  std::vector<size_t> touches;  // 1-based component indices (<= p)
  std::string name;
};
std::vector<ElementaryElement> elementary_elements(const VerifiedDecomposition& dec);

struct ExactnessCheck {
  bool exact = true;
  std::vector<std::string> witness;  // element names
  std::string reason;                // "thin" or "incomplete"
  long long evaluations = 0;
};

ExactnessCheck is_exact(const VerifiedDecomposition& dec, const MultilinearPolynomial& f);

}  // namespace gsa
