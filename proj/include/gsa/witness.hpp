#pragma once

#include <optional>
#include <vector>

#include "gsa/identities.hpp"

namespace gsa {

struct KemerWitness {
  int mu = 1;
  std::vector<StarVariable> vars;
  std::vector<int> word;                          // monomial before alternation
  std::vector<std::vector<std::vector<int>>> sets;  // sets[m] = classes of Y_(m)
  std::vector<Vec> assignment;                    // aligned with vars
  std::vector<size_t> type;                       // per complete index, size of every Y_(m)
  Vec value;                                      // f at the assignment
  Vec a;                                          // e r e ... e product it should be a multiple of
  std::optional<CycloScalar> alpha;
  std::vector<size_t> sigma;
  size_t hats = 0;
  std::optional<MultilinearPolynomial> f;         // expanded when small enough
  bool expanded_matches = false;
  long long evaluations = 0;
};

KemerWitness kemer_witness(const VerifiedDecomposition& dec, int mu, size_t expand_cap = 50000);
std::vector<size_t> beta_lower_bound(const GradedStarAlgebra& A, const VerifiedDecomposition& dec, int mu);

}  // namespace gsa
