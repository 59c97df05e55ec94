#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsa/identities.hpp"

namespace gsa {

// Precomputed f1 / f2 on the standard basis of A.
class TraceForms {
 public:
  explicit TraceForms(const VerifiedDecomposition& dec);
  CycloScalar f1(const Vec& a) const;
  CycloScalar f2(const Vec& a, const Vec& b) const;
  const Vec& f1_basis() const { return f1_; }
  const std::vector<Vec>& f2_basis() const { return f2_; }
  FormEvaluator evaluator() const;

 private:
  int m_;
  Vec f1_;
  std::vector<Vec> f2_;
};

// f1(a1) when a2 is absent, f2(a1, a2) otherwise.
CycloScalar trace_forms(const VerifiedDecomposition& dec, const Vec& a1, const std::optional<Vec>& a2 = std::nullopt);

struct TraceIdentityReport {
  bool ok = true;
  std::vector<std::string> checks;  // one line per verified family
  std::vector<std::string> counterexample;
  long long evaluations = 0;
};

// A polynomial of type (dims_gi; nd-1; 1): alternating on x_vars (one
// variable per D element) and on nd-1 larger sets that add a radical variable.
struct TraceTestPolynomial {
  MultilinearPolynomial f;
  std::vector<int> x_vars;
  std::vector<std::vector<int>> alternating_classes;  // same-degree classes of every set
};
TraceTestPolynomial trace_test_polynomial(const VerifiedDecomposition& dec);

TraceIdentityReport check_trace_identities(const VerifiedDecomposition& dec, const MultilinearPolynomial& f,
                                           const std::vector<int>& x_vars,
                                           const std::vector<std::vector<int>>& alternating_classes = {});

}  // namespace gsa
