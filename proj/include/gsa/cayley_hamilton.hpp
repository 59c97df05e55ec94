#pragma once

#include <map>
#include <string>
#include <vector>

#include "gsa/forms.hpp"

namespace gsa {

// Polynomial in commuting indeterminates lambda_1..lambda_r over Q(zeta_m).
class LambdaPoly {
 public:
  using Exponents = std::vector<int>;
  LambdaPoly() = default;
  static LambdaPoly constant(const CycloScalar& c, size_t nvars);
  static LambdaPoly variable(size_t j, size_t nvars, int conductor);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, CycloScalar>& terms() const { return terms_; }
  LambdaPoly& operator+=(const LambdaPoly& o);
  LambdaPoly& add_scaled(const LambdaPoly& o, const CycloScalar& c);
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
  std::string to_string() const;

 private:
  std::map<Exponents, CycloScalar> terms_;
};

struct CHTerm {
  int i0 = 0;
  std::vector<std::pair<int, int>> f2;  // (i, j), i <= j
  std::vector<int> f1;
  CycloScalar alpha;
  std::string to_string() const;
};

struct CHFit {
  int degree = 0;                 // 3t + 1
  int nd = 1;
  size_t generic_dim = 0;         // number of lambda indeterminates
  std::vector<CHTerm> terms;      // every term of the shape, with its coefficient
  size_t equations = 0;
  bool projection_vanishes = false;
  bool power_vanishes = false;    // K(x)^nd == 0 term by term
  size_t power_monomials_checked = 0;
};

// t_cap bounds dim B (default 2).
CHFit fit_cayley_hamilton(const VerifiedDecomposition& dec, size_t t_cap = 2);

}  // namespace gsa
