#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "gsa/algebra.hpp"

namespace gsa {

enum class VarKind { Y, Z };

struct StarVariable {
  int id = 0;
  VarKind kind = VarKind::Y;
  GroupElement degree;
  CompleteDegree complete() const { return {kind == VarKind::Y ? Sign::plus : Sign::minus, degree}; }
  friend bool operator==(const StarVariable&, const StarVariable&) = default;
};

struct Monomial {
  CycloScalar coef;
  std::vector<int> word;  // variable ids
};

// Multilinear polynomial in the free graded *-algebra; every word is a
// permutation of the declared variables.
class MultilinearPolynomial {
 public:
  MultilinearPolynomial() = default;
  MultilinearPolynomial(std::vector<StarVariable> vars, int conductor);

  const std::vector<StarVariable>& vars() const { return vars_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  int conductor() const { return m_; }
  size_t degree() const { return vars_.size(); }
  const StarVariable& var(int id) const;
  size_t position(int id) const;  // index of id in vars()

  // Adds c * word, merging equal words and dropping zero coefficients.
  void add(const CycloScalar& c, const std::vector<int>& word);
  MultilinearPolynomial& operator+=(const MultilinearPolynomial& o);
  MultilinearPolynomial scaled(const CycloScalar& c) const;
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const MultilinearPolynomial& a, const MultilinearPolynomial& b);

 private:
  std::vector<StarVariable> vars_;
  std::vector<Monomial> terms_;  // sorted by word
  int m_ = 1;
};

MultilinearPolynomial star_of_polynomial(const MultilinearPolynomial& f);
MultilinearPolynomial alternate(const MultilinearPolynomial& f, const std::vector<int>& S);
// [x_a, x_b] on two fresh variables.
MultilinearPolynomial commutator(const StarVariable& a, const StarVariable& b, int conductor);

// Value of f with values[i] substituted for vars()[i].
Vec evaluate(const GradedStarAlgebra& A, const MultilinearPolynomial& f, const std::vector<Vec>& values);

struct FormFactor {
  int f = 1;                            // 1 or 2
  std::vector<std::vector<int>> args;   // one or two nonempty sub-words
};

struct FormTerm {
  CycloScalar coef;
  std::vector<int> word;  // may be empty: then the term is a scalar times the unit
  std::vector<FormFactor> forms;
};

struct FormPolynomial {
  std::vector<StarVariable> vars;
  std::vector<FormTerm> terms;
  int conductor = 1;
  void validate() const;  // each variable used exactly once per term
};

// (f, a, b) -> f1(a) when f == 1, f2(a, b) when f == 2.
using FormEvaluator = std::function<CycloScalar(int, const Vec&, const Vec*)>;
Vec evaluate(const GradedStarAlgebra& A, const FormPolynomial& f, const std::vector<Vec>& values,
             const FormEvaluator& forms);

// Product of the values of the word's letters.
Vec evaluate_word(const GradedStarAlgebra& A, const std::vector<int>& word,
                  const std::function<const Vec&(int)>& value);

}  // namespace gsa
