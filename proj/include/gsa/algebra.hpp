#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gsa/group.hpp"
#include "gsa/linalg.hpp"

namespace gsa {

struct Term {
  size_t index;
  CycloScalar coeff;
  friend bool operator==(const Term&, const Term&) = default;
};
using TermList = std::vector<Term>;

// Finite-dimensional G-graded algebra with involution, given on a basis of
// G-homogeneous elements by sparse structure constants.
class GradedStarAlgebra {
 public:
  GradedStarAlgebra() = default;
  GradedStarAlgebra(FiniteAbelianGroup G, int conductor, std::vector<std::string> labels,
                    std::vector<GroupElement> grading);

  const FiniteAbelianGroup& group() const { return G_; }
  int conductor() const { return m_; }
  size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<GroupElement>& grading() const { return grading_; }
  const GroupElement& degree(size_t i) const { return grading_[i]; }

  const TermList& product(size_t i, size_t j) const { return mult_[i * dim() + j]; }
  void set_product(size_t i, size_t j, TermList t);
  const TermList& star_image(size_t i) const { return star_[i]; }
  void set_star(size_t i, TermList t);
  const std::optional<Vec>& unit() const { return unit_; }
  void set_unit(std::optional<Vec> u) { unit_ = std::move(u); }

  CycloScalar scalar(long num, long den = 1) const { return CycloScalar(m_, num, den); }
  CycloScalar zero_scalar() const { return CycloScalar(m_); }
  Vec zero() const { return zero_vec(dim(), m_); }
  Vec basis(size_t i) const { return unit_vec(dim(), m_, i); }

  Vec multiply(const Vec& u, const Vec& v) const;
  Vec star(const Vec& u) const;
  Vec project_group(const Vec& u, const GroupElement& theta) const;
  Vec project_sign(const Vec& u, Sign s) const;
  Vec project(const Vec& u, const CompleteDegree& d) const;
  // u v + v u
  Vec jordan(const Vec& u, const Vec& v) const { return multiply(u, v) + multiply(v, u); }

  // G-degree of a homogeneous nonzero element, if it is homogeneous.
  std::optional<GroupElement> homogeneous_degree(const Vec& u) const;
  std::optional<CompleteDegree> complete_degree(const Vec& u) const;

  // Basis (rows of the echelon form) of the component A_theta^delta.
  std::vector<Vec> component_basis(const CompleteDegree& d) const;

  friend bool operator==(const GradedStarAlgebra&, const GradedStarAlgebra&) = default;

 private:
  void check(const Vec& u) const;
  FiniteAbelianGroup G_;
  int m_ = 1;
  std::vector<std::string> labels_;
  std::vector<GroupElement> grading_;
  std::vector<TermList> mult_;
  std::vector<TermList> star_;
  std::optional<Vec> unit_;
};

TermList to_terms(const Vec& v);
Vec from_terms(const TermList& t, size_t n, int conductor);

struct Violation {
  std::string axiom;
  std::vector<size_t> witness;  // basis indices
  std::string detail;
};

std::vector<Violation> verify_axioms(const GradedStarAlgebra& A);

using Projection = std::variant<std::monostate, GroupElement, CompleteDegree>;
Vec multiply_project(const GradedStarAlgebra& A, const Vec& u, const Vec& v,
                     const Projection& proj = std::monostate{});

// Smallest graded *-ideal containing the generators.
Subspace ideal_closure(const GradedStarAlgebra& A, const std::vector<Vec>& generators);

// Algebra on span(basis) when that span is a graded, star-closed subalgebra
// and basis consists of G-homogeneous vectors.
GradedStarAlgebra subalgebra(const GradedStarAlgebra& A, const std::vector<Vec>& basis,
                             const std::vector<std::string>& labels = {});

// A / I for a graded *-ideal I; basis = non-pivot coordinates of I.
GradedStarAlgebra quotient(const GradedStarAlgebra& A, const Subspace& I);

// Two-sided identity element, if one exists.
std::optional<Vec> find_unit(const GradedStarAlgebra& A);

// Matrix (rows) of left multiplication by u: column j is u * b_j.
std::vector<Vec> left_matrix(const GradedStarAlgebra& A, const Vec& u);
CycloScalar trace_left(const GradedStarAlgebra& A, const Vec& u);

}  // namespace gsa
