#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gsa/cyclo.hpp"

namespace gsa {

using Vec = std::vector<CycloScalar>;

Vec zero_vec(size_t n, int conductor);
Vec unit_vec(size_t n, int conductor, size_t i);
bool is_zero(const Vec& v);
void axpy(Vec& y, const CycloScalar& a, const Vec& x);  // y += a x
Vec scaled(Vec v, const CycloScalar& a);
Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
std::optional<CycloScalar> proportional(const Vec& v, const Vec& a);  // v = c a

// Subspace kept in reduced row echelon form; the first nonzero entry of every
// row is 1 and rows are sorted by pivot, so equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  Subspace(size_t ambient, int conductor) : n_(ambient), m_(conductor) {}

  size_t ambient() const { return n_; }
  int conductor() const { return m_; }
  size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return piv_; }

  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  bool insert(const Vec& v);  // true when the dimension grew
  bool contains(const Subspace& o) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  size_t n_ = 0;
  int m_ = 1;
  std::vector<Vec> rows_;
  std::vector<size_t> piv_;
};

Subspace span_of(size_t ambient, int conductor, const std::vector<Vec>& vs);
Subspace intersect(const Subspace& a, const Subspace& b);

// Coordinates with respect to a fixed (independent) list of vectors.
class Coordinatizer {
 public:
  Coordinatizer(size_t ambient, int conductor, const std::vector<Vec>& basis);
  size_t size() const { return k_; }
  bool independent() const { return independent_; }
  std::optional<Vec> coordinates(const Vec& v) const;

 private:
  size_t n_, k_;
  int m_;
  bool independent_ = true;
  std::vector<Vec> rows_;   // echelon rows
  std::vector<Vec> combo_;  // rows_[r] = sum combo_[r][s] basis[s]
  std::vector<size_t> piv_;
};

// Basis of {x : sum_j rows[i][j] x_j = 0 for all i}.
std::vector<Vec> kernel(const std::vector<Vec>& rows, size_t ncols, int conductor);
size_t rank(const std::vector<Vec>& rows, size_t ncols, int conductor);

using SparseVec = std::vector<std::pair<uint32_t, CycloScalar>>;

// Echelon form with sparse rows, used for large ambient spaces (operator
// algebras). Rows are not back-substituted; only the dimension is exposed.
class SparseEchelon {
 public:
  SparseEchelon(size_t ambient, int conductor);
  bool insert(const SparseVec& v);
  size_t dim() const { return rows_.size(); }

 private:
  size_t n_;
  int m_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivot_row_;
  Vec acc_;
  std::vector<char> touched_;
};

}  // namespace gsa
