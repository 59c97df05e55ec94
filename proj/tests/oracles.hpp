// Brute-force reference computations shared by the unit and acceptance tests.
// They avoid the library's linear algebra and identity machinery on purpose.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "gsa/algebra.hpp"
#include "gsa/group.hpp"

namespace oracle {

using gsa::CycloScalar;
using gsa::Vec;

// Row space kept as a dense echelon list; returns the final rank.
class DenseEchelon {
 public:
  explicit DenseEchelon(size_t ncols) : n_(ncols) {}
  size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == n_; }
  void insert(std::vector<CycloScalar> r) {
    for (size_t k = 0; k < rows_.size(); ++k) {
      const auto& c = r[piv_[k]];
      if (c.is_zero()) continue;
      CycloScalar f = c;
      for (size_t j = 0; j < n_; ++j)
        if (!rows_[k][j].is_zero()) r[j] -= f * rows_[k][j];
    }
    size_t p = 0;
    while (p < n_ && r[p].is_zero()) ++p;
    if (p == n_) return;
    CycloScalar inv = r[p].inverse();
    for (auto& x : r) x *= inv;
    rows_.push_back(std::move(r));
    piv_.push_back(p);
  }

 private:
  size_t n_;
  std::vector<std::vector<CycloScalar>> rows_;
  std::vector<size_t> piv_;
};

// Spanning set of A_theta^delta: b + delta b* over basis vectors of degree theta.
inline std::vector<Vec> component_span(const gsa::GradedStarAlgebra& A, bool symmetric,
                                       const gsa::GroupElement& theta) {
  std::vector<Vec> out;
  for (size_t i = 0; i < A.dim(); ++i) {
    if (A.degree(i) != theta) continue;
    Vec b = A.basis(i);
    Vec s = A.star(b);
    Vec v = symmetric ? b + s : b - s;
    if (!gsa::is_zero(v)) out.push_back(v);
  }
  return out;
}

struct IdentityDims {
  size_t identities = 0;
  size_t quotient = 0;
};

// counts[2*g + (skew ? 1 : 0)] variables of degree elements()[g].
inline IdentityDims identity_dims(const gsa::GradedStarAlgebra& A, const std::vector<size_t>& counts) {
  const auto& els = A.group().elements();
  std::vector<std::vector<Vec>> spans;
  for (size_t c = 0; c < counts.size(); ++c)
    for (size_t r = 0; r < counts[c]; ++r) spans.push_back(component_span(A, c % 2 == 0, els[c / 2]));
  const size_t n = spans.size();
  std::vector<std::vector<int>> monomials;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do monomials.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  DenseEchelon E(monomials.size());
  bool empty = std::any_of(spans.begin(), spans.end(), [](const auto& s) { return s.empty(); });
  if (!empty) {
    std::vector<size_t> pick(n, 0);
    while (!E.full()) {
      std::vector<Vec> products;
      for (const auto& w : monomials) {
        Vec v = spans[w[0]][pick[w[0]]];
        for (size_t k = 1; k < n; ++k) v = A.multiply(v, spans[w[k]][pick[w[k]]]);
        products.push_back(v);
      }
      for (size_t coord = 0; coord < A.dim(); ++coord) {
        std::vector<CycloScalar> row;
        for (const auto& p : products) row.push_back(p[coord]);
        E.insert(std::move(row));
      }
      bool done = true;
      for (size_t k = n; k-- > 0;) {
        if (++pick[k] < spans[k].size()) { done = false; break; }
        pick[k] = 0;
      }
      if (done) break;
    }
  }
  return {monomials.size() - E.rank(), E.rank()};
}

// Words g0 x1 g1 ... xk gk (k = 1..s-1), each gap empty or one of dimB basis
// elements, each letter one of 2*q*|G| variables; plus B itself.
inline size_t free_radical_words(size_t dimB, size_t group_order, int q, int s) {
  const size_t letters = 2 * static_cast<size_t>(q) * group_order;
  size_t count = dimB;
  // walk every word explicitly, counting leaves
  std::function<void(int, int)> walk = [&](int placed, int target) {
    if (placed == target) {
      for (size_t g = 0; g <= dimB; ++g) ++count;  // closing gap
      return;
    }
    for (size_t g = 0; g <= dimB; ++g)
      for (size_t x = 0; x < letters; ++x) walk(placed + 1, target);
  };
  for (int k = 1; k < s; ++k) walk(0, k);
  return count;
}

}  // namespace oracle
