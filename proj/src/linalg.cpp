#include "gsa/linalg.hpp"

#include <algorithm>

#include "gsa/error.hpp"

namespace gsa {

Vec zero_vec(size_t n, int conductor) { return Vec(n, CycloScalar(conductor)); }

Vec unit_vec(size_t n, int conductor, size_t i) {
  Vec v = zero_vec(n, conductor);
  v.at(i) = CycloScalar(conductor, 1L);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const CycloScalar& x) { return x.is_zero(); });
}

void axpy(Vec& y, const CycloScalar& a, const Vec& x) {
  if (y.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "axpy");
  if (a.is_zero()) return;
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i].add_product(a, x[i]);
}

Vec scaled(Vec v, const CycloScalar& a) {
  for (auto& x : v)
    if (!x.is_zero()) x *= a;
  return v;
}

Vec operator+(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum");
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec operator-(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector difference");
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

std::optional<CycloScalar> proportional(const Vec& v, const Vec& a) {
  size_t i = 0;
  while (i < a.size() && a[i].is_zero()) ++i;
  if (i == a.size()) return std::nullopt;
  CycloScalar c = v[i] / a[i];
  Vec d = v;
  axpy(d, -c, a);
  if (!is_zero(d)) return std::nullopt;
  return c;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "subspace reduce");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const CycloScalar& c = v[piv_[r]];
    if (!c.is_zero()) axpy(v, -CycloScalar(c), rows_[r]);
  }
  return v;
}

bool Subspace::insert(const Vec& v0) {
  Vec v = reduce(v0);
  size_t p = 0;
  while (p < n_ && v[p].is_zero()) ++p;
  if (p == n_) return false;
  v = scaled(std::move(v), v[p].inverse());
  for (auto& row : rows_) {
    const CycloScalar& c = row[p];
    if (!c.is_zero()) axpy(row, -CycloScalar(c), v);
  }
  size_t pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
  rows_.insert(rows_.begin() + pos, std::move(v));
  piv_.insert(piv_.begin() + pos, p);
  return true;
}

bool Subspace::contains(const Subspace& o) const {
  for (const auto& r : o.rows())
    if (!contains(r)) return false;
  return true;
}

Subspace span_of(size_t ambient, int conductor, const std::vector<Vec>& vs) {
  Subspace s(ambient, conductor);
  for (const auto& v : vs) s.insert(v);
  return s;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  // x = sum s_i a_i = sum t_j b_j: kernel of [a; -b]^T
  size_t k = a.dim() + b.dim();
  std::vector<Vec> eqs;
  for (size_t c = 0; c < a.ambient(); ++c) {
    Vec row = zero_vec(k, a.conductor());
    for (size_t i = 0; i < a.dim(); ++i) row[i] = a.rows()[i][c];
    for (size_t j = 0; j < b.dim(); ++j) row[a.dim() + j] = -b.rows()[j][c];
    eqs.push_back(std::move(row));
  }
  Subspace out(a.ambient(), a.conductor());
  for (const auto& sol : kernel(eqs, k, a.conductor())) {
    Vec x = zero_vec(a.ambient(), a.conductor());
    for (size_t i = 0; i < a.dim(); ++i) axpy(x, sol[i], a.rows()[i]);
    out.insert(x);
  }
  return out;
}

Coordinatizer::Coordinatizer(size_t ambient, int conductor, const std::vector<Vec>& basis)
    : n_(ambient), k_(basis.size()), m_(conductor) {
  for (size_t s = 0; s < k_; ++s) {
    Vec v = basis[s];
    Vec combo = unit_vec(k_, m_, s);
    for (size_t r = 0; r < rows_.size(); ++r) {
      CycloScalar c = v[piv_[r]];
      if (c.is_zero()) continue;
      axpy(v, -c, rows_[r]);
      axpy(combo, -c, combo_[r]);
    }
    size_t p = 0;
    while (p < n_ && v[p].is_zero()) ++p;
    if (p == n_) {
      independent_ = false;
      continue;
    }
    CycloScalar inv = v[p].inverse();
    v = scaled(std::move(v), inv);
    combo = scaled(std::move(combo), inv);
    rows_.push_back(std::move(v));
    combo_.push_back(std::move(combo));
    piv_.push_back(p);
  }
}

std::optional<Vec> Coordinatizer::coordinates(const Vec& v0) const {
  Vec v = v0;
  Vec out = zero_vec(k_, m_);
  for (size_t r = 0; r < rows_.size(); ++r) {
    CycloScalar c = v[piv_[r]];
    if (c.is_zero()) continue;
    axpy(v, -c, rows_[r]);
    axpy(out, c, combo_[r]);
  }
  if (!is_zero(v)) return std::nullopt;
  return out;
}

std::vector<Vec> kernel(const std::vector<Vec>& rows, size_t ncols, int conductor) {
  Subspace s(ncols, conductor);
  for (const auto& r : rows) s.insert(r);
  std::vector<bool> is_piv(ncols, false);
  for (size_t p : s.pivots()) is_piv[p] = true;
  std::vector<Vec> out;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    Vec x = unit_vec(ncols, conductor, f);
    for (size_t r = 0; r < s.dim(); ++r) x[s.pivots()[r]] = -s.rows()[r][f];
    out.push_back(std::move(x));
  }
  return out;
}

size_t rank(const std::vector<Vec>& rows, size_t ncols, int conductor) {
  return span_of(ncols, conductor, rows).dim();
}

SparseEchelon::SparseEchelon(size_t ambient, int conductor)
    : n_(ambient), m_(conductor), pivot_row_(ambient, -1), acc_(zero_vec(ambient, conductor)),
      touched_(ambient, 0) {}

bool SparseEchelon::insert(const SparseVec& v) {
  std::vector<uint32_t> live;
  for (const auto& [i, c] : v) {
    if (c.is_zero()) continue;
    acc_[i] += c;
    if (!touched_[i]) {
      touched_[i] = 1;
      live.push_back(i);
    }
  }
  // process columns in increasing order; subtraction only adds later columns
  std::sort(live.begin(), live.end());
  size_t pos = 0;
  std::vector<uint32_t> extra;
  SparseVec out;
  auto next_col = [&]() -> long {
    if (!extra.empty()) {
      std::sort(extra.begin(), extra.end());
      std::vector<uint32_t> merged;
      std::merge(live.begin() + pos, live.end(), extra.begin(), extra.end(),
                 std::back_inserter(merged));
      live.assign(merged.begin(), merged.end());
      pos = 0;
      extra.clear();
    }
    if (pos == live.size()) return -1;
    return live[pos++];
  };
  long col;
  bool placed = false;
  CycloScalar lead(m_);
  while ((col = next_col()) >= 0) {
    CycloScalar c = acc_[col];
    acc_[col] = CycloScalar(m_);
    touched_[col] = 0;
    if (c.is_zero()) continue;
    if (!placed && pivot_row_[col] >= 0) {
      const SparseVec& row = rows_[pivot_row_[col]];
      charge(static_cast<long long>(row.size()));
      for (size_t t = 1; t < row.size(); ++t) {
        uint32_t j = row[t].first;
        acc_[j].add_product(-c, row[t].second);
        if (!touched_[j]) {
          touched_[j] = 1;
          extra.push_back(j);
        }
      }
      continue;
    }
    if (!placed) {
      placed = true;
      lead = c.inverse();
      out.emplace_back(static_cast<uint32_t>(col), CycloScalar(m_, 1L));
    } else {
      out.emplace_back(static_cast<uint32_t>(col), c * lead);
    }
  }
  if (!placed) return false;
  pivot_row_[out.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(out));
  return true;
}

}  // namespace gsa
