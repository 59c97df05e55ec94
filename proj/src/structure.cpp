#include "gsa/structure.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "gsa/error.hpp"

namespace gsa {

Subspace jacobson_radical(const GradedStarAlgebra& A) {
  const size_t n = A.dim();
  const int m = A.conductor();
  // tau_k = Tr(L_{b_k}); Tr(L_{b_i b_j}) = sum_k c_ij^k tau_k
  std::vector<CycloScalar> tau(n, A.zero_scalar());
  for (size_t k = 0; k < n; ++k) tau[k] = trace_left(A, A.basis(k));
  // rows indexed by y in {b_0..b_{n-1}, 1}; x in the radical iff sum_i x_i Tr(L_{b_i y}) = 0
  std::vector<Vec> rows;
  for (size_t j = 0; j < n; ++j) {
    Vec row = zero_vec(n, m);
    for (size_t i = 0; i < n; ++i)
      for (const auto& t : A.product(i, j)) row[i].add_product(t.coeff, tau[t.index]);
    rows.push_back(std::move(row));
  }
  rows.push_back(tau);
  return span_of(n, m, kernel(rows, n, m));
}

Subspace product_space(const GradedStarAlgebra& A, const Subspace& X, const Subspace& Y) {
  Subspace out(A.dim(), A.conductor());
  for (const auto& x : X.rows())
    for (const auto& y : Y.rows()) out.insert(A.multiply(x, y));
  return out;
}

int nilpotency_degree(const GradedStarAlgebra& A, const Subspace& J) {
  int s = 1;
  Subspace P = J;
  while (P.dim() > 0) {
    Subspace next = product_space(A, J, P);
    if (next.dim() == P.dim()) throw Error(ErrorCode::NotNilpotent, "powers stabilize at a nonzero space");
    P = std::move(next);
    ++s;
  }
  return s;
}

namespace {

using Column = std::vector<Term>;
using Operator = std::vector<Column>;  // images of the basis vectors

void add_scaled(std::vector<CycloScalar>& acc, std::vector<char>& used, std::vector<size_t>& idx,
                const Column& col, const CycloScalar& c) {
  for (const auto& t : col) {
    if (!used[t.index]) {
      used[t.index] = 1;
      idx.push_back(t.index);
    }
    acc[t.index].add_product(c, t.coeff);
  }
}

// Applies op to every column of x (op o x).
Operator compose(const Operator& op, const Operator& x, int m) {
  size_t n = op.size();
  Operator out(n);
  std::vector<CycloScalar> acc(n, CycloScalar(m));
  std::vector<char> used(n, 0);
  for (size_t j = 0; j < n; ++j) {
    std::vector<size_t> idx;
    for (const auto& t : x[j]) add_scaled(acc, used, idx, op[t.index], t.coeff);
    std::sort(idx.begin(), idx.end());
    for (size_t i : idx) {
      if (!acc[i].is_zero()) out[j].push_back({i, acc[i]});
      acc[i] = CycloScalar(m);
      used[i] = 0;
    }
    charge(static_cast<long long>(x[j].size()));
  }
  return out;
}

SparseVec flatten(const Operator& op) {
  SparseVec v;
  size_t n = op.size();
  for (size_t j = 0; j < n; ++j)
    for (const auto& t : op[j]) v.emplace_back(static_cast<uint32_t>(j * n + t.index), t.coeff);
  return v;
}

Operator identity_op(size_t n, int m) {
  Operator op(n);
  for (size_t j = 0; j < n; ++j) op[j].push_back({j, CycloScalar(m, 1L)});
  return op;
}

std::vector<Operator> generating_operators(const GradedStarAlgebra& A) {
  const size_t n = A.dim();
  std::vector<Operator> S;
  for (size_t a = 0; a < n; ++a) {
    Operator L(n), R(n);
    for (size_t j = 0; j < n; ++j) {
      L[j] = A.product(a, j);
      R[j] = A.product(j, a);
    }
    S.push_back(std::move(L));
    S.push_back(std::move(R));
  }
  Operator st(n);
  for (size_t j = 0; j < n; ++j) st[j] = A.star_image(j);
  S.push_back(std::move(st));
  for (const auto& theta : A.group().elements()) {
    Operator P(n);
    for (size_t j = 0; j < n; ++j)
      if (A.degree(j) == theta) P[j].push_back({j, CycloScalar(A.conductor(), 1L)});
    S.push_back(std::move(P));
  }
  return S;
}

size_t operator_algebra_dim(const GradedStarAlgebra& A) {
  const size_t n = A.dim();
  const int m = A.conductor();
  SparseEchelon E(n * n, m);
  if (A.unit()) {
    // with a unit every word reduces to L_a R_b pi_theta star^e
    std::vector<Operator> L(n, Operator(n)), R(n, Operator(n));
    for (size_t a = 0; a < n; ++a)
      for (size_t j = 0; j < n; ++j) {
        L[a][j] = A.product(a, j);
        R[a][j] = A.product(j, a);
      }
    for (int e = 0; e < 2; ++e) {
      for (const auto& theta : A.group().elements()) {
        Operator base(n);
        for (size_t j = 0; j < n; ++j) {
          if (A.degree(j) != theta) continue;
          base[j] = e ? A.star_image(j) : Column{{j, CycloScalar(m, 1L)}};
        }
        for (size_t b = 0; b < n; ++b) {
          Operator rb = compose(R[b], base, m);
          for (size_t a = 0; a < n; ++a) {
            E.insert(flatten(compose(L[a], rb, m)));
            if (E.dim() == n * n) return E.dim();
          }
        }
      }
    }
    return E.dim();
  }
  std::vector<Operator> S = generating_operators(A);
  std::deque<Operator> todo;
  Operator id = identity_op(n, m);
  if (E.insert(flatten(id))) todo.push_back(id);
  for (const auto& s : S)
    if (E.insert(flatten(s))) todo.push_back(s);
  while (!todo.empty() && E.dim() < n * n) {
    Operator op = std::move(todo.front());
    todo.pop_front();
    for (const auto& s : S) {
      Operator w = compose(s, op, m);
      if (E.insert(flatten(w))) todo.push_back(std::move(w));
    }
  }
  return E.dim();
}

}  // namespace

SimplicityVerdict is_star_graded_simple(const GradedStarAlgebra& A, uint64_t seed) {
  if (A.dim() == 0) throw Error(ErrorCode::InvalidSpec, "zero algebra");
  SimplicityVerdict v;
  v.operator_algebra_dim = operator_algebra_dim(A);
  if (v.operator_algebra_dim == A.dim() * A.dim()) {
    v.kind = SimplicityVerdict::simple;
    return v;
  }
  auto try_vector = [&](const Vec& x) {
    if (is_zero(x)) return false;
    Subspace I = ideal_closure(A, {x});
    if (I.dim() > 0 && I.dim() < A.dim()) {
      v.kind = SimplicityVerdict::not_simple;
      v.witness = I;
      return true;
    }
    return false;
  };
  for (size_t i = 0; i < A.dim(); ++i)
    if (try_vector(A.basis(i))) return v;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int r = 0; r < 32; ++r) {
    Vec x = A.zero();
    for (size_t i = 0; i < A.dim(); ++i) x[i] = A.scalar(coef(rng));
    if (try_vector(x)) return v;
  }
  v.kind = SimplicityVerdict::inconclusive;
  return v;
}

const char* verdict_name(SimplicityVerdict::Kind k) {
  switch (k) {
    case SimplicityVerdict::simple: return "simple";
    case SimplicityVerdict::not_simple: return "not_simple";
    case SimplicityVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace gsa
