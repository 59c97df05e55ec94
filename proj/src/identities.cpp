#include "gsa/identities.hpp"

#include <algorithm>
#include <numeric>

#include "gsa/error.hpp"

namespace gsa {

IdentityCheck is_identity(const GradedStarAlgebra& A, const MultilinearPolynomial& f) {
  IdentityCheck out;
  std::vector<std::vector<Vec>> pools;
  long double total = 1;
  for (const auto& v : f.vars()) {
    if (!(A.group().valid(v.degree))) throw Error(ErrorCode::WrongGroup, "variable degree");
    pools.push_back(A.component_basis(v.complete()));
    total *= pools.back().size();
  }
  if (total == 0) return out;
  if (total * std::max<size_t>(1, f.terms().size()) > static_cast<long double>(default_budget_cap()) * 100)
    throw Error(ErrorCode::ResourceCap, "too many evaluation tuples");
  std::vector<size_t> sel(pools.size(), 0);
  std::vector<Vec> vals(pools.size());
  while (true) {
    for (size_t i = 0; i < pools.size(); ++i) vals[i] = pools[i][sel[i]];
    charge(static_cast<long long>(f.terms().size() * std::max<size_t>(1, f.degree())));
    ++out.evaluations;
    Vec e = evaluate(A, f, vals);
    if (!is_zero(e)) {
      out.identity = false;
      out.witness = vals;
      out.value = e;
      return out;
    }
    // last variable varies fastest: lexicographic order of tuples
    size_t i = pools.size();
    while (i > 0) {
      --i;
      if (++sel[i] < pools[i].size()) break;
      sel[i] = 0;
      if (i == 0) return out;
    }
    if (pools.empty()) return out;
  }
}

std::vector<StarVariable> variables_for_multidegree(const FiniteAbelianGroup& G,
                                                    const std::vector<size_t>& counts) {
  if (counts.size() != 2 * G.order()) throw Error(ErrorCode::DimensionMismatch, "multidegree length");
  std::vector<StarVariable> vars;
  int id = 1;
  for (size_t c = 0; c < counts.size(); ++c) {
    auto d = complete_from_index(G, c);
    for (size_t k = 0; k < counts[c]; ++k)
      vars.push_back({id++, d.sign == Sign::plus ? VarKind::Y : VarKind::Z, d.degree});
  }
  return vars;
}

IdentitySpace identity_space_dimension(const GradedStarAlgebra& A, const std::vector<size_t>& counts) {
  auto vars = variables_for_multidegree(A.group(), counts);
  const size_t n = vars.size();
  const int m = A.conductor();
  IdentitySpace out;
  out.generic = MultilinearPolynomial(vars, m);
  std::vector<std::vector<int>> words;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do words.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  const size_t N = words.size();

  std::vector<std::vector<Vec>> pools;
  for (const auto& v : vars) pools.push_back(A.component_basis(v.complete()));
  Subspace rows(N, m);
  bool any_empty = false;
  for (const auto& p : pools) any_empty |= p.empty();
  if (!any_empty && n > 0) {
    std::vector<size_t> sel(n, 0);
    std::vector<Vec> vals(n);
    bool done = false;
    while (!done && rows.dim() < N) {
      for (size_t i = 0; i < n; ++i) vals[i] = pools[i][sel[i]];
      // one row per coordinate of A: coefficient of each word
      std::vector<Vec> cols;
      cols.reserve(N);
      for (const auto& word : words) {
        charge(static_cast<long long>(n));
        cols.push_back(evaluate_word(A, word, [&](int id) -> const Vec& { return vals[id - 1]; }));
      }
      for (size_t r = 0; r < A.dim(); ++r) {
        Vec row(N, A.zero_scalar());
        bool nz = false;
        for (size_t c = 0; c < N; ++c) {
          row[c] = cols[c][r];
          nz |= !row[c].is_zero();
        }
        if (nz) rows.insert(row);
      }
      size_t i = n;
      while (true) {
        if (i == 0) {
          done = true;
          break;
        }
        --i;
        if (++sel[i] < pools[i].size()) break;
        sel[i] = 0;
      }
    }
  }
  out.dim_quotient = rows.dim();
  out.dim_identities = N - rows.dim();
  for (const auto& k : kernel(rows.rows(), N, m)) {
    MultilinearPolynomial f(vars, m);
    for (size_t c = 0; c < N; ++c) f.add(k[c], words[c]);
    out.kernel.push_back(std::move(f));
  }
  return out;
}

std::vector<ElementaryElement> elementary_elements(const VerifiedDecomposition& dec) {
  std::vector<ElementaryElement> out;
  const size_t p = dec.data.components.size();
  for (size_t l = 0; l < p; ++l)
    for (size_t k = 0; k < dec.data.components[l].D.size(); ++k) {
      const auto& d = dec.data.components[l].D[k];
      out.push_back({d.vector, d.degree, false, {l + 1},
                     "d" + std::to_string(l + 1) + "[" + std::to_string(d.i) + "," + std::to_string(d.j) +
                         "]" + complete_to_string(d.degree)});
    }
  for (size_t k = 0; k < dec.data.U.size(); ++k) {
    const auto& u = dec.data.U[k];
    std::vector<size_t> t;
    if (u.l1 <= p) t.push_back(u.l1);
    if (u.l2 <= p && u.l2 != u.l1) t.push_back(u.l2);
    out.push_back({u.vector, u.degree, true, t,
                   "u" + std::to_string(k + 1) + "(" + std::to_string(u.l1) + "," + std::to_string(u.l2) +
                       ")" + complete_to_string(u.degree)});
  }
  return out;
}

ExactnessCheck is_exact(const VerifiedDecomposition& dec, const MultilinearPolynomial& f) {
  ExactnessCheck out;
  const auto& A = dec.algebra;
  const size_t p = dec.data.components.size();
  auto elems = elementary_elements(dec);
  std::vector<std::vector<size_t>> pools;
  for (const auto& v : f.vars()) {
    std::vector<size_t> pool;
    for (size_t e = 0; e < elems.size(); ++e)
      if (elems[e].degree == v.complete()) pool.push_back(e);
    if (pool.empty()) return out;
    pools.push_back(pool);
  }
  const size_t n = pools.size();
  if (n == 0) return out;
  std::vector<size_t> sel(n, 0);
  std::vector<Vec> vals(n);
  while (true) {
    size_t radicals = 0;
    std::vector<bool> touched(p + 1, false);
    for (size_t i = 0; i < n; ++i) {
      const auto& e = elems[pools[i][sel[i]]];
      vals[i] = e.vector;
      radicals += e.radical;
      for (size_t t : e.touches) touched[t] = true;
    }
    bool thin = static_cast<int>(radicals) < dec.nd - 1;
    bool incomplete = false;
    for (size_t l = 1; l <= p; ++l) incomplete |= !touched[l];
    if (thin || incomplete) {
      charge(static_cast<long long>(f.terms().size() * n));
      ++out.evaluations;
      if (!is_zero(evaluate(A, f, vals))) {
        out.exact = false;
        out.reason = thin ? "thin" : "incomplete";
        for (size_t i = 0; i < n; ++i) out.witness.push_back(elems[pools[i][sel[i]]].name);
        return out;
      }
    }
    size_t i = n;
    while (true) {
      if (i == 0) return out;
      --i;
      if (++sel[i] < pools[i].size()) break;
      sel[i] = 0;
    }
  }
}

}  // namespace gsa
