#include "gsa/cayley_hamilton.hpp"

#include <functional>

#include "gsa/error.hpp"

namespace gsa {

LambdaPoly LambdaPoly::constant(const CycloScalar& c, size_t nvars) {
  LambdaPoly p;
  if (!c.is_zero()) p.terms_[Exponents(nvars, 0)] = c;
  return p;
}

LambdaPoly LambdaPoly::variable(size_t j, size_t nvars, int conductor) {
  LambdaPoly p;
  Exponents e(nvars, 0);
  e[j] = 1;
  p.terms_[e] = CycloScalar(conductor, 1L);
  return p;
}

LambdaPoly& LambdaPoly::add_scaled(const LambdaPoly& o, const CycloScalar& c) {
  if (c.is_zero()) return *this;
  for (const auto& [e, v] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, v * c);
    } else {
      it->second.add_product(v, c);
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  for (const auto& [e, v] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
  LambdaPoly out;
  for (const auto& [ea, va] : a.terms_)
    for (const auto& [eb, vb] : b.terms_) {
      charge(1);
      LambdaPoly::Exponents e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        out.terms_.emplace(e, va * vb);
      } else {
        it->second.add_product(va, vb);
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  return out;
}

std::string LambdaPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, v] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + v.to_string() + ")";
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) s += "*l" + std::to_string(i + 1) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
  }
  return s;
}

std::string CHTerm::to_string() const {
  std::string s = "x^" + std::to_string(i0);
  for (auto [i, j] : f2) s += " f2(x^" + std::to_string(i) + ",x^" + std::to_string(j) + ")";
  for (int i : f1) s += " f1(x^" + std::to_string(i) + ")";
  return s;
}

namespace {

using PVec = std::vector<LambdaPoly>;

PVec pmul(const GradedStarAlgebra& A, const PVec& x, const PVec& y) {
  PVec out(A.dim());
  for (size_t i = 0; i < A.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < A.dim(); ++j) {
      if (y[j].is_zero()) continue;
      const auto& prod = A.product(i, j);
      if (prod.empty()) continue;
      LambdaPoly xy = x[i] * y[j];
      for (const auto& t : prod) out[t.index].add_scaled(xy, t.coeff);
    }
  }
  return out;
}

bool pzero(const PVec& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

// Factor kinds of the shape: f1(x^i) has weight i, f2(x^i,x^j) weight i+j.
struct Kind {
  int f;
  int i, j;
  int weight() const { return f == 1 ? i : i + j; }
};

}  // namespace

CHFit fit_cayley_hamilton(const VerifiedDecomposition& dec, size_t t_cap) {
  const auto& A = dec.algebra;
  const int m = A.conductor();
  const GroupElement e = A.group().identity();
  if (dec.t == 0) throw Error(ErrorCode::InvalidSpec, "semisimple part is zero");
  if (dec.t > t_cap) throw Error(ErrorCode::ResourceCap, "dim B exceeds the fitting cap");
  CHFit fit;
  fit.nd = dec.nd;
  const int n = static_cast<int>(3 * dec.t + 1);
  fit.degree = n;

  std::vector<Vec> gens;
  for (const auto& el : elementary_elements(dec))
    if (el.degree.degree == e) gens.push_back(el.vector);
  if (gens.empty()) throw Error(ErrorCode::InvalidSpec, "neutral component is zero");
  const size_t r = gens.size();
  fit.generic_dim = r;

  PVec x(A.dim());
  for (size_t j = 0; j < r; ++j)
    for (size_t k = 0; k < A.dim(); ++k)
      if (!gens[j][k].is_zero()) x[k].add_scaled(LambdaPoly::variable(j, r, m), gens[j][k]);
  std::vector<PVec> pw(n + 1);
  pw[1] = x;
  for (int k = 2; k <= n; ++k) pw[k] = pmul(A, pw[k - 1], x);

  TraceForms tf(dec);
  std::vector<LambdaPoly> f1(n + 1);
  std::vector<std::vector<LambdaPoly>> f2(n + 1, std::vector<LambdaPoly>(n + 1));
  for (int i = 1; i < n; ++i) {
    for (size_t k = 0; k < A.dim(); ++k) f1[i].add_scaled(pw[i][k], tf.f1_basis()[k]);
    for (int j = i; i + j < n; ++j)
      for (size_t a = 0; a < A.dim(); ++a) {
        if (pw[i][a].is_zero()) continue;
        for (size_t b = 0; b < A.dim(); ++b) {
          const auto& c = tf.f2_basis()[a][b];
          if (c.is_zero() || pw[j][b].is_zero()) continue;
          f2[i][j].add_scaled(pw[i][a] * pw[j][b], c);
        }
      }
  }

  std::vector<Kind> kinds;
  for (int w = 1; w < n; ++w) {
    kinds.push_back({1, w, 0});
    for (int i = 1; 2 * i <= w; ++i) kinds.push_back({2, i, w - i});
  }
  std::vector<CHTerm> terms;
  std::vector<PVec> values;
  for (int i0 = n - 1; i0 >= 1; --i0) {
    std::vector<size_t> chosen;
    std::function<void(size_t, int)> rec = [&](size_t from, int rem) {
      if (rem == 0) {
        if (chosen.empty()) return;
        CHTerm t;
        t.i0 = i0;
        LambdaPoly scal = LambdaPoly::constant(CycloScalar(m, 1L), r);
        for (size_t c : chosen) {
          const Kind& k = kinds[c];
          if (k.f == 1) {
            t.f1.push_back(k.i);
            scal = scal * f1[k.i];
          } else {
            t.f2.push_back({k.i, k.j});
            scal = scal * f2[k.i][k.j];
          }
        }
        PVec v(A.dim());
        if (!scal.is_zero())
          for (size_t a = 0; a < A.dim(); ++a)
            if (!pw[i0][a].is_zero()) v[a] = pw[i0][a] * scal;
        t.alpha = CycloScalar(m);
        terms.push_back(t);
        values.push_back(std::move(v));
        return;
      }
      for (size_t c = from; c < kinds.size(); ++c)
        if (kinds[c].weight() <= rem) {
          chosen.push_back(c);
          rec(c, rem - kinds[c].weight());
          chosen.pop_back();
        }
    };
    rec(0, n - i0);
  }

  // D-coordinates of each standard basis vector
  std::vector<Vec> D;
  for (const auto& c : dec.data.components)
    for (const auto& d : c.D) D.push_back(d.vector);
  std::vector<Vec> basis = D;
  for (const auto& row : dec.radical.rows()) basis.push_back(row);
  Coordinatizer coord(A.dim(), m, basis);
  std::vector<Vec> proj(A.dim());
  for (size_t k = 0; k < A.dim(); ++k) proj[k] = *coord.coordinates(A.basis(k));
  auto b_projection = [&](const PVec& v) {
    PVec out(D.size());
    for (size_t k = 0; k < A.dim(); ++k)
      if (!v[k].is_zero())
        for (size_t i = 0; i < D.size(); ++i) out[i].add_scaled(v[k], proj[k][i]);
    return out;
  };

  const size_t N = terms.size();
  std::vector<PVec> tproj;
  for (const auto& v : values) tproj.push_back(b_projection(v));
  PVec target = b_projection(pw[n]);
  Subspace sys(N + 1, m);
  for (size_t i = 0; i < D.size(); ++i) {
    std::map<LambdaPoly::Exponents, Vec> rows;
    auto row_for = [&](const LambdaPoly::Exponents& ex) -> Vec& {
      auto it = rows.find(ex);
      if (it == rows.end()) it = rows.emplace(ex, zero_vec(N + 1, m)).first;
      return it->second;
    };
    for (size_t c = 0; c < N; ++c)
      for (const auto& [ex, v] : tproj[c][i].terms()) row_for(ex)[c] += v;
    for (const auto& [ex, v] : target[i].terms()) row_for(ex)[N] -= v;
    for (const auto& [ex, row] : rows) {
      ++fit.equations;
      sys.insert(row);
    }
  }
  for (size_t k = 0; k < sys.dim(); ++k)
    if (sys.pivots()[k] == N) throw Error(ErrorCode::NoSolution, "no Cayley-Hamilton coefficients of this shape");
  for (size_t k = 0; k < sys.dim(); ++k) terms[sys.pivots()[k]].alpha = sys.rows()[k][N];

  PVec K = pw[n];
  for (size_t c = 0; c < N; ++c)
    for (size_t a = 0; a < A.dim(); ++a) K[a].add_scaled(values[c][a], terms[c].alpha);
  fit.projection_vanishes = pzero(b_projection(K));
  PVec P = K;
  for (int s = 1; s < dec.nd; ++s) P = pmul(A, P, K);
  fit.power_vanishes = pzero(P);
  for (const auto& v : K) fit.power_monomials_checked += v.terms().size();
  fit.terms = std::move(terms);
  return fit;
}

}  // namespace gsa
