#include "gsa/algebra.hpp"

#include <algorithm>
#include <deque>

#include "gsa/error.hpp"

namespace gsa {

GradedStarAlgebra::GradedStarAlgebra(FiniteAbelianGroup G, int conductor,
                                     std::vector<std::string> labels,
                                     std::vector<GroupElement> grading)
    : G_(std::move(G)), m_(conductor), labels_(std::move(labels)), grading_(std::move(grading)) {
  if (labels_.size() != grading_.size())
    throw Error(ErrorCode::DimensionMismatch, "labels vs grading");
  if (conductor % G_.exponent() != 0)
    throw Error(ErrorCode::ConductorMismatch, "conductor must be a multiple of the group exponent");
  for (auto& g : grading_) {
    if (!G_.valid(g)) throw Error(ErrorCode::WrongGroup, "basis degree " + element_to_string(g));
  }
  mult_.assign(dim() * dim(), {});
  star_.assign(dim(), {});
}

void GradedStarAlgebra::set_product(size_t i, size_t j, TermList t) {
  for (const auto& term : t) {
    if (term.index >= dim()) throw Error(ErrorCode::DimensionMismatch, "product index");
    if (term.coeff.conductor() != m_) throw Error(ErrorCode::ConductorMismatch, "product value");
  }
  std::erase_if(t, [](const Term& x) { return x.coeff.is_zero(); });
  mult_.at(i * dim() + j) = std::move(t);
}

void GradedStarAlgebra::set_star(size_t i, TermList t) {
  for (const auto& term : t) {
    if (term.index >= dim()) throw Error(ErrorCode::DimensionMismatch, "star index");
    if (term.coeff.conductor() != m_) throw Error(ErrorCode::ConductorMismatch, "star value");
  }
  std::erase_if(t, [](const Term& x) { return x.coeff.is_zero(); });
  star_.at(i) = std::move(t);
}

void GradedStarAlgebra::check(const Vec& u) const {
  if (u.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "element length");
}

Vec GradedStarAlgebra::multiply(const Vec& u, const Vec& v) const {
  check(u);
  check(v);
  Vec out = zero();
  long long work = 0;
  std::vector<size_t> nv;
  for (size_t j = 0; j < dim(); ++j)
    if (!v[j].is_zero()) nv.push_back(j);
  for (size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (size_t j : nv) {
      const TermList& t = mult_[i * dim() + j];
      if (t.empty()) continue;
      CycloScalar c = u[i] * v[j];
      for (const auto& term : t) out[term.index].add_product(c, term.coeff);
      work += 1 + static_cast<long long>(t.size());
    }
  }
  charge(work);
  return out;
}

Vec GradedStarAlgebra::star(const Vec& u) const {
  check(u);
  Vec out = zero();
  for (size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (const auto& term : star_[i]) out[term.index].add_product(u[i], term.coeff);
  }
  return out;
}

Vec GradedStarAlgebra::project_group(const Vec& u, const GroupElement& theta) const {
  check(u);
  Vec out = u;
  for (size_t i = 0; i < dim(); ++i)
    if (grading_[i] != theta) out[i] = CycloScalar(m_);
  return out;
}

Vec GradedStarAlgebra::project_sign(const Vec& u, Sign s) const {
  Vec w = star(u);
  Vec out = s == Sign::plus ? u + w : u - w;
  return scaled(std::move(out), scalar(1, 2));
}

Vec GradedStarAlgebra::project(const Vec& u, const CompleteDegree& d) const {
  return project_group(project_sign(u, d.sign), d.degree);
}

std::optional<GroupElement> GradedStarAlgebra::homogeneous_degree(const Vec& u) const {
  std::optional<GroupElement> deg;
  for (size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    if (deg && *deg != grading_[i]) return std::nullopt;
    deg = grading_[i];
  }
  return deg;
}

std::optional<CompleteDegree> GradedStarAlgebra::complete_degree(const Vec& u) const {
  auto g = homogeneous_degree(u);
  if (!g) return std::nullopt;
  Vec s = star(u);
  if (s == u) return CompleteDegree{Sign::plus, *g};
  if (s == scaled(u, scalar(-1))) return CompleteDegree{Sign::minus, *g};
  return std::nullopt;
}

std::vector<Vec> GradedStarAlgebra::component_basis(const CompleteDegree& d) const {
  Subspace s(dim(), m_);
  for (size_t i = 0; i < dim(); ++i)
    if (grading_[i] == d.degree) s.insert(project(basis(i), d));
  return s.rows();
}

TermList to_terms(const Vec& v) {
  TermList t;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) t.push_back({i, v[i]});
  return t;
}

Vec from_terms(const TermList& t, size_t n, int conductor) {
  Vec v = zero_vec(n, conductor);
  for (const auto& term : t) v.at(term.index) += term.coeff;
  return v;
}

std::vector<Violation> verify_axioms(const GradedStarAlgebra& A) {
  std::vector<Violation> out;
  const size_t n = A.dim();
  const auto& G = A.group();
  auto first = [&](const std::string& axiom) {
    return std::none_of(out.begin(), out.end(), [&](const Violation& v) { return v.axiom == axiom; });
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (const auto& t : A.product(i, j))
        if (A.degree(t.index) != G.add(A.degree(i), A.degree(j)) && first("grading"))
          out.push_back({"grading", {i, j}, "product leaves the component of degree sum"});
  std::vector<Vec> prods(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) prods[i * n + j] = from_terms(A.product(i, j), n, A.conductor());
  for (size_t i = 0; i < n && first("associativity"); ++i)
    for (size_t j = 0; j < n && first("associativity"); ++j)
      for (size_t k = 0; k < n; ++k) {
        Vec left = A.multiply(prods[i * n + j], A.basis(k));
        Vec right = A.multiply(A.basis(i), prods[j * n + k]);
        if (left != right) {
          out.push_back({"associativity", {i, j, k}, "(b_i b_j) b_k != b_i (b_j b_k)"});
          break;
        }
      }
  std::vector<Vec> stars(n);
  for (size_t i = 0; i < n; ++i) stars[i] = A.star(A.basis(i));
  for (size_t i = 0; i < n; ++i) {
    if (A.star(stars[i]) != A.basis(i) && first("star-order")) {
      out.push_back({"star-order", {i}, "star(star(b_i)) != b_i"});
    }
    for (const auto& t : A.star_image(i))
      if (A.degree(t.index) != A.degree(i) && first("star-graded"))
        out.push_back({"star-graded", {i}, "star leaves the component of b_i"});
  }
  for (size_t i = 0; i < n && first("anti-multiplicative"); ++i)
    for (size_t j = 0; j < n; ++j) {
      if (A.star(prods[i * n + j]) != A.multiply(stars[j], stars[i])) {
        out.push_back({"anti-multiplicative", {i, j}, "star(b_i b_j) != star(b_j) star(b_i)"});
        break;
      }
    }
  if (const auto& u = A.unit()) {
    if (!A.homogeneous_degree(*u) || !G.is_identity(*A.homogeneous_degree(*u)))
      out.push_back({"unit", {}, "unit is not homogeneous of neutral degree"});
    if (A.star(*u) != *u) out.push_back({"unit", {}, "unit is not symmetric"});
    for (size_t i = 0; i < n; ++i)
      if (A.multiply(*u, A.basis(i)) != A.basis(i) || A.multiply(A.basis(i), *u) != A.basis(i)) {
        out.push_back({"unit", {i}, "1 b_i != b_i or b_i 1 != b_i"});
        break;
      }
  }
  return out;
}

Vec multiply_project(const GradedStarAlgebra& A, const Vec& u, const Vec& v,
                     const Projection& proj) {
  Vec w = A.multiply(u, v);
  if (auto g = std::get_if<GroupElement>(&proj)) return A.project_group(w, *g);
  if (auto d = std::get_if<CompleteDegree>(&proj)) return A.project(w, *d);
  return w;
}

Subspace ideal_closure(const GradedStarAlgebra& A, const std::vector<Vec>& generators) {
  Subspace S(A.dim(), A.conductor());
  std::deque<Vec> todo;
  auto push = [&](const Vec& v) {
    if (S.insert(v)) todo.push_back(v);
  };
  for (const auto& g : generators) {
    // graded pieces first so every queued vector is homogeneous
    for (const auto& theta : A.group().elements()) push(A.project_group(g, theta));
  }
  while (!todo.empty()) {
    Vec v = todo.front();
    todo.pop_front();
    push(A.star(v));
    for (size_t i = 0; i < A.dim(); ++i) {
      Vec b = A.basis(i);
      push(A.multiply(b, v));
      push(A.multiply(v, b));
    }
    for (const auto& theta : A.group().elements()) push(A.project_group(v, theta));
  }
  return S;
}

GradedStarAlgebra subalgebra(const GradedStarAlgebra& A, const std::vector<Vec>& basis,
                             const std::vector<std::string>& labels_in) {
  Coordinatizer C(A.dim(), A.conductor(), basis);
  if (!C.independent()) throw Error(ErrorCode::InvalidSpec, "subalgebra basis is dependent");
  std::vector<std::string> labels = labels_in;
  std::vector<GroupElement> grading;
  for (size_t i = 0; i < basis.size(); ++i) {
    auto g = A.homogeneous_degree(basis[i]);
    if (!g) throw Error(ErrorCode::InvalidSpec, "subalgebra basis vector is not homogeneous");
    grading.push_back(*g);
    if (labels_in.empty()) labels.push_back("s" + std::to_string(i));
  }
  GradedStarAlgebra S(A.group(), A.conductor(), labels, grading);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      auto c = C.coordinates(A.multiply(basis[i], basis[j]));
      if (!c) throw Error(ErrorCode::InvalidSpec, "span is not closed under multiplication");
      S.set_product(i, j, to_terms(*c));
    }
    auto c = C.coordinates(A.star(basis[i]));
    if (!c) throw Error(ErrorCode::InvalidSpec, "span is not star-closed");
    S.set_star(i, to_terms(*c));
  }
  S.set_unit(find_unit(S));
  return S;
}

GradedStarAlgebra quotient(const GradedStarAlgebra& A, const Subspace& I) {
  std::vector<bool> piv(A.dim(), false);
  for (size_t p : I.pivots()) piv[p] = true;
  std::vector<size_t> keep;
  for (size_t i = 0; i < A.dim(); ++i)
    if (!piv[i]) keep.push_back(i);
  std::vector<std::string> labels;
  std::vector<GroupElement> grading;
  for (size_t i : keep) {
    labels.push_back(A.labels()[i]);
    grading.push_back(A.degree(i));
  }
  GradedStarAlgebra Q(A.group(), A.conductor(), labels, grading);
  auto project = [&](const Vec& v) {
    Vec r = I.reduce(v);
    Vec out = zero_vec(keep.size(), A.conductor());
    for (size_t t = 0; t < keep.size(); ++t) out[t] = r[keep[t]];
    return out;
  };
  for (size_t a = 0; a < keep.size(); ++a) {
    for (size_t b = 0; b < keep.size(); ++b)
      Q.set_product(a, b, to_terms(project(A.multiply(A.basis(keep[a]), A.basis(keep[b])))));
    Q.set_star(a, to_terms(project(A.star(A.basis(keep[a])))));
  }
  if (A.unit()) Q.set_unit(project(*A.unit()));
  return Q;
}

std::optional<Vec> find_unit(const GradedStarAlgebra& A) {
  const size_t n = A.dim();
  if (n == 0) return std::nullopt;
  // unknowns x_0..x_{n-1} and a homogenizing coordinate x_n = -1
  std::vector<Vec> eqs;
  for (size_t j = 0; j < n; ++j) {
    for (int side = 0; side < 2; ++side) {
      std::vector<Vec> cols(n);
      for (size_t k = 0; k < n; ++k)
        cols[k] = side == 0 ? from_terms(A.product(k, j), n, A.conductor())
                            : from_terms(A.product(j, k), n, A.conductor());
      for (size_t r = 0; r < n; ++r) {
        Vec eq = zero_vec(n + 1, A.conductor());
        for (size_t k = 0; k < n; ++k) eq[k] = cols[k][r];
        if (r == j) eq[n] = A.scalar(1);
        eqs.push_back(std::move(eq));
      }
    }
  }
  for (const auto& sol : kernel(eqs, n + 1, A.conductor())) {
    if (sol[n].is_zero()) continue;
    CycloScalar c = -sol[n].inverse();
    Vec u(sol.begin(), sol.begin() + n);
    return scaled(std::move(u), c);
  }
  return std::nullopt;
}

std::vector<Vec> left_matrix(const GradedStarAlgebra& A, const Vec& u) {
  std::vector<Vec> rows(A.dim(), A.zero());
  for (size_t j = 0; j < A.dim(); ++j) {
    Vec col = A.multiply(u, A.basis(j));
    for (size_t r = 0; r < A.dim(); ++r) rows[r][j] = col[r];
  }
  return rows;
}

CycloScalar trace_left(const GradedStarAlgebra& A, const Vec& u) {
  CycloScalar t = A.zero_scalar();
  for (size_t i = 0; i < A.dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (size_t j = 0; j < A.dim(); ++j)
      for (const auto& term : A.product(i, j))
        if (term.index == j) t.add_product(u[i], term.coeff);
  }
  return t;
}

}  // namespace gsa
