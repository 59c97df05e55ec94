#include "gsa/decomposition.hpp"

#include <algorithm>
#include <functional>

#include "gsa/error.hpp"

namespace gsa {

const FrameUnit* ComponentFrame::find(int i, int j, const GroupElement& xi) const {
  for (const auto& u : units)
    if (u.i == i && u.j == j && u.xi == xi) return &u;
  return nullptr;
}

Vec ComponentFrame::element(int i, int j, const GroupElement& xi) const {
  const FrameUnit* u = find(i, j, xi);
  if (!u) throw Error(ErrorCode::DecompositionMismatch, "frame has no unit (" + std::to_string(i) +
                                                            "," + std::to_string(j) + ")");
  return u->second ? u->first + *u->second : u->first;
}

Vec eps_left(const GradedStarAlgebra& A, const Decomposition& d, size_t l, const Vec& x) {
  size_t p = d.components.size();
  if (l <= p) return A.multiply(d.components[l - 1].epsilon, x);
  Vec r = x;
  for (const auto& c : d.components) r = r - A.multiply(c.epsilon, x);
  return r;
}

Vec eps_right(const GradedStarAlgebra& A, const Decomposition& d, size_t l, const Vec& x) {
  size_t p = d.components.size();
  if (l <= p) return A.multiply(x, d.components[l - 1].epsilon);
  Vec r = x;
  for (const auto& c : d.components) r = r - A.multiply(x, c.epsilon);
  return r;
}

Vec u_from_r(const GradedStarAlgebra& A, const Decomposition& d, size_t l1, size_t l2, Sign s,
             const Vec& r) {
  Vec a = eps_right(A, d, l2, eps_left(A, d, l1, r));
  Vec b = eps_right(A, d, l1, eps_left(A, d, l2, A.star(r)));
  return scaled(s == Sign::plus ? a + b : a - b, A.scalar(1, 2));
}

Decomposition build_decomposition(const GradedStarAlgebra& A,
                                  const std::vector<ComponentFrame>& frames) {
  Decomposition dec;
  const auto& G = A.group();
  const CycloScalar half = A.scalar(1, 2);
  for (const auto& fr : frames) {
    ComponentData comp;
    comp.frame = fr;
    Vec eps = A.zero();
    for (int i = 1; i <= fr.k; ++i) eps = eps + fr.element(i, i, G.identity());
    comp.epsilon = scaled(eps, fr.lambda.inverse());
    std::vector<bool> used(fr.units.size(), false);
    for (size_t a = 0; a < fr.units.size(); ++a) {
      const FrameUnit& u = fr.units[a];
      Vec e = fr.element(u.i, u.j, u.xi);
      auto deg = A.homogeneous_degree(e);
      if (!deg) throw Error(ErrorCode::DecompositionMismatch, "frame unit is not homogeneous");
      if (fr.type == 2) {
        Vec f = u.first, s = *u.second;
        comp.D.push_back({u.i, u.j, {Sign::plus, *deg}, f + s, u.xi});
        comp.D.push_back({u.i, u.j, {Sign::minus, *deg}, f - s, u.xi});
        continue;
      }
      if (used[a]) continue;
      used[a] = true;
      Vec es = A.star(e);
      Vec plus = scaled(e + es, half), minus = scaled(e - es, half);
      if (!is_zero(plus)) comp.D.push_back({u.i, u.j, {Sign::plus, *deg}, plus, u.xi});
      if (is_zero(plus) || is_zero(minus)) {
        if (!is_zero(minus)) comp.D.push_back({u.i, u.j, {Sign::minus, *deg}, minus, u.xi});
        continue;
      }
      // partner unit e' with e* proportional to e'
      int pi = u.i, pj = u.j;
      GroupElement pxi = u.xi;
      for (size_t b = 0; b < fr.units.size(); ++b) {
        if (used[b]) continue;
        const FrameUnit& w = fr.units[b];
        if (proportional(es, fr.element(w.i, w.j, w.xi))) {
          used[b] = true;
          pi = w.i;
          pj = w.j;
          pxi = w.xi;
          break;
        }
      }
      comp.D.push_back({pi, pj, {Sign::minus, *deg}, minus, pxi});
    }
    dec.components.push_back(std::move(comp));
  }
  // U from a homogeneous basis of the radical
  Subspace J = jacobson_radical(A);
  std::vector<Vec> rs;
  for (const auto& theta : G.elements()) {
    Subspace part(A.dim(), A.conductor());
    for (const auto& row : J.rows()) part.insert(A.project_group(row, theta));
    for (const auto& row : part.rows()) rs.push_back(row);
  }
  size_t p = dec.components.size();
  Subspace got(A.dim(), A.conductor());
  for (size_t l1 = 1; l1 <= p + 1; ++l1)
    for (size_t l2 = l1; l2 <= p + 1; ++l2)
      for (Sign s : {Sign::plus, Sign::minus})
        for (const auto& r : rs) {
          Vec u = u_from_r(A, dec, l1, l2, s, r);
          if (!got.insert(u)) continue;
          dec.U.push_back({l1, l2, {s, *A.homogeneous_degree(r)}, r, u});
        }
  return dec;
}

DecompositionReport verify_decomposition(const GradedStarAlgebra& A, const Decomposition& claimed,
                                         uint64_t seed) {
  DecompositionReport rep;
  auto& V = rep.violations;
  const auto& G = A.group();
  const size_t p = claimed.components.size();
  auto bad_len = [&](const Vec& v) { return v.size() != A.dim(); };
  for (const auto& c : claimed.components) {
    if (bad_len(c.epsilon)) throw Error(ErrorCode::DimensionMismatch, "epsilon length");
    for (const auto& d : c.D)
      if (bad_len(d.vector)) throw Error(ErrorCode::DimensionMismatch, "D vector length");
  }
  for (const auto& u : claimed.U)
    if (bad_len(u.r) || bad_len(u.vector)) throw Error(ErrorCode::DimensionMismatch, "U vector length");

  for (size_t l = 0; l < p; ++l) {
    const Vec& e = claimed.components[l].epsilon;
    if (A.multiply(e, e) != e) V.push_back({"idempotent", {l + 1}, "eps^2 != eps"});
    auto cd = A.complete_degree(e);
    if (!cd || cd->sign != Sign::plus || !G.is_identity(cd->degree))
      V.push_back({"idempotent-degree", {l + 1}, "eps is not of complete degree (+,e)"});
    for (size_t l2 = 0; l2 < p; ++l2)
      if (l2 != l && !is_zero(A.multiply(e, claimed.components[l2].epsilon)))
        V.push_back({"orthogonal", {l + 1, l2 + 1}, "eps_l eps_l' != 0"});
  }
  if (A.unit()) {
    Vec c = *A.unit();
    for (const auto& comp : claimed.components) c = c - comp.epsilon;
    if (A.multiply(c, c) != c) V.push_back({"idempotent", {p + 1}, "1 - sum eps is not idempotent"});
  }
  std::vector<Vec> Dall;
  for (size_t l = 0; l < p; ++l) {
    const auto& comp = claimed.components[l];
    for (size_t a = 0; a < comp.D.size(); ++a) {
      const auto& d = comp.D[a];
      Dall.push_back(d.vector);
      if (A.multiply(A.multiply(comp.epsilon, d.vector), comp.epsilon) != d.vector)
        V.push_back({"Peirce", {l + 1, a}, "eps_l d eps_l != d"});
      if (is_zero(d.vector) || A.complete_degree(d.vector) != std::optional(d.degree))
        V.push_back({"D-degree", {l + 1, a}, "d is not homogeneous of its tagged degree"});
    }
  }
  std::vector<Vec> Uall;
  for (size_t a = 0; a < claimed.U.size(); ++a) {
    const auto& u = claimed.U[a];
    if (u.l1 < 1 || u.l2 < 1 || u.l1 > p + 1 || u.l2 > p + 1) {
      V.push_back({"U-pair", {a}, "pair index out of range"});
      continue;
    }
    Uall.push_back(u.vector);
    if (u_from_r(A, claimed, u.l1, u.l2, u.degree.sign, u.r) != u.vector)
      V.push_back({"U-formula", {a}, "u != (eps r eps +- eps r* eps)/2"});
    if (is_zero(u.vector) || A.complete_degree(u.vector) != std::optional(u.degree))
      V.push_back({"U-degree", {a}, "u is not homogeneous of its tagged degree"});
  }
  if (rank(Dall, A.dim(), A.conductor()) != Dall.size())
    V.push_back({"D-independent", {}, "canonical basis D is linearly dependent"});
  if (rank(Uall, A.dim(), A.conductor()) != Uall.size())
    V.push_back({"U-independent", {}, "radical basis U is linearly dependent"});
  std::vector<Vec> all = Dall;
  all.insert(all.end(), Uall.begin(), Uall.end());
  if (rank(all, A.dim(), A.conductor()) != A.dim())
    V.push_back({"span", {}, "D and U do not span the algebra"});

  Subspace J = jacobson_radical(A);
  Subspace Uspan = span_of(A.dim(), A.conductor(), Uall);
  if (!(Uspan == J)) V.push_back({"radical", {}, "span(U) differs from the Jacobson radical"});
  int nd = 1;
  try {
    nd = nilpotency_degree(A, J);
  } catch (const Error&) {
    V.push_back({"nd", {}, "radical is not nilpotent"});
  }
  if (claimed.nd && *claimed.nd != nd)
    V.push_back({"nd", {}, "claimed nd " + std::to_string(*claimed.nd) + " but found " +
                               std::to_string(nd)});

  std::vector<size_t> burnside;
  if (V.empty()) {
    // semisimple part: a subalgebra with zero radical, components simple
    try {
      GradedStarAlgebra B = subalgebra(A, Dall);
      if (jacobson_radical(B).dim() != 0)
        V.push_back({"semisimple", {}, "span(D) has a nonzero radical"});
    } catch (const Error& e) {
      V.push_back({"subalgebra", {}, e.what()});
    }
    for (size_t l = 0; l < p && V.empty(); ++l) {
      std::vector<Vec> Dl;
      for (const auto& d : claimed.components[l].D) Dl.push_back(d.vector);
      GradedStarAlgebra C = subalgebra(A, Dl);
      SimplicityVerdict sv = is_star_graded_simple(C, seed);
      burnside.push_back(sv.operator_algebra_dim);
      if (sv.kind == SimplicityVerdict::not_simple)
        V.push_back({"simple", {l + 1}, "component has a proper graded *-ideal"});
      else if (sv.kind == SimplicityVerdict::inconclusive)
        rep.warnings.push_back("component " + std::to_string(l + 1) + ": simplicity inconclusive");
    }
  }
  if (V.empty()) {
    VerifiedDecomposition vd;
    vd.algebra = A;
    vd.data = claimed;
    vd.data.nd = nd;
    vd.p = p;
    vd.t = Dall.size();
    vd.nd = nd;
    vd.radical = J;
    vd.burnside_dims = burnside;
    rep.verified = std::move(vd);
  }
  return rep;
}

VerifiedDecomposition certify(const GradedStarAlgebra& A, const Decomposition& claimed) {
  DecompositionReport rep = verify_decomposition(A, claimed);
  if (!rep.ok()) {
    const auto& v = rep.violations.front();
    throw Error(ErrorCode::DecompositionMismatch, v.axiom + ": " + v.detail);
  }
  return std::move(*rep.verified);
}

GiParameters gi_parameters(const VerifiedDecomposition& dec) {
  const auto& G = dec.algebra.group();
  GiParameters g;
  g.dims_gi.assign(2 * G.order(), 0);
  for (const auto& c : dec.data.components)
    for (const auto& d : c.D) ++g.dims_gi[complete_index(G, d.degree)];
  g.nd = dec.nd;
  g.dimJ = dec.radical.dim();
  return g;
}

Vec diagonal_unit(const VerifiedDecomposition& dec, size_t l, int s) {
  const auto& comp = dec.data.components.at(l - 1);
  if (comp.frame) return comp.frame->element(s, s, dec.algebra.group().identity());
  return comp.epsilon;
}

std::optional<ReducedWitness> reduced_product_witness(const VerifiedDecomposition& dec) {
  const auto& A = dec.algebra;
  const size_t p = dec.p;
  if (p == 0) return std::nullopt;
  auto kof = [&](size_t l) {
    const auto& c = dec.data.components[l - 1];
    return c.frame ? c.frame->k : 1;
  };
  std::vector<size_t> sigma(p);
  for (size_t i = 0; i < p; ++i) sigma[i] = i + 1;
  std::optional<ReducedWitness> found;
  do {
    ReducedWitness w;
    w.sigma = sigma;
    std::function<bool(size_t, const Vec&)> extend = [&](size_t pos, const Vec& acc) -> bool {
      // acc ends with the diagonal unit of sigma[pos]
      if (pos + 1 == p) {
        w.a = acc;
        return true;
      }
      for (size_t q = 0; q < dec.data.U.size(); ++q) {
        Vec x = A.multiply(acc, dec.data.U[q].vector);
        if (is_zero(x)) continue;
        size_t l = sigma[pos + 1];
        for (int s = 1; s <= kof(l); ++s) {
          Vec y = A.multiply(x, diagonal_unit(dec, l, s));
          if (is_zero(y)) continue;
          w.chain.push_back(q);
          w.s.push_back(s);
          if (extend(pos + 1, y)) return true;
          w.chain.pop_back();
          w.s.pop_back();
        }
      }
      return false;
    };
    for (int s = 1; s <= kof(sigma[0]) && !found; ++s) {
      Vec a0 = diagonal_unit(dec, sigma[0], s);
      w.s = {s};
      w.chain.clear();
      if (extend(0, a0)) found = w;
    }
    if (found) break;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return found;
}

}  // namespace gsa
