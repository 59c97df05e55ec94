#include "gsa/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "gsa/error.hpp"
#include "gsa/structure.hpp"

namespace gsa {

namespace {

std::string tuple_string(const std::vector<GroupElement>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + element_to_string(t[i]);
  return s + ")";
}

std::string subgroup_string(const Subgroup& H) {
  std::string s = "{";
  for (size_t i = 0; i < H.size(); ++i) s += (i ? "," : "") + element_to_string(H[i]);
  return s + "}";
}

void require_axioms(const GradedStarAlgebra& A, const std::string& what) {
  auto v = verify_axioms(A);
  if (!v.empty()) throw Error(ErrorCode::InvalidSpec, what + ": " + v.front().axiom + " fails");
}

Vec pad(const Vec& v, size_t offset, size_t total, int m) {
  Vec out = zero_vec(total, m);
  for (size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
  return out;
}

ComponentFrame shift_frame(const ComponentFrame& f, size_t offset, size_t total, int m) {
  ComponentFrame g = f;
  for (auto& u : g.units) {
    u.first = pad(u.first, offset, total, m);
    if (u.second) u.second = pad(*u.second, offset, total, m);
  }
  return g;
}

// exponent s(theta) for theta = s * generator of cyclic H
int twist_exponent(const FiniteAbelianGroup& G, const Subgroup& H, const GroupElement& theta) {
  auto gens = generators(G, H);
  if (gens.empty()) return 0;
  if (gens.size() > 1) throw Error(ErrorCode::InvalidSpec, "alpha = -1 needs a cyclic H");
  GroupElement x = G.identity();
  for (size_t s = 0; s < H.size(); ++s) {
    if (x == theta) return static_cast<int>(s % 2);
    x = G.add(x, gens[0]);
  }
  throw Error(ErrorCode::InvalidSpec, "element outside H");
}

}  // namespace

size_t twisted_index(int k, const Subgroup& H, int i, int j, const GroupElement& xi) {
  auto it = std::lower_bound(H.begin(), H.end(), xi);
  if (it == H.end() || *it != xi) throw Error(ErrorCode::InvalidSpec, "xi outside H");
  return (static_cast<size_t>(i - 1) * k + (j - 1)) * H.size() + (it - H.begin());
}

Built matrix_twisted(int k, const FiniteAbelianGroup& G, const Subgroup& H_in, const TwoCocycle& z,
                     const std::vector<GroupElement>& tuple, const InvolutionChoice& inv) {
  if (k < 1) throw Error(ErrorCode::InvalidSpec, "k must be positive");
  if (static_cast<int>(tuple.size()) != k) throw Error(ErrorCode::InvalidSpec, "tuple length != k");
  Subgroup H = H_in;
  std::sort(H.begin(), H.end());
  if (generated_subgroup(G, H) != H) throw Error(ErrorCode::InvalidSpec, "H is not a subgroup");
  if (z.subgroup() != H) throw Error(ErrorCode::InvalidCocycle, "cocycle lives on another subgroup");
  if (!verify_cocycle(G, z).valid) throw Error(ErrorCode::InvalidCocycle, "cocycle identity fails");
  const int m = z.conductor();
  for (const auto& t : tuple)
    if (!G.valid(t)) throw Error(ErrorCode::WrongGroup, "tuple entry");

  std::vector<std::string> labels;
  std::vector<GroupElement> grading;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      for (const auto& xi : H) {
        std::string l = "E" + std::to_string(i) + std::to_string(j);
        if (H.size() > 1) l += ".h" + element_to_string(xi);
        labels.push_back(l);
        grading.push_back(G.add(G.sub(xi, tuple[i - 1]), tuple[j - 1]));
      }
  GradedStarAlgebra A(G, m, labels, grading);
  auto idx = [&](int i, int j, const GroupElement& xi) { return twisted_index(k, H, i, j, xi); };
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      for (const auto& a : H)
        for (int l = 1; l <= k; ++l)
          for (const auto& b : H)
            A.set_product(idx(i, j, a), idx(j, l, b), {{idx(i, l, G.add(a, b)), z(a, b)}});

  const int h = k / 2;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      for (const auto& xi : H) {
        size_t src = idx(i, j, xi);
        switch (inv.kind) {
          case InvolutionChoice::none:
            A.set_star(src, {{src, CycloScalar(m, 1L)}});
            break;
          case InvolutionChoice::transpose_family:
          case InvolutionChoice::symplectic_family: {
            if (inv.alpha != 1 && inv.alpha != -1) throw Error(ErrorCode::InvalidSpec, "alpha");
            long sign = (inv.alpha == -1 && twist_exponent(G, H, xi)) ? -1 : 1;
            int ti = j, tj = i;
            if (inv.kind == InvolutionChoice::symplectic_family) {
              if (k % 2) throw Error(ErrorCode::InvalidSpec, "symplectic needs even k");
              // J E_ji J^{-1} with J = [[0, I], [-I, 0]]
              auto tau = [&](int x) { return x <= h ? x + h : x - h; };
              auto sg = [&](int x) { return x <= h ? -1 : 1; };
              sign *= sg(j) * sg(i);
              ti = tau(j);
              tj = tau(i);
            }
            A.set_star(src, {{idx(ti, tj, xi), CycloScalar(m, sign)}});
            break;
          }
          case InvolutionChoice::elementary: {
            auto it = inv.spec.find({i, j, xi});
            if (it == inv.spec.end()) throw Error(ErrorCode::InvalidSpec, "spec misses a basis element");
            const auto& im = it->second;
            if (im.sign != 1 && im.sign != -1) throw Error(ErrorCode::InvalidSpec, "sign must be +-1");
            if (im.i < 1 || im.j < 1 || im.i > k || im.j > k)
              throw Error(ErrorCode::InvalidSpec, "spec index out of range");
            if (im.i == i && im.j == j && im.xi != xi)
              throw Error(ErrorCode::InvalidSpec, "(i,j) fixed but xi moved");
            A.set_star(src, {{idx(im.i, im.j, im.xi), CycloScalar(m, static_cast<long>(im.sign))}});
            break;
          }
        }
      }
  Vec unit = A.zero();
  CycloScalar inv00 = z(G.identity(), G.identity()).inverse();
  for (int i = 1; i <= k; ++i) unit[idx(i, i, G.identity())] = inv00;
  A.set_unit(unit);
  if (inv.kind != InvolutionChoice::none) require_axioms(A, "matrix_twisted");

  Built out;
  ComponentFrame fr;
  fr.type = 1;
  fr.k = k;
  fr.H = H;
  fr.lambda = z(G.identity(), G.identity());
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      for (const auto& xi : H) fr.units.push_back({i, j, xi, A.basis(idx(i, j, xi)), std::nullopt});
  out.algebra = std::move(A);
  out.frames = {fr};
  static const char* kinds[] = {"elementary", "transpose", "symplectic", "none"};
  out.name = "M" + std::to_string(k) + "(F^z[" + subgroup_string(H) + "]) tuple " +
             tuple_string(tuple) + " " + kinds[inv.kind];
  if (inv.kind == InvolutionChoice::transpose_family || inv.kind == InvolutionChoice::symplectic_family)
    out.name += " alpha=" + std::to_string(inv.alpha);
  return out;
}

Built matrix_twisted(int k, const FiniteAbelianGroup& G, const Subgroup& H,
                     const std::vector<GroupElement>& tuple, const InvolutionChoice& inv) {
  Subgroup Hs = H;
  std::sort(Hs.begin(), Hs.end());
  return matrix_twisted(k, G, Hs, TwoCocycle::trivial(Hs, G.exponent()), tuple, inv);
}

ElementaryInvolutionSpec reflection_spec(int k, const FiniteAbelianGroup& G, const Subgroup& H,
                                         const std::vector<GroupElement>& tuple) {
  ElementaryInvolutionSpec spec;
  auto deg = [&](int i, int j) { return G.sub(tuple[j - 1], tuple[i - 1]); };
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      for (const auto& xi : H) {
        int ri = k + 1 - j, rj = k + 1 - i;
        GroupElement rxi = G.sub(G.add(xi, deg(i, j)), deg(ri, rj));
        if (!std::binary_search(H.begin(), H.end(), rxi))
          throw Error(ErrorCode::InvalidSpec, "reflection is not graded for this tuple");
        spec[{i, j, xi}] = {1, ri, rj, rxi};
      }
  return spec;
}

Built exchange_double(const Built& B) {
  const auto& b = B.algebra;
  const size_t n = b.dim();
  const int m = b.conductor();
  std::vector<std::string> labels;
  std::vector<GroupElement> grading;
  for (size_t i = 0; i < n; ++i) {
    labels.push_back("(" + b.labels()[i] + ",0)");
    grading.push_back(b.degree(i));
  }
  for (size_t i = 0; i < n; ++i) {
    labels.push_back("(0," + b.labels()[i] + ")");
    grading.push_back(b.degree(i));
  }
  GradedStarAlgebra A(b.group(), m, labels, grading);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      A.set_product(i, j, b.product(i, j));
      TermList op;
      for (const auto& t : b.product(j, i)) op.push_back({t.index + n, t.coeff});
      A.set_product(n + i, n + j, op);
    }
  for (size_t i = 0; i < n; ++i) {
    A.set_star(i, {{n + i, CycloScalar(m, 1L)}});
    A.set_star(n + i, {{i, CycloScalar(m, 1L)}});
  }
  if (b.unit()) A.set_unit(pad(*b.unit(), 0, 2 * n, m) + pad(*b.unit(), n, 2 * n, m));
  require_axioms(A, "exchange_double");
  Built out;
  out.algebra = std::move(A);
  out.name = "exchange(" + B.name + ")";
  for (const auto& f : B.frames) {
    if (f.type != 1) continue;
    ComponentFrame g = f;
    g.type = 2;
    for (auto& u : g.units) {
      Vec v = u.first;
      u.first = pad(v, 0, 2 * n, m);
      u.second = pad(v, n, 2 * n, m);
    }
    out.frames.push_back(std::move(g));
  }
  return out;
}

Built direct_product(const std::vector<Built>& parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidSpec, "empty product");
  const auto& G = parts[0].algebra.group();
  const int m = parts[0].algebra.conductor();
  size_t total = 0;
  std::vector<std::string> labels;
  std::vector<GroupElement> grading;
  for (size_t p = 0; p < parts.size(); ++p) {
    const auto& a = parts[p].algebra;
    if (!(a.group() == G)) throw Error(ErrorCode::GroupMismatch, "direct_product factors");
    if (a.conductor() != m) throw Error(ErrorCode::ConductorMismatch, "direct_product factors");
    for (size_t i = 0; i < a.dim(); ++i) {
      labels.push_back(a.labels()[i] + "#" + std::to_string(p + 1));
      grading.push_back(a.degree(i));
    }
    total += a.dim();
  }
  GradedStarAlgebra A(G, m, labels, grading);
  Built out;
  size_t off = 0;
  bool unital = true;
  Vec unit = A.zero();
  for (const auto& part : parts) {
    const auto& a = part.algebra;
    auto shift = [&](TermList t) {
      for (auto& x : t) x.index += off;
      return t;
    };
    for (size_t i = 0; i < a.dim(); ++i) {
      for (size_t j = 0; j < a.dim(); ++j) A.set_product(off + i, off + j, shift(a.product(i, j)));
      A.set_star(off + i, shift(a.star_image(i)));
    }
    if (a.unit()) unit = unit + pad(*a.unit(), off, total, m);
    else unital = false;
    for (const auto& f : part.frames) out.frames.push_back(shift_frame(f, off, total, m));
    out.name += (out.name.empty() ? "" : " x ") + part.name;
    off += a.dim();
  }
  if (unital) A.set_unit(unit);
  out.algebra = std::move(A);
  return out;
}

Built group_algebra_extension(const Built& B, const FiniteAbelianGroup& G) {
  const auto& b = B.algebra;
  for (size_t i = 0; i < b.dim(); ++i)
    if (!b.group().is_identity(b.degree(i)))
      throw Error(ErrorCode::GroupMismatch, "group_algebra_extension needs a trivially graded algebra");
  const int m = std::lcm(b.conductor(), G.exponent());
  const size_t g = G.order(), n = b.dim() * g;
  auto emb = [&](const CycloScalar& x) { return x.embed(m); };
  std::vector<std::string> labels;
  std::vector<GroupElement> grading;
  for (size_t i = 0; i < b.dim(); ++i)
    for (const auto& th : G.elements()) {
      labels.push_back(b.labels()[i] + "@" + element_to_string(th));
      grading.push_back(th);
    }
  GradedStarAlgebra A(G, m, labels, grading);
  for (size_t i = 0; i < b.dim(); ++i)
    for (size_t x = 0; x < g; ++x) {
      for (size_t j = 0; j < b.dim(); ++j)
        for (size_t y = 0; y < g; ++y) {
          size_t z = G.index_of(G.add(G.elements()[x], G.elements()[y]));
          TermList t;
          for (const auto& term : b.product(i, j)) t.push_back({term.index * g + z, emb(term.coeff)});
          A.set_product(i * g + x, j * g + y, t);
        }
      TermList s;
      for (const auto& term : b.star_image(i)) s.push_back({term.index * g + x, emb(term.coeff)});
      A.set_star(i * g + x, s);
    }
  if (b.unit()) {
    Vec u = A.zero();
    for (size_t i = 0; i < b.dim(); ++i) u[i * g] = emb((*b.unit())[i]);
    A.set_unit(u);
  }
  require_axioms(A, "group_algebra_extension");
  Built out;
  out.name = B.name + " (x) F[G]";
  for (const auto& f : B.frames) {
    if (f.type != 1 || f.H.size() != 1) continue;
    ComponentFrame h;
    h.type = 1;
    h.k = f.k;
    h.H = G.elements();
    std::sort(h.H.begin(), h.H.end());
    h.lambda = emb(f.lambda);
    for (const auto& u : f.units)
      for (size_t x = 0; x < g; ++x) {
        Vec v = A.zero();
        for (size_t i = 0; i < b.dim(); ++i)
          if (!u.first[i].is_zero()) v[i * g + x] = emb(u.first[i]);
        h.units.push_back({u.i, u.j, G.elements()[x], v, std::nullopt});
      }
    out.frames.push_back(std::move(h));
  }
  (void)n;
  out.algebra = std::move(A);
  return out;
}

Built upper_triangular(int n, const FiniteAbelianGroup& G, const std::vector<GroupElement>& tuple) {
  if (static_cast<int>(tuple.size()) != n) throw Error(ErrorCode::InvalidSpec, "tuple length != n");
  const int m = G.exponent();
  std::vector<std::pair<int, int>> cells;
  std::vector<std::string> labels;
  std::vector<GroupElement> grading;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      cells.push_back({i, j});
      labels.push_back("E" + std::to_string(i) + std::to_string(j));
      grading.push_back(G.sub(tuple[j - 1], tuple[i - 1]));
    }
  auto idx = [&](int i, int j) {
    return static_cast<size_t>(std::find(cells.begin(), cells.end(), std::pair{i, j}) - cells.begin());
  };
  GradedStarAlgebra A(G, m, labels, grading);
  Vec unit = A.zero();
  for (auto [i, j] : cells) {
    for (auto [k, l] : cells)
      if (j == k) A.set_product(idx(i, j), idx(k, l), {{idx(i, l), CycloScalar(m, 1L)}});
    A.set_star(idx(i, j), {{idx(n + 1 - j, n + 1 - i), CycloScalar(m, 1L)}});
    if (i == j) unit[idx(i, i)] = CycloScalar(m, 1L);
  }
  A.set_unit(unit);
  require_axioms(A, "upper_triangular");
  Built out;
  for (int i = 1; 2 * i <= n + 1; ++i) {
    int r = n + 1 - i;
    ComponentFrame f;
    f.k = 1;
    f.H = {G.identity()};
    f.lambda = CycloScalar(m, 1L);
    if (r == i) {
      f.type = 1;
      f.units.push_back({1, 1, G.identity(), A.basis(idx(i, i)), std::nullopt});
    } else {
      f.type = 2;
      f.units.push_back({1, 1, G.identity(), A.basis(idx(i, i)), A.basis(idx(r, r))});
    }
    out.frames.push_back(std::move(f));
  }
  out.algebra = std::move(A);
  out.name = "UT" + std::to_string(n) + " tuple " + tuple_string(tuple) + " reflection";
  return out;
}

Built square_zero_extension(const Built& B, int sign, const GroupElement& shift) {
  const auto& b = B.algebra;
  const auto& G = b.group();
  const size_t n = b.dim();
  const int m = b.conductor();
  std::vector<std::string> labels = b.labels();
  std::vector<GroupElement> grading = b.grading();
  for (size_t i = 0; i < n; ++i) {
    labels.push_back(b.labels()[i] + ".u");
    grading.push_back(G.add(b.degree(i), shift));
  }
  GradedStarAlgebra A(G, m, labels, grading);
  auto up = [&](TermList t) {
    for (auto& x : t) x.index += n;
    return t;
  };
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      A.set_product(i, j, b.product(i, j));
      A.set_product(i, n + j, up(b.product(i, j)));
      A.set_product(n + i, j, up(b.product(i, j)));
    }
    A.set_star(i, b.star_image(i));
    TermList s = up(b.star_image(i));
    for (auto& x : s) x.coeff *= CycloScalar(m, static_cast<long>(sign));
    A.set_star(n + i, s);
  }
  if (b.unit()) A.set_unit(pad(*b.unit(), 0, 2 * n, m));
  require_axioms(A, "square_zero_extension");
  Built out;
  out.algebra = std::move(A);
  for (const auto& f : B.frames) out.frames.push_back(shift_frame(f, 0, 2 * n, m));
  out.name = B.name + " + u, u^2=0, u*=" + (sign > 0 ? "u" : "-u");
  return out;
}

SuperAlgebra phi_functor(const GradedStarAlgebra& C, const std::optional<Vec>& w_in) {
  const auto& G = C.group();
  if (G.orders() != std::vector<int>{4}) throw Error(ErrorCode::WrongGroup, "phi_functor needs Z/4");
  const GroupElement two{2};
  if (!C.unit()) throw Error(ErrorCode::NoCentralUnit, "algebra has no unit");
  const Vec& one = *C.unit();
  auto is_central_unit = [&](const Vec& w) {
    if (w.size() != C.dim()) return false;
    auto d = C.homogeneous_degree(w);
    if (!d || *d != two) return false;
    for (size_t i = 0; i < C.dim(); ++i)
      if (C.multiply(w, C.basis(i)) != C.multiply(C.basis(i), w)) return false;
    return C.multiply(w, w) == one;
  };
  std::optional<Vec> w = w_in;
  if (!w) {
    // central elements of degree 2: solve w b_i = b_i w
    std::vector<size_t> cols;
    for (size_t i = 0; i < C.dim(); ++i)
      if (C.degree(i) == two) cols.push_back(i);
    std::vector<Vec> eqs;
    for (size_t i = 0; i < C.dim(); ++i) {
      std::vector<Vec> diff;
      for (size_t c : cols) diff.push_back(C.multiply(C.basis(c), C.basis(i)) - C.multiply(C.basis(i), C.basis(c)));
      for (size_t r = 0; r < C.dim(); ++r) {
        Vec eq = zero_vec(cols.size(), C.conductor());
        for (size_t t = 0; t < cols.size(); ++t) eq[t] = diff[t][r];
        eqs.push_back(eq);
      }
    }
    for (const auto& sol : kernel(eqs, cols.size(), C.conductor())) {
      Vec cand = C.zero();
      for (size_t t = 0; t < cols.size(); ++t) cand[cols[t]] = sol[t];
      Vec sq = C.multiply(cand, cand);
      auto c = proportional(sq, one);
      if (!c || !c->is_rational() || sgn(c->rational()) <= 0) continue;
      mpq_class r = c->rational();
      mpz_class num = sqrt(r.get_num()), den = sqrt(r.get_den());
      if (num * num != r.get_num() || den * den != r.get_den()) continue;
      cand = scaled(cand, CycloScalar(C.conductor(), mpq_class(den, num)));
      if (is_central_unit(cand)) {
        w = cand;
        break;
      }
    }
  }
  if (!w || !is_central_unit(*w)) throw Error(ErrorCode::NoCentralUnit, "no central w of degree 2 with w^2 = 1");
  auto a = proportional(C.star(*w), *w);
  if (!a) throw Error(ErrorCode::AlphaNotSign, "star(w) is not a multiple of w");
  int alpha;
  if (a->is_one()) alpha = 1;
  else if ((-*a).is_one()) alpha = -1;
  else throw Error(ErrorCode::AlphaNotSign, "star(w) = " + a->to_string() + " w");

  std::vector<size_t> keep;
  for (size_t i = 0; i < C.dim(); ++i)
    if (C.degree(i)[0] <= 1) keep.push_back(i);
  std::vector<int> pos(C.dim(), -1);
  for (size_t t = 0; t < keep.size(); ++t) pos[keep[t]] = static_cast<int>(t);
  FiniteAbelianGroup Z2({2});
  std::vector<std::string> labels;
  std::vector<GroupElement> grading;
  for (size_t i : keep) {
    labels.push_back(C.labels()[i]);
    grading.push_back({C.degree(i)[0]});
  }
  GradedStarAlgebra S(Z2, C.conductor(), labels, grading);
  auto restrict_vec = [&](const Vec& v) {
    TermList t;
    for (size_t i = 0; i < C.dim(); ++i) {
      if (v[i].is_zero()) continue;
      if (pos[i] < 0) throw Error(ErrorCode::InvalidSpec, "product leaves C_0 + C_1");
      t.push_back({static_cast<size_t>(pos[i]), v[i]});
    }
    return t;
  };
  for (size_t a1 = 0; a1 < keep.size(); ++a1) {
    for (size_t b1 = 0; b1 < keep.size(); ++b1) {
      Vec p = C.multiply(C.basis(keep[a1]), C.basis(keep[b1]));
      if (C.degree(keep[a1])[0] == 1 && C.degree(keep[b1])[0] == 1) p = C.multiply(p, *w);
      S.set_product(a1, b1, restrict_vec(p));
    }
    S.set_star(a1, restrict_vec(C.star(C.basis(keep[a1]))));
  }
  S.set_unit(restrict_vec(one).empty() ? std::nullopt : std::optional<Vec>(from_terms(restrict_vec(one), keep.size(), C.conductor())));
  return {std::move(S), alpha};
}

std::vector<Violation> verify_super_axioms(const SuperAlgebra& S) {
  const auto& A = S.algebra;
  std::vector<Violation> out;
  const size_t n = A.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (const auto& t : A.product(i, j))
        if (A.degree(t.index) != A.group().add(A.degree(i), A.degree(j))) {
          out.push_back({"grading", {i, j}, "product leaves the degree-sum component"});
          goto assoc;
        }
assoc:
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (A.multiply(A.multiply(A.basis(i), A.basis(j)), A.basis(k)) !=
            A.multiply(A.basis(i), A.multiply(A.basis(j), A.basis(k)))) {
          out.push_back({"associativity", {i, j, k}, "not associative"});
          goto star;
        }
star:
  for (size_t i = 0; i < n; ++i) {
    if (A.star(A.star(A.basis(i))) != A.basis(i)) out.push_back({"star-order", {i}, "star^2 != id"});
    for (const auto& t : A.star_image(i))
      if (A.degree(t.index) != A.degree(i)) out.push_back({"star-graded", {i}, "star moves degree"});
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      long s = (S.alpha == -1 && A.degree(i)[0] == 1 && A.degree(j)[0] == 1) ? -1 : 1;
      Vec lhs = A.star(A.multiply(A.basis(i), A.basis(j)));
      Vec rhs = scaled(A.multiply(A.star(A.basis(j)), A.star(A.basis(i))), A.scalar(s));
      if (lhs != rhs) {
        out.push_back({"alpha-sign-law", {i, j}, "(a_i b_j)* != alpha^{ij} b_j* a_i*"});
        return out;
      }
    }
  return out;
}

namespace {

std::vector<std::vector<GroupElement>> tuples_for(const FiniteAbelianGroup& G, int k,
                                                  const std::vector<GroupElement>& entries) {
  // first entry fixed to 0, remaining nondecreasing in enumeration order
  std::vector<std::vector<GroupElement>> out;
  std::vector<GroupElement> cur{G.identity()};
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (size_t e = start; e < entries.size(); ++e) {
      cur.push_back(entries[e]);
      rec(e);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<GroupElement> coset_reps(const FiniteAbelianGroup& G, const Subgroup& H) {
  std::vector<GroupElement> reps;
  std::set<GroupElement> covered;
  for (const auto& g : G.elements()) {
    if (covered.count(g)) continue;
    reps.push_back(g);
    for (const auto& h : H) covered.insert(G.add(g, h));
  }
  return reps;
}

}  // namespace

std::vector<Built> enumerate_classification(int q, int k_max) {
  bool prime = q >= 2;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) prime = false;
  if (!(prime || q == 4)) throw Error(ErrorCode::UnsupportedOrder, "q must be prime or 4");
  if (k_max < 1 || k_max > 3) throw Error(ErrorCode::UnsupportedOrder, "k_max must be 1..3");
  FiniteAbelianGroup G({q});
  Subgroup trivial{G.identity()};
  Subgroup whole = G.elements();
  std::sort(whole.begin(), whole.end());
  Subgroup half{{0}, {2}};
  std::vector<Subgroup> exchange_H{trivial, whole};
  std::vector<Subgroup> cyclic_H{whole};
  if (q == 4) {
    exchange_H.push_back(half);
    cyclic_H.push_back(half);
  }
  std::vector<Built> out;
  auto emit = [&](Built b, int family) {
    b.family = family;
    out.push_back(std::move(b));
  };
  auto try_build = [&](auto&& f) -> std::optional<Built> {
    try {
      return f();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidSpec) return std::nullopt;
      throw;
    }
  };
  for (int k = 1; k <= k_max; ++k) {
    // (1) exchange doubles of M_k(F[H]); tuples modulo H
    for (const auto& H : exchange_H)
      for (const auto& t : tuples_for(G, k, coset_reps(G, H))) {
        InvolutionChoice none{InvolutionChoice::none, 1, {}};
        emit(exchange_double(matrix_twisted(k, G, H, t, none)), 1);
      }
    // (2) M_k(F) with elementary grading, reflection (+ transpose for constant tuples)
    for (const auto& t : tuples_for(G, k, G.elements())) {
      auto refl = try_build([&] {
        InvolutionChoice inv{InvolutionChoice::elementary, 1, reflection_spec(k, G, trivial, t)};
        return matrix_twisted(k, G, trivial, t, inv);
      });
      if (refl) {
        refl->name += " (reflection)";
        emit(*refl, 2);
      }
      bool constant = std::all_of(t.begin(), t.end(), [&](const auto& x) { return x == t[0]; });
      if (constant && k > 1)
        emit(matrix_twisted(k, G, trivial, t, {InvolutionChoice::transpose_family, 1, {}}), 2);
    }
    // (3)/(4) M_k(F[H]) with transpose or symplectic, natural grading
    std::vector<GroupElement> zeros(k, G.identity());
    for (int alpha : {1, -1}) {
      for (const auto& H : cyclic_H) {
        if (alpha == -1 && H.size() != 2 && H.size() != 4) continue;
        emit(matrix_twisted(k, G, H, zeros, {InvolutionChoice::transpose_family, alpha, {}}),
             alpha == 1 ? 3 : 4);
        if (k % 2 == 0)
          emit(matrix_twisted(k, G, H, zeros, {InvolutionChoice::symplectic_family, alpha, {}}),
               alpha == 1 ? 3 : 4);
      }
    }
    // (5) q = 4: M_k(F[{0,2}]) with tuple in {0,1}^k, elementary involution
    if (q == 4) {
      std::vector<GroupElement> bits{{0}, {1}};
      for (const auto& t : tuples_for(G, k, bits)) {
        bool constant = std::all_of(t.begin(), t.end(), [&](const auto& x) { return x == t[0]; });
        for (int alpha : {1, -1}) {
          for (int base = 0; base < 2; ++base) {
            if (base == 1 && !(constant && k > 1)) continue;
            // sign patterns over the k*k matrix units, first passing one wins
            for (int pattern = 0; pattern < (1 << (k * k)); ++pattern) {
              auto built = try_build([&] {
                ElementaryInvolutionSpec spec;
                for (int i = 1; i <= k; ++i)
                  for (int j = 1; j <= k; ++j)
                    for (const auto& xi : half) {
                      int ri = base ? j : k + 1 - j, rj = base ? i : k + 1 - i;
                      GroupElement d = G.add(G.sub(xi, t[i - 1]), t[j - 1]);
                      GroupElement dr0 = G.sub(t[rj - 1], t[ri - 1]);
                      GroupElement rxi = G.sub(d, dr0);
                      if (!std::binary_search(half.begin(), half.end(), rxi))
                        throw Error(ErrorCode::InvalidSpec, "ungraded");
                      int s = ((pattern >> ((i - 1) * k + (j - 1))) & 1) ? -1 : 1;
                      if (alpha == -1 && chi4(G, d)) s = -s;
                      spec[{i, j, xi}] = {s, ri, rj, rxi};
                    }
                return matrix_twisted(k, G, half, t, {InvolutionChoice::elementary, 1, spec});
              });
              if (built) {
                built->name += std::string(base ? " (transpose" : " (reflection") +
                               ", alpha=" + std::to_string(alpha) + ")";
                emit(*built, 5);
                break;
              }
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace gsa
