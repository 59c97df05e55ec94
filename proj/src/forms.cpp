#include "gsa/forms.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "gsa/error.hpp"

namespace gsa {

namespace {

std::vector<Vec> d_vectors(const VerifiedDecomposition& dec) {
  std::vector<Vec> out;
  for (const auto& c : dec.data.components)
    for (const auto& d : c.D) out.push_back(d.vector);
  return out;
}

}  // namespace

TraceForms::TraceForms(const VerifiedDecomposition& dec) : m_(dec.algebra.conductor()) {
  const auto& A = dec.algebra;
  const size_t n = A.dim();
  auto D = d_vectors(dec);
  const size_t t = D.size();
  std::vector<Vec> basis = D;
  for (const auto& r : dec.radical.rows()) basis.push_back(r);
  Coordinatizer coord(n, m_, basis);
  if (!coord.independent() || basis.size() != n)
    throw Error(ErrorCode::DecompositionMismatch, "D and the radical do not split A");
  auto b_part = [&](const Vec& a) {
    auto c = coord.coordinates(a);
    Vec b = A.zero();
    for (size_t j = 0; j < t; ++j) axpy(b, (*c)[j], D[j]);
    return b;
  };
  // operator c -> b o c on B, in D coordinates; T[k] for the basis vector b_k
  std::vector<std::vector<Vec>> T(n);
  f1_ = zero_vec(n, m_);
  for (size_t k = 0; k < n; ++k) {
    Vec b = A.project_group(b_part(A.basis(k)), A.group().identity());
    T[k].assign(t, zero_vec(t, m_));
    for (size_t j = 0; j < t; ++j) {
      auto c = coord.coordinates(A.jordan(b, D[j]));
      for (size_t r = t; r < n; ++r)
        if (!(*c)[r].is_zero()) throw Error(ErrorCode::DecompositionMismatch, "B is not closed under o");
      for (size_t i = 0; i < t; ++i) T[k][i][j] = (*c)[i];
    }
    for (size_t i = 0; i < t; ++i) f1_[k] += T[k][i][i];
  }
  f2_.assign(n, zero_vec(n, m_));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      CycloScalar s(m_);
      for (size_t i = 0; i < t; ++i)
        for (size_t j = 0; j < t; ++j) s.add_product(T[a][i][j], T[b][j][i]);
      f2_[a][b] = s;
    }
}

CycloScalar TraceForms::f1(const Vec& a) const {
  CycloScalar s(m_);
  for (size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero()) s.add_product(a[k], f1_[k]);
  return s;
}

CycloScalar TraceForms::f2(const Vec& a, const Vec& b) const {
  CycloScalar s(m_);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero() && !f2_[i][j].is_zero()) s.add_product(a[i] * b[j], f2_[i][j]);
  }
  return s;
}

FormEvaluator TraceForms::evaluator() const {
  return [this](int f, const Vec& a, const Vec* b) { return f == 1 ? f1(a) : f2(a, *b); };
}

CycloScalar trace_forms(const VerifiedDecomposition& dec, const Vec& a1, const std::optional<Vec>& a2) {
  TraceForms tf(dec);
  if (a1.size() != dec.algebra.dim() || (a2 && a2->size() != dec.algebra.dim()))
    throw Error(ErrorCode::DimensionMismatch, "form argument length");
  return a2 ? tf.f2(a1, *a2) : tf.f1(a1);
}

namespace {
void for_each_tuple(const MultilinearPolynomial& f, const std::vector<ElementaryElement>& elems,
                    const std::vector<std::vector<int>>& classes, int max_radical,
                    const std::function<bool(const std::vector<size_t>&)>& visit);
}  // namespace

TraceTestPolynomial trace_test_polynomial(const VerifiedDecomposition& dec) {
  const auto& A = dec.algebra;
  const auto& G = A.group();
  const int m = A.conductor();
  std::vector<CompleteDegree> dclasses;
  for (const auto& c : dec.data.components)
    for (const auto& d : c.D) dclasses.push_back(d.degree);
  std::optional<CompleteDegree> radical_class;
  if (!dec.data.U.empty()) radical_class = dec.data.U.front().degree;

  std::vector<StarVariable> vars;
  std::vector<std::vector<int>> sets;
  int id = 1;
  auto add_set = [&](bool large) {
    std::vector<int> s;
    auto degs = dclasses;
    if (large && radical_class) degs.push_back(*radical_class);
    for (const auto& d : degs) {
      vars.push_back({id, d.sign == Sign::plus ? VarKind::Y : VarKind::Z, d.degree});
      s.push_back(id++);
    }
    sets.push_back(s);
  };
  add_set(false);
  for (int j = 1; j < dec.nd; ++j) add_set(true);

  TraceTestPolynomial out;
  out.x_vars = sets[0];
  for (const auto& s : sets) {
    std::vector<std::vector<int>> by_class(2 * G.order());
    for (int v : s)
      for (const auto& sv : vars)
        if (sv.id == v) by_class[complete_index(G, sv.complete())].push_back(v);
    for (auto& c : by_class)
      if (c.size() > 1) out.alternating_classes.push_back(c);
  }
  auto build = [&](const std::vector<int>& word) {
    MultilinearPolynomial f(vars, m);
    f.add(CycloScalar(m, 1L), word);
    for (const auto& c : out.alternating_classes) f = alternate(f, c);
    return f;
  };
  // prefer an ordering on which f is not identically zero on elementary tuples
  auto elems = elementary_elements(dec);
  auto nonzero_somewhere = [&](const MultilinearPolynomial& f) {
    bool hit = false;
    for_each_tuple(f, elems, out.alternating_classes, dec.nd - 1, [&](const std::vector<size_t>& ch) {
      std::vector<Vec> vals;
      for (size_t c : ch) vals.push_back(elems[c].vector);
      hit = !is_zero(evaluate(A, f, vals));
      return !hit;
    });
    return hit;
  };
  std::vector<int> word;
  for (const auto& v : vars) word.push_back(v.id);
  std::mt19937_64 rng(7);
  out.f = build(word);
  for (int attempt = 0; attempt < 64 && !nonzero_somewhere(out.f); ++attempt) {
    std::shuffle(word.begin(), word.end(), rng);
    out.f = build(word);
  }
  return out;
}

namespace {

// Enumerates elementary tuples for f's variables: strictly increasing inside
// each alternating class, at most max_radical radical entries.
void for_each_tuple(const MultilinearPolynomial& f, const std::vector<ElementaryElement>& elems,
                    const std::vector<std::vector<int>>& classes, int max_radical,
                    const std::function<bool(const std::vector<size_t>&)>& visit) {
  const size_t n = f.vars().size();
  std::vector<std::vector<size_t>> pools(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t e = 0; e < elems.size(); ++e)
      if (elems[e].degree == f.vars()[i].complete()) pools[i].push_back(e);
  std::vector<int> prev(n, -1);  // position of the previous variable of the same class
  for (const auto& c : classes)
    for (size_t k = 1; k < c.size(); ++k) prev[f.position(c[k])] = static_cast<int>(f.position(c[k - 1]));
  std::vector<size_t> choice(n);
  // classes require their earlier members assigned first; process in class order
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::function<bool(size_t, int)> rec = [&](size_t k, int rad) -> bool {
    if (k == n) return visit(choice);
    size_t v = order[k];
    for (size_t e : pools[v]) {
      if (prev[v] >= 0 && e <= choice[prev[v]]) continue;
      int r = rad + (elems[e].radical ? 1 : 0);
      if (r > max_radical) continue;
      choice[v] = e;
      if (!rec(k + 1, r)) return false;
    }
    return true;
  };
  // prev[v] < v holds because classes list ids in declaration order
  for (size_t i = 0; i < n; ++i)
    if (prev[i] > static_cast<int>(i)) throw Error(ErrorCode::InvalidSpec, "class order");
  rec(0, 0);
}

}  // namespace

TraceIdentityReport check_trace_identities(const VerifiedDecomposition& dec, const MultilinearPolynomial& f,
                                           const std::vector<int>& x_vars,
                                           const std::vector<std::vector<int>>& alternating_classes) {
  TraceIdentityReport rep;
  const auto& A = dec.algebra;
  const auto& G = A.group();
  const GroupElement e = G.identity();
  TraceForms tf(dec);
  auto elems = elementary_elements(dec);
  if (x_vars.size() != dec.t) throw Error(ErrorCode::InvalidSpec, "need exactly dim B alternating variables");
  for (int id : x_vars) f.position(id);
  std::vector<std::vector<int>> classes = alternating_classes;
  for (auto& c : classes) std::sort(c.begin(), c.end(), [&](int a, int b) { return f.position(a) < f.position(b); });

  auto pool_of = [&](const CompleteDegree& d) {
    std::vector<size_t> p;
    for (size_t i = 0; i < elems.size(); ++i)
      if (elems[i].degree == d) p.push_back(i);
    return p;
  };
  auto name_tuple = [&](const std::vector<size_t>& ch) {
    std::vector<std::string> s;
    for (size_t c : ch) s.push_back(elems[c].name);
    return s;
  };

  // f2 vanishes off (Y^e,Y^e) and (Z^e,Z^e), f1 off Y^e; h is only evaluated
  // when some form value is nonzero.
  std::vector<CompleteDegree> degs;
  for (size_t c = 0; c < 2 * G.order(); ++c) degs.push_back(complete_from_index(G, c));
  const CompleteDegree ye{Sign::plus, e}, ze{Sign::minus, e};
  auto h_nonzero_tuple = [&]() -> std::optional<std::vector<size_t>> {
    std::optional<std::vector<size_t>> hit;
    for_each_tuple(f, elems, classes, dec.nd - 1, [&](const std::vector<size_t>& ch) {
      std::vector<Vec> vals;
      for (size_t c : ch) vals.push_back(elems[c].vector);
      ++rep.evaluations;
      if (!is_zero(evaluate(A, f, vals))) {
        hit = ch;
        return false;
      }
      return true;
    });
    return hit;
  };
  std::optional<std::optional<std::vector<size_t>>> h_cache;
  auto h_witness = [&]() {
    if (!h_cache) h_cache = h_nonzero_tuple();
    return *h_cache;
  };
  size_t pairs = 0, singles = 0;
  for (size_t a = 0; a < degs.size() && rep.ok; ++a)
    for (size_t b = a; b < degs.size() && rep.ok; ++b) {
      if ((degs[a] == ye && degs[b] == ye) || (degs[a] == ze && degs[b] == ze)) continue;
      ++pairs;
      for (size_t u : pool_of(degs[a]))
        for (size_t v : pool_of(degs[b])) {
          charge(1);
          if (tf.f2(elems[u].vector, elems[v].vector).is_zero()) continue;
          if (auto w = h_witness()) {
            rep.ok = false;
            rep.counterexample = {"form vanishing f2", elems[u].name, elems[v].name};
            for (auto& s : name_tuple(*w)) rep.counterexample.push_back(s);
          }
        }
    }
  for (const auto& d : degs) {
    if (d == ye || !rep.ok) continue;
    ++singles;
    for (size_t u : pool_of(d))
      if (!tf.f1(elems[u].vector).is_zero())
        if (auto w = h_witness()) {
          rep.ok = false;
          rep.counterexample = {"form vanishing f1", elems[u].name};
          for (auto& s : name_tuple(*w)) rep.counterexample.push_back(s);
        }
  }
  if (rep.ok)
    rep.checks.push_back("form vanishing: f2 on " + std::to_string(pairs) + " degree pairs and f1 on " +
                         std::to_string(singles) + " degrees vanish");

  // trace substitution identities
  std::vector<size_t> xpos;
  for (int id : x_vars) xpos.push_back(f.position(id));
  struct Family {
    const char* name;
    CompleteDegree d;
    int arity;
  };
  for (const Family& fam : {Family{"f2(y1,y2)", ye, 2}, Family{"f2(z1,z2)", ze, 2}, Family{"f1(y)", ye, 1}}) {
    if (!rep.ok) break;
    auto pool = pool_of(fam.d);
    long long count = 0;
    std::vector<std::pair<size_t, size_t>> ys;
    for (size_t a : pool)
      if (fam.arity == 1) ys.push_back({a, a});
      else
        for (size_t b : pool) ys.push_back({a, b});
    for_each_tuple(f, elems, classes, dec.nd - 1, [&](const std::vector<size_t>& ch) {
      int rad = 0;
      for (size_t c : ch) rad += elems[c].radical;
      std::vector<Vec> vals;
      for (size_t c : ch) vals.push_back(elems[c].vector);
      Vec base = evaluate(A, f, vals);
      for (auto [y1, y2] : ys) {
        int r2 = rad + elems[y1].radical + (fam.arity == 2 ? elems[y2].radical : 0);
        if (r2 >= dec.nd) continue;  // both sides lie in J^nd = 0
        const Vec& Y1 = elems[y1].vector;
        const Vec& Y2 = elems[y2].vector;
        CycloScalar c = fam.arity == 2 ? tf.f2(Y1, Y2) : tf.f1(Y1);
        Vec lhs = scaled(base, c);
        Vec rhs = A.zero();
        for (size_t p : xpos) {
          auto v2 = vals;
          v2[p] = fam.arity == 2 ? A.jordan(Y1, A.jordan(Y2, vals[p])) : A.jordan(Y1, vals[p]);
          rhs = rhs + evaluate(A, f, v2);
        }
        charge(static_cast<long long>(xpos.size() * f.terms().size()));
        ++count;
        if (lhs != rhs) {
          rep.ok = false;
          rep.counterexample = {std::string("trace substitution ") + fam.name, elems[y1].name};
          if (fam.arity == 2) rep.counterexample.push_back(elems[y2].name);
          for (auto& s : name_tuple(ch)) rep.counterexample.push_back(s);
          return false;
        }
      }
      return true;
    });
    rep.evaluations += count;
    if (rep.ok)
      rep.checks.push_back(std::string("trace substitution ") + fam.name + ": " + std::to_string(count) +
                           " evaluations agree");
  }
  return rep;
}

}  // namespace gsa
