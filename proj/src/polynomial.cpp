#include "gsa/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gsa/error.hpp"

namespace gsa {

MultilinearPolynomial::MultilinearPolynomial(std::vector<StarVariable> vars, int conductor)
    : vars_(std::move(vars)), m_(conductor) {
  std::set<int> ids;
  for (const auto& v : vars_)
    if (!ids.insert(v.id).second) throw Error(ErrorCode::InvalidSpec, "duplicate variable id");
}

size_t MultilinearPolynomial::position(int id) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].id == id) return i;
  throw Error(ErrorCode::InvalidSpec, "unknown variable id " + std::to_string(id));
}

const StarVariable& MultilinearPolynomial::var(int id) const { return vars_[position(id)]; }

void MultilinearPolynomial::add(const CycloScalar& c, const std::vector<int>& word) {
  if (word.size() != vars_.size()) throw Error(ErrorCode::InvalidSpec, "word is not multilinear");
  std::vector<bool> seen(vars_.size(), false);
  for (int id : word) {
    size_t p = position(id);
    if (seen[p]) throw Error(ErrorCode::InvalidSpec, "variable repeated in a word");
    seen[p] = true;
  }
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), word,
                             [](const Monomial& t, const std::vector<int>& w) { return t.word < w; });
  if (it != terms_.end() && it->word == word) {
    it->coef += c;
    if (it->coef.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {c, word});
  }
}

MultilinearPolynomial& MultilinearPolynomial::operator+=(const MultilinearPolynomial& o) {
  for (const auto& t : o.terms_) add(t.coef, t.word);
  return *this;
}

MultilinearPolynomial MultilinearPolynomial::scaled(const CycloScalar& c) const {
  MultilinearPolynomial out(vars_, m_);
  for (const auto& t : terms_) out.add(t.coef * c, t.word);
  return out;
}

bool operator==(const MultilinearPolynomial& a, const MultilinearPolynomial& b) {
  if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].word != b.terms_[i].word || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

MultilinearPolynomial star_of_polynomial(const MultilinearPolynomial& f) {
  MultilinearPolynomial out(f.vars(), f.conductor());
  long sign = 1;
  for (const auto& v : f.vars())
    if (v.kind == VarKind::Z) sign = -sign;
  for (const auto& t : f.terms()) {
    std::vector<int> w(t.word.rbegin(), t.word.rend());
    out.add(t.coef * CycloScalar(f.conductor(), sign), w);
  }
  return out;
}

MultilinearPolynomial alternate(const MultilinearPolynomial& f, const std::vector<int>& S) {
  if (S.empty()) return f;
  const auto& v0 = f.var(S[0]);
  for (int id : S) {
    const auto& v = f.var(id);
    if (v.kind != v0.kind || v.degree != v0.degree)
      throw Error(ErrorCode::MixedDegrees, "alternation set mixes complete degrees");
  }
  std::vector<int> sorted = S;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::InvalidSpec, "alternation set repeats a variable");
  MultilinearPolynomial out(f.vars(), f.conductor());
  std::vector<size_t> perm(S.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    charge(static_cast<long long>(f.terms().size()));
    int inversions = 0;
    for (size_t i = 0; i < perm.size(); ++i)
      for (size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    CycloScalar sign(f.conductor(), inversions % 2 ? -1L : 1L);
    for (const auto& t : f.terms()) {
      std::vector<int> w = t.word;
      for (auto& id : w) {
        auto it = std::find(S.begin(), S.end(), id);
        if (it != S.end()) id = S[perm[it - S.begin()]];
      }
      out.add(t.coef * sign, w);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

MultilinearPolynomial commutator(const StarVariable& a, const StarVariable& b, int conductor) {
  MultilinearPolynomial f({a, b}, conductor);
  f.add(CycloScalar(conductor, 1L), {a.id, b.id});
  f.add(CycloScalar(conductor, -1L), {b.id, a.id});
  return f;
}

Vec evaluate_word(const GradedStarAlgebra& A, const std::vector<int>& word,
                  const std::function<const Vec&(int)>& value) {
  if (word.empty()) {
    if (!A.unit()) throw Error(ErrorCode::InvalidSpec, "empty word needs a unital algebra");
    return *A.unit();
  }
  Vec acc = value(word[0]);
  for (size_t i = 1; i < word.size() && !is_zero(acc); ++i) acc = A.multiply(acc, value(word[i]));
  return acc;
}

Vec evaluate(const GradedStarAlgebra& A, const MultilinearPolynomial& f, const std::vector<Vec>& values) {
  if (values.size() != f.vars().size()) throw Error(ErrorCode::DimensionMismatch, "value count");
  std::vector<size_t> pos_of;
  int max_id = 0;
  for (const auto& v : f.vars()) max_id = std::max(max_id, v.id);
  std::vector<int> slot(max_id + 1, -1);
  for (size_t i = 0; i < f.vars().size(); ++i) slot[f.vars()[i].id] = static_cast<int>(i);
  auto value = [&](int id) -> const Vec& { return values[slot[id]]; };
  Vec out = A.zero();
  for (const auto& t : f.terms()) axpy(out, t.coef, evaluate_word(A, t.word, value));
  return out;
}

void FormPolynomial::validate() const {
  std::set<int> ids;
  for (const auto& v : vars)
    if (!ids.insert(v.id).second) throw Error(ErrorCode::InvalidSpec, "duplicate variable id");
  for (const auto& t : terms) {
    std::multiset<int> used(t.word.begin(), t.word.end());
    for (const auto& ff : t.forms) {
      if ((ff.f != 1 && ff.f != 2) || ff.args.size() != static_cast<size_t>(ff.f))
        throw Error(ErrorCode::InvalidSpec, "form factor arity");
      for (const auto& a : ff.args) {
        if (a.empty()) throw Error(ErrorCode::InvalidSpec, "empty form argument");
        used.insert(a.begin(), a.end());
      }
    }
    if (used != std::multiset<int>(ids.begin(), ids.end()))
      throw Error(ErrorCode::InvalidSpec, "term does not use each variable exactly once");
  }
}

Vec evaluate(const GradedStarAlgebra& A, const FormPolynomial& f, const std::vector<Vec>& values,
             const FormEvaluator& forms) {
  if (values.size() != f.vars.size()) throw Error(ErrorCode::DimensionMismatch, "value count");
  auto value = [&](int id) -> const Vec& {
    for (size_t i = 0; i < f.vars.size(); ++i)
      if (f.vars[i].id == id) return values[i];
    throw Error(ErrorCode::InvalidSpec, "unknown variable id");
  };
  Vec out = A.zero();
  for (const auto& t : f.terms) {
    CycloScalar c = t.coef;
    for (const auto& ff : t.forms) {
      if (c.is_zero()) break;
      Vec a = evaluate_word(A, ff.args[0], value);
      if (ff.f == 1) {
        c *= forms(1, a, nullptr);
      } else {
        Vec b = evaluate_word(A, ff.args[1], value);
        c *= forms(2, a, &b);
      }
    }
    if (c.is_zero()) continue;
    axpy(out, c, evaluate_word(A, t.word, value));
  }
  return out;
}

}  // namespace gsa
