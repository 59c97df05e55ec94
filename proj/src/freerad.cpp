#include <map>

#include "gsa/constructions.hpp"
#include "gsa/error.hpp"

namespace gsa {

namespace {

// gaps[0] letter[0] gaps[1] ... letter[k-1] gaps[k]; gap -1 is empty.
struct Word {
  std::vector<int> gaps;
  std::vector<int> letters;
  auto operator<=>(const Word&) const = default;
};

struct Letter {
  VarKind kind;
  int copy;
  GroupElement degree;
};

}  // namespace

size_t free_radical_word_count(size_t dimB, size_t group_order, int q, int s) {
  size_t total = dimB, letters = 2 * static_cast<size_t>(q) * group_order;
  for (int k = 1; k < s; ++k) {
    size_t c = 1;
    for (int i = 0; i < k; ++i) c *= letters;
    for (int i = 0; i <= k; ++i) c *= dimB + 1;
    total += c;
  }
  return total;
}

GradedStarAlgebra truncated_free_radical(const GradedStarAlgebra& B, int q, int s,
                                         const std::vector<MultilinearPolynomial>& identities) {
  if (s < 1 || q < 0) throw Error(ErrorCode::InvalidSpec, "need s >= 1 and q >= 0");
  if (s == 1) return B;
  const auto& G = B.group();
  const int m = B.conductor();
  const int nb = static_cast<int>(B.dim());
  charge(static_cast<long long>(free_radical_word_count(B.dim(), G.order(), q, s)));

  std::vector<Letter> letters;
  for (VarKind kind : {VarKind::Y, VarKind::Z})
    for (int c = 1; c <= q; ++c)
      for (const auto& th : G.elements()) letters.push_back({kind, c, th});

  std::vector<Word> words;
  for (int b = 0; b < nb; ++b) words.push_back({{b}, {}});
  for (int k = 1; k < s; ++k) {
    Word w{std::vector<int>(k + 1, -1), std::vector<int>(k, 0)};
    while (true) {
      words.push_back(w);
      // odometer over gaps (values -1..nb-1) then letters
      size_t pos = 0;
      for (; pos < w.gaps.size(); ++pos) {
        if (++w.gaps[pos] < nb) break;
        w.gaps[pos] = -1;
      }
      if (pos < w.gaps.size()) continue;
      size_t lp = 0;
      for (; lp < w.letters.size(); ++lp) {
        if (++w.letters[lp] < static_cast<int>(letters.size())) break;
        w.letters[lp] = 0;
      }
      if (lp == w.letters.size()) break;
    }
  }
  std::map<Word, size_t> index;
  for (size_t i = 0; i < words.size(); ++i) index[words[i]] = i;

  std::vector<std::string> labels;
  std::vector<GroupElement> grading;
  for (const auto& w : words) {
    std::string l;
    GroupElement d = G.identity();
    for (size_t g = 0; g < w.gaps.size(); ++g) {
      if (w.gaps[g] >= 0) {
        l += (l.empty() ? "" : ".") + B.labels()[w.gaps[g]];
        d = G.add(d, B.degree(w.gaps[g]));
      }
      if (g < w.letters.size()) {
        const auto& x = letters[w.letters[g]];
        l += (l.empty() ? "" : ".") + std::string(x.kind == VarKind::Y ? "y" : "z") +
             std::to_string(x.copy) + "@" + element_to_string(x.degree);
        d = G.add(d, x.degree);
      }
    }
    labels.push_back(l);
    grading.push_back(d);
  }
  GradedStarAlgebra R(G, m, labels, grading);
  const CycloScalar one(m, 1L);

  // expands a word whose gaps are linear combinations of B letters
  using GapTerms = std::vector<std::pair<int, CycloScalar>>;
  auto expand = [&](const std::vector<GapTerms>& gaps, const std::vector<int>& lets, CycloScalar c) {
    TermList out;
    std::vector<size_t> sel(gaps.size(), 0);
    for (const auto& g : gaps)
      if (g.empty()) return out;
    while (true) {
      Word w{std::vector<int>(gaps.size()), lets};
      CycloScalar coef = c;
      for (size_t g = 0; g < gaps.size(); ++g) {
        w.gaps[g] = gaps[g][sel[g]].first;
        coef *= gaps[g][sel[g]].second;
      }
      out.push_back({index.at(w), coef});
      size_t g = 0;
      for (; g < gaps.size(); ++g) {
        if (++sel[g] < gaps[g].size()) break;
        sel[g] = 0;
      }
      if (g == gaps.size()) break;
    }
    return out;
  };
  auto single = [&](int g) { return GapTerms{{g, one}}; };

  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = 0; j < words.size(); ++j) {
      const Word& a = words[i];
      const Word& b = words[j];
      if (a.letters.size() + b.letters.size() >= static_cast<size_t>(s)) continue;
      std::vector<GapTerms> gaps;
      for (size_t g = 0; g + 1 < a.gaps.size(); ++g) gaps.push_back(single(a.gaps[g]));
      int x = a.gaps.back(), y = b.gaps.front();
      if (x < 0) gaps.push_back(single(y));
      else if (y < 0) gaps.push_back(single(x));
      else {
        GapTerms merged;
        for (const auto& t : B.product(x, y)) merged.push_back({static_cast<int>(t.index), t.coeff});
        gaps.push_back(merged);
      }
      for (size_t g = 1; g < b.gaps.size(); ++g) gaps.push_back(single(b.gaps[g]));
      std::vector<int> lets = a.letters;
      lets.insert(lets.end(), b.letters.begin(), b.letters.end());
      R.set_product(i, j, expand(gaps, lets, one));
    }
  for (size_t i = 0; i < words.size(); ++i) {
    const Word& w = words[i];
    std::vector<GapTerms> gaps;
    for (auto it = w.gaps.rbegin(); it != w.gaps.rend(); ++it) {
      if (*it < 0) {
        gaps.push_back(single(-1));
        continue;
      }
      GapTerms st;
      for (const auto& t : B.star_image(*it)) st.push_back({static_cast<int>(t.index), t.coeff});
      gaps.push_back(st);
    }
    std::vector<int> lets(w.letters.rbegin(), w.letters.rend());
    long sign = 1;
    for (int l : lets)
      if (letters[l].kind == VarKind::Z) sign = -sign;
    R.set_star(i, expand(gaps, lets, CycloScalar(m, sign)));
  }
  if (identities.empty()) return R;

  std::vector<Vec> evals;
  for (const auto& f : identities) {
    std::vector<std::vector<Vec>> comps;
    for (const auto& v : f.vars()) comps.push_back(R.component_basis(v.complete()));
    bool empty = false;
    for (const auto& c : comps) empty |= c.empty();
    if (empty) continue;
    std::vector<size_t> sel(comps.size(), 0);
    std::vector<Vec> vals(comps.size());
    while (true) {
      for (size_t v = 0; v < comps.size(); ++v) vals[v] = comps[v][sel[v]];
      charge(static_cast<long long>(f.terms().size() * f.degree()));
      Vec e = evaluate(R, f, vals);
      if (!is_zero(e)) evals.push_back(std::move(e));
      size_t v = 0;
      for (; v < comps.size(); ++v) {
        if (++sel[v] < comps[v].size()) break;
        sel[v] = 0;
      }
      if (v == comps.size()) break;
    }
  }
  if (evals.empty()) return R;
  return quotient(R, ideal_closure(R, evals));
}

}  // namespace gsa
