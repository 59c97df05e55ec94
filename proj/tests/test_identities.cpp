#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gsa/error.hpp"
#include "gsa/identities.hpp"
#include "gsa/polynomial.hpp"
#include "oracles.hpp"

using namespace fx;

namespace {

StarVariable Y(int id, const GroupElement& d = g0) { return {id, VarKind::Y, d}; }
StarVariable Zv(int id, const GroupElement& d = g0) { return {id, VarKind::Z, d}; }

MultilinearPolynomial word_poly(std::vector<StarVariable> vars, std::vector<int> word, int m = 2) {
  MultilinearPolynomial f(std::move(vars), m);
  f.add(CycloScalar(m, 1L), word);
  return f;
}

}  // namespace

TEST_CASE("star of polynomials") {
  auto f = word_poly({Y(1), Y(2)}, {1, 2});
  CHECK(star_of_polynomial(f) == word_poly({Y(1), Y(2)}, {2, 1}));
  auto g = word_poly({Zv(1), Y(2)}, {1, 2});
  auto want = word_poly({Zv(1), Y(2)}, {2, 1}).scaled(CycloScalar(2, -1L));
  CHECK(star_of_polynomial(g) == want);
  auto h = word_poly({Zv(1), Zv(2)}, {1, 2});
  CHECK(star_of_polynomial(h) == word_poly({Zv(1), Zv(2)}, {2, 1}));
  CHECK(star_of_polynomial(star_of_polynomial(g)) == g);
}

TEST_CASE("alternators") {
  auto f = word_poly({Y(1), Y(2)}, {1, 2});
  auto a = alternate(f, {1, 2});
  MultilinearPolynomial want({Y(1), Y(2)}, 2);
  want.add(CycloScalar(2, 1L), {1, 2});
  want.add(CycloScalar(2, -1L), {2, 1});
  CHECK(a == want);
  auto sym = f;
  sym.add(CycloScalar(2, 1L), {2, 1});
  CHECK(alternate(sym, {1, 2}).is_zero());
  auto w = word_poly({Y(1), Y(2), Y(3)}, {2, 3, 1});
  auto once = alternate(w, {1, 2, 3});
  CHECK(alternate(once, {1, 2, 3}) == once.scaled(CycloScalar(2, 6L)));
  auto mixed = word_poly({Y(1), Zv(2)}, {1, 2});
  CHECK_THROWS_AS(alternate(mixed, {1, 2}), Error);
}

TEST_CASE("alternating polynomials change sign under transpositions") {
  auto A = m2(g0, g0).algebra;
  auto f = alternate(word_poly({Y(1), Y(2), Y(3)}, {1, 2, 3}), {1, 2, 3});
  auto basis = A.component_basis({Sign::plus, g0});
  REQUIRE(basis.size() == 3);
  Vec v = evaluate(A, f, {basis[0], basis[1], basis[2]});
  CHECK_FALSE(is_zero(v));
  CHECK(evaluate(A, f, {basis[1], basis[0], basis[2]}) == scaled(v, A.scalar(-1)));
  CHECK(evaluate(A, f, {basis[0], basis[2], basis[1]}) == scaled(v, A.scalar(-1)));
}

TEST_CASE("pigeonhole: alternating on more variables than the component dimension") {
  auto A = m2(g0, g1).algebra;  // (+,0) has dimension 2
  auto f = alternate(word_poly({Y(1), Y(2), Y(3)}, {1, 2, 3}), {1, 2, 3});
  CHECK(is_identity(A, f).identity);
  auto g = alternate(word_poly({Y(1), Y(2)}, {1, 2}), {1, 2});
  CHECK(is_identity(A, g).identity);  // E11, E22 commute
}

TEST_CASE("identity checks") {
  auto F = field().algebra;
  auto c = commutator(Y(1), Y(2), 2);
  CHECK(is_identity(F, c).identity);
  CHECK(is_identity(F, word_poly({Zv(1)}, {1})).identity);
  auto M = m2(g0, g0).algebra;
  auto r = is_identity(M, c);
  REQUIRE_FALSE(r.identity);
  REQUIRE(r.witness.size() == 2);
  CHECK_FALSE(is_zero(evaluate(M, c, r.witness)));
  CHECK(r.value == evaluate(M, c, r.witness));
}

TEST_CASE("star maps identities to identities") {
  auto A = ut(2).algebra;
  std::mt19937 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    MultilinearPolynomial f({Y(1), Y(2), Zv(3)}, 2);
    std::vector<int> w{1, 2, 3};
    do f.add(CycloScalar(2, static_cast<long>(rng() % 5) - 2), w);
    while (std::next_permutation(w.begin(), w.end()));
    auto r = is_identity(A, f);
    CHECK(is_identity(A, star_of_polynomial(f)).identity == r.identity);
  }
}

TEST_CASE("identity space dimensions") {
  auto F = field().algebra;
  auto s = identity_space_dimension(F, {2, 0, 0, 0});
  CHECK(s.dim_identities == 1);
  CHECK(s.dim_quotient == 1);
  REQUIRE(s.kernel.size() == 1);
  CHECK(s.kernel[0].terms().size() == 2);
  auto G = group_algebra().algebra;
  auto t = identity_space_dimension(G, {1, 0, 1, 0});
  CHECK(t.dim_identities == 1);
  CHECK(t.dim_quotient == 1);
  auto M = identity_space_dimension(m2(g0, g0).algebra, {2, 0, 0, 0});
  CHECK(M.dim_identities == 0);
  CHECK(M.dim_quotient == 2);
}

TEST_CASE("identity space kernel members are identities; rank + nullity = n!") {
  std::vector<std::pair<GradedStarAlgebra, std::vector<size_t>>> cases = {
      {ut(2).algebra, {2, 1, 0, 0}},
      {m2(g0, g1).algebra, {1, 0, 1, 1}},
      {ut(3, {g0, g1, g0}).algebra, {1, 1, 1, 0}},
      {group_algebra(-1).algebra, {2, 0, 0, 1}},
  };
  for (const auto& [A, counts] : cases) {
    auto s = identity_space_dimension(A, counts);
    size_t n = 0;
    for (auto c : counts) n += c;
    size_t fact = 1;
    for (size_t i = 2; i <= n; ++i) fact *= i;
    CHECK(s.dim_identities + s.dim_quotient == fact);
    CHECK(s.kernel.size() == s.dim_identities);
    for (const auto& f : s.kernel) CHECK(is_identity(A, f).identity);
    auto o = oracle::identity_dims(A, counts);
    CHECK(o.identities == s.dim_identities);
    CHECK(o.quotient == s.dim_quotient);
  }
}

TEST_CASE("exactness") {
  auto dec = verified(ut(2));
  CHECK(is_exact(dec, commutator(Y(1), Y(2), 2)).exact);
  auto r = is_exact(dec, word_poly({Y(1)}, {1}));
  CHECK_FALSE(r.exact);
  CHECK(r.reason == "thin");
  auto M = verified(m2(g0, g1));
  CHECK(is_exact(M, word_poly({Y(1)}, {1})).exact);
}

TEST_CASE("free radical with commutator identities") {
  auto B = field().algebra;
  std::vector<MultilinearPolynomial> ids;
  for (size_t a = 0; a < 4; ++a)
    for (size_t b = 0; b < 4; ++b) {
      auto da = complete_from_index(B.group(), a), db = complete_from_index(B.group(), b);
      StarVariable x{1, da.sign == Sign::plus ? VarKind::Y : VarKind::Z, da.degree};
      StarVariable y{2, db.sign == Sign::plus ? VarKind::Y : VarKind::Z, db.degree};
      ids.push_back(commutator(x, y, B.conductor()));
    }
  auto R0 = truncated_free_radical(B, 1, 2);
  auto R = truncated_free_radical(B, 1, 2, ids);
  CHECK(R.dim() < R0.dim());
  // quotient = R0 / ideal generated by all evaluations of the identities
  std::vector<Vec> gens;
  for (const auto& f : ids) {
    std::vector<std::vector<Vec>> spans;
    for (const auto& v : f.vars()) spans.push_back(R0.component_basis(v.complete()));
    for (const auto& a : spans[0])
      for (const auto& b : spans[1]) gens.push_back(evaluate(R0, f, {a, b}));
  }
  CHECK(R.dim() == R0.dim() - ideal_closure(R0, gens).dim());
  CHECK(R.dim() == 9);
  CHECK(verify_axioms(R).empty());
}
