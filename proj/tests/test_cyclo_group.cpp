#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsa/error.hpp"
#include "gsa/group.hpp"
#include "gsa/linalg.hpp"

using namespace gsa;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  for (int m = 1; m <= 30; ++m) CHECK(cyclotomic_polynomial(m).size() == static_cast<size_t>(euler_phi(m)) + 1);
}

TEST_CASE("scalar arithmetic") {
  auto i = root_of_unity(4, 1);
  CHECK(i * i == CycloScalar(4, -1L));
  auto w = root_of_unity(3, 1);
  auto one_plus = CycloScalar(3, 1L) + w;
  CHECK(one_plus * (-w) == CycloScalar(3, 1L));
  CHECK(CycloScalar(3, 1L) / one_plus == -w);
  CHECK(one_plus + CycloScalar(3) == one_plus);
  CHECK(root_of_unity(2, 1) == CycloScalar(2, -1L));
  CHECK((root_of_unity(4, 1).pow(2) + CycloScalar(4, 1L)).is_zero());
  CHECK(root_order(root_of_unity(6, 1)) == 6);
  CHECK(CycloScalar(6, 3L, 4L).rational() == mpq_class(3, 4));
}

TEST_CASE("every power of zeta_m agrees with the reduction of x^k") {
  for (int m : {3, 4, 5, 8, 12}) {
    auto z = root_of_unity(m, 1);
    CycloScalar acc(m, 1L);
    for (int k = 0; k < 2 * m; ++k) {
      CHECK(acc == root_of_unity(m, k));
      acc *= z;
    }
    CHECK(acc == CycloScalar(m, 1L));
  }
}

TEST_CASE("conductor mixing and division errors") {
  CycloScalar a(4, 1L), b(3, 1L);
  CHECK_THROWS_AS(a + b, Error);
  try {
    (void)(a * b);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConductorMismatch);
  }
  CHECK(a.embed(12) + b.embed(12) == CycloScalar(12, 2L));
  CHECK(root_of_unity(4, 1).embed(12) == root_of_unity(12, 3));
  try {
    (void)(a / CycloScalar(4));
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("inverse is exact") {
  for (int m : {5, 7, 9}) {
    auto x = CycloScalar(m, 2L) + root_of_unity(m, 1) - root_of_unity(m, 3).pow(2);
    CHECK(x * x.inverse() == CycloScalar(m, 1L));
  }
}

TEST_CASE("subgroups and characters") {
  FiniteAbelianGroup Z4({4}), Z2({2}), Z3({3});
  auto s4 = enumerate_subgroups(Z4);
  CHECK(s4.size() == 3);
  CHECK(std::find(s4.begin(), s4.end(), Subgroup{{0}, {2}}) != s4.end());
  CHECK(enumerate_characters(Z2).size() == 2);
  CHECK(enumerate_characters(Z3).size() == 3);
  CHECK(enumerate_subgroups(Z3).size() == 2);
  FiniteAbelianGroup K({2, 2});
  CHECK(enumerate_subgroups(K).size() == 5);
  for (const auto& H : enumerate_subgroups(K)) {
    CHECK(K.order() % H.size() == 0);
    for (const auto& a : H)
      for (const auto& b : H) CHECK(std::find(H.begin(), H.end(), K.sub(a, b)) != H.end());
  }
  for (const auto& chi : enumerate_characters(K))
    for (const auto& a : K.elements())
      for (const auto& b : K.elements())
        CHECK(character_value(K, chi, K.add(a, b), 2) ==
              character_value(K, chi, a, 2) * character_value(K, chi, b, 2));
}

TEST_CASE("elements are lexicographic with identity first") {
  FiniteAbelianGroup K({2, 3});
  CHECK(K.elements().front() == GroupElement{0, 0});
  CHECK(K.elements()[1] == GroupElement{0, 1});
  CHECK(K.order() == 6);
  CHECK(K.exponent() == 6);
  for (size_t i = 0; i < K.order(); ++i) CHECK(K.index_of(K.elements()[i]) == i);
}

TEST_CASE("complete degrees") {
  FiniteAbelianGroup Z2({2});
  CHECK(complete_index(Z2, {Sign::plus, {0}}) == 0);
  CHECK(complete_index(Z2, {Sign::minus, {0}}) == 1);
  CHECK(complete_index(Z2, {Sign::plus, {1}}) == 2);
  for (size_t c = 0; c < 4; ++c) CHECK(complete_index(Z2, complete_from_index(Z2, c)) == c);
}

TEST_CASE("cocycles") {
  FiniteAbelianGroup Z2({2});
  Subgroup H{{0}, {1}};
  auto one = TwoCocycle::trivial(H, 2);
  CHECK(verify_cocycle(Z2, one).valid);
  auto mu = coboundary_reduce(Z2, one);
  REQUIRE(mu);
  for (const auto& x : *mu) CHECK(x.is_one());

  TwoCocycle z(H, 4);
  z.set({1}, {1}, CycloScalar(4, -1L));
  CHECK(verify_cocycle(Z2, z).valid);
  auto m4 = coboundary_reduce(Z2, z);
  REQUIRE(m4);
  // z(1,1) = mu(1)^2 / mu(0)
  CHECK((*m4)[1] * (*m4)[1] == CycloScalar(4, -1L));

  TwoCocycle bad(H, 2);
  bad.set({0}, {1}, CycloScalar(2, 2L));
  auto c = verify_cocycle(Z2, bad);
  CHECK_FALSE(c.valid);
  CHECK(c.witness.size() == 3);
}

TEST_CASE("chi on Z/4") {
  FiniteAbelianGroup Z4({4});
  CHECK(chi4(Z4, {0}) == 0);
  CHECK(chi4(Z4, {1}) == 0);
  CHECK(chi4(Z4, {2}) == 1);
  CHECK(chi4(Z4, {3}) == 1);
  CHECK((chi4(Z4, {1}) + chi4(Z4, {3})) % 2 == (chi4(Z4, {0}) + 1) % 2);
  CHECK_THROWS_AS(chi4(FiniteAbelianGroup({2}), {1}), Error);
}

TEST_CASE("subspace echelon and kernel") {
  const int m = 1;
  auto v = [&](std::vector<long> xs) {
    Vec out;
    for (long x : xs) out.push_back(CycloScalar(m, x));
    return out;
  };
  auto S = span_of(3, m, {v({1, 2, 3}), v({2, 4, 6}), v({0, 1, 1})});
  CHECK(S.dim() == 2);
  CHECK(S.contains(v({1, 3, 4})));
  CHECK_FALSE(S.contains(v({0, 0, 1})));
  auto K = kernel({v({1, 2, 3}), v({0, 1, 1})}, 3, m);
  REQUIRE(K.size() == 1);
  CHECK(is_zero(v({0, 0, 0})));
  // K[0] is orthogonal to both rows
  CycloScalar d1 = K[0][0] + CycloScalar(m, 2L) * K[0][1] + CycloScalar(m, 3L) * K[0][2];
  CHECK(d1.is_zero());
  CHECK(rank({v({1, 2, 3}), v({2, 4, 6})}, 3, m) == 1);
  auto c = proportional(v({2, 4, 6}), v({1, 2, 3}));
  REQUIRE(c);
  CHECK(*c == CycloScalar(m, 2L));
  CHECK_FALSE(proportional(v({2, 4, 7}), v({1, 2, 3})));
}
