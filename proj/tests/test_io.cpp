#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "gsa/error.hpp"
#include "gsa/io.hpp"
#include "gsa/structure.hpp"

using namespace fx;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidSpec;
}

}  // namespace

TEST_CASE("scalars round-trip") {
  for (int m : {1, 4, 6, 12}) {
    auto x = CycloScalar(m, 3L, 7L) + root_of_unity(m, 1) * CycloScalar(m, -2L);
    CHECK(scalar_from_json(scalar_to_json(x), m) == x);
  }
  CHECK(code_of([] { scalar_from_json(json("1/0"), 2); }) == ErrorCode::ParseError);
  CHECK(code_of([] { scalar_from_json(json::array({"1", "x"}), 4); }) == ErrorCode::ParseError);
}

TEST_CASE("every classification algebra round-trips") {
  for (int q : {2, 3, 4})
    for (const auto& b : enumerate_classification(q, 2)) {
      auto j = algebra_to_json(b.algebra);
      auto back = algebra_from_json(json::parse(j.dump()));
      CHECK(back == b.algebra);
    }
  auto u = ut(3, {g0, g1, g0}).algebra;
  CHECK(algebra_from_json(algebra_to_json(u)) == u);
}

TEST_CASE("malformed algebra documents") {
  auto j = algebra_to_json(m2(g0, g1).algebra);
  auto no_star = j;
  no_star["star"].erase(0);
  CHECK(code_of([&] { algebra_from_json(no_star); }) == ErrorCode::IncompleteTable);
  auto bad_index = j;
  bad_index["mult"][0][0] = 99;
  CHECK(code_of([&] { algebra_from_json(bad_index); }) == ErrorCode::ParseError);
  auto bad_format = j;
  bad_format["format"] = 2;
  CHECK(code_of([&] { algebra_from_json(bad_format); }) == ErrorCode::ParseError);
  CHECK(code_of([] { algebra_from_json(json::parse("{\"group\": 3}")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { load_json("/nonexistent/file.json"); }) == ErrorCode::ParseError);
}

TEST_CASE("decompositions round-trip and still verify") {
  for (const auto& b : {ut(2), m2(g0, g1), exchange_field(), square_zero_extension(m2(g0, g0), 1, g1)}) {
    auto d = build_decomposition(b.algebra, b.frames);
    auto j = decomposition_to_json(b.algebra, d);
    auto back = decomposition_from_json(json::parse(j.dump()), b.algebra);
    auto rep = verify_decomposition(b.algebra, back);
    CHECK(rep.ok());
    REQUIRE(rep.verified);
    CHECK(gi_parameters(*rep.verified) == gi_parameters(certify(b.algebra, d)));
    CHECK(back.components.size() == d.components.size());
    CHECK(back.U.size() == d.U.size());
  }
}

TEST_CASE("U vectors are recomputed from r when absent") {
  auto b = ut(2);
  auto d = build_decomposition(b.algebra, b.frames);
  auto j = decomposition_to_json(b.algebra, d);
  REQUIRE(j.contains("radical_U"));
  for (auto& u : j["radical_U"]) u.erase("vector");
  CHECK_FALSE(j["radical_U"][0].contains("vector"));
  auto back = decomposition_from_json(j, b.algebra);
  CHECK(back.U[0].vector == d.U[0].vector);
}

TEST_CASE("cocycles round-trip") {
  Subgroup H{g0, g1};
  TwoCocycle z(H, 4);
  z.set(g1, g1, CycloScalar(4, -1L));
  auto back = cocycle_from_json(cocycle_to_json(z), Z2(), 4);
  for (const auto& a : H)
    for (const auto& b : H) CHECK(back(a, b) == z(a, b));
}

TEST_CASE("polynomials round-trip") {
  MultilinearPolynomial f({{1, VarKind::Y, g0}, {2, VarKind::Z, g1}}, 4);
  f.add(root_of_unity(4, 1), {1, 2});
  f.add(CycloScalar(4, -3L, 2L), {2, 1});
  auto j = polynomial_to_json(f);
  CHECK(polynomial_from_json(json::parse(j.dump()), Z2(), 4) == f);

  FormPolynomial g;
  g.vars = {{1, VarKind::Y, g0}, {2, VarKind::Y, g0}};
  g.conductor = 2;
  g.terms.push_back({CycloScalar(2, 1L), {1}, {{1, {{2}}}}});
  auto gj = polynomial_to_json(g);
  auto gb = form_polynomial_from_json(gj, Z2(), 2);
  REQUIRE(gb.terms.size() == 1);
  CHECK(gb.terms[0].forms[0].f == 1);
  CHECK(code_of([&] { polynomial_from_json(gj, Z2(), 2); }) == ErrorCode::ParseError);

  auto dup = j;
  dup["terms"][0]["word"] = json::array({1, 1});
  CHECK_THROWS_AS(polynomial_from_json(dup, Z2(), 4), Error);
}
