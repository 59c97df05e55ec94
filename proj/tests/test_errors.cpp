#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "gsa/error.hpp"
#include "gsa/io.hpp"
#include "gsa/structure.hpp"
#include "gsa/witness.hpp"

using namespace fx;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(-1);
}

}  // namespace

TEST_CASE("group errors") {
  FiniteAbelianGroup big({4, 4, 5});
  CHECK(code_of([&] { enumerate_subgroups(big); }) == ErrorCode::GroupTooLarge);
  CHECK(code_of([&] { enumerate_characters(big); }) == ErrorCode::GroupTooLarge);
  auto saved = enumeration_cap();
  enumeration_cap() = 100;
  CHECK_NOTHROW(enumerate_characters(big));
  enumeration_cap() = saved;

  auto partial = json::parse(R"({"subgroup": [[0], [1]], "table": [[[0], [0], ["1"]], [[1], [1], ["-1"]]]})");
  CHECK(code_of([&] { cocycle_from_json(partial, Z2(), 2); }) == ErrorCode::IncompleteTable);
  CHECK(code_of([] { chi4(Z2(), {1}); }) == ErrorCode::WrongGroup);
}

TEST_CASE("algebra errors") {
  auto A = m2(g0, g1).algebra;
  Vec short_vec(2, A.scalar(1));
  CHECK(code_of([&] { multiply_project(A, short_vec, A.basis(0)); }) == ErrorCode::DimensionMismatch);
  auto U = ut(2).algebra;
  Subspace everything = span_of(U.dim(), U.conductor(), {U.basis(0), U.basis(1), U.basis(2)});
  CHECK(code_of([&] { nilpotency_degree(U, everything); }) == ErrorCode::NotNilpotent);
}

TEST_CASE("construction errors") {
  Subgroup H{g0, g1};
  TwoCocycle bad(H, 2);
  for (const auto& a : H)
    for (const auto& b : H) bad.set(a, b, CycloScalar(2, 1L));
  bad.set(g0, g1, CycloScalar(2, 2L));
  CHECK(code_of([&] { matrix_twisted(1, Z2(), H, bad, {g0}, no_star()); }) == ErrorCode::InvalidCocycle);

  // an "involution" that is not of order two
  ElementaryInvolutionSpec spec;
  spec[{1, 1, g0}] = {1, 1, 2, g0};
  spec[{1, 2, g0}] = {1, 2, 2, g0};
  spec[{2, 1, g0}] = {1, 1, 1, g0};
  spec[{2, 2, g0}] = {1, 1, 2, g0};
  CHECK(code_of([&] { matrix_twisted(2, Z2(), {g0}, {g0, g0}, {InvolutionChoice::elementary, 1, spec}); }) ==
        ErrorCode::InvalidSpec);

  FiniteAbelianGroup Z3({3});
  auto other = matrix_twisted(1, Z3, {{0}}, {{0}}, transpose());
  CHECK(code_of([&] { direct_product({field(), other}); }) == ErrorCode::GroupMismatch);
  CHECK(code_of([&] { group_algebra_extension(m2(g0, g1), Z2()); }) == ErrorCode::GroupMismatch);

  FiniteAbelianGroup Z4({4});
  auto c4 = matrix_twisted(1, Z4, {{0}}, {{0}}, transpose());
  CHECK(code_of([&] { phi_functor(c4.algebra); }) == ErrorCode::NoCentralUnit);
  CHECK(code_of([] { enumerate_classification(6, 1); }) == ErrorCode::UnsupportedOrder);
}

TEST_CASE("witness errors") {
  auto two = verified(direct_product({field(), field()}));
  CHECK(code_of([&] { kemer_witness(two, 1); }) == ErrorCode::NoReducedWitness);
}

TEST_CASE("budget") {
  {
    BudgetScope scope(50);
    CHECK(code_of([] { jacobson_radical(m2(g0, g1).algebra); }) == ErrorCode::ResourceCap);
  }
  CHECK_NOTHROW(jacobson_radical(m2(g0, g1).algebra));
}
