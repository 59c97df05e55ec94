#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "gsa/cayley_hamilton.hpp"
#include "gsa/constructions.hpp"
#include "gsa/forms.hpp"
#include "gsa/identities.hpp"
#include "gsa/structure.hpp"
#include "gsa/witness.hpp"
#include "oracles.hpp"

using namespace gsa;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;
std::vector<int> only;  // criteria selected on the command line; empty runs all

void criterion(int n, const char* name, double limit_s, const std::function<Result()>& fn) {
  if (!only.empty() && std::find(only.begin(), only.end(), n) == only.end()) return;
  auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = fn();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.pass && secs > limit_s) {
    r.pass = false;
    r.detail = "exceeded " + std::to_string(limit_s) + " s";
  }
  if (!r.pass) ++failures;
  std::printf("criterion %2d %s  %-34s %8.2fs  %s\n", n, r.pass ? "PASS" : "FAIL", name, secs, r.detail.c_str());
  std::fflush(stdout);
}

const FiniteAbelianGroup Z2({2});
const GroupElement e0{0}, e1{1};

VerifiedDecomposition verified(const Built& b) { return certify(b.algebra, build_decomposition(b.algebra, b.frames)); }

Built m1(bool full_h, int alpha = 1) {
  Subgroup H = full_h ? Subgroup{e0, e1} : Subgroup{e0};
  return matrix_twisted(1, Z2, H, {e0}, {InvolutionChoice::transpose_family, alpha, {}});
}
Built m2_01() { return matrix_twisted(2, Z2, {e0}, {e0, e1}, {InvolutionChoice::transpose_family, 1, {}}); }
Built ut(int n) { return upper_triangular(n, Z2, std::vector<GroupElement>(n, e0)); }

std::string str(const std::vector<size_t>& v) {
  std::ostringstream o;
  o << "(";
  for (size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
  o << ")";
  return o.str();
}

std::vector<Built> classification_corpus() {
  std::vector<Built> all;
  for (int q : {2, 3, 4})
    for (auto& b : enumerate_classification(q, 2)) all.push_back(std::move(b));
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  const auto corpus = classification_corpus();

  criterion(1, "classification certification", 120, [] {
    Result r;
    size_t n = 0;
    for (int q : {2, 3, 4}) {
      for (const auto& b : enumerate_classification(q, 2)) {
        ++n;
        auto v = verify_axioms(b.algebra);
        r.require(v.empty(), b.name + ": axiom " + (v.empty() ? "" : v.front().axiom));
        r.require(jacobson_radical(b.algebra).dim() == 0, b.name + ": nonzero radical");
        auto s = is_star_graded_simple(b.algebra);
        r.require(s.kind == SimplicityVerdict::simple && s.operator_algebra_dim == b.algebra.dim() * b.algebra.dim(),
                  b.name + ": no Burnside certificate");
      }
    }
    if (r.pass) r.detail = std::to_string(n) + " algebras certified";
    return r;
  });

  criterion(2, "chi congruences", 1, [] {
    Result r;
    FiniteAbelianGroup Z4({4});
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) {
        int lhs = chi4(Z4, {x}) + chi4(Z4, {y});
        int rhs = chi4(Z4, {(x + y) % 4}) + ((x % 2 == 1 && y % 2 == 1) ? 1 : 0);
        r.require((lhs - rhs) % 2 == 0, "pair " + std::to_string(x) + "," + std::to_string(y));
      }
    if (r.pass) r.detail = "16 pairs";
    return r;
  });

  criterion(3, "Kemer witness", 60 * 6, [] {
    Result r;
    std::vector<std::pair<std::string, Built>> cases = {
        {"M1(F)", m1(false)},
        {"M1(F[Z/2]) a=+1", m1(true, 1)},
        {"M1(F[Z/2]) a=-1", m1(true, -1)},
        {"M2(F) (0,1) transpose", m2_01()},
        {"exchange(M1(F))",
         exchange_double(matrix_twisted(1, Z2, {e0}, {e0}, {InvolutionChoice::none, 1, {}}))},
        {"UT2", ut(2)},
    };
    std::string worst;
    double worst_s = 0;
    for (const auto& [name, b] : cases) {
      auto t0 = std::chrono::steady_clock::now();
      auto dec = verified(b);
      auto dims = gi_parameters(dec).dims_gi;
      for (int mu : {1, 2}) {
        auto w = kemer_witness(dec, mu);
        std::string tag = name + " mu=" + std::to_string(mu);
        r.require(w.type == dims, tag + ": type " + str(w.type) + " vs " + str(dims));
        r.require(!is_zero(w.value), tag + ": zero evaluation");
        r.require(w.alpha.has_value() && !w.alpha->is_zero(), tag + ": value not a nonzero multiple of a");
        r.require(!w.f || w.expanded_matches, tag + ": expansion disagrees with lazy evaluation");
        r.require(beta_lower_bound(b.algebra, dec, mu) == dims, tag + ": beta bound");
      }
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      r.require(s < 60, name + " took over 60 s");
      if (s >= worst_s) worst_s = s, worst = name;
    }
    if (r.pass) r.detail = "6 algebras, mu 1 and 2; slowest " + worst;
    return r;
  });

  criterion(4, "trace-form identities", 60, [] {
    Result r;
    auto tr = [] { return matrix_twisted(2, Z2, {e0}, {e0, e0}, {InvolutionChoice::transpose_family, 1, {}}); };
    std::vector<std::pair<std::string, Built>> cases = {
        {"UT2", ut(2)},
        {"M2(F)+u sym", square_zero_extension(tr(), 1, e0)},
        {"M2(F)+u skew", square_zero_extension(tr(), -1, e0)},
        {"M2(F)(0,1)+u odd", square_zero_extension(m2_01(), 1, e1)},
    };
    size_t checks = 0;
    for (const auto& [name, b] : cases) {
      auto dec = verified(b);
      auto t = trace_test_polynomial(dec);
      auto rep = check_trace_identities(dec, t.f, t.x_vars, t.alternating_classes);
      std::string ce;
      for (const auto& c : rep.counterexample) ce += c + "; ";
      r.require(rep.ok, name + ": " + ce);
      checks += rep.checks.size();
    }
    if (r.pass) r.detail = std::to_string(checks) + " identity families verified";
    return r;
  });

  criterion(5, "Cayley-Hamilton fit", 120, [] {
    Result r;
    std::vector<std::tuple<std::string, Built, int, int>> cases = {
        {"F", m1(false), 1, 1}, {"F[Z/2]", m1(true), 2, 1}, {"UT2", ut(2), 2, 2}};
    for (const auto& [name, b, t, nd] : cases) {
      auto fit = fit_cayley_hamilton(verified(b));
      r.require(fit.degree == 3 * t + 1, name + ": degree " + std::to_string(fit.degree));
      r.require(fit.nd == nd, name + ": nd " + std::to_string(fit.nd));
      r.require(fit.projection_vanishes, name + ": semisimple projection nonzero");
      r.require(fit.power_vanishes, name + ": K^nd nonzero");
    }
    if (r.pass) r.detail = "F, F[Z/2], UT2";
    return r;
  });

  criterion(6, "Phi functor", 30, [] {
    Result r;
    size_t n = 0;
    for (const auto& b : enumerate_classification(4, 2)) {
      if (b.family != 5) continue;
      ++n;
      auto S = phi_functor(b.algebra);
      auto v = verify_super_axioms(S);
      r.require(v.empty(), b.name + ": " + (v.empty() ? "" : v.front().axiom + " " + v.front().detail));
      r.require(S.alpha == 1 || S.alpha == -1, b.name + ": alpha");
    }
    r.require(n > 0, "no family-5 algebras");
    if (r.pass) r.detail = std::to_string(n) + " family-5 algebras";
    return r;
  });

  criterion(7, "radical oracle", 10, [&corpus] {
    Result r;
    for (int n = 1; n <= 3; ++n) {
      auto b = ut(n);
      const auto& A = b.algebra;
      std::vector<Vec> strict;
      for (size_t i = 0; i < A.dim(); ++i) {
        const auto& l = A.labels()[i];
        if (l.size() == 3 && l[1] < l[2]) strict.push_back(A.basis(i));
      }
      auto J = jacobson_radical(A);
      r.require(J == span_of(A.dim(), A.conductor(), strict), "UT" + std::to_string(n) + ": radical");
      r.require(nilpotency_degree(A, J) == n, "UT" + std::to_string(n) + ": nd");
    }
    for (const auto& b : corpus) r.require(jacobson_radical(b.algebra).dim() == 0, b.name);
    if (r.pass) r.detail = "UT1..UT3 and " + std::to_string(corpus.size()) + " classification algebras";
    return r;
  });

  criterion(8, "identity-space dimensions", 120, [&corpus] {
    Result r;
    auto check = [&r](const GradedStarAlgebra& A, const std::vector<size_t>& counts, size_t id, size_t quo,
                      const std::string& tag) {
      auto s = identity_space_dimension(A, counts);
      r.require(s.dim_identities == id && s.dim_quotient == quo,
                tag + ": got (" + std::to_string(s.dim_identities) + "," + std::to_string(s.dim_quotient) + ")");
    };
    check(m1(false).algebra, {2, 0, 0, 0}, 1, 1, "F");
    check(matrix_twisted(2, Z2, {e0}, {e0, e0}, {InvolutionChoice::transpose_family, 1, {}}).algebra, {2, 0, 0, 0}, 0, 2,
          "M2(F)");
    std::vector<GradedStarAlgebra> pool;
    for (const auto& b : corpus)
      if (b.algebra.dim() <= 6) pool.push_back(b.algebra);
    pool.push_back(ut(2).algebra);
    pool.push_back(ut(3).algebra);
    pool.push_back(upper_triangular(2, Z2, {e0, e1}).algebra);
    std::mt19937 rng(20240611);
    std::string seen;
    for (int c = 0; c < 10; ++c) {
      const auto& A = pool[rng() % pool.size()];
      size_t slots = 2 * A.group().order();
      std::vector<size_t> live;
      for (size_t d = 0; d < slots; ++d)
        if (!A.component_basis(complete_from_index(A.group(), d)).empty()) live.push_back(d);
      std::vector<size_t> counts(slots, 0);
      size_t n = 2 + rng() % 3;
      for (size_t v = 0; v < n; ++v) ++counts[live[rng() % live.size()]];
      auto want = oracle::identity_dims(A, counts);
      check(A, counts, want.identities, want.quotient, "random case " + std::to_string(c) + " " + str(counts));
      seen += " " + std::to_string(want.identities) + "/" + std::to_string(want.quotient);
    }
    if (r.pass) r.detail = "2 fixed + 10 random (id/quotient:" + seen + ")";
    return r;
  });

  criterion(9, "exchange-double symmetry", 5, [] {
    Result r;
    auto b = exchange_double(matrix_twisted(1, Z2, {e0, e1}, {e0}, {InvolutionChoice::none, 1, {}}));
    const auto& A = b.algebra;
    size_t units = 0;
    for (const auto& f : b.frames)
      for (const auto& u : f.units) {
        r.require(u.second.has_value(), "frame is not exchange type");
        if (!u.second) continue;
        ++units;
        Vec e = u.first + *u.second, et = u.first - *u.second;
        r.require(A.star(e) == e, "e not symmetric");
        r.require(A.star(et) == scaled(et, A.scalar(-1)), "e~ not skew");
      }
    auto dims = gi_parameters(verified(b)).dims_gi;
    r.require(dims == std::vector<size_t>{1, 1, 1, 1}, "dims_gi " + str(dims));
    r.require(units == 2, "expected two units");
    if (r.pass) r.detail = "dims_gi (1,1,1,1)";
    return r;
  });

  criterion(10, "truncated free radical", 30, [&corpus] {
    Result r;
    auto B = m1(false).algebra;
    size_t want = oracle::free_radical_words(1, 2, 1, 2);
    size_t got = truncated_free_radical(B, 1, 2).dim();
    r.require(got == want, "dim " + std::to_string(got) + " vs oracle " + std::to_string(want));
    for (const auto& b : corpus) r.require(truncated_free_radical(b.algebra, 1, 1) == b.algebra, b.name + ": s=1");
    if (r.pass) r.detail = "dim " + std::to_string(got) + "; s=1 on " + std::to_string(corpus.size()) + " algebras";
    return r;
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
