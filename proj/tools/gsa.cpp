#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gsa/cayley_hamilton.hpp"
#include "gsa/constructions.hpp"
#include "gsa/error.hpp"
#include "gsa/forms.hpp"
#include "gsa/identities.hpp"
#include "gsa/io.hpp"
#include "gsa/structure.hpp"
#include "gsa/witness.hpp"

using namespace gsa;

namespace {

struct Outcome {
  std::string status = "ok";
  json payload = json::object();
};

struct Options {
  long long max_evals = 10'000'000;
  uint64_t seed = 1;
  std::string output;
  std::string expect;
  std::vector<std::string> files;
  // construct
  std::string family, group = "2", subgroup, tuple, cocycle, involution = "transpose", shift;
  int k = 1, alpha = 1, sign = 1;
  // classify / freerad / witness / iddim
  int q = 2, kmax = 1, s = 1, mu = 1;
  std::string identities, multidegree, emit_algebra, emit_decomposition, emit_dir;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

int to_int(const std::string& s) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "not an integer: " + s);
  }
}

// "0,1" for rank-one groups; otherwise elements separated by ';' with ',' inside.
std::vector<GroupElement> parse_elements(const std::string& s, const FiniteAbelianGroup& G) {
  std::vector<GroupElement> out;
  if (G.rank() == 1) {
    for (const auto& x : split(s, s.find(';') != std::string::npos ? ';' : ',')) out.push_back(G.reduce({to_int(x)}));
    return out;
  }
  for (const auto& e : split(s, ';')) {
    GroupElement g;
    for (const auto& x : split(e, ',')) g.push_back(to_int(x));
    if (g.size() != G.rank()) throw Error(ErrorCode::ParseError, "element rank mismatch: " + e);
    out.push_back(G.reduce(g));
  }
  return out;
}

FiniteAbelianGroup parse_group(const std::string& s) {
  std::vector<int> orders;
  for (const auto& x : split(s, ',')) orders.push_back(to_int(x));
  if (orders.empty()) throw Error(ErrorCode::ParseError, "empty group");
  return FiniteAbelianGroup(orders);
}

// Y0=2,Z1=1 ; higher rank degrees use '.' between coordinates: Y0.1=2
std::vector<size_t> parse_multidegree(const std::string& s, const FiniteAbelianGroup& G) {
  std::vector<size_t> counts(2 * G.order(), 0);
  for (const auto& tok : split(s, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || tok.size() < 3 || (tok[0] != 'Y' && tok[0] != 'Z'))
      throw Error(ErrorCode::ParseError, "multidegree entry " + tok);
    GroupElement g;
    for (const auto& x : split(tok.substr(1, eq - 1), '.')) g.push_back(to_int(x));
    if (g.size() != G.rank()) throw Error(ErrorCode::ParseError, "multidegree rank: " + tok);
    int c = to_int(tok.substr(eq + 1));
    if (c < 0) throw Error(ErrorCode::ParseError, "negative count: " + tok);
    counts[complete_index(G, {tok[0] == 'Y' ? Sign::plus : Sign::minus, G.reduce(g)})] += c;
  }
  return counts;
}

json violations_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back({{"axiom", v.axiom}, {"witness", v.witness}, {"detail", v.detail}});
  return out;
}

json subspace_json(const Subspace& S) {
  json rows = json::array();
  for (const auto& r : S.rows()) rows.push_back(vec_to_json(r));
  return rows;
}

GradedStarAlgebra load_algebra(const std::string& path) { return algebra_from_json(load_json(path)); }

VerifiedDecomposition load_verified(const GradedStarAlgebra& A, const std::string& path, uint64_t seed, Outcome& o) {
  auto d = decomposition_from_json(load_json(path), A);
  auto rep = verify_decomposition(A, d, seed);
  if (!rep.ok()) {
    o.payload["decomposition_violations"] = violations_json(rep.violations);
    throw Error(ErrorCode::DecompositionMismatch, rep.violations.front().axiom + ": " + rep.violations.front().detail);
  }
  if (!rep.warnings.empty()) o.payload["decomposition_warnings"] = rep.warnings;
  return *rep.verified;
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << j.dump(2) << "\n";
}

json params_json(const GiParameters& g) {
  return {{"dims_gi", g.dims_gi}, {"nd", g.nd}, {"dimJ", g.dimJ}};
}

Built construct(const Options& o) {
  FiniteAbelianGroup G = parse_group(o.group);
  Subgroup H = o.subgroup.empty() ? Subgroup{G.identity()} : parse_elements(o.subgroup, G);
  std::sort(H.begin(), H.end());
  std::vector<GroupElement> tuple = o.tuple.empty() ? std::vector<GroupElement>(o.k, G.identity())
                                                    : parse_elements(o.tuple, G);
  auto matrix = [&](InvolutionChoice inv) {
    if (!o.cocycle.empty()) {
      TwoCocycle z = cocycle_from_json(load_json(o.cocycle), G, G.exponent());
      return matrix_twisted(o.k, G, H, z, tuple, inv);
    }
    return matrix_twisted(o.k, G, H, tuple, inv);
  };
  auto involution = [&]() -> InvolutionChoice {
    if (o.involution == "transpose") return {InvolutionChoice::transpose_family, o.alpha, {}};
    if (o.involution == "symplectic") return {InvolutionChoice::symplectic_family, o.alpha, {}};
    if (o.involution == "reflection") return {InvolutionChoice::elementary, 1, reflection_spec(o.k, G, H, tuple)};
    if (o.involution == "none") return {InvolutionChoice::none, 1, {}};
    throw Error(ErrorCode::ParseError, "involution must be transpose, symplectic, reflection or none");
  };
  if (o.family == "matrix") return matrix(involution());
  if (o.family == "exchange") return exchange_double(matrix({InvolutionChoice::none, 1, {}}));
  if (o.family == "ut") return upper_triangular(o.k, G, tuple);
  if (o.family == "group-extension") {
    FiniteAbelianGroup trivial({1});
    auto B = matrix_twisted(o.k, trivial, {trivial.identity()}, std::vector<GroupElement>(o.k, trivial.identity()),
                            {InvolutionChoice::transpose_family, 1, {}});
    return group_algebra_extension(B, G);
  }
  if (o.family == "square-zero") {
    GroupElement shift = o.shift.empty() ? G.identity() : parse_elements(o.shift, G).at(0);
    return square_zero_extension(matrix(involution()), o.sign, shift);
  }
  throw Error(ErrorCode::ParseError, "unknown family " + o.family);
}

Outcome run(const std::string& cmd, const Options& o) {
  Outcome out;
  auto& P = out.payload;
  auto need = [&](size_t n) {
    if (o.files.size() < n) throw Error(ErrorCode::ParseError, cmd + " needs " + std::to_string(n) + " file argument(s)");
  };
  if (cmd == "verify") {
    need(1);
    auto A = load_algebra(o.files[0]);
    auto v = verify_axioms(A);
    P["dim"] = A.dim();
    P["violations"] = violations_json(v);
    out.status = v.empty() ? "ok" : "violation";
  } else if (cmd == "radical") {
    need(1);
    auto A = load_algebra(o.files[0]);
    auto J = jacobson_radical(A);
    P["dim"] = J.dim();
    P["nd"] = nilpotency_degree(A, J);
    P["basis"] = subspace_json(J);
  } else if (cmd == "simple") {
    need(1);
    auto A = load_algebra(o.files[0]);
    auto v = is_star_graded_simple(A, o.seed);
    P["verdict"] = verdict_name(v.kind);
    P["operator_algebra_dim"] = v.operator_algebra_dim;
    P["dim_squared"] = A.dim() * A.dim();
    if (v.kind == SimplicityVerdict::not_simple) P["witness_subspace"] = subspace_json(v.witness);
    out.status = v.kind == SimplicityVerdict::simple ? "ok"
                 : v.kind == SimplicityVerdict::not_simple ? "violation"
                                                           : "inconclusive";
  } else if (cmd == "decomp-verify") {
    need(2);
    auto A = load_algebra(o.files[0]);
    auto d = decomposition_from_json(load_json(o.files[1]), A);
    auto rep = verify_decomposition(A, d, o.seed);
    P["violations"] = violations_json(rep.violations);
    P["warnings"] = rep.warnings;
    if (rep.verified) {
      P["p"] = rep.verified->p;
      P["params"] = params_json(gi_parameters(*rep.verified));
      P["burnside_dims"] = rep.verified->burnside_dims;
    }
    out.status = rep.ok() ? "ok" : "violation";
  } else if (cmd == "params") {
    need(2);
    auto A = load_algebra(o.files[0]);
    auto dec = load_verified(A, o.files[1], o.seed, out);
    auto g = gi_parameters(dec);
    P["dims_gi"] = g.dims_gi;
    P["par_gi"] = {{"dims_gi", g.dims_gi}, {"nd", g.nd}};
    P["cpar_gi"] = {{"dims_gi", g.dims_gi}, {"nd", g.nd}, {"dimJ", g.dimJ}};
    json order = json::array();
    for (size_t c = 0; c < g.dims_gi.size(); ++c) order.push_back(complete_to_string(complete_from_index(A.group(), c)));
    P["tuple_order"] = order;
  } else if (cmd == "construct") {
    auto b = construct(o);
    P["name"] = b.name;
    P["dim"] = b.algebra.dim();
    P["algebra"] = algebra_to_json(b.algebra);
    if (!b.frames.empty()) P["decomposition"] = decomposition_to_json(b.algebra, build_decomposition(b.algebra, b.frames));
    if (!o.emit_algebra.empty()) write_file(o.emit_algebra, P["algebra"]);
    if (!o.emit_decomposition.empty() && P.contains("decomposition")) write_file(o.emit_decomposition, P["decomposition"]);
  } else if (cmd == "phi") {
    need(1);
    auto A = load_algebra(o.files[0]);
    auto S = phi_functor(A);
    auto v = verify_super_axioms(S);
    P["alpha"] = S.alpha;
    P["violations"] = violations_json(v);
    P["superalgebra"] = algebra_to_json(S.algebra);
    out.status = v.empty() ? "ok" : "violation";
  } else if (cmd == "classify") {
    auto list = enumerate_classification(o.q, o.kmax);
    json items = json::array();
    bool all = true;
    size_t idx = 0;
    for (const auto& b : list) {
      auto v = verify_axioms(b.algebra);
      auto J = jacobson_radical(b.algebra);
      auto s = is_star_graded_simple(b.algebra, o.seed);
      bool good = v.empty() && J.dim() == 0 && s.kind == SimplicityVerdict::simple;
      all = all && good;
      items.push_back({{"family", b.family},
                       {"name", b.name},
                       {"dim", b.algebra.dim()},
                       {"axioms", v.empty() ? "ok" : v.front().axiom},
                       {"radical_dim", J.dim()},
                       {"simplicity", verdict_name(s.kind)},
                       {"operator_algebra_dim", s.operator_algebra_dim}});
      if (!o.emit_dir.empty()) {
        json aj = algebra_to_json(b.algebra);
        aj["family"] = b.family;
        aj["name"] = b.name;
        write_file(o.emit_dir + "/algebra_" + std::to_string(++idx) + ".json", aj);
      }
    }
    P["q"] = o.q;
    P["kmax"] = o.kmax;
    P["count"] = list.size();
    P["algebras"] = items;
    out.status = all ? "ok" : "violation";
  } else if (cmd == "check-id") {
    need(2);
    auto A = load_algebra(o.files[0]);
    auto f = polynomial_from_json(load_json(o.files[1]), A.group(), A.conductor());
    auto r = is_identity(A, f);
    P["identity"] = r.identity;
    P["evaluations"] = r.evaluations;
    if (!r.identity) {
      json w = json::array();
      for (const auto& v : r.witness) w.push_back(vec_to_json(v));
      P["witness"] = w;
      P["value"] = vec_to_json(r.value);
    }
    out.status = r.identity ? "ok" : "violation";
  } else if (cmd == "iddim") {
    need(1);
    auto A = load_algebra(o.files[0]);
    auto counts = parse_multidegree(o.multidegree, A.group());
    auto r = identity_space_dimension(A, counts);
    P["multidegree"] = counts;
    P["dim_identities"] = r.dim_identities;
    P["dim_quotient"] = r.dim_quotient;
    json ker = json::array();
    for (const auto& f : r.kernel) ker.push_back(polynomial_to_json(f));
    P["identities"] = ker;
  } else if (cmd == "exact") {
    need(3);
    auto A = load_algebra(o.files[0]);
    auto dec = load_verified(A, o.files[1], o.seed, out);
    auto f = polynomial_from_json(load_json(o.files[2]), A.group(), A.conductor());
    auto r = is_exact(dec, f);
    P["exact"] = r.exact;
    P["evaluations"] = r.evaluations;
    if (!r.exact) {
      P["reason"] = r.reason;
      P["witness"] = r.witness;
    }
    out.status = r.exact ? "ok" : "violation";
  } else if (cmd == "forms-check") {
    need(2);
    auto A = load_algebra(o.files[0]);
    auto dec = load_verified(A, o.files[1], o.seed, out);
    TraceTestPolynomial t;
    if (o.files.size() >= 3) {
      json pj = load_json(o.files[2]);
      t.f = polynomial_from_json(pj, A.group(), A.conductor());
      if (!pj.contains("alternating")) throw Error(ErrorCode::ParseError, "polynomial needs an \"alternating\" id list");
      t.x_vars = pj.at("alternating").get<std::vector<int>>();
      if (pj.contains("classes")) t.alternating_classes = pj.at("classes").get<std::vector<std::vector<int>>>();
    } else {
      t = trace_test_polynomial(dec);
    }
    auto rep = check_trace_identities(dec, t.f, t.x_vars, t.alternating_classes);
    P["checks"] = rep.checks;
    P["evaluations"] = rep.evaluations;
    P["polynomial_terms"] = t.f.terms().size();
    if (!rep.ok) P["counterexample"] = rep.counterexample;
    out.status = rep.ok ? "ok" : "violation";
  } else if (cmd == "ch-fit") {
    need(2);
    auto A = load_algebra(o.files[0]);
    auto dec = load_verified(A, o.files[1], o.seed, out);
    try {
      auto fit = fit_cayley_hamilton(dec);
      P["degree"] = fit.degree;
      P["nd"] = fit.nd;
      P["generic_dim"] = fit.generic_dim;
      P["shape_terms"] = fit.terms.size();
      P["equations"] = fit.equations;
      json nz = json::array();
      for (const auto& t : fit.terms)
        if (!t.alpha.is_zero()) nz.push_back({{"term", t.to_string()}, {"alpha", scalar_to_json(t.alpha)}});
      P["coefficients"] = nz;
      P["certificate"] = {{"projection_vanishes", fit.projection_vanishes}, {"power_vanishes", fit.power_vanishes}};
      out.status = fit.projection_vanishes && fit.power_vanishes ? "ok" : "violation";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoSolution) throw;
      P["refutation"] = e.what();
      out.status = "violation";
    }
  } else if (cmd == "witness") {
    need(2);
    auto A = load_algebra(o.files[0]);
    auto dec = load_verified(A, o.files[1], o.seed, out);
    auto w = kemer_witness(dec, o.mu);
    auto dims = gi_parameters(dec).dims_gi;
    P["mu"] = w.mu;
    P["type"] = w.type;
    P["dims_gi"] = dims;
    P["sigma"] = w.sigma;
    P["hat_variables"] = w.hats;
    P["value"] = vec_to_json(w.value);
    P["a"] = vec_to_json(w.a);
    P["alpha"] = w.alpha ? json(scalar_to_json(*w.alpha)) : json(nullptr);
    P["evaluations"] = w.evaluations;
    if (w.f) {
      P["polynomial"] = polynomial_to_json(*w.f);
      P["expanded_matches"] = w.expanded_matches;
    }
    bool good = w.type == dims && !is_zero(w.value) && (!w.f || w.expanded_matches);
    if (good) P["beta_lower_bound"] = dims;
    out.status = good ? "ok" : "violation";
  } else if (cmd == "freerad") {
    need(1);
    auto B = load_algebra(o.files[0]);
    std::vector<MultilinearPolynomial> ids;
    if (!o.identities.empty()) {
      json pj = load_json(o.identities);
      if (pj.contains("polynomials"))
        for (const auto& x : pj.at("polynomials")) ids.push_back(polynomial_from_json(x, B.group(), B.conductor()));
      else
        ids.push_back(polynomial_from_json(pj, B.group(), B.conductor()));
    }
    auto R = truncated_free_radical(B, o.q, o.s, ids);
    P["q"] = o.q;
    P["s"] = o.s;
    P["words"] = free_radical_word_count(B.dim(), B.group().order(), o.q, o.s);
    P["dim"] = R.dim();
    if (!o.emit_algebra.empty()) write_file(o.emit_algebra, algebra_to_json(R));
  } else {
    throw Error(ErrorCode::ParseError, "unknown command " + cmd);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded star-algebra toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-evals", o.max_evals, "scalar multiplication budget")->capture_default_str();
  app.add_option("--seed", o.seed, "seed for random spinning vectors");
  app.add_option("--output", o.output, "write the JSON report here");
  app.add_option("--expect", o.expect, "exit 1 unless the status is ok")->check(CLI::IsMember({"ok"}));

  auto files = [&](CLI::App* s, const std::string& desc) { s->add_option("files", o.files, desc)->required(); };
  auto* verify = app.add_subcommand("verify", "check the algebra axioms");
  files(verify, "algebra.json");
  files(app.add_subcommand("radical", "Jacobson radical"), "algebra.json");
  files(app.add_subcommand("simple", "star-graded simplicity certificate"), "algebra.json");
  files(app.add_subcommand("decomp-verify", "verify an elementary decomposition"), "algebra.json decomposition.json");
  files(app.add_subcommand("params", "dims_gi, par_gi, cpar_gi"), "algebra.json decomposition.json");
  files(app.add_subcommand("phi", "superalgebra from a Z/4 family-5 algebra"), "algebra.json");
  auto* cons = app.add_subcommand("construct", "build an algebra");
  cons->add_option("family", o.family, "matrix | exchange | ut | group-extension | square-zero")->required();
  cons->add_option("--group", o.group, "cyclic orders, e.g. 2 or 2,2");
  cons->add_option("--k", o.k, "matrix size");
  cons->add_option("--subgroup", o.subgroup, "elements of H");
  cons->add_option("--tuple", o.tuple, "grading tuple");
  cons->add_option("--cocycle", o.cocycle, "cocycle JSON file");
  cons->add_option("--involution", o.involution, "transpose | symplectic | reflection | none");
  cons->add_option("--alpha", o.alpha, "+1 or -1");
  cons->add_option("--sign", o.sign, "u* = sign u for square-zero");
  cons->add_option("--shift", o.shift, "degree of u for square-zero");
  cons->add_option("--emit-algebra", o.emit_algebra, "write the algebra JSON");
  cons->add_option("--emit-decomposition", o.emit_decomposition, "write the decomposition JSON");
  auto* cls = app.add_subcommand("classify", "enumerate and certify the simple families");
  cls->add_option("--q", o.q, "group order")->required();
  cls->add_option("--kmax", o.kmax, "largest matrix size")->required();
  cls->add_option("--emit-dir", o.emit_dir, "write every algebra into this directory");
  files(app.add_subcommand("check-id", "is the polynomial an identity"), "algebra.json poly.json");
  auto* idd = app.add_subcommand("iddim", "identity space dimension");
  files(idd, "algebra.json");
  idd->add_option("--multidegree", o.multidegree, "e.g. Y0=2,Z1=1")->required();
  files(app.add_subcommand("exact", "exactness of a polynomial"), "algebra.json decomposition.json poly.json");
  files(app.add_subcommand("forms-check", "trace-form identities"), "algebra.json decomposition.json [poly.json]");
  files(app.add_subcommand("ch-fit", "Cayley-Hamilton type identity"), "algebra.json decomposition.json");
  auto* wit = app.add_subcommand("witness", "Kemer witness polynomial");
  files(wit, "algebra.json decomposition.json");
  wit->add_option("--mu", o.mu, "number of alternating copies")->required();
  auto* fr = app.add_subcommand("freerad", "truncated free-radical algebra");
  files(fr, "algebra.json");
  fr->add_option("--q", o.q, "variables per degree")->required();
  fr->add_option("--s", o.s, "truncation")->required();
  fr->add_option("--identities", o.identities, "polynomial JSON");
  fr->add_option("--emit-algebra", o.emit_algebra, "write the algebra JSON");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  json report;
  report["format"] = 1;
  report["command"] = std::vector<std::string>(argv + 1, argv + argc);
  int rc = 0;
  auto t0 = std::chrono::steady_clock::now();
  long long used = 0;
  try {
    default_budget_cap() = o.max_evals;
    BudgetScope scope(o.max_evals);
    Outcome r = run(cmd, o);
    report["status"] = r.status;
    report["payload"] = r.payload;
    if (o.expect == "ok" && r.status != "ok") rc = 1;
  } catch (const Error& e) {
    report["status"] = "error";
    report["payload"] = {{"error", error_name(e.code())}, {"message", e.what()}};
    rc = e.code() == ErrorCode::ResourceCap ? 2 : e.code() == ErrorCode::ParseError ? 3 : 1;
  } catch (const std::exception& e) {
    report["status"] = "error";
    report["payload"] = {{"error", "internal"}, {"message", e.what()}};
    rc = 1;
  }
  used = budget_used();
  report["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  report["counters"] = {{"scalar_multiplications", used}, {"max_evals", o.max_evals}};
  if (o.output.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream out(o.output);
    out << report.dump(2) << "\n";
  }
  return rc;
}
