#include "gsa/io.hpp"

#include <fstream>
#include <set>

#include "gsa/error.hpp"

namespace gsa {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

size_t index_from(const json& j, size_t n, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  long long v = j.get<long long>();
  if (v < 0 || static_cast<size_t>(v) >= n) bad(std::string(what) + " out of range");
  return static_cast<size_t>(v);
}

Sign sign_from(const json& j) {
  if (j == "+" || j == "plus" || j == 1) return Sign::plus;
  if (j == "-" || j == "minus" || j == -1) return Sign::minus;
  bad("sign must be \"+\" or \"-\"");
}

TermList terms_from(const json& j, size_t n, int m) {
  if (!j.is_array()) bad("term list must be an array");
  TermList t;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) bad("term must be [index, scalar]");
    t.push_back({index_from(e[0], n, "term index"), scalar_from_json(e[1], m)});
  }
  return t;
}

}  // namespace

json scalar_to_json(const CycloScalar& x) { return scalar_to_strings(x); }

CycloScalar scalar_from_json(const json& j, int conductor) {
  try {
    if (j.is_number_integer()) return CycloScalar(conductor, j.get<long>());
    if (j.is_string()) return scalar_from_strings(conductor, {j.get<std::string>()});
    if (!j.is_array()) bad("scalar must be a list of \"p/q\" strings");
    std::vector<std::string> parts;
    for (const auto& s : j) {
      if (s.is_number_integer()) parts.push_back(std::to_string(s.get<long long>()));
      else if (s.is_string()) parts.push_back(s.get<std::string>());
      else bad("scalar entries must be strings");
    }
    return scalar_from_strings(conductor, parts);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    bad(e.what());
  } catch (const std::exception& e) {
    bad(std::string("scalar: ") + e.what());
  }
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back({i, scalar_to_json(v[i])});
  return out;
}

Vec vec_from_json(const json& j, size_t n, int conductor) {
  if (!j.is_array()) bad("vector must be an array");
  Vec v = zero_vec(n, conductor);
  bool sparse = !j.empty() && j[0].is_array() && j[0].size() == 2 && j[0][0].is_number_integer() &&
                (j[0][1].is_array() || j[0][1].is_string());
  if (sparse) {
    for (const auto& t : terms_from(j, n, conductor)) v[t.index] += t.coeff;
    return v;
  }
  if (j.size() != n) bad("dense vector has the wrong length");
  for (size_t i = 0; i < n; ++i) v[i] = scalar_from_json(j[i], conductor);
  return v;
}

json element_to_json(const GroupElement& g) { return g; }

GroupElement element_from_json(const json& j, const FiniteAbelianGroup& G) {
  GroupElement g;
  if (j.is_number_integer() && G.rank() == 1) g = {j.get<int>()};
  else if (j.is_array()) {
    for (const auto& x : j) {
      if (!x.is_number_integer()) bad("group element entries must be integers");
      g.push_back(x.get<int>());
    }
  } else {
    bad("group element must be an integer array");
  }
  if (g.size() != G.rank()) bad("group element has the wrong rank");
  return G.reduce(g);
}

json algebra_to_json(const GradedStarAlgebra& A) {
  json j;
  j["format"] = 1;
  j["group"] = {{"orders", A.group().orders()}};
  j["conductor"] = A.conductor();
  json basis = json::array();
  for (size_t i = 0; i < A.dim(); ++i) basis.push_back({{"label", A.labels()[i]}, {"degree", A.degree(i)}});
  j["basis"] = basis;
  json mult = json::array();
  for (size_t a = 0; a < A.dim(); ++a)
    for (size_t b = 0; b < A.dim(); ++b) {
      const auto& t = A.product(a, b);
      if (t.empty()) continue;
      json terms = json::array();
      for (const auto& x : t) terms.push_back({x.index, scalar_to_json(x.coeff)});
      mult.push_back({a, b, terms});
    }
  j["mult"] = mult;
  json star = json::array();
  for (size_t a = 0; a < A.dim(); ++a) {
    json terms = json::array();
    for (const auto& x : A.star_image(a)) terms.push_back({x.index, scalar_to_json(x.coeff)});
    star.push_back({a, terms});
  }
  j["star"] = star;
  if (A.unit()) j["unit"] = vec_to_json(*A.unit());
  return j;
}

GradedStarAlgebra algebra_from_json(const json& j) {
  try {
    if (j.contains("format") && j.at("format") != 1) bad("unsupported format version");
    const auto& g = field(j, "group");
    std::vector<int> orders;
    for (const auto& o : field(g, "orders")) {
      if (!o.is_number_integer() || o.get<int>() < 1) bad("group orders must be positive integers");
      orders.push_back(o.get<int>());
    }
    if (orders.empty()) bad("group needs at least one cyclic factor");
    FiniteAbelianGroup G(orders);
    const auto& mj = field(j, "conductor");
    if (!mj.is_number_integer() || mj.get<int>() < 1) bad("conductor must be a positive integer");
    const int m = mj.get<int>();
    std::vector<std::string> labels;
    std::vector<GroupElement> grading;
    for (const auto& b : field(j, "basis")) {
      labels.push_back(b.contains("label") ? b.at("label").get<std::string>() : "b" + std::to_string(labels.size()));
      grading.push_back(element_from_json(field(b, "degree"), G));
    }
    const size_t n = labels.size();
    GradedStarAlgebra A(G, m, labels, grading);
    for (const auto& e : field(j, "mult")) {
      if (!e.is_array() || e.size() != 3) bad("mult entry must be [i, j, terms]");
      A.set_product(index_from(e[0], n, "mult i"), index_from(e[1], n, "mult j"), terms_from(e[2], n, m));
    }
    std::vector<bool> seen(n, false);
    for (const auto& e : field(j, "star")) {
      if (!e.is_array() || e.size() != 2) bad("star entry must be [i, terms]");
      size_t i = index_from(e[0], n, "star i");
      seen[i] = true;
      A.set_star(i, terms_from(e[1], n, m));
    }
    for (size_t i = 0; i < n; ++i)
      if (!seen[i]) throw Error(ErrorCode::IncompleteTable, "star image of basis element " + std::to_string(i) + " missing");
    if (j.contains("unit") && !j.at("unit").is_null()) A.set_unit(vec_from_json(j.at("unit"), n, m));
    return A;
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

json cocycle_to_json(const TwoCocycle& z) {
  json table = json::array();
  for (const auto& a : z.subgroup())
    for (const auto& b : z.subgroup()) table.push_back({a, b, scalar_to_json(z(a, b))});
  return {{"subgroup", z.subgroup()}, {"table", table}};
}

TwoCocycle cocycle_from_json(const json& j, const FiniteAbelianGroup& G, int conductor) {
  try {
    Subgroup H;
    for (const auto& h : field(j, "subgroup")) H.push_back(element_from_json(h, G));
    std::sort(H.begin(), H.end());
    TwoCocycle z(H, conductor);
    std::set<std::pair<GroupElement, GroupElement>> seen;
    for (const auto& e : field(j, "table")) {
      if (!e.is_array() || e.size() != 3) bad("cocycle entry must be [h1, h2, scalar]");
      GroupElement a = element_from_json(e[0], G), b = element_from_json(e[1], G);
      if (!z.contains(a) || !z.contains(b)) bad("cocycle entry outside the subgroup");
      z.set(a, b, scalar_from_json(e[2], conductor));
      seen.insert({a, b});
    }
    if (seen.size() != H.size() * H.size())
      throw Error(ErrorCode::IncompleteTable, "cocycle table has " + std::to_string(seen.size()) + " of " +
                                                  std::to_string(H.size() * H.size()) + " entries");
    return z;
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

json decomposition_to_json(const GradedStarAlgebra& A, const Decomposition& d) {
  json comps = json::array();
  for (const auto& c : d.components) {
    json D = json::array();
    for (const auto& x : c.D) {
      json e = {{"index_pair", {x.i, x.j}},
                {"degree", x.degree.degree},
                {"sign", x.degree.sign == Sign::plus ? "+" : "-"},
                {"vector", vec_to_json(x.vector)}};
      if (x.xi) e["xi"] = *x.xi;
      D.push_back(e);
    }
    json cj = {{"basis_D", D}, {"epsilon", vec_to_json(c.epsilon)}};
    if (c.frame) {
      const auto& f = *c.frame;
      json units = json::array();
      for (const auto& u : f.units) {
        json uj = {{"i", u.i}, {"j", u.j}, {"xi", u.xi}, {"first", vec_to_json(u.first)}};
        if (u.second) uj["second"] = vec_to_json(*u.second);
        units.push_back(uj);
      }
      cj["frame"] = {{"type", f.type}, {"k", f.k}, {"subgroup", f.H}, {"lambda", scalar_to_json(f.lambda)},
                     {"units", units}};
    }
    comps.push_back(cj);
  }
  json U = json::array();
  for (const auto& u : d.U)
    U.push_back({{"pair", {u.l1, u.l2}},
                 {"sign", u.degree.sign == Sign::plus ? "+" : "-"},
                 {"degree", u.degree.degree},
                 {"r", vec_to_json(u.r)},
                 {"vector", vec_to_json(u.vector)}});
  json out = {{"format", 1}, {"components", comps}, {"radical_U", U}};
  if (d.nd) out["nd"] = *d.nd;
  (void)A;
  return out;
}

Decomposition decomposition_from_json(const json& j, const GradedStarAlgebra& A) {
  try {
    const auto& G = A.group();
    const size_t n = A.dim();
    const int m = A.conductor();
    Decomposition d;
    for (const auto& cj : field(j, "components")) {
      ComponentData c;
      for (const auto& x : field(cj, "basis_D")) {
        DElement e;
        const auto& ip = field(x, "index_pair");
        if (!ip.is_array() || ip.size() != 2) bad("index_pair must be [i, j]");
        e.i = ip[0].get<int>();
        e.j = ip[1].get<int>();
        e.degree = {sign_from(field(x, "sign")), element_from_json(field(x, "degree"), G)};
        e.vector = vec_from_json(field(x, "vector"), n, m);
        if (x.contains("xi")) e.xi = element_from_json(x.at("xi"), G);
        c.D.push_back(std::move(e));
      }
      c.epsilon = vec_from_json(field(cj, "epsilon"), n, m);
      if (cj.contains("frame")) {
        const auto& fj = cj.at("frame");
        ComponentFrame f;
        f.type = field(fj, "type").get<int>();
        f.k = field(fj, "k").get<int>();
        for (const auto& h : field(fj, "subgroup")) f.H.push_back(element_from_json(h, G));
        std::sort(f.H.begin(), f.H.end());
        f.lambda = scalar_from_json(field(fj, "lambda"), m);
        for (const auto& uj : field(fj, "units")) {
          FrameUnit u;
          u.i = field(uj, "i").get<int>();
          u.j = field(uj, "j").get<int>();
          u.xi = element_from_json(field(uj, "xi"), G);
          u.first = vec_from_json(field(uj, "first"), n, m);
          if (uj.contains("second")) u.second = vec_from_json(uj.at("second"), n, m);
          f.units.push_back(std::move(u));
        }
        c.frame = std::move(f);
      }
      d.components.push_back(std::move(c));
    }
    for (const auto& uj : field(j, "radical_U")) {
      UElement u;
      const auto& pr = field(uj, "pair");
      if (!pr.is_array() || pr.size() != 2) bad("pair must be [l1, l2]");
      u.l1 = pr[0].get<size_t>();
      u.l2 = pr[1].get<size_t>();
      if (u.l1 < 1 || u.l2 < 1 || u.l1 > d.components.size() + 1 || u.l2 > d.components.size() + 1)
        bad("U pair out of range");
      u.degree = {sign_from(field(uj, "sign")), element_from_json(field(uj, "degree"), G)};
      u.r = vec_from_json(field(uj, "r"), n, m);
      u.vector = uj.contains("vector") ? vec_from_json(uj.at("vector"), n, m)
                                       : u_from_r(A, d, u.l1, u.l2, u.degree.sign, u.r);
      d.U.push_back(std::move(u));
    }
    if (j.contains("nd")) d.nd = j.at("nd").get<int>();
    return d;
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

namespace {

json var_json(const StarVariable& v) {
  return {{"id", v.id}, {"kind", v.kind == VarKind::Y ? "Y" : "Z"}, {"degree", v.degree}};
}

std::vector<StarVariable> vars_from(const json& j, const FiniteAbelianGroup& G) {
  std::vector<StarVariable> vars;
  for (const auto& v : field(j, "vars")) {
    StarVariable s;
    s.id = field(v, "id").get<int>();
    const auto& k = field(v, "kind");
    if (k == "Y") s.kind = VarKind::Y;
    else if (k == "Z") s.kind = VarKind::Z;
    else bad("variable kind must be \"Y\" or \"Z\"");
    s.degree = element_from_json(field(v, "degree"), G);
    vars.push_back(s);
  }
  return vars;
}

}  // namespace

json polynomial_to_json(const MultilinearPolynomial& f) {
  json vars = json::array(), terms = json::array();
  for (const auto& v : f.vars()) vars.push_back(var_json(v));
  for (const auto& t : f.terms()) terms.push_back({{"coef", scalar_to_json(t.coef)}, {"word", t.word}});
  return {{"format", 1}, {"conductor", f.conductor()}, {"vars", vars}, {"terms", terms}};
}

json polynomial_to_json(const FormPolynomial& f) {
  json vars = json::array(), terms = json::array();
  for (const auto& v : f.vars) vars.push_back(var_json(v));
  for (const auto& t : f.terms) {
    json forms = json::array();
    for (const auto& ff : t.forms) forms.push_back({{"f", ff.f == 1 ? "f1" : "f2"}, {"args", ff.args}});
    json tj = {{"coef", scalar_to_json(t.coef)}, {"word", t.word}};
    if (!forms.empty()) tj["forms"] = forms;
    terms.push_back(tj);
  }
  return {{"format", 1}, {"conductor", f.conductor}, {"vars", vars}, {"terms", terms}};
}

FormPolynomial form_polynomial_from_json(const json& j, const FiniteAbelianGroup& G, int conductor) {
  try {
    FormPolynomial f;
    f.conductor = conductor;
    f.vars = vars_from(j, G);
    for (const auto& tj : field(j, "terms")) {
      FormTerm t;
      t.coef = scalar_from_json(field(tj, "coef"), conductor);
      t.word = field(tj, "word").get<std::vector<int>>();
      if (tj.contains("forms"))
        for (const auto& fj : tj.at("forms")) {
          FormFactor ff;
          const auto& name = field(fj, "f");
          if (name == "f1") ff.f = 1;
          else if (name == "f2") ff.f = 2;
          else bad("form must be \"f1\" or \"f2\"");
          ff.args = field(fj, "args").get<std::vector<std::vector<int>>>();
          t.forms.push_back(std::move(ff));
        }
      f.terms.push_back(std::move(t));
    }
    try {
      f.validate();
    } catch (const Error& e) {
      bad(e.what());
    }
    return f;
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

MultilinearPolynomial polynomial_from_json(const json& j, const FiniteAbelianGroup& G, int conductor) {
  FormPolynomial fp = form_polynomial_from_json(j, G, conductor);
  try {
    MultilinearPolynomial f(fp.vars, conductor);
    for (const auto& t : fp.terms) {
      if (!t.forms.empty()) bad("form factors are not allowed here");
      f.add(t.coef, t.word);
    }
    return f;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    bad(e.what());
  }
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace gsa
