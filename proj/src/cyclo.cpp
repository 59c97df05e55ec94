#include "gsa/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "gsa/error.hpp"

namespace gsa {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConductorMismatch: return "ConductorMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::IncompleteTable: return "IncompleteTable";
    case ErrorCode::WrongGroup: return "WrongGroup";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InvalidCocycle: return "InvalidCocycle";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NoCentralUnit: return "NoCentralUnit";
    case ErrorCode::AlphaNotSign: return "AlphaNotSign";
    case ErrorCode::ResourceCap: return "ResourceCap";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::DecompositionMismatch: return "DecompositionMismatch";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NoReducedWitness: return "NoReducedWitness";
    case ErrorCode::MixedDegrees: return "MixedDegrees";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Error";
}

namespace {
thread_local long long t_cap = 0;
thread_local long long t_used = 0;
thread_local bool t_active = false;
}  // namespace

long long& default_budget_cap() {
  static long long cap = 10'000'000;
  return cap;
}

BudgetScope::BudgetScope(long long cap) : owner_(!t_active) {
  if (owner_) {
    t_active = true;
    t_cap = cap;
    t_used = 0;
  }
}

BudgetScope::~BudgetScope() {
  if (owner_) t_active = false;
}

void charge(long long n) {
  if (!t_active) return;
  t_used += n;
  if (t_used > t_cap)
    throw Error(ErrorCode::ResourceCap,
                "more than " + std::to_string(t_cap) + " scalar multiplications");
}

long long budget_used() { return t_used; }

int euler_phi(int m) {
  int r = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

namespace {

std::map<int, std::vector<long>>& phi_cache() {
  static std::map<int, std::vector<long>> cache;
  return cache;
}

// Caller holds the cache lock.
const std::vector<long>& phi_locked(int m) {
  auto& cache = phi_cache();
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  // x^m - 1 divided exactly by Phi_d for every proper divisor d
  std::vector<long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d) continue;
    const std::vector<long> den = phi_locked(d);
    int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
    std::vector<long> q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
      long long c = num[i];  // den is monic
      q[i - dd] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = q;
  }
  return cache.emplace(m, num).first->second;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int m) {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return phi_locked(m);
}

CycloScalar::CycloScalar(int conductor) : m_(conductor), c_(euler_phi(conductor)) {}

CycloScalar::CycloScalar(int conductor, const mpq_class& value) : CycloScalar(conductor) {
  c_[0] = value;
}

CycloScalar::CycloScalar(int conductor, long num, long den) : CycloScalar(conductor) {
  c_[0] = mpq_class(num, den);
  c_[0].canonicalize();
}

namespace {

// Reduces a polynomial of arbitrary degree modulo Phi_m in place.
void reduce_mod(std::vector<mpq_class>& p, int m) {
  const auto& phi = cyclotomic_polynomial(m);
  int d = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(p.size()) - 1; i >= d; --i) {
    if (sgn(p[i]) == 0) continue;
    mpq_class c = p[i];
    for (int j = 0; j < d; ++j)
      if (phi[j] != 0) p[i - d + j] -= c * phi[j];
    p[i] = 0;
  }
  p.resize(d);
}

using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j]) != 0) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (!a.empty() && a.size() >= b.size()) {
    size_t s = a.size() - b.size();
    mpq_class c = a.back() / b.back();
    q[s] = c;
    for (size_t j = 0; j < b.size(); ++j) a[s + j] -= c * b[j];
    trim(a);
  }
  r = a;
}

}  // namespace

CycloScalar CycloScalar::from_coeffs(int conductor, std::vector<mpq_class> coeffs) {
  CycloScalar r(conductor);
  for (auto& x : coeffs) x.canonicalize();
  reduce_mod(coeffs, conductor);
  r.c_ = std::move(coeffs);
  return r;
}

void CycloScalar::check(const CycloScalar& o) const {
  if (m_ != o.m_)
    throw Error(ErrorCode::ConductorMismatch,
                std::to_string(m_) + " vs " + std::to_string(o.m_));
}

bool CycloScalar::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool CycloScalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool CycloScalar::is_one() const { return is_rational() && c_[0] == 1; }

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  check(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) {
  check(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

void CycloScalar::add_product(const CycloScalar& a, const CycloScalar& b) {
  check(a);
  check(b);
  if (c_.size() == 1) {
    c_[0] += a.c_[0] * b.c_[0];
    return;
  }
  *this += a * b;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
  check(o);
  if (c_.size() == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  if (o.is_rational()) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (is_rational()) {
    mpq_class s = c_[0];
    c_ = o.c_;
    for (auto& x : c_) x *= s;
    return *this;
  }
  Poly p(2 * c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (sgn(o.c_[j]) != 0) p[i + j] += c_[i] * o.c_[j];
  }
  reduce_mod(p, m_);
  c_ = std::move(p);
  return *this;
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) {
    CycloScalar r(m_);
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // extended Euclid: s*a + t*Phi = g (constant)
  const auto& phi_int = cyclotomic_polynomial(m_);
  Poly phi(phi_int.begin(), phi_int.end());
  Poly r0 = phi, r1 = c_;
  trim(r1);
  Poly s0, s1{mpq_class(1)};
  while (r1.size() > 1) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since Phi is irreducible
  mpq_class g = r1[0];
  for (auto& x : s1) x /= g;
  return from_coeffs(m_, s1);
}

CycloScalar& CycloScalar::operator/=(const CycloScalar& o) {
  check(o);
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return *this *= o.inverse();
}

CycloScalar CycloScalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloScalar r(m_, 1L), b(*this);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

CycloScalar CycloScalar::embed(int target) const {
  if (target % m_ != 0)
    throw Error(ErrorCode::ConductorMismatch,
                std::to_string(m_) + " does not divide " + std::to_string(target));
  int step = target / m_;
  Poly p(static_cast<size_t>(step) * c_.size() + 1);
  for (size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
  return from_coeffs(target, p);
}

std::string CycloScalar::to_string() const {
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    std::string coef = c_[i].get_str();
    if (!s.empty() && coef[0] != '-') s += "+";
    if (i == 0) {
      s += coef;
    } else {
      if (c_[i] == 1) {
      } else if (c_[i] == -1) {
        s += "-";
      } else {
        s += coef + "*";
      }
      s += "z" + std::to_string(m_);
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  a.check(b);
  return a.c_ == b.c_;
}

CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
  CycloScalar r(a);
  r *= b;
  return r;
}
CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }

CycloScalar root_of_unity(int m, long long k) {
  long long e = ((k % m) + m) % m;
  Poly p(e + 1);
  p[e] = 1;
  return CycloScalar::from_coeffs(m, p);
}

int root_order(const CycloScalar& x) {
  int m = x.conductor();
  int bound = 2 * m;
  CycloScalar p = x;
  for (int d = 1; d <= bound; ++d) {
    if (p.is_one()) return d;
    p *= x;
  }
  return 0;
}

CycloScalar scalar_from_strings(int conductor, const std::vector<std::string>& parts) {
  std::vector<mpq_class> c;
  for (const auto& s : parts) {
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
    q.canonicalize();
    c.push_back(q);
  }
  return CycloScalar::from_coeffs(conductor, c);
}

std::vector<std::string> scalar_to_strings(const CycloScalar& x) {
  std::vector<std::string> out;
  size_t last = 0;
  for (size_t i = 0; i < x.coeffs().size(); ++i)
    if (sgn(x.coeffs()[i]) != 0) last = i;
  for (size_t i = 0; i <= last; ++i) out.push_back(x.coeffs()[i].get_str());
  return out;
}

}  // namespace gsa
