#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gsa {

int euler_phi(int m);

// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int m);

// Element of Q(zeta_m) stored as the reduced residue modulo Phi_m.
class CycloScalar {
 public:
  CycloScalar() : m_(1), c_(1) {}
  explicit CycloScalar(int conductor);
  CycloScalar(int conductor, const mpq_class& value);
  CycloScalar(int conductor, long value) : CycloScalar(conductor, mpq_class(value)) {}
  CycloScalar(int conductor, long num, long den);

  static CycloScalar from_coeffs(int conductor, std::vector<mpq_class> coeffs);

  int conductor() const { return m_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Rational value; only meaningful when is_rational().
  const mpq_class& rational() const { return c_[0]; }

  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o);
  CycloScalar& operator/=(const CycloScalar& o);
  CycloScalar operator-() const;

  CycloScalar inverse() const;
  CycloScalar pow(long long e) const;
  // Image under Q(zeta_m) -> Q(zeta_{m'}) for m | m'.
  CycloScalar embed(int target_conductor) const;

  // Adds a*b to *this without temporaries.
  void add_product(const CycloScalar& a, const CycloScalar& b);

  std::string to_string() const;

  friend bool operator==(const CycloScalar& a, const CycloScalar& b);
  friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

 private:
  void check(const CycloScalar& o) const;
  int m_;
  std::vector<mpq_class> c_;
};

CycloScalar operator+(CycloScalar a, const CycloScalar& b);
CycloScalar operator-(CycloScalar a, const CycloScalar& b);
CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
CycloScalar operator/(CycloScalar a, const CycloScalar& b);

CycloScalar root_of_unity(int m, long long k);

// Smallest d >= 1 with x^d = 1, or 0 when x is not a root of unity of order
// dividing 2*conductor.
int root_order(const CycloScalar& x);

// Parses "p/q" strings in the power basis.
CycloScalar scalar_from_strings(int conductor, const std::vector<std::string>& parts);
std::vector<std::string> scalar_to_strings(const CycloScalar& x);

}  // namespace gsa
