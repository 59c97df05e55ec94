#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gsa/cyclo.hpp"

namespace gsa {

using GroupElement = std::vector<int>;

// Direct product of cyclic groups Z/orders[0] x Z/orders[1] x ...
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<int>{1}) {}
  explicit FiniteAbelianGroup(std::vector<int> orders);

  const std::vector<int>& orders() const { return orders_; }
  size_t rank() const { return orders_.size(); }
  size_t order() const { return order_; }
  int exponent() const { return exponent_; }

  GroupElement identity() const { return GroupElement(orders_.size(), 0); }
  GroupElement reduce(GroupElement g) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement mul(long long k, const GroupElement& a) const;
  bool is_identity(const GroupElement& g) const;
  bool valid(const GroupElement& g) const;
  int element_order(const GroupElement& g) const;

  // Lexicographic enumeration, identity first; index_of inverts it.
  const std::vector<GroupElement>& elements() const { return elements_; }
  size_t index_of(const GroupElement& g) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.orders_ == b.orders_;
  }

 private:
  std::vector<int> orders_;
  size_t order_;
  int exponent_;
  std::vector<GroupElement> elements_;
};

std::string element_to_string(const GroupElement& g);

enum class Sign { plus, minus };

struct CompleteDegree {
  Sign sign = Sign::plus;
  GroupElement degree;
  friend bool operator==(const CompleteDegree&, const CompleteDegree&) = default;
};

// Position of (sign, degree) in the tuple (theta_1^+, theta_1^-, theta_2^+, ...).
size_t complete_index(const FiniteAbelianGroup& G, const CompleteDegree& d);
CompleteDegree complete_from_index(const FiniteAbelianGroup& G, size_t idx);
std::string complete_to_string(const CompleteDegree& d);

using Subgroup = std::vector<GroupElement>;  // sorted

size_t& enumeration_cap();

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& G);
// Exponent vectors; chi_e(g) = zeta_m^{sum e_i g_i m/orders_i}, m = exponent.
std::vector<std::vector<int>> enumerate_characters(const FiniteAbelianGroup& G);
CycloScalar character_value(const FiniteAbelianGroup& G, const std::vector<int>& chi,
                            const GroupElement& g, int conductor);

// Smallest generating set, greedily chosen in enumeration order.
std::vector<GroupElement> generators(const FiniteAbelianGroup& G, const Subgroup& H);
Subgroup generated_subgroup(const FiniteAbelianGroup& G, const std::vector<GroupElement>& gens);

class TwoCocycle {
 public:
  TwoCocycle() = default;
  TwoCocycle(Subgroup H, int conductor);  // constant 1
  static TwoCocycle trivial(const Subgroup& H, int conductor) { return TwoCocycle(H, conductor); }

  const Subgroup& subgroup() const { return H_; }
  int conductor() const { return m_; }
  size_t position(const GroupElement& h) const;
  bool contains(const GroupElement& h) const;

  const CycloScalar& operator()(const GroupElement& a, const GroupElement& b) const;
  void set(const GroupElement& a, const GroupElement& b, CycloScalar v);
  bool complete() const;

 private:
  Subgroup H_;
  int m_ = 1;
  std::vector<std::optional<CycloScalar>> table_;
};

struct CocycleCheck {
  bool valid = true;
  std::vector<GroupElement> witness;  // (a,b,c) or (a,b) for a zero entry
};

CocycleCheck verify_cocycle(const FiniteAbelianGroup& G, const TwoCocycle& z);

// mu with mu(e)=1 and z(a,b) = mu(a)mu(b)/mu(a+b), searched over roots of unity
// available in the field; values listed in subgroup order.
std::optional<std::vector<CycloScalar>> coboundary_reduce(const FiniteAbelianGroup& G,
                                                          const TwoCocycle& z);

int chi4(const FiniteAbelianGroup& G, const GroupElement& x);

}  // namespace gsa
