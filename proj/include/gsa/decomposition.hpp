#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsa/algebra.hpp"
#include "gsa/structure.hpp"

namespace gsa {

// Matrix-unit frame of a component: type 1 is M_k(F^z[H]) with units
// E_ij eta_xi; type 2 is B x B^op with the exchange involution and the units
// split into their two coordinates (first, second).
struct FrameUnit {
  int i = 1, j = 1;  // 1-based
  GroupElement xi;
  Vec first;
  std::optional<Vec> second;
};

struct ComponentFrame {
  int type = 1;
  int k = 1;
  Subgroup H;
  CycloScalar lambda;  // z(e,e)
  std::vector<FrameUnit> units;

  const FrameUnit* find(int i, int j, const GroupElement& xi) const;
  // The element e^{(xi)}_{(ij)} of the algebra.
  Vec element(int i, int j, const GroupElement& xi) const;
};

struct DElement {
  int i = 1, j = 1;
  CompleteDegree degree;
  Vec vector;
  std::optional<GroupElement> xi;  // principal unit of the frame, when known
};

struct ComponentData {
  std::vector<DElement> D;
  Vec epsilon;
  std::optional<ComponentFrame> frame;
};

struct UElement {
  size_t l1 = 1, l2 = 1;  // 1-based; p+1 denotes the complement idempotent
  CompleteDegree degree;
  Vec r;
  Vec vector;  // (eps_l1 r eps_l2 +- eps_l2 r* eps_l1)/2
};

struct Decomposition {
  std::vector<ComponentData> components;
  std::vector<UElement> U;
  std::optional<int> nd;  // claimed nilpotency degree, optional
};

struct VerifiedDecomposition {
  GradedStarAlgebra algebra;
  Decomposition data;
  size_t p = 0;
  size_t t = 0;  // dim of the semisimple part
  int nd = 1;
  Subspace radical;
  std::vector<size_t> burnside_dims;  // per component
};

struct DecompositionReport {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;
  std::optional<VerifiedDecomposition> verified;
  bool ok() const { return violations.empty(); }
};

// Left/right multiplication by eps_l, with l = p+1 the complement.
Vec eps_left(const GradedStarAlgebra& A, const Decomposition& d, size_t l, const Vec& x);
Vec eps_right(const GradedStarAlgebra& A, const Decomposition& d, size_t l, const Vec& x);
Vec u_from_r(const GradedStarAlgebra& A, const Decomposition& d, size_t l1, size_t l2, Sign s,
             const Vec& r);

// Canonical bases D, idempotents and U computed from component frames.
Decomposition build_decomposition(const GradedStarAlgebra& A,
                                  const std::vector<ComponentFrame>& frames);

DecompositionReport verify_decomposition(const GradedStarAlgebra& A, const Decomposition& claimed,
                                         uint64_t seed = 1);
// verify_decomposition that throws DecompositionMismatch on violations.
VerifiedDecomposition certify(const GradedStarAlgebra& A, const Decomposition& claimed);

struct GiParameters {
  std::vector<size_t> dims_gi;
  int nd = 1;
  size_t dimJ = 0;
  friend bool operator==(const GiParameters&, const GiParameters&) = default;
};

GiParameters gi_parameters(const VerifiedDecomposition& dec);

struct ReducedWitness {
  std::vector<size_t> sigma;   // 1-based component order
  std::vector<int> s;          // diagonal index per position of sigma
  std::vector<size_t> chain;   // indices into U
  Vec a;
};

// Diagonal element e^{(e)}_{l,(ss)}; falls back to eps_l without a frame.
Vec diagonal_unit(const VerifiedDecomposition& dec, size_t l, int s);

std::optional<ReducedWitness> reduced_product_witness(const VerifiedDecomposition& dec);

}  // namespace gsa
