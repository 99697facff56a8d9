#pragma once

#include <cstddef>

#include "wqg/algebra.hpp"
#include "wqg/linalg.hpp"
#include "wqg/report.hpp"

namespace wqg {

/// A functional phi on R and an element e = sum e(a, b) r_a (x) r_b of R (x) R.
struct FrobeniusSystem {
  FinDimAlgebra algebra;
  Vector phi;  // phi(r_a)
  Matrix e;

  FieldSpec field() const { return algebra.field(); }
  std::size_t dim() const { return algebra.dim(); }
  Scalar apply_phi(const Vector& x) const;
  /// e as a vector of R (x) R.
  Vector e_tensor() const { return flatten(e); }
  /// e^1 e^2.
  Vector nabla_e() const;
};

/// Items: dual-basis-left, dual-basis-right, casimir.
CheckReport verify_frobenius_system(const FrobeniusSystem& s, const CheckOptions& opts = {});
/// verify_frobenius_system plus nabla-one.
CheckReport verify_ifs(const FrobeniusSystem& s, const CheckOptions& opts = {});

/// theta with phi(xy) = phi(y theta(x)). Throws NotFrobenius.
Matrix frobenius_automorphism(const FrobeniusSystem& s);

struct SymmetryFlags {
  bool theta_identity = false;
  bool e_flip_invariant = false;
  bool phi_symmetric = false;
};
SymmetryFlags symmetry_flags(const FrobeniusSystem& s);

/// The unit t with psi = phi(t .) and f = (1 (x) t^-1) e.
/// Throws NotFrobenius, NonInvertibleT.
Vector compare_frobenius_systems(const FrobeniusSystem& s, const FrobeniusSystem& s2);
/// (phi(t .), (1 (x) t^-1) e). Throws NotInvertible.
FrobeniusSystem twist_frobenius_system(const FrobeniusSystem& s, const Vector& t);

/// Trace form and the separability idempotent solved from the linear conditions.
/// Throws NotCommutative, NotSeparable.
FrobeniusSystem trace_ifs_commutative(const FinDimAlgebra& r);

/// (tr(u .), sum E_ij (x) u^-1 E_ji) on M_n without any verification.
/// Throws Singular.
FrobeniusSystem matrix_ifs_candidate(std::size_t n, const Matrix& u, FieldSpec f);
/// The same system, requiring tr(u^-1) = 1 and a passing verify_ifs.
/// Throws Singular, BadNormalization, AxiomFailure.
FrobeniusSystem matrix_ifs(std::size_t n, const Matrix& u, FieldSpec f);

}  // namespace wqg
