#pragma once

#include "wqg/algebra.hpp"
#include "wqg/bialgebroid.hpp"
#include "wqg/frobenius.hpp"
#include "wqg/report.hpp"

namespace wqg {

/// Dual algebra of the coalgebra and dual coalgebra of the algebra, with the
/// transposed antipode when present. Throws InvalidInput.
WeakBialgebra dual_weak_bialgebra(const WeakBialgebra& h);

/// tau0(xi | h) = tau0(xi, h): rows index Lambda, columns index H.
struct WeakPairing {
  WeakBialgebra lambda_side;
  WeakBialgebra h_side;
  Matrix tau0;

  Scalar operator()(const Vector& xi, const Vector& h) const;
};

/// Items mult-in-h, unit-h, mult-in-xi, unit-xi.
CheckReport check_weak_skew_pairing(const WeakPairing& p, const CheckOptions& opts = {});

struct EvaluationPairing {
  WeakPairing pairing;
  bool nondegenerate_lambda = false;
  bool nondegenerate_h = false;
};

/// Pairs (H*)^op with H by evaluation; with_op = false pairs H* itself.
/// Throws InvalidInput.
EvaluationPairing evaluation_pairing(const WeakBialgebra& h, bool with_op = true);

/// R-valued pairing: tau(xi_i | h_j) is row i * dim(H) + j, in R coordinates.
struct BialgebroidPairing {
  FsBialgebroid lambda_side;
  FsBialgebroid h_side;
  Matrix tau;

  Vector operator()(const Vector& xi, const Vector& h) const;
};

/// Items Re-balanced, mult-in-h, unit-xi (tau(xi|1) = C(xi)(1)), mult-in-xi, unit-h (tau(1|h) = C(h)(1)).
CheckReport check_bialgebroid_skew_pairing(const BialgebroidPairing& p, const CheckOptions& opts = {});

/// tau0 = phi o tau between the weak bialgebras built with s. Throws AxiomFailure.
WeakPairing descend_pairing(const BialgebroidPairing& p, const FrobeniusSystem& s);

/// tau(r_a|r_b , h) = r_a C(h)(r_b) on an enveloping bialgebroid paired with itself.
BialgebroidPairing enveloping_pairing(const FsBialgebroid& l);
/// tau(xi | h) = C(xi h)(1), l paired with itself.
BialgebroidPairing counit_pairing(const FsBialgebroid& l);

}  // namespace wqg
