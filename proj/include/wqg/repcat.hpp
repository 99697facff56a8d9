#pragma once

#include <cstddef>
#include <vector>

#include "wqg/algebra.hpp"
#include "wqg/bialgebroid.hpp"
#include "wqg/linalg.hpp"
#include "wqg/report.hpp"

namespace wqg {

/// A left H-module given by one action matrix per basis element of H.
struct HModule {
  WeakBialgebra h;
  std::size_t dim = 0;
  std::vector<Matrix> action;

  /// Action matrix of an arbitrary element.
  Matrix act(const Vector& x) const;
};

HModule regular_module(const WeakBialgebra& h);
/// Items: shape, unit, associativity.
CheckReport check_module(const HModule& m, const CheckOptions& opts = {});

/// Delta(1)(M (x) N) inside M (x) N.
Subspace module_tensor_carrier(const HModule& m, const HModule& n);
/// The carrier with h (m (x) n) = h_1 m (x) h_2 n in its echelon basis. Throws InvalidInput.
HModule module_tensor(const HModule& m, const HModule& n);

/// Compares M.N with M (x)_{H_t} N under the L-module structure of the
/// associated bialgebroid. Items: projector-image, action-well-defined,
/// bijective, h-linear.
CheckReport gamma_monoidal_check(const HModule& m, const HModule& n, const CheckOptions& opts = {});

/// Comodule over the coalgebra of h: delta(e_p) = sum delta(i*dim + q, p) e_i (x) e_q.
struct CoalgComodule {
  WeakBialgebra h;
  std::size_t dim = 0;
  Matrix delta;
};

/// Comodule over a bialgebroid: an R-bimodule (one matrix per base basis element
/// on each side) with a Pi-normalized coaction lambda : M -> H (x) M.
struct BialgebroidComodule {
  FsBialgebroid l;
  std::size_t dim = 0;
  std::vector<Matrix> left_act;
  std::vector<Matrix> right_act;
  Matrix lambda;

  Matrix left_of(const Vector& r) const;
  Matrix right_of(const Vector& r) const;
};

CoalgComodule regular_comodule(const WeakBialgebra& h);
/// M = k with delta(m) = g (x) m.
CoalgComodule one_dim_comodule(const WeakBialgebra& h, const Vector& g);

/// Items: shape, coassociativity, counit.
CheckReport comodule_check(const CoalgComodule& c, const CheckOptions& opts = {});
/// Items: shape, bimodule laws, lambda-normalized, lambda-bimodule, coassociativity, counit.
CheckReport comodule_check(const BialgebroidComodule& c, const CheckOptions& opts = {});

struct Bimodule {
  std::vector<Matrix> left_act;
  std::vector<Matrix> right_act;
};

/// r m s = eps(r m_(-1) s) m_0 for r, s in the echelon basis of H_t. Throws InvalidInput.
Bimodule comodule_bimodule(const CoalgComodule& c);
/// Bimodule laws of comodule_bimodule and the identities
/// m_(-1) 1_1 (x) m_0 1_2 = m_(-1) (x) m_0 (absorbs-delta-one) and
/// 1_1 m_(-1) (x) 1_2 m_0 = m_(-1) (x) m_0 (lambda-normalized).
CheckReport check_comodule_identities(const CoalgComodule& c, const CheckOptions& opts = {});

/// Pi_M(h (x) m) = tgt(e^1) h (x) e^2 m on H (x) M.
Matrix comodule_projector(const FsBialgebroid& l, const std::vector<Matrix>& left_act, std::size_t dim);

/// Bimodule from eps, lambda = Pi_M o delta. Throws InvalidInput, AxiomFailure.
BialgebroidComodule coalg_comodule_to_bialgebroid(const CoalgComodule& c);
/// delta(m) = tgt(e^1) m_(-1) (x) e^2 m_0 over bialgebroid_to_weak(l, l.base).
/// Throws InvalidInput, AxiomFailure.
CoalgComodule bialgebroid_comodule_to_coalg(const BialgebroidComodule& c);

struct ComoduleTensor {
  /// M (x)_{H_t} N with m (x) n -> m_(-1) n_(-1) (x) m_0 (x) n_0.
  CoalgComodule quotient_form;
  QuotientSpace quotient;
  /// span{eps(m_(-1) n_(-1)) m_0 (x) n_0} in M (x) N.
  Subspace compressed;
  /// Items: coaction-well-defined, isomorphism.
  CheckReport report;
};

/// Throws InvalidInput when the comodules live over different weak bialgebras
/// or fail comodule_check.
ComoduleTensor comodule_tensor(const CoalgComodule& m, const CoalgComodule& n);

}  // namespace wqg
