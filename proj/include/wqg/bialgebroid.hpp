#pragma once

#include <string>
#include <vector>

#include "wqg/algebra.hpp"
#include "wqg/frobenius.hpp"
#include "wqg/linalg.hpp"
#include "wqg/report.hpp"

namespace wqg {

/// A bialgebroid over a Frobenius-separable base R, with
/// Gamma stored as a representative H -> H (x) H fixed by the projector
/// Pi(g (x) h) = tgt(e^1) g (x) src(e^2) h, and the counit C as one matrix
/// on R per basis element of H.
struct FsBialgebroid {
  FrobeniusSystem base;
  FinDimAlgebra total;
  LinearMap src;    // R -> H, algebra map
  LinearMap tgt;    // R -> H, anti-algebra map
  LinearMap gamma;  // H -> H (x) H
  std::vector<Matrix> counit_c;
  std::vector<std::string> basis_names;

  FieldSpec field() const { return total.field(); }
  std::size_t dim() const { return total.dim(); }
  std::size_t base_dim() const { return base.dim(); }
  /// C(h) for an arbitrary element h.
  Matrix counit_of(const Vector& h) const;
};

/// Pi built from an arbitrary system s on the base.
Matrix balancing_projector(const FsBialgebroid& l, const FrobeniusSystem& s);
/// Spanning set of tgt(r) g (x) h - g (x) src(r) h.
std::vector<Vector> balancing_relations(const FsBialgebroid& l);

struct TensorOverR {
  Matrix projector;
  Subspace image;
  QuotientSpace quotient;
};

/// Throws BadBase, ProjectorNotIdempotent.
TensorOverR tensor_over_r(const FsBialgebroid& l);

/// Items src-tgt-commute, gamma-normalized, takeuchi, gamma-multiplicative,
/// gamma-unit, gamma-Re-linear, coassociativity and the counit-* laws.
CheckReport check_bialgebroid(const FsBialgebroid& l, const CheckOptions& opts = {});

/// Base H_t with its target IFS, src the inclusion, tgt = eps'_s, gamma = Delta,
/// C(h)(x) = eps_t(hx). Throws InvalidInput.
FsBialgebroid weak_to_bialgebroid(const WeakBialgebra& h);

/// Delta = Pi_s o gamma, eps(h) = phi(C(h)(1)). Throws BadBase, AxiomFailure.
WeakBialgebra bialgebroid_to_weak(const FsBialgebroid& l, const FrobeniusSystem& s);

/// (Delta_t(h) = h_1 (x) t^-1 h_2, eps_t(h) = eps(t h)) for t in H_t.
/// Throws InvalidInput, NotInvertible, BadTwist.
WeakBialgebra twist_weak(const WeakBialgebra& h, const Vector& t);

}  // namespace wqg
