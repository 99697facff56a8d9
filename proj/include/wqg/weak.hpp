#pragma once

#include "wqg/algebra.hpp"
#include "wqg/frobenius.hpp"
#include "wqg/linalg.hpp"
#include "wqg/report.hpp"

namespace wqg {

/// Algebra and coalgebra items, delta-multiplicative, counit-weak-mult(-op),
/// unit-weak-comult(-op) and eps-t-unit.
CheckReport check_weak_bialgebra(const WeakBialgebra& h, const CheckOptions& opts = {});

/// Delta(1) as a vector of H (x) H.
Vector delta_one(const WeakBialgebra& h);

struct CounitalData {
  Matrix eps_s, eps_t, eps_s_prime, eps_t_prime;
  Subspace H_s, H_t;
  /// (eps restricted to H_t, (eps_t (x) id) Delta(1)) in the echelon basis of H_t.
  FrobeniusSystem ifs_t;
};

/// Throws InvalidInput unless h is a weak bialgebra.
CounitalData counital_data(const WeakBialgebra& h);
/// Same, without checking the axioms first. Throws AxiomFailure if the
/// target system cannot be expressed on H_t.
CounitalData counital_data_unchecked(const WeakBialgebra& h);

/// One item per identity of the counital calculus, plus the target IFS.
CheckReport verify_counital_identities(const WeakBialgebra& h, const CheckOptions& opts = {});

/// eps_t : H_s -> H_t and eps'_s : H_t -> H_s are mutually inverse anti-isomorphisms.
CheckReport antiiso_check(const WeakBialgebra& h, const CheckOptions& opts = {});

/// Algebra map, coalgebra map and counit preservation.
CheckReport check_weak_hom(const LinearMap& f, const WeakBialgebra& b, const WeakBialgebra& h,
                           const CheckOptions& opts = {});

struct InducedIso {
  /// x |-> eps_H(x f(1_1)) 1_2 on all of H; restricts to H_t -> B_t.
  LinearMap g;
  CheckReport report;
};

/// Throws NotAHomomorphism unless f : B -> H is a weak bialgebra map.
InducedIso induced_counital_iso(const LinearMap& f, const WeakBialgebra& b, const WeakBialgebra& h);

}  // namespace wqg
