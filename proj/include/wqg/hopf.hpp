#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "wqg/algebra.hpp"
#include "wqg/bialgebroid.hpp"
#include "wqg/linalg.hpp"
#include "wqg/report.hpp"

namespace wqg {

/// Items axiom-source, axiom-target, axiom-middle, absorb-target,
/// absorb-source, source-module, anti-multiplicative, unit, source-to-target,
/// reconstruction.
CheckReport verify_antipode(const WeakBialgebra& h, const Matrix& s, const CheckOptions& opts = {});

/// beta : H (x)_{H_s} H -> Delta(1)(H (x) H), g (x) h |-> g_1 (x) g_2 h.
struct BetaData {
  QuotientSpace domain;
  Subspace codomain;
  Matrix beta0;   // on H (x) H
  Matrix matrix;  // codomain coordinates x domain coordinates
  std::size_t rank = 0;
  bool bijective = false;
};

/// Throws IllDefined if a balancing relation has nonzero image.
BetaData beta_map(const WeakBialgebra& h);

struct NotHopf {
  std::size_t domain_dim = 0;
  std::size_t codomain_dim = 0;
  std::size_t rank = 0;
};

/// S(h) = pi beta^-1 (1_1 h (x) 1_2), pi(g (x) h) = eps_s(g) h.
/// Throws IllDefined if pi does not descend, AxiomFailure if the result is not an antipode.
std::variant<Matrix, NotHopf> solve_antipode(const WeakBialgebra& h);

struct CanonicalMapData {
  std::size_t domain_dim = 0;
  std::size_t codomain_dim = 0;
  std::size_t rank = 0;
  bool bijective = false;
};

/// g (x) h |-> g^(1) (x) g^(2) h from H (x)_Rbar H to the Takeuchi product.
/// Throws InvalidInput, IllDefined.
CanonicalMapData tak_canonical_map(const FsBialgebroid& l);
bool check_tak_hopf(const FsBialgebroid& l);

enum class Decision { yes, no, undecided };

struct IntertwinerResult {
  Decision decision = Decision::undecided;
  std::optional<Matrix> witness;
  std::size_t space_dim = 0;
};

/// Looks for an invertible f with f a_k = b_k f for all k.
IntertwinerResult find_invertible_intertwiner(FieldSpec f, std::size_t dim, const std::vector<Matrix>& a,
                                              const std::vector<Matrix>& b);

/// Right B_s-module B versus B with x.y = eps_t(y) x. Throws InvalidInput.
IntertwinerResult sub_quotient_hopf_criterion(const WeakBialgebra& b);

/// Subalgebra and subcoalgebra spanned by sub, in its echelon basis.
/// Throws InvalidInput.
WeakBialgebra restrict_weak_bialgebra(const WeakBialgebra& h, const Subspace& sub);

}  // namespace wqg
