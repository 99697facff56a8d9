#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wqg/algebra.hpp"
#include "wqg/bialgebroid.hpp"
#include "wqg/frobenius.hpp"
#include "wqg/report.hpp"

namespace wqg {

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string name;
};

/// compose[a][b] is a o b, defined iff target(b) = source(a).
struct FiniteGroupoid {
  std::size_t objects = 0;
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::optional<std::size_t>>> compose;
  std::vector<std::size_t> inverse;
  std::vector<std::size_t> identities;
};

CheckReport check_groupoid(const FiniteGroupoid& g, const CheckOptions& opts = {});

/// Arrows g_ij : j -> i, listed row-major (g11, g12, ..., gnn).
FiniteGroupoid pair_groupoid(std::size_t objects);
/// Z/n as a one-object groupoid with arrows 1, u, u2, ...
FiniteGroupoid cyclic_group(std::size_t n);
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

/// Arrows as a grouplike basis, product by composition (zero if undefined),
/// antipode by inversion. Throws InvalidGroupoid.
WeakBialgebra groupoid_algebra(const FiniteGroupoid& g, FieldSpec f);
/// The dual weak bialgebra of groupoid_algebra. Throws InvalidGroupoid.
WeakBialgebra groupoid_function_algebra(const FiniteGroupoid& g, FieldSpec f);

/// Grouplike bialgebra of a finite monoid given by its table (table[a][b] = ab).
/// The antipode is attached when every element is invertible.
/// Throws NotAssociative, InvalidInput.
WeakBialgebra monoid_bialgebra(const std::vector<std::vector<std::size_t>>& table, FieldSpec f,
                               std::vector<std::string> names = {});

/// k^m with orthogonal idempotents p1..pm.
FinDimAlgebra split_algebra(FieldSpec f, std::size_t m);

/// R (x) R^op, basis r_a|r_b, with src(r) = r (x) 1, tgt(r) = 1 (x) r, basis index a*m + b.
/// Throws BadBase unless s is an IFS.
FsBialgebroid enveloping_bialgebroid(const FrobeniusSystem& s, const std::vector<std::string>& base_names = {});

namespace fixtures {

WeakBialgebra pg(std::size_t objects, FieldSpec f);
WeakBialgebra k2(FieldSpec f);
/// {1, x} with x^2 = x.
WeakBialgebra mx(FieldSpec f);
FinDimAlgebra r2(FieldSpec f);
/// Q x Q with its trace IFS.
FsBialgebroid eb2(FieldSpec f);
/// 2 tr on M_2 with e = (1/2) sum E_ij (x) E_ji (needs char != 2).
FrobeniusSystem m2_scaled_trace(FieldSpec f);
/// tr(u .) with u = diag(3, 3/2) (needs char != 2, 3).
FrobeniusSystem m2_second_ifs(FieldSpec f);
FsBialgebroid ebm2(FieldSpec f);

}  // namespace fixtures

}  // namespace wqg
