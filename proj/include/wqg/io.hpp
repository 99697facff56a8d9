#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wqg/algebra.hpp"
#include "wqg/bialgebroid.hpp"
#include "wqg/frobenius.hpp"
#include "wqg/repcat.hpp"
#include "wqg/report.hpp"
#include "wqg/zoo.hpp"

namespace wqg {

/// tau as a plain matrix: rows index the first side, columns the second.
struct PairingMatrix {
  Matrix tau;
};

/// One document of the "wqg" exchange format.
struct Structure {
  std::variant<FinDimAlgebra, FinDimCoalgebra, WeakBialgebra, FrobeniusSystem, FsBialgebroid, FiniteGroupoid,
               CoalgComodule, PairingMatrix>
      value;
  /// Names for algebra, coalgebra and frobenius-system documents; empty means e0, e1, ...
  std::vector<std::string> basis_names;
  /// Names of the base basis of a bialgebroid.
  std::vector<std::string> base_names;

  /// "algebra", "coalgebra", "weak-bialgebra", "frobenius-system", "bialgebroid",
  /// "groupoid", "comodule" or "pairing".
  std::string kind() const;
};

/// Throws ParseError (syntax, scalars) and SchemaError (shape, indices, fields).
Structure parse_structure(std::string_view text);
/// Canonical text: fixed key order, sparse entries sorted by index, one entry per line.
std::string serialize_structure(const Structure& s);

/// "-" reads stdin / writes stdout.
Structure load_structure(const std::string& path);
void save_structure(const Structure& s, const std::string& path);

/// {"overall", "items": [{"id", "status", "cases", "witnesses"}]} in canonical layout.
std::string report_to_json(const CheckReport& r);

/// Re-emits any JSON text in the canonical layout. Throws ParseError.
std::string canonical_json(std::string_view text);

}  // namespace wqg
