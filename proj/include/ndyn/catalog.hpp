#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ndyn/builder.hpp"
#include "ndyn/conjugate.hpp"

namespace ndyn {

enum class EntryKind {
  Scheme,           // multi-step scheme instantiated on z^d - c
  PostConjugation,  // normal form given directly in conjugated coordinates
};

/// An alternative coordinate in which the family coefficients are affine.
struct LinearCoordinate {
  std::string name;
  std::function<Complex(Complex)> to_entry;    // linear coordinate -> entry parameter
  std::function<Complex(Complex)> from_entry;  // entry parameter -> linear coordinate
};

struct CatalogEntry {
  std::string name;
  std::vector<std::string> parameters;
  Bindings defaults;
  EntryKind kind = EntryKind::Scheme;
  std::string scheme_text;
  SchemeExpr scheme;
  std::function<OperatorForm(const Bindings&)> form;
  /// (n, k) of the conjugated operator for d = 2 at the default bindings;
  /// empty when the conjugate has no palindromic normal form.
  std::optional<std::pair<int, int>> expected_nk;
  /// Degrees d in {2, 3, 4} at which the operator is expected to be lambda^d-odd
  /// for generic parameters.
  std::vector<int> lambda_odd_degrees;
  std::optional<LinearCoordinate> linear;
  std::string doc;

  /// Bindings with defaults filled in for missing parameters.
  Bindings complete(const Bindings& given) const;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Throws UnknownMethod.
const CatalogEntry& catalog(const std::string& name);

/// The operator of an entry: the instantiated scheme on z^d - c, or the
/// stored normal form (already conjugated; d and c are ignored).
RationalMap catalog_map(const CatalogEntry& entry, const Bindings& bindings, int d = 2, Complex c = 1.0);

/// Normal form of an entry at d = 2: instantiate and conjugate by the standard
/// Mobius map, or call the stored producer.
OperatorForm catalog_form(const CatalogEntry& entry, const Bindings& bindings, Complex c = 1.0);

}  // namespace ndyn
