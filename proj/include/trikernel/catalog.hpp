#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trikernel/kernel.hpp"

namespace trikernel::catalog {

/// Built-in lambda-recursive families. The recurrence is the minus-sign form
/// lambda1(n,k) = p_n lambda1(n-1,k) - h lambda1(n-m,k-1) for every entry,
/// so fibonacci and lucas (h = 1) produce alternating-sign triangles, e.g.
/// lucas row 2 is x^2 - 2 rather than the classical x^2 + 2.
struct CatalogEntry {
  std::string name;
  LambdaRecursiveSpec spec;
  /// Boundary column nonzero for every n up to kAdmissibilityHorizon.
  bool admissible;
  /// h does not mention k, so the recurrence-based methods apply.
  bool recurrence_methods_ok;
};

/// Admissibility of catalog entries is checked on rows 0..horizon.
inline constexpr long kAdmissibilityHorizon = 64;

/// Throws UnknownFamily listing the valid names.
CatalogEntry get(std::string_view name);

/// laguerre, chebyshev-t, chebyshev-u, legendre, hermite-h, hermite-he,
/// lucas, fibonacci, in that order.
std::vector<CatalogEntry> list();

std::vector<std::string> names();

}  // namespace trikernel::catalog
