#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "trikernel/catalog.hpp"
#include "trikernel/kernel.hpp"

namespace trikernel::testing {

inline Scalar q(const char* text) { return Scalar::parse(text); }

inline std::vector<Scalar> qs(std::initializer_list<const char*> items) {
  std::vector<Scalar> out;
  for (const char* s : items) out.push_back(Scalar::parse(s));
  return out;
}

inline TriangularKernel example_kernel() {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : oracle::example_rows()) {
    std::vector<Scalar> r;
    for (long v : row) r.emplace_back(v);
    rows.push_back(std::move(r));
  }
  return TriangularKernel(1, std::move(rows));
}

inline TriangularKernel catalog_kernel(const std::string& name, long n_max) {
  return build_direct_kernel(catalog::get(name).spec, n_max);
}

inline const std::vector<std::string>& admissible_names() {
  static const std::vector<std::string> names{"laguerre",  "chebyshev-t", "chebyshev-u", "legendre",
                                              "hermite-h", "hermite-he",  "lucas"};
  return names;
}

inline const std::vector<std::string>& k_free_names() {
  static const std::vector<std::string> names{"chebyshev-t", "chebyshev-u", "legendre",
                                              "hermite-h",   "hermite-he",  "lucas"};
  return names;
}

}  // namespace trikernel::testing

#include <optional>

#include "trikernel/error.hpp"

namespace trikernel::testing {

/// Runs f and returns the library error it throws, if any.
template <typename F>
std::optional<Error> capture_error(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  return std::nullopt;
}

}  // namespace trikernel::testing
