#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "output.hpp"
#include "trikernel/spec_io.hpp"

namespace trikernel::cli {

/// Bad flag values and limits; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Either a catalog name or a spec file path.
struct FamilySource {
  std::string family;
  std::string spec_path;
};

struct NamedFamily {
  std::string label;
  FamilyDefinition definition;
};

/// A catalog name wins; otherwise the text is read as a spec file path.
NamedFamily resolve_family(const FamilySource& source);
NamedFamily resolve_name_or_path(const std::string& text);

/// Upper bound on n_max from TRIKERNEL_MAX_N, default 512.
long max_n_from_env();

Document cmd_direct(const NamedFamily& family, std::optional<long> n_max);
Document cmd_inverse(const NamedFamily& family, std::optional<long> n_max, const std::string& method);
Document cmd_change(const NamedFamily& from, const NamedFamily& to, std::optional<long> n_max,
                    const std::string& method);
Document cmd_cross(const NamedFamily& from, const NamedFamily& to, long n);
Document cmd_expand(const NamedFamily& family, const std::string& poly);
Document cmd_verify(const NamedFamily& family, std::optional<long> n_max);
Document cmd_list();

}  // namespace trikernel::cli
