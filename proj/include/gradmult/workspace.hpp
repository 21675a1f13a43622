#ifndef GRADMULT_WORKSPACE_HPP
#define GRADMULT_WORKSPACE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gradmult/family.hpp"
#include "gradmult/ideal.hpp"
#include "gradmult/settings.hpp"

namespace gradmult {

/// Input-document failure with the JSON path of the offending entry.
class WorkspaceError : public std::runtime_error {
 public:
  explicit WorkspaceError(const std::string& what) : std::runtime_error(what) {}
};

/// Parsed "gradmult/1" workspace: a ring, named ideals, named family
/// constructions, and settings.
struct WorkspaceDocument {
  Ring ring;
  std::optional<std::string> quotient_name;
  std::map<std::string, MonomialIdeal> ideals;
  std::map<std::string, GradedFamily> families;
  Settings settings;

  const MonomialIdeal& ideal(const std::string& name) const;
  const GradedFamily& family(const std::string& name) const;
  /// The ring quotient (zero ideal when the ring carries none).
  MonomialIdeal quotient() const;
};

WorkspaceDocument parse_workspace_json(const nlohmann::json& doc);
WorkspaceDocument parse_workspace(const std::string& path);

}  // namespace gradmult

#endif
