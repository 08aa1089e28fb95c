#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coarsetr/coarse/tape.hpp"
#include "coarsetr/grp/subgroups.hpp"
#include "coarsetr/spans/span.hpp"

namespace coarsetr::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kOutOfScope = 3,
  kInternal = 4,
  kSyntax = 5,
  kDangling = 6,
};

/// An error with the JSON pointer of the offending input, when known.
struct CliError : std::runtime_error {
  CliError(ExitCode code, std::string pointer, std::string const& message)
      : std::runtime_error(message), code(code), pointer(std::move(pointer)) {}
  ExitCode code;
  std::string pointer;
};

char const* kind_name(ExitCode code);

struct MapEntry {
  std::string src;
  std::string dst;
  std::optional<coarse::Map> finite;
  std::optional<coarse::TapeMap> tape;
};

struct Family {
  std::string group;
  grp::SubgroupFamily family;
};

/// A parsed and validated input document. Entities keep document order.
struct Workspace {
  std::vector<std::pair<std::string, grp::GroupPtr>> groups;
  std::vector<std::pair<std::string, coarse::Space>> spaces;
  std::vector<std::pair<std::string, coarse::TapeSpace>> tapes;
  std::vector<std::pair<std::string, MapEntry>> maps;
  std::vector<std::pair<std::string, spans::Span>> spans;
  std::vector<std::pair<std::string, spans::Square>> squares;
  std::vector<std::pair<std::string, Family>> families;
  std::vector<Json> tasks;

  grp::GroupPtr const* group(std::string const& name) const;
  coarse::Space const* space(std::string const& name) const;
  coarse::TapeSpace const* tape(std::string const& name) const;
  MapEntry const* map(std::string const& name) const;
  spans::Span const* span(std::string const& name) const;
  spans::Square const* square(std::string const& name) const;
  Family const* family(std::string const& name) const;
};

/// Parses text into a workspace. Throws CliError with kSyntax, kDangling or
/// kValidation and the pointer of the failing entity.
Workspace parse_workspace(std::string const& text);
Workspace load_workspace(std::string const& path);

/// Group from a description such as {"builtin": "S3"}.
grp::GroupPtr parse_group(Json const& j, std::string const& pointer);

/// A family preset name ("all", "trivial", "sol", "cyclic") or the name of
/// a family declared in the workspace.
grp::SubgroupFamily resolve_family(Workspace const& ws, grp::GroupPtr const& g,
                                   std::string const& name);

}  // namespace coarsetr::cli
