#pragma once

#include <optional>
#include <string>

#include "nlohmann/json.hpp"
#include "singidx/indices.hpp"

namespace singidx {

inline constexpr const char* kEngineVersion = "singidx 1.0.0";

/// Note attached to reports of commands that build Eagon-Northcott
/// differentials; see the library docs on the contraction convention.
inline constexpr const char* kEnDifferentialNote =
    "Eagon-Northcott differential uses the standard contraction (matrix row t "
    "paired with d/du_t); validated by the d^2 = 0 suite";

struct ProblemValidationError : std::runtime_error {
  explicit ProblemValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Parsed and validated batch problem.
struct ProblemFile {
  GermSpec germ;
  std::optional<CollectionSpec> collection;
  nlohmann::json options;  // command-specific settings
};

ProblemFile load_problem(const std::string& path);
ProblemFile parse_problem(const nlohmann::json& j);

/// Forms block parsed against an existing context (used for perturbations).
std::vector<std::vector<KForm>> parse_form_blocks(const nlohmann::json& forms, const CtxPtr& ctx);

nlohmann::json report_skeleton(const std::string& command);

}  // namespace singidx
