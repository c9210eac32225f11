#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace gwa {

/// Malformed file; the message carries line and column.
class ScenarioParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Well-formed file with invalid content; `field` is a path such as `group.p`.
class ScenarioValidationError : public std::runtime_error {
public:
  ScenarioValidationError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

struct ScenarioOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> radius;
  std::optional<int> bound;
  /// Run only these checks (plain names or `tableaux.<name>`); empty runs all.
  std::vector<std::string> only;
};

/// JSON with // line comments.
nlohmann::json load_scenario(const std::string& path);
nlohmann::json parse_scenario(const std::string& text);

/// Validates fully, then runs the declared checks in order. The report holds
/// `status` (pass, fail or inconclusive) and one entry per check.
nlohmann::json run_scenario(const nlohmann::json& scenario, const ScenarioOverrides& overrides = {},
                            const std::string& source = "");

std::string render_text(const nlohmann::json& report);

/// 0 all pass, 1 any failure, 3 inconclusive present and `strict`.
int exit_code(const nlohmann::json& report, bool strict);

/// Catalog algebras, named automorphisms, groups and check names.
std::string catalog_listing();

}  // namespace gwa
