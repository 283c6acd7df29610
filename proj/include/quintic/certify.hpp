#pragma once

#include "quintic/precision.hpp"
#include "quintic/rational.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace quintic {

struct ReportEntry {
  std::string id;
  std::string point;
  /// Absolute residual, scientific notation.
  std::string residual;
  bool pass = false;
  long elapsed_ms = 0;
  std::string note;

  bool operator==(const ReportEntry&) const = default;
};

struct IdentityReport {
  Rational r{1};
  int precision_bits = 0;
  int tol_exp = 0;
  std::vector<ReportEntry> entries;

  bool all_pass() const;
  const ReportEntry* find(const std::string& id) const;
  bool operator==(const IdentityReport&) const = default;
};

/// Identity ids in evaluation order.
const std::vector<std::string>& identity_registry();

/// Evaluates the requested identities (all when `ids` is empty or absent) at
/// r. Entries follow registry order; duplicates collapse. Throws UsageError
/// naming the registry for an unknown id.
IdentityReport run_suite(const Rational& r, const std::optional<std::vector<std::string>>& ids,
                         const PrecisionContext& ctx);

nlohmann::json to_json(const IdentityReport& report);
/// Throws UsageError on a malformed document.
IdentityReport report_from_json(const nlohmann::json& doc);

}  // namespace quintic
