#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "turan/check_result.hpp"

namespace turan {

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  std::size_t hypothesis_violation = 0;

  std::size_t total() const { return pass + fail + skipped + hypothesis_violation; }
  friend bool operator==(const Summary&, const Summary&) = default;
};

Summary tally(const std::vector<CheckResult>& results);

struct SuiteReport {
  std::string suite;
  std::string timestamp;
  std::string config_digest;
  std::vector<CheckResult> results;

  Summary summary() const { return tally(results); }
  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

enum class Format { json, csv };

/// Throws std::invalid_argument for anything but "json" or "csv".
Format format_from_string(std::string_view s);

/// Deterministic for a fixed report. JSON rationals are "p/q" strings; infinities and NaN are strings.
std::string emit_report(const SuiteReport& report, Format format);
/// Inverse of the JSON emitter. Throws std::invalid_argument on malformed input or inconsistent summary.
SuiteReport parse_json_report(std::string_view text);

nlohmann::ordered_json result_to_json(const CheckResult& r);
CheckResult result_from_json(const nlohmann::ordered_json& j);

/// Orders by check_id, then parameters (numbers by value), keeping the original order for ties.
void canonical_sort(std::vector<CheckResult>& results);

/// FNV-1a 64-bit, as 16 hex digits.
std::string fnv1a_hex(std::string_view data);
/// Digest of the canonical (key-sorted) configuration and the suite name.
std::string config_digest(const nlohmann::json& config, std::string_view suite);

/// UTC ISO-8601; SOURCE_DATE_EPOCH overrides the clock.
std::string report_timestamp();

} // namespace turan
