#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "turan/check_result.hpp"
#include "turan/grid.hpp"
#include "turan/report.hpp"

namespace turan {

/// One unit of work. The id and params label the result when `run` throws:
/// precondition and hypothesis errors become hypothesis_violation, non-convergence
/// becomes skipped, anything else a fail.
struct Task {
  std::string check_id;
  Params params;
  std::function<CheckResult()> run;
};

struct SuiteInfo {
  std::string name;
  std::string description;
};

const std::vector<SuiteInfo>& list_suites();

/// Built-in defaults for every key the suites read.
const nlohmann::json& default_config();
/// Defaults with `user` merged over them (RFC 7386). Throws ConfigError on unknown top-level keys.
nlohmann::json effective_config(const nlohmann::json& user);
/// Parses a JSON config file. Throws ConfigError.
nlohmann::json load_config(const std::string& path);

/// "a,b,c" or "all". Throws ConfigError on unknown names or an empty selection.
std::vector<std::string> parse_suite_selection(const std::string& text);

/// Tasks of one suite; samples are drawn serially from the configured seed.
std::vector<Task> build_tasks(const std::string& suite, const nlohmann::json& config);

/// Runs tasks on `jobs` worker threads; results come back in task order.
std::vector<CheckResult> run_tasks(const std::vector<Task>& tasks, std::size_t jobs);

/// Runs the selected suites over an effective config and returns one report
/// in canonical order. Throws ConfigError("no checks selected") when nothing runs.
SuiteReport run_suite(const std::vector<std::string>& suites, const nlohmann::json& config, std::size_t jobs = 1);

/// The conjecture suite alone.
SuiteReport conjecture_scan(const nlohmann::json& config, std::size_t jobs = 1);

} // namespace turan
