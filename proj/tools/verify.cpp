#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "turan/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

/// --config, else $VERIFY_CONFIG, else the built-in defaults.
nlohmann::json resolve_config(const std::string& path) {
  if (!path.empty()) return turan::load_config(path);
  if (const char* env = std::getenv("VERIFY_CONFIG"); env && *env) return turan::load_config(env);
  return nlohmann::json::object();
}

int write_report(const turan::SuiteReport& report, turan::Format format, const std::string& out) {
  const std::string text = turan::emit_report(report, format);
  if (out.empty() || out == "-") {
    std::cout << text << std::flush;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f || !(f << text)) {
      std::cerr << "verify: cannot write '" << out << "'\n";
      return kExitConfig;
    }
  }
  const auto s = report.summary();
  std::cerr << report.suite << ": " << s.total() << " checks, " << s.pass << " pass, " << s.fail << " fail, "
            << s.skipped << " skipped, " << s.hypothesis_violation << " hypothesis_violation\n";
  return s.fail == 0 ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks Turan-type inequalities for reciprocal-gamma series over parameter grids."};
  app.require_subcommand(1);

  std::string suite, config_path, format = "json", out;
  std::size_t jobs = 1;

  auto* run = app.add_subcommand("run", "run one or more suites");
  run->add_option("--suite", suite, "suite name, comma-separated list, or 'all'")->required();
  run->add_option("--config", config_path, "JSON config file (default: $VERIFY_CONFIG)");
  run->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  run->add_option("--jobs", jobs, "worker threads (0 = hardware concurrency)");
  run->add_option("--out", out, "output file (default: stdout)");

  auto* conj = app.add_subcommand("conjecture", "scan the conjecture grid for counterexamples");
  conj->add_option("--config", config_path, "JSON config file (default: $VERIFY_CONFIG)");
  conj->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  conj->add_option("--jobs", jobs, "worker threads (0 = hardware concurrency)");
  conj->add_option("--out", out, "output file (default: stdout)");

  auto* list = app.add_subcommand("list-suites", "print the available suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  if (list->parsed()) {
    for (const auto& s : turan::list_suites()) std::cout << s.name << "\t" << s.description << "\n";
    return kExitPass;
  }

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  try {
    const auto fmt = turan::format_from_string(format);
    const auto config = resolve_config(config_path);
    const auto report = run->parsed() ? turan::run_suite(turan::parse_suite_selection(suite), config, jobs)
                                      : turan::conjecture_scan(config, jobs);
    return write_report(report, fmt, out);
  } catch (const turan::CapExceeded& e) {
    std::cerr << "verify: resource cap exceeded: " << e.what() << "\n";
  } catch (const turan::ConfigError& e) {
    std::cerr << "verify: config error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "verify: " << e.what() << "\n";
  }
  return kExitConfig;
}
