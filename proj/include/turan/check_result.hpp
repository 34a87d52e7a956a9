#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "turan/big_rational.hpp"

namespace turan {

/// Relative tolerance for floating inequality checks, scaled by the larger side.
inline constexpr double kRelTol = 1e-9;

/// The tolerance in effect: kRelTol unless a run configuration overrides it.
double rel_tol();
void set_rel_tol(double tol);

enum class Status { pass, fail, skipped, hypothesis_violation };

const char* to_string(Status s);
Status status_from_string(const std::string& s);

using ParamValue = std::variant<BigRational, double, std::int64_t, std::string>;
using Margin = std::variant<std::monostate, BigRational, double>;

struct Param {
  std::string name;
  ParamValue value;

  friend bool operator==(const Param&, const Param&) = default;
};

using Params = std::vector<Param>;

struct Counterexample {
  Params witness;
  std::string detail;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CheckResult {
  std::string check_id;
  Params params;
  Status status = Status::skipped;
  Margin margin;
  std::optional<Counterexample> counterexample;

  bool passed() const { return status == Status::pass; }
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

std::string param_to_string(const ParamValue& v);
std::string margin_to_string(const Margin& m);

/// Relative slack of lhs <= rhs, scaled by the larger magnitude (0 when both vanish).
double relative_slack(double lhs, double rhs);

/// lhs <= rhs within rel_tol(); margin is the relative slack.
CheckResult check_le(std::string id, Params params, double lhs, double rhs, std::string what = "");
/// lo <= v <= hi within rel_tol(); margin is the smaller of the two slacks.
CheckResult check_between(std::string id, Params params, double lo, double v, double hi, std::string what = "");
/// Exact: value > 0 (or >= 0 when `strict` is false); margin is the value itself.
CheckResult check_positive(std::string id, Params params, const BigRational& value, bool strict = true,
                           std::string what = "");
/// Exact: lhs == rhs; margin is lhs - rhs.
CheckResult check_equal(std::string id, Params params, const BigRational& lhs, const BigRational& rhs,
                        std::string what = "");
/// A boolean predicate with an optional numeric margin.
CheckResult check_true(std::string id, Params params, bool ok, Margin margin, std::string detail);

CheckResult make_skipped(std::string id, Params params, std::string why);
CheckResult make_hypothesis_violation(std::string id, Params params, std::string why);

} // namespace turan
