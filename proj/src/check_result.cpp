#include "turan/check_result.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace turan {

namespace {
std::atomic<double> g_rel_tol{kRelTol};
}

double rel_tol() { return g_rel_tol.load(std::memory_order_relaxed); }
void set_rel_tol(double tol) { g_rel_tol.store(tol, std::memory_order_relaxed); }

const char* to_string(Status s) {
  switch (s) {
  case Status::pass: return "pass";
  case Status::fail: return "fail";
  case Status::skipped: return "skipped";
  case Status::hypothesis_violation: return "hypothesis_violation";
  }
  return "?";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skipped") return Status::skipped;
  if (s == "hypothesis_violation") return Status::hypothesis_violation;
  throw std::invalid_argument("unknown status '" + s + "'");
}

namespace {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  // shortest string that round-trips
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

} // namespace

std::string param_to_string(const ParamValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BigRational>)
          return x.to_string();
        else if constexpr (std::is_same_v<T, double>)
          return format_double(x);
        else if constexpr (std::is_same_v<T, std::int64_t>)
          return std::to_string(x);
        else
          return x;
      },
      v);
}

std::string margin_to_string(const Margin& m) {
  if (std::holds_alternative<BigRational>(m)) return std::get<BigRational>(m).to_string();
  if (std::holds_alternative<double>(m)) return format_double(std::get<double>(m));
  return "";
}

double relative_slack(double lhs, double rhs) {
  const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
  if (scale == 0.0) return 0.0;
  if (std::isinf(rhs) && rhs > 0 && !std::isinf(lhs)) return 1.0;
  return (rhs - lhs) / scale;
}

namespace {

CheckResult fail_with(CheckResult r, std::string detail) {
  r.status = Status::fail;
  r.counterexample = Counterexample{r.params, std::move(detail)};
  return r;
}

std::string describe(const std::string& what, const std::string& body) {
  return what.empty() ? body : what + ": " + body;
}

} // namespace

CheckResult check_le(std::string id, Params params, double lhs, double rhs, std::string what) {
  CheckResult r{std::move(id), std::move(params), Status::pass, {}, std::nullopt};
  const double slack = relative_slack(lhs, rhs);
  r.margin = slack;
  if (std::isnan(lhs) || std::isnan(rhs) || !(slack >= -rel_tol()))
    return fail_with(std::move(r), describe(what, format_double(lhs) + " > " + format_double(rhs)));
  return r;
}

CheckResult check_between(std::string id, Params params, double lo, double v, double hi, std::string what) {
  CheckResult r{std::move(id), std::move(params), Status::pass, {}, std::nullopt};
  const double s = std::min(relative_slack(lo, v), relative_slack(v, hi));
  r.margin = s;
  if (std::isnan(lo) || std::isnan(v) || std::isnan(hi) || !(s >= -rel_tol()))
    return fail_with(std::move(r), describe(what, format_double(lo) + " <= " + format_double(v) + " <= " +
                                                      format_double(hi) + " violated"));
  return r;
}

CheckResult check_positive(std::string id, Params params, const BigRational& value, bool strict, std::string what) {
  CheckResult r{std::move(id), std::move(params), Status::pass, value, std::nullopt};
  const bool ok = strict ? value.sign() > 0 : value.sign() >= 0;
  if (!ok) return fail_with(std::move(r), describe(what, "value " + value.to_string()));
  return r;
}

CheckResult check_equal(std::string id, Params params, const BigRational& lhs, const BigRational& rhs,
                        std::string what) {
  CheckResult r{std::move(id), std::move(params), Status::pass, lhs - rhs, std::nullopt};
  if (lhs != rhs) return fail_with(std::move(r), describe(what, lhs.to_string() + " != " + rhs.to_string()));
  return r;
}

CheckResult check_true(std::string id, Params params, bool ok, Margin margin, std::string detail) {
  CheckResult r{std::move(id), std::move(params), Status::pass, std::move(margin), std::nullopt};
  if (!ok) return fail_with(std::move(r), std::move(detail));
  return r;
}

CheckResult make_skipped(std::string id, Params params, std::string why) {
  params.push_back({"reason", std::move(why)});
  return CheckResult{std::move(id), std::move(params), Status::skipped, {}, std::nullopt};
}

CheckResult make_hypothesis_violation(std::string id, Params params, std::string why) {
  params.push_back({"reason", std::move(why)});
  return CheckResult{std::move(id), std::move(params), Status::hypothesis_violation, {}, std::nullopt};
}

} // namespace turan
