#include "turan/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <limits>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace turan {

using ojson = nlohmann::ordered_json;

Summary tally(const std::vector<CheckResult>& results) {
  Summary s;
  for (const auto& r : results) {
    switch (r.status) {
    case Status::pass: ++s.pass; break;
    case Status::fail: ++s.fail; break;
    case Status::skipped: ++s.skipped; break;
    case Status::hypothesis_violation: ++s.hypothesis_violation; break;
    }
  }
  return s;
}

Format format_from_string(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument("unsupported format '" + std::string(s) + "'");
}

namespace {

ojson double_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

ojson value_to_json(const ParamValue& v) {
  return std::visit(
      [](const auto& x) -> ojson {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BigRational>)
          return x.to_fraction_string();
        else if constexpr (std::is_same_v<T, double>)
          return double_to_json(x);
        else
          return x;
      },
      v);
}

ojson params_to_json(const Params& ps) {
  ojson o = ojson::object();
  for (const auto& p : ps) o[p.name] = value_to_json(p.value);
  return o;
}

bool looks_rational(const std::string& s) {
  static const std::regex re(R"(-?[0-9]+/[0-9]+)");
  return std::regex_match(s, re);
}

ParamValue value_from_json(const ojson& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (!j.is_string()) throw std::invalid_argument("unsupported parameter value " + j.dump());
  const auto s = j.get<std::string>();
  if (looks_rational(s)) return BigRational::parse(s);
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  return s;
}

Params params_from_json(const ojson& j) {
  if (!j.is_object()) throw std::invalid_argument("params must be an object");
  Params ps;
  for (auto it = j.begin(); it != j.end(); ++it) ps.push_back({it.key(), value_from_json(it.value())});
  return ps;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_value(const ParamValue& v) {
  if (const auto* q = std::get_if<BigRational>(&v)) return q->to_fraction_string();
  return param_to_string(v);
}

std::string csv_margin(const Margin& m) {
  if (const auto* q = std::get_if<BigRational>(&m)) return q->to_fraction_string();
  return margin_to_string(m);
}

/// -1, 0, 1; numbers before strings, numbers by value.
int compare_values(const ParamValue& a, const ParamValue& b) {
  const bool sa = std::holds_alternative<std::string>(a), sb = std::holds_alternative<std::string>(b);
  if (sa || sb) {
    if (sa != sb) return sa ? 1 : -1;
    const int c = std::get<std::string>(a).compare(std::get<std::string>(b));
    return (c > 0) - (c < 0);
  }
  const auto* qa = std::get_if<BigRational>(&a);
  const auto* qb = std::get_if<BigRational>(&b);
  if (qa && qb) return *qa < *qb ? -1 : (*qb < *qa ? 1 : 0);
  const auto as_double = [](const ParamValue& v) {
    if (const auto* q = std::get_if<BigRational>(&v)) return q->to_double();
    if (const auto* i = std::get_if<std::int64_t>(&v)) return double(*i);
    return std::get<double>(v);
  };
  const double x = as_double(a), y = as_double(b);
  if (x < y) return -1;
  if (y < x) return 1;
  // NaN last, then by alternative index for a total order
  if (std::isnan(x) != std::isnan(y)) return std::isnan(x) ? 1 : -1;
  return (a.index() > b.index()) - (a.index() < b.index());
}

int compare_params(const Params& a, const Params& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = a[i].name.compare(b[i].name);
    if (c != 0) return (c > 0) - (c < 0);
    const int v = compare_values(a[i].value, b[i].value);
    if (v != 0) return v;
  }
  return (a.size() > b.size()) - (a.size() < b.size());
}

} // namespace

ojson result_to_json(const CheckResult& r) {
  ojson o;
  o["check_id"] = r.check_id;
  o["params"] = params_to_json(r.params);
  o["status"] = to_string(r.status);
  if (const auto* q = std::get_if<BigRational>(&r.margin))
    o["margin"] = q->to_fraction_string();
  else if (const auto* d = std::get_if<double>(&r.margin))
    o["margin"] = double_to_json(*d);
  else
    o["margin"] = nullptr;
  if (r.counterexample) {
    ojson c;
    c["witness"] = params_to_json(r.counterexample->witness);
    c["detail"] = r.counterexample->detail;
    o["counterexample"] = std::move(c);
  } else {
    o["counterexample"] = nullptr;
  }
  return o;
}

CheckResult result_from_json(const ojson& j) {
  CheckResult r;
  r.check_id = j.at("check_id").get<std::string>();
  r.params = params_from_json(j.at("params"));
  r.status = status_from_string(j.at("status").get<std::string>());
  const auto& m = j.at("margin");
  if (m.is_null()) {
    r.margin = std::monostate{};
  } else {
    const ParamValue v = value_from_json(m);
    if (const auto* q = std::get_if<BigRational>(&v))
      r.margin = *q;
    else if (const auto* d = std::get_if<double>(&v))
      r.margin = *d;
    else if (const auto* i = std::get_if<std::int64_t>(&v))
      r.margin = double(*i);
    else
      throw std::invalid_argument("bad margin " + m.dump());
  }
  if (j.contains("counterexample") && !j.at("counterexample").is_null()) {
    const auto& c = j.at("counterexample");
    r.counterexample = Counterexample{params_from_json(c.at("witness")), c.at("detail").get<std::string>()};
  }
  return r;
}

std::string emit_report(const SuiteReport& report, Format format) {
  if (format == Format::csv) {
    std::string out = "check_id,params,status,margin\n";
    for (const auto& r : report.results) {
      std::string ps;
      for (std::size_t i = 0; i < r.params.size(); ++i) {
        if (i) ps += ';';
        ps += r.params[i].name + "=" + csv_value(r.params[i].value);
      }
      out += csv_field(r.check_id) + "," + csv_field(ps) + "," + to_string(r.status) + "," +
             csv_field(csv_margin(r.margin)) + "\n";
    }
    return out;
  }
  ojson o;
  o["suite"] = report.suite;
  o["timestamp"] = report.timestamp;
  o["config_digest"] = report.config_digest;
  const Summary s = report.summary();
  o["summary"] = {{"total", s.total()},
                  {"pass", s.pass},
                  {"fail", s.fail},
                  {"skipped", s.skipped},
                  {"hypothesis_violation", s.hypothesis_violation}};
  ojson results = ojson::array();
  for (const auto& r : report.results) results.push_back(result_to_json(r));
  o["results"] = std::move(results);
  return o.dump(2) + "\n";
}

SuiteReport parse_json_report(std::string_view text) {
  ojson o;
  try {
    o = ojson::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("report is not valid JSON: ") + e.what());
  }
  SuiteReport r;
  try {
    r.suite = o.at("suite").get<std::string>();
    r.timestamp = o.at("timestamp").get<std::string>();
    r.config_digest = o.at("config_digest").get<std::string>();
    for (const auto& j : o.at("results")) r.results.push_back(result_from_json(j));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
  if (o.contains("summary")) {
    const auto& s = o.at("summary");
    const Summary t = r.summary();
    if (s.value("pass", std::size_t{0}) != t.pass || s.value("fail", std::size_t{0}) != t.fail ||
        s.value("skipped", std::size_t{0}) != t.skipped ||
        s.value("hypothesis_violation", std::size_t{0}) != t.hypothesis_violation)
      throw std::invalid_argument("report summary does not match its results");
  }
  return r;
}

void canonical_sort(std::vector<CheckResult>& results) {
  std::vector<std::size_t> order(results.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const int c = results[i].check_id.compare(results[j].check_id);
    if (c != 0) return c < 0;
    return compare_params(results[i].params, results[j].params) < 0;
  });
  std::vector<CheckResult> sorted;
  sorted.reserve(results.size());
  for (std::size_t i : order) sorted.push_back(std::move(results[i]));
  results = std::move(sorted);
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string config_digest(const nlohmann::json& config, std::string_view suite) {
  return fnv1a_hex(config.dump() + "\n" + std::string(suite));
}

std::string report_timestamp() {
  std::time_t t;
  if (const char* e = std::getenv("SOURCE_DATE_EPOCH"); e && *e) {
    char* end = nullptr;
    const long long v = std::strtoll(e, &end, 10);
    if (*end != '\0') throw std::invalid_argument("SOURCE_DATE_EPOCH is not an integer");
    t = static_cast<std::time_t>(v);
  } else {
    t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

} // namespace turan
