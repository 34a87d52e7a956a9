#include "turan/grid.hpp"

#include <cmath>

namespace turan {

namespace {

BigRational parse_exact(const std::string& axis, const nlohmann::json& v) {
  try {
    return BigRational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw ConfigError("axis '" + axis + "': bad rational " + v.dump() + ": " + e.what());
  }
}

} // namespace

GridAxis GridAxis::range_exact(std::string name, const BigRational& min, const BigRational& max,
                               const BigRational& step, std::size_t cap) {
  if (min > max) throw ConfigError("axis '" + name + "': min > max");
  if (step.sign() <= 0) throw ConfigError("axis '" + name + "': step must be > 0");
  if (((max - min) / step).to_double() + 1.0 > double(cap))
    throw CapExceeded("axis '" + name + "' has more points than the cap");
  GridAxis a;
  a.name = std::move(name);
  a.exact = true;
  for (BigRational v = min; v <= max; v += step) {
    a.exact_values.push_back(v);
    a.values.push_back(v.to_double());
  }
  return a;
}

GridAxis GridAxis::range_real(std::string name, double min, double max, double step, std::size_t cap) {
  if (!(min <= max)) throw ConfigError("axis '" + name + "': min > max");
  if (!(step > 0.0)) throw ConfigError("axis '" + name + "': step must be > 0");
  const double n = std::floor((max - min) / step * (1.0 + 1e-12)) + 1.0;
  if (n > double(cap)) throw CapExceeded("axis '" + name + "' has more points than the cap");
  GridAxis a;
  a.name = std::move(name);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) a.values.push_back(min + double(i) * step);
  return a;
}

GridAxis GridAxis::list_exact(std::string name, std::vector<BigRational> values) {
  GridAxis a;
  a.name = std::move(name);
  a.exact = true;
  for (const auto& v : values) a.values.push_back(v.to_double());
  a.exact_values = std::move(values);
  return a;
}

GridAxis GridAxis::list_real(std::string name, std::vector<double> values) {
  GridAxis a;
  a.name = std::move(name);
  a.values = std::move(values);
  return a;
}

GridAxis GridAxis::from_json(std::string name, const nlohmann::json& j, std::size_t cap) {
  if (!j.is_object()) throw ConfigError("axis '" + name + "' must be an object");
  if (j.contains("values")) {
    const auto& vs = j.at("values");
    if (!vs.is_array() || vs.empty()) throw ConfigError("axis '" + name + "': values must be a non-empty array");
    if (vs.size() > cap) throw CapExceeded("axis '" + name + "' has more points than the cap");
    const bool exact = vs.front().is_string();
    std::vector<BigRational> ev;
    std::vector<double> dv;
    for (const auto& v : vs) {
      if (v.is_string() != exact || !(v.is_string() || v.is_number()))
        throw ConfigError("axis '" + name + "': mixed exact and real values");
      if (exact)
        ev.push_back(parse_exact(name, v));
      else
        dv.push_back(v.get<double>());
    }
    return exact ? list_exact(std::move(name), std::move(ev)) : list_real(std::move(name), std::move(dv));
  }
  for (const char* key : {"min", "max", "step"})
    if (!j.contains(key)) throw ConfigError("axis '" + name + "': missing '" + key + "'");
  const auto& lo = j.at("min");
  const auto& hi = j.at("max");
  const auto& st = j.at("step");
  if (lo.is_string() && hi.is_string() && st.is_string())
    return range_exact(name, parse_exact(name, lo), parse_exact(name, hi), parse_exact(name, st), cap);
  if (lo.is_number() && hi.is_number() && st.is_number())
    return range_real(std::move(name), lo.get<double>(), hi.get<double>(), st.get<double>(), cap);
  throw ConfigError("axis '" + name + "': mixed exact and real bounds");
}

const std::vector<BigRational>& GridAxis::require_exact() const {
  if (!exact) throw ConfigError("axis '" + name + "' must be exact (\"p/q\" strings)");
  return exact_values;
}

std::size_t GridSpec::point_count() const {
  double n = 1.0;
  for (const auto& a : axes) n *= double(a.size());
  return n > double(cap) ? cap + 1 : static_cast<std::size_t>(n);
}

void GridSpec::check_cap() const {
  if (point_count() > cap)
    throw CapExceeded("grid has more than " + std::to_string(cap) + " points");
}

std::vector<std::size_t> GridSpec::point(std::size_t i) const {
  std::vector<std::size_t> idx(axes.size());
  for (std::size_t k = axes.size(); k-- > 0;) {
    idx[k] = i % axes[k].size();
    i /= axes[k].size();
  }
  return idx;
}

const GridAxis& GridSpec::axis(std::string_view name) const {
  for (const auto& a : axes)
    if (a.name == name) return a;
  throw ConfigError("no axis named '" + std::string(name) + "'");
}

} // namespace turan
