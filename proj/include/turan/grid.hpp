#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "turan/big_rational.hpp"

namespace turan {

/// Malformed or inconsistent configuration.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A grid or sample count above the configured cap.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One parameter axis. Exact axes come from "p/q" strings, real axes from JSON numbers.
struct GridAxis {
  std::string name;
  bool exact = false;
  std::vector<BigRational> exact_values;
  /// Always filled; the double view of exact values.
  std::vector<double> values;

  std::size_t size() const { return values.size(); }

  static GridAxis range_exact(std::string name, const BigRational& min, const BigRational& max,
                              const BigRational& step, std::size_t cap);
  static GridAxis range_real(std::string name, double min, double max, double step, std::size_t cap);
  static GridAxis list_exact(std::string name, std::vector<BigRational> values);
  static GridAxis list_real(std::string name, std::vector<double> values);

  /// {"min", "max", "step"} or {"values": [...]}; strings are exact, numbers real, mixing is rejected.
  static GridAxis from_json(std::string name, const nlohmann::json& j, std::size_t cap);

  /// Throws ConfigError unless the axis is exact.
  const std::vector<BigRational>& require_exact() const;
};

/// Cartesian product of axes, last axis fastest.
struct GridSpec {
  std::vector<GridAxis> axes;
  std::size_t cap = 1000000;

  std::size_t point_count() const;
  /// Throws CapExceeded when point_count() > cap.
  void check_cap() const;
  /// Per-axis indices of the i-th point.
  std::vector<std::size_t> point(std::size_t i) const;
  const GridAxis& axis(std::string_view name) const;
};

} // namespace turan
