#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "turan/big_rational.hpp"

namespace turan {

/// Structural properties of a coefficient sequence, checked on a finite prefix.
struct SequenceFlags {
  bool non_negative = false;
  bool non_trivial = false;
  bool no_internal_zeros = false;
  /// terms[k]^2 >= terms[k-1] terms[k+1] on the prefix.
  bool log_concave = false;
  /// The {terms[k] * k!} view is log-concave (the f-form hypothesis, seen from a g-form sequence).
  bool factorial_weighted_log_concave = false;

  /// Doubly positive: non-negative, non-trivial, log-concave, no internal zeros.
  bool doubly_positive() const { return non_negative && non_trivial && no_internal_zeros && log_concave; }
};

/// Non-negative coefficients {f_k} or {g_k} of the reciprocal-gamma series.
///
/// Terms come from a generator (possibly infinite). A sequence built from
/// rationals also carries an exact view used by the exact checker. Leading
/// zeros are allowed and counted; a zero after the first non-zero term marks
/// the end of the support when the sequence has no internal zeros.
class CoefficientSequence {
public:
  using Generator = std::function<double(std::size_t)>;
  using ExactGenerator = std::function<BigRational(std::size_t)>;

  /// Number of leading terms inspected when computing flags.
  static constexpr std::size_t kFlagPrefix = 64;

  static CoefficientSequence constant(const BigRational& c, std::string label = "const");
  static CoefficientSequence from_values(std::vector<double> values, std::string label = "list");
  static CoefficientSequence from_rationals(std::vector<BigRational> values, std::string label = "list");
  static CoefficientSequence from_generator(Generator gen, std::optional<std::size_t> length = std::nullopt,
                                            std::string label = "generator");
  /// Exact generator; the floating view is derived from it unless `approx` is given.
  static CoefficientSequence from_exact_generator(ExactGenerator gen, std::optional<std::size_t> length = std::nullopt,
                                                  std::string label = "generator", Generator approx = {});

  double operator[](std::size_t k) const;
  BigRational exact(std::size_t k) const;
  bool has_exact() const { return static_cast<bool>(exact_); }

  /// Terms beyond this index are zero.
  std::optional<std::size_t> length() const { return length_; }
  std::size_t leading_zero_count() const { return leading_zeros_; }
  const SequenceFlags& flags() const { return flags_; }
  const std::string& label() const { return label_; }

  /// First `n` terms, exactly.
  std::vector<BigRational> exact_prefix(std::size_t n) const;

private:
  CoefficientSequence() = default;
  void analyze();

  Generator approx_;
  ExactGenerator exact_;
  std::optional<std::size_t> length_;
  std::size_t leading_zeros_ = 0;
  SequenceFlags flags_;
  std::string label_;
};

/// Flags for an explicit finite list, computed exactly.
SequenceFlags analyze_prefix(const std::vector<BigRational>& terms);
SequenceFlags analyze_prefix(const std::vector<double>& terms);

} // namespace turan
