#include "turan/sequence.hpp"

#include <stdexcept>

#include "turan/errors.hpp"

namespace turan {

namespace {

template <class T>
SequenceFlags analyze_terms(const std::vector<T>& t) {
  SequenceFlags f;
  f.non_negative = true;
  for (const T& v : t)
    if (v < T(0)) f.non_negative = false;

  std::size_t first = 0;
  while (first < t.size() && t[first] == T(0)) ++first;
  f.non_trivial = first < t.size();

  f.no_internal_zeros = true;
  bool ended = false;
  for (std::size_t k = first; k < t.size(); ++k) {
    if (t[k] == T(0))
      ended = true;
    else if (ended)
      f.no_internal_zeros = false;
  }

  f.log_concave = true;
  for (std::size_t k = 1; k + 1 < t.size(); ++k)
    if (t[k] * t[k] < t[k - 1] * t[k + 1]) f.log_concave = false;

  // {t_k k!}: t_k^2 k!^2 >= t_{k-1} t_{k+1} (k-1)! (k+1)!  <=>  k t_k^2 >= (k+1) t_{k-1} t_{k+1}
  f.factorial_weighted_log_concave = true;
  for (std::size_t k = 1; k + 1 < t.size(); ++k) {
    const T kk(static_cast<long>(k));
    const T k1(static_cast<long>(k + 1));
    if (kk * t[k] * t[k] < k1 * t[k - 1] * t[k + 1]) f.factorial_weighted_log_concave = false;
  }
  return f;
}

} // namespace

SequenceFlags analyze_prefix(const std::vector<BigRational>& terms) { return analyze_terms(terms); }
SequenceFlags analyze_prefix(const std::vector<double>& terms) { return analyze_terms(terms); }

CoefficientSequence CoefficientSequence::constant(const BigRational& c, std::string label) {
  const double approx = c.to_double();
  return from_exact_generator([c](std::size_t) { return c; }, std::nullopt, std::move(label),
                              [approx](std::size_t) { return approx; });
}

CoefficientSequence CoefficientSequence::from_values(std::vector<double> values, std::string label) {
  CoefficientSequence s;
  s.length_ = values.size();
  s.approx_ = [v = std::move(values)](std::size_t k) { return k < v.size() ? v[k] : 0.0; };
  s.label_ = std::move(label);
  s.analyze();
  return s;
}

CoefficientSequence CoefficientSequence::from_rationals(std::vector<BigRational> values, std::string label) {
  std::vector<double> approx;
  approx.reserve(values.size());
  for (const auto& v : values) approx.push_back(v.to_double());
  const std::size_t n = values.size();
  return from_exact_generator(
      [v = std::move(values)](std::size_t k) { return k < v.size() ? v[k] : BigRational(0); }, n, std::move(label),
      [a = std::move(approx)](std::size_t k) { return k < a.size() ? a[k] : 0.0; });
}

CoefficientSequence CoefficientSequence::from_generator(Generator gen, std::optional<std::size_t> length,
                                                        std::string label) {
  CoefficientSequence s;
  s.approx_ = std::move(gen);
  s.length_ = length;
  s.label_ = std::move(label);
  s.analyze();
  return s;
}

CoefficientSequence CoefficientSequence::from_exact_generator(ExactGenerator gen, std::optional<std::size_t> length,
                                                              std::string label, Generator approx) {
  CoefficientSequence s;
  if (!approx) approx = [gen](std::size_t k) { return gen(k).to_double(); };
  s.approx_ = std::move(approx);
  s.exact_ = std::move(gen);
  s.length_ = length;
  s.label_ = std::move(label);
  s.analyze();
  return s;
}

double CoefficientSequence::operator[](std::size_t k) const {
  if (length_ && k >= *length_) return 0.0;
  return approx_(k);
}

BigRational CoefficientSequence::exact(std::size_t k) const {
  if (!exact_) throw PreconditionError("sequence '" + label_ + "' has no exact view");
  if (length_ && k >= *length_) return BigRational(0);
  return exact_(k);
}

std::vector<BigRational> CoefficientSequence::exact_prefix(std::size_t n) const {
  std::vector<BigRational> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(exact(k));
  return out;
}

void CoefficientSequence::analyze() {
  std::size_t n = kFlagPrefix;
  if (length_) n = std::min(n, *length_ + 1);
  if (exact_) {
    const auto terms = exact_prefix(n);
    flags_ = analyze_prefix(terms);
    leading_zeros_ = 0;
    while (leading_zeros_ < terms.size() && terms[leading_zeros_].is_zero()) ++leading_zeros_;
  } else {
    std::vector<double> terms;
    terms.reserve(n);
    for (std::size_t k = 0; k < n; ++k) terms.push_back((*this)[k]);
    flags_ = analyze_prefix(terms);
    leading_zeros_ = 0;
    while (leading_zeros_ < terms.size() && terms[leading_zeros_] == 0.0) ++leading_zeros_;
  }
}

} // namespace turan
