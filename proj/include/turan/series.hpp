#pragma once

#include <cstddef>
#include <vector>

#include "turan/sequence.hpp"

namespace turan {

/// f-form: sum c_n x^n / (n! Gamma(mu+n)).  g-form: sum c_n x^n / Gamma(mu+n).
enum class SeriesForm { f, g };

const char* to_string(SeriesForm form);

struct SeriesValue {
  double value = 0.0;
  std::size_t truncation_order = 0;
  /// Bound on |value - true sum|: geometric tail plus rounding allowance.
  double tail_bound = 0.0;
};

struct SeriesOptions {
  std::size_t max_terms = 10000;
  /// Stop once |term| < rel_stop * |partial sum| and the term ratio is below 1/2.
  double rel_stop = 1e-16;
  /// Recursion and accumulation in double-double.
  bool double_double = false;
};

/// Sum of a series in either form. Accepts negative x (used for 1F1 contiguity
/// tests); the tail bound is then only heuristic.
SeriesValue eval_series(SeriesForm form, const CoefficientSequence& seq, double mu, double x,
                        const SeriesOptions& opts = {});

/// f(mu, x); x >= 0.
SeriesValue eval_f(const CoefficientSequence& seq, double mu, double x, const SeriesOptions& opts = {});
/// g(mu, x); x >= 0.
SeriesValue eval_g(const CoefficientSequence& seq, double mu, double x, const SeriesOptions& opts = {});

/// One Turan-type inequality instance.
///
/// f-form: phi = f(mu+a) f(mu+b) - f(mu+a+b) f(mu), needs mu >= -1, a,b > 0, mu+a, mu+b >= 0.
/// g-form: lambda = g(mu+1) g(mu+beta) - g(mu) g(mu+beta+1), needs mu >= -1, beta > 0, mu+beta >= 0.
struct TuranianSpec {
  SeriesForm form = SeriesForm::f;
  double mu = 1.0;
  double a = 1.0;
  double b = 1.0;
  double beta = 1.0;

  static TuranianSpec f_form(double mu, double a, double b);
  static TuranianSpec g_form(double mu, double beta);

  bool mu_plus_a_nonneg() const { return mu + a >= 0.0; }
  bool mu_plus_b_nonneg() const { return mu + b >= 0.0; }
  bool mu_plus_beta_nonneg() const { return mu + beta >= 0.0; }

  /// Throws PreconditionError when the theorem's hypotheses on the parameters fail.
  void validate() const;
};

/// A product difference with a propagated error bound.
struct TuranianValue {
  double value = 0.0;
  double error = 0.0;
  /// Larger of the two products; the scale against which cancellation is judged.
  double magnitude = 0.0;
  bool recomputed_double_double = false;
};

std::vector<double> phi_coefficients(const CoefficientSequence& seq, double mu, double a, double b,
                                     std::size_t m_max);
std::vector<double> lambda_coefficients(const CoefficientSequence& seq, double mu, double beta, std::size_t m_max);

TuranianValue eval_phi(const CoefficientSequence& seq, const TuranianSpec& spec, double x,
                       const SeriesOptions& opts = {});
TuranianValue eval_lambda(const CoefficientSequence& seq, const TuranianSpec& spec, double x,
                          const SeriesOptions& opts = {});

/// F(mu)^2 - F(mu+eps) F(mu-eps) with F the series of the given form.
/// Needs mu >= 0, mu - eps >= -1, eps >= 0, x >= 0.
TuranianValue generalized_turanian(const CoefficientSequence& seq, double mu, double epsilon, double x,
                                   SeriesForm form, const SeriesOptions& opts = {});

struct TuranBounds {
  double A = 0.0;
  double B = 0.0;
};

/// Constants with A c_0^2 <= Delta_eps(mu, x) <= B f(mu, x)^2.
/// A = 1/Gamma(mu)^2 - 1/(Gamma(mu-eps) Gamma(mu+eps)); B = 1 - Gamma(mu)^2/(Gamma(mu-eps) Gamma(mu+eps)),
/// infinite at mu = 0.
TuranBounds turan_bound_constants(double mu, double epsilon);

} // namespace turan
