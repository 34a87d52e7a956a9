#pragma once

#include "turan/errors.hpp"

namespace turan {

/// A gamma-function argument tagged with whether it sits on a pole.
struct GammaArgument {
  double value = 1.0;
  bool pole = false;

  static GammaArgument of(double x);
};

bool is_nonpositive_integer(double x);

/// log Gamma(x) for x > 0.
double ln_gamma(double x);

/// Gamma(x) for 0 < x <= 171.6 (Lanczos, g = 7).
double gamma_fn(double x);

/// 1/Gamma(x), entire. Exactly 0 at x = 0, -1, -2, ...; negative on (-1, 0).
double recip_gamma(double x);
double recip_gamma(const GammaArgument& arg);

/// psi(x) = d/dx log Gamma(x) for x > 0.
double digamma(double x);

/// Rising factorial (x)_n; (x)_0 = 1.
double pochhammer(double x, unsigned n);

/// Gamma(x + alpha) / Gamma(x) through the log-gamma difference.
double gamma_ratio(double x, double alpha);

} // namespace turan
