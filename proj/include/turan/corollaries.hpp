#pragma once

#include "turan/check_result.hpp"
#include "turan/series.hpp"

namespace turan {

// Floating checks of the consequences of positive Turanian coefficients.
// Each returns a CheckResult whose params carry the given label plus the
// evaluation point. Precondition failures surface as exceptions.

/// Gamma(a+mu)Gamma(b+mu)/(Gamma(mu)Gamma(a+b+mu)) <= f(mu)f(a+b+mu)/(f(a+mu)f(b+mu)) <= 1, mu > 0.
CheckResult check_f_twosided(const CoefficientSequence& seq, const TuranianSpec& spec, double x);
/// phi(x) >= phi(0).
CheckResult check_phi_below(const CoefficientSequence& seq, const TuranianSpec& spec, double x);
/// A c_0^2 <= Delta_eps(mu, x) <= B f(mu, x)^2 (f-form).
CheckResult check_generalized_turanian(const CoefficientSequence& seq, double mu, double epsilon, double x);
/// phi(sqrt(xy)) <= sqrt(phi(x) phi(y)).
CheckResult check_mult_convex(const CoefficientSequence& seq, const TuranianSpec& spec, double x, double y);
/// (-1)^n Delta_h^n [t -> phi(1/t)](y) >= 0 for n = 1..order, h = y/4.
CheckResult check_complete_monotonicity(const CoefficientSequence& seq, const TuranianSpec& spec, double y,
                                        int order = 4);

/// mu/(beta+mu) <= g(mu)g(1+beta+mu)/(g(1+mu)g(beta+mu)) <= 1, mu > 0.
CheckResult check_g_twosided(const CoefficientSequence& seq, const TuranianSpec& spec, double x);
/// lambda(x) >= lambda(0).
CheckResult check_lambda_below(const CoefficientSequence& seq, const TuranianSpec& spec, double x);
/// g_0^2/(mu Gamma(mu)^2) <= g(mu)^2 - g(mu+1)g(mu-1) <= g(mu)^2/mu, mu > 0.
CheckResult check_turanian1(const CoefficientSequence& seq, double mu, double x);
/// g(mu+1)g(mu+s) >= g(mu)g(mu+s+1), s > 0.
CheckResult check_disc_wright(const CoefficientSequence& seq, double mu, double s, double x);

} // namespace turan
