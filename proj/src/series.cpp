#include "turan/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

#include "turan/compensated.hpp"
#include "turan/errors.hpp"
#include "turan/gamma.hpp"

namespace turan {

const char* to_string(SeriesForm form) { return form == SeriesForm::f ? "f" : "g"; }

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct SeriesSum {
  DoubleDouble sum;
  std::size_t order = 0;
  double tail = 0.0;
};

double hi_of(double v) { return v; }
double hi_of(const DoubleDouble& v) { return v.value(); }

template <class Num>
SeriesSum sum_impl(SeriesForm form, const CoefficientSequence& seq, double mu, double x, const SeriesOptions& opts) {
  if (!std::isfinite(mu) || !std::isfinite(x)) throw PreconditionError("series: non-finite mu or x");
  SeriesSum out;
  if (x == 0.0) {
    out.sum = {seq[0] * recip_gamma(mu), 0.0};
    return out;
  }

  // below this index mu+n < 1 and the weights come straight from recip_gamma
  std::size_t n_direct = 0;
  while (mu + static_cast<double>(n_direct) < 1.0 && n_direct < opts.max_terms) ++n_direct;

  const auto& flags = seq.flags();
  const auto len = seq.length();
  Num w{};
  double power = 1.0; // x^n, or x^n / n! in f-form, while n <= n_direct
  Num sum{};
  CompensatedSum plain;
  double abs_sum = 0.0;
  double prev_abs = 0.0;
  bool started = false;

  for (std::size_t n = 0;; ++n) {
    if (n >= opts.max_terms)
      throw NonConvergenceError("series did not settle within " + std::to_string(opts.max_terms) + " terms (mu=" +
                                std::to_string(mu) + ", x=" + std::to_string(x) + ")");
    if (len && n >= *len) {
      out.order = n;
      out.tail = 0.0;
      break;
    }
    const double dn = static_cast<double>(n);
    if (n <= n_direct) {
      if (n > 0) power *= form == SeriesForm::f ? x / dn : x;
      w = Num(power) * recip_gamma(mu + dn);
    } else {
      const double den = form == SeriesForm::f ? dn * (mu + dn - 1.0) : mu + dn - 1.0;
      w = w * x / den;
    }
    const double c = seq[n];
    const Num t = w * c;
    if constexpr (std::is_same_v<Num, double>)
      plain.add(t);
    else
      sum = sum + t;
    const double at = std::fabs(hi_of(t));
    abs_sum += at;

    if (c == 0.0 && started && flags.no_internal_zeros) {
      out.order = n;
      out.tail = 0.0;
      break;
    }
    if (started && prev_abs > 0.0) {
      const double rho = at / prev_abs;
      const double partial = std::is_same_v<Num, double> ? plain.value() : hi_of(sum);
      if (at <= opts.rel_stop * std::fabs(partial) && rho < 0.5) {
        out.order = n;
        out.tail = at * rho / (1.0 - rho);
        break;
      }
    }
    if (at > 0.0) started = true;
    prev_abs = at;
  }

  if constexpr (std::is_same_v<Num, double>)
    out.sum = plain.dd();
  else
    out.sum = sum;
  // every weight carries O(n) roundings from the recursion
  out.tail += 4.0 * static_cast<double>(out.order + 1) * kEps * abs_sum;
  return out;
}

SeriesSum sum_series(SeriesForm form, const CoefficientSequence& seq, double mu, double x,
                     const SeriesOptions& opts) {
  return opts.double_double ? sum_impl<DoubleDouble>(form, seq, mu, x, opts)
                            : sum_impl<double>(form, seq, mu, x, opts);
}

void require_nonneg_x(double x, const char* who) {
  if (!(x >= 0.0)) throw PreconditionError(std::string(who) + ": x must be non-negative");
}

/// A*B - C*D with all four factors summed under `opts`.
TuranianValue product_difference(SeriesForm form, const CoefficientSequence& seq, double mu_a, double mu_b,
                                 double mu_c, double mu_d, double x, const SeriesOptions& opts) {
  const auto eval = [&](const SeriesOptions& o) {
    const SeriesSum A = sum_series(form, seq, mu_a, x, o);
    const SeriesSum B = mu_b == mu_a ? A : sum_series(form, seq, mu_b, x, o);
    const SeriesSum C = sum_series(form, seq, mu_c, x, o);
    const SeriesSum D = mu_d == mu_c ? C : sum_series(form, seq, mu_d, x, o);
    const DoubleDouble p = A.sum * B.sum;
    const DoubleDouble q = C.sum * D.sum;
    TuranianValue r;
    r.value = (p - q).value();
    const double a = std::fabs(A.sum.value()), b = std::fabs(B.sum.value());
    const double c = std::fabs(C.sum.value()), d = std::fabs(D.sum.value());
    r.magnitude = std::max(a * b, c * d);
    r.error = a * B.tail + b * A.tail + A.tail * B.tail + c * D.tail + d * C.tail + C.tail * D.tail +
              kEps * std::fabs(r.value);
    return r;
  };
  TuranianValue r = eval(opts);
  if (!opts.double_double && std::fabs(r.value) < 1e3 * kEps * r.magnitude) {
    SeriesOptions dd = opts;
    dd.double_double = true;
    r = eval(dd);
    r.recomputed_double_double = true;
  }
  return r;
}

} // namespace

SeriesValue eval_series(SeriesForm form, const CoefficientSequence& seq, double mu, double x,
                        const SeriesOptions& opts) {
  const SeriesSum s = sum_series(form, seq, mu, x, opts);
  return {s.sum.value(), s.order, s.tail};
}

SeriesValue eval_f(const CoefficientSequence& seq, double mu, double x, const SeriesOptions& opts) {
  require_nonneg_x(x, "eval_f");
  if (!seq.flags().non_negative) throw PreconditionError("eval_f: coefficients must be non-negative");
  return eval_series(SeriesForm::f, seq, mu, x, opts);
}

SeriesValue eval_g(const CoefficientSequence& seq, double mu, double x, const SeriesOptions& opts) {
  require_nonneg_x(x, "eval_g");
  if (!seq.flags().non_negative) throw PreconditionError("eval_g: coefficients must be non-negative");
  return eval_series(SeriesForm::g, seq, mu, x, opts);
}

TuranianSpec TuranianSpec::f_form(double mu, double a, double b) {
  TuranianSpec s;
  s.form = SeriesForm::f;
  s.mu = mu;
  s.a = a;
  s.b = b;
  return s;
}

TuranianSpec TuranianSpec::g_form(double mu, double beta) {
  TuranianSpec s;
  s.form = SeriesForm::g;
  s.mu = mu;
  s.beta = beta;
  return s;
}

void TuranianSpec::validate() const {
  if (!std::isfinite(mu) || mu < -1.0) throw PreconditionError("TuranianSpec: mu must be >= -1");
  if (form == SeriesForm::f) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
      throw PreconditionError("TuranianSpec: a and b must be positive");
    if (!mu_plus_a_nonneg() || !mu_plus_b_nonneg()) throw PreconditionError("TuranianSpec: mu+a and mu+b must be >= 0");
  } else {
    if (!(beta > 0.0) || !std::isfinite(beta)) throw PreconditionError("TuranianSpec: beta must be positive");
    if (!mu_plus_beta_nonneg()) throw PreconditionError("TuranianSpec: mu+beta must be >= 0");
  }
}

std::vector<double> phi_coefficients(const CoefficientSequence& seq, double mu, double a, double b,
                                     std::size_t m_max) {
  TuranianSpec::f_form(mu, a, b).validate();
  const std::size_t n = m_max + 1;
  std::vector<double> c(n), inv_fact(n), rg_mu(n), rg_a(n), rg_b(n), rg_ab(n);
  double f = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double dk = static_cast<double>(k);
    if (k > 0) f /= dk;
    inv_fact[k] = f;
    c[k] = seq[k];
    rg_mu[k] = recip_gamma(mu + dk);
    rg_a[k] = recip_gamma(mu + a + dk);
    rg_b[k] = recip_gamma(mu + b + dk);
    rg_ab[k] = recip_gamma(mu + a + b + dk);
  }
  std::vector<double> out(n);
  for (std::size_t m = 0; m < n; ++m) {
    CompensatedSum s;
    for (std::size_t k = 0; k <= m; ++k) {
      const double w = c[k] * c[m - k] * inv_fact[k] * inv_fact[m - k];
      if (w == 0.0) continue;
      s.add(w * rg_a[k] * rg_b[m - k]);
      s.add(-w * rg_mu[m - k] * rg_ab[k]);
    }
    out[m] = s.value();
  }
  return out;
}

std::vector<double> lambda_coefficients(const CoefficientSequence& seq, double mu, double beta, std::size_t m_max) {
  TuranianSpec::g_form(mu, beta).validate();
  const std::size_t n = m_max + 1;
  std::vector<double> c(n), rg_mu(n), rg_mu1(n), rg_b(n), rg_b1(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double dk = static_cast<double>(k);
    c[k] = seq[k];
    rg_mu[k] = recip_gamma(mu + dk);
    rg_mu1[k] = recip_gamma(mu + 1.0 + dk);
    rg_b[k] = recip_gamma(mu + beta + dk);
    rg_b1[k] = recip_gamma(mu + beta + 1.0 + dk);
  }
  std::vector<double> out(n);
  for (std::size_t m = 0; m < n; ++m) {
    CompensatedSum s;
    for (std::size_t k = 0; k <= m; ++k) {
      const double w = c[k] * c[m - k];
      if (w == 0.0) continue;
      s.add(w * rg_mu1[k] * rg_b[m - k]);
      s.add(-w * rg_mu[k] * rg_b1[m - k]);
    }
    out[m] = s.value();
  }
  return out;
}

TuranianValue eval_phi(const CoefficientSequence& seq, const TuranianSpec& spec, double x, const SeriesOptions& opts) {
  if (spec.form != SeriesForm::f) throw PreconditionError("eval_phi: spec must be f-form");
  spec.validate();
  require_nonneg_x(x, "eval_phi");
  return product_difference(SeriesForm::f, seq, spec.mu + spec.a, spec.mu + spec.b, spec.mu + spec.a + spec.b,
                            spec.mu, x, opts);
}

TuranianValue eval_lambda(const CoefficientSequence& seq, const TuranianSpec& spec, double x,
                          const SeriesOptions& opts) {
  if (spec.form != SeriesForm::g) throw PreconditionError("eval_lambda: spec must be g-form");
  spec.validate();
  require_nonneg_x(x, "eval_lambda");
  return product_difference(SeriesForm::g, seq, spec.mu + 1.0, spec.mu + spec.beta, spec.mu,
                            spec.mu + spec.beta + 1.0, x, opts);
}

TuranianValue generalized_turanian(const CoefficientSequence& seq, double mu, double epsilon, double x,
                                   SeriesForm form, const SeriesOptions& opts) {
  if (!(mu >= 0.0)) throw PreconditionError("generalized_turanian: mu must be >= 0");
  if (!(epsilon >= 0.0)) throw PreconditionError("generalized_turanian: epsilon must be >= 0");
  if (!(mu - epsilon >= -1.0)) throw PreconditionError("generalized_turanian: mu - epsilon must be >= -1");
  require_nonneg_x(x, "generalized_turanian");
  if (epsilon == 0.0) return {};
  return product_difference(form, seq, mu, mu, mu + epsilon, mu - epsilon, x, opts);
}

TuranBounds turan_bound_constants(double mu, double epsilon) {
  if (!(mu >= 0.0)) throw PreconditionError("turan_bound_constants: mu must be >= 0");
  if (!(epsilon >= 0.0) || !(mu - epsilon >= -1.0))
    throw PreconditionError("turan_bound_constants: need epsilon >= 0 and mu - epsilon >= -1");
  const double r = recip_gamma(mu);
  const double prod = recip_gamma(mu - epsilon) * recip_gamma(mu + epsilon);
  TuranBounds t;
  t.A = r * r - prod;
  t.B = mu == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 - prod / (r * r);
  return t;
}

} // namespace turan
