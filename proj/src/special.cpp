#include "turan/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <stdexcept>
#include <string>

#include "turan/compensated.hpp"
#include "turan/corollaries.hpp"
#include "turan/errors.hpp"
#include "turan/exact.hpp"
#include "turan/gamma.hpp"

namespace turan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kMaxTerms = 200000;

const CoefficientSequence& ones() {
  static const CoefficientSequence s = CoefficientSequence::constant(BigRational(1), "bessel");
  return s;
}

/// Keep a helper's verdict but give it a new id and parameter list. Diagnostic
/// entries the helper appended (reason, first_nonpositive_m) are carried over.
CheckResult rebrand(CheckResult r, std::string id, Params params) {
  for (const auto& p : r.params)
    if (p.name == "reason" || p.name == "first_nonpositive_m") params.push_back(p);
  r.check_id = std::move(id);
  r.params = std::move(params);
  if (r.counterexample) r.counterexample->witness = r.params;
  return r;
}

/// lo <= v <= hi, accepting a shortfall within the error bound of v.
CheckResult sandwich(std::string id, Params params, double lo, const TuranianValue& v, double hi, std::string what) {
  CheckResult r = check_between(std::move(id), std::move(params), lo, v.value, hi, std::move(what));
  if (r.status == Status::fail) {
    const double slack = std::min(v.value - lo, hi - v.value);
    if (slack >= -v.error) {
      r.status = Status::pass;
      r.counterexample.reset();
    }
  }
  return r;
}

CheckResult nonneg(std::string id, Params params, const TuranianValue& t, std::string what) {
  const double margin = t.magnitude > 0.0 ? t.value / t.magnitude : t.value;
  const bool ok = margin >= -rel_tol() || t.value >= -t.error;
  return check_true(std::move(id), std::move(params), ok, margin, what + ": " + std::to_string(t.value));
}

/// Continues a series whose term ratio t_{k+1}/t_k is ratio(k), starting from term t at index k.
/// `limit` bounds the ratio for large k; `settle` is the index after which the ratio is taken as monotone.
template <class Ratio>
SeriesValue sum_by_ratio(double sum, double abs_sum, double t, std::size_t k, Ratio ratio, double limit,
                         std::size_t settle) {
  CompensatedSum acc;
  acc.add(sum);
  double tail = 0.0;
  for (;; ++k) {
    if (k >= kMaxTerms) throw NonConvergenceError("series: term cap reached");
    if (t == 0.0) break;
    const double r = ratio(k);
    const double next = t * r;
    if (next == 0.0) break;
    acc.add(next);
    abs_sum += std::fabs(next);
    t = next;
    if (k + 1 >= settle) {
      const double rho = std::max(std::fabs(r), limit);
      if (rho < 1.0) {
        const double bound = std::fabs(next) * rho / (1.0 - rho);
        if (bound <= 1e-16 * std::fabs(acc.value())) {
          tail = bound;
          ++k;
          break;
        }
      }
    }
  }
  SeriesValue v;
  v.value = acc.value();
  v.truncation_order = k;
  v.tail_bound = tail + 4.0 * double(k + 1) * kEps * abs_sum;
  return v;
}

std::size_t settle_index(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::fabs(v));
  for (double v : b) m = std::max(m, std::fabs(v));
  return static_cast<std::size_t>(std::ceil(m)) + 2;
}

void require(bool ok, const char* msg) {
  if (!ok) throw PreconditionError(msg);
}

} // namespace

// ---- Bessel ---------------------------------------------------------------

double bessel_i(double nu, double u) {
  require(nu > -2.0, "bessel_i: nu must be > -2");
  require(u >= 0.0, "bessel_i: u must be >= 0");
  if (u > kBesselMaxU) throw std::overflow_error("bessel_i: u beyond the supported range");
  if (u == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu > 0.0 || nu == -1.0) return 0.0;
    return kInf;
  }
  const double half = 0.5 * u;
  return std::pow(half, nu) * eval_f(ones(), nu + 1.0, half * half).value;
}

TuranianValue bessel_turanian_detail(double nu, double epsilon, double u) {
  require(nu >= -1.0, "bessel_turanian: nu must be >= -1");
  require(epsilon >= 0.0, "bessel_turanian: epsilon must be >= 0");
  require(nu - epsilon >= -2.0, "bessel_turanian: nu - epsilon must be >= -2");
  require(u >= 0.0, "bessel_turanian: u must be >= 0");
  if (u > kBesselMaxU) throw std::overflow_error("bessel_turanian: u beyond the supported range");
  if (epsilon == 0.0) return {};
  const double half = 0.5 * u;
  TuranianValue t = generalized_turanian(ones(), nu + 1.0, epsilon, half * half, SeriesForm::f);
  const double scale = std::pow(half, 2.0 * nu);
  if (t.value == 0.0 && std::isinf(scale)) return {};
  t.value *= scale;
  t.error *= scale;
  t.magnitude *= scale;
  return t;
}

double bessel_turanian(double nu, double epsilon, double u) { return bessel_turanian_detail(nu, epsilon, u).value; }

CheckResult bessel_bounds_check(double nu, double epsilon, double u) {
  require(nu >= -1.0 && nu - epsilon >= -2.0 && epsilon >= 0.0 && u >= 0.0,
          "bessel_bounds_check: need nu >= -1, nu - eps >= -2, eps >= 0, u >= 0");
  if (u > kBesselMaxU) throw std::overflow_error("bessel_bounds_check: u beyond the supported range");
  const double mu = nu + 1.0;
  const double x = 0.25 * u * u;
  Params p{{"nu", nu}, {"epsilon", epsilon}, {"u", u}};
  const TuranianValue d = generalized_turanian(ones(), mu, epsilon, x, SeriesForm::f);
  const double f = eval_f(ones(), mu, x).value;
  if (epsilon == 1.0) {
    const double r = recip_gamma(mu);
    const double lo = mu == 0.0 ? 0.0 : r * r / mu;
    const double hi = mu == 0.0 ? kInf : f * f / mu;
    return sandwich("bessel.i3_sandwich", std::move(p), lo, d, hi,
                    "1/((nu+1)Gamma(nu+1)^2) <= scaled Delta <= I^2/(nu+1)");
  }
  const TuranBounds k = turan_bound_constants(mu, epsilon);
  const double hi = std::isinf(k.B) ? k.B : k.B * f * f;
  return sandwich("bessel.i2_sandwich", std::move(p), k.A, d, hi, "A <= scaled Delta <= B I^2");
}

CheckResult bessel_logconcavity_check(double nu, double h, double u) {
  require(nu > -1.0 && h > 0.0 && h <= nu + 1.0, "bessel_logconcavity_check: need nu > -1, 0 < h <= nu + 1");
  return nonneg("bessel.log_concave_order", {{"nu", nu}, {"h", h}, {"u", u}}, bessel_turanian_detail(nu, h, u),
                "I_nu^2 - I_{nu+h} I_{nu-h}");
}

std::vector<FloatCoefficient> bessel_coefficients_float(double nu, double epsilon, unsigned m_max) {
  const double mu = nu + 1.0 - epsilon;
  std::vector<FloatCoefficient> out;
  for (unsigned m = 0; m <= m_max; ++m) {
    CompensatedSum s;
    double fk = 1.0;
    for (unsigned k = 0; k <= m; ++k) {
      if (k > 0) fk *= k;
      const double w = 1.0 / (fk * std::tgamma(double(m - k) + 1.0));
      const double dk = k, dmk = double(m - k);
      s.add(w * recip_gamma(dk + mu + epsilon) * recip_gamma(dmk + mu + epsilon));
      s.add(-w * recip_gamma(dmk + mu) * recip_gamma(dk + mu + 2.0 * epsilon));
    }
    out.push_back({s.value(), s.abs_sum()});
  }
  return out;
}

namespace {

BigRational recip_gamma_int(long n) { return n <= 0 ? BigRational(0) : BigRational(1) / factorial_rational(unsigned(n - 1)); }

/// nu = -1, 0 < eps <= 1: c_m = A_m - s B_m with s = sin(pi eps)/pi and A_m, B_m rational,
/// from 1/(Gamma(k+eps)Gamma(j-eps)) = s (-eps) / ((eps)_k (-eps)_j). At eps = 1 take s = 1, B_m direct.
CheckResult bessel_edge_coefficients(const BigRational& eps, unsigned m_max, Params p) {
  const bool integral = eps == BigRational(1);
  const double s = integral ? 1.0 : std::sin(kPi * eps.to_double()) / kPi;
  double margin = kInf;
  for (unsigned m = 0; m <= m_max; ++m) {
    BigRational A(0), B(0);
    for (unsigned k = 0; k <= m; ++k) {
      const unsigned j = m - k;
      const BigRational w = BigRational(1) / (factorial_rational(k) * factorial_rational(j));
      A += w * recip_gamma_int(long(k)) * recip_gamma_int(long(j));
      if (integral)
        B += w * recip_gamma_int(long(k) + 1) * recip_gamma_int(long(j) - 1);
      else
        B += w * (-eps) / (pochhammer_rational(eps, k) * pochhammer_rational(-eps, j));
    }
    const double a = A.to_double(), sb = s * B.to_double();
    const double scale = std::fabs(a) + std::fabs(sb);
    // s is transcendental for non-integral rational eps, so c_m = 0 exactly iff A = B = 0
    const bool zero = A.sign() == 0 && B.sign() == 0;
    const double v = a - sb;
    if (!zero && v > 1e-14 * scale) {
      margin = std::min(margin, v / scale);
      continue;
    }
    p.push_back({"first_nonpositive_m", std::int64_t(m)});
    if (!zero && std::fabs(v) <= 1e-14 * scale) return make_skipped("bessel.coefficients", p, "sign undetermined");
    const std::string what = zero ? "coefficient " + std::to_string(m) + " = 0 exactly"
                                  : "coefficient " + std::to_string(m) + " = " + std::to_string(v);
    return CheckResult{"bessel.coefficients", p, Status::fail, zero ? Margin{BigRational(0)} : Margin{v / scale},
                       Counterexample{p, what}};
  }
  return CheckResult{"bessel.coefficients", p, Status::pass, margin, std::nullopt};
}

} // namespace

CheckResult bessel_coefficients_check(const BigRational& nu, const BigRational& epsilon, unsigned m_max) {
  const BigRational one(1);
  require(nu >= -one, "bessel_coefficients_check: nu must be >= -1");
  require(epsilon.sign() > 0, "bessel_coefficients_check: epsilon must be > 0");
  require(nu - epsilon >= BigRational(-2), "bessel_coefficients_check: nu - epsilon must be >= -2");
  const BigRational mu = nu + one - epsilon;
  const bool exact = mu.sign() > 0;
  const bool edge = nu == -one;
  Params p{{"nu", nu}, {"epsilon", epsilon}, {"m_max", std::int64_t(m_max)},
           {"path", std::string(exact ? "exact" : edge ? "reflection" : "floating")}};
  if (epsilon > one) p.push_back({"regime", std::string("eps_gt_1")});
  if (exact) return rebrand(phi_positivity_exact(ones(), mu, epsilon, epsilon, m_max), "bessel.coefficients", p);
  if (edge) return bessel_edge_coefficients(epsilon, m_max, std::move(p));

  const auto c = bessel_coefficients_float(nu.to_double(), epsilon.to_double(), m_max);
  double margin = kInf;
  for (std::size_t m = 0; m < c.size(); ++m) {
    const double err = 1e-13 * c[m].scale;
    const double rel = c[m].scale > 0.0 ? c[m].value / c[m].scale : 0.0;
    margin = std::min(margin, rel);
    if (c[m].value > err) continue;
    p.push_back({"first_nonpositive_m", std::int64_t(m)});
    if (c[m].value >= -err && c[m].scale > 0.0) return make_skipped("bessel.coefficients", p, "sign undetermined");
    return CheckResult{"bessel.coefficients", p, Status::fail, rel,
                       Counterexample{p, "coefficient " + std::to_string(m) + " = " + std::to_string(c[m].value)}};
  }
  return CheckResult{"bessel.coefficients", p, Status::pass, margin, std::nullopt};
}

// ---- hypergeometric -------------------------------------------------------

void HypergeometricParams::validate() const {
  for (double b : lower)
    if (is_nonpositive_integer(b)) throw DomainError("pfq: lower parameter at a pole");
}

SeriesValue pfq_series(const HypergeometricParams& params, double x) {
  params.validate();
  const std::size_t p = params.upper.size(), q = params.lower.size();
  if (p > q + 1) throw DomainError("pfq: divergent for p > q + 1");
  if (p == q + 1 && !(std::fabs(x) < 1.0)) throw DomainError("pfq: |x| must be < 1 when p = q + 1");
  if (x == 0.0) return {1.0, 0, 0.0};
  const double limit = p == q + 1 ? std::fabs(x) : 0.0;
  const auto ratio = [&](std::size_t n) {
    const double dn = double(n);
    double r = x / (dn + 1.0);
    for (double a : params.upper) r *= a + dn;
    for (double b : params.lower) r /= b + dn;
    return r;
  };
  return sum_by_ratio(1.0, 1.0, 1.0, 0, ratio, limit, settle_index(params.upper, params.lower));
}

double pfq(const HypergeometricParams& params, double x) { return pfq_series(params, x).value; }

double kummer(double a, double b, double x) {
  if (is_nonpositive_integer(b)) throw DomainError("kummer: b is a non-positive integer");
  // e^x F(b-a; b; -x) keeps the series positive for x < 0
  if (x < 0.0) return std::exp(x) * pfq({{b - a}, {b}}, -x);
  return pfq({{a}, {b}}, x);
}

double kummer_regularized(double a, double b, double x) {
  if (x < 0.0) return std::exp(x) * kummer_regularized(b - a, b, -x);
  if (x == 0.0) return recip_gamma(b);
  // direct terms while b + k < 1, where 1/Gamma may vanish; the ratio recursion afterwards
  CompensatedSum s;
  double t = 0.0, fact = 1.0, poch = 1.0, pw = 1.0;
  std::size_t k = 0;
  for (;; ++k) {
    if (k > 0) {
      fact *= double(k);
      poch *= a + double(k - 1);
      pw *= x;
    }
    t = poch * pw / fact * recip_gamma(b + double(k));
    if (b + double(k) >= 1.0) break;
    s.add(t);
    if (k >= kMaxTerms) throw NonConvergenceError("kummer_regularized: term cap reached");
  }
  const double head = s.value();
  const auto ratio = [&](std::size_t n) { return (a + double(n)) * x / ((double(n) + 1.0) * (b + double(n))); };
  return sum_by_ratio(head + t, s.abs_sum() + std::fabs(t), t, k, ratio, 0.0, settle_index({a}, {b})).value;
}

double kummer_derivative(double a, double b, double x) { return a / b * kummer(a + 1.0, b + 1.0, x); }

KummerLogDerivBounds kummer_logderiv_bounds(double a, double b, double x) {
  require(a >= 1.0 && b > 0.0 && x > 0.0, "kummer_logderiv_bounds: need a >= 1, b > 0, x > 0");
  KummerLogDerivBounds r;
  if (a == b) {
    r.lower = r.upper = 1.0;
    r.degenerate = true;
    return r;
  }
  const double c = x + 1.0 - b;
  const double k1 = a - 1.0, k2 = a * (b - 1.0) / b;
  // larger root of x y^2 - c y - k = 0, without cancellation when c < 0
  const auto big_root = [&](double k) {
    const double d = std::sqrt(c * c + 4.0 * x * k);
    return c >= 0.0 ? (c + d) / (2.0 * x) : 2.0 * k / (d - c);
  };
  const double L1 = big_root(k1);
  if (b > a) {
    r.lower = L1;
    r.upper = big_root(k2);
    return r;
  }
  r.flipped = true;
  if (b >= 1.0) {
    r.lower = big_root(k2);
    r.upper = L1;
    return r;
  }
  const double s = (1.0 - b) * (2.0 * a / b - 1.0);
  const double x2 = s + std::sqrt(s * s - (1.0 - b) * (1.0 - b));
  const double x1 = (1.0 - b) * (1.0 - b) / x2;
  if (x > x2) {
    r.lower = big_root(k2);
    r.upper = L1;
    return r;
  }
  r.small_b_branch = true;
  r.lower = 0.0;
  r.upper = L1;
  if (x < x1) {
    const double d2 = c * c + 4.0 * x * k2;
    const double small = -2.0 * k2 / (c + std::sqrt(d2));
    r.upper = std::min(L1, small);
  }
  return r;
}

CheckResult kummer_logderiv_check(double a, double b, double x) {
  const KummerLogDerivBounds k = kummer_logderiv_bounds(a, b, x);
  const double ratio = kummer_derivative(a, b, x) / kummer(a, b, x);
  Params p{{"a", a}, {"b", b}, {"x", x}};
  if (k.flipped) p.push_back({"orientation", std::string("flipped")});
  if (k.small_b_branch) p.push_back({"branch", std::string("small_b")});
  if (k.degenerate) p.push_back({"orientation", std::string("degenerate")});
  return check_between("kummer.logderiv_bounds", std::move(p), k.lower, ratio, k.upper, "lower < F'/F < upper");
}

ContiguousResiduals contiguous_residuals(double a, double b, double x) {
  const double F = kummer(a, b, x);
  const double Fa = kummer(a + 1.0, b, x);
  const double Fb = kummer(a, b + 1.0, x);
  const double Fab = kummer(a + 1.0, b + 1.0, x);
  const double Fp = a / b * Fab;
  ContiguousResiduals r;
  const auto mx = [](std::initializer_list<double> v) {
    double m = 0.0;
    for (double t : v) m = std::max(m, std::fabs(t));
    return m;
  };

  r.r1 = a * F - a * Fa + x * Fp;
  r.s1 = mx({a * F, a * Fa, x * Fp});

  r.r2 = a * b * Fa - b * (a + x) * F + (b - a) * x * Fb;
  r.s2 = mx({a * b * Fa, b * (a + x) * F, (b - a) * x * Fb});

  // b(b-1)F(a;b-1) = b Gamma(b) F~(a;b-1) stays finite at b = 1
  const double t1 = is_nonpositive_integer(b - 1.0) ? b * gamma_fn(b) * kummer_regularized(a, b - 1.0, x)
                                                    : b * (b - 1.0) * kummer(a, b - 1.0, x);
  const double t2 = b * (b - 1.0) * F, t3 = a * x * Fab;
  r.r3 = t1 - t2 - t3;
  r.s3 = mx({t1, t2, t3});
  return r;
}

CheckResult kummer_contiguous_check(double a, double b, double x, double tol) {
  const ContiguousResiduals r = contiguous_residuals(a, b, x);
  const auto rel = [](double v, double s) { return s > 0.0 ? std::fabs(v) / s : std::fabs(v); };
  const double worst = std::max({rel(r.r1, r.s1), rel(r.r2, r.s2), rel(r.r3, r.s3)});
  return check_true("kummer.contiguous", {{"a", a}, {"b", b}, {"x", x}}, worst <= tol, worst,
                    "largest relative residual " + std::to_string(worst));
}

// ---- exponential remainder ------------------------------------------------

CoefficientSequence exp_remainder_sequence(double eta) {
  if (eta == 1.0) return CoefficientSequence::constant(BigRational(1), "(1)_k/k!");
  return CoefficientSequence::from_generator(
      [eta](std::size_t k) {
        double t = 1.0;
        for (std::size_t j = 0; j < k; ++j) t *= (eta + double(j)) / double(j + 1);
        return t;
      },
      std::nullopt, "(eta)_k/k!");
}

double exp_remainder(double eta, double nu, double x) {
  require(eta >= 1.0, "exp_remainder: eta must be >= 1");
  require(nu > -2.0, "exp_remainder: nu must be > -2");
  require(x >= 0.0, "exp_remainder: x must be >= 0");
  if (x == 0.0) {
    if (nu > -1.0) return 0.0;
    if (nu == -1.0) return 1.0;
    return kInf;
  }
  return std::pow(x, nu + 1.0) * eval_g(exp_remainder_sequence(eta), nu + 2.0, x).value;
}

CheckResult exp_remainder_turan_bounds(double eta, double nu, double x) {
  require(eta >= 1.0, "exp_remainder_turan_bounds: eta must be >= 1");
  require(nu >= -2.0 && x >= 0.0, "exp_remainder_turan_bounds: need nu >= -2, x >= 0");
  const auto seq = exp_remainder_sequence(eta);
  const double mu = nu + 2.0;
  const TuranianValue d = generalized_turanian(seq, mu, 1.0, x, SeriesForm::g);
  const double g = eval_g(seq, mu, x).value;
  const double r = recip_gamma(mu);
  const double lo = mu == 0.0 ? 0.0 : r * r / mu;
  const double hi = mu == 0.0 ? kInf : g * g / mu;
  return sandwich("example2.turan_bounds", {{"eta", eta}, {"nu", nu}, {"x", x}}, lo, d, hi,
                  "x^{2nu+2}/((nu+2)Gamma(nu+2)^2) <= R^2 - R+ R- <= R^2/(nu+2), scaled");
}

CheckResult exp_remainder_disc_wright(double eta, double nu, double s, double x) {
  require(eta >= 1.0, "exp_remainder_disc_wright: eta must be >= 1");
  return rebrand(check_disc_wright(exp_remainder_sequence(eta), nu + 2.0, s, x), "example2.disc_wright",
                 {{"eta", eta}, {"nu", nu}, {"s", s}, {"x", x}});
}

// ---- symmetric chains -----------------------------------------------------

BigRational elementary_symmetric(const std::vector<BigRational>& xs, std::size_t k) {
  if (k > xs.size()) return BigRational(0);
  std::vector<BigRational> e(k + 1, BigRational(0));
  e[0] = BigRational(1);
  for (const auto& v : xs)
    for (std::size_t j = k; j >= 1; --j) e[j] += v * e[j - 1];
  return e[k];
}

SymmetricChainReport symmetric_chain_check(const std::vector<BigRational>& a, const std::vector<BigRational>& b,
                                           std::size_t r) {
  const std::size_t q = b.size();
  if (q < 1 || r > q || a.size() != q - r)
    throw PreconditionError("symmetric_chain_check: arity mismatch, need 0 <= r <= q = |b| and |a| = q - r");
  for (const auto& v : a) require(v.sign() > 0, "symmetric_chain_check: parameters must be positive");
  for (const auto& v : b) require(v.sign() > 0, "symmetric_chain_check: parameters must be positive");
  std::vector<BigRational> exact;
  for (std::size_t j = 0; j <= q - r; ++j)
    exact.push_back(elementary_symmetric(b, q - j) / elementary_symmetric(a, q - r - j));
  SymmetricChainReport rep;
  for (const auto& v : exact) rep.ratios.push_back(v.to_double());
  for (std::size_t j = 0; j + 1 < exact.size(); ++j)
    if (exact[j] > exact[j + 1]) {
      rep.violated_index = j;
      break;
    }
  rep.satisfied = !rep.violated_index;
  return rep;
}

bool hyperterm_logconcavity(const std::vector<BigRational>& a, const std::vector<BigRational>& b,
                            std::size_t n_max) {
  for (const auto& v : a) require(v.sign() > 0, "hyperterm_logconcavity: parameters must be positive");
  for (const auto& v : b) require(v.sign() > 0, "hyperterm_logconcavity: parameters must be positive");
  std::vector<BigRational> f{BigRational(1)};
  for (std::size_t n = 0; n <= n_max; ++n) {
    BigRational next = f.back();
    const BigRational dn(static_cast<long>(n));
    for (const auto& v : a) next *= v + dn;
    for (const auto& v : b) next /= v + dn;
    f.push_back(next);
  }
  for (std::size_t n = 1; n <= n_max; ++n)
    if (f[n - 1] * f[n + 1] > f[n] * f[n]) return false;
  return true;
}

// ---- parameter derivative -------------------------------------------------

std::vector<BigRational> param_derivative_weights(const BigRational& a, std::size_t k_max) {
  std::vector<BigRational> h{BigRational(0)};
  BigRational harmonic(0), poch(1);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const BigRational shift = a + BigRational(static_cast<long>(k - 1));
    harmonic += shift.inverse();
    poch *= shift / BigRational(static_cast<long>(k));
    h.push_back(harmonic * poch);
  }
  return h;
}

CoefficientSequence param_derivative_sequence(double a) {
  return CoefficientSequence::from_generator(
      [a](std::size_t k) {
        double harmonic = 0.0, poch = 1.0;
        for (std::size_t j = 0; j < k; ++j) {
          harmonic += 1.0 / (a + double(j));
          poch *= (a + double(j)) / double(j + 1);
        }
        return harmonic * poch;
      },
      std::nullopt, "h_k");
}

double kummer_param_derivative(double a, double b, double x) {
  require(a >= 1.0, "kummer_param_derivative: a must be >= 1");
  require(x >= 0.0, "kummer_param_derivative: x must be >= 0");
  if (x == 0.0) return 0.0;
  return eval_g(param_derivative_sequence(a), b, x).value;
}

CheckResult param_derivative_logconcavity(const BigRational& a, std::size_t k_max) {
  Params p{{"a", a}, {"k_max", std::int64_t(k_max)}};
  require(a.sign() > 0, "param_derivative_logconcavity: a must be > 0");
  const auto h = param_derivative_weights(a, k_max + 1);
  std::optional<BigRational> margin;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const BigRational sq = h[k] * h[k];
    const BigRational gap = sq - h[k - 1] * h[k + 1];
    const BigRational rel = gap / sq;
    if (!margin || rel < *margin) margin = rel;
    if (gap.sign() > 0) continue;
    p.push_back({"k", std::int64_t(k)});
    if (a < BigRational(1)) {
      CheckResult r = make_hypothesis_violation("example5.h_logconcave", p, "a < 1");
      r.margin = rel;
      return r;
    }
    return CheckResult{"example5.h_logconcave", p, Status::fail, rel,
                       Counterexample{p, "h_k^2 - h_{k-1}h_{k+1} = " + gap.to_string()}};
  }
  return CheckResult{"example5.h_logconcave", p, Status::pass, margin ? Margin(*margin) : Margin{}, std::nullopt};
}

} // namespace turan
