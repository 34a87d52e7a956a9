#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "turan/big_rational.hpp"
#include "turan/check_result.hpp"
#include "turan/sequence.hpp"
#include "turan/series.hpp"

namespace turan {

// ---- modified Bessel I_nu -------------------------------------------------

/// Largest u accepted by the Bessel routines before overflow_error.
inline constexpr double kBesselMaxU = 700.0;

/// I_nu(u) = (u/2)^nu f(nu+1, u^2/4) with f_n = 1. nu > -2, 0 <= u <= kBesselMaxU.
/// At u = 0 the value is 1 for nu = 0, 0 for nu > 0 or nu = -1, and +inf otherwise.
double bessel_i(double nu, double u);

/// I_nu(u)^2 - I_{nu+eps}(u) I_{nu-eps}(u), with its error bound. nu >= -1, nu - eps >= -2, eps >= 0.
TuranianValue bessel_turanian_detail(double nu, double epsilon, double u);
double bessel_turanian(double nu, double epsilon, double u);

/// (u/2)^{2nu} A_eps(nu+1) <= Delta_eps(nu, u) <= B_eps(nu+1) I_nu(u)^2, checked after
/// dividing out (u/2)^{2nu}. Id "bessel.i3_sandwich" when eps = 1, else "bessel.i2_sandwich".
CheckResult bessel_bounds_check(double nu, double epsilon, double u);

/// I_nu(u)^2 >= I_{nu+h}(u) I_{nu-h}(u).
CheckResult bessel_logconcavity_check(double nu, double h, double u);

/// The first m_max+1 Maclaurin coefficients of Delta_eps(nu, .) in powers of (u/2)^2, after
/// dividing out (u/2)^{2nu}, are all positive. Exact when nu+1-eps > 0, floating otherwise.
CheckResult bessel_coefficients_check(const BigRational& nu, const BigRational& epsilon, unsigned m_max = 30);

/// The same coefficients in floating point, each with the sum of absolute values of its terms.
struct FloatCoefficient {
  double value = 0.0;
  double scale = 0.0;
};
std::vector<FloatCoefficient> bessel_coefficients_float(double nu, double epsilon, unsigned m_max);

// ---- hypergeometric -------------------------------------------------------

struct HypergeometricParams {
  std::vector<double> upper;
  std::vector<double> lower;

  /// Throws DomainError if a lower parameter is a non-positive integer.
  void validate() const;
};

/// pFq(upper; lower; x). Needs p <= q, or p = q+1 with |x| < 1; DomainError otherwise.
SeriesValue pfq_series(const HypergeometricParams& params, double x);
double pfq(const HypergeometricParams& params, double x);

/// 1F1(a; b; x). DomainError when b is a non-positive integer.
double kummer(double a, double b, double x);
/// 1F1(a; b; x) / Gamma(b), entire in b.
double kummer_regularized(double a, double b, double x);
/// F'(a; b; x) = (a/b) F(a+1; b+1; x).
double kummer_derivative(double a, double b, double x);

struct KummerLogDerivBounds {
  double lower = 0.0;
  double upper = 0.0;
  /// b < a: the two roots swap roles.
  bool flipped = false;
  /// b = a: F = e^x, both bounds equal 1.
  bool degenerate = false;
  /// 0 < b < 1 and x below the larger zero of the second discriminant: the lower bound is 0.
  bool small_b_branch = false;
};

/// Bounds lower < F'/F < upper. a >= 1, b > 0, x > 0.
KummerLogDerivBounds kummer_logderiv_bounds(double a, double b, double x);
CheckResult kummer_logderiv_check(double a, double b, double x);

struct ContiguousResiduals {
  double r1 = 0.0, r2 = 0.0, r3 = 0.0;
  /// Largest term magnitude in each relation.
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
};

/// Left sides of
///   a F(a;b) - a F(a+1;b) + x F'(a;b) = 0,
///   a b F(a+1;b) - b(a+x) F(a;b) + (b-a) x F(a;b+1) = 0,
///   b(b-1)(F(a;b-1) - F(a;b)) - a x F(a+1;b+1) = 0.
ContiguousResiduals contiguous_residuals(double a, double b, double x);
inline constexpr double kContiguousTol = 1e-9;
/// All three residuals within `tol` of their scales; margin is the largest relative residual.
CheckResult kummer_contiguous_check(double a, double b, double x, double tol = kContiguousTol);

// ---- exponential remainder ------------------------------------------------

/// g_k = (eta)_k / k!.
CoefficientSequence exp_remainder_sequence(double eta);

/// R(x) = x^{nu+1} sum_k (eta)_k x^k / (Gamma(nu+2+k) k!). eta >= 1, nu > -2, x >= 0.
double exp_remainder(double eta, double nu, double x);

/// x^{2nu+2}/((nu+2)Gamma(nu+2)^2) <= R_nu^2 - R_{nu+1} R_{nu-1} <= R_nu^2/(nu+2),
/// checked after dividing out x^{2nu+2}. eta >= 1, nu >= -2, x >= 0.
CheckResult exp_remainder_turan_bounds(double eta, double nu, double x);

/// R_{nu+1} R_{nu+s} >= R_nu R_{nu+s+1}.
CheckResult exp_remainder_disc_wright(double eta, double nu, double s, double x);

// ---- symmetric chains -----------------------------------------------------

struct SymmetricChainReport {
  /// e_{q-j}(b) / e_{q-r-j}(a), j = 0..q-r.
  std::vector<double> ratios;
  bool satisfied = false;
  /// First j with ratios[j] > ratios[j+1].
  std::optional<std::size_t> violated_index;
};

/// e_k(x_1..x_n).
BigRational elementary_symmetric(const std::vector<BigRational>& xs, std::size_t k);

/// Throws PreconditionError unless a has q - r entries, 0 <= r <= q = b.size(), and all entries are positive.
SymmetricChainReport symmetric_chain_check(const std::vector<BigRational>& a, const std::vector<BigRational>& b,
                                           std::size_t r);

/// f_{n-1} f_{n+1} <= f_n^2 for 1 <= n <= n_max, f_n = prod (a_i)_n / prod (b_j)_n, exactly.
bool hyperterm_logconcavity(const std::vector<BigRational>& a, const std::vector<BigRational>& b,
                            std::size_t n_max);

// ---- parameter derivative -------------------------------------------------

/// h_k = (sum_{j<k} 1/(a+j)) (a)_k / k!, exactly.
std::vector<BigRational> param_derivative_weights(const BigRational& a, std::size_t k_max);
/// {h_k} as a coefficient sequence (one leading zero).
CoefficientSequence param_derivative_sequence(double a);

/// d/da [1F1(a; b; x) / Gamma(b)] = sum_k h_k x^k / Gamma(b+k). a >= 1, x >= 0.
double kummer_param_derivative(double a, double b, double x);

/// h_k^2 >= h_{k-1} h_{k+1} for k = 1..k_max, exactly; margin is the smallest relative gap.
CheckResult param_derivative_logconcavity(const BigRational& a, std::size_t k_max);

} // namespace turan
