#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "turan/big_rational.hpp"
#include "turan/check_result.hpp"
#include "turan/sequence.hpp"

namespace turan {

enum class Sign { negative = -1, zero = 0, positive = 1, undetermined = 2 };

const char* to_string(Sign s);

/// The two reciprocal-gamma products every finite sum here reduces to:
///   G1 = 1/(Gamma(mu+a) Gamma(mu+b)),  G2 = 1/(Gamma(mu) Gamma(mu+a+b)).
/// Both are positive for mu > 0 and a, b >= 0. Their ratio R = G2/G1 is rational
/// when a or b is an integer; otherwise it is enclosed with MPFR.
class GammaBasis {
public:
  GammaBasis(BigRational mu, BigRational a, BigRational b);

  const BigRational& mu() const { return mu_; }
  const BigRational& a() const { return a_; }
  const BigRational& b() const { return b_; }

  /// R exactly, when rational.
  const std::optional<BigRational>& ratio() const { return ratio_; }
  /// Rigorous enclosure ratio_lower() <= R <= ratio_upper() (degenerate when rational).
  const BigRational& ratio_lower() const { return lo_; }
  const BigRational& ratio_upper() const { return hi_; }
  double ratio_approx() const { return approx_; }

  /// G1 in double precision.
  double g1_approx() const;
  /// G1 and G2 exactly, when all four gamma arguments are positive integers.
  std::optional<std::pair<BigRational, BigRational>> exact_products() const;

  friend bool operator==(const GammaBasis& x, const GammaBasis& y) {
    return x.mu_ == y.mu_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

private:
  BigRational mu_, a_, b_;
  std::optional<BigRational> ratio_;
  BigRational lo_, hi_;
  double approx_ = 0.0;
};

/// first * G1 - second * G2 with exact rational coefficients.
struct NormalizedGammaQuotient {
  std::shared_ptr<const GammaBasis> basis;
  BigRational first;
  BigRational second;

  /// Always true on the exact path: G1 > 0, so sign(value) = sign(first - second R).
  bool normalizer_positive() const { return true; }

  /// value / G1 = first - second R, when R is rational.
  std::optional<BigRational> normalized() const;
  /// The value itself, when the gamma products are exact rationals.
  std::optional<BigRational> exact_value() const;
  double approx() const;
  Sign sign() const;

  /// Same basis and same coefficients.
  bool identical(const NormalizedGammaQuotient& o) const {
    return *basis == *o.basis && first == o.first && second == o.second;
  }
};

/// Signs of M_0..M_{[m/2]}; zeros are neutral.
struct SignPattern {
  std::vector<NormalizedGammaQuotient> values;
  std::vector<Sign> signs;
  int change_count = 0;
  bool last_positive = false;
  bool undetermined = false;
  /// Only "- ... - 0 ... 0 + ... +" transitions, at most one change, positive last entry.
  bool legal = false;
};

/// sum_k (-m)_k (a)_k / ((c)_k k!) and (c-a)_m / (c)_m. Throws DomainError if (c)_k = 0 for some k <= m.
std::pair<BigRational, BigRational> chu_vandermonde(unsigned m, const BigRational& a, const BigRational& c);

/// sum_k 1/(k!(m-k)!) [1/(Gamma(k+mu+a)Gamma(m-k+mu+b)) - 1/(Gamma(m-k+mu)Gamma(k+mu+a+b))].
/// Exact path: mu > 0, a, b >= 0.
NormalizedGammaQuotient lemma3_sum(unsigned m, const BigRational& mu, const BigRational& a, const BigRational& b);
/// (2mu+a+b+m-1)_m/m! [1/(Gamma(m+mu+a)Gamma(m+mu+b)) - 1/(Gamma(m+mu)Gamma(m+mu+a+b))].
NormalizedGammaQuotient lemma3_closed_form(unsigned m, const BigRational& mu, const BigRational& a,
                                           const BigRational& b);
/// Compensated floating evaluation of the same sum, any mu >= -1.
double lemma3_sum_float(unsigned m, double mu, double a, double b);

/// S_m = sum_k [1/(Gamma(k+mu+1)Gamma(m-k+mu+beta)) - 1/(Gamma(k+mu)Gamma(m-k+mu+beta+1))]
/// as (term sum, telescoped closed form), both divided by 1/(Gamma(mu+1)Gamma(mu+beta)). mu > 0, beta >= 0.
std::pair<BigRational, BigRational> s_m(unsigned m, const BigRational& mu, const BigRational& beta);
double s_m_float(unsigned m, double mu, double beta);

/// M_0..M_{[m/2]} from the proof of positivity of the phi coefficients.
SignPattern m_k_values(unsigned m, const BigRational& mu, const BigRational& a, const BigRational& b);
/// sum_k M_k / (k!(m-k)!), coefficient-wise.
NormalizedGammaQuotient m_k_weighted_sum(const SignPattern& p, unsigned m);

/// sum_{k <= n/2} f_k f_{n-k} A_k with n = f.size() - 1 and A.size() = n/2 + 1.
/// Throws HypothesisViolation unless f is non-negative, log-concave without internal zeros,
/// A_{[n/2]} > 0, sum A >= 0 and A changes sign at most once, from - to +.
BigRational lemma2_sum(const std::vector<BigRational>& f, const std::vector<BigRational>& A);
bool lemma2_check(const std::vector<BigRational>& f, const std::vector<BigRational>& A);

/// phi_0..phi_{m_max} exactly (f-form), mu > 0, a, b > 0.
std::vector<NormalizedGammaQuotient> phi_coefficients_exact(const CoefficientSequence& seq, const BigRational& mu,
                                                            const BigRational& a, const BigRational& b,
                                                            unsigned m_max);
/// lambda_0..lambda_{m_max} exactly (g-form), divided by 1/(Gamma(mu+1)Gamma(mu+beta)). mu > 0, beta > 0.
std::vector<BigRational> lambda_coefficients_exact(const CoefficientSequence& seq, const BigRational& mu,
                                                   const BigRational& beta, unsigned m_max);

/// All phi_m > 0 for m <= m_max. A failure on a sequence that is not log-concave
/// is reported as hypothesis_violation, not fail.
CheckResult phi_positivity_exact(const CoefficientSequence& seq, const BigRational& mu, const BigRational& a,
                                 const BigRational& b, unsigned m_max);
CheckResult lambda_positivity_exact(const CoefficientSequence& seq, const BigRational& mu, const BigRational& beta,
                                    unsigned m_max);

/// sum_{k=0}^m [1/(Gamma(k+mu+alpha)Gamma(m-k+mu+beta)) - 1/(Gamma(k+mu)Gamma(m-k+mu+alpha+beta))].
/// Exact path: mu > 0, alpha, beta > 0.
NormalizedGammaQuotient conjecture1_sum(unsigned m, const BigRational& mu, const BigRational& alpha,
                                        const BigRational& beta);
double conjecture1_sum_float(unsigned m, double mu, double alpha, double beta);

} // namespace turan
