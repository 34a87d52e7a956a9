#include "turan/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <mpfr.h>

#include "turan/compensated.hpp"
#include "turan/errors.hpp"
#include "turan/gamma.hpp"

namespace turan {

const char* to_string(Sign s) {
  switch (s) {
  case Sign::negative: return "negative";
  case Sign::zero: return "zero";
  case Sign::positive: return "positive";
  case Sign::undetermined: return "undetermined";
  }
  return "?";
}

namespace {

constexpr mpfr_prec_t kPrec = 256;
constexpr long kWidenExp = 200; // enclosure half-width 2^-200 relative

/// ln Gamma(x1) + ln Gamma(x2) - ln Gamma(x3) - ln Gamma(x4), exponentiated, to kPrec bits.
mpq_class gamma_quotient_mpfr(const BigRational& x1, const BigRational& x2, const BigRational& x3,
                              const BigRational& x4) {
  mpfr_t acc, t;
  mpfr_init2(acc, kPrec);
  mpfr_init2(t, kPrec);
  mpfr_set_zero(acc, 1);
  const BigRational* args[4] = {&x1, &x2, &x3, &x4};
  for (int i = 0; i < 4; ++i) {
    mpfr_set_q(t, args[i]->raw().get_mpq_t(), MPFR_RNDN);
    int sign = 0;
    mpfr_lgamma(t, &sign, t, MPFR_RNDN);
    if (i < 2)
      mpfr_add(acc, acc, t, MPFR_RNDN);
    else
      mpfr_sub(acc, acc, t, MPFR_RNDN);
  }
  mpfr_exp(acc, acc, MPFR_RNDN);
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), acc);
  mpfr_clear(acc);
  mpfr_clear(t);
  return q;
}

void require_exact_path(const BigRational& mu, const BigRational& a, const BigRational& b, const char* who) {
  if (mu.sign() <= 0) throw PreconditionError(std::string(who) + ": exact path needs mu > 0");
  if (a.sign() < 0 || b.sign() < 0) throw PreconditionError(std::string(who) + ": needs non-negative shifts");
}

/// 1/(x)_k for k = 0..n; x > 0.
std::vector<BigRational> inverse_pochhammers(const BigRational& x, unsigned n) {
  std::vector<BigRational> out;
  out.reserve(n + 1);
  BigRational p(1);
  out.push_back(p);
  BigRational t = x;
  for (unsigned k = 1; k <= n; ++k) {
    p *= t;
    t += BigRational(1);
    out.push_back(p.inverse());
  }
  return out;
}

std::vector<BigRational> inverse_factorials(unsigned n) {
  std::vector<BigRational> out;
  out.reserve(n + 1);
  BigRational f(1);
  out.push_back(f);
  for (unsigned k = 1; k <= n; ++k) {
    f *= BigRational(static_cast<long>(k));
    out.push_back(f.inverse());
  }
  return out;
}

std::shared_ptr<const GammaBasis> make_basis(const BigRational& mu, const BigRational& a, const BigRational& b) {
  return std::make_shared<const GammaBasis>(mu, a, b);
}

Sign sign_of(int s) { return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero); }

BigRational big(unsigned v) { return BigRational(static_cast<long>(v)); }

} // namespace

GammaBasis::GammaBasis(BigRational mu, BigRational a, BigRational b)
    : mu_(std::move(mu)), a_(std::move(a)), b_(std::move(b)) {
  require_exact_path(mu_, a_, b_, "GammaBasis");
  // Gamma(mu+a)Gamma(mu+b) / (Gamma(mu)Gamma(mu+a+b))
  if (a_.is_zero() || b_.is_zero()) {
    ratio_ = BigRational(1);
  } else if (a_.is_integer() && a_.raw().get_num().fits_ulong_p()) {
    const unsigned n = static_cast<unsigned>(a_.to_long());
    ratio_ = pochhammer_rational(mu_, n) / pochhammer_rational(mu_ + b_, n);
  } else if (b_.is_integer() && b_.raw().get_num().fits_ulong_p()) {
    const unsigned n = static_cast<unsigned>(b_.to_long());
    ratio_ = pochhammer_rational(mu_, n) / pochhammer_rational(mu_ + a_, n);
  }
  if (ratio_) {
    lo_ = hi_ = *ratio_;
    approx_ = ratio_->to_double();
    return;
  }
  const BigRational v(gamma_quotient_mpfr(mu_ + a_, mu_ + b_, mu_, mu_ + a_ + b_));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, kWidenExp);
  const BigRational rel(mpq_class(1, scale));
  lo_ = v * (BigRational(1) - rel);
  hi_ = v * (BigRational(1) + rel);
  approx_ = v.to_double();
}

double GammaBasis::g1_approx() const {
  return recip_gamma((mu_ + a_).to_double()) * recip_gamma((mu_ + b_).to_double());
}

std::optional<std::pair<BigRational, BigRational>> GammaBasis::exact_products() const {
  const BigRational args[4] = {mu_ + a_, mu_ + b_, mu_, mu_ + a_ + b_};
  for (const auto& x : args)
    if (!x.is_integer() || x.sign() <= 0 || x > BigRational(1000)) return std::nullopt;
  const auto rg = [](const BigRational& x) { return factorial_rational(static_cast<unsigned>(x.to_long() - 1)).inverse(); };
  return std::make_pair(rg(args[0]) * rg(args[1]), rg(args[2]) * rg(args[3]));
}

std::optional<BigRational> NormalizedGammaQuotient::normalized() const {
  if (!basis->ratio()) {
    if (second.is_zero()) return first;
    return std::nullopt;
  }
  return first - second * *basis->ratio();
}

std::optional<BigRational> NormalizedGammaQuotient::exact_value() const {
  const auto g = basis->exact_products();
  if (!g) return std::nullopt;
  return first * g->first - second * g->second;
}

double NormalizedGammaQuotient::approx() const {
  if (auto n = normalized()) return n->to_double() * basis->g1_approx();
  const BigRational mid = (basis->ratio_lower() + basis->ratio_upper()) / BigRational(2);
  return (first - second * mid).to_double() * basis->g1_approx();
}

Sign NormalizedGammaQuotient::sign() const {
  if (auto n = normalized()) return sign_of(n->sign());
  // second != 0 here
  const BigRational q = first / second;
  int s;
  if (q > basis->ratio_upper())
    s = 1;
  else if (q < basis->ratio_lower())
    s = -1;
  else
    return Sign::undetermined;
  return sign_of(second.sign() > 0 ? s : -s);
}

std::pair<BigRational, BigRational> chu_vandermonde(unsigned m, const BigRational& a, const BigRational& c) {
  if (pochhammer_rational(c, m).is_zero())
    throw DomainError("chu_vandermonde: (c)_k vanishes for some k <= m");
  const BigRational minus_m(-static_cast<long>(m));
  BigRational lhs(0);
  BigRational term(1); // (-m)_k (a)_k / ((c)_k k!)
  for (unsigned k = 0; k <= m; ++k) {
    lhs += term;
    const BigRational kk = big(k);
    term *= (minus_m + kk) * (a + kk) / ((c + kk) * (kk + BigRational(1)));
  }
  const BigRational rhs = pochhammer_rational(c - a, m) / pochhammer_rational(c, m);
  return {lhs, rhs};
}

NormalizedGammaQuotient lemma3_sum(unsigned m, const BigRational& mu, const BigRational& a, const BigRational& b) {
  NormalizedGammaQuotient q{make_basis(mu, a, b), BigRational(0), BigRational(0)};
  const auto ia = inverse_pochhammers(mu + a, m), ib = inverse_pochhammers(mu + b, m);
  const auto im = inverse_pochhammers(mu, m), iab = inverse_pochhammers(mu + a + b, m);
  const auto fact = inverse_factorials(m);
  for (unsigned k = 0; k <= m; ++k) {
    const BigRational w = fact[k] * fact[m - k];
    q.first += w * ia[k] * ib[m - k];
    q.second += w * im[m - k] * iab[k];
  }
  return q;
}

NormalizedGammaQuotient lemma3_closed_form(unsigned m, const BigRational& mu, const BigRational& a,
                                           const BigRational& b) {
  NormalizedGammaQuotient q{make_basis(mu, a, b), BigRational(0), BigRational(0)};
  const BigRational two_mu = mu + mu;
  const BigRational c = pochhammer_rational(two_mu + a + b + big(m) - BigRational(1), m) * inverse_factorials(m)[m];
  q.first = c / (pochhammer_rational(mu + a, m) * pochhammer_rational(mu + b, m));
  q.second = c / (pochhammer_rational(mu, m) * pochhammer_rational(mu + a + b, m));
  return q;
}

double lemma3_sum_float(unsigned m, double mu, double a, double b) {
  CompensatedSum s;
  double fk = 1.0;
  for (unsigned k = 0; k <= m; ++k) {
    if (k > 0) fk *= k;
    const double w = 1.0 / (fk * std::tgamma(double(m - k) + 1.0));
    const double dk = k, dmk = double(m - k);
    s.add(w * recip_gamma(dk + mu + a) * recip_gamma(dmk + mu + b));
    s.add(-w * recip_gamma(dmk + mu) * recip_gamma(dk + mu + a + b));
  }
  return s.value();
}

std::pair<BigRational, BigRational> s_m(unsigned m, const BigRational& mu, const BigRational& beta) {
  const NormalizedGammaQuotient sum = conjecture1_sum(m, mu, BigRational(1), beta);
  // closed form [(mu+beta)_{m+1} - (mu)_{m+1}] / (Gamma(mu+m+1) Gamma(mu+beta+m+1)),
  // and 1/(Gamma(mu+m+1)Gamma(mu+beta+m+1)) = G2 / ((mu)_{m+1} (mu+beta+1)_m)
  const BigRational pm = pochhammer_rational(mu, m + 1);
  const BigRational num = pochhammer_rational(mu + beta, m + 1) - pm;
  NormalizedGammaQuotient closed{sum.basis, BigRational(0), -(num / (pm * pochhammer_rational(mu + beta + BigRational(1), m)))};
  return {*sum.normalized(), *closed.normalized()};
}

double s_m_float(unsigned m, double mu, double beta) { return conjecture1_sum_float(m, mu, 1.0, beta); }

SignPattern m_k_values(unsigned m, const BigRational& mu, const BigRational& a, const BigRational& b) {
  const auto basis = make_basis(mu, a, b);
  const auto ia = inverse_pochhammers(mu + a, m), ib = inverse_pochhammers(mu + b, m);
  const auto im = inverse_pochhammers(mu, m), iab = inverse_pochhammers(mu + a + b, m);
  SignPattern p;
  for (unsigned k = 0; 2 * k <= m; ++k) {
    NormalizedGammaQuotient q{basis, BigRational(0), BigRational(0)};
    // u and r always; v and s only off the middle index
    q.first = ia[k] * ib[m - k];
    q.second = im[m - k] * iab[k];
    if (2 * k < m) {
      q.first += ib[k] * ia[m - k];
      q.second += im[k] * iab[m - k];
    }
    p.values.push_back(q);
    p.signs.push_back(q.sign());
  }
  int prev = 0;
  bool illegal_turn = false;
  for (Sign s : p.signs) {
    if (s == Sign::undetermined) {
      p.undetermined = true;
      continue;
    }
    const int v = static_cast<int>(s);
    if (v == 0) continue;
    if (prev != 0 && v != prev) {
      ++p.change_count;
      if (prev > 0) illegal_turn = true;
    }
    prev = v;
  }
  p.last_positive = !p.signs.empty() && p.signs.back() == Sign::positive;
  p.legal = !p.undetermined && p.change_count <= 1 && !illegal_turn && p.last_positive;
  return p;
}

NormalizedGammaQuotient m_k_weighted_sum(const SignPattern& p, unsigned m) {
  if (p.values.empty()) throw PreconditionError("m_k_weighted_sum: empty pattern");
  const auto fact = inverse_factorials(m);
  NormalizedGammaQuotient q{p.values.front().basis, BigRational(0), BigRational(0)};
  for (std::size_t k = 0; k < p.values.size(); ++k) {
    const BigRational w = fact[k] * fact[m - k];
    q.first += w * p.values[k].first;
    q.second += w * p.values[k].second;
  }
  return q;
}

BigRational lemma2_sum(const std::vector<BigRational>& f, const std::vector<BigRational>& A) {
  if (f.empty()) throw PreconditionError("lemma2: empty sequence");
  const std::size_t n = f.size() - 1;
  if (A.size() != n / 2 + 1) throw PreconditionError("lemma2: A must have [n/2]+1 entries");
  const SequenceFlags flags = analyze_prefix(f);
  if (!flags.non_negative || !flags.log_concave || !flags.no_internal_zeros)
    throw HypothesisViolation("lemma2: f must be non-negative, log-concave, without internal zeros");
  if (A.back().sign() <= 0) throw HypothesisViolation("lemma2: A_[n/2] must be positive");
  BigRational total(0);
  int prev = 0;
  for (const auto& x : A) {
    total += x;
    const int s = x.sign();
    if (s == 0) continue;
    if (prev > 0 && s < 0) throw HypothesisViolation("lemma2: A changes sign from + to -");
    prev = s;
  }
  if (total.sign() < 0) throw HypothesisViolation("lemma2: sum of A must be non-negative");
  BigRational s(0);
  for (std::size_t k = 0; k < A.size(); ++k) s += f[k] * f[n - k] * A[k];
  return s;
}

bool lemma2_check(const std::vector<BigRational>& f, const std::vector<BigRational>& A) {
  return lemma2_sum(f, A).sign() >= 0;
}

std::vector<NormalizedGammaQuotient> phi_coefficients_exact(const CoefficientSequence& seq, const BigRational& mu,
                                                            const BigRational& a, const BigRational& b,
                                                            unsigned m_max) {
  if (a.sign() <= 0 || b.sign() <= 0) throw PreconditionError("phi: a and b must be positive");
  const auto basis = make_basis(mu, a, b);
  const auto c = seq.exact_prefix(m_max + 1);
  const auto ia = inverse_pochhammers(mu + a, m_max), ib = inverse_pochhammers(mu + b, m_max);
  const auto im = inverse_pochhammers(mu, m_max), iab = inverse_pochhammers(mu + a + b, m_max);
  const auto fact = inverse_factorials(m_max);
  std::vector<NormalizedGammaQuotient> out;
  out.reserve(m_max + 1);
  for (unsigned m = 0; m <= m_max; ++m) {
    NormalizedGammaQuotient q{basis, BigRational(0), BigRational(0)};
    for (unsigned k = 0; k <= m; ++k) {
      if (c[k].is_zero() || c[m - k].is_zero()) continue;
      const BigRational w = c[k] * c[m - k] * fact[k] * fact[m - k];
      q.first += w * ia[k] * ib[m - k];
      q.second += w * im[m - k] * iab[k];
    }
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<BigRational> lambda_coefficients_exact(const CoefficientSequence& seq, const BigRational& mu,
                                                   const BigRational& beta, unsigned m_max) {
  if (beta.sign() <= 0) throw PreconditionError("lambda: beta must be positive");
  const BigRational one(1);
  const GammaBasis basis(mu, one, beta);
  const BigRational& R = *basis.ratio();
  const auto c = seq.exact_prefix(m_max + 1);
  const auto i1 = inverse_pochhammers(mu + one, m_max), ib = inverse_pochhammers(mu + beta, m_max);
  const auto im = inverse_pochhammers(mu, m_max), ib1 = inverse_pochhammers(mu + beta + one, m_max);
  std::vector<BigRational> out;
  out.reserve(m_max + 1);
  for (unsigned m = 0; m <= m_max; ++m) {
    BigRational first(0), second(0);
    for (unsigned k = 0; k <= m; ++k) {
      if (c[k].is_zero() || c[m - k].is_zero()) continue;
      const BigRational w = c[k] * c[m - k];
      first += w * i1[k] * ib[m - k];
      second += w * im[k] * ib1[m - k];
    }
    out.push_back(first - second * R);
  }
  return out;
}

namespace {

Params exact_params(const CoefficientSequence& seq, std::initializer_list<Param> rest) {
  Params p{{"seq", seq.label()}};
  p.insert(p.end(), rest.begin(), rest.end());
  return p;
}

CheckResult positivity_result(std::string id, Params params, const std::vector<Sign>& signs, const Margin& margin,
                              bool hypotheses_hold, const std::string& worst_value) {
  for (std::size_t m = 0; m < signs.size(); ++m) {
    if (signs[m] == Sign::positive) continue;
    params.push_back({"first_nonpositive_m", static_cast<std::int64_t>(m)});
    if (signs[m] == Sign::undetermined) return make_skipped(std::move(id), std::move(params), "sign undetermined");
    if (!hypotheses_hold) {
      CheckResult r = make_hypothesis_violation(std::move(id), std::move(params), "sequence is not log-concave");
      r.margin = margin;
      return r;
    }
    CheckResult r{std::move(id), params, Status::fail, margin, Counterexample{params, "coefficient " + std::to_string(m) + " = " + worst_value}};
    return r;
  }
  return CheckResult{std::move(id), std::move(params), Status::pass, margin, std::nullopt};
}

} // namespace

CheckResult phi_positivity_exact(const CoefficientSequence& seq, const BigRational& mu, const BigRational& a,
                                 const BigRational& b, unsigned m_max) {
  Params params = exact_params(seq, {{"mu", mu}, {"a", a}, {"b", b}, {"m_max", std::int64_t(m_max)}});
  const auto phi = phi_coefficients_exact(seq, mu, a, b, m_max);
  std::vector<Sign> signs;
  Margin margin;
  std::string worst;
  std::optional<BigRational> min_exact;
  double min_approx = std::numeric_limits<double>::infinity();
  for (const auto& q : phi) {
    const Sign s = q.sign();
    signs.push_back(s);
    if (auto n = q.normalized()) {
      if (!min_exact || *n < *min_exact) min_exact = *n;
    } else {
      min_approx = std::min(min_approx, q.approx() / q.basis->g1_approx());
    }
    if (s != Sign::positive && worst.empty()) {
      auto n = q.normalized();
      worst = n ? n->to_string() + " (normalized)" : std::to_string(q.approx());
    }
  }
  if (min_exact)
    margin = *min_exact;
  else
    margin = min_approx;
  const bool hyp = seq.flags().log_concave && seq.flags().no_internal_zeros && seq.flags().non_negative;
  return positivity_result("theorem1.phi_positive", std::move(params), signs, margin, hyp, worst);
}

CheckResult lambda_positivity_exact(const CoefficientSequence& seq, const BigRational& mu, const BigRational& beta,
                                    unsigned m_max) {
  Params params = exact_params(seq, {{"mu", mu}, {"beta", beta}, {"m_max", std::int64_t(m_max)}});
  const auto lam = lambda_coefficients_exact(seq, mu, beta, m_max);
  std::vector<Sign> signs;
  std::optional<BigRational> min_v;
  std::string worst;
  for (const auto& v : lam) {
    signs.push_back(sign_of(v.sign()));
    if (!min_v || v < *min_v) min_v = v;
    if (v.sign() <= 0 && worst.empty()) worst = v.to_string() + " (normalized)";
  }
  const bool hyp = seq.flags().log_concave && seq.flags().no_internal_zeros && seq.flags().non_negative;
  return positivity_result("theorem2.lambda_positive", std::move(params), signs, *min_v, hyp, worst);
}

NormalizedGammaQuotient conjecture1_sum(unsigned m, const BigRational& mu, const BigRational& alpha,
                                        const BigRational& beta) {
  if (alpha.sign() <= 0 || beta.sign() < 0) throw PreconditionError("conjecture1: alpha > 0 and beta >= 0 required");
  NormalizedGammaQuotient q{make_basis(mu, alpha, beta), BigRational(0), BigRational(0)};
  const auto ia = inverse_pochhammers(mu + alpha, m), ib = inverse_pochhammers(mu + beta, m);
  const auto im = inverse_pochhammers(mu, m), iab = inverse_pochhammers(mu + alpha + beta, m);
  for (unsigned k = 0; k <= m; ++k) {
    q.first += ia[k] * ib[m - k];
    q.second += im[k] * iab[m - k];
  }
  return q;
}

double conjecture1_sum_float(unsigned m, double mu, double alpha, double beta) {
  CompensatedSum s;
  for (unsigned k = 0; k <= m; ++k) {
    const double dk = k, dmk = double(m - k);
    s.add(recip_gamma(dk + mu + alpha) * recip_gamma(dmk + mu + beta));
    s.add(-recip_gamma(dk + mu) * recip_gamma(dmk + mu + alpha + beta));
  }
  return s.value();
}

} // namespace turan
