#include "turan/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "turan/corollaries.hpp"
#include "turan/errors.hpp"
#include "turan/exact.hpp"
#include "turan/gamma.hpp"
#include "turan/special.hpp"

namespace turan {

using json = nlohmann::json;

namespace {

// ---- config access --------------------------------------------------------

const json& section(const json& cfg, const char* name) {
  if (!cfg.contains(name) || !cfg.at(name).is_object()) throw ConfigError(std::string("missing section '") + name + "'");
  return cfg.at(name);
}

std::size_t get_count(const json& c, const char* key, std::size_t cap) {
  if (!c.contains(key)) throw ConfigError(std::string("missing key '") + key + "'");
  const auto& v = c.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ConfigError(std::string("'") + key + "' must be a non-negative integer");
  const auto n = static_cast<std::size_t>(v.get<long long>());
  if (n > cap) throw CapExceeded(std::string("'") + key + "' exceeds the cap");
  return n;
}

double get_real(const json& c, const char* key) {
  if (!c.contains(key) || !c.at(key).is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  return c.at(key).get<double>();
}

GridAxis get_axis(const json& c, const char* key, std::size_t cap) {
  if (!c.contains(key)) throw ConfigError(std::string("missing axis '") + key + "'");
  return GridAxis::from_json(key, c.at(key), cap);
}

bool is_axis(const json& j) {
  return j.is_object() && (j.contains("values") || j.contains("min") || j.contains("max") || j.contains("step"));
}

/// Recursive merge; axis objects and non-objects replace wholesale.
void merge_into(json& base, const json& patch) {
  for (auto it = patch.begin(); it != patch.end(); ++it) {
    if (it.value().is_null()) {
      base.erase(it.key());
    } else if (base.contains(it.key()) && base[it.key()].is_object() && it.value().is_object() &&
               !is_axis(it.value()) && !is_axis(base[it.key()])) {
      merge_into(base[it.key()], it.value());
    } else {
      base[it.key()] = it.value();
    }
  }
}

// ---- sampling -------------------------------------------------------------

using Rng = std::mt19937_64;

BigRational random_rational(Rng& rng, long max_value, long max_den) {
  const long q = std::uniform_int_distribution<long>(1, max_den)(rng);
  const long p = std::uniform_int_distribution<long>(1, max_value * q)(rng);
  return BigRational(p, q);
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::string join(const std::vector<BigRational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s;
}

/// A random log-concave sequence: finite, with non-increasing ratios, or f_k = r^k c^k / (c)_k.
struct SampledSequence {
  CoefficientSequence seq;
  std::optional<std::size_t> length;
};

SampledSequence random_logconcave(Rng& rng, long max_den) {
  if (rng() % 2 == 0) {
    const std::size_t len = 1 + rng() % 12;
    std::vector<BigRational> f{random_rational(rng, 3, max_den)};
    BigRational ratio = random_rational(rng, 4, max_den);
    while (f.size() < len) {
      f.push_back(f.back() * ratio);
      ratio *= BigRational(long(1 + rng() % 5), 5);
    }
    const std::string label = "list(" + join(f) + ")";
    return {CoefficientSequence::from_rationals(std::move(f), label), len};
  }
  const BigRational r = random_rational(rng, 4, max_den), c = random_rational(rng, 4, max_den);
  // f_k = (rc)^k / (c)_k: ratios rc/(c+k) decrease
  auto gen = [r, c](std::size_t k) {
    BigRational t(1);
    for (std::size_t j = 0; j < k; ++j) t *= r * c / (c + BigRational(long(j)));
    return t;
  };
  return {CoefficientSequence::from_exact_generator(gen, std::nullopt, "ratio(" + r.to_string() + "," + c.to_string() + ")"),
          std::nullopt};
}

unsigned effective_m(std::size_t m_max, const std::optional<std::size_t>& length) {
  // a finite sequence of length L gives a polynomial Turanian of degree 2(L-1)
  if (length) return static_cast<unsigned>(std::min(m_max, 2 * (*length - 1)));
  return static_cast<unsigned>(m_max);
}

Margin nq_margin(const NormalizedGammaQuotient& q) {
  if (auto n = q.normalized()) return *n;
  return q.approx() / q.basis->g1_approx();
}

double margin_double(const Margin& m) {
  if (const auto* q = std::get_if<BigRational>(&m)) return q->to_double();
  if (const auto* d = std::get_if<double>(&m)) return *d;
  return std::numeric_limits<double>::quiet_NaN();
}

CheckResult sign_result(std::string id, Params p, const NormalizedGammaQuotient& q, bool expect_zero = false) {
  const Sign s = q.sign();
  const Margin m = nq_margin(q);
  if (s == Sign::undetermined) return make_skipped(std::move(id), std::move(p), "sign undetermined");
  const bool ok = expect_zero ? s == Sign::zero : s == Sign::positive;
  return check_true(std::move(id), std::move(p), ok, m, std::string("sign ") + to_string(s));
}

CheckResult relabel(CheckResult r, std::string id, Params params) {
  for (const auto& p : r.params)
    if (p.name == "reason" || p.name == "first_nonpositive_m") params.push_back(p);
  r.check_id = std::move(id);
  r.params = std::move(params);
  if (r.counterexample) r.counterexample->witness = r.params;
  return r;
}

Rng suite_rng(const json& cfg, const std::string& suite) {
  const auto seed = cfg.at("seed").get<std::uint64_t>();
  const std::string h = fnv1a_hex(suite);
  return Rng(seed ^ std::stoull(h, nullptr, 16));
}

// ---- suites ---------------------------------------------------------------

std::vector<Task> lemmas(const json& cfg, std::size_t cap) {
  const json& c = section(cfg, "lemmas");
  Rng rng = suite_rng(cfg, "lemmas");
  const std::size_t n = get_count(c, "samples", cap), m_max = get_count(c, "m_max", 1000);
  const long vmax = long(get_count(c, "max_value", 1000)), dmax = long(get_count(c, "max_denominator", 1000));
  const std::size_t zero_every = get_count(c, "beta_zero_every", cap);
  std::vector<Task> t;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned m = static_cast<unsigned>(rng() % (m_max + 1));
    const BigRational mu = random_rational(rng, vmax, dmax), a = random_rational(rng, vmax, dmax),
                      b = random_rational(rng, vmax, dmax);
    const BigRational beta = zero_every && i % zero_every == zero_every - 1 ? BigRational(0) : b;
    const Params p{{"m", std::int64_t(m)}, {"mu", mu}, {"a", a}, {"b", b}};
    const Params p4{{"m", std::int64_t(m)}, {"mu", mu}, {"beta", beta}};
    t.push_back({"lemma3.identity", p, [=] {
                   const auto s = lemma3_sum(m, mu, a, b), cf = lemma3_closed_form(m, mu, a, b);
                   const BigRational gap = (s.first - cf.first).abs() + (s.second - cf.second).abs();
                   return check_true("lemma3.identity", p, s.identical(cf), gap, "term sum vs closed form, gap " + gap.to_string());
                 }});
    t.push_back({"lemma3.sign", p, [=] { return sign_result("lemma3.sign", p, lemma3_sum(m, mu, a, b)); }});
    t.push_back({"lemma4.identity", p4, [=] {
                   const auto [sum, closed] = s_m(m, mu, beta);
                   return check_equal("lemma4.identity", p4, sum, closed, "sum form vs telescoped form");
                 }});
    t.push_back({"lemma4.sign", p4, [=] {
                   const BigRational sum = s_m(m, mu, beta).first;
                   if (beta.sign() == 0) return check_equal("lemma4.sign", p4, sum, BigRational(0), "S_m = 0 at beta = 0");
                   return check_positive("lemma4.sign", p4, sum, true, "S_m > 0");
                 }});
    t.push_back({"mk.sign_structure", p, [=] {
                   const SignPattern sp = m_k_values(m, mu, a, b);
                   if (sp.undetermined) return make_skipped("mk.sign_structure", p, "sign undetermined");
                   std::string signs;
                   for (Sign s : sp.signs) signs += s == Sign::positive ? '+' : s == Sign::negative ? '-' : '0';
                   return check_true("mk.sign_structure", p, sp.legal, nq_margin(sp.values.back()),
                                     "signs " + signs + ", changes " + std::to_string(sp.change_count));
                 }});
    t.push_back({"mk.sum_consistency", p, [=] {
                   const SignPattern sp = m_k_values(m, mu, a, b);
                   const bool ok = m_k_weighted_sum(sp, m).identical(lemma3_sum(m, mu, a, b));
                   return check_true("mk.sum_consistency", p, ok, BigRational(0), "weighted M_k sum vs term sum");
                 }});
  }

  const std::size_t n_chu = get_count(c, "chu_samples", cap);
  for (std::size_t i = 0; i < n_chu; ++i) {
    const unsigned m = static_cast<unsigned>(rng() % 15);
    const BigRational a = random_rational(rng, 6, dmax) - BigRational(3), cc = random_rational(rng, 6, dmax);
    const Params p{{"m", std::int64_t(m)}, {"a", a}, {"c", cc}};
    t.push_back({"chu_vandermonde", p, [=] {
                   const auto [l, r] = chu_vandermonde(m, a, cc);
                   return check_equal("chu_vandermonde", p, l, r, "sum vs (c-a)_m/(c)_m");
                 }});
  }

  const std::size_t n_l2 = get_count(c, "lemma2_samples", cap);
  for (std::size_t i = 0; i < n_l2; ++i) {
    const std::size_t len = 1 + rng() % 16;
    std::vector<BigRational> f{BigRational(1)};
    BigRational ratio = random_rational(rng, 4, 3);
    for (std::size_t k = 1; k <= len; ++k) {
      f.push_back(f.back() * ratio);
      ratio *= BigRational(long(1 + rng() % 5), 5);
    }
    const std::size_t h = len / 2;
    std::vector<BigRational> A(h + 1);
    const std::size_t turn = rng() % (h + 1);
    BigRational total(0);
    for (std::size_t k = 0; k <= h; ++k) {
      A[k] = k < turn ? -random_rational(rng, 3, 4) : random_rational(rng, 3, 4);
      total += A[k];
    }
    if (total.sign() < 0) A[h] -= total;
    const Params p{{"f", join(f)}, {"A", join(A)}};
    t.push_back({"lemma2", p, [=] {
                   const BigRational s = lemma2_sum(f, A);
                   return check_positive("lemma2", p, s, false, "sum_k f_k f_{n-k} A_k >= 0");
                 }});
  }

  const std::size_t n_float = get_count(c, "float_samples", cap);
  for (std::size_t i = 0; i < n_float; ++i) {
    const unsigned m = static_cast<unsigned>(rng() % (m_max + 1));
    const double mu = -uniform(rng, 0.0, 1.0);
    const double a = uniform(rng, 0.05, double(vmax)) - mu, b = uniform(rng, 0.05, double(vmax)) - mu;
    const Params p{{"m", std::int64_t(m)}, {"mu", mu}, {"a", a}, {"b", b}, {"path", std::string("floating")}};
    t.push_back({"lemma3.float_sign", p, [=] {
                   const double v = lemma3_sum_float(m, mu, a, b);
                   return check_true("lemma3.float_sign", p, v > 0.0, v, "compensated term sum " + std::to_string(v));
                 }});
  }
  return t;
}

std::vector<Task> theorem1(const json& cfg, std::size_t cap) {
  const json& c = section(cfg, "theorem1");
  Rng rng = suite_rng(cfg, "theorem1");
  const std::size_t n = get_count(c, "samples", cap), m_max = get_count(c, "m_max", 1000);
  const long dmax = long(get_count(c, "max_denominator", 1000));
  const long mu_max = long(get_count(c, "mu_max", 1000)), ab_max = long(get_count(c, "ab_max", 1000));
  const std::size_t n_cor = get_count(c, "corollary_samples", cap);
  const GridAxis xs = get_axis(c, "x", cap);
  std::vector<Task> t;
  for (std::size_t i = 0; i < n; ++i) {
    const SampledSequence s = random_logconcave(rng, dmax);
    const BigRational mu = random_rational(rng, mu_max, dmax), a = random_rational(rng, ab_max, dmax),
                      b = random_rational(rng, ab_max, dmax);
    const unsigned mm = effective_m(m_max, s.length);
    const CoefficientSequence seq = s.seq;
    const Params p{{"seq", seq.label()}, {"mu", mu}, {"a", a}, {"b", b}, {"m_max", std::int64_t(mm)}};
    t.push_back({"theorem1.phi_positive", p, [=] { return phi_positivity_exact(seq, mu, a, b, mm); }});
    if (i >= n_cor) continue;
    const double dm = mu.to_double(), da = a.to_double(), db = b.to_double();
    const TuranianSpec spec = TuranianSpec::f_form(dm, da, db);
    const double eps = std::min(db, dm + 1.0);
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const double x = xs.values[k], y = xs.values[(k + 1) % xs.size()];
      Params px{{"seq", seq.label()}, {"mu", dm}, {"a", da}, {"b", db}, {"x", x}};
      t.push_back({"corollary.f_twosided", px, [=] { return check_f_twosided(seq, spec, x); }});
      t.push_back({"corollary.phi_below", px, [=] { return check_phi_below(seq, spec, x); }});
      t.push_back({"corollary.mult_convex", px, [=] { return check_mult_convex(seq, spec, x, y); }});
      if (x > 0.0)
        t.push_back({"corollary.compl_mon", px, [=] { return check_complete_monotonicity(seq, spec, x); }});
      t.push_back({"corollary.gen_turanian", px, [=] { return check_generalized_turanian(seq, dm, eps, x); }});
    }
  }
  return t;
}

std::vector<Task> theorem2(const json& cfg, std::size_t cap) {
  const json& c = section(cfg, "theorem2");
  Rng rng = suite_rng(cfg, "theorem2");
  const std::size_t n = get_count(c, "samples", cap), m_max = get_count(c, "m_max", 1000);
  const long dmax = long(get_count(c, "max_denominator", 1000));
  const long mu_max = long(get_count(c, "mu_max", 1000)), beta_max = long(get_count(c, "beta_max", 1000));
  const std::size_t n_cor = get_count(c, "corollary_samples", cap), n_eta = get_count(c, "eta_samples", cap);
  const GridAxis xs = get_axis(c, "x", cap);
  const GridAxis etas = get_axis(c, "eta", cap);
  std::vector<Task> t;

  const auto add = [&](const CoefficientSequence& seq, unsigned mm, const BigRational& mu, const BigRational& beta,
                       bool corollaries) {
    const Params p{{"seq", seq.label()}, {"mu", mu}, {"beta", beta}, {"m_max", std::int64_t(mm)}};
    t.push_back({"theorem2.lambda_positive", p, [=] { return lambda_positivity_exact(seq, mu, beta, mm); }});
    if (!corollaries) return;
    const double dm = mu.to_double(), dbeta = beta.to_double();
    const TuranianSpec spec = TuranianSpec::g_form(dm, dbeta);
    for (double x : xs.values) {
      Params px{{"seq", seq.label()}, {"mu", dm}, {"beta", dbeta}, {"x", x}};
      t.push_back({"corollary.g_twosided", px, [=] { return check_g_twosided(seq, spec, x); }});
      t.push_back({"corollary.lambda_below", px, [=] { return check_lambda_below(seq, spec, x); }});
      t.push_back({"corollary.turanian1", px, [=] { return check_turanian1(seq, dm, x); }});
      t.push_back({"corollary.disc_wright", px, [=] { return check_disc_wright(seq, dm, dbeta, x); }});
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    const SampledSequence s = random_logconcave(rng, dmax);
    const BigRational mu = random_rational(rng, mu_max, dmax), beta = random_rational(rng, beta_max, dmax);
    add(s.seq, effective_m(m_max, s.length), mu, beta, i < n_cor);
  }
  const auto& eta_values = etas.require_exact();
  for (const BigRational& eta : eta_values) {
    const auto seq = CoefficientSequence::from_exact_generator(
        [eta](std::size_t k) {
          return pochhammer_rational(eta, static_cast<unsigned>(k)) / factorial_rational(static_cast<unsigned>(k));
        },
        std::nullopt, "(" + eta.to_string() + ")_k/k!");
    for (std::size_t i = 0; i < n_eta; ++i) {
      const BigRational mu = random_rational(rng, mu_max, dmax), beta = random_rational(rng, beta_max, dmax);
      add(seq, static_cast<unsigned>(m_max), mu, beta, i == 0);
    }
  }
  return t;
}

std::vector<Task> bessel(const json& cfg, std::size_t cap) {
  const json& c = section(cfg, "bessel");
  const GridAxis nus = get_axis(c, "nu", cap), us = get_axis(c, "u", cap), eps = get_axis(c, "epsilon", cap);
  const unsigned m_max = static_cast<unsigned>(get_count(c, "m_max", 1000));
  const double oracle_tol = get_real(section(cfg, "tolerances"), "oracle");
  GridSpec g{{nus, eps, us}, cap};
  g.check_cap();
  const auto& nu_q = nus.require_exact();
  const auto& eps_q = eps.require_exact();
  std::vector<Task> t;
  for (std::size_t i = 0; i < nus.size(); ++i) {
    const double nu = nus.values[i];
    for (double u : us.values) {
      const Params p{{"nu", nu}, {"epsilon", 1.0}, {"u", u}};
      t.push_back({"bessel.i3_sandwich", p, [=] { return bessel_bounds_check(nu, 1.0, u); }});
      if (nu >= 0.0 && nu == std::floor(nu)) {
        const Params po{{"nu", nu}, {"u", u}};
        t.push_back({"bessel.oracle_delta", po, [=] {
                       const double ref = std::cyl_bessel_i(nu, u) * std::cyl_bessel_i(nu, u) -
                                          std::cyl_bessel_i(nu + 1.0, u) * std::cyl_bessel_i(std::fabs(nu - 1.0), u);
                       const double got = bessel_turanian(nu, 1.0, u);
                       const double rel = std::fabs(got - ref) / std::fabs(ref);
                       return check_true("bessel.oracle_delta", po, rel <= oracle_tol, rel,
                                         "relative deviation from std::cyl_bessel_i " + std::to_string(rel));
                     }});
      }
    }
    for (std::size_t j = 0; j < eps.size(); ++j) {
      const double e = eps.values[j];
      if (nu_q[i] - eps_q[j] < BigRational(-2)) continue;
      const BigRational nq = nu_q[i], eq = eps_q[j];
      const Params pc{{"nu", nq}, {"epsilon", eq}, {"m_max", std::int64_t(m_max)}};
      t.push_back({"bessel.coefficients", pc, [=] { return bessel_coefficients_check(nq, eq, m_max); }});
      for (double u : us.values) {
        if (e != 1.0) {
          const Params p{{"nu", nu}, {"epsilon", e}, {"u", u}};
          t.push_back({"bessel.i2_sandwich", p, [=] { return bessel_bounds_check(nu, e, u); }});
        }
        if (nu > -1.0 && e <= nu + 1.0) {
          const Params p{{"nu", nu}, {"h", e}, {"u", u}};
          t.push_back({"bessel.log_concave_order", p, [=] { return bessel_logconcavity_check(nu, e, u); }});
        }
      }
    }
  }
  const Params pb{{"nu", BigRational(-1)}, {"epsilon", BigRational(1)}, {"m_max", std::int64_t(m_max)}};
  t.push_back({"bessel.boundary_zero", pb, [=] {
                 // Delta_1(-1, u) = Delta_1(1, u): a double zero, then the nu = 1 coefficients
                 const auto c0 = bessel_coefficients_float(-1.0, 1.0, m_max);
                 const auto c1 = bessel_coefficients_float(1.0, 1.0, m_max);
                 bool ok = c0.size() > 2 && c0[0].value == 0.0 && c0[1].value == 0.0;
                 double worst = 0.0;
                 for (std::size_t m = 2; ok && m < c0.size(); ++m) {
                   const double rel = std::fabs(c0[m].value - c1[m - 2].value) / c1[m - 2].value;
                   worst = std::max(worst, rel);
                   ok = c0[m].value > 0.0 && rel <= 1e-12;
                 }
                 return check_true("bessel.boundary_zero", pb, ok, worst, "c_0 = c_1 = 0, c_m = c_{m-2}(nu = 1) > 0");
               }});
  return t;
}

std::vector<Task> kummer(const json& cfg, std::size_t cap) {
  const json& c = section(cfg, "kummer");
  Rng rng = suite_rng(cfg, "kummer");
  const std::size_t n = get_count(c, "samples", cap), n_flip = get_count(c, "flip_samples", cap),
                    n_con = get_count(c, "contiguous_samples", cap);
  const double a_max = get_real(c, "a_max"), b_max = get_real(c, "b_max"), x_max = get_real(c, "x_max");
  const double tol = get_real(section(cfg, "tolerances"), "contiguous");
  std::vector<Task> t;
  const auto add_bounds = [&](double a, double b, double x) {
    const Params p{{"a", a}, {"b", b}, {"x", x}};
    t.push_back({"kummer.logderiv_bounds", p, [=] { return kummer_logderiv_check(a, b, x); }});
    t.push_back({"kummer.orientation", p, [=] {
                   const auto k = kummer_logderiv_bounds(a, b, x);
                   const bool ok = k.flipped == (b < a) && k.lower <= k.upper;
                   return check_true("kummer.orientation", p, ok, k.upper - k.lower,
                                     k.flipped ? "flipped (0 < b < a)" : "standard (b > a)");
                 }});
  };
  for (std::size_t i = 0; i < n; ++i) {
    const double a = uniform(rng, 1.0, a_max);
    double b = uniform(rng, 0.0, b_max);
    while (b == 0.0 || b == a) b = uniform(rng, 0.0, b_max);
    add_bounds(a, b, x_max - uniform(rng, 0.0, x_max));
  }
  for (std::size_t i = 0; i < n_flip; ++i) {
    const double a = uniform(rng, 1.0, a_max);
    const double b = a - uniform(rng, 0.0, a);
    add_bounds(a, b, x_max - uniform(rng, 0.0, x_max));
  }
  for (std::size_t i = 0; i < n_con; ++i) {
    const double a = uniform(rng, -5.0, 5.0), b = uniform(rng, 0.05, b_max), x = uniform(rng, -5.0, 5.0);
    const Params p{{"a", a}, {"b", b}, {"x", x}};
    t.push_back({"kummer.contiguous", p, [=] { return kummer_contiguous_check(a, b, x, tol); }});
  }
  return t;
}

std::vector<Task> pfq_suite(const json& cfg, std::size_t cap) {
  const json& c = section(cfg, "pfq");
  Rng rng = suite_rng(cfg, "pfq");
  const std::size_t n = get_count(c, "samples", cap), q_max = get_count(c, "q_max", 16),
                    n_max = get_count(c, "n_max", 10000);
  const long num_max = long(get_count(c, "max_numerator", 1000)), den_max = long(get_count(c, "max_denominator", 1000));
  if (q_max < 1) throw ConfigError("'q_max' must be >= 1");
  std::vector<Task> t;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t q = 1 + rng() % q_max;
    const std::size_t r = rng() % (q + 1);
    std::vector<BigRational> a, b;
    const auto draw = [&] {
      const long d = std::uniform_int_distribution<long>(1, den_max)(rng);
      return BigRational(std::uniform_int_distribution<long>(1, num_max)(rng), d);
    };
    for (std::size_t j = 0; j < q - r; ++j) a.push_back(draw());
    for (std::size_t j = 0; j < q; ++j) b.push_back(draw());
    const Params p{{"q", std::int64_t(q)}, {"r", std::int64_t(r)}, {"a", join(a)}, {"b", join(b)}};
    t.push_back({"pfq.chain_implies_logconcave", p, [=] {
                   const auto rep = symmetric_chain_check(a, b, r);
                   if (!rep.satisfied)
                     return make_hypothesis_violation("pfq.chain_implies_logconcave", p,
                                                      "chain violated at index " + std::to_string(*rep.violated_index));
                   const bool ok = hyperterm_logconcavity(a, b, n_max);
                   const double m = rep.ratios.size() > 1 ? rep.ratios[1] - rep.ratios[0] : 0.0;
                   return check_true("pfq.chain_implies_logconcave", p, ok, m, "hyperterm log-concavity up to n_max");
                 }});
  }
  return t;
}

std::vector<Task> example2(const json& cfg, std::size_t cap) {
  const json& c = section(cfg, "example2");
  const GridAxis etas = get_axis(c, "eta", cap), nus = get_axis(c, "nu", cap), xs = get_axis(c, "x", cap),
                 ss = get_axis(c, "s", cap);
  GridSpec g{{etas, nus, ss, xs}, cap};
  g.check_cap();
  std::vector<Task> t;
  for (double eta : etas.values)
    for (double nu : nus.values)
      for (double x : xs.values) {
        const Params p{{"eta", eta}, {"nu", nu}, {"x", x}};
        t.push_back({"example2.turan_bounds", p, [=] { return exp_remainder_turan_bounds(eta, nu, x); }});
        for (double s : ss.values) {
          const Params ps{{"eta", eta}, {"nu", nu}, {"s", s}, {"x", x}};
          t.push_back({"example2.disc_wright", ps, [=] { return exp_remainder_disc_wright(eta, nu, s, x); }});
        }
      }
  return t;
}

std::vector<Task> example5(const json& cfg, std::size_t cap) {
  const json& c = section(cfg, "example5");
  const GridAxis as = get_axis(c, "a", cap), nus = get_axis(c, "nu", cap), xs = get_axis(c, "x", cap);
  const std::size_t k_max = get_count(c, "k_max", 100000);
  GridSpec g{{as, nus, xs}, cap};
  g.check_cap();
  std::vector<Task> t;
  for (const BigRational& a : as.require_exact()) {
    const Params p{{"a", a}, {"k_max", std::int64_t(k_max)}};
    t.push_back({"example5.h_logconcave", p, [=] { return param_derivative_logconcavity(a, k_max); }});
    const double da = a.to_double();
    for (double nu : nus.values)
      for (double x : xs.values) {
        const Params px{{"a", da}, {"nu", nu}, {"x", x}};
        t.push_back({"example5.turanian1", px, [=] {
                       return relabel(check_turanian1(param_derivative_sequence(da), nu, x), "example5.turanian1", px);
                     }});
      }
  }
  return t;
}

std::vector<Task> conjecture(const json& cfg, std::size_t cap) {
  const json& c = section(cfg, "conjecture");
  const unsigned m_max = static_cast<unsigned>(get_count(c, "m_max", 1000));
  const GridAxis mus = get_axis(c, "mu", cap), alphas = get_axis(c, "alpha", cap), betas = get_axis(c, "beta", cap);
  GridSpec g{{mus, alphas, betas}, cap};
  g.check_cap();
  const auto& mq = mus.require_exact();
  const auto& aq = alphas.require_exact();
  const auto& bq = betas.require_exact();
  std::vector<Task> t;
  for (std::size_t i = 0; i < g.point_count(); ++i) {
    const auto idx = g.point(i);
    const BigRational mu = mq[idx[0]], alpha = aq[idx[1]], beta = bq[idx[2]];
    const Params p{{"mu", mu}, {"alpha", alpha}, {"beta", beta}, {"m_max", std::int64_t(m_max)}};
    t.push_back({"conjecture1.scan", p, [=] {
                   if (mu < BigRational(-1) || (mu + alpha).sign() < 0 || (mu + beta).sign() < 0 || alpha.sign() <= 0 ||
                       beta.sign() < 0)
                     throw HypothesisViolation("outside mu >= -1, mu + alpha >= 0, mu + beta >= 0, alpha > 0, beta >= 0");
                   Params out = p;
                   if (mu.sign() <= 0) {
                     out.push_back({"path", std::string("floating")});
                     double lo = std::numeric_limits<double>::infinity();
                     std::int64_t at = 0;
                     for (unsigned m = 0; m <= m_max; ++m) {
                       const double v = conjecture1_sum_float(m, mu.to_double(), alpha.to_double(), beta.to_double());
                       if (v < lo) lo = v, at = m;
                     }
                     out.push_back({"argmin_m", at});
                     if (std::fabs(lo) <= 1e-14) return make_skipped("conjecture1.scan", out, "sign undetermined");
                     return check_true("conjecture1.scan", out, lo > 0.0, lo, "minimum over m");
                   }
                   std::optional<Margin> lo;
                   std::int64_t at = 0;
                   for (unsigned m = 0; m <= m_max; ++m) {
                     const auto q = conjecture1_sum(m, mu, alpha, beta);
                     const Sign s = q.sign();
                     const Margin mg = nq_margin(q);
                     if (!lo || margin_double(mg) < margin_double(*lo)) lo = mg, at = m;
                     if (s == Sign::positive) continue;
                     out.push_back({"m", std::int64_t(m)});
                     if (s == Sign::undetermined) return make_skipped("conjecture1.scan", out, "sign undetermined");
                     return CheckResult{"conjecture1.scan", out, Status::fail, mg,
                                        Counterexample{out, std::string("non-positive sum, sign ") + to_string(s)}};
                   }
                   out.push_back({"argmin_m", at});
                   return CheckResult{"conjecture1.scan", out, Status::pass, *lo, std::nullopt};
                 }});
    if (alpha == BigRational(1) && mu.sign() > 0 && beta.sign() >= 0) {
      const Params ps{{"mu", mu}, {"beta", beta}, {"m_max", std::int64_t(m_max)}};
      t.push_back({"conjecture1.alpha1_slice", ps, [=] {
                     for (unsigned m = 0; m <= m_max; ++m) {
                       const auto q = conjecture1_sum(m, mu, BigRational(1), beta).normalized();
                       const auto [sum, closed] = s_m(m, mu, beta);
                       if (!q || *q != sum || sum != closed) {
                         Params out = ps;
                         out.push_back({"m", std::int64_t(m)});
                         return check_true("conjecture1.alpha1_slice", out, false, BigRational(0),
                                           "scan value differs from S_m");
                       }
                     }
                     return check_true("conjecture1.alpha1_slice", ps, true, BigRational(0), "");
                   }});
    }
  }
  return t;
}

/// The smallest scanned value and where it occurs.
CheckResult conjecture_minimum(const std::vector<CheckResult>& results) {
  const CheckResult* best = nullptr;
  std::size_t fails = 0;
  for (const auto& r : results) {
    if (r.check_id != "conjecture1.scan") continue;
    if (r.status == Status::fail) ++fails;
    if (r.status != Status::pass && r.status != Status::fail) continue;
    if (!best || margin_double(r.margin) < margin_double(best->margin)) best = &r;
  }
  if (!best) return make_skipped("conjecture1.minimum", {}, "no scanned points");
  return check_true("conjecture1.minimum", best->params, fails == 0 && margin_double(best->margin) > 0.0, best->margin,
                    std::to_string(fails) + " counterexamples");
}

struct TolGuard {
  double saved;
  explicit TolGuard(double tol) : saved(rel_tol()) { set_rel_tol(tol); }
  ~TolGuard() { set_rel_tol(saved); }
};

} // namespace

const std::vector<SuiteInfo>& list_suites() {
  static const std::vector<SuiteInfo> s{
      {"lemmas", "exact Chu-Vandermonde, gamma-sum identities, telescoping sums, M_k sign structure, weighted sums"},
      {"theorem1", "exact phi coefficient positivity and f-form corollaries"},
      {"theorem2", "exact lambda coefficient positivity and g-form corollaries"},
      {"bessel", "modified Bessel Turanian bounds, coefficients, log-concavity in order"},
      {"kummer", "Kummer log-derivative bounds and contiguous relations"},
      {"pfq", "symmetric chain condition against hyperterm log-concavity"},
      {"example2", "exponential remainder Turan bounds and discrete Wright log-concavity"},
      {"example5", "parameter-derivative weights and Turan bounds"},
      {"conjecture", "counterexample search over the finite-sum form of the conjecture"},
  };
  return s;
}

const json& default_config() {
  static const json d = json::parse(R"({
  "seed": 20130501,
  "cap": 1000000,
  "tolerances": {"relative": 1e-9, "contiguous": 1e-9, "oracle": 1e-9},
  "lemmas": {"samples": 2000, "m_max": 12, "max_value": 5, "max_denominator": 8, "beta_zero_every": 10,
             "chu_samples": 300, "lemma2_samples": 1000, "float_samples": 100},
  "theorem1": {"samples": 200, "m_max": 30, "mu_max": 4, "ab_max": 3, "max_denominator": 6,
               "corollary_samples": 20, "x": {"values": [0.25, 1.0, 4.0]}},
  "theorem2": {"samples": 200, "m_max": 30, "mu_max": 4, "beta_max": 3, "max_denominator": 6,
               "corollary_samples": 20, "eta": {"values": ["1", "3/2", "2"]}, "eta_samples": 20,
               "x": {"values": [0.25, 1.0, 4.0]}},
  "bessel": {"nu": {"min": "-1", "max": "5", "step": "1/2"}, "u": {"min": "1/2", "max": "20", "step": "1/2"},
             "epsilon": {"min": "1/4", "max": "3", "step": "1/4"}, "m_max": 30},
  "kummer": {"samples": 200, "flip_samples": 50, "contiguous_samples": 100, "a_max": 6.0, "b_max": 8.0, "x_max": 10.0},
  "pfq": {"samples": 400, "q_max": 3, "n_max": 50, "max_numerator": 12, "max_denominator": 4},
  "example2": {"eta": {"values": ["1", "3/2", "2", "3"]}, "nu": {"min": "-2", "max": "4", "step": "1/2"},
               "x": {"values": [0.0, 0.5, 1.0, 2.0, 5.0, 10.0]}, "s": {"values": ["1/2", "1", "2"]}},
  "example5": {"a": {"values": ["1", "3/2", "2", "5"]}, "k_max": 40, "nu": {"min": "1/2", "max": "5", "step": "1/2"},
               "x": {"values": [0.5, 1.0, 2.0, 5.0, 10.0]}},
  "conjecture": {"m_max": 10, "mu": {"min": "1/4", "max": "4", "step": "1/4"},
                 "alpha": {"min": "1/4", "max": "4", "step": "1/4"}, "beta": {"min": "1/4", "max": "4", "step": "1/4"}}
})");
  return d;
}

json effective_config(const json& user) {
  if (!user.is_object()) throw ConfigError("config must be a JSON object");
  json cfg = default_config();
  for (auto it = user.begin(); it != user.end(); ++it)
    if (!cfg.contains(it.key())) throw ConfigError("unknown config key '" + it.key() + "'");
  merge_into(cfg, user);
  const auto non_negative = [](const json& v) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
  };
  if (!non_negative(cfg.at("seed"))) throw ConfigError("'seed' must be a non-negative integer");
  if (!non_negative(cfg.at("cap")) || cfg.at("cap").get<std::uint64_t>() == 0)
    throw ConfigError("'cap' must be a positive integer");
  const json& tol = section(cfg, "tolerances");
  for (const char* k : {"relative", "contiguous", "oracle"})
    if (!(get_real(tol, k) > 0.0)) throw ConfigError(std::string("tolerance '") + k + "' must be > 0");
  return cfg;
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<std::string> parse_suite_selection(const std::string& text) {
  std::vector<std::string> out;
  if (text == "all") {
    for (const auto& s : list_suites()) out.push_back(s.name);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const bool known = std::any_of(list_suites().begin(), list_suites().end(),
                                   [&](const SuiteInfo& s) { return s.name == item; });
    if (!known) throw ConfigError("unknown suite '" + item + "'");
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) throw ConfigError("no checks selected");
  return out;
}

std::vector<Task> build_tasks(const std::string& suite, const json& config) {
  const std::size_t cap = config.at("cap").get<std::size_t>();
  if (suite == "lemmas") return lemmas(config, cap);
  if (suite == "theorem1") return theorem1(config, cap);
  if (suite == "theorem2") return theorem2(config, cap);
  if (suite == "bessel") return bessel(config, cap);
  if (suite == "kummer") return kummer(config, cap);
  if (suite == "pfq") return pfq_suite(config, cap);
  if (suite == "example2") return example2(config, cap);
  if (suite == "example5") return example5(config, cap);
  if (suite == "conjecture") return conjecture(config, cap);
  throw ConfigError("unknown suite '" + suite + "'");
}

namespace {

CheckResult run_one(const Task& task) {
  try {
    return task.run();
  } catch (const PreconditionError& e) {
    return make_hypothesis_violation(task.check_id, task.params, e.what());
  } catch (const HypothesisViolation& e) {
    return make_hypothesis_violation(task.check_id, task.params, e.what());
  } catch (const NonConvergenceError& e) {
    return make_skipped(task.check_id, task.params, e.what());
  } catch (const std::exception& e) {
    return CheckResult{task.check_id, task.params, Status::fail, std::monostate{},
                       Counterexample{task.params, std::string("error: ") + e.what()}};
  }
}

} // namespace

std::vector<CheckResult> run_tasks(const std::vector<Task>& tasks, std::size_t jobs) {
  std::vector<CheckResult> out(tasks.size());
  if (jobs <= 1 || tasks.size() < 2) {
    for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = run_one(tasks[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) out[i] = run_one(tasks[i]);
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < std::min(jobs, tasks.size()); ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

SuiteReport run_suite(const std::vector<std::string>& suites, const json& config, std::size_t jobs) {
  const json cfg = effective_config(config);
  if (suites.empty()) throw ConfigError("no checks selected");
  std::vector<Task> tasks;
  for (const auto& s : suites) {
    auto t = build_tasks(s, cfg);
    tasks.insert(tasks.end(), std::make_move_iterator(t.begin()), std::make_move_iterator(t.end()));
  }
  if (tasks.empty()) throw ConfigError("no checks selected");

  std::vector<CheckResult> results;
  {
    TolGuard guard(cfg.at("tolerances").at("relative").get<double>());
    results = run_tasks(tasks, jobs);
  }
  if (std::find(suites.begin(), suites.end(), "conjecture") != suites.end())
    results.push_back(conjecture_minimum(results));
  canonical_sort(results);

  SuiteReport r;
  for (std::size_t i = 0; i < suites.size(); ++i) r.suite += (i ? "," : "") + suites[i];
  r.timestamp = report_timestamp();
  r.config_digest = config_digest(cfg, r.suite);
  r.results = std::move(results);
  return r;
}

SuiteReport conjecture_scan(const json& config, std::size_t jobs) { return run_suite({"conjecture"}, config, jobs); }

} // namespace turan
