#include "turan/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace turan {

namespace {

// zeta(k) - 1 for k = 2..35; drives the Taylor series of log Gamma about 2.
constexpr std::array<double, 34> kZetaMinusOne = {
    6.44934066848226406e-01, 2.02056903159594292e-01, 8.23232337111381857e-02,
    3.69277551433699266e-02, 1.73430619844491402e-02, 8.34927738192282713e-03,
    4.07735619794433960e-03, 2.00839282608221426e-03, 9.94575127818085256e-04,
    4.94188604119464529e-04, 2.46086553308048320e-04, 1.22713347578489145e-04,
    6.12481350587048277e-05, 3.05882363070204933e-05, 1.52822594086518710e-05,
    7.63719763789976257e-06, 3.81729326499984022e-06, 1.90821271655393897e-06,
    9.53962033872796212e-07, 4.76932986787806447e-07, 2.38450502727733004e-07,
    1.19219925965311064e-07, 5.96081890512594801e-08, 2.98035035146522793e-08,
    1.49015548283650427e-08, 7.45071178983543006e-09, 3.72533402478845728e-09,
    1.86265972351304914e-09, 9.31327432419668166e-10, 4.65662906503378366e-10,
    2.32831183367650534e-10, 1.16415501727005193e-10, 5.82077208790270145e-11,
    2.91038504449710001e-11,
};

constexpr double kEulerGamma = 0.57721566490153286061;

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993227684700473478,  676.520368121885098567009190444019,
    -1259.13921672240287047156078755283, 771.3234287776530788486528258894,
    -176.61502916214059906584551354,     12.507343278686904814458936853,
    -0.13857109526572011689554707,       9.984369578019570859563e-6,
    1.50563273514931155834e-7,
};

// log Gamma(2 + z) for |z| <= 1/2.
double ln_gamma_near_two(double z) {
  double sum = 0.0;
  double power = -z; // runs through (-z)^k
  for (std::size_t i = 0; i < kZetaMinusOne.size(); ++i) {
    power *= -z;
    const double k = static_cast<double>(i + 2);
    const double term = kZetaMinusOne[i] * power / k;
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
  }
  return (1.0 - kEulerGamma) * z + sum;
}

// Stirling series, x >= 10.
double ln_gamma_stirling(double x) {
  constexpr std::array<double, 8> b = {
      1.0 / 12.0,       -1.0 / 360.0,        1.0 / 1260.0,  -1.0 / 1680.0,
      1.0 / 1188.0,     -691.0 / 360360.0,   1.0 / 156.0,   -3617.0 / 122400.0,
  };
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double corr = 0.0;
  double p = inv;
  for (double c : b) {
    corr += c * p;
    p *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + corr;
}

} // namespace

GammaArgument GammaArgument::of(double x) { return {x, is_nonpositive_integer(x)}; }

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

double gamma_fn(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_fn: argument must be positive");
  if (x < 0.5) return gamma_fn(x + 1.0) / x;
  if (x <= 171.0 && std::floor(x) == x) {
    double f = 1.0;
    for (double k = 2.0; k < x; k += 1.0) f *= k;
    return f;
  }
  const double z = x - 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  // split the power to keep t^(z+0.5) finite up to x ~ 171.6
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * series;
}

double ln_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("ln_gamma: argument must be positive");
  if (x < 0.5) return ln_gamma(x + 1.0) - std::log(x);
  if (x < 1.5) return ln_gamma_near_two(x - 1.0) - std::log1p(x - 1.0);
  if (x <= 2.5) return ln_gamma_near_two(x - 2.0);
  if (x < 10.0) return std::log(gamma_fn(x));
  return ln_gamma_stirling(x);
}

double recip_gamma(double x) {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x)) return 0.0;
  if (x < 0.5) {
    // 1/Gamma(x) = x (x+1) ... (x+n-1) / Gamma(x+n)
    double prod = 1.0;
    double y = x;
    while (y < 0.5) {
      prod *= y;
      y += 1.0;
    }
    return prod * recip_gamma(y);
  }
  if (x <= 171.0) return 1.0 / gamma_fn(x);
  return std::exp(-ln_gamma(x));
}

double recip_gamma(const GammaArgument& arg) { return arg.pole ? 0.0 : recip_gamma(arg.value); }

double digamma(double x) {
  if (!(x > 0.0)) throw DomainError("digamma: argument must be positive");
  double shift = 0.0;
  while (x < 8.0) {
    shift += 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // B_{2k} / (2k) for k = 1..7
  constexpr std::array<double, 7> c = {
      1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
  };
  double series = 0.0;
  double p = inv2;
  for (double ck : c) {
    series += ck * p;
    p *= inv2;
  }
  return std::log(x) - 0.5 * inv - series - shift;
}

double pochhammer(double x, unsigned n) {
  double acc = 1.0;
  for (unsigned k = 0; k < n; ++k) acc *= x + static_cast<double>(k);
  return acc;
}

double gamma_ratio(double x, double alpha) {
  if (!(x > 0.0)) throw DomainError("gamma_ratio: x must be positive");
  if (alpha < 0.0) throw DomainError("gamma_ratio: alpha must be non-negative");
  if (alpha == 0.0) return 1.0;
  return std::exp(ln_gamma(x + alpha) - ln_gamma(x));
}

} // namespace turan
