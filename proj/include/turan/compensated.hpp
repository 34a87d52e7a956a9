#pragma once

#include <cmath>

namespace turan {

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  double value() const { return hi + lo; }
};

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
  DoubleDouble s = two_sum(a.hi, b.hi);
  const double lo = s.lo + a.lo + b.lo;
  return two_sum(s.hi, lo);
}

inline DoubleDouble operator-(const DoubleDouble& a) { return {-a.hi, -a.lo}; }
inline DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) { return a + (-b); }

inline DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
  DoubleDouble p = two_prod(a.hi, b.hi);
  const double lo = p.lo + (a.hi * b.lo + a.lo * b.hi);
  return two_sum(p.hi, lo);
}

inline DoubleDouble operator*(const DoubleDouble& a, double b) {
  DoubleDouble p = two_prod(a.hi, b);
  return two_sum(p.hi, p.lo + a.lo * b);
}

inline DoubleDouble operator/(const DoubleDouble& a, double b) {
  const double q1 = a.hi / b;
  const DoubleDouble r = a - two_prod(q1, b);
  const double q2 = r.value() / b;
  return two_sum(q1, q2);
}

/// Neumaier-compensated running sum; also tracks sum of |terms| for error bounds.
class CompensatedSum {
public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
    abs_ += std::fabs(x);
  }

  double value() const { return sum_ + comp_; }
  DoubleDouble dd() const {
    DoubleDouble r{sum_, 0.0};
    return r + DoubleDouble{comp_, 0.0};
  }
  double abs_sum() const { return abs_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double abs_ = 0.0;
};

} // namespace turan
