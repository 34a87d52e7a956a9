#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace turan {

/// Exact arbitrary-precision rational, always held in lowest terms with a
/// positive denominator.
class BigRational {
public:
  BigRational() = default;
  BigRational(long value) : q_(value) {}
  BigRational(int value) : q_(static_cast<long>(value)) {}
  BigRational(long num, long den);
  explicit BigRational(const mpq_class& q);

  /// Accepts "p", "p/q", and finite decimals such as "-0.25" or "1.5e-3".
  static BigRational parse(std::string_view text);

  std::string to_string() const;          // "p/q", or "p" when q == 1
  std::string to_fraction_string() const; // always "p/q"
  double to_double() const { return q_.get_d(); }

  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  /// Integer value; only meaningful when is_integer() and it fits.
  long to_long() const;

  BigRational abs() const;
  BigRational inverse() const;

  const mpq_class& raw() const { return q_; }

  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class q_{0};
};

/// Rising factorial (x)_n = x(x+1)...(x+n-1), exact.
BigRational pochhammer_rational(const BigRational& x, unsigned n);

BigRational factorial_rational(unsigned n);

} // namespace turan
