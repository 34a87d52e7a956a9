#include "turan/big_rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace turan {

BigRational::BigRational(long num, long den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational::BigRational(const mpq_class& q) : q_(q) {
  if (q_.get_den() == 0) throw std::domain_error("BigRational: zero denominator");
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("BigRational: malformed integer '" + std::string(s) + "'");
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

} // namespace

BigRational BigRational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("BigRational: empty string");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '+') den_text.remove_prefix(1);
    mpz_class den = parse_integer(den_text);
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    return BigRational(mpq_class(num, den));
  }

  // decimal with optional exponent
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    exponent = parse_integer(text.substr(e + 1)).get_si();
  }
  bool neg = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    neg = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = mantissa.substr(0, dot);
    std::string_view frac_part = mantissa.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty()))
      throw std::invalid_argument("BigRational: malformed decimal '" + std::string(text) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    frac_digits = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(mantissa)) throw std::invalid_argument("BigRational: malformed number '" + std::string(text) + "'");
    digits = std::string(mantissa);
  }
  mpz_class num(digits, 10);
  if (neg) num = -num;
  const long shift = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  return shift >= 0 ? BigRational(mpq_class(num * scale)) : BigRational(mpq_class(num, scale));
}

std::string BigRational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string BigRational::to_fraction_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

long BigRational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p())
    throw std::range_error("BigRational: not a machine integer");
  return q_.get_num().get_si();
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(q_))); }

BigRational BigRational::inverse() const {
  if (is_zero()) throw std::domain_error("BigRational: division by zero");
  return BigRational(mpq_class(1 / q_));
}

BigRational& BigRational::operator+=(const BigRational& o) { q_ += o.q_; return *this; }
BigRational& BigRational::operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
BigRational& BigRational::operator*=(const BigRational& o) { q_ *= o.q_; return *this; }

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  q_ /= o.q_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-q_)); }

BigRational pochhammer_rational(const BigRational& x, unsigned n) {
  mpq_class acc(1);
  mpq_class term = x.raw();
  for (unsigned k = 0; k < n; ++k) {
    acc *= term;
    if (acc == 0) break;
    term += 1;
  }
  return BigRational(acc);
}

BigRational factorial_rational(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return BigRational(mpq_class(f));
}

} // namespace turan
