#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cuboid {

using BigInt = mpz_class;

/// Arbitrary-precision rational. Always canonical: denominator > 0,
/// gcd(|num|, den) = 1. Backed by GMP's mpq layer.
class BigRat {
 public:
  BigRat() : v_(0) {}
  BigRat(long n) : v_(n) {}                                      // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& n) : v_(n) {}                             // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("BigRat: zero denominator");
    v_.canonicalize();
  }
  BigRat(long num, long den) : BigRat(BigInt(num), BigInt(den)) {}

  /// Parses "a", "a/b", or a decimal-free signed integer string.
  static BigRat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(s));
    return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  }

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigRat operator-() const { return BigRat(mpq_class(-v_)); }
  BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
  BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
  BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
  BigRat& operator/=(const BigRat& o) {
    if (o.is_zero()) throw std::domain_error("BigRat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

  BigRat abs() const { return sign() < 0 ? -*this : *this; }

  /// x^e with integer e (negative allowed for nonzero x).
  BigRat pow(long e) const {
    if (e == 0) return BigRat(1);
    if (is_zero()) {
      if (e < 0) throw std::domain_error("BigRat: 0^negative");
      return BigRat(0);
    }
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), numerator().get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    mpz_pow_ui(d.get_mpz_t(), denominator().get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    return e > 0 ? BigRat(n, d) : BigRat(d, n);
  }

  /// Largest integer <= *this.
  BigInt floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
    return q;
  }

  std::string to_string() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
  }

  /// Truncated decimal rendering with `digits` fractional digits.
  std::string to_decimal(unsigned digits) const {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    BigInt scaled;
    BigInt num = numerator() * scale;
    mpz_tdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), denominator().get_mpz_t());
    bool neg = scaled < 0;
    BigInt a = neg ? BigInt(-scaled) : scaled;
    BigInt ip = a / scale, fp = a % scale;
    std::string frac = fp.get_str();
    frac.insert(0, digits - frac.size(), '0');
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (digits > 0) out += "." + frac;
    return out;
  }

  double to_double() const { return v_.get_d(); }

 private:
  explicit BigRat(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

}  // namespace cuboid
