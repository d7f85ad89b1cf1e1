#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "cuboid/rat.hpp"

namespace cuboid {

/// Element a + b*sqrt(2) of Q(sqrt 2), componentwise canonical.
/// Sign and comparison are exact (never through floating point):
/// sign(a + b*sqrt2) is decided by comparing a^2 against 2 b^2.
class QuadRat {
 public:
  QuadRat() = default;
  QuadRat(long n) : a_(n) {}                      // NOLINT(google-explicit-constructor)
  QuadRat(BigRat a) : a_(std::move(a)) {}         // NOLINT(google-explicit-constructor)
  QuadRat(BigRat a, BigRat b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadRat sqrt2() { return QuadRat(BigRat(0), BigRat(1)); }

  const BigRat& rational_part() const { return a_; }
  const BigRat& sqrt2_part() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  int sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite component signs: |a| vs |b|*sqrt2, i.e. a^2 vs 2 b^2.
    BigRat a2 = a_ * a_, b22 = b_ * b_ * BigRat(2);
    if (a2 == b22) throw std::logic_error("QuadRat: a^2 == 2 b^2 with nonzero parts");
    return a2 > b22 ? sa : sb;
  }

  QuadRat operator-() const { return QuadRat(-a_, -b_); }
  QuadRat& operator+=(const QuadRat& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QuadRat& operator-=(const QuadRat& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QuadRat& operator*=(const QuadRat& o) {
    BigRat a = a_ * o.a_ + BigRat(2) * b_ * o.b_;
    BigRat b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QuadRat& operator/=(const QuadRat& o) {
    if (o.is_zero()) throw std::domain_error("QuadRat: division by zero");
    // Multiply by the conjugate; norm a^2 - 2 b^2 is nonzero for o != 0.
    BigRat norm = o.a_ * o.a_ - BigRat(2) * o.b_ * o.b_;
    QuadRat conj(o.a_, -o.b_);
    *this *= conj;
    a_ /= norm;
    b_ /= norm;
    return *this;
  }

  friend QuadRat operator+(QuadRat a, const QuadRat& b) { return a += b; }
  friend QuadRat operator-(QuadRat a, const QuadRat& b) { return a -= b; }
  friend QuadRat operator*(QuadRat a, const QuadRat& b) { return a *= b; }
  friend QuadRat operator/(QuadRat a, const QuadRat& b) { return a /= b; }

  friend bool operator==(const QuadRat& x, const QuadRat& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadRat& x, const QuadRat& y) { return !(x == y); }
  friend bool operator<(const QuadRat& x, const QuadRat& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QuadRat& x, const QuadRat& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const QuadRat& x, const QuadRat& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const QuadRat& x, const QuadRat& y) { return (x - y).sign() >= 0; }

  QuadRat abs() const { return sign() < 0 ? -*this : *this; }

  QuadRat pow(long e) const {
    if (e < 0) return (QuadRat(1) / *this).pow(-e);
    QuadRat r(1), base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  /// Exact square root within Q(sqrt 2), if one exists and *this >= 0.
  std::optional<QuadRat> sqrt() const;

  std::string to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string s;
    if (!a_.is_zero()) s = a_.to_string() + (b_.sign() > 0 ? "+" : "");
    s += b_.to_string() + "*sqrt2";
    return s;
  }

  /// Truncated decimal rendering with `digits` fractional digits.
  std::string to_decimal(unsigned digits) const;

  double to_double() const;

 private:
  BigRat a_, b_;
};

namespace detail {
/// floor(sqrt(n)) for n >= 0.
inline BigInt isqrt(const BigInt& n) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}
/// Exact rational square root, if the argument is a perfect square.
inline std::optional<BigRat> rat_sqrt(const BigRat& x) {
  if (x.sign() < 0) return std::nullopt;
  BigInt n = x.numerator(), d = x.denominator();
  BigInt rn = isqrt(n), rd = isqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return BigRat(rn, rd);
}
}  // namespace detail

inline std::optional<QuadRat> QuadRat::sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (is_zero()) return QuadRat(0);
  if (b_.is_zero()) {
    if (auto r = detail::rat_sqrt(a_)) return QuadRat(*r);
    // a = 2 v^2 gives sqrt(a) = v*sqrt2.
    if (auto r = detail::rat_sqrt(a_ / BigRat(2))) return QuadRat(BigRat(0), *r);
    return std::nullopt;
  }
  // (u + v sqrt2)^2 = u^2 + 2 v^2 + 2uv sqrt2: u^2 and 2v^2 are the roots of
  // w^2 - a w + b^2/2 = 0, so they need sqrt(a^2 - 2 b^2) rational.
  auto disc = detail::rat_sqrt(a_ * a_ - BigRat(2) * b_ * b_);
  if (!disc) return std::nullopt;
  for (int pick = 0; pick < 2; ++pick) {
    BigRat u2 = (a_ + (pick ? -*disc : *disc)) / BigRat(2);
    auto u = detail::rat_sqrt(u2);
    if (!u || u->is_zero()) continue;
    BigRat v = b_ / (BigRat(2) * *u);
    QuadRat cand(*u, v);
    if (cand.sign() < 0) cand = -cand;
    if (cand * cand == *this) return cand;
  }
  return std::nullopt;
}

inline std::string QuadRat::to_decimal(unsigned digits) const {
  // a + b*sqrt2 rendered through an integer sqrt with guard digits.
  const unsigned guard = 8;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits + guard);
  // round-to-nearest scaled components
  auto scaled = [&](const BigRat& r) {
    BigInt q;
    BigInt num = r.numerator() * scale;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.denominator().get_mpz_t());
    return q;
  };
  BigInt sa = scaled(a_);
  // b*sqrt2 at the same scale: floor(b_num * sqrt(2*scale^2) / b_den) with sign care
  BigInt two_s2 = 2 * scale * scale;
  BigInt s2 = detail::isqrt(two_s2);
  BigInt sb_num = b_.numerator() * s2;
  BigInt sb;
  mpz_fdiv_q(sb.get_mpz_t(), sb_num.get_mpz_t(), b_.denominator().get_mpz_t());
  BigInt total = sa + sb;
  BigRat approx(total, scale);
  return approx.to_decimal(digits);
}

inline double QuadRat::to_double() const {
  return a_.to_double() + b_.to_double() * 1.4142135623730951;
}

}  // namespace cuboid
