#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace coverlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Writes `x = square * square_free` with `square_free` square-free.
/// Returns {root of the square part, square-free part}. `x` must be positive.
/// Throws std::domain_error when `x` is not a perfect square and too large to
/// factor by trial division.
std::pair<BigInt, BigInt> squarefree_decompose(const BigInt& x);

/// Integer square root (floor). `x` must be non-negative.
BigInt isqrt(const BigInt& x);
bool is_perfect_square(const BigInt& x);

/// Exact element a + b*sqrt(d) of a real quadratic field, with a, b rational
/// and d a square-free positive integer. d == 1 denotes the rationals; the
/// value is then kept in `a` with b == 0.
class Surd {
 public:
  Surd() = default;
  Surd(long long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Surd(const BigInt& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Surd(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Surd(Rational a, Rational b, BigInt d);

  /// sqrt(x) for a non-negative integer x.
  static Surd sqrt(const BigInt& x);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coefficient() const { return b_; }
  const BigInt& radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_integer() const;
  /// Valid only when is_integer().
  BigInt to_integer() const;
  double to_double() const;
  int sign() const;

  Surd conjugate() const { return Surd(a_, -b_, d_); }

  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y);
  friend Surd operator*(const Surd& x, const Surd& y);
  friend Surd operator/(const Surd& x, const Surd& y);
  Surd operator-() const { return Surd(-a_, -b_, d_); }
  Surd& operator+=(const Surd& y) { return *this = *this + y; }
  Surd& operator-=(const Surd& y) { return *this = *this - y; }
  Surd& operator*=(const Surd& y) { return *this = *this * y; }

  friend bool operator==(const Surd& x, const Surd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator<(const Surd& x, const Surd& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Surd& x, const Surd& y) { return (x - y).sign() > 0; }

  std::string to_string() const;

 private:
  void normalize();
  static BigInt common_radicand(const Surd& x, const Surd& y);

  Rational a_{0};
  Rational b_{0};
  BigInt d_{1};
};

std::string to_string(const Rational& q);

}  // namespace coverlab
