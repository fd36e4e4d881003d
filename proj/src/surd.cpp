#include "coverlab/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace coverlab {

namespace {

constexpr unsigned long kTrialDivisionLimit = 1000000;

}  // namespace

BigInt isqrt(const BigInt& x) {
  if (x < 0) throw std::domain_error("isqrt of a negative number");
  return boost::multiprecision::sqrt(x);
}

bool is_perfect_square(const BigInt& x) {
  if (x < 0) return false;
  const BigInt s = isqrt(x);
  return s * s == x;
}

std::pair<BigInt, BigInt> squarefree_decompose(const BigInt& x) {
  if (x <= 0) throw std::domain_error("squarefree_decompose needs a positive integer");
  if (is_perfect_square(x)) return {isqrt(x), BigInt(1)};

  BigInt rest = x;
  BigInt root = 1;
  BigInt free = 1;
  unsigned long p = 2;
  for (; p <= kTrialDivisionLimit && BigInt(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) free *= p;
  }
  if (rest > 1) {
    const BigInt pp = BigInt(p);
    if (pp * pp > rest) {
      free *= rest;  // prime
    } else if (is_perfect_square(rest)) {
      root *= isqrt(rest);
    } else if (pp * pp * pp > rest) {
      free *= rest;  // at most two distinct large prime factors
    } else {
      throw std::domain_error("squarefree_decompose: cofactor too large to factor");
    }
  }
  return {root, free};
}

Surd::Surd(Rational a, Rational b, BigInt d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ <= 0) throw std::domain_error("Surd radicand must be positive");
  normalize();
}

Surd Surd::sqrt(const BigInt& x) {
  if (x < 0) throw std::domain_error("Surd::sqrt of a negative number");
  if (x == 0) return Surd();
  auto [root, free] = squarefree_decompose(x);
  return Surd(Rational(0), Rational(root), free);
}

void Surd::normalize() {
  if (d_ != 1) {
    // Pull square factors out of the radicand.
    auto [root, free] = squarefree_decompose(d_);
    if (root != 1) {
      b_ *= root;
      d_ = free;
    }
  }
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0) d_ = 1;
}

bool Surd::is_integer() const {
  return is_rational() && boost::multiprecision::denominator(a_) == 1;
}

BigInt Surd::to_integer() const {
  if (!is_integer()) throw std::domain_error("Surd is not an integer: " + to_string());
  return boost::multiprecision::numerator(a_);
}

double Surd::to_double() const {
  const double a = static_cast<double>(a_);
  if (b_ == 0) return a;
  return a + static_cast<double>(b_) * std::sqrt(static_cast<double>(d_));
}

int Surd::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 d.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(d_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

BigInt Surd::common_radicand(const Surd& x, const Surd& y) {
  if (x.b_ == 0) return y.d_;
  if (y.b_ == 0) return x.d_;
  if (x.d_ != y.d_) {
    throw std::domain_error("Surd arithmetic across different quadratic fields: sqrt(" +
                            x.d_.str() + ") vs sqrt(" + y.d_.str() + ")");
  }
  return x.d_;
}

Surd operator+(const Surd& x, const Surd& y) {
  const BigInt d = Surd::common_radicand(x, y);
  return Surd(x.a_ + y.a_, x.b_ + y.b_, d);
}

Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

Surd operator*(const Surd& x, const Surd& y) {
  const BigInt d = Surd::common_radicand(x, y);
  const Rational dd(d);
  return Surd(x.a_ * y.a_ + x.b_ * y.b_ * dd, x.a_ * y.b_ + x.b_ * y.a_, d);
}

Surd operator/(const Surd& x, const Surd& y) {
  // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d)
  const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(y.d_);
  if (norm == 0) throw std::domain_error("Surd division by zero");
  const Surd num = x * y.conjugate();
  return Surd(num.a_ / norm, num.b_ / norm, num.d_);
}

std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::string Surd::to_string() const {
  if (b_ == 0) return coverlab::to_string(a_);
  std::string out;
  if (a_ != 0) out = coverlab::to_string(a_) + (b_ > 0 ? " + " : " - ");
  else if (b_ < 0) out = "-";
  const Rational mag = b_ < 0 ? Rational(-b_) : b_;
  if (mag != 1) out += coverlab::to_string(mag) + "*";
  out += "sqrt(" + d_.str() + ")";
  return out;
}

}  // namespace coverlab
