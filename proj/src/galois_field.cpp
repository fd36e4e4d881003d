#include "coverlab/galois_field.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace coverlab {

namespace {

const std::map<int, std::vector<int>>& conway_table() {
  static const std::map<int, std::vector<int>> table = {
      {2, {1, 1}},        {3, {1, 1}},       {4, {1, 1, 1}},   {5, {3, 1}},          {7, {4, 1}},
      {8, {1, 1, 0, 1}},  {9, {2, 2, 1}},    {11, {9, 1}},     {13, {11, 1}},        {16, {1, 1, 0, 0, 1}},
  };
  return table;
}

}  // namespace

bool GaloisField::is_prime_power(int q, int* p, int* k) {
  if (q < 2) return false;
  int base = 0;
  for (int d = 2; d <= q; ++d) {
    if (q % d == 0) {
      base = d;
      break;
    }
  }
  int e = 0;
  int rest = q;
  while (rest % base == 0) {
    rest /= base;
    ++e;
  }
  if (rest != 1) return false;
  if (p) *p = base;
  if (k) *k = e;
  return true;
}

bool GaloisField::supported(int q) { return conway_table().count(q) > 0; }

GaloisField::GaloisField(int q) : q_(q) {
  if (!is_prime_power(q, &p_, &k_)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  if (!supported(q)) throw std::invalid_argument("no field tables for q = " + std::to_string(q) + " (supported: q <= 16)");
  conway_ = conway_table().at(q);

  auto digits = [&](int a) {
    std::vector<int> d(k_);
    for (int i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int a = 0;
    for (int i = k_; i-- > 0;) a = a * p_ + d[i];
    return a;
  };

  add_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    const auto da = digits(a);
    std::vector<int> dn(k_);
    for (int i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = encode(dn);
    for (int b = 0; b < q_; ++b) {
      const auto db = digits(b);
      std::vector<int> ds(k_);
      for (int i = 0; i < k_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = encode(ds);
    }
  }

  // Multiplication by the root xi of the Conway polynomial.
  auto times_xi = [&](int a) {
    std::vector<int> d = digits(a);
    if (k_ == 1) return (d[0] * ((p_ - conway_[0]) % p_)) % p_;
    const int top = d[k_ - 1];
    for (int i = k_ - 1; i > 0; --i) d[i] = d[i - 1];
    d[0] = 0;
    for (int i = 0; i < k_; ++i) d[i] = ((d[i] - top * conway_[i]) % p_ + p_) % p_;
    return encode(d);
  };
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, -1);
  int x = 1;
  for (int i = 0; i < q_ - 1; ++i) {
    if (log_[x] >= 0) throw std::logic_error("Conway polynomial root is not primitive");
    exp_[i] = x;
    log_[x] = i;
    x = times_xi(x);
  }
}

int GaloisField::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

int GaloisField::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int GaloisField::pow(int a, long long e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const long long m = q_ - 1;
  const long long l = ((log_[a] * (e % m)) % m + m) % m;
  return exp_[l];
}

std::vector<int> GaloisField::additive_basis() const {
  std::vector<int> out;
  for (int i = 0, b = 1; i < k_; ++i, b *= p_) out.push_back(b);
  return out;
}

}  // namespace coverlab
