#include "coverlab/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace coverlab {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int y : img_) {
    if (y < 0 || static_cast<std::size_t>(y) >= img_.size() || seen[y]) {
      throw std::invalid_argument("image array is not a permutation");
    }
    seen[y] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) out.img_[img_[x]] = static_cast<int>(x);
  return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.img_.size() != q.img_.size()) throw std::invalid_argument("permutation degrees differ");
  Permutation out;
  out.img_.resize(p.img_.size());
  for (std::size_t x = 0; x < p.img_.size(); ++x) out.img_[x] = q.img_[p.img_[x]];
  return out;
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Permutation result = identity(degree());
  while (k > 0) {
    if (k & 1U) result = result * base;
    base = base * base;
    k >>= 1U;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (img_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t s = 0; s < img_.size(); ++s) {
    if (seen[s] || img_[s] == static_cast<int>(s)) continue;
    std::vector<int> cyc;
    for (int x = static_cast<int>(s); !seen[x]; x = img_[x]) {
      seen[x] = 1;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

BigInt Permutation::order() const {
  BigInt result = 1;
  for (const auto& c : cycles()) {
    const BigInt len = c.size();
    result = result / boost::multiprecision::gcd(result, len) * len;
  }
  return result;
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (img_[x] == static_cast<int>(x)) out.push_back(static_cast<int>(x));
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int y : p.images()) {
    h ^= static_cast<std::size_t>(y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace coverlab
