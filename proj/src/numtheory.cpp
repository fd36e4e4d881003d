#include "coverlab/numtheory.hpp"

#include "coverlab/parallel.hpp"

#include <boost/multiprecision/integer.hpp>

#include <numeric>
#include <stdexcept>

namespace coverlab {

bool is_prime(const BigInt& x) {
  if (x < 2) return false;
  if (x < 4) return true;
  if (x % 2 == 0) return false;
  for (BigInt d = 3; d * d <= x; d += 2) {
    if (x % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> prime_power(const BigInt& x) {
  if (x < 2) return std::nullopt;
  BigInt p = 0;
  if (x % 2 == 0) {
    p = 2;
  } else {
    for (BigInt d = 3; d * d <= x; d += 2) {
      if (x % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0) return PrimePower{x, 1};
  }
  PrimePower out{p, 0};
  BigInt rest = x;
  while (rest % p == 0) {
    rest /= p;
    ++out.k;
  }
  if (rest != 1) return std::nullopt;
  return out;
}

BigInt ipow(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

PPartDecomposition p_part(const BigInt& l, const BigInt& p) {
  if (l < 1) throw std::invalid_argument("p_part: l must be positive");
  if (!is_prime(p)) throw std::invalid_argument("p_part: " + p.str() + " is not prime");
  PPartDecomposition out{l, p, 1, l};
  while (out.p_prime_part % p == 0) {
    out.p_prime_part /= p;
    out.p_part *= p;
  }
  return out;
}

LiftingCheck lifting_identity_check(const BigInt& q, int e, unsigned m, const BigInt& p) {
  if (e != 1 && e != -1) throw std::invalid_argument("lifting_identity_check: e must be +1 or -1");
  LiftingCheck out;
  const BigInt qe = q - e;
  const BigInt em = (e == -1 && m % 2 == 1) ? BigInt(-1) : BigInt(1);
  const BigInt value = ipow(q, m) - em;
  if (!is_prime(p) || qe == 0 || value == 0) return out;
  if (p == 2) {
    out.applicable = qe % 4 == 0 || m % 2 == 1;
  } else {
    out.applicable = qe % p == 0;
  }
  if (!out.applicable) return out;
  out.lhs = p_part(abs(value), p).p_part;
  out.rhs = p_part(BigInt(m), p).p_part * p_part(abs(qe), p).p_part;
  out.equal = out.lhs == out.rhs;
  return out;
}

GcdCheck gcd_qpow(const BigInt& q, unsigned k, unsigned m) {
  GcdCheck out;
  out.gcd = boost::multiprecision::gcd(ipow(q, k) - 1, ipow(q, m) - 1);
  out.expected = ipow(q, std::gcd(k, m)) - 1;
  out.equal = out.gcd == out.expected;
  return out;
}

int zsigmondy_case(std::uint64_t p, std::uint64_t m, std::uint64_t q, std::uint64_t n) {
  if (q == 2 && p == 3 && n == 3 && m == 2) return 1;
  const bool n_power_of_two = n > 0 && (n & (n - 1)) == 0;
  if (q == 2 && m == 1 && n_power_of_two && is_prime(BigInt(p))) return 2;
  if (p == 2 && n == 1 && is_prime(BigInt(q)) && is_prime(BigInt(m))) return 3;
  return 0;
}

std::vector<ZsigmondySolution> zsigmondy_corollary_solve(std::uint64_t bound) {
  if (bound < 4) throw std::invalid_argument("zsigmondy_corollary_solve: bound must be at least 4");
  // Smallest-prime-factor sieve up to bound.
  std::vector<std::uint32_t> spf(bound + 1, 0);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= bound; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  auto as_prime_power = [&](std::uint64_t x, std::uint64_t& base, std::uint64_t& exp) {
    if (x < 2) return false;
    base = spf[x];
    exp = 0;
    while (x % base == 0) {
      x /= base;
      ++exp;
    }
    return x == 1;
  };
  std::vector<ZsigmondySolution> out;
  for (std::uint64_t value = 3; value <= bound; ++value) {
    std::uint64_t p = 0, m = 0, q = 0, n = 0;
    if (!as_prime_power(value, p, m) || !as_prime_power(value - 1, q, n)) continue;
    out.push_back({p, m, q, n, zsigmondy_case(p, m, q, n)});
  }
  return out;
}

std::vector<NagellLjunggrenSolution> nagell_ljunggren_search(unsigned x_max, unsigned i_max) {
  std::vector<NagellLjunggrenSolution> out;
  if (x_max < 2 || i_max < 3) return out;
  const std::size_t count = x_max - 1;
  std::vector<std::vector<NagellLjunggrenSolution>> parts(chunk_count(count));
  parallel_chunks(count, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const unsigned x = static_cast<unsigned>(idx + 2);
      BigInt sum = 1 + BigInt(x);  // i = 2
      BigInt power = x;
      for (unsigned i = 3; i <= i_max; ++i) {
        power *= x;
        sum += power;
        const BigInt root = isqrt(sum);
        if (root * root == sum) parts[chunk].push_back({x, i, root});
      }
    }
  });
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

SweepReport lifting_sweep(const SweepBounds& b) {
  SweepReport report;
  report.name = "lifting";
  std::vector<unsigned> primes;
  for (unsigned p = 2; p <= b.lifting_p; ++p) {
    if (is_prime(BigInt(p))) primes.push_back(p);
  }
  const std::size_t count = b.lifting_q >= 2 ? b.lifting_q - 1 : 0;
  std::vector<SweepReport> parts(chunk_count(count));
  parallel_chunks(count, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const unsigned q = static_cast<unsigned>(idx + 2);
      for (int e : {1, -1}) {
        for (unsigned m = 1; m <= b.lifting_m; ++m) {
          for (unsigned p : primes) {
            const LiftingCheck c = lifting_identity_check(q, e, m, p);
            ++parts[chunk].checked;
            if (!c.applicable) continue;
            ++parts[chunk].applicable;
            if (!c.equal) {
              parts[chunk].counterexamples.push_back("q=" + std::to_string(q) + " e=" + std::to_string(e) +
                                                     " m=" + std::to_string(m) + " p=" + std::to_string(p));
            }
          }
        }
      }
    }
  });
  for (auto& part : parts) {
    report.checked += part.checked;
    report.applicable += part.applicable;
    report.counterexamples.insert(report.counterexamples.end(), part.counterexamples.begin(), part.counterexamples.end());
  }
  return report;
}

SweepReport gcd_sweep(const SweepBounds& b) {
  SweepReport report;
  report.name = "gcd";
  const std::size_t count = b.gcd_q >= 2 ? b.gcd_q - 1 : 0;
  std::vector<SweepReport> parts(chunk_count(count));
  parallel_chunks(count, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const unsigned q = static_cast<unsigned>(idx + 2);
      for (unsigned k = 1; k <= b.gcd_km; ++k) {
        for (unsigned m = 1; m <= b.gcd_km; ++m) {
          ++parts[chunk].checked;
          ++parts[chunk].applicable;
          if (!gcd_qpow(q, k, m).equal) {
            parts[chunk].counterexamples.push_back("q=" + std::to_string(q) + " k=" + std::to_string(k) +
                                                   " m=" + std::to_string(m));
          }
        }
      }
    }
  });
  for (auto& part : parts) {
    report.checked += part.checked;
    report.applicable += part.applicable;
    report.counterexamples.insert(report.counterexamples.end(), part.counterexamples.begin(), part.counterexamples.end());
  }
  return report;
}

}  // namespace coverlab
