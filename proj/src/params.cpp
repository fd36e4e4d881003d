#include "coverlab/params.hpp"

#include <algorithm>
#include <stdexcept>

namespace coverlab {

namespace {

BigInt gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<BigInt> prime_factors(BigInt x) {
  std::vector<BigInt> out;
  for (BigInt p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      out.push_back(p);
      while (x % p == 0) x /= p;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

std::vector<BigInt> divisors(const BigInt& x) {
  std::vector<BigInt> small;
  std::vector<BigInt> large;
  for (BigInt d = 1; d * d <= x; ++d) {
    if (x % d == 0) {
      small.push_back(d);
      if (d * d != x) large.push_back(x / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

BigInt require_positive_integer(const Surd& x, const char* what) {
  if (!x.is_integer() || x.to_integer() <= 0) {
    throw std::invalid_argument(std::string(what) + " is not a positive integer: " + x.to_string());
  }
  return x.to_integer();
}

}  // namespace

CoverParams derive_params(const BigInt& n, const BigInt& r, const BigInt& mu) {
  if (n < 3) throw std::invalid_argument("derive_params: n must be at least 3");
  if (r < 2) throw std::invalid_argument("derive_params: r must be at least 2");
  if (mu < 1) throw std::invalid_argument("derive_params: mu must be at least 1");
  const BigInt lambda = n - (r - 1) * mu - 2;
  if (lambda < 0) throw std::invalid_argument("derive_params: lambda = n - (r-1) mu - 2 is negative");

  CoverParams p;
  p.n = n;
  p.r = r;
  p.mu = mu;
  p.lambda = lambda;
  p.v = n * r;

  // theta, tau are the roots of x^2 - (lambda - mu) x - (n - 1).
  const BigInt s = lambda - mu;
  const BigInt disc = s * s + 4 * (n - 1);
  if (disc <= 0) throw std::logic_error("derive_params: non-real eigenvalues");
  const Surd root = Surd::sqrt(disc);
  const Surd half(Rational(1, 2));
  p.theta = (Surd(s) + root) * half;
  p.tau = (Surd(s) - root) * half;

  const Surd scale = Surd(BigInt((r - 1) * n));
  const Surd gap = p.theta - p.tau;
  p.m_theta = -p.tau * scale / gap;
  p.m_tau = p.theta * scale / gap;
  p.multiplicities_integral = p.m_theta.is_integer() && p.m_tau.is_integer() &&
                              p.m_theta.to_integer() > 0 && p.m_tau.to_integer() > 0;
  return p;
}

FamilyBParams family_B(const BigInt& t, const BigInt& r) {
  if (t < 2) throw std::invalid_argument("family_B: t must be at least 2");
  if (r < 2) throw std::invalid_argument("family_B: r must be at least 2");
  FamilyBParams out;
  out.t = t;
  out.r = r;
  if (t == 2 && r == 3) {
    out.special = true;
    out.cover = derive_params(9, 3, 3);
    return out;
  }
  if ((t - 1) % r != 0) throw std::invalid_argument("family_B: r must divide t - 1");
  const BigInt t2 = t * t;
  const BigInt n = (t2 - 1) * (t2 - 1);
  const BigInt mu = (t - 1) * (t - 1) * (t2 + t - 1) / r;
  out.cover = derive_params(n, r, mu);

  const CoverParams& c = out.cover;
  if (!(c.tau == Surd(BigInt(-t))) || !(c.theta == Surd(BigInt(t * (t2 - 2)))) ||
      !(c.m_theta == Surd(BigInt((t2 - 1) * (r - 1)))) ||
      !(c.m_tau == Surd(BigInt((t2 - 2) * (t2 - 1) * (r - 1))))) {
    throw std::logic_error("family_B: derived spectrum disagrees with the closed form");
  }
  return out;
}

std::string to_string(FamilyABranch branch) {
  switch (branch) {
    case FamilyABranch::kGeneral: return "general";
    case FamilyABranch::kDoublePlus: return "r2_plus";
    case FamilyABranch::kDoubleMinus: return "r2_minus";
    case FamilyABranch::kSporadic: return "sporadic";
  }
  return "unknown";
}

CoverParams family_A(const Surd& t, const BigInt& r, FamilyABranch branch) {
  if (branch == FamilyABranch::kSporadic) return derive_params(28, 4, 8);

  const Surd sqrt5 = Surd::sqrt(5);
  const bool t_is_sqrt5 = t == sqrt5;
  if (!t.is_integer() && !t_is_sqrt5) {
    throw std::invalid_argument("family_A: t must be a positive integer or sqrt(5)");
  }
  if (branch == FamilyABranch::kGeneral) {
    if (t_is_sqrt5 || t.to_integer() < 3) throw std::invalid_argument("family_A: general branch needs integer t >= 3");
    if (r < 2 || r % 2 != 0) throw std::invalid_argument("family_A: general branch needs even r");
  } else {
    if (r != 2) throw std::invalid_argument("family_A: the double-cover branches need r = 2");
    if (!t_is_sqrt5 && t.to_integer() < 2) throw std::invalid_argument("family_A: t must be at least 2");
  }

  const Surd one(1);
  const Surd two(2);
  const Surd t2 = t * t;
  const Surd n = (t2 - two) * (t2 - one) / two;
  Surd mu_num;
  if (branch == FamilyABranch::kDoublePlus) {
    mu_num = (t + one) * (t + one) * (t + one) * (t - two);
  } else {
    mu_num = (t - one) * (t - one) * (t - one) * (t + two);
  }
  const Surd mu = mu_num / Surd(BigInt(2 * r));
  return derive_params(require_positive_integer(n, "n"), r, require_positive_integer(mu, "mu"));
}

std::vector<FeasibleB> feasible_B(const BigInt& t_max) {
  std::vector<FeasibleB> out;
  const FamilyBParams special = family_B(2, 3);
  out.push_back({special.t, special.r, true, special.cover});
  for (BigInt t = 3; t <= t_max; ++t) {
    for (const BigInt& r : divisors(t - 1)) {
      if (r < 2 || gcd(r, 6) != 1) continue;
      FamilyBParams p = family_B(t, r);
      out.push_back({t, r, false, std::move(p.cover)});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const FeasibleB& a, const FeasibleB& b) {
    return a.t != b.t ? a.t < b.t : a.r < b.r;
  });
  return out;
}

std::vector<std::string> family_A_conditions(const BigInt& t, const BigInt& r) {
  std::vector<std::string> held;
  const BigInt x = (t - 1) * (t - 1) * (t - 1) * (t + 2);
  if (r < 2 || x % (2 * r) != 0) return held;
  const BigInt mu = x / (2 * r);
  held.push_back("i");
  if (t >= 3 && t % 4 != 0) held.push_back("ii");
  if (mu >= 2) held.push_back("iii");
  if (2 * r > t * t + 1 || (t - 1) % r == 0) held.push_back("iv");
  if (t % 2 == 0 || mu % 2 == 0) held.push_back("v");
  bool odd_primes_divide = true;
  for (const BigInt& p : prime_factors(r)) {
    if (p != 2 && (t - 1) % p != 0) odd_primes_divide = false;
  }
  if (odd_primes_divide) held.push_back("vi");
  return held;
}

std::vector<FeasibleA> feasible_A(const BigInt& t_max) {
  std::vector<FeasibleA> out;
  out.push_back({Surd(3), 4, FamilyABranch::kSporadic, family_A(Surd(3), 4, FamilyABranch::kSporadic),
                 {"sporadic"}});

  // r = 2 double covers: t in {sqrt 5} and integers 2..t_max, both signs.
  auto add_double = [&](const Surd& t) {
    std::optional<CoverParams> minus;
    try {
      minus = family_A(t, 2, FamilyABranch::kDoubleMinus);
      out.push_back({t, 2, FamilyABranch::kDoubleMinus, *minus, {"r=2", "minus"}});
    } catch (const std::invalid_argument&) {
    }
    try {
      CoverParams plus = family_A(t, 2, FamilyABranch::kDoublePlus);
      const bool duplicate = minus && minus->n == plus.n && minus->mu == plus.mu;
      if (!duplicate) out.push_back({t, 2, FamilyABranch::kDoublePlus, plus, {"r=2", "plus"}});
    } catch (const std::invalid_argument&) {
    }
  };
  const Surd sqrt5 = Surd::sqrt(5);
  for (BigInt t = 2; t <= t_max; ++t) {
    if (t == 3) add_double(sqrt5);  // sqrt 5 lies between 2 and 3
    add_double(Surd(t));
  }
  if (t_max < 3) add_double(sqrt5);

  // General branch, r >= 4 even, r | (t-1)^3 (t+2) / 2 so that mu is an integer.
  for (BigInt t = 3; t <= t_max; ++t) {
    const BigInt half = (t - 1) * (t - 1) * (t - 1) * (t + 2) / 2;
    for (const BigInt& r : divisors(half)) {
      if (r < 4 || r % 2 != 0) continue;
      std::vector<std::string> held = family_A_conditions(t, r);
      if (held.size() != 6) continue;
      CoverParams p;
      try {
        p = family_A(Surd(t), r, FamilyABranch::kGeneral);
      } catch (const std::invalid_argument&) {
        continue;  // lambda < 0
      }
      out.push_back({Surd(t), r, FamilyABranch::kGeneral, std::move(p), std::move(held)});
    }
  }
  return out;
}

HoffmanBounds hoffman_bounds(const FamilyBParams& p) {
  const BigInt& t = p.t;
  const BigInt clique = 1 + (t * t - 2) * t;
  const BigInt n = (t * t - 1) * (t * t - 1);
  return {Rational(clique), Rational(p.r * n, clique)};
}

}  // namespace coverlab
