#include "coverlab/numtheory.hpp"

#include <doctest.h>

#include <algorithm>
#include <tuple>

using namespace coverlab;

TEST_CASE("primality and prime powers") {
  CHECK(is_prime(2));
  CHECK(is_prime(8191));
  CHECK(is_prime(BigInt(131071)));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  const auto pp = prime_power(BigInt(6561));
  REQUIRE(pp.has_value());
  CHECK(pp->p == 3);
  CHECK(pp->k == 8);
  CHECK_FALSE(prime_power(BigInt(12)).has_value());
  CHECK_FALSE(prime_power(BigInt(1)).has_value());
  CHECK(ipow(3, 40) == BigInt("12157665459056928801"));
}

TEST_CASE("p_part") {
  const PPartDecomposition a = p_part(63, 3);
  CHECK(a.p_part == 9);
  CHECK(a.p_prime_part == 7);
  CHECK(p_part(63, 2).p_part == 1);
  CHECK(p_part(2400, 2).p_part == 32);
  CHECK(p_part(2400, 2).p_prime_part == 75);
  for (int l = 1; l <= 500; ++l) {
    for (int p : {2, 3, 5, 7, 11}) {
      const PPartDecomposition d = p_part(l, p);
      CHECK(d.p_part * d.p_prime_part == l);
      CHECK(d.p_prime_part % p != 0);
    }
  }
  CHECK_THROWS_AS(p_part(10, 4), std::invalid_argument);
  CHECK_THROWS_AS(p_part(0, 2), std::invalid_argument);
}

TEST_CASE("lifting identity examples") {
  const LiftingCheck a = lifting_identity_check(4, +1, 3, 3);
  CHECK(a.applicable);
  CHECK(a.lhs == 9);
  CHECK(a.rhs == 9);
  CHECK(a.equal);
  const LiftingCheck b = lifting_identity_check(5, -1, 3, 3);
  CHECK(b.applicable);
  CHECK(b.lhs == 9);
  CHECK(b.rhs == 9);
  CHECK(b.equal);
  CHECK_FALSE(lifting_identity_check(3, +1, 2, 2).applicable);
  // p = 2 with 4 | q - e: (9^2 - 1)_2 = 16 = (2)_2 (8)_2.
  const LiftingCheck c = lifting_identity_check(9, +1, 2, 2);
  CHECK(c.applicable);
  CHECK(c.lhs == 16);
  CHECK(c.equal);
  // Odd p not dividing q - e is outside the hypothesis.
  CHECK_FALSE(lifting_identity_check(5, +1, 3, 3).applicable);
}

TEST_CASE("gcd identity examples") {
  const GcdCheck a = gcd_qpow(2, 6, 4);
  CHECK(a.gcd == 3);
  CHECK(a.equal);
  const GcdCheck b = gcd_qpow(3, 4, 6);
  CHECK(b.gcd == 8);
  CHECK(b.equal);
  for (unsigned k = 1; k <= 10; ++k) CHECK(gcd_qpow(7, k, k).gcd == ipow(7, k) - 1);
}

TEST_CASE("lifting and gcd sweeps have no counterexamples") {
  const SweepReport l = lifting_sweep();
  CHECK(l.checked == 44100);
  CHECK(l.applicable == 4980);
  CHECK(l.counterexamples.empty());
  const SweepReport g = gcd_sweep();
  CHECK(g.checked == 30400);
  CHECK(g.counterexamples.empty());
}

TEST_CASE("zsigmondy corollary up to 10^6") {
  const auto sols = zsigmondy_corollary_solve(1000000);
  std::vector<std::tuple<int, int, int, int>> got;
  for (const auto& s : sols) {
    got.emplace_back(s.p, s.m, s.q, s.n);
    CHECK(s.lemma_case >= 1);
    CHECK(s.lemma_case <= 3);
    CHECK(s.lemma_case == zsigmondy_case(s.p, s.m, s.q, s.n));
  }
  const std::vector<std::tuple<int, int, int, int>> expected{
      {3, 1, 2, 1},    {2, 2, 3, 1},   {5, 1, 2, 2},      {2, 3, 7, 1},      {3, 2, 2, 3},
      {17, 1, 2, 4},   {2, 5, 31, 1},  {2, 7, 127, 1},    {257, 1, 2, 8},    {2, 13, 8191, 1},
      {65537, 1, 2, 16}, {2, 17, 131071, 1}, {2, 19, 524287, 1}};
  CHECK(got == expected);
  CHECK(zsigmondy_case(3, 2, 2, 3) == 1);
  for (auto [p, n] : {std::pair{5, 2}, {17, 4}, {257, 8}}) CHECK(zsigmondy_case(p, 1, 2, n) == 2);
  for (auto [m, q] : {std::pair{2, 3}, {3, 7}, {5, 31}, {7, 127}, {13, 8191}}) CHECK(zsigmondy_case(2, m, q, 1) == 3);
  CHECK(zsigmondy_case(7, 1, 2, 3) == 0);
  CHECK(zsigmondy_corollary_solve(10000).size() == 10);
}

TEST_CASE("Nagell-Ljunggren search") {
  using S = NagellLjunggrenSolution;
  const auto all = nagell_ljunggren_search(200, 20);
  REQUIRE(all.size() == 2);
  CHECK(std::count(all.begin(), all.end(), S{7, 4, 20}) == 1);
  CHECK(std::count(all.begin(), all.end(), S{3, 5, 11}) == 1);
  CHECK(nagell_ljunggren_search(6, 20) == std::vector<S>{{3, 5, 11}});
  CHECK(nagell_ljunggren_search(2, 3).empty());
}
