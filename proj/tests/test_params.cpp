#include "coverlab/params.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace coverlab;

TEST_CASE("derive_params: (9,3,3)") {
  const CoverParams p = derive_params(9, 3, 3);
  CHECK(p.lambda == 1);
  CHECK(p.theta == Surd(2));
  CHECK(p.tau == Surd(-4));
  CHECK(p.m_theta == Surd(12));
  CHECK(p.m_tau == Surd(6));
  CHECK(p.v == 27);
  CHECK(p.multiplicities_integral);
}

TEST_CASE("derive_params: hexagon (3,2,1)") {
  const CoverParams p = derive_params(3, 2, 1);
  CHECK(p.lambda == 0);
  CHECK(p.theta == Surd(1));
  CHECK(p.tau == Surd(-2));
  CHECK(p.m_theta == Surd(2));
  CHECK(p.m_tau == Surd(1));
}

TEST_CASE("derive_params: icosahedron (6,2,2) has exact surd eigenvalues") {
  const CoverParams p = derive_params(6, 2, 2);
  CHECK(p.lambda == 2);
  CHECK(p.theta == Surd::sqrt(5));
  CHECK(p.tau == -Surd::sqrt(5));
  CHECK(p.tau.radicand() == 5);
  CHECK(p.m_theta == Surd(3));
  CHECK(p.m_tau == Surd(3));
}

TEST_CASE("derive_params rejects negative lambda and small inputs") {
  CHECK_THROWS_AS(derive_params(3, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(derive_params(2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(derive_params(5, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(derive_params(5, 2, 0), std::invalid_argument);
}

TEST_CASE("derive_params invariants over a grid") {
  for (int n = 3; n <= 40; ++n) {
    for (int r = 2; r <= 6; ++r) {
      for (int mu = 1; n - (r - 1) * mu - 2 >= 0; ++mu) {
        const CoverParams p = derive_params(n, r, mu);
        CHECK(p.theta * p.tau == Surd(-(n - 1)));
        CHECK(p.theta + p.tau == Surd(BigInt(p.lambda - p.mu)));
        CHECK(p.m_theta + p.m_tau == Surd(BigInt((r - 1) * n)));
        CHECK(p.theta > Surd(-1));
        CHECK(p.tau < Surd(-1));
        // Trace of the adjacency matrix vanishes.
        CHECK(Surd(n - 1) + p.m_theta * p.theta - Surd(n - 1) + p.m_tau * p.tau == Surd(0));
      }
    }
  }
}

TEST_CASE("family_B spot values") {
  const FamilyBParams a = family_B(6, 5);
  CHECK(a.cover.n == 1225);
  CHECK(a.cover.r == 5);
  CHECK(a.cover.mu == 205);
  CHECK(a.cover.tau == Surd(-6));
  const FamilyBParams b = family_B(12, 11);
  CHECK(b.cover.n == 20449);
  CHECK(b.cover.mu == 1705);
  const FamilyBParams s = family_B(2, 3);
  CHECK(s.special);
  CHECK(s.cover.n == 9);
  CHECK(s.cover.r == 3);
  CHECK(s.cover.mu == 3);
  CHECK_THROWS_AS(family_B(6, 3), std::invalid_argument);
}

TEST_CASE("family_A examples") {
  CHECK(family_A(Surd(3), 2, FamilyABranch::kDoublePlus).mu == 16);
  const CoverParams schlafli = family_A(Surd(3), 2, FamilyABranch::kDoubleMinus);
  CHECK(schlafli.n == 28);
  CHECK(schlafli.mu == 10);
  const CoverParams hexagon = family_A(Surd(2), 2, FamilyABranch::kDoubleMinus);
  CHECK(hexagon.n == 3);
  CHECK(hexagon.mu == 1);
  const CoverParams mclaughlin = family_A(Surd(5), 2, FamilyABranch::kDoubleMinus);
  CHECK(mclaughlin.n == 276);
  CHECK(mclaughlin.mu == 112);
  const CoverParams ico = family_A(Surd::sqrt(5), 2, FamilyABranch::kDoubleMinus);
  CHECK(ico.n == 6);
  CHECK(ico.mu == 2);
}

TEST_CASE("feasible_B small tables") {
  auto keys = [](const std::vector<FeasibleB>& rows) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : rows) out.emplace_back(static_cast<int>(e.t), static_cast<int>(e.r));
    return out;
  };
  const auto t12 = feasible_B(12);
  REQUIRE(!t12.empty());
  CHECK(t12.front().special);
  CHECK(t12.front().cover.n == 9);
  CHECK(keys(t12) == std::vector<std::pair<int, int>>{{2, 3}, {6, 5}, {8, 7}, {11, 5}, {12, 11}});
  CHECK(feasible_B(5).size() == 1);
  CHECK(feasible_B(2).size() == 1);
}

TEST_CASE("feasible_B(100) matches a brute-force filter and is integral") {
  const auto rows = feasible_B(100);
  std::set<std::pair<int, int>> expected{{2, 3}};
  for (int t = 2; t <= 100; ++t) {
    for (int r = 2; r <= t - 1; ++r) {
      if ((t - 1) % r == 0 && std::gcd(6, r) == 1) expected.insert({t, r});
    }
  }
  std::set<std::pair<int, int>> got;
  for (const auto& e : rows) {
    got.insert({static_cast<int>(e.t), static_cast<int>(e.r)});
    CHECK(e.cover.mu > 0);
    CHECK(e.cover.m_theta.is_integer());
    CHECK(e.cover.m_tau.is_integer());
    CHECK(e.cover.multiplicities_integral);
    if (e.special) continue;
    const BigInt t = e.t;
    const BigInt r = e.r;
    const BigInt t2 = t * t;
    // Trace identity for the family.
    CHECK(t2 * (t2 - 2) + (t2 - 1) * (r - 1) * t * (t2 - 2) - ((t2 - 1) * (t2 - 1) - 1) - (t2 - 2) * (t2 - 1) * (r - 1) * t ==
          0);
    CHECK(e.cover.m_theta == Surd(BigInt((t2 - 1) * (r - 1))));
    CHECK(e.cover.m_tau == Surd(BigInt((t2 - 2) * (t2 - 1) * (r - 1))));
    CHECK(e.cover.theta == Surd(BigInt(t * (t2 - 2))));
  }
  CHECK(got == expected);
}

TEST_CASE("feasible_B for t up to 10^4 never has r even or divisible by 3") {
  for (const auto& e : feasible_B(10000)) {
    if (e.special) continue;
    CHECK(e.r % 2 != 0);
    CHECK(e.r % 3 != 0);
  }
}

TEST_CASE("feasible_A: r = 2 branch, sporadic entry and empty r >= 4 at t <= 3") {
  const auto rows = feasible_A(5);
  std::set<std::tuple<int, int, int>> r2;
  bool sporadic = false;
  bool sqrt5 = false;
  int general = 0;
  for (const auto& e : rows) {
    const auto key = std::make_tuple(static_cast<int>(e.cover.n), static_cast<int>(e.cover.r), static_cast<int>(e.cover.mu));
    if (e.branch == FamilyABranch::kSporadic) sporadic = key == std::make_tuple(28, 4, 8);
    if (e.r == 2) r2.insert(key);
    if (!e.t.is_rational()) sqrt5 = e.cover.n == 6;
  }
  CHECK(sporadic);
  CHECK(sqrt5);
  for (auto k : {std::make_tuple(3, 2, 1), std::make_tuple(6, 2, 2), std::make_tuple(28, 2, 10), std::make_tuple(276, 2, 112)}) {
    CHECK(r2.count(k) == 1);
  }
  for (const auto& e : feasible_A(3)) {
    if (e.branch == FamilyABranch::kGeneral) ++general;
  }
  CHECK(general == 0);
}

TEST_CASE("hoffman bounds") {
  const HoffmanBounds a = hoffman_bounds(family_B(2, 3));
  CHECK(a.clique == Rational(5));
  CHECK(a.coclique == Rational(27, 5));
  const HoffmanBounds b = hoffman_bounds(family_B(6, 5));
  CHECK(b.clique == Rational(205));
  CHECK(b.coclique == Rational(1225, 41));
  for (const auto& e : feasible_B(60)) {
    if (e.special) continue;
    const FamilyBParams p = family_B(e.t, e.r);
    CHECK(hoffman_bounds(p).clique == Rational(p.cover.r * p.cover.mu, e.t - 1));
  }
}
