#include "coverlab/automorphisms.hpp"
#include "coverlab/constructions.hpp"
#include "coverlab/cover_groups.hpp"
#include "coverlab/frames.hpp"
#include "coverlab/params.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace coverlab;

namespace {

struct Corpus {
  std::string name;
  CoverGraph g;
  PermGroup K;
};

Corpus from_full_group(std::string name, CoverGraph g) {
  PermGroup K = covering_group(g, automorphism_group(g)).kernel;
  return {std::move(name), std::move(g), std::move(K)};
}

Corpus from_construction(std::string name, int q, int m) {
  ThasSommaCover ts = thas_somma_full(q, m);
  PermGroup K(ts.cover.vertex_count(), ts.covering_generators);
  return {std::move(name), std::move(ts.cover), std::move(K)};
}

std::pair<double, double> theta_tau(const CoverGraph& g) {
  const CoverReport rep = verify_cover(g);
  const CoverParams p = derive_params(rep.n, rep.r, *rep.mu);
  return {p.theta.to_double(), p.tau.to_double()};
}

std::vector<double> sorted_gram_eigenvalues(const LineSystem& L) {
  return jacobi_eigen(L.gram).values;
}

std::vector<double> angle_multiset(const LineSystem& L) {
  std::vector<double> out;
  for (int i = 0; i < L.n; ++i) {
    for (int j = i + 1; j < L.n; ++j) out.push_back(std::abs(L.gram(i, j)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("character table of cyclic and elementary abelian groups") {
  const ThasSommaCover ts3 = thas_somma_full(3, 1);
  const CharacterTable t3 = abelian_characters(PermGroup(27, ts3.covering_generators));
  CHECK(t3.elements.size() == 3);
  CHECK(t3.elements.front().is_identity());
  CHECK(t3.exponent == 3);
  REQUIRE(t3.characters.size() == 3);
  CHECK(t3.characters[0].trivial);
  CHECK(t3.characters[1].faithful);
  CHECK(t3.characters[2].faithful);
  const ThasSommaCover ts4 = thas_somma_full(4, 1);
  const CharacterTable t4 = abelian_characters(PermGroup(64, ts4.covering_generators));
  CHECK(t4.exponent == 2);
  REQUIRE(t4.characters.size() == 4);
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK_FALSE(t4.characters[i].faithful);
    CHECK(t4.characters[i].kernel_order == 2);
  }
  const PermGroup s3(3, {Permutation({1, 2, 0}), Permutation({1, 0, 2})});
  CHECK_THROWS_AS(abelian_characters(s3), std::invalid_argument);
}

TEST_CASE("hexagon character matrix") {
  const CoverGraph h = hexagon();
  const PermGroup K = covering_group(h, automorphism_group(h)).kernel;
  const CharacterMatrix cm = character_matrix(h, K, 1);
  CHECK(cm.n == 3);
  CHECK(cm.base_vertices == std::vector<int>{0, 1, 2});
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(cm.S(i, i)) == 0.0);
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      CHECK(std::abs(std::abs(cm.S(i, j).real()) - 1.0) < 1e-15);
      CHECK(std::abs(cm.S(i, j).imag()) < 1e-15);
    }
  }
  const SpectrumCertificate cert = certify_spectrum(cm.S, 1.0, -2.0);
  CHECK(cert.ok);
  CHECK(cert.count_theta == 2);
  CHECK(cert.count_tau == 1);
  CHECK_THROWS_AS(character_matrix(h, K, 0), std::invalid_argument);
}

TEST_CASE("TS(3,1) primitive cubic character") {
  const Corpus c = from_construction("ts3", 3, 1);
  const CharacterMatrix cm = character_matrix(c.g, c.K, 1);
  CHECK(cm.n == 9);
  const SpectrumCertificate cert = certify_spectrum(cm.S, 2.0, -4.0);
  CHECK(cert.ok);
  CHECK(cert.count_theta == 6);
  CHECK(cert.count_tau == 3);
  const CoverParams p = derive_params(9, 3, 3);
  CHECK(Surd(cert.count_theta) == p.m_theta / Surd(2));
  CHECK(Surd(cert.count_tau) == p.m_tau / Surd(2));
  // Entries off the diagonal are cube roots of unity.
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      if (i == j) continue;
      const Complex z = cm.S(i, j);
      CHECK(std::abs(z * z * z - 1.0) < 1e-12);
      CHECK(std::abs(cm.S(j, i) - std::conj(z)) < 1e-15);
    }
  }
}

TEST_CASE("TS(3,1) SIC and the 6-dimensional side") {
  const Corpus c = from_construction("ts3", 3, 1);
  const CharacterMatrix cm = character_matrix(c.g, c.K, 1);
  const LineSystem sic = extract_lines(cm.S, 2.0, -4.0, LineSide::kTau);
  CHECK(sic.n == 9);
  CHECK(sic.d == 3);
  CHECK(sic.d == 9 - 12 / 2);
  CHECK(sic.alpha * sic.alpha == doctest::Approx(0.25).epsilon(1e-12));
  const EtfReport r = verify_etf(sic, 1e-9, TauContext{-4.0, 9, 3});
  CHECK(r.ok);
  CHECK(r.equiangular);
  CHECK(r.tight);
  CHECK(r.tight_residual <= 1e-9);
  CHECK(r.relative_bound_equality);
  CHECK(r.sic);
  CHECK(r.absolute_bound_attained);
  CHECK(r.angle_identity_residual < 1e-10);
  CHECK(r.tau_endpoint == "lower");
  for (int i = 0; i < 9; ++i) CHECK(std::abs(sic.gram(i, i) - 1.0) < 1e-12);

  const LineSystem other = extract_lines(cm.S, 2.0, -4.0, LineSide::kTheta);
  CHECK(other.d == 6);
  CHECK(other.d == 9 - 6 / 2);
  CHECK(other.alpha * other.alpha == doctest::Approx(1.0 / 16).epsilon(1e-12));
  const EtfReport ro = verify_etf(other);
  CHECK(ro.ok);
  CHECK_FALSE(ro.sic);
}

TEST_CASE("hexagon gives three real lines in the plane") {
  const CoverGraph h = hexagon();
  const PermGroup K = covering_group(h, automorphism_group(h)).kernel;
  const CharacterMatrix cm = character_matrix(h, K, 1);
  const LineSystem L = extract_lines(cm.S, 1.0, -2.0, LineSide::kTheta);
  CHECK(L.n == 3);
  CHECK(L.d == 2);
  CHECK(std::abs(L.alpha - 0.5) < 1e-12);
  const EtfReport r = verify_etf(L, 1e-9, TauContext{-2.0, 3, 2});
  CHECK(r.equiangular);
  CHECK(r.tight);
  CHECK(r.relative_bound_equality);
  CHECK_FALSE(r.sic);
  CHECK_FALSE(r.absolute_bound_attained);
  CHECK(r.real);
  CHECK(r.real_absolute_bound);
  CHECK(r.tau_endpoint == "upper");
}

TEST_CASE("random unit vectors are not equiangular") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> nd;
  const int n = 6, d = 3;
  std::vector<std::vector<Complex>> v(n, std::vector<Complex>(d));
  for (auto& x : v) {
    double norm = 0;
    for (auto& z : x) {
      z = {nd(rng), nd(rng)};
      norm += std::norm(z);
    }
    for (auto& z : x) z /= std::sqrt(norm);
  }
  LineSystem L;
  L.n = n;
  L.d = d;
  L.gram = ComplexMatrix(n);
  double sum = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex ip = 0;
      for (int k = 0; k < d; ++k) ip += std::conj(v[i][k]) * v[j][k];
      L.gram(i, j) = ip;
      if (i != j) sum += std::abs(ip);
    }
  }
  L.alpha = sum / (n * (n - 1));
  const EtfReport r = verify_etf(L);
  CHECK_FALSE(r.equiangular);
  CHECK(r.equiangular_deviation > 1e-3);
  CHECK_FALSE(r.ok);
}

TEST_CASE("every nontrivial character of every corpus cover") {
  std::vector<Corpus> corpus;
  corpus.push_back(from_full_group("hexagon", hexagon()));
  corpus.push_back(from_full_group("cube", cube()));
  corpus.push_back(from_full_group("icosahedron", icosahedron()));
  corpus.push_back(from_construction("ts3", 3, 1));
  corpus.push_back(from_construction("ts4", 4, 1));
  corpus.push_back(from_construction("ts5", 5, 1));
  corpus.push_back(from_construction("ts2m2", 2, 2));
  for (const auto& c : corpus) {
    CAPTURE(c.name);
    const auto [theta, tau] = theta_tau(c.g);
    const CharacterTable table = abelian_characters(c.K);
    for (std::size_t i = 1; i < table.characters.size(); ++i) {
      const CharacterMatrix cm = character_matrix(c.g, table, table.characters[i]);
      const SpectrumCertificate cert = certify_spectrum(cm.S, theta, tau, 1e-10);
      CHECK(cert.ok);
      CHECK(cert.max_deviation < 1e-10);
      CHECK(cert.count_theta + cert.count_tau == c.g.fibre_count());
      for (LineSide side : {LineSide::kTheta, LineSide::kTau}) {
        const int d = side == LineSide::kTheta ? cert.count_theta : cert.count_tau;
        if (d == 0) continue;
        const LineSystem L = extract_lines(cm.S, theta, tau, side);
        CHECK(L.d == d);
        const double n = L.n;
        if (L.d < L.n) CHECK(std::abs(L.alpha * L.alpha - (n - L.d) / (L.d * (n - 1))) < 1e-10);
        const EtfReport r = verify_etf(L);
        CHECK(r.angle_identity_residual < 1e-10);
        CHECK(r.tight);
      }
    }
  }
}

TEST_CASE("both primitive cubic characters give congruent systems") {
  const Corpus c = from_construction("ts3", 3, 1);
  const LineSystem a = extract_lines(character_matrix(c.g, c.K, 1).S, 2.0, -4.0, LineSide::kTau);
  const LineSystem b = extract_lines(character_matrix(c.g, c.K, 2).S, 2.0, -4.0, LineSide::kTau);
  CHECK(a.d == b.d);
  CHECK(std::abs(a.alpha - b.alpha) < 1e-12);
  const auto ea = sorted_gram_eigenvalues(a);
  const auto eb = sorted_gram_eigenvalues(b);
  for (std::size_t i = 0; i < ea.size(); ++i) CHECK(std::abs(ea[i] - eb[i]) < 1e-10);
  const auto aa = angle_multiset(a);
  const auto ab = angle_multiset(b);
  for (std::size_t i = 0; i < aa.size(); ++i) CHECK(std::abs(aa[i] - ab[i]) < 1e-10);
  // The second character is the complex conjugate of the first.
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) CHECK(std::abs(a.gram(i, j) - std::conj(b.gram(i, j))) < 1e-10);
  }
}

TEST_CASE("non-faithful characters factor through the quotient cover") {
  const Corpus c = from_construction("ts4", 4, 1);
  const CharacterTable table = abelian_characters(c.K);
  for (std::size_t i = 1; i < table.characters.size(); ++i) {
    const Character& chi = table.characters[i];
    std::vector<Permutation> kernel;
    for (std::size_t e = 0; e < table.elements.size(); ++e) {
      if (chi.values[e] % chi.exponent == 0 && !table.elements[e].is_identity()) kernel.push_back(table.elements[e]);
    }
    REQUIRE(kernel.size() == 1);
    const QuotientCover q = quotient_cover(c.g, PermGroup(c.g.vertex_count(), kernel));
    const CharacterMatrix top = character_matrix(c.g, table, chi);
    const PermGroup Kq = induced_on_quotient(q, c.K);
    const CharacterMatrix low = character_matrix(q.cover, Kq, 1);
    for (int f = 0; f < top.n; ++f) CHECK(q.vertex_map[top.base_vertices[f]] == low.base_vertices[f]);
    CHECK(max_abs_difference(top.S, low.S) < 1e-12);
    const LineSystem lt = extract_lines(top.S, 3.0, -5.0, LineSide::kTau);
    const LineSystem ll = extract_lines(low.S, 3.0, -5.0, LineSide::kTau);
    CHECK(lt.d == ll.d);
    CHECK(max_abs_difference(lt.gram, ll.gram) < 1e-10);
  }
}

TEST_CASE("failed certification is an error") {
  const Corpus c = from_construction("ts3", 3, 1);
  const CharacterMatrix cm = character_matrix(c.g, c.K, 1);
  CHECK_FALSE(certify_spectrum(cm.S, 1.0, -4.0).ok);
  CHECK_THROWS_AS(extract_lines(cm.S, 1.0, -4.0, LineSide::kTau), std::runtime_error);
}
