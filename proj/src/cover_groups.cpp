#include "coverlab/cover_groups.hpp"

#include "coverlab/automorphisms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace coverlab {

namespace {

constexpr std::size_t kEnumerationLimit = 100000;

AuditItem item(std::string lemma, std::string name, bool ok, std::string witness = {}) {
  return {std::move(lemma), std::move(name), ok ? "pass" : "fail", std::move(witness)};
}

AuditItem inapplicable(std::string lemma, std::string name, std::string why) {
  return {std::move(lemma), std::move(name), "inapplicable", std::move(why)};
}

/// t for a cover in the odd-r family with r | t - 1 and gcd(r, 6) = 1, if any.
std::optional<long long> family_b_t(int n, int r, std::optional<int> mu) {
  if (!mu) return std::nullopt;
  for (long long t = 3; (t * t - 1) * (t * t - 1) <= n; ++t) {
    if ((t * t - 1) * (t * t - 1) != n) continue;
    if ((t - 1) % r != 0 || std::gcd(r, 6) != 1) return std::nullopt;
    if ((t - 1) * (t - 1) * (t * t + t - 1) != static_cast<long long>(r) * *mu) return std::nullopt;
    return t;
  }
  return std::nullopt;
}

bool is_subset_normal(const PermGroup& big, const PermGroup& normal) {
  for (const auto& m : big.generators()) {
    const Permutation mi = m.inverse();
    for (const auto& k : normal.generators()) {
      if (!normal.contains(mi * k * m)) return false;
    }
  }
  return true;
}

}  // namespace

Permutation induced_on_fibres(const CoverGraph& g, const Permutation& x) {
  std::vector<int> img(g.fibre_count());
  for (int f = 0; f < g.fibre_count(); ++f) {
    const auto& fibre = g.fibres()[f];
    const int target = g.fibre_of(x(fibre.front()));
    for (int y : fibre) {
      if (g.fibre_of(x(y)) != target) throw std::invalid_argument("permutation does not map fibres to fibres");
    }
    img[f] = target;
  }
  return Permutation(std::move(img));
}

PermGroup extended_group(const CoverGraph& g, const PermGroup& G) {
  const int v = g.vertex_count();
  std::vector<Permutation> gens;
  for (const auto& x : G.generators()) {
    std::vector<int> img = x.images();
    const Permutation on_fibres = induced_on_fibres(g, x);
    for (int f : on_fibres.images()) img.push_back(v + f);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(v + g.fibre_count(), std::move(gens), G.seed());
}

Permutation restrict_prefix(const Permutation& x, int count) {
  return Permutation(std::vector<int>(x.images().begin(), x.images().begin() + count));
}

CoveringGroupReport covering_group(const CoverGraph& g, const PermGroup& G) {
  const int v = g.vertex_count();
  const int n = g.fibre_count();
  const PermGroup ext = extended_group(g, G);
  std::vector<int> fibre_points(n);
  std::iota(fibre_points.begin(), fibre_points.end(), v);
  std::vector<Permutation> gens;
  const PermGroup fixer = ext.pointwise_stabilizer(fibre_points);
  for (const auto& k : fixer.generators()) gens.push_back(restrict_prefix(k, v));

  CoveringGroupReport out{PermGroup(v, std::move(gens), G.seed()), 0, false, false, false, false};
  out.order = out.kernel.order();
  out.abelian = out.kernel.is_abelian();
  const auto orbits = out.kernel.orbits();
  out.semiregular = std::all_of(orbits.begin(), orbits.end(),
                                [&](const auto& o) { return BigInt(o.size()) == out.order; });
  out.regular_on_fibres = out.order == g.fibre_size() && orbits.size() == static_cast<std::size_t>(n);
  if (out.regular_on_fibres) {
    for (const auto& f : g.fibres()) {
      if (out.kernel.orbit(f.front()) != f) out.regular_on_fibres = false;
    }
  }
  out.abelian_cover = out.abelian && out.regular_on_fibres;
  return out;
}

FibreAction fibre_action(const CoverGraph& g, const PermGroup& G) {
  std::vector<Permutation> gens;
  for (const auto& x : G.generators()) gens.push_back(induced_on_fibres(g, x));
  FibreAction out{PermGroup(g.fibre_count(), std::move(gens), G.seed()), false, 0, {}};
  out.transitive = out.induced.is_transitive();
  for (const auto& orbit : out.induced.stabilizer(0).orbits()) out.subdegrees.push_back(static_cast<int>(orbit.size()));
  std::sort(out.subdegrees.begin(), out.subdegrees.end());
  out.rank = static_cast<int>(out.subdegrees.size());
  return out;
}

ArcOrbitReport arc_orbit_count(const CoverGraph& g, const PermGroup& G) {
  const Graph& graph = g.graph();
  const int v = graph.vertex_count();
  std::vector<int> offset(v + 1, 0);
  for (int u = 0; u < v; ++u) offset[u + 1] = offset[u] + graph.degree(u);
  auto arc_index = [&](int u, int w) {
    const auto& nb = graph.neighbours(u);
    const auto it = std::lower_bound(nb.begin(), nb.end(), w);
    if (it == nb.end() || *it != w) throw std::invalid_argument("arc_orbit_count: generator is not an automorphism");
    return offset[u] + static_cast<int>(it - nb.begin());
  };
  std::vector<int> parent(offset[v]);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& x : G.generators()) {
    for (int u = 0; u < v; ++u) {
      for (int w : graph.neighbours(u)) parent[root(arc_index(u, w))] = root(arc_index(x(u), x(w)));
    }
  }
  ArcOrbitReport out;
  for (int a = 0; a < offset[v]; ++a) {
    if (root(a) == a) ++out.arc_orbits;
  }
  out.vertex_transitive = G.is_transitive();
  out.kernel_order = covering_group(g, G).order;
  out.rank = fibre_action(g, G).rank;
  out.hypotheses_hold = out.vertex_transitive && out.kernel_order == g.fibre_size();
  out.lemma_holds = out.hypotheses_hold && out.arc_orbits == out.rank - 1;
  return out;
}

QuotientCover quotient_cover(const CoverGraph& g, const PermGroup& U) {
  const int v = g.vertex_count();
  for (const auto& x : U.generators()) {
    if (x.degree() != v || !is_automorphism(g.graph(), x)) {
      throw std::invalid_argument("quotient_cover: subgroup generator is not an automorphism");
    }
    for (int y = 0; y < v; ++y) {
      if (g.fibre_of(x(y)) != g.fibre_of(y)) throw std::invalid_argument("quotient_cover: subgroup does not fix every fibre");
    }
  }
  const BigInt order = U.order();
  if (order >= g.fibre_size()) throw std::invalid_argument("quotient_cover: |U| must be smaller than r");
  const auto orbits = U.orbits();
  std::vector<int> map(v);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (BigInt(orbits[i].size()) != order) throw std::invalid_argument("quotient_cover: U is not semiregular");
    for (int y : orbits[i]) map[y] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.graph().edges()) edges.emplace_back(std::min(map[a], map[b]), std::max(map[a], map[b]));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::vector<int>> fibres;
  for (const auto& f : g.fibres()) {
    std::vector<int> img;
    for (int y : f) img.push_back(map[y]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    fibres.push_back(std::move(img));
  }
  return {CoverGraph(Graph(static_cast<int>(orbits.size()), edges), std::move(fibres)), std::move(map)};
}

PermGroup induced_on_quotient(const QuotientCover& q, const PermGroup& H) {
  const int nv = q.cover.vertex_count();
  std::vector<Permutation> gens;
  for (const auto& h : H.generators()) {
    std::vector<int> img(nv, -1);
    for (std::size_t x = 0; x < q.vertex_map.size(); ++x) {
      const int from = q.vertex_map[x];
      const int to = q.vertex_map[h(static_cast<int>(x))];
      if (img[from] >= 0 && img[from] != to) throw std::invalid_argument("induced_on_quotient: H does not preserve the orbits");
      img[from] = to;
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(nv, std::move(gens), H.seed());
}

std::array<int, 4> displacement_profile(const DistanceMatrix& d, const Permutation& x) {
  std::array<int, 4> alpha{};
  for (int y = 0; y < d.vertex_count(); ++y) {
    const int dist = d(y, x(y));
    if (dist < 0 || dist > 3) throw std::invalid_argument("displacement_profile: vertex moved beyond distance 3");
    ++alpha[dist];
  }
  return alpha;
}

std::array<int, 4> displacement_profile(const CoverGraph& g, const Permutation& x) {
  return displacement_profile(DistanceMatrix(g.graph()), x);
}

InvolutionAudit involution_audit(const CoverGraph& g, const Permutation& x) {
  const std::string lemma = "involution";
  InvolutionAudit out;
  if (x.is_identity() || !(x * x).is_identity()) {
    out.items.push_back(inapplicable(lemma, "hypotheses", "not an involution"));
    return out;
  }
  if (!is_automorphism(g.graph(), x)) {
    out.items.push_back(inapplicable(lemma, "hypotheses", "not an automorphism"));
    return out;
  }
  out.fixed = x.fixed_points();
  const DistanceMatrix dist(g.graph());
  out.alpha = displacement_profile(dist, x);
  if (out.fixed.empty()) {
    out.items.push_back(inapplicable(lemma, "hypotheses", "Fix(x) is empty (l = 0)"));
    return out;
  }
  out.applicable = true;

  const int n = g.fibre_count();
  const int r = g.fibre_size();
  const Permutation on_fibres = induced_on_fibres(g, x);
  std::vector<int> fixed_fibres = on_fibres.fixed_points();
  out.l = static_cast<int>(fixed_fibres.size());
  std::vector<int> meet(n, 0);
  for (int y : out.fixed) ++meet[g.fibre_of(y)];
  out.f = meet[g.fibre_of(out.fixed.front())];
  const int f = out.f;
  const int l = out.l;

  bool constant_f = true;
  for (int F : fixed_fibres) constant_f = constant_f && meet[F] == f;
  out.items.push_back(item(lemma, "fixed_fibres_meet_omega_equally", constant_f, "f=" + std::to_string(f)));

  std::vector<char> in_omega(g.vertex_count(), 0);
  for (int y : out.fixed) in_omega[y] = 1;
  bool regular = true;
  std::string witness;
  for (int y : out.fixed) {
    int deg = 0;
    for (int w : g.graph().neighbours(y)) deg += in_omega[w];
    if (deg != l - 1 && regular) {
      regular = false;
      witness = "vertex " + std::to_string(y) + " has degree " + std::to_string(deg) + " in Omega";
    }
  }
  out.items.push_back(item(lemma, "omega_regular_degree_l_minus_1", regular, witness));
  const int omega = static_cast<int>(out.fixed.size());
  out.items.push_back(item(lemma, "omega_size_lf", omega == l * f,
                           "|Omega|=" + std::to_string(omega) + ", lf=" + std::to_string(l * f)));
  out.items.push_back(item(lemma, "alpha3_equals_(r-f)l", out.alpha[3] == (r - f) * l,
                           "alpha3=" + std::to_string(out.alpha[3]) + ", (r-f)l=" + std::to_string((r - f) * l)));
  out.items.push_back(item(lemma, "alpha1_plus_alpha2_equals_(n-l)r", out.alpha[1] + out.alpha[2] == (n - l) * r,
                           "alpha1+alpha2=" + std::to_string(out.alpha[1] + out.alpha[2])));
  if (f == 1 && l > 1) {
    bool clique = true;
    for (int a : out.fixed) {
      for (int b : out.fixed) clique = clique && (a == b || g.graph().adjacent(a, b));
    }
    out.items.push_back(item(lemma, "case4_omega_is_l_clique", clique));
  }

  // Items tied to the odd-r family parameters.
  const CoverReport rep = verify_cover(g);
  const auto t = rep.is_cover ? family_b_t(n, r, rep.mu) : std::nullopt;
  const std::string outside = "parameters outside the odd-r family with r | t-1";
  if (l == 1) {
    const bool is_fibre = f == r;
    if (t) {
      out.items.push_back(item(lemma, "case1_t_even", *t % 2 == 0, "t=" + std::to_string(*t)));
      out.items.push_back(item(lemma, "case1_omega_is_fibre", is_fibre));
    } else {
      out.items.push_back(inapplicable(lemma, "case1_t_even", outside));
      out.items.push_back({lemma, "case1_omega_is_fibre", is_fibre ? "pass" : "inapplicable",
                           is_fibre ? "" : outside});
    }
  }
  if (l > 1 && t) {
    const long long mu = *rep.mu;
    const long long lambda = *rep.lambda;
    long long xs = 0;
    for (int y = 0; y < g.vertex_count(); ++y) {
      if (in_omega[y]) continue;
      for (int w : g.graph().neighbours(y)) {
        if (in_omega[w]) {
          ++xs;
          break;
        }
      }
    }
    const Rational chain[] = {Rational(f), Rational(xs, n - l), Rational(omega),
                              Rational((lambda - mu) * out.alpha[1], n - l) + Rational(r * mu), Rational(r * lambda)};
    bool ordered = true;
    for (int i = 0; i + 1 < 5; ++i) ordered = ordered && chain[i] <= chain[i + 1];
    out.items.push_back(item(lemma, "case2_bound_chain", ordered));
    if (f == 1) {
      out.items.push_back(item(lemma, "case4_l_bound", Rational(l) <= Rational(r * mu, *t - 1) && Rational(r * mu, *t - 1) <= mu));
    }
    if (f > 1 && *t % 2 == 0) {
      std::vector<Edge> sub;
      std::vector<int> index(g.vertex_count(), -1);
      for (int i = 0; i < omega; ++i) index[out.fixed[i]] = i;
      for (const auto& [a, b] : g.graph().edges()) {
        if (in_omega[a] && in_omega[b]) sub.emplace_back(index[a], index[b]);
      }
      const DistanceMatrix dsub(Graph(omega, sub));
      out.items.push_back(item(lemma, "case5_diameter_3", dsub.diameter() == 3));
      out.items.push_back(item(lemma, "case5_size_bound", omega <= l + (l - 1) * (l - 1) * (l - 2)));
    }
  } else if (l > 1) {
    out.items.push_back(inapplicable(lemma, "case2_bound_chain", outside));
  }
  return out;
}

SubdegreeCheck subdegree_identity_check(const CoverGraph& g, const PermGroup& G) {
  const std::string lemma = "subdegree";
  SubdegreeCheck out;
  const FibreAction fa = fibre_action(g, G);
  if (!fa.transitive || fa.rank != 3) {
    out.items.push_back(inapplicable(lemma, "eq6", "rank of G on fibres is " + std::to_string(fa.rank) + ", not 3"));
    return out;
  }
  const CoverReport rep = verify_cover(g);
  if (!rep.is_cover) {
    out.items.push_back(inapplicable(lemma, "eq6", "input is not a cover"));
    return out;
  }
  out.applicable = true;
  const Graph& graph = g.graph();
  const int a = 0;
  out.a = a;
  const PermGroup Ga = G.stabilizer(a);

  auto orbits_within = [&](const std::vector<int>& set) {
    std::vector<std::vector<int>> result;
    std::vector<char> done(graph.vertex_count(), 0);
    for (int x : set) {
      if (done[x]) continue;
      std::vector<int> o = Ga.orbit(x);
      for (int y : o) done[y] = 1;
      result.push_back(std::move(o));
    }
    std::sort(result.begin(), result.end(),
              [](const auto& p, const auto& q) { return p.size() != q.size() ? p.size() < q.size() : p < q; });
    return result;
  };
  auto count_in = [&](int x, const std::vector<int>& set) {
    int c = 0;
    for (int y : set) c += graph.adjacent(x, y);
    return c;
  };

  const auto X = orbits_within(graph.neighbours(a));
  if (X.size() != 2) {
    out.items.push_back(item(lemma, "two_orbits_on_neighbourhood", false, std::to_string(X.size()) + " orbits"));
    return out;
  }
  out.items.push_back(item(lemma, "two_orbits_on_neighbourhood", true));
  out.k1 = static_cast<int>(X[0].size());
  out.k2 = static_cast<int>(X[1].size());
  out.items.push_back(item(lemma, "orbit_lengths_match_subdegrees",
                           out.k1 == fa.subdegrees[1] && out.k2 == fa.subdegrees[2]));
  out.lambda = *rep.lambda;
  out.lambda1 = count_in(X[0].front(), X[0]);
  out.lambda2 = count_in(X[1].front(), X[1]);
  out.lambda_identity = out.k1 * (out.lambda - out.lambda1) == out.k2 * (out.lambda - out.lambda2);
  out.items.push_back(item(lemma, "eq6", out.lambda_identity,
                           "k1=" + std::to_string(out.k1) + " lambda1=" + std::to_string(out.lambda1) +
                               " k2=" + std::to_string(out.k2) + " lambda2=" + std::to_string(out.lambda2)));

  const int mu = *rep.mu;
  for (int a_star : g.fibres()[g.fibre_of(a)]) {
    if (a_star == a) continue;
    const bool fixed = std::all_of(Ga.generators().begin(), Ga.generators().end(),
                                   [&](const Permutation& h) { return h(a_star) == a_star; });
    if (!fixed) continue;
    // X_i^*: neighbours of a* in the fibres met by X_i.
    std::vector<int> Xs[2];
    for (int i = 0; i < 2; ++i) {
      for (int x : X[i]) {
        for (int y : graph.neighbours(a_star)) {
          if (g.fibre_of(y) == g.fibre_of(x)) Xs[i].push_back(y);
        }
      }
      std::sort(Xs[i].begin(), Xs[i].end());
    }
    SubdegreeCheck::MuCheck mc;
    mc.a_star = a_star;
    mc.mu = mu;
    mc.mu1 = count_in(Xs[0].front(), X[0]);
    mc.mu2 = count_in(X[1].front(), Xs[1]);
    mc.holds = out.k1 * (mu - mc.mu1) == out.k2 * (mu - mc.mu2);
    out.items.push_back(item(lemma, "eq7[a*=" + std::to_string(a_star) + "]", mc.holds,
                             "mu1=" + std::to_string(mc.mu1) + " mu2=" + std::to_string(mc.mu2)));
    out.mu_checks.push_back(mc);
  }
  if (out.mu_checks.empty()) out.items.push_back(inapplicable(lemma, "eq7", "G_a fixes no other vertex of F(a)"));
  return out;
}

std::vector<AuditItem> lemma3_audit(const CoverGraph& g, const PermGroup& G) {
  const std::string lemma = "stabilizer";
  std::vector<AuditItem> items;
  const int v = g.vertex_count();
  const int n = g.fibre_count();
  const int r = g.fibre_size();
  const CoveringGroupReport cg = covering_group(g, G);
  if (!G.is_transitive() || !cg.abelian_cover) {
    for (const char* name : {"1", "2", "4"}) {
      items.push_back(inapplicable(lemma, name, "needs a vertex-transitive G whose covering group is abelian and regular"));
    }
    return items;
  }
  const PermGroup& K = cg.kernel;
  const int a = 0;
  const PermGroup Ga = G.stabilizer(a);
  const PermGroup C = G.pointwise_stabilizer(g.fibres()[g.fibre_of(a)]);

  // (1) C = C_G(K) cap G_a
  if (Ga.order() <= kEnumerationLimit) {
    std::size_t centralizing = 0;
    bool inside = true;
    for (const auto& h : Ga.elements(kEnumerationLimit)) {
      const bool commutes = std::all_of(K.generators().begin(), K.generators().end(),
                                        [&](const Permutation& k) { return h * k == k * h; });
      if (!commutes) continue;
      ++centralizing;
      inside = inside && C.contains(h);
    }
    items.push_back(item(lemma, "1:C=C_G(K)^G_a", inside && BigInt(centralizing) == C.order(),
                         "|C|=" + C.order().str() + " |C_G(K)^G_a|=" + std::to_string(centralizing)));
  } else {
    items.push_back({lemma, "1:C=C_G(K)^G_a", "not_checked", "|G_a| exceeds the enumeration limit"});
  }

  // (1) M = K:G_a
  const PermGroup ext = extended_group(g, G);
  const PermGroup ext_chain(v + n, ext.generators(), G.seed(), {v + g.fibre_of(a)});
  std::vector<Permutation> mgens;
  for (const auto& m : ext_chain.strong_generators(1)) mgens.push_back(restrict_prefix(m, v));
  const PermGroup M(v, mgens, G.seed());
  const bool semidirect = M.contains_group(K) && M.contains_group(Ga) && is_subset_normal(M, K) &&
                          K.stabilizer(a).order() == 1 && M.order() == K.order() * Ga.order();
  items.push_back(item(lemma, "1:M=K:G_a", semidirect,
                       "|M|=" + M.order().str() + " |K|=" + K.order().str() + " |G_a|=" + Ga.order().str()));

  // (2) |G:M| = n
  const BigInt index_m = G.order() / M.order();
  items.push_back(item(lemma, "2:|G:M|=n", index_m == n && G.order() % M.order() == 0, "|G:M|=" + index_m.str()));
  const CoverReport rep = verify_cover(g);
  const auto t = rep.is_cover ? family_b_t(n, r, rep.mu) : std::nullopt;
  if (t) {
    const BigInt index_a = G.order() / Ga.order();
    items.push_back(item(lemma, "2:|G:G_a|_divides_n(t-1)", BigInt(n) * (*t - 1) % index_a == 0, "|G:G_a|=" + index_a.str()));
  } else {
    items.push_back(inapplicable(lemma, "2:|G:G_a|_divides_n(t-1)", "parameters outside the odd-r family with r | t-1"));
  }

  // (4) |Fix(G_a)| = |N_G(G_a):G_a| divides nr
  {
    int fix = 0;
    for (int x = 0; x < v; ++x) {
      fix += std::all_of(Ga.generators().begin(), Ga.generators().end(), [&](const Permutation& h) { return h(x) == x; });
    }
    const PermGroup chain(v, G.generators(), G.seed(), {a});
    int normalizing = 0;
    for (int x = 0; x < v; ++x) {
      const Permutation* u = chain.transversal(0, x);
      if (u == nullptr) continue;
      const Permutation ui = u->inverse();
      normalizing += std::all_of(Ga.generators().begin(), Ga.generators().end(),
                                 [&](const Permutation& h) { return Ga.contains(ui * h * *u); });
    }
    items.push_back(item(lemma, "4:|Fix(G_a)|=|N_G(G_a):G_a|", fix == normalizing && (n * r) % fix == 0,
                         "|Fix(G_a)|=" + std::to_string(fix) + " |N_G(G_a):G_a|=" + std::to_string(normalizing)));
  }
  // (4) |Fix_Sigma(M)| = |N_G(M):M| divides n
  {
    int fix = 0;
    for (int F = 0; F < n; ++F) {
      fix += std::all_of(mgens.begin(), mgens.end(), [&](const Permutation& m) { return g.fibre_of(m(g.fibres()[F].front())) == F; });
    }
    int normalizing = 0;
    for (int F = 0; F < n; ++F) {
      const Permutation* u = ext_chain.transversal(0, v + F);
      if (u == nullptr) continue;
      const Permutation uv = restrict_prefix(*u, v);
      const Permutation ui = uv.inverse();
      normalizing += std::all_of(mgens.begin(), mgens.end(), [&](const Permutation& m) { return M.contains(ui * m * uv); });
    }
    items.push_back(item(lemma, "4:|Fix_Sigma(M)|=|N_G(M):M|", fix == normalizing && n % fix == 0,
                         "|Fix_Sigma(M)|=" + std::to_string(fix) + " |N_G(M):M|=" + std::to_string(normalizing)));
  }
  for (const char* name : {"3", "5", "6", "7"}) {
    items.push_back({lemma, name, "not_checked", "statement about parameter regimes not instantiable on a concrete cover"});
  }
  return items;
}

}  // namespace coverlab
