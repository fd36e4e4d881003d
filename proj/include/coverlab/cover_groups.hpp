#pragma once

#include "coverlab/graph.hpp"
#include "coverlab/perm_group.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace coverlab {

/// Image of the vertex permutation `x` on the fibre set. Throws
/// std::invalid_argument when x does not map fibres to fibres.
Permutation induced_on_fibres(const CoverGraph& g, const Permutation& x);

/// G acting on vertices and fibres at once: points 0..v-1 are vertices,
/// v..v+n-1 are fibres.
PermGroup extended_group(const CoverGraph& g, const PermGroup& G);

/// First `count` points of an extended action, restricted back.
Permutation restrict_prefix(const Permutation& x, int count);

struct CoveringGroupReport {
  PermGroup kernel;  // K, the automorphisms of G fixing every fibre
  BigInt order;
  bool abelian = false;
  bool regular_on_fibres = false;
  bool abelian_cover = false;  // abelian and regular on each fibre
  bool semiregular = false;
};

CoveringGroupReport covering_group(const CoverGraph& g, const PermGroup& G);

struct FibreAction {
  PermGroup induced;  // G^Sigma on fibre indices
  bool transitive = false;
  int rank = 0;  // orbits of the stabilizer of fibre 0
  std::vector<int> subdegrees;  // sorted, starting with 1
};

FibreAction fibre_action(const CoverGraph& g, const PermGroup& G);

struct ArcOrbitReport {
  int arc_orbits = 0;
  bool vertex_transitive = false;
  BigInt kernel_order;
  int rank = 0;
  bool hypotheses_hold = false;  // transitive and |K| = r
  /// arc_orbits == rank - 1; meaningful only when hypotheses_hold.
  bool lemma_holds = false;
};

ArcOrbitReport arc_orbit_count(const CoverGraph& g, const PermGroup& G);

struct QuotientCover {
  CoverGraph cover;
  /// Old vertex -> quotient vertex.
  std::vector<int> vertex_map;
};

/// Graph on the orbits of U (a subgroup of the covering group with |U| < r),
/// orbits numbered by least element. Throws std::invalid_argument when U
/// does not fix every fibre, is not an automorphism group, or |U| >= r.
QuotientCover quotient_cover(const CoverGraph& g, const PermGroup& U);

/// Action of H (normalizing the quotient's U) on the quotient vertices.
PermGroup induced_on_quotient(const QuotientCover& q, const PermGroup& H);

/// (alpha_0, .., alpha_3): vertices moved to distance i by x.
std::array<int, 4> displacement_profile(const CoverGraph& g, const Permutation& x);
std::array<int, 4> displacement_profile(const DistanceMatrix& d, const Permutation& x);

struct AuditItem {
  std::string lemma;
  std::string item;
  std::string status;  // pass | fail | inapplicable | not_checked
  std::string witness;
};

struct InvolutionAudit {
  bool applicable = false;  // x is an involution with a fixed point
  int f = 0;
  int l = 0;
  std::array<int, 4> alpha{};
  std::vector<int> fixed;  // Omega
  std::vector<AuditItem> items;
};

/// Fixed-subgraph identities for an involution. Identities that hold for
/// every cover are always checked; the parity and bound items tied to the
/// odd-r family with r | t - 1 are checked only for such parameters.
InvolutionAudit involution_audit(const CoverGraph& g, const Permutation& x);

struct SubdegreeCheck {
  bool applicable = false;  // rank of G^Sigma is 3
  int a = 0;
  int k1 = 0, k2 = 0;
  int lambda = 0, lambda1 = 0, lambda2 = 0;
  bool lambda_identity = false;
  struct MuCheck {
    int a_star = 0;
    int mu = 0, mu1 = 0, mu2 = 0;
    bool holds = false;
  };
  std::vector<MuCheck> mu_checks;  // one per fixed a* in F(a) - {a}
  std::vector<AuditItem> items;
};

SubdegreeCheck subdegree_identity_check(const CoverGraph& g, const PermGroup& G);

/// Checks the concrete-group items of the stabilizer lemma: C = C_G(K) cap G_a,
/// M = K:G_a, |G:M| = n, |Fix(G_a)| = |N_G(G_a):G_a| dividing nr, and
/// |Fix_Sigma(M)| = |N_G(M):M| dividing n.
std::vector<AuditItem> lemma3_audit(const CoverGraph& g, const PermGroup& G);

}  // namespace coverlab
