#pragma once

#include <string>
#include <vector>

#include "core/bigraded.hpp"

namespace dainfty {

// Generators of the cooperad underlying the derived A-infinity operad, in
// three presentations:
//   mu     generators mu_{uv} of bidegree (-u, 1-u-v)
//   mut    the rescaled generators mu~_{uv} = (-1)^{v(v-1)/2} mu_{uv}
//   alpha  the (vertically) suspended generators alpha_{uv} = s^{1-v} mu_{uv}
//          of bidegree (-u, -u)
enum class CooperadKind { mu, mut, alpha };

CooperadKind cooperad_kind_from_name(const std::string& name);
const char* cooperad_kind_name(CooperadKind kind);

Bidegree generator_degree(CooperadKind kind, int u, int v);

// One summand of the reduced comultiplication: sign * outer_(i,j) composed
// with the inner block (p_1,q_1),...,(p_j,q_j), where i + sum p_k = u and
// sum q_k = v.
struct DecompTerm {
  int sign = 1;
  int i = 0, j = 0;
  std::vector<std::pair<int, int>> inners;
};

// Full comultiplication of the (u, v) generator in the chosen presentation.
// Term order is deterministic: j ascending, then the composition (q_k)
// lexicographically, then i ascending, then the weak composition (p_k).
std::vector<DecompTerm> cooperad_comultiplication(CooperadKind kind, int u,
                                                  int v);

// Sign exponents (mod 2 relevant part) for each presentation; exposed for
// cross-checking.  ps/qs are 0-indexed lists of length j.
long exponent_mu(const std::vector<int>& ps, const std::vector<int>& qs);
long exponent_mut(const std::vector<int>& ps, const std::vector<int>& qs);
long exponent_alpha(int i, const std::vector<int>& ps,
                    const std::vector<int>& qs, int v);

// Sign produced by distributing the suspension factors of
// alpha = s^{1-j} (outer) and s (inner factors) across a decomposition:
// each suspension power passes graded symbols on its left.  outer_degree is
// the bidegree of the suspended outer generator; inner_degrees are the
// bidegrees of the suspended inner generators, inner_arities their arities.
int lambda_suspension_sign(const Bidegree& outer_degree,
                           const std::vector<Bidegree>& inner_degrees,
                           const std::vector<int>& inner_arities);

// (q_1,...,q_j) >= 1 summing to v, lexicographic.
std::vector<std::vector<int>> compositions(int v, int j);
// (p_1,...,p_j) >= 0 summing to u, lexicographic.
std::vector<std::vector<int>> weak_compositions(int u, int j);

// Coassociativity of the comultiplication on generator (u, v): expanding
// the outer factor of each term agrees with expanding all inner factors
// (with Koszul shuffle signs for the latter).  Returns true when the two
// expansions agree as signed sums of two-level trees.
bool check_coassociativity(CooperadKind kind, int u, int v);

}  // namespace dainfty
