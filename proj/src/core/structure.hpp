#pragma once

#include <optional>

#include "core/graded_map.hpp"

namespace dainfty {

// Sign convention in which the family's values are written.
//   sagave: the relation  sum (-1)^{rq+t+pj} m_ij (1^r x m_pq x 1^t) = 0
//           over u = i+p, v = j+q-1, j = 1+r+t.
//   tilde:  the operadic rescaling m~_ij = (-1)^{j(j-1)/2} m_ij; its
//           relation is the star-product form
//           sum (-1)^{i+j+(q-1)(k+j)+p(j-1)} m~_ij o_k m~_pq = 0, k = 1..j.
// The two checks have termwise-proportional residuals, so the pass/fail
// pattern per window is identical; only residual signs differ.
enum class Convention { sagave, tilde };

// Derived A-infinity structure at a finite truncation: maps m_ij for
// 0 <= i <= max_horizontal, 1 <= j <= max_arity, of bidegree (-i, 2-i-j).
struct StructureFamily {
  BigradedBasis basis;
  Ring ring = Ring::integers();
  Convention convention = Convention::sagave;
  int max_horizontal = 0;
  int max_arity = 0;
  std::map<std::pair<int, int>, GradedMap> maps;

  Bidegree expected_degree(int i, int j) const {
    return Bidegree{-static_cast<long>(i), 2 - static_cast<long>(i + j)};
  }
  const GradedMap* map_at(int i, int j) const;
  void set_map(int i, int j, GradedMap m);
  // degree/arity/bounds validation for every stored map
  void validate() const;
};

// One composition m_ij(1^r x m_pq x 1^t) with its relation sign.
struct RelationTerm {
  int i, j, p, q, r;  // t = j - 1 - r
  int sign;           // +1 / -1
};

// Formal expansion of the window (u, v): all (i,j,p,q,r) with i+p = u,
// j+q-1 = v, signs per the convention.  Deterministic order.
std::vector<RelationTerm> expand_relation(int u, int v, Convention conv);

// Formal star product m~_ij * m~_pq = sum_k (sign) m~_ij o_k m~_pq.
std::vector<RelationTerm> star_product_terms(int i, int j, int p, int q);

// Residual of window (u, v) on one input word, using the family's own
// convention.  Compositions whose (i,j) or (p,q) fall outside the declared
// bounds are an error (TruncationError) unless the window fits the bounds.
LinComb relation_residual(const StructureFamily& fam, int u, int v,
                          const TensorWord& input);

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per-window check report.  Failures capped at max_failures (the count
// still reflects all of them).
struct RelationReport {
  int u = 0, v = 0;
  bool pass = true;
  long failure_count = 0;
  std::vector<std::pair<TensorWord, LinComb>> failures;
};

inline constexpr int kMaxReportedFailures = 100;

struct CheckResult {
  bool pass = true;
  std::vector<RelationReport> reports;  // ordered by (u, v)
};

// All windows 0 <= u <= u_max, 1 <= v <= v_max on every basis word.
// Throws TruncationError when the window needs maps beyond the bounds.
CheckResult check_derived_ainfinity(const StructureFamily& fam, int u_max,
                                    int v_max);

// Rescale between conventions: m~_ij = (-1)^{j(j-1)/2} m_ij (involutive).
StructureFamily convert_convention(const StructureFamily& fam);

// Bicomplex-with-products check: requires support inside
// {(0,1),(0,2),(1,1)} and checks the six windows (0,1),(0,2),(0,3),(1,1),
// (1,2),(2,1) — i.e. d^2, Leibniz, associativity, the (1,1)-commutation,
// the (1,2) Leibniz rule and m_11^2 = 0.  Convention-independent outcome.
CheckResult check_bidga(const StructureFamily& fam);

// ---- twisted complexes (the i-indexed one-argument part) ----

// Family of arity-1 maps d_i: A -> A of bidegree (-i, 1-i) subject to
//   sum_{i+p=u} (-1)^i d_i d_p = 0  for 0 <= u <= u_max.
struct TwistedComplex {
  BigradedBasis basis;
  Ring ring = Ring::integers();
  int max_index = 0;
  std::map<int, GradedMap> ds;
};

CheckResult check_twisted_complex(const TwistedComplex& tc, int u_max);

// Map of twisted complexes: f_i: C -> D of bidegree (-i, -i) with
//   sum_{i+p=u} (-1)^i f_i d^C_p  =  sum_{i+p=u} d^D_i f_p.
struct TwistedMap {
  std::map<int, GradedMap> fs;
  int max_index = 0;
};

CheckResult check_twisted_map(const TwistedMap& f, const TwistedComplex& src,
                              const TwistedComplex& dst, int u_max);

// Composite (g f)_u = sum_{i+p=u} g_i f_p (no signs).
TwistedMap compose_twisted_maps(const TwistedMap& g, const TwistedMap& f,
                                const TwistedComplex& src,
                                const TwistedComplex& dst, int u_max);

// The arity-1 slice m_{i,1} of a structure family as a twisted complex
// (d_i = m_{i,1} satisfies the twisted relation with these signs).
TwistedComplex arity_one_part(const StructureFamily& fam);

}  // namespace dainfty
