#pragma once

#include "core/structure.hpp"

namespace dainfty {

// ---- elements of k[x] (x) Tbar^c(C) ----
// x has bidegree (-1,-1); words are nonempty and live over a (suspended)
// basis.
inline constexpr Bidegree kXDegree{-1, -1};

struct CoalgebraElement {
  int xpow = 0;
  TensorWord word;

  bool operator<(const CoalgebraElement& o) const {
    if (xpow != o.xpow) return xpow < o.xpow;
    return word < o.word;
  }
  bool operator==(const CoalgebraElement& o) const {
    return xpow == o.xpow && word == o.word;
  }
};

using ElementComb = std::map<CoalgebraElement, BigInt>;
using ElementPairComb =
    std::map<std::pair<CoalgebraElement, CoalgebraElement>, BigInt>;

Bidegree element_degree(const CoalgebraElement& el, const BigradedBasis& basis);

void comb_add(ElementComb& acc, const CoalgebraElement& el, const BigInt& c,
              const Ring& ring);

// Delta(x^i (x) a_1..a_n) = sum_{k=1}^{n-1} sum_{r+s=i} (-1)^eps
//   (x^r (x) a_1..a_k) (x) (x^s (x) a_{k+1}..a_n)
// with eps = r n + i k + s * <(1,1)-pairing of the first k letters> --
// concretely s times the summed (h+v)-parity of a_1..a_k in their own
// (suspended) bidegrees.
ElementPairComb cofree_comultiplication(const CoalgebraElement& el,
                                        const BigradedBasis& basis,
                                        const Ring& ring);

// f(x^n (x) a) = (-1)^{j+1} x^{n-1} (x) a for a of arity j; zero at n = 0.
ElementComb cofree_f(const CoalgebraElement& el, const Ring& ring);

// ---- abstract triples (C, Delta, f) ----
struct CoalgebraTriple {
  BigradedBasis basis;
  Ring ring = Ring::integers();
  GradedMap delta;  // arity 1 -> 2, bidegree (0,0)
  GradedMap f;      // arity 1 -> 1, bidegree (1,1)

  // coassociativity of delta and (f x 1)delta = (1 x f)delta = delta f,
  // checked on every basis element; throws on violation
  void validate() const;

  // rho_{i,j} = (-1)^{i(j+1)} delta^{(j-1)} f^i  (leftmost iteration),
  // a GradedMap of target arity j and bidegree (i, i).
  GradedMap coaction(int i, int j) const;
};

// ---- coderivation families on Tbar^c(sA) ----
// For each n >= 0 a coderivation delta^n of bidegree (-n, 1-n), stored by
// its corestrictions (arity j -> sA).
struct CoderivationFamily {
  BigradedBasis sbasis;  // suspended basis
  Ring ring = Ring::integers();
  int max_n = 0;
  int max_arity = 0;
  std::map<int, std::map<int, GradedMap>> corestrictions;  // n -> j -> map

  bool has_component(int n) const { return corestrictions.count(n) > 0; }
};

// Coderivation extension of a corestriction family over one word: sum over
// window positions/sizes with Koszul passing sign for the map's bidegree.
LinComb coderivation_extend(const std::map<int, GradedMap>& corest,
                            const Bidegree& map_degree, const TensorWord& word,
                            const BigradedBasis& basis, const Ring& ring);

// delta^n applied to a word.
LinComb delta_apply(const CoderivationFamily& F, int n, const TensorWord& word);

// The bar-type family of A: corestrictions b_{ij} = s . m~_{ij} . (s^-)^j
// built from the tilde-convention maps, with the desuspension sign
// (-1)^{sum_{l=1}^{j-1} (j-l) v(a_l)} on unsuspended vertical degrees.
CoderivationFamily bar_family_from_structure(const StructureFamily& fam);

// sum_r (-1)^r delta^r delta^{n-r} = 0 for n <= n_max on words of arity
// <= arity_max.  Reports keyed (u=n, v=input arity).
CheckResult check_family_twisted(const CoderivationFamily& F, int n_max,
                                 int arity_max);

// Total coderivation d on k[x] (x) Tbar^c(sA) reconstructed from the family:
//   d(x^n (x) a) = sum_{i<=n} (-1)^{i(j+k+1)+(n-i)j} x^i (x) [delta^{n-i}(a)]_k
// (j = input arity, k = output arity).
ElementComb coderivation_total(const CoderivationFamily& F,
                               const CoalgebraElement& el);

}  // namespace dainfty
