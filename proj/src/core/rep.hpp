#pragma once

#include <tuple>

#include "core/bar.hpp"

namespace dainfty {

// Word with one module slot: letters index the algebra basis except at
// position mpos-1 (1-based mpos), which indexes the module basis.
struct BimodWord {
  TensorWord letters;
  int mpos = 1;

  bool operator<(const BimodWord& o) const {
    if (letters != o.letters) return letters < o.letters;
    return mpos < o.mpos;
  }
  bool operator==(const BimodWord& o) const {
    return letters == o.letters && mpos == o.mpos;
  }
};

struct BimoduleElement {
  int xpow = 0;
  BimodWord w;

  bool operator<(const BimoduleElement& o) const {
    if (xpow != o.xpow) return xpow < o.xpow;
    return w < o.w;
  }
};

using BimodComb = std::map<BimodWord, BigInt>;
using BimodElementComb = std::map<BimoduleElement, BigInt>;

Bidegree bimod_word_degree(const BimodWord& w, const BigradedBasis& basisA,
                           const BigradedBasis& basisM);
Bidegree bimodule_element_degree(const BimoduleElement& el,
                                 const BigradedBasis& basisA,
                                 const BigradedBasis& basisM);

// Input-level representation data: a module over a structure family, with
// action maps indexed by (i, j, slot).  An action entry's input word has the
// module letter at the slot position; outputs are arity-1 module words.
struct RepFamily {
  StructureFamily algebra;
  BigradedBasis module;
  std::map<std::tuple<int, int, int>, GradedMap> actions;

  void validate() const;
};

// M = A with action maps m_{ij} at every slot.
RepFamily regular_representation(const StructureFamily& fam);

// Coderivation-level data: the algebra's bar family (h_i corestrictions)
// plus module-window corestrictions per (i, arity).
struct RepCoderivationFamily {
  CoderivationFamily algebra;  // h_i over the suspended algebra basis
  BigradedBasis smodule;       // suspended module basis
  // i -> window arity j -> entries
  std::map<int, std::map<int, std::map<BimodWord, LinComb>>> module_corest;

  const Ring& ring() const { return algebra.ring; }
  const BigradedBasis& sbasis() const { return algebra.sbasis; }
};

RepCoderivationFamily rep_family_from_action(const RepFamily& rep);

// g_i on an x-free bimodule word: sum over windows; windows covering the
// module slot use module corestrictions, the rest use the algebra's.
BimodComb g_apply(const RepCoderivationFamily& F, int i, const BimodWord& w);

// Reduced bicomodule coactions on k[x] (x) Tc(sA) (x) sM (x) Tc(sA):
// Delta^L splits before the module slot, Delta^R after it (the empty-C
// split k = n is dropped).  Signs as in the cofree comultiplication.
using LeftCoactionComb =
    std::map<std::pair<CoalgebraElement, BimoduleElement>, BigInt>;
using RightCoactionComb =
    std::map<std::pair<BimoduleElement, CoalgebraElement>, BigInt>;

std::pair<LeftCoactionComb, RightCoactionComb> bicomodule_coactions(
    const BimoduleElement& el, const BigradedBasis& sbasisA,
    const BigradedBasis& sbasisM, const Ring& ring);

// f(x^i (x) ...) = (-1)^{n+1} x^{i-1} (x) ... , n = total arity.
BimodElementComb bimodule_f(const BimoduleElement& el, const Ring& ring);

// Total coderivation reconstruction:
//   g(x^i (x) W) = sum_{c<=i} (-1)^{c(n+k+1)+(i-c)n} x^c (x) [g_{i-c}(W)]_k.
BimodElementComb rep_coderivation_total(const RepCoderivationFamily& F,
                                        const BimoduleElement& el);

// Report for the two representation conditions; failing inputs carry their
// residual as a deterministic label -> coefficient map.
struct RepRelationReport {
  std::string condition;  // "twisted", "coderivation_left", "coderivation_right"
  int index = 0;          // u for twisted, i for the coderivation conditions
  bool pass = true;
  long failure_count = 0;
  std::vector<std::pair<BimodWord, std::map<std::string, BigInt>>> failures;
};

struct RepCheckResult {
  bool pass = true;
  std::vector<RepRelationReport> reports;
};

// (a) sum_{i+p=u} (-1)^i g_i g_p = 0 on x-free words, u <= u_max,
//     arity <= arity_max;
// (b) each g_i is a bicomodule coderivation with respect to h_i against the
//     plain two-sided deconcatenations.
RepCheckResult check_rep(const RepCoderivationFamily& F, int u_max,
                         int arity_max);

// Deterministic renderings used in reports (letters joined by '.', module
// letter bracketed).
std::string render_word(const TensorWord& w, const BigradedBasis& basis);
std::string render_bimod_word(const BimodWord& w, const BigradedBasis& basisA,
                              const BigradedBasis& basisM);

// Coassociativity (left-left, right-right, left-right) and f-compatibility
// of the bicomodule coactions over the given bases, on all elements with
// x-power <= x_max and total arity <= arity_max.  Empty string = pass.
std::string check_bicomodule_identities(const BigradedBasis& sbasisA,
                                        const BigradedBasis& sbasisM,
                                        const Ring& ring, int x_max,
                                        int arity_max);

}  // namespace dainfty
