#include "core/bar.hpp"

namespace dainfty {

namespace {
int pow_sign(long e) { return (((e % 2) + 2) % 2) ? -1 : 1; }
}

Bidegree element_degree(const CoalgebraElement& el,
                        const BigradedBasis& basis) {
  Bidegree d = word_degree(el.word, basis);
  d.h += el.xpow * kXDegree.h;
  d.v += el.xpow * kXDegree.v;
  return d;
}

void comb_add(ElementComb& acc, const CoalgebraElement& el, const BigInt& c,
              const Ring& ring) {
  BigInt v = ring.normalize(acc.count(el) ? acc[el] + c : c);
  if (v == 0)
    acc.erase(el);
  else
    acc[el] = v;
}

namespace {

// summed (h+v)-parity of the first `upto` letters, in the letters' own
// bidegrees
long letter_parity_sum(const TensorWord& w, const BigradedBasis& basis,
                       int upto) {
  long s = 0;
  for (int l = 0; l < upto; ++l) {
    Bidegree d = basis.degree(w[l]);
    s += d.h + d.v;
  }
  return s;
}

void pair_add(ElementPairComb& acc,
              const std::pair<CoalgebraElement, CoalgebraElement>& key,
              const BigInt& c, const Ring& ring) {
  BigInt v = ring.normalize(acc.count(key) ? acc[key] + c : c);
  if (v == 0)
    acc.erase(key);
  else
    acc[key] = v;
}

}  // namespace

ElementPairComb cofree_comultiplication(const CoalgebraElement& el,
                                        const BigradedBasis& basis,
                                        const Ring& ring) {
  ElementPairComb out;
  int n = static_cast<int>(el.word.size());
  for (int k = 1; k < n; ++k) {
    for (int r = 0; r <= el.xpow; ++r) {
      int s = el.xpow - r;
      long eps = (long)r * n + (long)el.xpow * k +
                 (long)s * letter_parity_sum(el.word, basis, k);
      CoalgebraElement left{r, TensorWord(el.word.begin(), el.word.begin() + k)};
      CoalgebraElement right{s, TensorWord(el.word.begin() + k, el.word.end())};
      pair_add(out, {left, right}, BigInt(pow_sign(eps)), ring);
    }
  }
  return out;
}

ElementComb cofree_f(const CoalgebraElement& el, const Ring& ring) {
  ElementComb out;
  if (el.xpow == 0) return out;
  int j = static_cast<int>(el.word.size());
  comb_add(out, CoalgebraElement{el.xpow - 1, el.word},
           BigInt(pow_sign(j + 1)), ring);
  return out;
}

// ---- triples ----

void CoalgebraTriple::validate() const {
  if (delta.arity != 1 || delta.target_arity != 2 ||
      delta.degree != Bidegree{0, 0})
    throw std::invalid_argument("triple delta must be arity 1->2, bidegree (0,0)");
  if (f.arity != 1 || f.target_arity != 1 || f.degree != Bidegree{1, 1})
    throw std::invalid_argument("triple f must be arity 1->1, bidegree (1,1)");
  validate_homogeneous(delta, basis);
  validate_homogeneous(f, basis);
  for (int b = 0; b < basis.size(); ++b) {
    TensorWord w{b};
    LinComb dw = delta.apply(w);
    LinComb fw = f.apply(w);
    // coassociativity
    LinComb lhs, rhs;
    for (const auto& [pairw, c] : dw.terms()) {
      lhs.add_scaled(apply_at(delta, pairw, 1, basis, ring), c, ring);
      rhs.add_scaled(apply_at(delta, pairw, 2, basis, ring), c, ring);
    }
    if (!(lhs == rhs))
      throw std::invalid_argument("triple delta is not coassociative on " +
                                  basis.name(b));
    // (f x 1) delta = (1 x f) delta = delta f
    LinComb f1, onef, df;
    for (const auto& [pairw, c] : dw.terms()) {
      f1.add_scaled(apply_at(f, pairw, 1, basis, ring), c, ring);
      onef.add_scaled(apply_at(f, pairw, 2, basis, ring), c, ring);
    }
    for (const auto& [word, c] : fw.terms())
      df.add_scaled(delta.apply(word), c, ring);
    if (!(f1 == onef) || !(f1 == df))
      throw std::invalid_argument("triple compatibility fails on " +
                                  basis.name(b));
  }
}

GradedMap CoalgebraTriple::coaction(int i, int j) const {
  if (i < 0 || j < 1)
    throw std::invalid_argument("coaction indices need i >= 0, j >= 1");
  GradedMap out;
  out.arity = 1;
  out.target_arity = j;
  out.degree = Bidegree{(long)i, (long)i};
  int sg = pow_sign((long)i * (j + 1));
  for (int b = 0; b < basis.size(); ++b) {
    TensorWord w{b};
    LinComb cur;
    cur.add(w, BigInt(1), ring);
    for (int rep = 0; rep < i; ++rep) {
      LinComb next;
      for (const auto& [word, c] : cur.terms())
        next.add_scaled(f.apply(word), c, ring);
      cur = std::move(next);
    }
    for (int rep = 0; rep < j - 1; ++rep) {
      LinComb next;
      for (const auto& [word, c] : cur.terms())
        next.add_scaled(apply_at(delta, word, 1, basis, ring), c, ring);
      cur = std::move(next);
    }
    cur.scale(sg, ring);
    if (!cur.is_zero()) out.entries[w] = cur;
  }
  return out;
}

// ---- coderivation families ----

LinComb coderivation_extend(const std::map<int, GradedMap>& corest,
                            const Bidegree& map_degree, const TensorWord& word,
                            const BigradedBasis& basis, const Ring& ring) {
  LinComb out;
  int N = static_cast<int>(word.size());
  for (const auto& [j, m] : corest) {
    for (int p = 1; p + j - 1 <= N; ++p) {
      TensorWord left(word.begin(), word.begin() + (p - 1));
      TensorWord mid(word.begin() + (p - 1), word.begin() + (p - 1) + j);
      TensorWord right(word.begin() + (p - 1) + j, word.end());
      auto it = m.entries.find(mid);
      if (it == m.entries.end()) continue;
      int sg = koszul_sign(map_degree, word_degree(left, basis));
      for (const auto& [val, c] : it->second.terms()) {
        TensorWord w = left;
        w.insert(w.end(), val.begin(), val.end());
        w.insert(w.end(), right.begin(), right.end());
        out.add(w, c * sg, ring);
      }
    }
  }
  return out;
}

LinComb delta_apply(const CoderivationFamily& F, int n,
                    const TensorWord& word) {
  auto it = F.corestrictions.find(n);
  if (it == F.corestrictions.end()) return {};
  return coderivation_extend(it->second, Bidegree{-n, 1 - n}, word, F.sbasis,
                             F.ring);
}

CoderivationFamily bar_family_from_structure(const StructureFamily& fam) {
  StructureFamily tilde =
      fam.convention == Convention::tilde ? fam : convert_convention(fam);
  CoderivationFamily F;
  F.sbasis = suspend_basis(fam.basis, SuspensionDirection::vertical, 1);
  F.ring = fam.ring;
  F.max_n = fam.max_horizontal;
  F.max_arity = fam.max_arity;
  for (const auto& [ij, m] : tilde.maps) {
    auto [i, j] = ij;
    GradedMap b;
    b.arity = j;
    b.target_arity = 1;
    b.degree = Bidegree{-i, 1 - i};
    for (const auto& [w, val] : m.entries) {
      // desuspension sign over the unsuspended vertical degrees of the
      // first j-1 letters
      long e = 0;
      for (int l = 0; l + 1 < j; ++l)
        e += (long)(j - 1 - l) * fam.basis.degree(w[l]).v;
      LinComb scaled = val;
      scaled.scale(pow_sign(e), fam.ring);
      if (!scaled.is_zero()) b.entries[w] = scaled;
    }
    if (!b.entries.empty()) F.corestrictions[i][j] = std::move(b);
  }
  return F;
}

CheckResult check_family_twisted(const CoderivationFamily& F, int n_max,
                                 int arity_max) {
  if (n_max > F.max_n || arity_max > F.max_arity)
    throw TruncationError(
        "requested window exceeds the family's truncation bounds");
  CheckResult res;
  for (int n = 0; n <= n_max; ++n) {
    for (int alen = 1; alen <= arity_max; ++alen) {
      RelationReport rep;
      rep.u = n;
      rep.v = alen;
      for (const TensorWord& w : all_words(F.sbasis, alen)) {
        LinComb acc;
        for (int r = 0; r <= n; ++r) {
          if (!F.has_component(r) || !F.has_component(n - r)) continue;
          LinComb mid = delta_apply(F, n - r, w);
          for (const auto& [w2, c] : mid.terms())
            acc.add_scaled(delta_apply(F, r, w2), c * pow_sign(r), F.ring);
        }
        if (!acc.is_zero()) {
          rep.pass = false;
          ++rep.failure_count;
          if (rep.failures.size() < kMaxReportedFailures)
            rep.failures.emplace_back(w, acc);
        }
      }
      if (!rep.pass) res.pass = false;
      res.reports.push_back(std::move(rep));
    }
  }
  return res;
}

ElementComb coderivation_total(const CoderivationFamily& F,
                               const CoalgebraElement& el) {
  ElementComb out;
  int j = static_cast<int>(el.word.size());
  for (int i = 0; i <= el.xpow; ++i) {
    int r = el.xpow - i;
    if (!F.has_component(r)) continue;
    LinComb val = delta_apply(F, r, el.word);
    for (const auto& [w2, c] : val.terms()) {
      int k = static_cast<int>(w2.size());
      long e = (long)i * (j + k + 1) + (long)r * j;
      comb_add(out, CoalgebraElement{i, w2}, c * pow_sign(e), F.ring);
    }
  }
  return out;
}

}  // namespace dainfty
