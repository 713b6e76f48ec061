#include "core/rep.hpp"

#include <algorithm>

namespace dainfty {

namespace {
int pow_sign(long e) { return (((e % 2) + 2) % 2) ? -1 : 1; }
int tilde_factor(int j) { return pow_sign((long)j * (j - 1) / 2); }

Bidegree letter_degree(const BimodWord& w, int idx,
                       const BigradedBasis& basisA,
                       const BigradedBasis& basisM) {
  return idx == w.mpos - 1 ? basisM.degree(w.letters[idx])
                           : basisA.degree(w.letters[idx]);
}

void bc_add(BimodComb& acc, const BimodWord& key, const BigInt& c,
            const Ring& ring) {
  BigInt v = ring.normalize(acc.count(key) ? acc[key] + c : c);
  if (v == 0)
    acc.erase(key);
  else
    acc[key] = v;
}

}  // namespace

Bidegree bimod_word_degree(const BimodWord& w, const BigradedBasis& basisA,
                           const BigradedBasis& basisM) {
  Bidegree d{0, 0};
  for (size_t l = 0; l < w.letters.size(); ++l)
    d = d + letter_degree(w, static_cast<int>(l), basisA, basisM);
  return d;
}

Bidegree bimodule_element_degree(const BimoduleElement& el,
                                 const BigradedBasis& basisA,
                                 const BigradedBasis& basisM) {
  Bidegree d = bimod_word_degree(el.w, basisA, basisM);
  d.h += el.xpow * kXDegree.h;
  d.v += el.xpow * kXDegree.v;
  return d;
}

void RepFamily::validate() const {
  algebra.validate();
  for (const auto& [key, m] : actions) {
    auto [i, j, slot] = key;
    if (i < 0 || j < 1 || slot < 1 || slot > j)
      throw std::invalid_argument("action index out of range");
    if (i > algebra.max_horizontal || j > algebra.max_arity)
      throw std::invalid_argument("action index beyond declared bounds");
    if (m.arity != j || m.target_arity != 1)
      throw std::invalid_argument("action arity mismatch");
    Bidegree want = algebra.expected_degree(i, j);
    if (m.degree != want) throw std::invalid_argument("action bidegree mismatch");
    for (const auto& [input, value] : m.entries) {
      if (static_cast<int>(input.size()) != j)
        throw std::invalid_argument("action input arity mismatch");
      BimodWord bw{input, slot};
      Bidegree in = bimod_word_degree(bw, algebra.basis, module);
      for (const auto& [out, c] : value.terms()) {
        (void)c;
        if (out.size() != 1)
          throw std::invalid_argument("action output must be a single module element");
        if (module.degree(out[0]) != in + want)
          throw std::invalid_argument("inhomogeneous action entry");
      }
    }
  }
}

RepFamily regular_representation(const StructureFamily& fam) {
  RepFamily rep;
  rep.algebra = fam;
  for (int b = 0; b < fam.basis.size(); ++b)
    rep.module.add(fam.basis.name(b), fam.basis.degree(b));
  for (const auto& [ij, m] : fam.maps) {
    auto [i, j] = ij;
    for (int slot = 1; slot <= j; ++slot) {
      GradedMap a;
      a.arity = j;
      a.target_arity = 1;
      a.degree = m.degree;
      // same words; the letter at the slot is reinterpreted as a module
      // index, which matches since the module basis copies the algebra's
      a.entries = m.entries;
      rep.actions[{i, j, slot}] = std::move(a);
    }
  }
  return rep;
}

RepCoderivationFamily rep_family_from_action(const RepFamily& rep) {
  rep.validate();
  RepCoderivationFamily F;
  F.algebra = bar_family_from_structure(rep.algebra);
  F.smodule = suspend_basis(rep.module, SuspensionDirection::vertical, 1);
  bool rescale = rep.algebra.convention == Convention::sagave;
  for (const auto& [key, m] : rep.actions) {
    auto [i, j, slot] = key;
    for (const auto& [input, value] : m.entries) {
      BimodWord bw{input, slot};
      // desuspension sign over unsuspended vertical degrees of the first
      // j-1 letters (module letter included at its slot)
      long e = 0;
      for (int l = 0; l + 1 < j; ++l)
        e += (long)(j - 1 - l) *
             letter_degree(bw, l, rep.algebra.basis, rep.module).v;
      int sg = pow_sign(e);
      if (rescale) sg *= tilde_factor(j);
      LinComb scaled = value;
      scaled.scale(sg, F.ring());
      if (!scaled.is_zero()) F.module_corest[i][j][bw] = std::move(scaled);
    }
  }
  return F;
}

BimodComb g_apply(const RepCoderivationFamily& F, int i, const BimodWord& w) {
  BimodComb out;
  int N = static_cast<int>(w.letters.size());
  Bidegree bd{-(long)i, 1 - (long)i};

  auto italg = F.algebra.corestrictions.find(i);
  auto itmod = F.module_corest.find(i);

  std::vector<int> sizes;
  if (italg != F.algebra.corestrictions.end())
    for (const auto& [j, m] : italg->second) sizes.push_back(j);
  if (itmod != F.module_corest.end())
    for (const auto& [j, m] : itmod->second)
      if (std::find(sizes.begin(), sizes.end(), j) == sizes.end())
        sizes.push_back(j);

  for (int j : sizes) {
    for (int p = 1; p + j - 1 <= N; ++p) {
      bool covers = (p <= w.mpos && w.mpos <= p + j - 1);
      // Koszul sign for the operation passing the first p-1 letters
      Bidegree left{0, 0};
      for (int l = 0; l < p - 1; ++l)
        left = left + letter_degree(w, l, F.sbasis(), F.smodule);
      int sg = koszul_sign(bd, left);

      TensorWord leftw(w.letters.begin(), w.letters.begin() + (p - 1));
      TensorWord mid(w.letters.begin() + (p - 1),
                     w.letters.begin() + (p - 1) + j);
      TensorWord rightw(w.letters.begin() + (p - 1) + j, w.letters.end());

      if (covers) {
        if (itmod == F.module_corest.end()) continue;
        auto itj = itmod->second.find(j);
        if (itj == itmod->second.end()) continue;
        auto ite = itj->second.find(BimodWord{mid, w.mpos - p + 1});
        if (ite == itj->second.end()) continue;
        for (const auto& [val, c] : ite->second.terms()) {
          TensorWord nw = leftw;
          nw.insert(nw.end(), val.begin(), val.end());
          nw.insert(nw.end(), rightw.begin(), rightw.end());
          bc_add(out, BimodWord{nw, p}, c * sg, F.ring());
        }
      } else {
        if (italg == F.algebra.corestrictions.end()) continue;
        auto itj = italg->second.find(j);
        if (itj == italg->second.end()) continue;
        auto ite = itj->second.entries.find(mid);
        if (ite == itj->second.entries.end()) continue;
        int nmp = (p > w.mpos) ? w.mpos : w.mpos - j + 1;
        for (const auto& [val, c] : ite->second.terms()) {
          TensorWord nw = leftw;
          nw.insert(nw.end(), val.begin(), val.end());
          nw.insert(nw.end(), rightw.begin(), rightw.end());
          bc_add(out, BimodWord{nw, nmp}, c * sg, F.ring());
        }
      }
    }
  }
  return out;
}

namespace {

long mixed_parity_sum(const BimodWord& w, const BigradedBasis& basisA,
                      const BigradedBasis& basisM, int upto) {
  long s = 0;
  for (int l = 0; l < upto; ++l) {
    Bidegree d = letter_degree(w, l, basisA, basisM);
    s += d.h + d.v;
  }
  return s;
}

}  // namespace

std::pair<LeftCoactionComb, RightCoactionComb> bicomodule_coactions(
    const BimoduleElement& el, const BigradedBasis& sbasisA,
    const BigradedBasis& sbasisM, const Ring& ring) {
  LeftCoactionComb L;
  RightCoactionComb R;
  int n = static_cast<int>(el.w.letters.size());
  for (int k = 1; k <= n - 1; ++k) {
    for (int r = 0; r <= el.xpow; ++r) {
      int s = el.xpow - r;
      long eps = (long)r * n + (long)el.xpow * k +
                 (long)s * mixed_parity_sum(el.w, sbasisA, sbasisM, k);
      BigInt c(pow_sign(eps));
      if (k < el.w.mpos) {
        CoalgebraElement left{
            r, TensorWord(el.w.letters.begin(), el.w.letters.begin() + k)};
        BimoduleElement right{
            s, BimodWord{TensorWord(el.w.letters.begin() + k,
                                    el.w.letters.end()),
                         el.w.mpos - k}};
        auto key = std::make_pair(left, right);
        BigInt v = ring.normalize(L.count(key) ? L[key] + c : c);
        if (v == 0) L.erase(key); else L[key] = v;
      } else {
        BimoduleElement left{
            r, BimodWord{TensorWord(el.w.letters.begin(),
                                    el.w.letters.begin() + k),
                         el.w.mpos}};
        CoalgebraElement right{
            s, TensorWord(el.w.letters.begin() + k, el.w.letters.end())};
        auto key = std::make_pair(left, right);
        BigInt v = ring.normalize(R.count(key) ? R[key] + c : c);
        if (v == 0) R.erase(key); else R[key] = v;
      }
    }
  }
  return {L, R};
}

BimodElementComb bimodule_f(const BimoduleElement& el, const Ring& ring) {
  BimodElementComb out;
  if (el.xpow == 0) return out;
  int n = static_cast<int>(el.w.letters.size());
  BigInt c(pow_sign(n + 1));
  c = ring.normalize(c);
  if (c != 0) out[BimoduleElement{el.xpow - 1, el.w}] = c;
  return out;
}

BimodElementComb rep_coderivation_total(const RepCoderivationFamily& F,
                                        const BimoduleElement& el) {
  BimodElementComb out;
  int n = static_cast<int>(el.w.letters.size());
  for (int c = 0; c <= el.xpow; ++c) {
    int r = el.xpow - c;
    BimodComb part = g_apply(F, r, el.w);
    for (const auto& [w2, coeff] : part) {
      int k = static_cast<int>(w2.letters.size());
      long e = (long)c * (n + k + 1) + (long)r * n;
      BimoduleElement key{c, w2};
      BigInt v = F.ring().normalize(
          (out.count(key) ? out[key] : BigInt(0)) + coeff * pow_sign(e));
      if (v == 0)
        out.erase(key);
      else
        out[key] = v;
    }
  }
  return out;
}

std::string render_word(const TensorWord& w, const BigradedBasis& basis) {
  std::string s;
  for (size_t l = 0; l < w.size(); ++l) {
    if (l) s += ".";
    s += basis.name(w[l]);
  }
  return s;
}

std::string render_bimod_word(const BimodWord& w, const BigradedBasis& basisA,
                              const BigradedBasis& basisM) {
  std::string s;
  for (size_t l = 0; l < w.letters.size(); ++l) {
    if (l) s += ".";
    if (static_cast<int>(l) == w.mpos - 1)
      s += "[" + basisM.name(w.letters[l]) + "]";
    else
      s += basisA.name(w.letters[l]);
  }
  return s;
}

namespace {

std::vector<BimodWord> all_bimod_words(const BigradedBasis& sbasisA,
                                       const BigradedBasis& sbasisM, int n) {
  std::vector<BimodWord> out;
  for (int mpos = 1; mpos <= n; ++mpos) {
    std::vector<TensorWord> rests = all_words(sbasisA, n - 1);
    if (n == 1) rests = {TensorWord{}};
    for (int m = 0; m < sbasisM.size(); ++m) {
      for (const TensorWord& rest : rests) {
        TensorWord letters(rest.begin(), rest.begin() + (mpos - 1));
        letters.push_back(m);
        letters.insert(letters.end(), rest.begin() + (mpos - 1), rest.end());
        out.push_back(BimodWord{letters, mpos});
      }
    }
  }
  return out;
}

using PairStringComb = std::map<std::pair<std::string, std::string>, BigInt>;

void ps_add(PairStringComb& acc, const std::string& a, const std::string& b,
            const BigInt& c, const Ring& ring) {
  auto key = std::make_pair(a, b);
  BigInt v = ring.normalize(acc.count(key) ? acc[key] + c : c);
  if (v == 0)
    acc.erase(key);
  else
    acc[key] = v;
}

std::map<std::string, BigInt> ps_difference(const PairStringComb& lhs,
                                            const PairStringComb& rhs,
                                            const Ring& ring) {
  PairStringComb d = lhs;
  for (const auto& [k, c] : rhs) ps_add(d, k.first, k.second, -c, ring);
  std::map<std::string, BigInt> out;
  for (const auto& [k, c] : d) out[k.first + " | " + k.second] = c;
  return out;
}

}  // namespace

RepCheckResult check_rep(const RepCoderivationFamily& F, int u_max,
                         int arity_max) {
  if (u_max > F.algebra.max_n || arity_max > F.algebra.max_arity)
    throw TruncationError(
        "requested window exceeds the family's truncation bounds");
  RepCheckResult res;
  const Ring& ring = F.ring();
  const BigradedBasis& A = F.sbasis();
  const BigradedBasis& M = F.smodule;

  // (a) twisted condition
  for (int u = 0; u <= u_max; ++u) {
    RepRelationReport rep;
    rep.condition = "twisted";
    rep.index = u;
    for (int n = 1; n <= arity_max; ++n) {
      for (const BimodWord& w : all_bimod_words(A, M, n)) {
        BimodComb acc;
        for (int i = 0; i <= u; ++i) {
          int p = u - i;
          BimodComb inner = g_apply(F, p, w);
          for (const auto& [w2, c] : inner) {
            BimodComb outer = g_apply(F, i, w2);
            for (const auto& [w3, c3] : outer)
              bc_add(acc, w3, c * c3 * pow_sign(i), ring);
          }
        }
        if (!acc.empty()) {
          rep.pass = false;
          ++rep.failure_count;
          if (rep.failures.size() < kMaxReportedFailures) {
            std::map<std::string, BigInt> residual;
            for (const auto& [w3, c] : acc)
              residual[render_bimod_word(w3, A, M)] = c;
            rep.failures.emplace_back(w, std::move(residual));
          }
        }
      }
    }
    if (!rep.pass) res.pass = false;
    res.reports.push_back(std::move(rep));
  }

  // (b) bicomodule coderivation conditions against plain deconcatenation
  for (int i = 0; i <= u_max; ++i) {
    RepRelationReport repL, repR;
    repL.condition = "coderivation_left";
    repL.index = i;
    repR.condition = "coderivation_right";
    repR.index = i;
    Bidegree bd{-(long)i, 1 - (long)i};
    for (int n = 1; n <= arity_max; ++n) {
      for (const BimodWord& w : all_bimod_words(A, M, n)) {
        BimodComb gw = g_apply(F, i, w);

        // left: Delta^L0 g_i = (h_i x 1 + 1 x g_i) Delta^L0
        PairStringComb lhs, rhs;
        for (const auto& [w2, c] : gw) {
          for (int k = 1; k < w2.mpos; ++k) {
            TensorWord a(w2.letters.begin(), w2.letters.begin() + k);
            BimodWord b{TensorWord(w2.letters.begin() + k, w2.letters.end()),
                        w2.mpos - k};
            ps_add(lhs, render_word(a, A), render_bimod_word(b, A, M), c, ring);
          }
        }
        for (int k = 1; k < w.mpos; ++k) {
          TensorWord a(w.letters.begin(), w.letters.begin() + k);
          BimodWord b{TensorWord(w.letters.begin() + k, w.letters.end()),
                      w.mpos - k};
          LinComb ha = delta_apply(F.algebra, i, a);
          for (const auto& [a2, c2] : ha.terms())
            ps_add(rhs, render_word(a2, A), render_bimod_word(b, A, M), c2,
                   ring);
          int sg = koszul_sign(bd, word_degree(a, A));
          BimodComb gb = g_apply(F, i, b);
          for (const auto& [b2, c2] : gb)
            ps_add(rhs, render_word(a, A), render_bimod_word(b2, A, M),
                   c2 * sg, ring);
        }
        if (!(lhs == rhs)) {
          repL.pass = false;
          ++repL.failure_count;
          if (repL.failures.size() < kMaxReportedFailures)
            repL.failures.emplace_back(w, ps_difference(lhs, rhs, ring));
        }

        // right: Delta^R0 g_i = (g_i x 1 + 1 x h_i) Delta^R0
        PairStringComb lhs2, rhs2;
        for (const auto& [w2, c] : gw) {
          int n2 = static_cast<int>(w2.letters.size());
          for (int k = w2.mpos; k < n2; ++k) {
            BimodWord a{TensorWord(w2.letters.begin(), w2.letters.begin() + k),
                        w2.mpos};
            TensorWord b(w2.letters.begin() + k, w2.letters.end());
            ps_add(lhs2, render_bimod_word(a, A, M), render_word(b, A), c,
                   ring);
          }
        }
        for (int k = w.mpos; k < n; ++k) {
          BimodWord a{TensorWord(w.letters.begin(), w.letters.begin() + k),
                      w.mpos};
          TensorWord b(w.letters.begin() + k, w.letters.end());
          BimodComb ga = g_apply(F, i, a);
          for (const auto& [a2, c2] : ga)
            ps_add(rhs2, render_bimod_word(a2, A, M), render_word(b, A), c2,
                   ring);
          int sg = koszul_sign(bd, bimod_word_degree(a, A, M));
          LinComb hb = delta_apply(F.algebra, i, b);
          for (const auto& [b2, c2] : hb.terms())
            ps_add(rhs2, render_bimod_word(a, A, M), render_word(b2, A),
                   c2 * sg, ring);
        }
        if (!(lhs2 == rhs2)) {
          repR.pass = false;
          ++repR.failure_count;
          if (repR.failures.size() < kMaxReportedFailures)
            repR.failures.emplace_back(w, ps_difference(lhs2, rhs2, ring));
        }
      }
    }
    if (!repL.pass) res.pass = false;
    if (!repR.pass) res.pass = false;
    res.reports.push_back(std::move(repL));
    res.reports.push_back(std::move(repR));
  }

  return res;
}

namespace {

std::string render_element(const CoalgebraElement& el,
                           const BigradedBasis& basis) {
  return "x^" + std::to_string(el.xpow) + "|" + render_word(el.word, basis);
}

std::string render_bimod_element(const BimoduleElement& el,
                                 const BigradedBasis& A,
                                 const BigradedBasis& M) {
  return "x^" + std::to_string(el.xpow) + "|" +
         render_bimod_word(el.w, A, M);
}

using TripleComb = std::map<std::string, BigInt>;

void tc_add(TripleComb& acc, const std::string& key, const BigInt& c,
            const Ring& ring) {
  BigInt v = ring.normalize(acc.count(key) ? acc[key] + c : c);
  if (v == 0)
    acc.erase(key);
  else
    acc[key] = v;
}

}  // namespace

std::string check_bicomodule_identities(const BigradedBasis& sbasisA,
                                        const BigradedBasis& sbasisM,
                                        const Ring& ring, int x_max,
                                        int arity_max) {
  const Bidegree fdeg{1, 1};
  auto renderC = [&](const CoalgebraElement& e) {
    return render_element(e, sbasisA);
  };
  auto renderE = [&](const BimoduleElement& e) {
    return render_bimod_element(e, sbasisA, sbasisM);
  };
  for (int xp = 0; xp <= x_max; ++xp) {
    for (int n = 1; n <= arity_max; ++n) {
      for (const BimodWord& w : all_bimod_words(sbasisA, sbasisM, n)) {
        BimoduleElement el{xp, w};
        auto [L, R] = bicomodule_coactions(el, sbasisA, sbasisM, ring);

        // LL: (Delta_C x 1) Delta^L  =  (1 x Delta^L) Delta^L
        TripleComb lhs, rhs;
        for (const auto& [AB, c] : L) {
          const auto& [Ae, Be] = AB;
          for (const auto& [A12, c2] :
               cofree_comultiplication(Ae, sbasisA, ring))
            tc_add(lhs,
                   renderC(A12.first) + " / " + renderC(A12.second) + " / " +
                       renderE(Be),
                   c * c2, ring);
          auto [L2, R2] = bicomodule_coactions(Be, sbasisA, sbasisM, ring);
          for (const auto& [B12, c2] : L2)
            tc_add(rhs,
                   renderC(Ae) + " / " + renderC(B12.first) + " / " +
                       renderE(B12.second),
                   c * c2, ring);
        }
        if (!(lhs == rhs))
          return "left-left coassociativity fails on " + renderE(el);

        // RR: (Delta^R x 1) Delta^R  =  (1 x Delta_C) Delta^R
        lhs.clear();
        rhs.clear();
        for (const auto& [AB, c] : R) {
          const auto& [Ae, Be] = AB;
          auto [L2, R2] = bicomodule_coactions(Ae, sbasisA, sbasisM, ring);
          for (const auto& [A12, c2] : R2)
            tc_add(lhs,
                   renderE(A12.first) + " / " + renderC(A12.second) + " / " +
                       renderC(Be),
                   c * c2, ring);
          for (const auto& [B12, c2] :
               cofree_comultiplication(Be, sbasisA, ring))
            tc_add(rhs,
                   renderE(Ae) + " / " + renderC(B12.first) + " / " +
                       renderC(B12.second),
                   c * c2, ring);
        }
        if (!(lhs == rhs))
          return "right-right coassociativity fails on " + renderE(el);

        // LR: (Delta^L x 1) Delta^R  =  (1 x Delta^R) Delta^L
        lhs.clear();
        rhs.clear();
        for (const auto& [AB, c] : R) {
          const auto& [Ae, Be] = AB;
          auto [L2, R2] = bicomodule_coactions(Ae, sbasisA, sbasisM, ring);
          for (const auto& [A12, c2] : L2)
            tc_add(lhs,
                   renderC(A12.first) + " / " + renderE(A12.second) + " / " +
                       renderC(Be),
                   c * c2, ring);
        }
        for (const auto& [AB, c] : L) {
          const auto& [Ae, Be] = AB;
          auto [L2, R2] = bicomodule_coactions(Be, sbasisA, sbasisM, ring);
          for (const auto& [B12, c2] : R2)
            tc_add(rhs,
                   renderC(Ae) + " / " + renderE(B12.first) + " / " +
                       renderC(B12.second),
                   c * c2, ring);
        }
        if (!(lhs == rhs))
          return "left-right compatibility fails on " + renderE(el);

        // f-compatibility, left coaction:
        // (f_C x 1) Delta^L = Delta^L f_E = (1 x f_E) Delta^L
        TripleComb a1, a2, a3;
        for (const auto& [AB, c] : L) {
          const auto& [Ae, Be] = AB;
          for (const auto& [A2, c2] : cofree_f(Ae, ring))
            tc_add(a1, renderC(A2) + " / " + renderE(Be), c * c2, ring);
          int sg = koszul_sign(fdeg, element_degree(Ae, sbasisA));
          for (const auto& [B2, c2] : bimodule_f(Be, ring))
            tc_add(a2, renderC(Ae) + " / " + renderE(B2), sg * c * c2, ring);
        }
        for (const auto& [el2, c] : bimodule_f(el, ring)) {
          auto [L2, R2] = bicomodule_coactions(el2, sbasisA, sbasisM, ring);
          for (const auto& [AB, c2] : L2)
            tc_add(a3, renderC(AB.first) + " / " + renderE(AB.second), c * c2,
                   ring);
        }
        if (!(a1 == a2) || !(a1 == a3))
          return "left f-compatibility fails on " + renderE(el);

        // f-compatibility, right coaction:
        // (f_E x 1) Delta^R = Delta^R f_E = (1 x f_C) Delta^R
        a1.clear();
        a2.clear();
        a3.clear();
        for (const auto& [AB, c] : R) {
          const auto& [Ae, Be] = AB;
          for (const auto& [A2, c2] : bimodule_f(Ae, ring))
            tc_add(a1, renderE(A2) + " / " + renderC(Be), c * c2, ring);
          int sg = koszul_sign(fdeg,
                               bimodule_element_degree(Ae, sbasisA, sbasisM));
          for (const auto& [B2, c2] : cofree_f(Be, ring))
            tc_add(a2, renderE(Ae) + " / " + renderC(B2), sg * c * c2, ring);
        }
        for (const auto& [el2, c] : bimodule_f(el, ring)) {
          auto [L2, R2] = bicomodule_coactions(el2, sbasisA, sbasisM, ring);
          for (const auto& [AB, c2] : R2)
            tc_add(a3, renderE(AB.first) + " / " + renderC(AB.second), c * c2,
                   ring);
        }
        if (!(a1 == a2) || !(a1 == a3))
          return "right f-compatibility fails on " + renderE(el);
      }
    }
  }
  return "";
}

}  // namespace dainfty
