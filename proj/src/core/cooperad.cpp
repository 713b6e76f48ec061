#include "core/cooperad.hpp"

#include <map>
#include <stdexcept>

namespace dainfty {

namespace {
int pow_sign(long e) { return (((e % 2) + 2) % 2) ? -1 : 1; }
}

CooperadKind cooperad_kind_from_name(const std::string& name) {
  if (name == "mu") return CooperadKind::mu;
  if (name == "mut" || name == "mu_tilde") return CooperadKind::mut;
  if (name == "alpha") return CooperadKind::alpha;
  throw std::invalid_argument("unknown cooperad presentation: " + name);
}

const char* cooperad_kind_name(CooperadKind kind) {
  switch (kind) {
    case CooperadKind::mu: return "mu";
    case CooperadKind::mut: return "mut";
    case CooperadKind::alpha: return "alpha";
  }
  return "?";
}

Bidegree generator_degree(CooperadKind kind, int u, int v) {
  if (kind == CooperadKind::alpha) return Bidegree{-u, -u};
  return Bidegree{-u, 1 - u - v};
}

std::vector<std::vector<int>> compositions(int v, int j) {
  std::vector<std::vector<int>> out;
  if (j == 0) {
    if (v == 0) out.push_back({});
    return out;
  }
  for (int q1 = 1; q1 <= v - j + 1; ++q1) {
    for (auto& rest : compositions(v - q1, j - 1)) {
      std::vector<int> c{q1};
      c.insert(c.end(), rest.begin(), rest.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<std::vector<int>> weak_compositions(int u, int j) {
  std::vector<std::vector<int>> out;
  if (j == 0) {
    if (u == 0) out.push_back({});
    return out;
  }
  for (int p1 = 0; p1 <= u; ++p1) {
    for (auto& rest : weak_compositions(u - p1, j - 1)) {
      std::vector<int> c{p1};
      c.insert(c.end(), rest.begin(), rest.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

long exponent_mu(const std::vector<int>& ps, const std::vector<int>& qs) {
  int j = static_cast<int>(ps.size());
  long s = 0;
  for (int k = 0; k < j; ++k)
    for (int l = k + 1; l < j; ++l)
      s += ps[k] + (long)qs[k] * (ps[l] + qs[l] + 1);
  return s;
}

long exponent_mut(const std::vector<int>& ps, const std::vector<int>& qs) {
  int j = static_cast<int>(ps.size());
  long s = 0;
  for (int k = 1; k < j; ++k)  // 1-based factor index k multiplies (k + j)
    s += (long)(ps[k - 1] + qs[k - 1] + 1) * (k + j);
  for (int k = 0; k < j; ++k)
    for (int l = k + 1; l < j; ++l) s += (long)qs[k] * ps[l];
  return s;
}

long exponent_alpha(int i, const std::vector<int>& ps,
                    const std::vector<int>& qs, int v) {
  int j = static_cast<int>(ps.size());
  long s = (long)i * (v + j);
  for (int k = 0; k < j; ++k)
    for (int l = k + 1; l < j; ++l)
      s += (long)ps[k] * qs[l] + (long)qs[k] * ps[l];
  return s;
}

std::vector<DecompTerm> cooperad_comultiplication(CooperadKind kind, int u,
                                                  int v) {
  if (u < 0 || v < 1)
    throw std::invalid_argument("generator indices need u >= 0, v >= 1");
  std::vector<DecompTerm> out;
  for (int j = 1; j <= v; ++j) {
    for (const auto& qs : compositions(v, j)) {
      for (int i = 0; i <= u; ++i) {
        for (const auto& ps : weak_compositions(u - i, j)) {
          long e;
          if (kind == CooperadKind::mu)
            e = exponent_mu(ps, qs);
          else if (kind == CooperadKind::mut)
            e = exponent_mut(ps, qs);
          else
            e = exponent_alpha(i, ps, qs, v);
          DecompTerm t;
          t.sign = pow_sign(e);
          t.i = i;
          t.j = j;
          for (int k = 0; k < j; ++k) t.inners.emplace_back(ps[k], qs[k]);
          out.push_back(std::move(t));
        }
      }
    }
  }
  return out;
}

int lambda_suspension_sign(const Bidegree& outer_degree,
                           const std::vector<Bidegree>& inner_degrees,
                           const std::vector<int>& inner_arities) {
  // s^{l_k+1} has bidegree (0, -(l_k+1)); passing a symbol of bidegree
  // (h, v) costs (-1)^{(l_k+1) v}.  Factor k passes the suspended outer
  // generator and the suspended inner factors to its left.
  long s = 0;
  for (size_t k = 0; k < inner_arities.size(); ++k) {
    long lk1 = inner_arities[k] + 1;
    s += lk1 * outer_degree.v;
    for (size_t l = 0; l < k; ++l) s += lk1 * inner_degrees[l].v;
  }
  return pow_sign(s);
}

namespace {

// Two-level tree in normal form: root generator, the middle layer, and the
// leaf blocks grouped under each middle factor.
struct Tree {
  std::pair<int, int> root;
  std::vector<std::pair<int, int>> mids;
  std::vector<std::vector<std::pair<int, int>>> blocks;

  bool operator<(const Tree& o) const {
    if (root != o.root) return root < o.root;
    if (mids != o.mids) return mids < o.mids;
    return blocks < o.blocks;
  }
  bool operator==(const Tree& o) const {
    return root == o.root && mids == o.mids && blocks == o.blocks;
  }
};

}  // namespace

bool check_coassociativity(CooperadKind kind, int u, int v) {
  auto top = cooperad_comultiplication(kind, u, v);

  // Route A: re-expand the outer factor of each term.
  std::map<Tree, long> A;
  for (const DecompTerm& t : top) {
    for (const DecompTerm& t2 : cooperad_comultiplication(kind, t.i, t.j)) {
      Tree tr;
      tr.root = {t2.i, t2.j};
      tr.mids = t2.inners;
      size_t pos = 0;
      for (const auto& [P, Q] : t2.inners) {
        tr.blocks.emplace_back(t.inners.begin() + pos,
                               t.inners.begin() + pos + Q);
        pos += Q;
      }
      A[tr] += (long)t.sign * t2.sign;
    }
  }

  // Route B: re-expand every inner factor, then move each middle factor
  // past the leaves of the blocks to its left (Koszul signs).
  std::map<Tree, long> B;
  for (const DecompTerm& t : top) {
    std::vector<std::vector<DecompTerm>> choices;
    for (const auto& [P, Q] : t.inners)
      choices.push_back(cooperad_comultiplication(kind, P, Q));
    std::vector<size_t> idx(choices.size(), 0);
    while (true) {
      long total = t.sign;
      Tree tr;
      tr.root = {t.i, t.j};
      for (size_t k = 0; k < choices.size(); ++k) {
        const DecompTerm& ck = choices[k][idx[k]];
        total *= ck.sign;
        tr.mids.emplace_back(ck.i, ck.j);
        tr.blocks.push_back(ck.inners);
      }
      for (size_t k = 1; k < tr.mids.size(); ++k) {
        Bidegree dk = generator_degree(kind, tr.mids[k].first, tr.mids[k].second);
        for (size_t l = 0; l < k; ++l)
          for (const auto& [pl, ql] : tr.blocks[l])
            total *= koszul_sign(dk, generator_degree(kind, pl, ql));
      }
      B[tr] += total;

      size_t pos = choices.size();
      while (pos > 0 && ++idx[pos - 1] == choices[pos - 1].size()) {
        idx[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }

  for (auto it = A.begin(); it != A.end();) {
    if (it->second == 0) it = A.erase(it); else ++it;
  }
  for (auto it = B.begin(); it != B.end();) {
    if (it->second == 0) it = B.erase(it); else ++it;
  }
  return A == B;
}

}  // namespace dainfty
