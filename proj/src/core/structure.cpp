#include "core/structure.hpp"

#include <algorithm>

namespace dainfty {

namespace {

int pow_sign(long e) { return (((e % 2) + 2) % 2) ? -1 : 1; }

// (-1)^{j(j-1)/2}, the rescaling factor between the two conventions
int tilde_factor(int j) { return pow_sign((long)j * (j - 1) / 2); }

}  // namespace

const GradedMap* StructureFamily::map_at(int i, int j) const {
  auto it = maps.find({i, j});
  return it == maps.end() ? nullptr : &it->second;
}

void StructureFamily::set_map(int i, int j, GradedMap m) {
  m.arity = j;
  m.target_arity = 1;
  m.degree = expected_degree(i, j);
  maps[{i, j}] = std::move(m);
}

void StructureFamily::validate() const {
  for (const auto& [ij, m] : maps) {
    auto [i, j] = ij;
    if (i < 0 || j < 1) throw std::invalid_argument("map index out of range");
    if (i > max_horizontal || j > max_arity)
      throw std::invalid_argument("map index beyond declared bounds");
    if (m.arity != j || m.target_arity != 1)
      throw std::invalid_argument("map arity mismatch");
    if (m.degree != expected_degree(i, j))
      throw std::invalid_argument("map bidegree mismatch");
    validate_homogeneous(m, basis);
  }
}

std::vector<RelationTerm> expand_relation(int u, int v, Convention conv) {
  std::vector<RelationTerm> out;
  // u = i + p, v = j + q - 1, r + 1 + t = j, r,t >= 0
  for (int i = 0; i <= u; ++i) {
    int p = u - i;
    for (int j = 1; j <= v; ++j) {
      int q = v + 1 - j;
      if (q < 1) continue;
      for (int r = 0; r + 1 <= j; ++r) {
        int t = j - 1 - r;
        long e;
        if (conv == Convention::sagave) {
          e = (long)r * q + t + (long)p * j;
        } else {
          // star form: k = r + 1, sign (-1)^{i+j+(q-1)(k+j)+p(j-1)}
          int k = r + 1;
          e = (long)i + j + (long)(q - 1) * (k + j) + (long)p * (j - 1);
        }
        out.push_back(RelationTerm{i, j, p, q, r, pow_sign(e)});
      }
    }
  }
  return out;
}

std::vector<RelationTerm> star_product_terms(int i, int j, int p, int q) {
  std::vector<RelationTerm> out;
  for (int k = 1; k <= j; ++k) {
    long e = (long)i + j + (long)(q - 1) * (k + j) + (long)p * (j - 1);
    out.push_back(RelationTerm{i, j, p, q, k - 1, pow_sign(e)});
  }
  return out;
}

LinComb relation_residual(const StructureFamily& fam, int u, int v,
                          const TensorWord& input) {
  if (static_cast<int>(input.size()) != v)
    throw std::invalid_argument("relation input arity mismatch");
  LinComb acc;
  for (const RelationTerm& term : expand_relation(u, v, fam.convention)) {
    const GradedMap* outer = fam.map_at(term.i, term.j);
    const GradedMap* inner = fam.map_at(term.p, term.q);
    if (!outer || !inner) continue;  // zero map
    LinComb innered =
        apply_at(*inner, input, term.r + 1, fam.basis, fam.ring);
    for (const auto& [w, c] : innered.terms()) {
      LinComb outv = outer->apply(w);
      acc.add_scaled(outv, c * term.sign, fam.ring);
    }
  }
  return acc;
}

CheckResult check_derived_ainfinity(const StructureFamily& fam, int u_max,
                                    int v_max) {
  if (u_max > fam.max_horizontal || v_max > fam.max_arity)
    throw TruncationError(
        "requested window exceeds the declared truncation bounds");
  fam.validate();
  CheckResult res;
  for (int u = 0; u <= u_max; ++u) {
    for (int v = 1; v <= v_max; ++v) {
      RelationReport rep;
      rep.u = u;
      rep.v = v;
      for (const TensorWord& w : all_words(fam.basis, v)) {
        LinComb r = relation_residual(fam, u, v, w);
        if (!r.is_zero()) {
          rep.pass = false;
          ++rep.failure_count;
          if (rep.failures.size() < kMaxReportedFailures)
            rep.failures.emplace_back(w, r);
        }
      }
      if (!rep.pass) res.pass = false;
      res.reports.push_back(std::move(rep));
    }
  }
  return res;
}

StructureFamily convert_convention(const StructureFamily& fam) {
  StructureFamily out = fam;
  out.convention = fam.convention == Convention::sagave ? Convention::tilde
                                                        : Convention::sagave;
  for (auto& [ij, m] : out.maps) {
    int f = tilde_factor(ij.second);
    if (f == -1)
      for (auto& [w, lc] : m.entries) lc.scale(-1, fam.ring);
  }
  return out;
}

CheckResult check_bidga(const StructureFamily& fam) {
  fam.validate();
  for (const auto& [ij, m] : fam.maps) {
    if (m.is_zero()) continue;
    auto [i, j] = ij;
    bool allowed = (i == 0 && j == 1) || (i == 0 && j == 2) || (i == 1 && j == 1);
    if (!allowed)
      throw std::invalid_argument(
          "bidga support must lie in {(0,1),(0,2),(1,1)}");
  }
  // Windows generated by that support: d^2, Leibniz, associativity,
  // the (1,1)-commutation, the (1,2) Leibniz rule, m_11^2.
  static const std::pair<int, int> windows[] = {{0, 1}, {0, 2}, {0, 3},
                                                {1, 1}, {1, 2}, {2, 1}};
  CheckResult res;
  for (auto [u, v] : windows) {
    RelationReport rep;
    rep.u = u;
    rep.v = v;
    for (const TensorWord& w : all_words(fam.basis, v)) {
      LinComb r = relation_residual(fam, u, v, w);
      if (!r.is_zero()) {
        rep.pass = false;
        ++rep.failure_count;
        if (rep.failures.size() < kMaxReportedFailures)
          rep.failures.emplace_back(w, r);
      }
    }
    if (!rep.pass) res.pass = false;
    res.reports.push_back(std::move(rep));
  }
  return res;
}

// ---- twisted complexes ----

CheckResult check_twisted_complex(const TwistedComplex& tc, int u_max) {
  CheckResult res;
  for (int u = 0; u <= u_max; ++u) {
    RelationReport rep;
    rep.u = u;
    rep.v = 1;
    for (const TensorWord& w : all_words(tc.basis, 1)) {
      LinComb acc;
      for (int i = 0; i <= u; ++i) {
        int p = u - i;
        auto iti = tc.ds.find(i);
        auto itp = tc.ds.find(p);
        if (iti == tc.ds.end() || itp == tc.ds.end()) continue;
        LinComb inner = itp->second.apply(w);
        for (const auto& [word, c] : inner.terms())
          acc.add_scaled(iti->second.apply(word), c * pow_sign(i), tc.ring);
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
  return res;
}

CheckResult check_twisted_map(const TwistedMap& f, const TwistedComplex& src,
                              const TwistedComplex& dst, int u_max) {
  CheckResult res;
  for (int u = 0; u <= u_max; ++u) {
    RelationReport rep;
    rep.u = u;
    rep.v = 1;
    for (const TensorWord& w : all_words(src.basis, 1)) {
      LinComb acc;
      for (int i = 0; i <= u; ++i) {
        int p = u - i;
        // (-1)^i f_i d^src_p
        auto itf = f.fs.find(i);
        auto itd = src.ds.find(p);
        if (itf != f.fs.end() && itd != src.ds.end()) {
          LinComb inner = itd->second.apply(w);
          for (const auto& [word, c] : inner.terms())
            acc.add_scaled(itf->second.apply(word), c * pow_sign(i), src.ring);
        }
        // - d^dst_i f_p
        auto itd2 = dst.ds.find(i);
        auto itf2 = f.fs.find(p);
        if (itd2 != dst.ds.end() && itf2 != f.fs.end()) {
          LinComb inner = itf2->second.apply(w);
          for (const auto& [word, c] : inner.terms())
            acc.add_scaled(itd2->second.apply(word), -c, src.ring);
        }
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
  return res;
}

TwistedMap compose_twisted_maps(const TwistedMap& g, const TwistedMap& f,
                                const TwistedComplex& src,
                                const TwistedComplex& dst, int u_max) {
  (void)dst;
  TwistedMap out;
  out.max_index = u_max;
  for (int u = 0; u <= u_max; ++u) {
    GradedMap comp;
    comp.arity = 1;
    comp.target_arity = 1;
    comp.degree = Bidegree{-u, -u};
    for (const TensorWord& w : all_words(src.basis, 1)) {
      LinComb acc;
      for (int i = 0; i <= u; ++i) {
        int p = u - i;
        auto itg = g.fs.find(i);
        auto itf = f.fs.find(p);
        if (itg == g.fs.end() || itf == f.fs.end()) continue;
        LinComb inner = itf->second.apply(w);
        for (const auto& [word, c] : inner.terms())
          acc.add_scaled(itg->second.apply(word), c, src.ring);
      }
      if (!acc.is_zero()) comp.entries[w] = acc;
    }
    if (!comp.entries.empty()) out.fs[u] = std::move(comp);
  }
  return out;
}

TwistedComplex arity_one_part(const StructureFamily& fam) {
  TwistedComplex tc;
  tc.basis = fam.basis;
  tc.ring = fam.ring;
  tc.max_index = fam.max_horizontal;
  for (const auto& [ij, m] : fam.maps) {
    auto [i, j] = ij;
    if (j != 1) continue;
    GradedMap d = m;
    d.degree = Bidegree{-i, 1 - i};
    // bidegree of m_{i,1} is (-i, 1-i) already; keep values as-is
    tc.ds[i] = std::move(d);
  }
  return tc;
}

}  // namespace dainfty
