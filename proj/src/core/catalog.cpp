#include "core/catalog.hpp"

#include <stdexcept>

namespace dainfty {

int sn(int n) {
  long e = (long)(n + 1) * (n + 2) / 2;
  return (e % 2) ? -1 : 1;
}

const char* example_id_name(ExampleId id) {
  switch (id) {
    case ExampleId::allocca_lada: return "allocca_lada";
    case ExampleId::allocca_lada_minimal: return "allocca_lada_minimal";
    case ExampleId::rank3_derived: return "rank3_derived";
    case ExampleId::rank3_modified_m01: return "rank3_modified_m01";
    case ExampleId::rank3_truncated_bidga: return "rank3_truncated_bidga";
    case ExampleId::rank3_truncated_bidga_m01: return "rank3_truncated_bidga_m01";
  }
  return "?";
}

ExampleId example_id_from_name(const std::string& name) {
  for (ExampleId id : all_example_ids())
    if (name == example_id_name(id)) return id;
  throw std::invalid_argument("unknown example id: " + name);
}

std::vector<ExampleId> all_example_ids() {
  return {ExampleId::allocca_lada,       ExampleId::allocca_lada_minimal,
          ExampleId::rank3_derived,      ExampleId::rank3_modified_m01,
          ExampleId::rank3_truncated_bidga,
          ExampleId::rank3_truncated_bidga_m01};
}

namespace {

TensorWord pattern_word(int first, int filler, int count_before, int second,
                        int count_after) {
  // first (x) filler^count_before (x) second (x) filler^count_after
  TensorWord w;
  w.push_back(first);
  for (int k = 0; k < count_before; ++k) w.push_back(filler);
  w.push_back(second);
  for (int k = 0; k < count_after; ++k) w.push_back(filler);
  return w;
}

StructureFamily rank3(int arity_bound, bool with_m01, bool truncated) {
  StructureFamily fam;
  fam.convention = Convention::tilde;
  fam.max_horizontal = arity_bound;
  fam.max_arity = arity_bound;
  int u = fam.basis.add("u", {0, 0});
  int v = fam.basis.add("v", {-1, 0});
  int w = fam.basis.add("w", {0, 1});

  auto include = [&](int i, int j) {
    return !truncated || (i + j <= 2);
  };

  for (int n = 2; n <= arity_bound; ++n) {
    if (!include(0, n)) continue;
    GradedMap m;
    // m_{0n}(u w^k u w^{n-2-k}) = (-1)^k s_n u
    for (int k = 0; k <= n - 2; ++k) {
      LinComb val;
      val.add({u}, BigInt((k % 2 ? -1 : 1) * sn(n)), fam.ring);
      m.entries[pattern_word(u, w, k, u, n - 2 - k)] = val;
    }
    // m_{0n}(u w^{n-1}) = s_{n+1} w
    {
      TensorWord in{u};
      in.insert(in.end(), n - 1, w);
      LinComb val = m.apply(in);
      val.add({w}, BigInt(sn(n + 1)), fam.ring);
      m.set(in, val);
    }
    // m_{0n}(u w^{n-2} v) = (-1)^n s_n v
    {
      TensorWord in{u};
      in.insert(in.end(), n - 2, w);
      in.push_back(v);
      LinComb val = m.apply(in);
      val.add({v}, BigInt((n % 2 ? -1 : 1) * sn(n)), fam.ring);
      m.set(in, val);
    }
    fam.set_map(0, n, std::move(m));
  }
  for (int n = 1; n <= arity_bound; ++n) {
    if (!include(1, n)) continue;
    GradedMap m;
    TensorWord in{u};
    in.insert(in.end(), n - 1, w);
    LinComb val;
    val.add({v}, BigInt(sn(n + 1)), fam.ring);
    m.entries[in] = val;
    fam.set_map(1, n, std::move(m));
  }
  if (with_m01) {
    GradedMap m;
    LinComb val;
    val.add({w}, BigInt(1), fam.ring);
    m.entries[TensorWord{u}] = val;
    fam.set_map(0, 1, std::move(m));
  }
  fam.validate();
  return fam;
}

StructureFamily allocca_lada_family(int arity_bound, bool minimal) {
  StructureFamily fam;
  fam.convention = Convention::sagave;
  fam.max_horizontal = arity_bound;
  fam.max_arity = arity_bound;
  int x = fam.basis.add("x", {0, 0});
  int y = fam.basis.add("y", {0, 1});

  if (!minimal) {
    GradedMap m;
    LinComb val;
    val.add({y}, BigInt(1), fam.ring);
    m.entries[TensorWord{x}] = val;
    fam.set_map(0, 1, std::move(m));
  }
  for (int n = 2; n <= arity_bound; ++n) {
    GradedMap m;
    for (int k = 0; k <= n - 2; ++k) {
      LinComb val;
      val.add({x}, BigInt((k % 2 ? -1 : 1) * sn(n)), fam.ring);
      m.entries[pattern_word(x, y, k, x, n - 2 - k)] = val;
    }
    TensorWord in{x};
    in.insert(in.end(), n - 1, y);
    LinComb val = m.apply(in);
    val.add({y}, BigInt(sn(n + 1)), fam.ring);
    m.set(in, val);
    fam.set_map(0, n, std::move(m));
  }
  fam.validate();
  return fam;
}

}  // namespace

StructureFamily build_example(ExampleId id, int arity_bound) {
  if (arity_bound < 2)
    throw std::invalid_argument("arity bound must be at least 2");
  switch (id) {
    case ExampleId::allocca_lada: return allocca_lada_family(arity_bound, false);
    case ExampleId::allocca_lada_minimal:
      return allocca_lada_family(arity_bound, true);
    case ExampleId::rank3_derived: return rank3(arity_bound, false, false);
    case ExampleId::rank3_modified_m01: return rank3(arity_bound, true, false);
    case ExampleId::rank3_truncated_bidga:
      return rank3(arity_bound, false, true);
    case ExampleId::rank3_truncated_bidga_m01:
      return rank3(arity_bound, true, true);
  }
  throw std::invalid_argument("unknown example id");
}

std::string bidegree_support_check(const StructureFamily& fam) {
  int u = fam.basis.index_of("u");
  if (u < 0) return "basis has no generator named u";
  for (const auto& [ij, m] : fam.maps) {
    auto [i, j] = ij;
    if (m.is_zero()) continue;
    if (i > 1) return "nonzero map with horizontal index > 1";
    for (const auto& [input, value] : m.entries) {
      if (value.is_zero()) continue;
      if (input.empty() || input[0] != u)
        return "nonzero entry whose input does not start with u";
      for (const auto& [out, c] : value.terms()) {
        (void)c;
        if (out.size() != 1) return "entry output is not a single generator";
      }
    }
  }
  return "";
}

}  // namespace dainfty
