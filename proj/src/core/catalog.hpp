#pragma once

#include "core/structure.hpp"

namespace dainfty {

// Built-in example families, truncated at the requested arity bound.
//
//   allocca_lada          A-infinity structure on <x, y>, m_1(x) = y plus the
//                         arity-n maps patterned by s_n (classical-sign tag).
//   allocca_lada_minimal  same without m_1.
//   rank3_derived         rank-3 bigraded module <u, v, w> with m_{0n}, m_{1n}
//                         given by the s_n patterns (tilde tag).
//   rank3_modified_m01    rank3_derived plus m_{01}(u) = w; this family fails
//                         the relations (a known obstruction witness).
//   rank3_truncated_bidga       only m_{02}, m_{11}; passes check_bidga.
//   rank3_truncated_bidga_m01   m_{01}, m_{02}, m_{11}.
enum class ExampleId {
  allocca_lada,
  allocca_lada_minimal,
  rank3_derived,
  rank3_modified_m01,
  rank3_truncated_bidga,
  rank3_truncated_bidga_m01,
};

inline constexpr int kDefaultArityBound = 8;

// (-1)^{(n+1)(n+2)/2}: the coefficient pattern +,+,-,-,... from n = 2.
int sn(int n);

const char* example_id_name(ExampleId id);
// throws std::invalid_argument for unknown names
ExampleId example_id_from_name(const std::string& name);
std::vector<ExampleId> all_example_ids();

StructureFamily build_example(ExampleId id, int arity_bound = kDefaultArityBound);

// Structural sanity of the rank-3 shapes: every nonzero m_{ij} has i <= 1,
// inputs start with the generator u, and outputs are single generators.
// Returns an empty string when fine, else a description of the violation.
std::string bidegree_support_check(const StructureFamily& fam);

}  // namespace dainfty
