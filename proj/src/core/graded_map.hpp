#pragma once

#include "core/bigraded.hpp"

namespace dainfty {

// Homogeneous linear map T^j(A) -> T^k(A) of a fixed bidegree, given by its
// values on basis words.  Missing words map to zero.  target_arity is 1 for
// ordinary multi-linear operations and > 1 for coactions/comultiplications.
struct GradedMap {
  int arity = 1;
  int target_arity = 1;
  Bidegree degree{0, 0};
  std::map<TensorWord, LinComb> entries;

  bool is_zero() const;
  // value on a single basis word (zero when absent)
  LinComb apply(const TensorWord& w) const;
  void set(const TensorWord& input, const LinComb& value);
};

// Throws std::invalid_argument naming the offending entry unless every
// stored value is homogeneous: |output word| == |input word| + degree,
// with arities matching the declared ones.  Arity >= 1 is enforced.
void validate_homogeneous(const GradedMap& f, const BigradedBasis& basis);

// f applied at tensor position pos (1-based) of word w, i.e. the value of
// 1^{r} (x) f (x) 1^{t} with r = pos-1.  Koszul sign: (-1)^{<|f|, |left|>}
// for f moving past the first r letters.  Requires pos + arity - 1 <= |w|.
LinComb apply_at(const GradedMap& f, const TensorWord& w, int pos,
                 const BigradedBasis& basis, const Ring& ring);

// Same, applied to every word of a linear combination.
LinComb apply_at(const GradedMap& f, const LinComb& x, int pos,
                 const BigradedBasis& basis, const Ring& ring);

// Differential of f in the morphism complex of (A, d_source), (B, d_target):
//   (del f)  =  d_target . f  -  (-1)^{v(f)}  sum_r  f . (1 x .. d .. x 1).
// d_source, d_target have arity 1; f may have any arity.
GradedMap mor_differential(const GradedMap& f, const GradedMap& d_source,
                           const GradedMap& d_target,
                           const BigradedBasis& basis, const Ring& ring);

}  // namespace dainfty
