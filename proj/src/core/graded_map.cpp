#include "core/graded_map.hpp"

#include <stdexcept>

namespace dainfty {

bool GradedMap::is_zero() const {
  for (const auto& [w, lc] : entries)
    if (!lc.is_zero()) return false;
  return true;
}

LinComb GradedMap::apply(const TensorWord& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? LinComb{} : it->second;
}

void GradedMap::set(const TensorWord& input, const LinComb& value) {
  if (value.is_zero())
    entries.erase(input);
  else
    entries[input] = value;
}

void validate_homogeneous(const GradedMap& f, const BigradedBasis& basis) {
  if (f.arity < 1) throw std::invalid_argument("map arity must be >= 1");
  if (f.target_arity < 1)
    throw std::invalid_argument("map target arity must be >= 1");
  for (const auto& [input, value] : f.entries) {
    if (static_cast<int>(input.size()) != f.arity)
      throw std::invalid_argument("entry input arity mismatch");
    Bidegree want = word_degree(input, basis) + f.degree;
    for (const auto& [out, c] : value.terms()) {
      (void)c;
      if (static_cast<int>(out.size()) != f.target_arity)
        throw std::invalid_argument("entry output arity mismatch");
      if (word_degree(out, basis) != want) {
        std::string msg = "inhomogeneous entry on input (";
        for (size_t k = 0; k < input.size(); ++k)
          msg += (k ? "," : "") + basis.name(input[k]);
        msg += ")";
        throw std::invalid_argument(msg);
      }
    }
  }
}

LinComb apply_at(const GradedMap& f, const TensorWord& w, int pos,
                 const BigradedBasis& basis, const Ring& ring) {
  int n = static_cast<int>(w.size());
  if (pos < 1 || pos + f.arity - 1 > n)
    throw std::invalid_argument("apply_at position out of range");
  TensorWord left(w.begin(), w.begin() + (pos - 1));
  TensorWord mid(w.begin() + (pos - 1), w.begin() + (pos - 1) + f.arity);
  TensorWord right(w.begin() + (pos - 1) + f.arity, w.end());

  LinComb out;
  auto it = f.entries.find(mid);
  if (it == f.entries.end()) return out;

  int sign = koszul_sign(f.degree, word_degree(left, basis));
  for (const auto& [val, c] : it->second.terms()) {
    TensorWord word = left;
    word.insert(word.end(), val.begin(), val.end());
    word.insert(word.end(), right.begin(), right.end());
    out.add(word, c * sign, ring);
  }
  return out;
}

LinComb apply_at(const GradedMap& f, const LinComb& x, int pos,
                 const BigradedBasis& basis, const Ring& ring) {
  LinComb out;
  for (const auto& [w, c] : x.terms()) {
    LinComb part = apply_at(f, w, pos, basis, ring);
    out.add_scaled(part, c, ring);
  }
  return out;
}

GradedMap mor_differential(const GradedMap& f, const GradedMap& d_source,
                           const GradedMap& d_target,
                           const BigradedBasis& basis, const Ring& ring) {
  if (d_source.arity != 1 || d_target.arity != 1)
    throw std::invalid_argument("mor_differential expects arity-1 differentials");
  GradedMap out;
  out.arity = f.arity;
  out.target_arity = f.target_arity;
  out.degree = f.degree + d_target.degree;

  int sf = (((f.degree.v % 2) + 2) % 2) ? -1 : 1;
  for (const auto& w : all_words(basis, f.arity)) {
    LinComb acc;
    // d_target . f
    LinComb fw = f.apply(w);
    for (const auto& [word, c] : fw.terms()) {
      for (int pos = 1; pos <= static_cast<int>(word.size()); ++pos)
        acc.add_scaled(apply_at(d_target, word, pos, basis, ring), c, ring);
    }
    // - (-1)^{v(f)} f . (sum of d at each input slot)
    for (int pos = 1; pos <= f.arity; ++pos) {
      LinComb dw = apply_at(d_source, w, pos, basis, ring);
      for (const auto& [word, c] : dw.terms()) {
        LinComb fv = f.apply(word);
        acc.add_scaled(fv, -sf * c, ring);
      }
    }
    if (!acc.is_zero()) out.entries[w] = acc;
  }
  return out;
}

}  // namespace dainfty
