#include "core/bigraded.hpp"

#include <stdexcept>

namespace dainfty {

int BigradedBasis::add(const std::string& name, Bidegree deg) {
  if (index_.count(name))
    throw std::invalid_argument("duplicate basis name: " + name);
  int idx = static_cast<int>(items_.size());
  items_.emplace_back(name, deg);
  index_[name] = idx;
  return idx;
}

int BigradedBasis::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

Bidegree word_degree(const TensorWord& w, const BigradedBasis& basis) {
  Bidegree d{0, 0};
  for (int32_t idx : w) d = d + basis.degree(idx);
  return d;
}

void LinComb::add(const TensorWord& w, const BigInt& c, const Ring& ring) {
  BigInt v = ring.normalize(terms_.count(w) ? terms_[w] + c : c);
  if (v == 0)
    terms_.erase(w);
  else
    terms_[w] = v;
}

void LinComb::add_scaled(const LinComb& other, const BigInt& c,
                         const Ring& ring) {
  for (const auto& [w, coeff] : other.terms_) add(w, coeff * c, ring);
}

void LinComb::scale(const BigInt& c, const Ring& ring) {
  std::map<TensorWord, BigInt> out;
  for (const auto& [w, coeff] : terms_) {
    BigInt v = ring.normalize(coeff * c);
    if (v != 0) out[w] = v;
  }
  terms_ = std::move(out);
}

std::vector<TensorWord> all_words(const BigradedBasis& basis, int arity) {
  std::vector<TensorWord> out;
  if (arity <= 0) return out;
  TensorWord w(arity, 0);
  int n = basis.size();
  if (n == 0) return out;
  while (true) {
    out.push_back(w);
    int pos = arity - 1;
    while (pos >= 0 && w[pos] == n - 1) {
      w[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++w[pos];
  }
  return out;
}

BigradedBasis suspend_basis(const BigradedBasis& basis,
                            SuspensionDirection dir, long power) {
  BigradedBasis out;
  for (int i = 0; i < basis.size(); ++i) {
    Bidegree d = basis.degree(i);
    if (dir == SuspensionDirection::vertical)
      d.v -= power;
    else
      d.h -= power;
    out.add(basis.name(i), d);
  }
  return out;
}

}  // namespace dainfty
