#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/scalar.hpp"

namespace dainfty {

// Bidegree (horizontal, vertical).  Horizontal is the "derived" direction,
// vertical the internal/homological one.
struct Bidegree {
  long h = 0;
  long v = 0;

  Bidegree operator+(const Bidegree& o) const { return {h + o.h, v + o.v}; }
  Bidegree operator-(const Bidegree& o) const { return {h - o.h, v - o.v}; }
  bool operator==(const Bidegree& o) const { return h == o.h && v == o.v; }
  bool operator!=(const Bidegree& o) const { return !(*this == o); }
  bool operator<(const Bidegree& o) const {
    return h != o.h ? h < o.h : v < o.v;
  }
};

// Koszul pairing of two bidegrees, mod 2: <(r,s),(r',s')> = rr' + ss'.
inline int koszul_pairing(const Bidegree& a, const Bidegree& b) {
  long x = a.h * b.h + a.v * b.v;
  return static_cast<int>(((x % 2) + 2) % 2);
}

// Sign (-1)^<a,b> picked up when an operation of bidegree a moves past an
// element of bidegree b.
inline int koszul_sign(const Bidegree& a, const Bidegree& b) {
  return koszul_pairing(a, b) ? -1 : 1;
}

// Finite list of named homogeneous generators.  Names are unique.
class BigradedBasis {
 public:
  BigradedBasis() = default;

  int add(const std::string& name, Bidegree deg);
  int size() const { return static_cast<int>(items_.size()); }
  const std::string& name(int idx) const { return items_[idx].first; }
  Bidegree degree(int idx) const { return items_[idx].second; }
  // -1 when absent
  int index_of(const std::string& name) const;
  bool has(const std::string& name) const { return index_of(name) >= 0; }

  bool operator==(const BigradedBasis& o) const { return items_ == o.items_; }

 private:
  std::vector<std::pair<std::string, Bidegree>> items_;
  std::map<std::string, int> index_;
};

// Word in the tensor algebra: a nonempty sequence of basis indices.  The
// empty word is reserved for the (co)module contexts that explicitly allow
// length-zero tensor legs.
using TensorWord = std::vector<int32_t>;

Bidegree word_degree(const TensorWord& w, const BigradedBasis& basis);

// Exact linear combination of tensor words.  Keys are kept sorted (std::map)
// so iteration order, and thus every downstream report, is deterministic.
// Zero coefficients are never stored.
class LinComb {
 public:
  LinComb() = default;

  void add(const TensorWord& w, const BigInt& c, const Ring& ring);
  void add_scaled(const LinComb& other, const BigInt& c, const Ring& ring);
  void scale(const BigInt& c, const Ring& ring);
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  const std::map<TensorWord, BigInt>& terms() const { return terms_; }

  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

 private:
  std::map<TensorWord, BigInt> terms_;
};

// All words of the given arity over the basis, in lexicographic order.
std::vector<TensorWord> all_words(const BigradedBasis& basis, int arity);

// Vertical suspension/desuspension of a basis: power k shifts every
// generator (h, v) to (h, v - k).  Horizontal direction: (h - k, v).
enum class SuspensionDirection { vertical, horizontal };
BigradedBasis suspend_basis(const BigradedBasis& basis,
                            SuspensionDirection dir, long power);

}  // namespace dainfty
