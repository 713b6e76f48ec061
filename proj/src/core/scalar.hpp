#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace dainfty {

// Exact coefficients: arbitrary-precision integers, optionally reduced mod a
// prime p.  Canonical representatives mod p live in [0, p).
using BigInt = boost::multiprecision::cpp_int;

// Deterministic Miller-Rabin for 64-bit inputs (the listed witnesses decide
// primality exactly below 3.3 * 10^24).
inline bool is_prime_u64(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                               19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  unsigned long long d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [&](unsigned long long a, unsigned long long b) {
    return static_cast<unsigned long long>(
        static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](unsigned long long a, unsigned long long e) {
    unsigned long long r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  for (unsigned long long a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                               19ull, 23ull, 29ull, 31ull, 37ull}) {
    unsigned long long x = powmod(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

struct Ring {
  enum class Kind { integers, mod_p };
  Kind kind = Kind::integers;
  unsigned long p = 0;

  static Ring integers() { return Ring{}; }
  static Ring mod_p(unsigned long prime) {
    if (!is_prime_u64(prime))
      throw std::invalid_argument("mod_p ring needs a prime modulus");
    Ring r;
    r.kind = Kind::mod_p;
    r.p = prime;
    return r;
  }

  BigInt normalize(BigInt v) const {
    if (kind == Kind::integers) return v;
    BigInt m = v % BigInt(p);
    if (m < 0) m += BigInt(p);
    return m;
  }

  bool operator==(const Ring& o) const { return kind == o.kind && p == o.p; }
};

}  // namespace dainfty
