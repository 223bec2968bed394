#pragma once

// Slow reference implementations used as independent oracles in tests.
// These deliberately avoid the library's lookup tables and elimination
// routines: everything here is direct enumeration over small domains.

#include <cstdint>
#include <vector>

namespace naive {

using Poly = std::vector<std::uint32_t>;  // coefficient 0 = constant term

inline std::size_t deg(const Poly& f) {
  std::size_t d = f.size();
  while (d > 0 && f[d - 1] == 0) --d;
  return d == 0 ? 0 : d - 1;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

inline bool poly_eq(const Poly& a, const Poly& b) {
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t ca = i < a.size() ? a[i] : 0;
    std::uint32_t cb = i < b.size() ? b[i] : 0;
    if (ca != cb) return false;
  }
  return true;
}

inline Poly poly_from_enc(std::uint64_t enc, std::size_t degree, std::uint32_t p) {
  Poly f(degree + 1, 0);
  for (std::size_t i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(enc % p);
    enc /= p;
  }
  f[degree] = 1;
  return f;
}

// Reducible iff the polynomial equals some product of two monic factors of
// smaller degree; checked by enumerating all such pairs.
inline bool irreducible_by_products(const Poly& f, std::uint32_t p) {
  std::size_t d = deg(f);
  if (d == 0) return false;
  if (d == 1) return true;
  for (std::size_t d1 = 1; d1 <= d / 2; ++d1) {
    std::size_t d2 = d - d1;
    std::uint64_t n1 = 1, n2 = 1;
    for (std::size_t i = 0; i < d1; ++i) n1 *= p;
    for (std::size_t i = 0; i < d2; ++i) n2 *= p;
    for (std::uint64_t e1 = 0; e1 < n1; ++e1)
      for (std::uint64_t e2 = 0; e2 < n2; ++e2)
        if (poly_eq(poly_mul(poly_from_enc(e1, d1, p), poly_from_enc(e2, d2, p), p), f))
          return false;
  }
  return true;
}

// Element arithmetic straight from the definitions: codes are base-p digit
// vectors of polynomial coefficients; multiplication reduces by long
// division; inversion searches exhaustively.
struct NaiveField {
  std::uint32_t p, e, q;
  Poly modulus;

  Poly decode(std::uint32_t code) const {
    Poly f(e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
      f[i] = code % p;
      code /= p;
    }
    return f;
  }

  std::uint32_t encode(const Poly& f) const {
    std::uint32_t code = 0, pw = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      code += (i < f.size() ? f[i] : 0) * pw;
      pw *= p;
    }
    return code;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    Poly fa = decode(a), fb = decode(b);
    for (std::uint32_t i = 0; i < e; ++i) fa[i] = (fa[i] + fb[i]) % p;
    return encode(fa);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    Poly prod = poly_mul(decode(a), decode(b), p);
    // long division by the monic modulus
    for (std::size_t d = prod.size(); d-- > e;) {
      std::uint32_t c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (std::uint32_t i = 0; i < e; ++i)
        prod[d - e + i] = (prod[d - e + i] + (p - modulus[i]) * c) % p;
    }
    return encode(prod);
  }

  std::uint32_t inv(std::uint32_t a) const {
    for (std::uint32_t x = 1; x < q; ++x)
      if (mul(a, x) == 1) return x;
    return 0;
  }
};

}  // namespace naive
